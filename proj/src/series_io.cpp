#include "longmem/series_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "longmem/special.hpp"

namespace longmem {

namespace {

std::string shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string law_name(InnovationLaw law) {
    switch (law) {
        case InnovationLaw::Gaussian: return "gaussian";
        case InnovationLaw::StudentT: return "student_t";
        case InnovationLaw::AbsStudentT: return "abs_student_t";
    }
    throw std::logic_error("unknown law");
}

InnovationLaw law_from_name(const std::string& name) {
    if (name == "gaussian") return InnovationLaw::Gaussian;
    if (name == "student_t") return InnovationLaw::StudentT;
    if (name == "abs_student_t") return InnovationLaw::AbsStudentT;
    throw std::invalid_argument("unknown innovation law: " + name);
}

} // namespace

double ma_tail_variance_bound(const ProcessSpec& spec, std::size_t M) {
    // a_i ~ i^{d-1} theta(1)/(phi(1) Gamma(d)): tail of sum a_i^2 is about
    // scale^2 M^{2d-1}/(1-2d).  The fractional parameter of the simulated
    // stationary core is d (stationary) or d-1 (integrated increments).
    double d = spec.kind == ProcessKind::TypeI ? spec.d - 1.0 : spec.d;
    if (d == 0.0) return 0.0; // ARMA-only tail decays geometrically
    double theta1 = 1.0, phi1 = 1.0;
    for (double t : spec.ma) theta1 += t;
    for (double p : spec.ar) phi1 -= p;
    double scale = theta1 / (phi1 * special::gamma_signed(d).value());
    return scale * scale * std::pow(static_cast<double>(M), 2.0 * d - 1.0) / (1.0 - 2.0 * d);
}

void save_series(const Series& s, const std::string& path) {
    {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        for (double v : s.values) out << shortest(v) << "\n";
    }
    nlohmann::json meta;
    meta["d"] = s.spec.d;
    meta["ar"] = s.spec.ar;
    meta["ma"] = s.spec.ma;
    meta["kind"] = s.spec.kind == ProcessKind::TypeI ? "type1" : "farima";
    meta["law"] = law_name(s.spec.innovation.law);
    meta["nu"] = s.spec.innovation.nu;
    meta["standardize"] = s.spec.innovation.standardize;
    meta["seed"] = s.seed;
    meta["n"] = s.values.size();
    meta["M"] = s.truncation;
    meta["burn_in"] = s.burn_in;
    if (!s.transform.empty()) meta["transform"] = s.transform;
    if (s.truncation > 0)
        meta["ma_tail_variance_bound"] = ma_tail_variance_bound(s.spec, s.truncation);
    std::ofstream mout(path + ".meta.json");
    if (!mout) throw std::runtime_error("cannot write " + path + ".meta.json");
    mout << meta.dump(2) << "\n";
}

std::vector<double> load_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double v = 0.0;
        auto res = std::from_chars(line.data(), line.data() + line.size(), v);
        if (res.ec != std::errc()) throw std::runtime_error("bad number in " + path + ": " + line);
        out.push_back(v);
    }
    return out;
}

Series load_series(const std::string& path) {
    Series s;
    s.values = load_values(path);
    std::ifstream min(path + ".meta.json");
    if (min) {
        nlohmann::json meta = nlohmann::json::parse(min);
        s.spec.d = meta.value("d", 0.0);
        s.spec.ar = meta.value("ar", std::vector<double>{});
        s.spec.ma = meta.value("ma", std::vector<double>{});
        s.spec.kind = meta.value("kind", std::string("farima")) == "type1" ? ProcessKind::TypeI
                                                                           : ProcessKind::StationaryFarima;
        s.spec.innovation.law = law_from_name(meta.value("law", std::string("gaussian")));
        s.spec.innovation.nu = meta.value("nu", 0.0);
        s.spec.innovation.standardize = meta.value("standardize", true);
        s.seed = meta.value("seed", std::uint64_t{0});
        s.spec.innovation.seed = s.seed;
        s.truncation = meta.value("M", std::size_t{0});
        s.burn_in = meta.value("burn_in", std::size_t{0});
        s.transform = meta.value("transform", std::string{});
    }
    return s;
}

} // namespace longmem
