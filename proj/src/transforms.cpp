#include "longmem/transforms.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace longmem {

namespace {

double parse_number(const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("Transform: bad number '" + s + "'");
    return v;
}

std::string format_number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v); // shortest round-trip form
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<double> split_numbers(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_number(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Transform Transform::parse(const std::string& text) {
    Transform t;
    std::size_t colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);

    auto need_arg = [&]() {
        if (arg.empty()) throw std::invalid_argument("Transform: '" + head + "' needs an argument");
    };
    if (head == "pow") {
        need_arg();
        double p = parse_number(arg);
        int k = static_cast<int>(p);
        if (p != k || k < 1 || k > 64) throw std::invalid_argument("Transform: pow wants an integer power >= 1");
        t.kind = Kind::Polynomial;
        t.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
        t.coeffs.back() = 1.0;
    } else if (head == "poly") {
        need_arg();
        t.kind = Kind::Polynomial;
        t.coeffs = split_numbers(arg);
        if (t.coeffs.empty()) throw std::invalid_argument("Transform: empty polynomial");
    } else if (head == "sin") {
        t.kind = Kind::Sin;
    } else if (head == "exp") {
        t.kind = Kind::Exp;
    } else if (head == "ind") {
        need_arg();
        t.kind = Kind::Indicator;
        t.level = parse_number(arg);
    } else if (head == "call") {
        need_arg();
        t.kind = Kind::CallPayoff;
        t.level = parse_number(arg);
    } else if (head == "put") {
        need_arg();
        t.kind = Kind::PutPayoff;
        t.level = parse_number(arg);
    } else {
        throw std::invalid_argument("Transform: unknown kind '" + head + "'");
    }
    return t;
}

std::string Transform::str() const {
    switch (kind) {
        case Kind::Polynomial: {
            // print pure powers in the shorter pow form
            bool pure = coeffs.size() >= 2 && coeffs.back() == 1.0;
            if (pure)
                for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
                    if (coeffs[i] != 0.0) pure = false;
            if (pure) return "pow:" + std::to_string(coeffs.size() - 1);
            std::string s = "poly:";
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (i) s += ',';
                s += format_number(coeffs[i]);
            }
            return s;
        }
        case Kind::Sin: return "sin";
        case Kind::Exp: return "exp";
        case Kind::Indicator: return "ind:" + format_number(level);
        case Kind::CallPayoff: return "call:" + format_number(level);
        case Kind::PutPayoff: return "put:" + format_number(level);
    }
    throw std::logic_error("Transform: unknown kind");
}

double Transform::operator()(double x) const {
    switch (kind) {
        case Kind::Polynomial: {
            double v = 0.0;
            for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
            return v;
        }
        case Kind::Sin: return std::sin(x);
        case Kind::Exp: return std::exp(x);
        case Kind::Indicator: return x <= level ? 1.0 : 0.0;
        case Kind::CallPayoff: return x > level ? x - level : 0.0;
        case Kind::PutPayoff: return x < level ? level - x : 0.0;
    }
    throw std::logic_error("Transform: unknown kind");
}

std::vector<double> apply(const Transform& t, const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = t(xs[i]);
    return out;
}

Series apply(const Transform& t, const Series& s) {
    Series out = s;
    out.values = apply(t, s.values);
    out.transform = s.transform.empty() ? t.str() : s.transform + "|" + t.str();
    return out;
}

} // namespace longmem
