#include "longmem/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "longmem/power_rank.hpp"
#include "longmem/spectral.hpp"

namespace longmem {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

double to_double(const std::string& s, int line) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("config line " + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

std::uint64_t to_u64(const std::string& s, int line) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("config line " + std::to_string(line) + ": bad integer '" + s + "'");
    return v;
}

bool to_bool(const std::string& s, int line) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw std::invalid_argument("config line " + std::to_string(line) + ": bad bool '" + s + "'");
}

std::vector<double> to_double_list(const std::string& s, int line) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(to_double(item, line));
    }
    return out;
}

// Deterministic order-independent reduction: fixed-shape pairwise tree.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string fmt_f4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string theory_text(const TableRow& row) {
    if (!row.has_theory) return "";
    switch (row.theory.label) {
        case MemoryClass::Label::LM: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.4g", row.theory.d_tilde);
            return buf;
        }
        case MemoryClass::Label::LM0:
            return "0";
        default:
            return row.theory.str();
    }
}

} // namespace

int catalog_rank(const Transform& t) {
    const std::string id = t.str();
    if (id.rfind("pow:", 0) == 0) {
        int k = std::stoi(id.substr(4));
        return (k % 2 == 1) ? 1 : 2;
    }
    if (id == "poly:0,-3,0,1") return 3;
    if (id == "poly:0,0,-6,0,1") return 4;
    if (t.kind == Transform::Kind::Sin || t.kind == Transform::Kind::Exp ||
        t.kind == Transform::Kind::Indicator)
        return 1;
    return -1;
}

TheoryCell theory_for_cell(const ProcessSpec& spec, const Transform& t, int rank) {
    TheoryCell cell;
    const std::string id = t.str();
    if (spec.kind == ProcessKind::TypeI) {
        if (!(spec.d > 0.5 && spec.d < 1.0)) return cell;
        if (id == "pow:2") {
            cell.value = classify_type1_square(spec.d);
            cell.has = true;
        } else if (id == "pow:1") {
            cell.value = {MemoryClass::Label::LM, spec.d,
                          "increments are stationary with parameter d-1, level series keeps d"};
            cell.has = true;
        }
        return cell;
    }
    if (id == "pow:1" && spec.d > -1.0 && spec.d < 0.5) {
        cell.value = {MemoryClass::Label::LM, spec.d, "identity transform keeps the memory parameter"};
        cell.has = true;
        return cell;
    }
    if (id == "pow:2" && spec.d > -1.0 && spec.d < 0.0) {
        cell.value = classify_square_antipersistent(spec.d);
        cell.has = true;
        return cell;
    }
    if (spec.d > 0.0 && spec.d < 0.5 && rank >= 1) {
        MemoryClass mc = classify_spectral(spec.d, rank);
        if (mc.label != MemoryClass::Label::OutOfScope) {
            cell.value = mc;
            cell.has = true;
        }
    }
    return cell;
}

std::size_t resolve_bandwidth(const std::string& rule, std::size_t n) {
    if (rule.empty() || rule == "auto")
        return static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.8)));
    std::size_t m = 0;
    auto res = std::from_chars(rule.data(), rule.data() + rule.size(), m);
    if (res.ec != std::errc() || res.ptr != rule.data() + rule.size() || m < 3)
        throw std::invalid_argument("bandwidth rule must be 'auto' or an integer >= 3");
    return m;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.replications = 0; // force explicit value
    ModelEntry* current = nullptr;
    std::vector<std::vector<std::string>> rank_tokens; // aligned with cfg.models
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        std::size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(line) + ": unterminated section");
            auto header = split_ws(trim(s.substr(1, s.size() - 2)));
            if (header.size() != 2 || header[0] != "model")
                throw std::invalid_argument("config line " + std::to_string(line) +
                                            ": expected [model <label>]");
            cfg.models.emplace_back();
            cfg.models.back().label = header[1];
            rank_tokens.emplace_back();
            current = &cfg.models.back();
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line) + ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (current == nullptr) {
            if (key == "n") cfg.n = to_u64(value, line);
            else if (key == "replications") cfg.replications = to_u64(value, line);
            else if (key == "seed") cfg.base_seed = to_u64(value, line);
            else if (key == "bandwidth") cfg.bandwidth_rule = value;
            else if (key == "truncation") cfg.truncation = to_u64(value, line);
            else if (key == "out") cfg.output_path = value;
            else if (key == "option_tol") {
                cfg.option_rank_tol = to_double(value, line);
                if (!(cfg.option_rank_tol > 0.0 && cfg.option_rank_tol < 1.0))
                    throw std::invalid_argument("config line " + std::to_string(line) +
                                                ": option_tol in (0, 1)");
            } else
                throw std::invalid_argument("config line " + std::to_string(line) +
                                            ": unknown global key '" + key + "'");
        } else {
            if (key == "kind") {
                if (value == "farima") current->spec.kind = ProcessKind::StationaryFarima;
                else if (value == "type1") current->spec.kind = ProcessKind::TypeI;
                else
                    throw std::invalid_argument("config line " + std::to_string(line) +
                                                ": kind is farima or type1");
            } else if (key == "d") current->spec.d = to_double(value, line);
            else if (key == "ar") current->spec.ar = to_double_list(value, line);
            else if (key == "ma") current->spec.ma = to_double_list(value, line);
            else if (key == "law") {
                if (value == "gaussian") current->spec.innovation.law = InnovationLaw::Gaussian;
                else if (value == "student_t") current->spec.innovation.law = InnovationLaw::StudentT;
                else if (value == "abs_student_t")
                    current->spec.innovation.law = InnovationLaw::AbsStudentT;
                else
                    throw std::invalid_argument("config line " + std::to_string(line) +
                                                ": unknown law '" + value + "'");
            } else if (key == "nu") current->spec.innovation.nu = to_double(value, line);
            else if (key == "standardize") current->spec.innovation.standardize = to_bool(value, line);
            else if (key == "unit_marginal") current->unit_marginal = to_bool(value, line);
            else if (key == "transforms") {
                for (const auto& tok : split_ws(value)) {
                    TransformEntry entry;
                    entry.transform = Transform::parse(tok);
                    current->transforms.push_back(std::move(entry));
                }
            } else if (key == "ranks") {
                rank_tokens.back() = split_ws(value);
            } else {
                throw std::invalid_argument("config line " + std::to_string(line) +
                                            ": unknown model key '" + key + "'");
            }
        }
    }
    if (cfg.models.empty()) throw std::invalid_argument("config: no [model] sections");
    if (cfg.replications == 0) throw std::invalid_argument("config: replications missing");
    if (cfg.n < 16) throw std::invalid_argument("config: n >= 16 required");
    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
        ModelEntry& me = cfg.models[mi];
        if (me.transforms.empty())
            throw std::invalid_argument("config: model " + me.label + " has no transforms");
        const auto& toks = rank_tokens[mi];
        if (!toks.empty() && toks.size() != me.transforms.size())
            throw std::invalid_argument("config: model " + me.label +
                                        ": ranks count does not match transforms");
        for (std::size_t ti = 0; ti < me.transforms.size(); ++ti) {
            TransformEntry& entry = me.transforms[ti];
            if (toks.empty()) {
                if (entry.transform.kind == Transform::Kind::CallPayoff ||
                    entry.transform.kind == Transform::Kind::PutPayoff)
                    entry.auto_option_rank = true;
                else
                    entry.analytic_rank = catalog_rank(entry.transform);
            } else {
                const std::string& tk = toks[ti];
                if (tk == "-") entry.analytic_rank = -1;
                else if (tk == "inf") entry.analytic_rank = 0;
                else if (tk == "auto") entry.auto_option_rank = true;
                else {
                    int r = static_cast<int>(to_u64(tk, 0));
                    if (r < 1 || r > 6)
                        throw std::invalid_argument("config: model " + me.label +
                                                    ": rank must be 1..6, '-', 'inf' or 'auto'");
                    entry.analytic_rank = r;
                }
            }
        }
        if (me.unit_marginal && me.spec.kind == ProcessKind::TypeI)
            throw std::invalid_argument("config: model " + me.label +
                                        ": unit_marginal needs a stationary model");
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

std::vector<TableRow> run_experiment(const ExperimentConfig& cfg, unsigned threads) {
    if (cfg.models.empty()) throw std::invalid_argument("experiment: no models");
    if (cfg.replications < 2) throw std::invalid_argument("experiment: replications >= 2");
    const std::size_t m_band = resolve_bandwidth(cfg.bandwidth_rule, cfg.n);
    const std::size_t M_eff = cfg.truncation ? cfg.truncation : 2 * cfg.n;
    const std::size_t reps = cfg.replications;

    struct Cell {
        Transform t;
        int rank = -1;
        TheoryCell theory;
    };
    std::vector<std::vector<Cell>> cells(cfg.models.size());
    std::vector<double> post_scale(cfg.models.size(), 1.0);

    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
        const ModelEntry& me = cfg.models[mi];
        if (me.unit_marginal) {
            if (me.spec.kind == ProcessKind::TypeI)
                throw std::invalid_argument("unit_marginal needs a stationary model");
            post_scale[mi] = 1.0 / process_marginal_sd(me.spec, M_eff);
        }
        bool need_dist = false;
        for (const auto& e : me.transforms) need_dist = need_dist || e.auto_option_rank;
        double mean0 = 0.0;
        std::unique_ptr<EmpiricalDistribution> dist;
        if (need_dist) {
            // Rank decisions come from the replication-0 marginal, once per
            // model, so every replication shares the same cell classification.
            Series s0 = simulate(me.spec, cfg.n, cfg.truncation, cfg.base_seed);
            std::vector<double> v = std::move(s0.values);
            for (auto& x : v) x *= post_scale[mi];
            double acc = pairwise_sum(v, 0, v.size());
            mean0 = acc / static_cast<double>(v.size());
            for (auto& x : v) x -= mean0;
            dist = std::make_unique<EmpiricalDistribution>(std::move(v));
        }
        for (const auto& e : me.transforms) {
            Cell c;
            c.t = e.transform;
            c.rank = e.analytic_rank;
            if (e.auto_option_rank) {
                double strike = e.transform.level * post_scale[mi];
                OptionRankDecision dec;
                if (e.transform.kind == Transform::Kind::CallPayoff) {
                    dec = option_rank(strike - mean0, *dist, cfg.option_rank_tol);
                } else if (e.transform.kind == Transform::Kind::PutPayoff) {
                    // (C - x)^+ is a call on -x with strike -C
                    Series s0 = simulate(me.spec, cfg.n, cfg.truncation, cfg.base_seed);
                    std::vector<double> neg;
                    neg.reserve(s0.values.size());
                    for (double x : s0.values) neg.push_back(-(x * post_scale[mi] - mean0));
                    EmpiricalDistribution mdist(std::move(neg));
                    dec = option_rank(-(strike - mean0), mdist, cfg.option_rank_tol);
                } else {
                    throw std::invalid_argument("auto rank applies to option payoffs only");
                }
                c.rank = dec.rank;
            }
            c.theory = theory_for_cell(me.spec, c.t, c.rank);
            cells[mi].push_back(std::move(c));
        }
    }

    std::vector<std::vector<std::vector<double>>> results(cfg.models.size());
    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
        results[mi].assign(cells[mi].size(),
                           std::vector<double>(reps, std::numeric_limits<double>::quiet_NaN()));
    }

    const std::size_t total = cfg.models.size() * reps;
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto work = [&]() {
        for (std::size_t task; (task = next.fetch_add(1)) < total;) {
            if (first_error) return;
            try {
                const std::size_t mi = task / reps;
                const std::size_t r = task % reps;
                Series s = simulate(cfg.models[mi].spec, cfg.n, cfg.truncation, cfg.base_seed + r);
                if (post_scale[mi] != 1.0)
                    for (auto& v : s.values) v *= post_scale[mi];
                for (std::size_t ci = 0; ci < cells[mi].size(); ++ci) {
                    std::vector<double> y = longmem::apply(cells[mi][ci].t, s.values);
                    MemoryEstimate e = gph_estimate(y, m_band);
                    if (!e.degenerate) results[mi][ci][r] = e.d_hat;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned T = std::max(1u, threads);
    if (T == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(T);
        for (unsigned i = 0; i < T; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<TableRow> rows;
    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
        for (std::size_t ci = 0; ci < cells[mi].size(); ++ci) {
            const Cell& c = cells[mi][ci];
            TableRow row;
            row.model = cfg.models[mi].label;
            row.d = cfg.models[mi].spec.d;
            row.transform = c.t.str();
            row.rank = c.rank;
            row.has_theory = c.theory.has;
            row.theory = c.theory.value;
            row.n = cfg.n;
            std::vector<double> kept;
            kept.reserve(reps);
            for (double v : results[mi][ci])
                if (!std::isnan(v)) kept.push_back(v);
            row.N = kept.size();
            row.degenerate_count = reps - kept.size();
            if (kept.size() >= 2) {
                double mean = pairwise_sum(kept, 0, kept.size()) / static_cast<double>(kept.size());
                std::vector<double> dev2(kept.size());
                for (std::size_t i = 0; i < kept.size(); ++i) {
                    double dv = kept[i] - mean;
                    dev2[i] = dv * dv;
                }
                row.mean_dhat = mean;
                row.sd_dhat = std::sqrt(pairwise_sum(dev2, 0, dev2.size()) /
                                        static_cast<double>(kept.size() - 1));
            } else if (kept.size() == 1) {
                row.mean_dhat = kept[0];
                row.sd_dhat = 0.0;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

TableId table_id_from_name(const std::string& name) {
    if (name == "T1" || name == "t1") return TableId::T1;
    if (name == "T2" || name == "t2") return TableId::T2;
    if (name == "T4" || name == "t4") return TableId::T4;
    if (name == "T5" || name == "t5") return TableId::T5;
    throw std::invalid_argument("unknown table id '" + name + "' (T1, T2, T4, T5)");
}

ExperimentConfig table_preset(TableId id, double scale, std::size_t n_override,
                              std::size_t reps_override) {
    if (!(scale > 0.0 && scale <= 1.0)) throw std::invalid_argument("scale in (0, 1]");
    ExperimentConfig cfg;
    auto scale_count = [&](std::size_t full, std::size_t floor_at) {
        auto v = static_cast<std::size_t>(std::llround(static_cast<double>(full) * scale));
        return std::max(floor_at, v);
    };

    const std::vector<std::string> poly_names = {
        "pow:1", "pow:2", "pow:3", "pow:4", "poly:0,-3,0,1", "poly:0,0,-6,0,1", "sin", "ind:0.1"};

    auto add_stationary_pair = [&](const std::string& base, double d, std::vector<double> ar,
                                   std::vector<double> ma) {
        ModelEntry t10;
        t10.label = base + "[t10]";
        t10.spec.d = d;
        t10.spec.ar = ar;
        t10.spec.ma = ma;
        t10.spec.innovation = {InnovationLaw::StudentT, 10.0, true, 0};
        for (const auto& name : poly_names) {
            TransformEntry e;
            e.transform = Transform::parse(name);
            e.analytic_rank = catalog_rank(e.transform);
            t10.transforms.push_back(std::move(e));
        }
        cfg.models.push_back(std::move(t10));

        ModelEntry g;
        g.label = base + "[gauss]";
        g.spec.d = d;
        g.spec.ar = std::move(ar);
        g.spec.ma = std::move(ma);
        g.spec.innovation = {InnovationLaw::Gaussian, 0.0, true, 0};
        TransformEntry e;
        e.transform = Transform::parse("exp");
        e.analytic_rank = 1;
        g.transforms.push_back(std::move(e));
        cfg.models.push_back(std::move(g));
    };

    switch (id) {
        case TableId::T1: {
            cfg.n = scale_count(2000, 64);
            cfg.replications = scale_count(2000, 2);
            for (double d : {-0.8, -0.4, -0.2, 0.2, 0.4})
                add_stationary_pair("f0d0", d, {}, {});
            break;
        }
        case TableId::T2: {
            cfg.n = scale_count(2000, 64);
            cfg.replications = scale_count(2000, 2);
            for (double d : {0.2, 0.4}) add_stationary_pair("f1d0", d, {-0.3}, {});
            for (double d : {0.2, 0.4}) add_stationary_pair("f1d1", d, {-0.4}, {0.7});
            break;
        }
        case TableId::T4: {
            cfg.n = scale_count(2000, 64);
            cfg.replications = scale_count(2000, 2);
            for (double d : {0.55, 0.65, 0.75, 0.85, 0.95}) {
                ModelEntry t5;
                t5.label = "type1[t5]";
                t5.spec.d = d;
                t5.spec.kind = ProcessKind::TypeI;
                t5.spec.innovation = {InnovationLaw::StudentT, 5.0, true, 0};
                TransformEntry sq;
                sq.transform = Transform::parse("pow:2");
                t5.transforms.push_back(std::move(sq));
                cfg.models.push_back(std::move(t5));

                ModelEntry t10;
                t10.label = "type1[t10]";
                t10.spec.d = d;
                t10.spec.kind = ProcessKind::TypeI;
                t10.spec.innovation = {InnovationLaw::StudentT, 10.0, true, 0};
                for (const char* name : {"pow:3", "pow:4", "poly:0,-3,0,1", "poly:0,0,-6,0,1"}) {
                    TransformEntry e;
                    e.transform = Transform::parse(name);
                    t10.transforms.push_back(std::move(e));
                }
                cfg.models.push_back(std::move(t10));
            }
            break;
        }
        case TableId::T5: {
            cfg.n = scale_count(1048576, 1024);
            cfg.replications = scale_count(2000, 2);
            for (double d : {0.2, 0.4}) {
                ModelEntry m;
                m.label = "f0d0[abs_t10]";
                m.spec.d = d;
                m.spec.innovation = {InnovationLaw::AbsStudentT, 10.0, true, 0};
                for (const char* name :
                     {"call:0.3", "call:1.5", "call:5", "call:9", "call:44.8", "call:45.5"}) {
                    TransformEntry e;
                    e.transform = Transform::parse(name);
                    e.auto_option_rank = true;
                    m.transforms.push_back(std::move(e));
                }
                cfg.models.push_back(std::move(m));
            }
            break;
        }
    }
    if (n_override) cfg.n = n_override;
    if (reps_override) cfg.replications = reps_override;
    return cfg;
}

std::vector<TableRow> reproduce_table(TableId id, double scale, unsigned threads) {
    return run_experiment(table_preset(id, scale), threads);
}

std::string render_rows_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "model,d,transform,rank,theory,mean_dhat,sd_dhat,N,n,degenerate_count\n";
    for (const auto& r : rows) {
        std::string tname = r.transform; // poly coefficient lists carry commas
        std::replace(tname.begin(), tname.end(), ',', ';');
        os << r.model << "," << fmt_g(r.d) << "," << tname << ",";
        if (r.rank == 0) os << "inf";
        else if (r.rank > 0) os << r.rank;
        os << "," << theory_text(r) << ",";
        if (r.N == 0) os << "NA,NA";
        else os << fmt_f4(r.mean_dhat) << "," << fmt_f4(r.sd_dhat);
        os << "," << r.N << "," << r.n << "," << r.degenerate_count << "\n";
    }
    return os.str();
}

} // namespace longmem
