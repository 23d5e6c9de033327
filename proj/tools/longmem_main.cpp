#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "longmem/experiment.hpp"
#include "longmem/memory_theory.hpp"
#include "longmem/power_rank.hpp"
#include "longmem/series_io.hpp"
#include "longmem/spectral.hpp"
#include "longmem/transforms.hpp"
#include "longmem/verification.hpp"

namespace {

using namespace longmem;

struct ProcessFlags {
    double d = 0.0;
    std::vector<double> ar, ma;
    std::string kind = "farima";
    std::string law = "gaussian";
    double nu = 0.0;
    bool raw_scale = false; // skip innovation standardization

    void attach(CLI::App* cmd) {
        cmd->add_option("--d", d, "memory parameter");
        cmd->add_option("--ar", ar, "AR coefficients phi_1..phi_p");
        cmd->add_option("--ma", ma, "MA coefficients theta_1..theta_q");
        cmd->add_option("--kind", kind, "farima | type1")->check(CLI::IsMember({"farima", "type1"}));
        cmd->add_option("--law", law, "gaussian | student_t | abs_student_t")
            ->check(CLI::IsMember({"gaussian", "student_t", "abs_student_t"}));
        cmd->add_option("--nu", nu, "degrees of freedom for the t laws");
        cmd->add_flag("--raw-scale", raw_scale, "keep the raw innovation variance");
    }

    ProcessSpec spec() const {
        ProcessSpec s;
        s.d = d;
        s.ar = ar;
        s.ma = ma;
        s.kind = kind == "type1" ? ProcessKind::TypeI : ProcessKind::StationaryFarima;
        if (law == "gaussian") s.innovation.law = InnovationLaw::Gaussian;
        else if (law == "student_t") s.innovation.law = InnovationLaw::StudentT;
        else s.innovation.law = InnovationLaw::AbsStudentT;
        s.innovation.nu = nu;
        s.innovation.standardize = !raw_scale;
        return s;
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"long-memory transformation toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // --seed/--out/... are accepted after the subcommand too

    std::uint64_t seed = 20240601;
    std::string out_path;
    unsigned threads = 1;
    std::string config_path;
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("--out", out_path, "output file (default: stdout or command default)");
    app.add_option("--threads", threads, "worker threads")->capture_default_str();
    app.add_option("--config", config_path, "experiment config file (for 'run')");

    // simulate
    auto* c_sim = app.add_subcommand("simulate", "simulate a process and write a Series CSV");
    ProcessFlags sim_proc;
    sim_proc.attach(c_sim);
    std::size_t sim_n = 2000, sim_M = 0;
    c_sim->add_option("--n", sim_n, "observations")->capture_default_str();
    c_sim->add_option("--truncation", sim_M, "MA truncation (0 = 2n)")->capture_default_str();

    // transform
    auto* c_tr = app.add_subcommand("transform", "apply a transformation to a Series CSV");
    std::string tr_input, tr_text;
    c_tr->add_option("--input", tr_input, "input series CSV")->required();
    c_tr->add_option("--transform", tr_text, "transform string, e.g. pow:2, sin, call:45.5")
        ->required();

    // estimate
    auto* c_est = app.add_subcommand("estimate", "log-periodogram regression on a series CSV");
    std::string est_input, est_bw = "auto";
    c_est->add_option("--input", est_input, "input series CSV")->required();
    c_est->add_option("--bandwidth", est_bw, "'auto' (n^{4/5}) or an integer")->capture_default_str();

    // rank
    auto* c_rank = app.add_subcommand("rank", "estimate the power rank of a transformation");
    std::string rank_input, rank_text;
    std::size_t rank_draws = 20000, rank_M = 2048;
    int rank_max = 6;
    ProcessFlags rank_proc;
    rank_proc.attach(c_rank);
    c_rank->add_option("--input", rank_input, "empirical marginal sample CSV (else simulate)");
    c_rank->add_option("--transform", rank_text, "transform string")->required();
    c_rank->add_option("--draws", rank_draws, "marginal draws when simulating")->capture_default_str();
    c_rank->add_option("--m", rank_M, "MA truncation for marginal draws")->capture_default_str();
    c_rank->add_option("--max-rank", rank_max, "highest order probed")->capture_default_str();

    // theory
    auto* c_th = app.add_subcommand("theory", "closed-form memory classification");
    double th_d = 0.0, th_beta = 0.0;
    int th_k = 1;
    bool th_type1 = false, th_sq_neg = false, th_cov = false, th_L = true;
    c_th->add_option("--d", th_d, "memory parameter");
    c_th->add_option("--k", th_k, "power rank")->capture_default_str();
    c_th->add_flag("--type1-square", th_type1, "square of the integrated process");
    c_th->add_flag("--square-antipersistent", th_sq_neg, "square at negative d");
    c_th->add_flag("--covariance", th_cov, "covariance-sense classification from beta");
    c_th->add_option("--beta", th_beta, "coefficient decay exponent (covariance mode)");
    c_th->add_flag("--slowly-varying-constant,!--slowly-varying-nonconstant", th_L,
                   "treat the slowly varying factor as constant");

    // table
    auto* c_tab = app.add_subcommand("table", "reproduce a results table preset");
    std::string tab_id;
    double tab_scale = 1.0;
    std::size_t tab_n = 0, tab_reps = 0;
    c_tab->add_option("id", tab_id, "T1 | T2 | T4 | T5")->required();
    c_tab->add_option("--scale", tab_scale, "N and n multiplier in (0,1]")->capture_default_str();
    c_tab->add_option("--n", tab_n, "override observations per replication");
    c_tab->add_option("--reps", tab_reps, "override replication count");

    // verify
    auto* c_ver = app.add_subcommand("verify", "run the numerical verification suite");
    std::size_t ver_reps = 10000000;
    c_ver->add_option("--mc-reps", ver_reps, "MC replications for the sampling checks")
        ->capture_default_str();

    // run
    auto* c_run = app.add_subcommand("run", "run an experiment from a config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_sim) {
            Series s = simulate(sim_proc.spec(), sim_n, sim_M, seed);
            std::string path = out_path.empty() ? "series.csv" : out_path;
            save_series(s, path);
            std::cout << "wrote " << s.values.size() << " values to " << path << "\n";
        } else if (*c_tr) {
            Series s = load_series(tr_input);
            Series t = apply(Transform::parse(tr_text), s);
            std::string path = out_path.empty() ? tr_input + ".t.csv" : out_path;
            save_series(t, path);
            std::cout << "wrote " << t.values.size() << " values to " << path << "\n";
        } else if (*c_est) {
            std::vector<double> x = load_values(est_input);
            MemoryEstimate e = gph_estimate(x, resolve_bandwidth(est_bw, x.size()));
            std::printf("d_hat = %.6f\n", e.d_hat);
            std::printf("std_error = %.6f\n", e.std_error);
            std::printf("bandwidth = %zu\n", e.bandwidth);
            std::printf("n = %zu\n", e.n);
            if (e.degenerate) std::printf("degenerate = true\n");
        } else if (*c_rank) {
            Transform t = Transform::parse(rank_text);
            MarginalSampler ms = rank_input.empty()
                ? MarginalSampler::linear_process(rank_proc.spec(), rank_M, rank_draws, seed)
                : MarginalSampler::empirical(load_values(rank_input));
            PowerRankResult res = power_rank(t, ms, rank_max);
            for (const auto& e : res.estimates)
                std::printf("order %d: %.6g (se %.3g, tol %.3g, step %.3g)\n", e.order, e.value,
                            e.std_error, e.tolerance, e.step);
            if (res.rank > 0) std::printf("rank = %d\n", res.rank);
            else std::printf("rank > %d (none detected)\n", rank_max);
            if (t.kind == Transform::Kind::CallPayoff) {
                std::vector<double> centered = ms.draws();
                double mu = 0.0;
                for (double v : centered) mu += v;
                mu /= static_cast<double>(centered.size());
                for (double& v : centered) v -= mu;
                EmpiricalDistribution dist(std::move(centered));
                OptionRankDecision dec = option_rank(t.level - mu, dist);
                std::printf("option rule: first %.6g, second %.6g, rank %s\n", dec.first,
                            dec.second, dec.rank > 0 ? std::to_string(dec.rank).c_str() : "inf");
            }
        } else if (*c_th) {
            MemoryClass mc;
            if (th_cov) mc = classify_covariance(th_beta, th_k, th_L);
            else if (th_type1) mc = classify_type1_square(th_d);
            else if (th_sq_neg) mc = classify_square_antipersistent(th_d);
            else mc = classify_spectral(th_d, th_k);
            std::cout << mc.str() << "\n";
            if (!mc.rule.empty()) std::cerr << mc.rule << "\n";
        } else if (*c_tab) {
            ExperimentConfig cfg = table_preset(table_id_from_name(tab_id), tab_scale, tab_n, tab_reps);
            cfg.base_seed = seed;
            std::vector<TableRow> rows = run_experiment(cfg, threads);
            emit(render_rows_csv(rows), out_path);
        } else if (*c_ver) {
            std::vector<CheckReport> reports = run_all_checks(seed, ver_reps);
            std::cout << render_check_table(reports);
            if (!out_path.empty()) emit(render_check_csv(reports), out_path);
            for (const auto& r : reports)
                if (!r.passed) return 2;
        } else if (*c_run) {
            if (config_path.empty())
                throw std::invalid_argument("run requires --config <file>");
            ExperimentConfig cfg = load_experiment_config(config_path);
            std::vector<TableRow> rows = run_experiment(cfg, threads);
            std::string dest = !out_path.empty() ? out_path : cfg.output_path;
            emit(render_rows_csv(rows), dest);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
