#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "longmem/farima.hpp"
#include "longmem/transforms.hpp"

namespace longmem {

/**
 * One numerical check: named metrics, each compared against a reference with
 * an absolute or relative tolerance.  Property-style conditions (strict
 * growth, positivity) are encoded as indicator metrics (computed 1 vs
 * reference 1).  Detail that does not fit the metric grid goes to notes.
 */
struct CheckReport {
    std::string name;
    std::string params;
    struct Metric {
        std::string label;
        double computed = 0.0;
        double reference = 0.0;
        double tolerance = 0.0;
        bool relative = false;
        bool passed = false;
    };
    std::vector<Metric> metrics;
    bool passed = false;
    std::string notes;

    void add_metric(const std::string& label, double computed, double reference,
                    double tolerance, bool relative);
    void finalize(); // passed = all metrics passed
};

// k-th elementary symmetric polynomial from power sums via Newton's
// identities, O(k |c|); scaled by max|c_i| so huge inputs cannot overflow.
double elementary_symmetric(const std::vector<double>& c, int k);
// Brute-force subset enumeration, test oracle only (|c| <= 25, k <= 6).
double elementary_symmetric_enumeration(const std::vector<double>& c, int k);

// Leading covariance term of the transformed process at lag h:
// K_k0^2 * e_k(c) with c_i = a_i * a_{i+h} (zero-padded past the end of a).
double uu_leading_covariance(const std::vector<double>& a, int k, std::size_t h, double K_k0);

// Exact Cov(X_n^2, X_{n+h}^2) for the truncated linear process with
// unit-variance innovations: 2 (sum a_i a_{i+h})^2 + kappa4 sum a_i^2 a_{i+h}^2.
double square_transform_cov_oracle(const std::vector<double>& a, std::size_t h, double kappa4);

// Streaming (sum_{i<M} a_i a_{i+h}, sum_{i<M} (a_i a_{i+h})^2) for
// FARIMA(0,d,0) coefficients; O(h) memory, so M = 1e7 is cheap.
std::pair<double, double> fractional_pair_sums(double d, std::size_t h, std::size_t M);

// min over a grid of f(x) = 3G(3x)G(x) + x G(x)^2 G(2x) - 6 G(2x)^2 on (0,1)
// stays above 1/4; also pins f(1/2) = 2 pi - 6 and f(1) = 1.
CheckReport check_f_positivity(std::size_t grid_points);

// Closed-form Gauss value at unit argument against the gamma-ratio reduction
// (1e-12) and against the partial series at 1e6 terms (1e-6), h = 1..h_max.
CheckReport check_gauss_reduction(double d, std::size_t h_max);

// Var(Z_n) and Corr(Z_n, Z_{n+h}) for Z_n = X_n + X_{n-1}, X the cumulative
// sum of a stationary increment process with memory parameter d - 1.  The
// double sum collapses to single sums; the infinite tail is truncated at 1e7
// with the power-law tail bound reported.  Checks strict variance growth and
// correlation approaching 1.
CheckReport check_var_zn_growth(double d, const std::vector<std::size_t>& n_list, std::size_t h);

// Closed-form autocovariance against the truncated coefficient sum at M = 1e7
// over a grid of memory parameters where the truncation tail is below 1e-4
// relative (documented in notes).
CheckReport check_autocovariance_truncation();

// Newton-identity e_k against subset enumeration on seeded random vectors.
CheckReport check_newton_vs_enumeration(std::uint64_t seed);

// uu_leading_covariance(h) * h^{k(1-2d)} drift per decade over h in
// [1e2, 1e4], streamed at M = 1e7.
CheckReport check_uu_stabilization();

struct McCovariance {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t reps = 0;
    bool unstable = false; // non-finite moments encountered
};

// MC estimate of Cov(K(X_n), K(X_{n+h})) across independent replications of
// the truncated process (coefficients process_ma_coefficients(spec, M)), so
// it is directly comparable to the truncated-sum oracles at the same M.
McCovariance mc_covariance(const Transform& t, const ProcessSpec& spec, std::size_t h,
                           std::size_t reps, std::uint64_t seed = 0x6c6f6e676d656dULL,
                           std::size_t M = 64);

// MC square-transform decomposition: Cov - UU(k=2, K_k0=2) against the
// remainder 2 sum a_i^2 a_{i+h}^2, within 3 MC sigma.
CheckReport check_square_identity_mc(std::size_t reps, std::uint64_t seed = 0x6c6f6e676d656dULL);

// The full desk-scale suite in a fixed order.
std::vector<CheckReport> run_all_checks(std::uint64_t seed = 0x6c6f6e676d656dULL,
                                        std::size_t mc_reps = 10000000);

std::string render_check_table(const std::vector<CheckReport>& reports);
std::string render_check_csv(const std::vector<CheckReport>& reports);

} // namespace longmem
