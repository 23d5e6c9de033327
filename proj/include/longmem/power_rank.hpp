#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "longmem/farima.hpp"
#include "longmem/transforms.hpp"

namespace longmem {

/**
 * Frozen i.i.d. draws approximating the stationary marginal of a process.
 * Every K-infinity evaluation reuses the same draws, so finite-difference
 * stencils see common random numbers and their MC noise largely cancels.
 */
class MarginalSampler {
public:
    static MarginalSampler gaussian(double sd, std::size_t count, std::uint64_t seed);
    // Independent marginal draws of the truncated linear process: one fresh
    // innovation block per draw.  Draws are centered (mean subtracted) so the
    // marginal matches the mean-zero convention of the rank definition.
    static MarginalSampler linear_process(const ProcessSpec& spec, std::size_t M,
                                          std::size_t count, std::uint64_t seed);
    static MarginalSampler empirical(std::vector<double> values);

    const std::vector<double>& draws() const { return draws_; }
    double sd() const { return sd_; }

private:
    std::vector<double> draws_;
    double sd_ = 0.0;
};

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// K_infinity(w) = E K(w + X): MC mean with standard error.
MomentEstimate k_infinity(const Transform& t, const MarginalSampler& ms, double w);

struct DerivativeEstimate {
    int order = 0;
    double value = 0.0;
    double std_error = 0.0;
    double step = 0.0; // coarse step h; Richardson pairs it with h/2
};

// r-th derivative of K_infinity at w via central differences over the frozen
// draws, Richardson-refined with steps {h, h/2}.  step = 0 picks the default
// h = 0.5 * sd * r^{-1/2}.
DerivativeEstimate k_infinity_derivative_estimate(const Transform& t, const MarginalSampler& ms,
                                                  int r, double w = 0.0, double step = 0.0);
double k_infinity_derivative(const Transform& t, const MarginalSampler& ms, int r, double step = 0.0);

struct PowerRankResult {
    int rank = 0; // 0: none <= max_rank (the "rank infinity" regime)
    struct Entry {
        int order;
        double value;
        double std_error;
        double tolerance;
        double step;
    };
    std::vector<Entry> estimates;
};

// Smallest order r <= max_rank with |K_infinity^(r)(0)| above tolerance.
// tol = 0 applies the default rule 5*stderr + 1e-3 * sd(K(X)) / sd(X)^r.
PowerRankResult power_rank(const Transform& t, const MarginalSampler& ms,
                           int max_rank = 6, double tol = 0.0);

// Sorted-sample empirical CDF with a Gaussian kernel density (Silverman
// bandwidth), backing the option-payoff rank rule below.
class EmpiricalDistribution {
public:
    explicit EmpiricalDistribution(std::vector<double> sample);
    double cdf(double x) const;
    double pdf(double x) const;
    double mean() const { return mean_; }
    double sd() const { return sd_; }
    double quantile(double p) const;

private:
    std::vector<double> sorted_;
    double mean_ = 0.0, sd_ = 0.0, bandwidth_ = 0.0;
};

// (1 - G(C-mu), g(C-mu)): the first two derivatives of the call-payoff
// K-infinity at zero, straight from the marginal law.
std::pair<double, double> analytic_option_derivatives(double c_minus_mu,
                                                      const std::function<double(double)>& cdf,
                                                      const std::function<double(double)>& pdf);

struct OptionRankDecision {
    double first = 0.0;   // 1 - G(C-mu)
    double second = 0.0;  // g(C-mu)
    int rank = 0;         // 1, 2, or 0 = effectively higher rank
    double tolerance = 0.0;
};

// Decision rule: rank 1 when first > tol; else rank 2 when second, scaled by
// the marginal sd to be dimensionless, clears tol; else "high rank".
OptionRankDecision option_rank(double c_minus_mu, const EmpiricalDistribution& dist,
                               double tol = 0.05);

} // namespace longmem
