#include "longmem/power_rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "longmem/innovations.hpp"
#include "longmem/rng.hpp"

namespace longmem {

namespace {

double sample_sd(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) {
        double dev = x - mean;
        ss += dev * dev;
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// C(r, i) for r <= 12: plenty for rank probing.
double binom(int r, int i) {
    double out = 1.0;
    for (int k = 1; k <= i; ++k)
        out = out * static_cast<double>(r - k + 1) / static_cast<double>(k);
    return out;
}

} // namespace

MarginalSampler MarginalSampler::gaussian(double sd, std::size_t count, std::uint64_t seed) {
    if (!(sd > 0.0)) throw std::invalid_argument("gaussian marginal needs sd > 0");
    if (count < 2) throw std::invalid_argument("need at least 2 draws");
    MarginalSampler ms;
    ms.draws_.resize(count);
    CounterRng rng(seed);
    for (auto& x : ms.draws_) x = sd * rng.next_normal();
    ms.sd_ = sample_sd(ms.draws_);
    return ms;
}

MarginalSampler MarginalSampler::linear_process(const ProcessSpec& spec, std::size_t M,
                                                std::size_t count, std::uint64_t seed) {
    if (M == 0) throw std::invalid_argument("need M >= 1 coefficients");
    if (count < 2) throw std::invalid_argument("need at least 2 draws");
    const std::vector<double> c = process_ma_coefficients(spec, M);
    const double mean_shift = innovation_mean(spec.innovation) *
                              std::accumulate(c.begin(), c.end(), 0.0);
    MarginalSampler ms;
    ms.draws_.resize(count);
    CounterRng rng(seed);
    InnovationDrawer draw(spec.innovation);
    for (auto& x : ms.draws_) {
        double acc = 0.0;
        for (std::size_t i = 0; i < M; ++i) acc += c[i] * draw(rng);
        x = acc - mean_shift;
    }
    ms.sd_ = sample_sd(ms.draws_);
    return ms;
}

MarginalSampler MarginalSampler::empirical(std::vector<double> values) {
    if (values.size() < 2) throw std::invalid_argument("need at least 2 draws");
    MarginalSampler ms;
    ms.draws_ = std::move(values);
    ms.sd_ = sample_sd(ms.draws_);
    return ms;
}

MomentEstimate k_infinity(const Transform& t, const MarginalSampler& ms, double w) {
    const auto& x = ms.draws();
    double sum = 0.0, comp = 0.0;
    for (double xi : x) {
        double y = t(w + xi) - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    const double n = static_cast<double>(x.size());
    const double mean = sum / n;
    double ss = 0.0;
    for (double xi : x) {
        double dev = t(w + xi) - mean;
        ss += dev * dev;
    }
    return {mean, std::sqrt(ss / (n * (n - 1.0)))};
}

DerivativeEstimate k_infinity_derivative_estimate(const Transform& t, const MarginalSampler& ms,
                                                  int r, double w, double step) {
    if (r < 1 || r > 12) throw std::invalid_argument("derivative order must be in [1, 12]");
    const auto& x = ms.draws();
    double h = step;
    if (h <= 0.0) {
        double sd = ms.sd();
        if (!(sd > 0.0)) throw std::invalid_argument("degenerate sample: sd = 0");
        h = 0.5 * sd / std::sqrt(static_cast<double>(r));
    }
    std::vector<double> coeff(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i)
        coeff[static_cast<std::size_t>(i)] = ((i % 2) ? -1.0 : 1.0) * binom(r, i);

    auto stencil = [&](double u, double hh) {
        double acc = 0.0;
        for (int i = 0; i <= r; ++i)
            acc += coeff[static_cast<std::size_t>(i)] * t(u + (0.5 * r - i) * hh);
        return acc / std::pow(hh, r);
    };

    // Richardson per draw: the central stencil has O(h^2) bias, so
    // (4 D(h/2) - D(h)) / 3 cancels the leading term pointwise.
    const double n = static_cast<double>(x.size());
    double sum = 0.0, comp = 0.0;
    std::vector<double> refined(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        double u = w + x[j];
        double v = (4.0 * stencil(u, 0.5 * h) - stencil(u, h)) / 3.0;
        refined[j] = v;
        double y = v - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : refined) {
        double dev = v - mean;
        ss += dev * dev;
    }
    return {r, mean, std::sqrt(ss / (n * (n - 1.0))), h};
}

double k_infinity_derivative(const Transform& t, const MarginalSampler& ms, int r, double step) {
    return k_infinity_derivative_estimate(t, ms, r, 0.0, step).value;
}

PowerRankResult power_rank(const Transform& t, const MarginalSampler& ms,
                           int max_rank, double tol) {
    if (max_rank < 1 || max_rank > 6) throw std::invalid_argument("max_rank must be in [1, 6]");
    const double sd_x = ms.sd();
    if (!(sd_x > 0.0)) throw std::invalid_argument("degenerate sample: sd = 0");

    // Scale reference: how big K itself is on the sample, per unit of X^r.
    std::vector<double> kx(ms.draws().size());
    for (std::size_t j = 0; j < kx.size(); ++j) kx[j] = t(ms.draws()[j]);
    double k_scale = sample_sd(kx);
    if (!(k_scale > 0.0)) k_scale = 1.0; // constant K: fall back to absolute floor

    PowerRankResult out;
    for (int r = 1; r <= max_rank; ++r) {
        DerivativeEstimate est = k_infinity_derivative_estimate(t, ms, r);
        double threshold = tol > 0.0
            ? tol
            : 5.0 * est.std_error + 1e-3 * k_scale / std::pow(sd_x, r);
        out.estimates.push_back({r, est.value, est.std_error, threshold, est.step});
        if (std::fabs(est.value) > threshold) {
            out.rank = r;
            return out;
        }
    }
    out.rank = 0;
    return out;
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> sample)
    : sorted_(std::move(sample)) {
    if (sorted_.size() < 8) throw std::invalid_argument("empirical distribution needs >= 8 points");
    std::sort(sorted_.begin(), sorted_.end());
    mean_ = std::accumulate(sorted_.begin(), sorted_.end(), 0.0) /
            static_cast<double>(sorted_.size());
    double ss = 0.0;
    for (double x : sorted_) {
        double dev = x - mean_;
        ss += dev * dev;
    }
    sd_ = std::sqrt(ss / static_cast<double>(sorted_.size() - 1));
    if (!(sd_ > 0.0)) throw std::invalid_argument("degenerate sample: sd = 0");
    bandwidth_ = 1.06 * sd_ * std::pow(static_cast<double>(sorted_.size()), -0.2);
}

double EmpiricalDistribution::cdf(double x) const {
    auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::pdf(double x) const {
    const double inv_bw = 1.0 / bandwidth_;
    const double norm = 0.3989422804014327 * inv_bw / static_cast<double>(sorted_.size());
    double acc = 0.0;
    for (double xi : sorted_) {
        double z = (x - xi) * inv_bw;
        if (std::fabs(z) < 8.0) acc += std::exp(-0.5 * z * z);
    }
    return norm * acc;
}

double EmpiricalDistribution::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile needs p in [0, 1]");
    if (p <= 0.0) return sorted_.front();
    if (p >= 1.0) return sorted_.back();
    // Linear interpolation between order statistics (type-7 rule).
    double pos = p * static_cast<double>(sorted_.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted_.size()) return sorted_.back();
    return sorted_[lo] * (1.0 - frac) + sorted_[lo + 1] * frac;
}

std::pair<double, double> analytic_option_derivatives(double c_minus_mu,
                                                      const std::function<double(double)>& cdf,
                                                      const std::function<double(double)>& pdf) {
    return {1.0 - cdf(c_minus_mu), pdf(c_minus_mu)};
}

OptionRankDecision option_rank(double c_minus_mu, const EmpiricalDistribution& dist,
                               double tol) {
    auto [first, second] = analytic_option_derivatives(
        c_minus_mu,
        [&dist](double x) { return dist.cdf(x); },
        [&dist](double x) { return dist.pdf(x); });
    OptionRankDecision out;
    out.first = first;
    out.second = second;
    out.tolerance = tol;
    if (first > tol)
        out.rank = 1;
    else if (second * dist.sd() > tol)
        out.rank = 2;
    else
        out.rank = 0;
    return out;
}

} // namespace longmem
