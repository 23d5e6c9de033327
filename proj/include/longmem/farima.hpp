#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "longmem/innovations.hpp"

namespace longmem {

enum class ProcessKind { StationaryFarima, TypeI };

struct ProcessSpec {
    double d = 0.0;
    std::vector<double> ar; // phi_1..phi_p, with phi(z) = 1 - phi_1 z - ... - phi_p z^p
    std::vector<double> ma; // theta_1..theta_q, with theta(z) = 1 + theta_1 z + ...
    ProcessKind kind = ProcessKind::StationaryFarima;
    InnovationSpec innovation;

    bool operator==(const ProcessSpec&) const = default;
};

struct Series {
    std::vector<double> values;
    ProcessSpec spec;
    std::uint64_t seed = 0;
    std::size_t truncation = 0;
    std::size_t burn_in = 0;
    std::string transform; // empty until a transform is applied
};

// a_0 = 1, a_i = a_{i-1} (i-1+d)/i; the MA(infinity) weights of (1-B)^{-d}.
std::vector<double> fractional_coefficients(double d, std::size_t M);

// psi weights of theta(B)/phi(B): psi_j = theta_j + sum_{i<=min(j,p)} phi_i psi_{j-i}.
std::vector<double> arma_psi_weights(const std::vector<double>& ar,
                                     const std::vector<double>& ma, std::size_t M);

// True when all roots of phi(z) lie strictly outside the closed unit disk
// (magnitude > 1 + 1e-8).
bool ar_polynomial_stable(const std::vector<double>& ar);

// Combined MA weights: fractional coefficients convolved with ARMA psi weights,
// truncated to M terms.  This is the c used by simulate().
std::vector<double> process_ma_coefficients(const ProcessSpec& spec, std::size_t M);

// sqrt(Var eps * sum c_i^2) of the truncated stationary process.
double process_marginal_sd(const ProcessSpec& spec, std::size_t M);

// Truncated-MA simulation; M = 0 picks the 2n default.  TypeI integrates a
// stationary d-1 increment process from X_0 = 0.
Series simulate(const ProcessSpec& spec, std::size_t n, std::size_t M = 0, std::uint64_t seed = 0);

// Closed-form FARIMA(0,d,0) autocovariance at unit innovation variance.
double autocovariance_f0d0(double d, std::size_t h);
// Lags 0..max_lag in one recursion pass.
std::vector<double> autocovariances_f0d0(double d, std::size_t max_lag);

} // namespace longmem
