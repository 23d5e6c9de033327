#pragma once

#include <cstdint>
#include <vector>

namespace longmem {

enum class InnovationLaw { Gaussian, StudentT, AbsStudentT };

struct InnovationSpec {
    InnovationLaw law = InnovationLaw::Gaussian;
    double nu = 0.0;          // degrees of freedom for the t laws
    bool standardize = true;  // rescale to unit population variance (no centering)
    std::uint64_t seed = 0;

    bool operator==(const InnovationSpec&) const = default;
};

// Population moments of a single draw (after standardization when enabled).
double innovation_variance(const InnovationSpec& spec);
double innovation_mean(const InnovationSpec& spec);
// Fourth cumulant kappa4 = E eps^4 - 3 (E eps^2)^2 of the standardized law;
// requires nu > 4 for the t laws.
double innovation_kappa4(const InnovationSpec& spec);

// i.i.d. draws; identical (spec, n) gives bit-identical output.
std::vector<double> draw_stream(const InnovationSpec& spec, std::size_t n);

class CounterRng;

// Validated-once drawer for hot loops; spec.seed is ignored, the generator is
// managed by the caller.
class InnovationDrawer {
public:
    explicit InnovationDrawer(const InnovationSpec& spec);
    double operator()(CounterRng& rng) const;

private:
    InnovationLaw law_;
    double nu_;
    double scale_;
};

// One draw from an externally managed generator (spec.seed is ignored).
double draw_one(const InnovationSpec& spec, CounterRng& rng);

} // namespace longmem
