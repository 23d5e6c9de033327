#include "longmem/innovations.hpp"

#include <cmath>
#include <stdexcept>

#include "longmem/rng.hpp"
#include "longmem/special.hpp"

namespace longmem {

namespace {

void validate(const InnovationSpec& spec) {
    if (spec.law == InnovationLaw::Gaussian) return;
    if (!(spec.nu > 0.0)) throw std::domain_error("innovations: nu must be > 0");
    if (spec.standardize && !(spec.nu > 2.0))
        throw std::domain_error("innovations: standardize requires nu > 2 (finite variance)");
}

// E|T_nu| = 2 sqrt(nu) Gamma((nu+1)/2) / (sqrt(pi) (nu-1) Gamma(nu/2)), nu > 1
double abs_t_raw_mean(double nu) {
    double lg = special::log_gamma(0.5 * (nu + 1.0)) - special::log_gamma(0.5 * nu);
    return 2.0 * std::sqrt(nu) * std::exp(lg) / (std::sqrt(M_PI) * (nu - 1.0));
}

double raw_variance(const InnovationSpec& spec) {
    switch (spec.law) {
        case InnovationLaw::Gaussian:
            return 1.0;
        case InnovationLaw::StudentT:
            if (!(spec.nu > 2.0)) throw std::domain_error("innovations: variance needs nu > 2");
            return spec.nu / (spec.nu - 2.0);
        case InnovationLaw::AbsStudentT: {
            if (!(spec.nu > 2.0)) throw std::domain_error("innovations: variance needs nu > 2");
            double m1 = abs_t_raw_mean(spec.nu);
            return spec.nu / (spec.nu - 2.0) - m1 * m1;
        }
    }
    throw std::logic_error("innovations: unknown law");
}

} // namespace

double innovation_variance(const InnovationSpec& spec) {
    validate(spec);
    return spec.standardize ? 1.0 : raw_variance(spec);
}

double innovation_mean(const InnovationSpec& spec) {
    validate(spec);
    if (spec.law != InnovationLaw::AbsStudentT) return 0.0;
    double m1 = abs_t_raw_mean(spec.nu);
    return spec.standardize ? m1 / std::sqrt(raw_variance(spec)) : m1;
}

double innovation_kappa4(const InnovationSpec& spec) {
    validate(spec);
    switch (spec.law) {
        case InnovationLaw::Gaussian:
            return 0.0;
        case InnovationLaw::StudentT: {
            if (!(spec.nu > 4.0)) throw std::domain_error("innovations: kappa4 needs nu > 4");
            double v = spec.nu / (spec.nu - 2.0);
            double excess = 6.0 / (spec.nu - 4.0);
            return spec.standardize ? excess : excess * v * v;
        }
        case InnovationLaw::AbsStudentT:
            throw std::domain_error("innovations: kappa4 defined here only for mean-zero laws");
    }
    throw std::logic_error("innovations: unknown law");
}

InnovationDrawer::InnovationDrawer(const InnovationSpec& spec)
    : law_(spec.law), nu_(spec.nu),
      scale_(spec.standardize ? 1.0 / std::sqrt(raw_variance(spec)) : 1.0) {
    validate(spec);
}

double InnovationDrawer::operator()(CounterRng& rng) const {
    switch (law_) {
        case InnovationLaw::Gaussian:
            return rng.next_normal();
        case InnovationLaw::StudentT:
            return scale_ * rng.next_student_t(nu_);
        case InnovationLaw::AbsStudentT:
            return scale_ * std::fabs(rng.next_student_t(nu_));
    }
    throw std::logic_error("innovations: unknown law");
}

std::vector<double> draw_stream(const InnovationSpec& spec, std::size_t n) {
    if (n < 1) throw std::domain_error("draw_stream: n >= 1");
    InnovationDrawer draw(spec);
    CounterRng rng(spec.seed);
    std::vector<double> out(n);
    for (auto& x : out) x = draw(rng);
    return out;
}

double draw_one(const InnovationSpec& spec, CounterRng& rng) {
    return InnovationDrawer(spec)(rng);
}

} // namespace longmem
