#pragma once

#include <string>

namespace longmem {

/**
 * Closed-form memory classification of a transformed linear process from the
 * memory parameter and the transformation's power rank k.
 *
 * Labels: covariance-sense classes (LongMemoryCov / ShortMemoryCov /
 * BoundaryLong at the critical index when the slowly varying part is not
 * constant), spectral classes LM(d_tilde) and LM0, and OutOfScope where the
 * underlying theory makes no claim.
 */
struct MemoryClass {
    enum class Label { LongMemoryCov, ShortMemoryCov, BoundaryLong, LM, LM0, OutOfScope };

    Label label = Label::OutOfScope;
    double d_tilde = 0.0;   // meaningful only when label == LM
    std::string rule;       // self-contained statement of the deciding inequality

    // "LM(0.3)", "LM(0)", "long(cov)", "short(cov)", "boundary-long", "out-of-scope"
    std::string str() const;

    bool operator==(const MemoryClass& o) const { return label == o.label && d_tilde == o.d_tilde; }
};

// Covariance-sense class for rank-k transforms of a linear process with
// coefficients b_j ~ j^{-beta} L(j), 1/2 < beta < 1:
//   k (2 beta - 1) < 1  -> long memory (covariance sums diverge)
//   k (2 beta - 1) > 1  -> short memory
//   k (2 beta - 1) = 1  -> long memory when L is (asymptotically) constant,
//                          otherwise unresolved boundary
MemoryClass classify_covariance(double beta, int k, bool L_const);

// Spectral-density class for rank-k transforms of stationary FARIMA with
// 0 < d < 1/2:
//   k(1-2d) < 1                     -> LM(d_tilde), d_tilde = (d-1/2)k + 1/2
//   k(1-2d) > 1 and (k-1)(1-2d) < 1 -> LM(0)
//   anything else (incl. boundaries) -> OutOfScope
MemoryClass classify_spectral(double d, int k);

// Square of an antipersistent FARIMA(0,d,0), -1 < d < 0: LM(0).
MemoryClass classify_square_antipersistent(double d);

// Square of the integrated (Type-I) process, 1/2 < d < 1: asymptotically LM(d),
// independent of the transform's rank.
MemoryClass classify_type1_square(double d);

} // namespace longmem
