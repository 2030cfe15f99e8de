/*
 * The trigonometric CYBE solution attached to a Lie Belavin-Drinfeld triple,
 * and its exact verifiers.
 *
 * With the multiplicative substitution w = e^{z/h} (so w^h = e^z) the
 * solution reads
 *
 *   r(w) = r_0 + (w^h - 1)^{-1} sum_{j=0}^{h-1} w^j Omega_j
 *              - sum_{j=1}^{h-1} w^j (psi (x) id) Omega_j
 *              + sum_{j=1}^{h-1} w^{-j} (id (x) psi) Omega_{-j}.
 *
 * verify_cybe forms the legs r^{ab} = leg_embed(r(w_a / w_b)) and returns
 * the exact residual [r12,r13] + [r12,r23] + [r13,r23]; verify_unitarity
 * returns swap(r(w)) + r(1/w).  singular_part_check expands r(z) - Omega/z
 * as a Laurent series at z = 0 (entrywise, composing each rational-in-w
 * entry with the exponential series) and certifies regularity.
 */
#pragma once

#include <map>

#include "ybe/lie_triple.hpp"
#include "ybe/series.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

// psi applied to one tensor leg: every e_{ij} (x) e_{kl} term has the unit
// in the named leg (1 or 2) replaced by its psi-image.
Tensor2 apply_psi_leg(const LieBDTriple& t, const Tensor2& x, int leg);

// Exact evaluation of r(w).  Preconditions w != 0 and w^h != 1
// (SingularParameter otherwise).
Tensor2 r_trig_eval(const LieBDTriple& t, const Rational& w);

// CYBE residual [r12,r13] + [r12,r23] + [r13,r23] with the legs evaluated at
// the pairwise ratios; expected zero.
Tensor3 verify_cybe(const LieBDTriple& t, const Rational& w1,
                    const Rational& w2, const Rational& w3);

// Unitarity residual swap(r(w)) + r(1/w); expected zero.
Tensor2 verify_unitarity(const LieBDTriple& t, const Rational& w);

// Laurent expansion in z of a tensor-valued function, coefficients
// trustworthy through z^trunc; only nonzero coefficient tensors are stored.
struct Tensor2Series {
  int n = 0;
  int trunc = 0;
  std::map<int, Tensor2> coeff;

  // Coefficient of z^e (zero tensor when absent); asking beyond the
  // truncation order throws TruncationTooShort.
  Tensor2 coefficient(int e) const;
  bool negative_part_is_zero() const;
};

// Laurent expansion through z^order of r(w = e^{z/h}) - C/z for an
// arbitrary reference tensor C.  (C = Omega is the regularity statement;
// passing a wrong Casimir such as Omega_0 exposes the z^{-1} residual.)
Tensor2Series r_minus_casimir_over_z(const LieBDTriple& t, const Tensor2& c,
                                     int order);

// Residual r(z) - Omega/z through z^order with the regularity assertion:
// throws AuditFailure if any negative-degree coefficient survives.
Tensor2Series singular_part_check(const LieBDTriple& t, int order);

}  // namespace ybe
