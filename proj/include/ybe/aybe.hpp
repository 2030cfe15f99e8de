/*
 * Trigonometric solutions of the associative Yang–Baxter equation from
 * associative Belavin–Drinfeld data, and exact verifiers for the quadratic
 * identity and skew-symmetry.
 *
 * The kernel r(λ; x, y) is the constant part
 *   r_const(σ, λ, z) = (1/(1−z)) Σ_{α>0} e_{−α}⊗e_α
 *                    + (z/(1−z)) Σ_{α>0} e_α⊗e_{−α}
 *                    + (1/(1−z)) Σ_i h_i⊗h_i
 *                    − (1−λⁿ)⁻¹ Σ_i Σ_{k=0}^{n−1} λᵏ h_i⊗h_{σᵏ(i)}
 * at z = x/y, plus the spectral τ-tails
 *   Σ_{α>0,k≥1} [λ^{−k} e_{−τᵏα}⊗e_α − λᵏ e_α⊗e_{−τᵏα}]
 * + Σ_{α<0,k≥1} [xλ^{−k} e_{−τᵏα}⊗e_α − yλᵏ e_α⊗e_{−τᵏα}],
 * summed over the (α,k) where τᵏ(α) is defined.  A pair (i,j) is positive
 * when i < j and −(i,j) = (j,i).
 *
 * Quadratic identity (superscripts = tensor legs, with
 * r^{ab}_{cd} := r(λ_a⁻¹λ_b; y_c, y_d)):
 *   (r^{12}_{13})¹³ (r^{23}_{23})¹² + (r^{32}_{12})²³ (r^{13}_{13})¹³
 *     − (r^{13}_{23})¹² (r^{12}_{12})²³ = 0.
 * Skew-symmetry: swap(r(λ; y₁, y₂)) + r(λ⁻¹; y₂, y₁) = 0.
 */
#pragma once

#include <functional>

#include "ybe/assoc_bd.hpp"
#include "ybe/rational.hpp"
#include "ybe/sample.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

enum class KernelVariant { Const, Full };

// Any (λ, x, y) ↦ Tensor2 map; lets the verifiers probe deliberately
// corrupted kernels alongside the closed-form ones.
using KernelFn =
    std::function<Tensor2(const Rational&, const Rational&, const Rational&)>;

struct AybeKernel {
  AssocBDData data;
  KernelVariant variant = KernelVariant::Full;

  Tensor2 eval(const Rational& lambda, const Rational& x,
               const Rational& y) const;
  KernelFn fn() const;
};

// The constant solution for a single n-cycle σ; SingularParameter when z = 1
// or λⁿ = 1.
Tensor2 r_const_eval(const Perm& sigma, int n, const Rational& lambda,
                     const Rational& z);

// The full solution for a validated datum; SingularParameter when x = y,
// y = 0, λ = 0 or λⁿ = 1.  NotNilpotent if τ admits a cycle (impossible for
// validated data; guarded rather than assumed).
Tensor2 r_bd_eval(const AssocBDData& data, const Rational& lambda,
                  const Rational& x, const Rational& y);

// Exact residual of the quadratic identity at one parameter point; the zero
// tensor exactly when the identity holds there.
Tensor3 verify_general_aybe(const KernelFn& r, int n, const Rational& l1,
                            const Rational& l2, const Rational& l3,
                            const Rational& y1, const Rational& y2,
                            const Rational& y3);
Tensor3 verify_general_aybe(const AybeKernel& kernel, const Rational& l1,
                            const Rational& l2, const Rational& l3,
                            const Rational& y1, const Rational& y2,
                            const Rational& y3);

// Exact residual swap(r(λ; y₁, y₂)) + r(λ⁻¹; y₂, y₁).
Tensor2 verify_skew(const KernelFn& r, int n, const Rational& lambda,
                    const Rational& y1, const Rational& y2);
Tensor2 verify_skew(const AybeKernel& kernel, const Rational& lambda,
                    const Rational& y1, const Rational& y2);

// True iff v^n = 1 (for rationals: v = 1, or v = −1 with n even).
bool nth_power_is_one(const Rational& v, int n);

// Admissible sample points: λ-ratios avoid n-th roots of unity, spectral
// points are nonzero and pairwise distinct.
struct AybePoint {
  Rational l1, l2, l3, y1, y2, y3;
};
AybePoint sample_aybe_point(SampleRng& rng, int n);

struct SkewPoint {
  Rational lambda, y1, y2;
};
SkewPoint sample_skew_point(SampleRng& rng, int n);

}  // namespace ybe
