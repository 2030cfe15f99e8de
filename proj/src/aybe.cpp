/*
 * Closed-form AYBE kernels and the exact identity verifiers.
 */
#include "ybe/aybe.hpp"

namespace ybe {

bool nth_power_is_one(const Rational& v, int n) {
  return v.pow(n) == Rational(1);
}

Tensor2 r_const_eval(const Perm& sigma, int n, const Rational& lambda,
                     const Rational& z) {
  if (sigma.n() != n)
    throw std::invalid_argument("r_const_eval: sigma size mismatch");
  if (z == Rational(1))
    throw SingularParameter("r_const is singular at z = 1");
  if (nth_power_is_one(lambda, n))
    throw SingularParameter("r_const is singular at lambda^n = 1");

  Tensor2 t(n);
  Rational c1 = (Rational(1) - z).inverse();
  Rational cz = z * c1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      t.add_term(c1, j, i, i, j);  // e_{−α} ⊗ e_α for α = (i,j) > 0
      t.add_term(cz, i, j, j, i);  // e_α ⊗ e_{−α}
    }
    t.add_term(c1, i, i, i, i);    // h_i ⊗ h_i
  }
  Rational cl = (Rational(1) - lambda.pow(n)).inverse();
  Rational lk(1);
  std::vector<int> sk(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) sk[static_cast<size_t>(i - 1)] = i;
  for (int k = 0; k < n; ++k) {
    Rational coef = -(cl * lk);
    for (int i = 1; i <= n; ++i) {
      int si = sk[static_cast<size_t>(i - 1)];
      t.add_term(coef, i, i, si, si);  // −(1−λⁿ)⁻¹ λᵏ h_i ⊗ h_{σᵏ(i)}
    }
    for (int i = 1; i <= n; ++i)
      sk[static_cast<size_t>(i - 1)] =
          sigma.apply(sk[static_cast<size_t>(i - 1)]);
    lk *= lambda;
  }
  return t;
}

Tensor2 r_bd_eval(const AssocBDData& data, const Rational& lambda,
                  const Rational& x, const Rational& y) {
  if (y.is_zero())
    throw SingularParameter("r_bd is singular at y = 0");
  if (x == y)
    throw SingularParameter("r_bd is singular at x = y");
  if (lambda.is_zero())
    throw SingularParameter("r_bd is singular at lambda = 0");

  Tensor2 t = r_const_eval(data.sigma, data.n, lambda, x / y);
  Rational linv = lambda.inverse();
  for (const Arc& alpha : data.pi1) {
    bool positive = alpha.first < alpha.second;
    Rational lk(1), lmk(1);  // λᵏ, λ⁻ᵏ
    Arc beta = alpha;
    for (int k = 1;; ++k) {
      auto img = tau_power(data, beta, 1);  // τᵏα = τ(τ^{k−1}α)
      if (!img) break;
      // σ acts diagonally with order n, so a chain surviving past k = n has
      // looped back to α and would never terminate.
      if (k > data.n)
        throw NotNilpotent("tau admits a cycle through (" +
                           std::to_string(alpha.first) + "," +
                           std::to_string(alpha.second) + ")");
      beta = *img;
      lk *= lambda;
      lmk *= linv;
      if (positive) {
        t.add_term(lmk, beta.second, beta.first, alpha.first, alpha.second);
        t.add_term(-lk, alpha.first, alpha.second, beta.second, beta.first);
      } else {
        t.add_term(x * lmk, beta.second, beta.first, alpha.first,
                   alpha.second);
        t.add_term(-(y * lk), alpha.first, alpha.second, beta.second,
                   beta.first);
      }
    }
  }
  return t;
}

Tensor2 AybeKernel::eval(const Rational& lambda, const Rational& x,
                         const Rational& y) const {
  if (variant == KernelVariant::Const) {
    if (y.is_zero())
      throw SingularParameter("const kernel is singular at y = 0");
    return r_const_eval(data.sigma, data.n, lambda, x / y);
  }
  return r_bd_eval(data, lambda, x, y);
}

KernelFn AybeKernel::fn() const {
  AybeKernel copy = *this;
  return [copy](const Rational& lambda, const Rational& x,
                const Rational& y) { return copy.eval(lambda, x, y); };
}

Tensor3 verify_general_aybe(const KernelFn& r, int n, const Rational& l1,
                            const Rational& l2, const Rational& l3,
                            const Rational& y1, const Rational& y2,
                            const Rational& y3) {
  // r^{ab}_{cd} = r(λ_a⁻¹ λ_b; y_c, y_d).
  auto rr = [&](const Rational& la, const Rational& lb, const Rational& yc,
                const Rational& yd) { return r(la.inverse() * lb, yc, yd); };
  Tensor3 t1 = leg_embed(rr(l1, l2, y1, y3), 13) *
               leg_embed(rr(l2, l3, y2, y3), 12);
  Tensor3 t2 = leg_embed(rr(l3, l2, y1, y2), 23) *
               leg_embed(rr(l1, l3, y1, y3), 13);
  Tensor3 t3 = leg_embed(rr(l1, l3, y2, y3), 12) *
               leg_embed(rr(l1, l2, y1, y2), 23);
  (void)n;
  return t1 + t2 - t3;
}

Tensor3 verify_general_aybe(const AybeKernel& kernel, const Rational& l1,
                            const Rational& l2, const Rational& l3,
                            const Rational& y1, const Rational& y2,
                            const Rational& y3) {
  return verify_general_aybe(kernel.fn(), kernel.data.n, l1, l2, l3, y1, y2,
                             y3);
}

Tensor2 verify_skew(const KernelFn& r, int n, const Rational& lambda,
                    const Rational& y1, const Rational& y2) {
  (void)n;
  return swap_factors(r(lambda, y1, y2)) + r(lambda.inverse(), y2, y1);
}

Tensor2 verify_skew(const AybeKernel& kernel, const Rational& lambda,
                    const Rational& y1, const Rational& y2) {
  return verify_skew(kernel.fn(), kernel.data.n, lambda, y1, y2);
}

AybePoint sample_aybe_point(SampleRng& rng, int n) {
  AybePoint p;
  p.l1 = sample_rational(rng);
  p.l2 = sample_rational(rng, [&](const Rational& v) {
    return !nth_power_is_one(p.l1.inverse() * v, n);
  });
  p.l3 = sample_rational(rng, [&](const Rational& v) {
    return !nth_power_is_one(p.l2.inverse() * v, n) &&
           !nth_power_is_one(p.l1.inverse() * v, n);
  });
  p.y1 = sample_rational(rng);
  p.y2 = sample_rational(rng, [&](const Rational& v) { return v != p.y1; });
  p.y3 = sample_rational(
      rng, [&](const Rational& v) { return v != p.y1 && v != p.y2; });
  return p;
}

SkewPoint sample_skew_point(SampleRng& rng, int n) {
  SkewPoint p;
  p.lambda =
      sample_rational(rng, [&](const Rational& v) -> bool {
        return !nth_power_is_one(v, n);
      });
  p.y1 = sample_rational(rng);
  p.y2 = sample_rational(rng, [&](const Rational& v) { return v != p.y1; });
  return p;
}

}  // namespace ybe
