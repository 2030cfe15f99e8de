/*
 * Trigonometric CYBE solution: exact evaluation, residual verifiers and the
 * singular-part expansion.
 */
#include "ybe/cybe.hpp"

#include <array>
#include <string>

#include "ybe/errors.hpp"
#include "ybe/ratfunc.hpp"

namespace ybe {

Tensor2 apply_psi_leg(const LieBDTriple& t, const Tensor2& x, int leg) {
  if (leg != 1 && leg != 2)
    throw std::invalid_argument("apply_psi_leg: leg must be 1 or 2");
  int n = x.n();
  Tensor2 out(n);
  for (const Term2& term : x.terms()) {
    MatQ unit(n, n);
    if (leg == 1)
      unit.at(term.i - 1, term.j - 1) = Rational(1);
    else
      unit.at(term.k - 1, term.l - 1) = Rational(1);
    MatQ img = psi_apply(t, unit);
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        const Rational& v = img.at(p - 1, q - 1);
        if (v.is_zero()) continue;
        if (leg == 1)
          out.add_term(term.c * v, p, q, term.k, term.l);
        else
          out.add_term(term.c * v, term.i, term.j, p, q);
      }
  }
  return out;
}

Tensor2 r_trig_eval(const LieBDTriple& t, const Rational& w) {
  int h = t.base.h();
  if (w.is_zero()) throw SingularParameter("r_trig_eval: w = 0");
  Rational wh = w.pow(h);
  if (wh == Rational(1)) throw SingularParameter("r_trig_eval: w^h = 1");
  Rational casfac = (wh - Rational(1)).inverse();

  Tensor2 r = t.r0;
  for (int j = 0; j <= h - 1; ++j)
    r = r + t.base.omega_component(j) * (casfac * w.pow(j));
  for (int j = 1; j <= h - 1; ++j) {
    Tensor2 pj = apply_psi_leg(t, t.base.omega_component(j), 1);
    if (!pj.is_zero()) r = r - pj * w.pow(j);
    Tensor2 qj = apply_psi_leg(t, t.base.omega_component(h - j), 2);
    if (!qj.is_zero()) r = r + qj * w.pow(-j);
  }
  return r;
}

Tensor3 verify_cybe(const LieBDTriple& t, const Rational& w1,
                    const Rational& w2, const Rational& w3) {
  if (w1.is_zero() || w2.is_zero() || w3.is_zero())
    throw SingularParameter("verify_cybe: zero evaluation point");
  Tensor3 r12 = leg_embed(r_trig_eval(t, w1 / w2), 12);
  Tensor3 r13 = leg_embed(r_trig_eval(t, w1 / w3), 13);
  Tensor3 r23 = leg_embed(r_trig_eval(t, w2 / w3), 23);
  return mat_bracket3(r12, r13) + mat_bracket3(r12, r23) +
         mat_bracket3(r13, r23);
}

Tensor2 verify_unitarity(const LieBDTriple& t, const Rational& w) {
  if (w.is_zero()) throw SingularParameter("verify_unitarity: w = 0");
  return swap_factors(r_trig_eval(t, w)) + r_trig_eval(t, w.inverse());
}

Tensor2 Tensor2Series::coefficient(int e) const {
  if (e > trunc)
    throw TruncationTooShort(
        "Tensor2Series: coefficient beyond truncation order " +
        std::to_string(trunc));
  auto it = coeff.find(e);
  if (it != coeff.end()) return it->second;
  return Tensor2(n);
}

bool Tensor2Series::negative_part_is_zero() const {
  for (const auto& [e, c] : coeff)
    if (e < 0 && !c.is_zero()) return false;
  return true;
}

Tensor2Series r_minus_casimir_over_z(const LieBDTriple& t, const Tensor2& c,
                                     int order) {
  if (order < 1)
    throw std::invalid_argument("r_minus_casimir_over_z: order must be >= 1");
  int n = t.base.n();
  int h = t.base.h();

  // Entries of r as rational functions of w, keyed by tensor coordinates.
  std::map<std::array<int, 4>, RatFunc> entries;
  auto add_piece = [&](const Tensor2& piece, const RatFunc& factor) {
    for (const Term2& term : piece.terms()) {
      std::array<int, 4> key{term.i, term.j, term.k, term.l};
      auto it = entries.find(key);
      if (it == entries.end())
        entries.emplace(key, factor * RatFunc(term.c));
      else
        it->second = it->second + factor * RatFunc(term.c);
    }
  };

  add_piece(t.r0, RatFunc(Rational(1)));
  RatFunc wh_minus_1(Poly::monomial(h) - Poly::monomial(0));
  for (int j = 0; j <= h - 1; ++j)
    add_piece(t.base.omega_component(j), RatFunc(Poly::monomial(j)) / wh_minus_1);
  for (int j = 1; j <= h - 1; ++j) {
    Tensor2 pj = apply_psi_leg(t, t.base.omega_component(j), 1);
    if (!pj.is_zero()) add_piece(pj, -RatFunc::xpow(j));
    Tensor2 qj = apply_psi_leg(t, t.base.omega_component(h - j), 2);
    if (!qj.is_zero()) add_piece(qj, RatFunc::xpow(-j));
  }

  // w = e^{z/h}, carried far enough for the worst-case entry denominator
  // (degree <= 2h - 1, and w - 1 has valuation 1 in z).
  TruncSeries w_series = exp_series(Rational(1, h), order + 4 * h + 2);

  Tensor2Series out;
  out.n = n;
  out.trunc = order;
  auto add_coeff = [&](int e, const std::array<int, 4>& key,
                       const Rational& v) {
    if (v.is_zero()) return;
    auto it = out.coeff.find(e);
    if (it == out.coeff.end()) it = out.coeff.emplace(e, Tensor2(n)).first;
    it->second.add_term(v, key[0], key[1], key[2], key[3]);
  };

  for (const auto& [key, f] : entries) {
    if (f.is_zero()) continue;
    TruncSeries s = compose_ratfunc_series(f, w_series, order);
    for (int e = s.eff_low(); e <= order; ++e) add_coeff(e, key, s.coeff(e));
  }
  for (const Term2& term : c.terms())
    add_coeff(-1, {term.i, term.j, term.k, term.l}, -term.c);

  // Drop coefficient tensors that cancelled to zero.
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
  return out;
}

Tensor2Series singular_part_check(const LieBDTriple& t, int order) {
  Tensor2Series res = r_minus_casimir_over_z(t, t.base.omega(), order);
  if (!res.negative_part_is_zero())
    throw AuditFailure(
        "singular_part_check: r(z) - Omega/z has a surviving negative-degree "
        "Laurent coefficient");
  return res;
}

}  // namespace ybe
