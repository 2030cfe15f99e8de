/*
 * Belavin-Drinfeld triple validation, the canonical r_0 solver and psi.
 */
#include "ybe/lie_triple.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

int mod_n(int v, int n) { return ((v % n) + n) % n; }

// Interval of the cyclic diagram: `len` consecutive arcs starting at arc
// `start`.  Its composite weight is the matrix unit (start, end).
struct Interval {
  int start;
  int len;
};

std::pair<int, int> interval_unit(const Interval& iv, int n) {
  return {iv.start, mod_n(iv.start - 1 + iv.len, n) + 1};
}

// All intervals whose constituent simple arcs lie in `arcs`.
std::vector<Interval> intervals_in(int n, const std::set<int>& arcs) {
  std::vector<Interval> out;
  for (int start = 1; start <= n; ++start)
    for (int len = 1; len <= n - 1; ++len) {
      bool ok = true;
      for (int t = 0; t < len && ok; ++t)
        ok = arcs.count(mod_n(start - 1 + t, n) + 1) != 0;
      if (ok) out.push_back({start, len});
    }
  return out;
}

// Additive extension of tau to an interval: the image of the constituent
// arcs must again form an interval of the same length.
std::optional<Interval> tau_interval(const Interval& iv, int n,
                                     const std::map<int, int>& tau) {
  std::set<int> imgs;
  for (int t = 0; t < iv.len; ++t) {
    int arc = mod_n(iv.start - 1 + t, n) + 1;
    auto it = tau.find(arc);
    if (it == tau.end()) return std::nullopt;
    imgs.insert(it->second);
  }
  if (static_cast<int>(imgs.size()) != iv.len) return std::nullopt;
  for (int cand : imgs) {
    bool contiguous = true;
    for (int t = 0; t < iv.len && contiguous; ++t)
      contiguous = imgs.count(mod_n(cand - 1 + t, n) + 1) != 0;
    if (contiguous) return Interval{cand, iv.len};
  }
  return std::nullopt;
}

// Constraint rows of the r_0 system: one equation per (arc in sorted
// Gamma_1) x (Cartan component), in the antisymmetric unknowns s_{ab}
// (0-based, a < b, lexicographic).  Writing r_0 = Omega_0/2 + s, the
// equation (tau(alpha) (x) 1)(r_0) + (1 (x) alpha)(r_0) = 0 evaluated on the
// v_comp coordinate reads sum_{a,b} c_{ab} (ta_a [b=comp] + al_b [a=comp])
// = 0 with c = G^{-1}/2 + s.
struct R0System {
  MatQ a;                  // rows x unknowns
  std::vector<Rational> rhs;
  std::vector<std::pair<int, int>> unknowns;  // 0-based (a, b), a < b
};

R0System build_r0_system(const CoxeterSlN& base, const std::set<int>& gamma1,
                         const std::map<int, int>& tau) {
  int m = base.n() - 1;
  R0System sys;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) sys.unknowns.emplace_back(a, b);
  std::map<std::pair<int, int>, int> idx;
  for (int u = 0; u < static_cast<int>(sys.unknowns.size()); ++u)
    idx[sys.unknowns[u]] = u;

  std::vector<std::vector<Rational>> rows;
  for (int arc : gamma1) {  // std::set iterates in increasing order
    std::vector<Rational> ta = weight_on_cartan(base, tau.at(arc));
    std::vector<Rational> al = weight_on_cartan(base, arc);
    for (int comp = 0; comp < m; ++comp) {
      std::vector<Rational> row(sys.unknowns.size());
      Rational rhs(0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          Rational coef(0);
          if (b == comp) coef += ta[a];
          if (a == comp) coef += al[b];
          if (coef.is_zero()) continue;
          rhs -= coef * base.gram_inv().at(a, b) / Rational(2);
          if (a < b)
            row[idx[{a, b}]] += coef;
          else if (b < a)
            row[idx[{b, a}]] -= coef;
        }
      rows.push_back(std::move(row));
      sys.rhs.push_back(rhs);
    }
  }
  sys.a = MatQ(static_cast<int>(rows.size()),
               static_cast<int>(sys.unknowns.size()));
  for (int r = 0; r < sys.a.rows(); ++r)
    for (int c = 0; c < sys.a.cols(); ++c) sys.a.at(r, c) = rows[r][c];
  return sys;
}

MatQ coeffs_from_antisym(const CoxeterSlN& base,
                         const std::vector<std::pair<int, int>>& unknowns,
                         const std::vector<Rational>& values,
                         bool include_symmetric_part) {
  int m = base.n() - 1;
  MatQ c(m, m);
  if (include_symmetric_part)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        c.at(a, b) = base.gram_inv().at(a, b) / Rational(2);
  for (size_t u = 0; u < unknowns.size(); ++u) {
    auto [a, b] = unknowns[u];
    c.at(a, b) += values[u];
    c.at(b, a) -= values[u];
  }
  return c;
}

}  // namespace

R0Solution solve_r0(const CoxeterSlN& base, const std::set<int>& gamma1,
                    const std::set<int>& gamma2, const std::map<int, int>& tau,
                    const std::vector<int>& unknown_order) {
  if (tau.size() != gamma1.size() || gamma2.size() != gamma1.size())
    throw std::invalid_argument("solve_r0: tau must be a bijection gamma1 -> gamma2");
  R0System sys = build_r0_system(base, gamma1, tau);
  int u_count = static_cast<int>(sys.unknowns.size());

  std::vector<int> order(u_count);
  for (int i = 0; i < u_count; ++i) order[i] = i;
  if (!unknown_order.empty()) {
    if (static_cast<int>(unknown_order.size()) != u_count)
      throw std::invalid_argument("solve_r0: unknown_order has wrong size");
    order = unknown_order;
  }

  MatQ a_perm(sys.a.rows(), u_count);
  for (int r = 0; r < sys.a.rows(); ++r)
    for (int c = 0; c < u_count; ++c) a_perm.at(r, c) = sys.a.at(r, order[c]);

  LinearSolution sol = solve_linear(a_perm, sys.rhs);
  if (!sol.consistent)
    throw NoSolution("solve_r0: constraint system inconsistent");

  std::vector<Rational> values(u_count);
  for (int c = 0; c < u_count; ++c) values[order[c]] = sol.particular[c];

  R0Solution out;
  out.particular = coeffs_from_antisym(base, sys.unknowns, values, true);
  for (const auto& dir : sol.nullspace) {
    std::vector<Rational> v(u_count);
    for (int c = 0; c < u_count; ++c) v[order[c]] = dir[c];
    out.freedom.push_back(coeffs_from_antisym(base, sys.unknowns, v, false));
  }
  return out;
}

Tensor2 cartan_tensor(const CoxeterSlN& base, const MatQ& coeffs) {
  int n = base.n();
  if (coeffs.rows() != n - 1 || coeffs.cols() != n - 1)
    throw std::invalid_argument("cartan_tensor: coefficient matrix has wrong shape");
  Tensor2 t(n);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) {
      const Rational& c = coeffs.at(a, b);
      if (c.is_zero()) continue;
      // v_a (x) v_b expands into the four diagonal-unit products.
      for (int s = 0; s <= 1; ++s)
        for (int u = 0; u <= 1; ++u) {
          Rational sign((s == u) ? 1 : -1);
          t.add_term(c * sign, a + 1 + s, a + 1 + s, b + 1 + u, b + 1 + u);
        }
    }
  return t;
}

LieBDTriple validate_triple(int n, const std::set<int>& gamma1,
                            const std::set<int>& gamma2,
                            const std::map<int, int>& tau,
                            const std::optional<MatQ>& r0_coeffs) {
  CoxeterSlN base(n);
  for (int a : gamma1)
    if (a < 1 || a > n)
      throw std::invalid_argument("validate_triple: gamma1 index out of range");
  for (int a : gamma2)
    if (a < 1 || a > n)
      throw std::invalid_argument("validate_triple: gamma2 index out of range");
  if (gamma1.size() != gamma2.size() || tau.size() != gamma1.size())
    throw std::invalid_argument(
        "validate_triple: tau must be a bijection gamma1 -> gamma2");
  std::set<int> image;
  for (const auto& [a, b] : tau) {
    if (!gamma1.count(a))
      throw std::invalid_argument("validate_triple: tau defined off gamma1");
    if (!gamma2.count(b))
      throw std::invalid_argument("validate_triple: tau image off gamma2");
    image.insert(b);
  }
  if (image.size() != gamma2.size())
    throw std::invalid_argument("validate_triple: tau is not injective");

  // Gram preservation on Gamma_1.
  MatQ g = gram_matrix(base);
  for (int a : gamma1)
    for (int b : gamma1)
      if (g.at(tau.at(a) - 1, tau.at(b) - 1) != g.at(a - 1, b - 1))
        throw GramViolation(
            "validate_triple: tau does not preserve the weight Gram matrix at "
            "arcs (" + std::to_string(a) + "," + std::to_string(b) + ")");

  // Nilpotency: every tau-chain must leave gamma1 within n steps.
  for (int a : gamma1) {
    int cur = a, steps = 0;
    while (gamma1.count(cur)) {
      cur = tau.at(cur);
      if (++steps > n)
        throw NotNilpotentTau(
            "validate_triple: tau-chain from arc " + std::to_string(a) +
            " does not terminate");
    }
  }

  LieBDTriple t{std::move(base), gamma1,  gamma2, tau,
                MatQ(),          Tensor2(n), {},     {},
                {}};

  for (const Interval& iv : intervals_in(n, gamma1))
    t.pi1.insert(interval_unit(iv, n));
  for (const Interval& iv : intervals_in(n, gamma2))
    t.pi2.insert(interval_unit(iv, n));
  for (const Interval& iv : intervals_in(n, gamma1)) {
    std::optional<Interval> img = tau_interval(iv, n, tau);
    if (!img)
      throw GramViolation(
          "validate_triple: tau image of an interval is not an interval");
    t.tau_ext[interval_unit(iv, n)] = interval_unit(*img, n);
  }

  if (r0_coeffs) {
    if (r0_coeffs->rows() != n - 1 || r0_coeffs->cols() != n - 1)
      throw std::invalid_argument("validate_triple: r0 matrix has wrong shape");
    t.r0_coeffs = *r0_coeffs;
  } else {
    t.r0_coeffs = solve_r0(t.base, gamma1, gamma2, tau).particular;
  }
  t.r0 = cartan_tensor(t.base, t.r0_coeffs);

  // Constraint replay (also guards the auto-solved path).
  if (!(t.r0 + swap_factors(t.r0) == t.base.omega_component(0)))
    throw R0ConstraintViolation(
        "validate_triple: r0 + r0^{21} != Omega_0");
  int m = n - 1;
  for (int arc : gamma1) {
    std::vector<Rational> ta = weight_on_cartan(t.base, tau.at(arc));
    std::vector<Rational> al = weight_on_cartan(t.base, arc);
    for (int comp = 0; comp < m; ++comp) {
      Rational acc(0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          Rational coef(0);
          if (b == comp) coef += ta[a];
          if (a == comp) coef += al[b];
          if (!coef.is_zero()) acc += coef * t.r0_coeffs.at(a, b);
        }
      if (!acc.is_zero())
        throw R0ConstraintViolation(
            "validate_triple: (tau(alpha) (x) 1 + 1 (x) alpha)(r0) != 0 at "
            "arc " + std::to_string(arc));
    }
  }
  return t;
}

MatQ psi_apply(const LieBDTriple& t, const MatQ& x) {
  int n = t.base.n();
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("psi_apply: matrix has wrong shape");
  MatQ out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      if (i == k) continue;  // psi vanishes on the Cartan
      const Rational& c = x.at(i - 1, k - 1);
      if (c.is_zero()) continue;
      std::pair<int, int> cur{i, k};
      auto it = t.tau_ext.find(cur);
      while (it != t.tau_ext.end()) {
        cur = it->second;
        out.at(cur.first - 1, cur.second - 1) += c;
        it = t.tau_ext.find(cur);
      }
    }
  return out;
}

int tau_power_count(const LieBDTriple& t, int i, int k) {
  if (i == k) return 0;
  int count = 0;
  std::pair<int, int> cur{i, k};
  auto it = t.tau_ext.find(cur);
  while (it != t.tau_ext.end()) {
    ++count;
    cur = it->second;
    it = t.tau_ext.find(cur);
  }
  return count;
}

}  // namespace ybe
