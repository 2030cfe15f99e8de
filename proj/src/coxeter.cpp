/*
 * Coxeter-graded sl_n: Cartan basis, Gram data and graded Casimir components.
 */
#include "ybe/coxeter.hpp"

#include <stdexcept>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

// ((v mod n) + n) mod n for possibly negative v.
int mod_n(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

CoxeterSlN::CoxeterSlN(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("CoxeterSlN: n must be >= 2");
  cartan_.reserve(n - 1);
  for (int a = 1; a <= n - 1; ++a) {
    MatQ v(n, n);
    v.at(a - 1, a - 1) = Rational(1);
    v.at(a, a) = Rational(-1);
    cartan_.push_back(std::move(v));
  }
  // Gram of the Cartan basis: tr(v_a v_b) = 2 on the diagonal, -1 when
  // |a-b| = 1, 0 otherwise (computed, not hard-coded, so the ambient trace
  // form stays the single source of truth).
  gram_ = MatQ(n - 1, n - 1);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b)
      gram_.at(a, b) = (cartan_[a] * cartan_[b]).trace();
  Inverse inv = try_inverse(gram_);
  if (!inv.invertible)
    throw std::logic_error("CoxeterSlN: Cartan Gram matrix not invertible");
  gram_inv_ = std::move(inv.inv);
}

int CoxeterSlN::class_of(int i, int k) const {
  if (i < 1 || i > n_ || k < 1 || k > n_)
    throw std::out_of_range("CoxeterSlN::class_of: index out of range");
  return mod_n(k - i, n_);
}

std::vector<std::pair<int, int>> CoxeterSlN::class_units(int j) const {
  int jj = mod_n(j, n_);
  if (jj == 0)
    throw std::invalid_argument(
        "CoxeterSlN::class_units: class 0 is the Cartan, not spanned by "
        "matrix units");
  std::vector<std::pair<int, int>> units;
  units.reserve(n_);
  for (int i = 1; i <= n_; ++i) units.emplace_back(i, mod_n(i - 1 + jj, n_) + 1);
  return units;
}

Tensor2 CoxeterSlN::omega_component(int j) const {
  int jj = mod_n(j, n_);
  Tensor2 t(n_);
  if (jj == 0) {
    // Dual bases: Omega_0 = sum_{a,b} (G^{-1})_{ab} v_a (x) v_b.  Each v_a
    // contributes +e_{aa} - e_{a+1,a+1}.
    for (int a = 0; a < n_ - 1; ++a)
      for (int b = 0; b < n_ - 1; ++b) {
        const Rational& c = gram_inv_.at(a, b);
        if (c.is_zero()) continue;
        for (int s = 0; s <= 1; ++s)
          for (int u = 0; u <= 1; ++u) {
            Rational sign((s == u) ? 1 : -1);
            t.add_term(c * sign, a + 1 + s, a + 1 + s, b + 1 + u, b + 1 + u);
          }
      }
    return t;
  }
  for (const auto& [i, k] : class_units(jj)) t.add_term(Rational(1), i, k, k, i);
  return t;
}

Tensor2 CoxeterSlN::omega() const {
  Tensor2 t = omega_component(0);
  for (int j = 1; j <= n_ - 1; ++j) t = t + omega_component(j);
  return t;
}

MatQ gram_matrix(const CoxeterSlN& base) {
  int n = base.n();
  // Dual vector of the simple weight alpha_a = eps_a - eps_{a mod n + 1}
  // under the trace form: h_a - h_{a mod n + 1} (traceless, so it lies in
  // the Cartan, and tr((h_a - h_{a'}) X) = X_aa - X_{a'a'} = alpha_a(X)).
  auto dual = [&](int a) {
    MatQ d(n, n);
    d.at(a - 1, a - 1) = Rational(1);
    int a2 = a % n + 1;
    d.at(a2 - 1, a2 - 1) += Rational(-1);
    return d;
  };
  MatQ g(n, n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) g.at(a - 1, b - 1) = (dual(a) * dual(b)).trace();
  return g;
}

std::vector<Rational> weight_on_cartan(const CoxeterSlN& base, int a) {
  int n = base.n();
  if (a < 1 || a > n)
    throw std::out_of_range("weight_on_cartan: arc index out of range");
  // alpha_a(diag(d)) = d_a - d_{a mod n + 1}; evaluate on each v_b.
  std::vector<Rational> w(n - 1);
  int a2 = a % n + 1;
  for (int b = 1; b <= n - 1; ++b) {
    const MatQ& v = base.cartan()[b - 1];
    w[b - 1] = v.at(a - 1, a - 1) - v.at(a2 - 1, a2 - 1);
  }
  return w;
}

}  // namespace ybe
