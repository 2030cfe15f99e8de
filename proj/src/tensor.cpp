/*
 * Tensor-leg plumbing: term assembly, leg embeddings, factor swap, bracket.
 */
#include "ybe/tensor.hpp"

#include <stdexcept>
#include <string>

namespace ybe {

std::vector<Term2> Tensor2::terms() const {
  std::vector<Term2> out;
  for (int i = 1; i <= n_; ++i)
    for (int k = 1; k <= n_; ++k)
      for (int j = 1; j <= n_; ++j)
        for (int l = 1; l <= n_; ++l) {
          const Rational& c = coeff(i, j, k, l);
          if (!c.is_zero()) out.push_back({c, i, j, k, l});
        }
  return out;
}

Tensor2 from_terms(int n, const std::vector<Term2>& terms) {
  if (n <= 0) throw std::out_of_range("from_terms: n must be positive");
  Tensor2 t(n);
  for (const Term2& term : terms) {
    for (int idx : {term.i, term.j, term.k, term.l})
      if (idx < 1 || idx > n)
        throw std::out_of_range("from_terms: index " + std::to_string(idx) +
                                " outside [1," + std::to_string(n) + "]");
    t.add_term(term.c, term.i, term.j, term.k, term.l);
  }
  return t;
}

Tensor3 leg_embed(const Tensor2& t, int legs) {
  if (legs != 12 && legs != 13 && legs != 23)
    throw std::out_of_range("leg_embed: legs must be 12, 13 or 23");
  int n = t.n();
  Tensor3 out(n);
  MatQ m(n * n * n, n * n * n);
  auto r3 = [n](int a, int c, int e) {
    return ((a - 1) * n + (c - 1)) * n + (e - 1);
  };
  for (const Term2& term : t.terms()) {
    for (int e = 1; e <= n; ++e) {
      int row, col;
      switch (legs) {
        case 12:
          row = r3(term.i, term.k, e);
          col = r3(term.j, term.l, e);
          break;
        case 13:
          row = r3(term.i, e, term.k);
          col = r3(term.j, e, term.l);
          break;
        default:  // 23
          row = r3(e, term.i, term.k);
          col = r3(e, term.j, term.l);
          break;
      }
      m.at(row, col) += term.c;
    }
  }
  return Tensor3(n, std::move(m));
}

Tensor2 swap_factors(const Tensor2& t) {
  Tensor2 out(t.n());
  for (const Term2& term : t.terms())
    out.add_term(term.c, term.k, term.l, term.i, term.j);
  return out;
}

Tensor3 mat_bracket3(const Tensor3& a, const Tensor3& b) {
  return a * b - b * a;
}

}  // namespace ybe
