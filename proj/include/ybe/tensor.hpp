/*
 * Elements of Mat_n ⊗ Mat_n and Mat_n ⊗ Mat_n ⊗ Mat_n over the rationals.
 *
 * Index convention (fixed once): the coefficient of e_{ij} ⊗ e_{kl} lives in
 * the n²×n² matrix at composite row (i,k) and composite column (j,l), where
 * the composite index (a,b) ↦ a·n + b with 0-based a,b.  Triple tensors use
 * the same scheme one level deeper: e_{ab} ⊗ e_{cd} ⊗ e_{ef} sits at row
 * (a,c,e), column (b,d,f).  Under this convention the tensor product of
 * matrices is the Kronecker product of their stored matrices, so products of
 * tensors are plain matrix products.  All user-facing indices are 1-based.
 */
#pragma once

#include <vector>

#include "ybe/matq.hpp"

namespace ybe {

struct Term2 {
  Rational c;
  int i, j, k, l;  // coefficient of e_{ij} ⊗ e_{kl}, 1-based
};

class Tensor2 {
 public:
  explicit Tensor2(int n) : n_(n), m_(n * n, n * n) {}
  Tensor2(int n, MatQ m) : n_(n), m_(std::move(m)) {}

  // Id ⊗ Id.
  static Tensor2 identity2(int n) {
    return Tensor2(n, MatQ::identity(n * n));
  }

  int n() const { return n_; }
  const MatQ& mat() const { return m_; }

  // Coefficient of e_{ij} ⊗ e_{kl}; indices 1-based.
  const Rational& coeff(int i, int j, int k, int l) const {
    return m_.at(row(i, k), col(j, l));
  }
  void add_term(const Rational& c, int i, int j, int k, int l) {
    m_.at(row(i, k), col(j, l)) += c;
  }

  Tensor2 operator+(const Tensor2& o) const { return {n_, m_ + o.m_}; }
  Tensor2 operator-(const Tensor2& o) const { return {n_, m_ - o.m_}; }
  Tensor2 operator-() const { return {n_, -m_}; }
  Tensor2 operator*(const Tensor2& o) const { return {n_, m_ * o.m_}; }
  Tensor2 operator*(const Rational& s) const { return {n_, m_ * s}; }
  bool operator==(const Tensor2& o) const {
    return n_ == o.n_ && m_ == o.m_;
  }
  bool is_zero() const { return m_.is_zero(); }

  // Nonzero entries as terms (coefficient of e_{ij} ⊗ e_{kl}), row-major.
  std::vector<Term2> terms() const;

 private:
  int row(int i, int k) const { return (i - 1) * n_ + (k - 1); }
  int col(int j, int l) const { return (j - 1) * n_ + (l - 1); }

  int n_;
  MatQ m_;
};

class Tensor3 {
 public:
  explicit Tensor3(int n) : n_(n), m_(n * n * n, n * n * n) {}
  Tensor3(int n, MatQ m) : n_(n), m_(std::move(m)) {}

  static Tensor3 identity3(int n) {
    return Tensor3(n, MatQ::identity(n * n * n));
  }

  int n() const { return n_; }
  const MatQ& mat() const { return m_; }

  // Coefficient of e_{ab} ⊗ e_{cd} ⊗ e_{ef}; indices 1-based.
  const Rational& coeff(int a, int b, int c, int d, int e, int f) const {
    return m_.at(((a - 1) * n_ + (c - 1)) * n_ + (e - 1),
                 ((b - 1) * n_ + (d - 1)) * n_ + (f - 1));
  }

  Tensor3 operator+(const Tensor3& o) const { return {n_, m_ + o.m_}; }
  Tensor3 operator-(const Tensor3& o) const { return {n_, m_ - o.m_}; }
  Tensor3 operator-() const { return {n_, -m_}; }
  Tensor3 operator*(const Tensor3& o) const { return {n_, m_ * o.m_}; }
  Tensor3 operator*(const Rational& s) const { return {n_, m_ * s}; }
  bool operator==(const Tensor3& o) const {
    return n_ == o.n_ && m_ == o.m_;
  }
  bool is_zero() const { return m_.is_zero(); }

 private:
  int n_;
  MatQ m_;
};

// Σ coeff · e_{ij} ⊗ e_{kl} with accumulation of duplicates; indices must
// lie in [1,n] (std::out_of_range otherwise).
Tensor2 from_terms(int n, const std::vector<Term2>& terms);

// Embed T into the named pair of tensor legs of Mat_n^{⊗3}, identity on the
// remaining leg: legs=12 gives T⊗1, legs=13 the outer pair, legs=23 gives
// 1⊗T.  legs must be one of {12, 13, 23}.
Tensor3 leg_embed(const Tensor2& t, int legs);

// e_{ij} ⊗ e_{kl} ↦ e_{kl} ⊗ e_{ij} extended linearly (r ↦ r^{21}).
Tensor2 swap_factors(const Tensor2& t);

// AB − BA in Mat_{n³}.
Tensor3 mat_bracket3(const Tensor3& a, const Tensor3& b);

}  // namespace ybe
