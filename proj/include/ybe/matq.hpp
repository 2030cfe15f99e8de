/*
 * Dense matrices over the rationals and canonical exact linear solving.
 *
 * The solver performs fraction-free-in-spirit but straightforward
 * reduced-row-echelon elimination with a fixed pivot rule (first row with a
 * nonzero entry, columns left to right), so the "particular solution with
 * free variables zeroed" and the nullspace basis (one vector per free
 * column, in increasing column order) are canonical: re-solving a permuted
 * system reproduces the same solution set representation.
 */
#pragma once

#include <string>
#include <vector>

#include "ybe/rational.hpp"

namespace ybe {

class MatQ {
 public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static MatQ identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) {
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
              static_cast<size_t>(j)];
  }
  const Rational& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
              static_cast<size_t>(j)];
  }

  bool is_zero() const {
    for (const auto& c : e_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool operator==(const MatQ& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const MatQ& o) const { return !(*this == o); }

  MatQ operator+(const MatQ& o) const;
  MatQ operator-(const MatQ& o) const;
  MatQ operator*(const MatQ& o) const;  // zero-skipping product
  MatQ operator*(const Rational& s) const;
  MatQ operator-() const { return *this * Rational(-1); }

  MatQ transpose() const;
  Rational trace() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;            // empty when inconsistent
  std::vector<std::vector<Rational>> nullspace;  // canonical basis
  int rank = 0;
};

// Exact RREF solve of A x = b (see file comment for the canonicalization).
LinearSolution solve_linear(const MatQ& A, const std::vector<Rational>& b);

// Canonical nullspace basis of A (the homogeneous case).
std::vector<std::vector<Rational>> nullspace(const MatQ& A);

int rank_of(const MatQ& A);

// Inverse of a square matrix; the flag reports singularity instead of
// throwing so callers can surface their own domain-specific error.
struct Inverse {
  bool invertible = false;
  MatQ inv;
};
Inverse try_inverse(const MatQ& A);

}  // namespace ybe
