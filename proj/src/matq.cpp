/*
 * Dense exact linear algebra: arithmetic and the canonical RREF solver.
 */
#include "ybe/matq.hpp"

#include <stdexcept>
#include <utility>

namespace ybe {

MatQ MatQ::operator+(const MatQ& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("MatQ: shape mismatch in +");
  MatQ r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("MatQ: shape mismatch in -");
  MatQ r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

MatQ MatQ::operator*(const MatQ& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("MatQ: shape mismatch in *");
  MatQ r(rows_, o.cols_);
  // Skip zero entries on both sides: r-matrix tensors are sparse in a dense
  // coat, and this keeps the n^3-size products cheap.
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

MatQ MatQ::operator*(const Rational& s) const {
  MatQ r = *this;
  for (auto& c : r.e_) c *= s;
  return r;
}

MatQ MatQ::transpose() const {
  MatQ r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational MatQ::trace() const {
  Rational t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

std::string MatQ::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

namespace {

// In-place RREF of [A | B]; returns the pivot columns of the A-part.
// Pivot rule: columns left to right, first not-yet-used row with a nonzero
// entry in the column.
std::vector<int> rref_augmented(MatQ& a, MatQ& b) {
  std::vector<int> pivots;
  int prow = 0;
  for (int col = 0; col < a.cols() && prow < a.rows(); ++col) {
    int found = -1;
    for (int r = prow; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != prow) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(prow, j), a.at(found, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b.at(prow, j), b.at(found, j));
    }
    Rational inv = a.at(prow, col).inverse();
    for (int j = col; j < a.cols(); ++j) a.at(prow, j) *= inv;
    for (int j = 0; j < b.cols(); ++j) b.at(prow, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == prow) continue;
      Rational f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int j = col; j < a.cols(); ++j) a.at(r, j) -= f * a.at(prow, j);
      for (int j = 0; j < b.cols(); ++j) b.at(r, j) -= f * b.at(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(const MatQ& A, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  MatQ a = A;
  MatQ rhs(A.rows(), 1);
  for (int i = 0; i < A.rows(); ++i) rhs.at(i, 0) = b[static_cast<size_t>(i)];
  std::vector<int> pivots = rref_augmented(a, rhs);

  LinearSolution sol;
  sol.rank = static_cast<int>(pivots.size());

  // Consistency: a zero A-row must have zero rhs.
  for (int r = sol.rank; r < A.rows(); ++r)
    if (!rhs.at(r, 0).is_zero()) {
      sol.consistent = false;
      return sol;
    }
  sol.consistent = true;

  // Particular solution: free variables set to 0.
  sol.particular.assign(static_cast<size_t>(A.cols()), Rational(0));
  for (int r = 0; r < sol.rank; ++r)
    sol.particular[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
        rhs.at(r, 0);

  // Nullspace: one vector per free column, in increasing column order; the
  // free coordinate is 1 and pivot coordinates are back-filled.
  std::vector<bool> is_pivot(static_cast<size_t>(A.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (int c = 0; c < A.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    std::vector<Rational> v(static_cast<size_t>(A.cols()), Rational(0));
    v[static_cast<size_t>(c)] = Rational(1);
    for (int r = 0; r < sol.rank; ++r)
      v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] = -a.at(r, c);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<std::vector<Rational>> nullspace(const MatQ& A) {
  return solve_linear(A, std::vector<Rational>(static_cast<size_t>(A.rows()),
                                               Rational(0)))
      .nullspace;
}

int rank_of(const MatQ& A) {
  MatQ a = A;
  MatQ dummy(A.rows(), 0);
  return static_cast<int>(rref_augmented(a, dummy).size());
}

Inverse try_inverse(const MatQ& A) {
  Inverse result;
  if (A.rows() != A.cols()) return result;
  MatQ a = A;
  MatQ id = MatQ::identity(A.rows());
  std::vector<int> pivots = rref_augmented(a, id);
  if (static_cast<int>(pivots.size()) != A.rows()) return result;
  result.invertible = true;
  result.inv = std::move(id);
  return result;
}

}  // namespace ybe
