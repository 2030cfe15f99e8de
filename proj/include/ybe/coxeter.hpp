/*
 * sl_n with its Coxeter grading.
 *
 * class(e_{ik}) = (k - i) mod n splits the matrix units into graded pieces
 * g_j: for j != 0 the n units of class j, for j = 0 the traceless diagonal
 * subalgebra (the Cartan), spanned by v_a = h_a - h_{a+1}, a = 1..n-1.  The
 * trace form (X,Y) = tr(XY) pairs g_j with g_{-j}; the graded Casimir
 * components are
 *
 *   Omega_j  = sum over class-j units of e_{ik} (x) e_{ki}      (j != 0)
 *   Omega_0  = sum_{a,b} (G^{-1})_{ab} v_a (x) v_b
 *
 * with G the Gram matrix of the Cartan basis.  Using dual bases instead of
 * an orthonormal basis keeps every coefficient rational.
 */
#pragma once

#include <utility>
#include <vector>

#include "ybe/matq.hpp"
#include "ybe/rational.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

class CoxeterSlN {
 public:
  explicit CoxeterSlN(int n);  // n >= 2

  int n() const { return n_; }
  int h() const { return n_; }  // Coxeter number of sl_n

  // Grading class (k - i) mod n of the matrix unit e_{ik}; 0 on the diagonal.
  int class_of(int i, int k) const;

  // Cartan basis v_a = h_a - h_{a+1}, a = 1..n-1, as n x n matrices.
  const std::vector<MatQ>& cartan() const { return cartan_; }

  // Gram matrix (v_a, v_b) = tr(v_a v_b) of the Cartan basis, and its
  // inverse; both (n-1) x (n-1).
  const MatQ& gram() const { return gram_; }
  const MatQ& gram_inv() const { return gram_inv_; }

  // The n matrix units of class j (j arbitrary, taken mod n, j != 0 mod n)
  // as (i, k) coordinate pairs, listed with i = 1..n.
  std::vector<std::pair<int, int>> class_units(int j) const;

  // Graded Casimir component Omega_j; the index is taken mod n, so
  // omega_component(-j) is the partner Omega_{-j} = Omega_j^{21}.
  Tensor2 omega_component(int j) const;

  // Full Casimir Omega = sum_j Omega_j.
  Tensor2 omega() const;

 private:
  int n_;
  std::vector<MatQ> cartan_;
  MatQ gram_, gram_inv_;
};

// Gram matrix of the n simple weights alpha_a (the arcs a -> (a, a mod n + 1)
// of the cyclic diagram) under the trace form, computed via the dual vectors
// t_{alpha_a} = h_a - h_{a mod n + 1}: entry (a,b) = tr(t_{alpha_a} t_{alpha_b}).
// Symmetric, rows sum to zero.
MatQ gram_matrix(const CoxeterSlN& base);

// The weight functional alpha_a evaluated on the Cartan basis: component b
// (0-based) is alpha_a(v_{b+1}).
std::vector<Rational> weight_on_cartan(const CoxeterSlN& base, int a);

}  // namespace ybe
