/*
 * Lie-theoretic Belavin-Drinfeld triples on the cyclic weight diagram of the
 * Coxeter grading.
 *
 * Gamma is the set of n simple weights, realized as the arcs a -> (a, a mod
 * n + 1) of a cycle.  A subset Gamma_i generates the composite weights Pi_i:
 * every cyclic interval whose constituent simple arcs all lie in Gamma_i,
 * realized as the matrix unit e_{start, end}.  An admissible tau: Gamma_1 ->
 * Gamma_2 is a bijection preserving the weight Gram matrix whose chains
 * terminate (tau^m(alpha) undefined for large m); it extends additively to
 * Pi_1 -> Pi_2.  The continuous datum r_0 in h (x) h satisfies
 *
 *   r_0 + r_0^{21} = Omega_0,
 *   (tau(alpha) (x) 1)(r_0) + (1 (x) alpha)(r_0) = 0   for alpha in Gamma_1,
 *
 * and the solver returns the canonical affine solution set of that linear
 * system over the coefficients of r_0 in the Cartan basis.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ybe/coxeter.hpp"
#include "ybe/matq.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

struct LieBDTriple {
  CoxeterSlN base;
  std::set<int> gamma1, gamma2;  // simple-weight (arc) indices, 1..n
  std::map<int, int> tau;        // bijection gamma1 -> gamma2
  MatQ r0_coeffs;                // (n-1) x (n-1) over v_a (x) v_b
  Tensor2 r0;                    // the same element assembled in Mat_n tensors

  // Derived combinatorics: composite weights as matrix-unit coordinates and
  // the additive extension of tau.
  std::set<std::pair<int, int>> pi1, pi2;
  std::map<std::pair<int, int>, std::pair<int, int>> tau_ext;
};

// Affine solution set of the r_0 constraints, in Cartan-basis coefficients.
// particular = symmetric part Omega_0/2 plus the canonical antisymmetric
// adjustment (RREF with free variables zeroed, antisymmetric unknowns
// s_{ab}, a < b, in lexicographic order); freedom = antisymmetric nullspace
// directions in the same coordinates.
struct R0Solution {
  MatQ particular;
  std::vector<MatQ> freedom;
};

// unknown_order optionally permutes the antisymmetric unknowns before the
// RREF (a testing hook for the solution-set stability property); it must be
// a permutation of 0..#unknowns-1.  Empty means lexicographic order.
// Throws NoSolution when the constraint system is inconsistent.
R0Solution solve_r0(const CoxeterSlN& base, const std::set<int>& gamma1,
                    const std::set<int>& gamma2, const std::map<int, int>& tau,
                    const std::vector<int>& unknown_order = {});

// Assemble a Cartan-coefficient matrix into the corresponding element of
// h (x) h inside Mat_n (x) Mat_n.
Tensor2 cartan_tensor(const CoxeterSlN& base, const MatQ& coeffs);

// Build and fully audit a triple.  When r0_coeffs is absent the canonical
// particular solution of solve_r0 is used.  Errors: std::invalid_argument
// (malformed indices / tau not a bijection gamma1 -> gamma2), GramViolation,
// NotNilpotentTau, R0ConstraintViolation, NoSolution.
LieBDTriple validate_triple(int n, const std::set<int>& gamma1,
                            const std::set<int>& gamma2,
                            const std::map<int, int>& tau,
                            const std::optional<MatQ>& r0_coeffs = std::nullopt);

// psi(e_alpha) = sum_{m >= 1} e_{tau^m alpha}, extended linearly; zero on the
// diagonal and on units whose weight admits no defined tau-power.
MatQ psi_apply(const LieBDTriple& t, const MatQ& x);

// Number of defined tau-powers of the unit's weight (the well-founded
// measure that makes psi nilpotent); 0 for diagonal coordinates and weights
// outside Pi_1.
int tau_power_count(const LieBDTriple& t, int i, int k);

}  // namespace ybe
