/*
 * Associative Belavin–Drinfeld data on gl_n.
 *
 * A datum is (σ, Γ₁, Γ₂): σ a single n-cycle, Γ₁, Γ₂ proper subsets of the
 * arc set Γ_{σ₀} = {(1,2), (2,3), …, (n,1)} of the standard cycle
 * σ₀ : i ↦ i+1, with σ(Γ₁) = Γ₂ under the diagonal action on pairs.  The
 * closures Π_a collect all pairs (i, σ₀^r(i)) whose chain of consecutive
 * arcs lies in Γ_a; τ = σ restricted to Π₁ is the partial map driving the
 * spectral tails of the trigonometric solutions.
 */
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ybe/errors.hpp"

namespace ybe {

// Permutation of [1,n]; one-line storage, 1-based application.
class Perm {
 public:
  explicit Perm(std::vector<int> one_line);

  static Perm identity(int n);
  // Accepts cycle notation "(136245)" / "(1 3 6)(2 4)" (compact digits only
  // when n <= 9) or one-line "3 4 6 5 1 2" / "3,4,6,5,1,2".
  static Perm parse(const std::string& text, int n);

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[static_cast<size_t>(i - 1)]; }
  std::pair<int, int> apply(std::pair<int, int> p) const {
    return {apply(p.first), apply(p.second)};
  }
  Perm inverse() const;
  // (this ∘ o)(i) = this(o(i)).
  Perm compose(const Perm& o) const;
  bool is_single_n_cycle() const;
  const std::vector<int>& one_line() const { return img_; }

  std::string cycle_str() const;
  std::string one_line_str() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

 private:
  std::vector<int> img_;
};

using Arc = std::pair<int, int>;
using ArcSet = std::set<Arc>;

// σ₀(i) = i+1 cyclically; inverse wraps 1 ↦ n.
inline int sigma0(int i, int n) { return i % n + 1; }
inline int sigma0_inv(int i, int n) { return (i + n - 2) % n + 1; }

// All n arcs (i, σ₀(i)).
ArcSet full_arc_set(int n);

enum class NormalizationPolicy { Allow, AutoNormalize, Reject };

struct AssocBDData {
  int n;
  Perm sigma;
  ArcSet gamma1, gamma2;
  ArcSet pi1, pi2;   // derived closures
  int m_choice;      // smallest valid m
  int relabel_shift; // nonzero only when validate auto-normalized

  bool normalized() const { return gamma1.count({n, 1}) == 0; }
  bool operator==(const AssocBDData& o) const {
    return n == o.n && sigma == o.sigma && gamma1 == o.gamma1 &&
           gamma2 == o.gamma2;
  }
};

// Verify every invariant and fill the derived fields.  Throws NotCyclic,
// NotProperSubset, GammaMismatch (σ(Γ₁) ≠ Γ₂ or σ(Π₁) ≠ Π₂), and — only
// under NormalizationPolicy::Reject — UnnormalizedGamma when (n,1) ∈ Γ₁.
// AutoNormalize relabels cyclically so that (n,1) ∉ Γ₁ and records the
// shift; Allow (default) keeps the labels as given.
AssocBDData validate(int n, const Perm& sigma, const ArcSet& gamma1,
                     const ArcSet& gamma2,
                     NormalizationPolicy policy = NormalizationPolicy::Allow);

// Closure of gamma under composition of consecutive arc chains.
ArcSet compute_pi(const ArcSet& gamma, int n);

// τ^k(α) = σ^k(α) when σ^i(α) ∈ Π₁ for all 0 ≤ i ≤ k−1; nullopt otherwise.
std::optional<Arc> tau_power(const AssocBDData& data, Arc alpha, int k);

// Smallest m ∈ [1,n] with (σ₀^{-1}(m), m) ∉ Γ₂, and the full list of valid
// choices (nonempty since Γ₂ is proper).
int choose_m(const AssocBDData& data);
std::vector<int> valid_ms(const AssocBDData& data);

// The datum (σ⁻¹, Γ₂, Γ₁); valid because σ⁻¹(Γ₂) = Γ₁.
AssocBDData reverse_data(const AssocBDData& data);

// Cyclic relabeling i ↦ ((i − j − 1) mod n) + 1 by the smallest j whose arc
// (j, σ₀(j)) ∉ Γ₁, forcing (n,1) ∉ Γ₁.  Returns the relabeled datum (shift
// recorded in relabel_shift) or the input unchanged when already normalized.
AssocBDData normalize(const AssocBDData& data);

// Guard for constructions that assume (n,1) ∉ Γ₁; throws UnnormalizedGamma.
void require_normalized(const AssocBDData& data);

}  // namespace ybe
