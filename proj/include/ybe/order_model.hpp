/*
 * Finite linear-algebra model of the symmetric spherical order attached to a
 * normalized associative Belavin–Drinfeld datum (σ, Γ₁, Γ₂) and a choice of
 * m with (σ₀⁻¹(m), m) ∉ Γ₂.
 *
 * The bundle V = ⊕ᵢ 𝒪(εᵢ) with εᵢ = [i ≥ m] is modeled entry-wise by
 * polynomial degree bounds in the affine coordinate t: an 𝒪(d)-valued entry
 * is a polynomial of degree ≤ d, its value at 0 is the t⁰ coefficient and
 * its value at ∞ the top coefficient.  End(V)|₀ and End(V)|∞ are glued
 * along the maximal isotropic subalgebra I(P₁, P₂, σ) cut out of the
 * parabolic pair
 *   P₁ = P₊(Π₁) = B₊ + Σ_{α∈Π₁} ⟨e_{−α}⟩,
 *   P₂ = σ₀^{m−1} P₋(σ₀^{−m+1} Π₂) = {a | a_ij = 0 for (i,j) ∈ S_m ∖ Π₂},
 * by matching Levi parts through σ, where S_m = {(i,j) | σ₀^{−m+1}i <
 * σ₀^{−m+1}j}.  Everything downstream — the nilpotent operators
 * θ⁺ = σπ_{A₁⁺}π_𝒪 and θ⁻ = σ⁻¹π_{A₂⁻}π_𝒪, the h⁰ = 1 computation, the
 * space of sections with a simple pole at x, and the evaluation map φ —
 * reduces to exact rational linear algebra on these coordinate models.
 *
 * The projector masks and θ± are mechanical coordinate constructions and
 * are available for any validated datum with a valid m.  The parabolic /
 * isotropic / section machinery additionally requires the normalized
 * labeling (n,1) ∉ Γ₁: without it Π₁ contains decreasing pairs, P₊(Π₁)
 * loses the dimension formula dim = n(n+1)/2 + |Π₁|, and the Levi of P₁ is
 * no longer contained in P₁ (the gluing conditions then cut a space of the
 * wrong dimension).  Callers holding an unnormalized datum relabel it with
 * normalize() first.
 */
#pragma once

#include <vector>

#include "ybe/assoc_bd.hpp"
#include "ybe/matq.hpp"
#include "ybe/rational.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

// Subset of the 1-based n×n coordinate grid; apply() is the projector that
// keeps the coordinates in the mask and zeroes the rest.
class CoordMask {
 public:
  CoordMask() : n_(0) {}
  explicit CoordMask(int n)
      : n_(n), on_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {}

  int n() const { return n_; }
  bool contains(int i, int j) const { return on_[idx(i, j)] != 0; }
  void insert(int i, int j) { on_[idx(i, j)] = 1; }

  MatQ apply(const MatQ& a) const;
  CoordMask intersect(const CoordMask& o) const;
  int count() const;
  std::vector<Arc> coords() const;  // row-major

  bool operator==(const CoordMask& o) const {
    return n_ == o.n_ && on_ == o.on_;
  }
  bool operator!=(const CoordMask& o) const { return !(*this == o); }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
           static_cast<size_t>(j - 1);
  }
  int n_;
  std::vector<char> on_;
};

// (i,j) ∈ S_m ⟺ σ₀^{−m+1}i < σ₀^{−m+1}j ⟺ i<j<m, or m≤i<j, or i≥m>j.
bool in_s_m(int i, int j, int m, int n);

// Conjugation action of a permutation on matrices: e_ij ↦ e_{s(i)s(j)}.
MatQ perm_conj(const Perm& s, const MatQ& a);

// The coordinate projectors of the order model at a given m.  Constructed
// for any validated datum whose m satisfies (σ₀⁻¹(m), m) ∉ Γ₂ (AuditFailure
// otherwise); construction re-verifies the S_m closure properties, the
// inclusion Π₂ ⊆ S_m, and the displayed projector identities
// π_{B₁⁺}π_{𝒪(1)} = π_{B₂⁻}π_{𝒪(1)} = 0 and π_{B₁±}π_𝒪 = π_{B₂±}π_𝒪.
struct ProjectorFamily {
  int n = 0;
  int m = 1;
  Perm sigma = Perm::identity(1);

  CoordMask b1p;      // upper triangular (i ≤ j)
  CoordMask b1m;      // lower triangular (i ≥ j)
  CoordMask b2p;      // {(i,j) | (j,i) ∉ S_m}
  CoordMask b2m;      // {(i,j) | (i,j) ∉ S_m}
  CoordMask a1p;      // units e_α, α ∈ Π₁
  CoordMask a1m;      // units e_{−α}, α ∈ Π₁
  CoordMask a2p;      // units e_α, α ∈ Π₂
  CoordMask a2m;      // units e_{−α}, α ∈ Π₂
  CoordMask h;        // diagonal
  CoordMask n1p;      // strict upper (unipotent radical of B₁⁺)
  CoordMask n2m;      // S_m coordinates (unipotent radical of B₂⁻)
  CoordMask o_minus;  // M(𝒪(−1)) = {i < m ≤ j}
  CoordMask o_zero;   // M(𝒪)     = {i,j < m  or  i,j ≥ m}
  CoordMask o_plus;   // M(𝒪(1))  = {i ≥ m > j}
};

ProjectorFamily make_projectors(const AssocBDData& data, int m);

enum class ThetaSign { Plus, Minus };

// θ⁺ = σ ∘ π_{A₁⁺} ∘ π_𝒪 and θ⁻ = σ⁻¹ ∘ π_{A₂⁻} ∘ π_𝒪.
MatQ theta_apply(const ProjectorFamily& pf, ThetaSign sign, const MatQ& b);

// Least k ≥ 1 with θᵏ = 0; NotNilpotent if no such k ≤ n² + 1 exists
// (impossible for validated data; guarded rather than assumed).
int nilpotency_index(const ProjectorFamily& pf, ThetaSign sign);

// Basis of a subalgebra of Mat_n (ambient MatN) or Mat_n ⊕ Mat_n (ambient
// MatNPair, componentwise product).  Element k is first[k], paired with
// second[k] when the ambient is MatNPair.
enum class Ambient { MatN, MatNPair };

struct SubalgebraBasis {
  Ambient ambient = Ambient::MatN;
  int n = 0;
  std::vector<MatQ> first;
  std::vector<MatQ> second;

  int dim() const { return static_cast<int>(first.size()); }
};

// P₊(Π) = B₊ + Σ_{α∈Π} ⟨e_{−α}⟩ for a closure set Π of increasing pairs
// (closed under composition (i,j)+(j,k) ↦ (i,k) and containing both parts
// of every splitting of its members).  Audits linear independence, the
// dimension formula n(n+1)/2 + |Π|, and product closure.
// ClosureViolation when Π is not a valid set.
SubalgebraBasis build_parabolic_plus(const ArcSet& pi, int n);

// P₂ = {a | a_ij = 0 for (i,j) ∈ S_m, (i,j) ∉ Π₂} for a cyclic closure set
// Π₂ ⊆ S_m (the containment is the m-condition).  Audits as above with
// dimension n(n+1)/2 + |Π₂|.
SubalgebraBasis build_P2(const ArcSet& pi2, int m, int n);

// I(P₁, P₂, σ) = {(a,b) ∈ P₁ ⊕ P₂ | π_L(b) = σ(π_L(a))} for parabolics
// given by coordinate bases.  The Levi mask of a coordinate parabolic is
// its ±-symmetric part {(i,j) | (i,j) and (j,i) both free}.  Throws
// LeviMismatch when σ does not carry the Levi mask of P₁ onto that of P₂,
// and AuditFailure (naming the audit) when the result fails one of:
// dim = n², isotropy under ⟨(a,b),(a′,b′)⟩ = tr(aa′) − tr(bb′), closure
// under the componentwise product, or (1,1) ∈ I.
SubalgebraBasis build_isotropic(const SubalgebraBasis& p1,
                                const SubalgebraBasis& p2, const Perm& sigma);

// The assembled model.  Requires a validated datum with (n,1) ∉ Γ₁ (throws
// UnnormalizedGamma — relabel with normalize() first) and a valid m (throws
// AuditFailure).  Construction runs every audit listed above.
class OrderModel {
 public:
  OrderModel(const AssocBDData& data, int m);
  explicit OrderModel(const AssocBDData& data);  // m = data.m_choice

  const AssocBDData& data() const { return data_; }
  int m() const { return m_; }
  int n() const { return data_.n; }
  // ε_i = [i ≥ m], the twisting degrees of V = ⊕ 𝒪(ε_i).
  const std::vector<int>& epsilon() const { return eps_; }
  const ProjectorFamily& proj() const { return pf_; }
  const SubalgebraBasis& parabolic1() const { return p1_; }
  const SubalgebraBasis& parabolic2() const { return p2_; }
  const SubalgebraBasis& isotropic() const { return iso_; }

 private:
  AssocBDData data_;
  int m_;
  std::vector<int> eps_;
  ProjectorFamily pf_;
  SubalgebraBasis p1_, p2_, iso_;
};

MatQ theta_apply(const OrderModel& model, ThetaSign sign, const MatQ& b);
int nilpotency_index(const OrderModel& model, ThetaSign sign);

// dim of global sections a = a₀ + a₁t, π_{𝒪(−1)}a₀ = 0, a₁ ∈ M(𝒪(1)),
// subject to (a(0), a(∞)) = (a₀, π_𝒪a₀ + a₁) ∈ I.  Expected value 1 (the
// scalars).  The second overload replaces σ in the Levi gluing by an
// arbitrary permutation — a counterexample probe; it reports the computed
// dimension without judging it.
int h0_dimension(const OrderModel& model);
int h0_dimension(const OrderModel& model, const Perm& gluing);

// A section with at most a simple pole at x, stored by its coefficient
// matrices: a(t) = (−x·a₀ + a₁·t + a₂·t²)/(t − x), with π_{𝒪(−1)}a₁ = 0
// and a₂ ∈ M(𝒪(1)).
struct Section {
  MatQ a0, a1, a2;
};

// Solution space of the twisted gluing condition (λ·a(0), a(∞)) ∈ I with
//   a(0) = a₀,  a(∞) = −x·π_{𝒪(−1)}a₀ + π_𝒪 a₁ + a₂,
// parametrized by 2n² unknowns under n² linear constraints.  Construction
// solves the system once, checks dim = n² and that the residue map
//   b = Res_x(a · dt/t) = −a₀ + a₁ + x·a₂
// is bijective onto Mat_n (SingularParameter otherwise), and retains the
// factorization so that section_for_residue is a matrix–vector product.
class SectionSpace {
 public:
  // Throws SingularParameter when λ ∈ {0, n-th roots of 1}, x = 0, or the
  // residue map fails to be bijective.
  SectionSpace(const OrderModel& model, const Rational& lambda,
               const Rational& x);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(kernel_.size()); }
  const Rational& lambda() const { return lambda_; }
  const Rational& x() const { return x_; }

  Section basis_section(int k) const;
  MatQ residue(const Section& s) const;  // −a₀ + a₁ + x·a₂
  // The unique section with residue b at x.
  Section section_for_residue(const MatQ& b) const;
  // a(y) = a₀ + (y/(y−x))·b + y·a₂ where b is the residue of s; y ≠ x.
  MatQ evaluate(const Section& s, const Rational& y) const;

 private:
  Section unpack(const std::vector<Rational>& u) const;

  int n_;
  int m_;
  Rational lambda_, x_;
  std::vector<Arc> a1_coords_, a2_coords_;  // packed unknown layout
  std::vector<std::vector<Rational>> kernel_;
  MatQ res_inv_;  // inverse of (residue ∘ kernel basis)
};

// The evaluation map φ(b) = a(y) for the section a with residue b at x,
// computed by the closed operator formula
//   φ = φ₀ + φ₋ − φ₊ + x·ψ₋ − y·ψ₊,
//   φ₀(b) = (y/(y−x))·b − π_{N₁⁺}b − (1−λσ)⁻¹π_H b,
//   φ₋ = (1−λ⁻¹θ⁻)⁻¹ λ⁻¹σ⁻¹ π_{A₂⁻} π_𝒪,
//   φ₊ = λ π_𝒪 (1−λθ⁺)⁻¹ σ π_{A₁⁺},
//   ψ₋ = (1−λ⁻¹θ⁻)⁻¹ λ⁻¹σ⁻¹ π_{A₂⁻} π_{𝒪(−1)},
//   ψ₊ = λ π_{𝒪(1)} (1−λθ⁺)⁻¹ σ π_{A₁⁺},
// with finite Neumann series for the nilpotent θ± and the exact cyclic
// resolvent (1−λσ)⁻¹ = (1−λⁿ)⁻¹ Σ_{k<n} λᵏσᵏ on the diagonal.
// Preconditions: λ ∉ {0, n-th roots of 1}, x ≠ y, x,y ≠ 0.
MatQ phi_closed(const OrderModel& model, const Rational& lambda,
                const Rational& x, const Rational& y, const MatQ& b);

// Independent path: invert the residue map of SectionSpace at b and
// evaluate the section at y.  Must agree with phi_closed everywhere.
MatQ phi_oracle(const OrderModel& model, const Rational& lambda,
                const Rational& x, const Rational& y, const MatQ& b);
MatQ phi_oracle(const SectionSpace& sections, const Rational& y,
                const MatQ& b);

enum class PhiPath { Closed, Solve };

// r = Σ_{i,j} φ(e_ij) ⊗ e_ji, the geometric r-matrix of the model.
Tensor2 geometric_rmatrix(const OrderModel& model, const Rational& lambda,
                          const Rational& x, const Rational& y,
                          PhiPath path = PhiPath::Closed);

}  // namespace ybe
