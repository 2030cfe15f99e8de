/*
 * Order-model construction: coordinate masks, parabolic and isotropic bases
 * with their audits, θ± nilpotency, h⁰, the section space with its residue
 * factorization, and the two implementations of the evaluation map φ.
 */
#include "ybe/order_model.hpp"

#include <sstream>
#include <string>
#include <utility>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::string arc_str(const Arc& a) {
  std::ostringstream os;
  os << "(" << a.first << "," << a.second << ")";
  return os.str();
}

// Incremental echelon form over ℚ used by the independence, closure, and
// membership audits.  Vectors are reduced against the stored rows; a vector
// that does not reduce to zero can be inserted as a new row.
class SpanChecker {
 public:
  // Reduces v in place against the echelon rows.
  void reduce(std::vector<Rational>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[static_cast<size_t>(pivots_[r])];
      if (c.is_zero()) continue;
      const Rational f = c;  // rows are normalized to pivot 1
      for (size_t k = 0; k < v.size(); ++k)
        v[k] = v[k] - f * rows_[r][k];
    }
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  }

  // False when v was already in the span.
  bool add(std::vector<Rational> v) {
    reduce(v);
    int pivot = -1;
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) {
        pivot = static_cast<int>(k);
        break;
      }
    if (pivot < 0) return false;
    const Rational inv = Rational(1) / v[static_cast<size_t>(pivot)];
    for (auto& c : v) c = c * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

std::vector<Rational> vec_of(const MatQ& a) {
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(a.rows()) * static_cast<size_t>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
  return v;
}

std::vector<Rational> vec_of_pair(const MatQ& a, const MatQ& b) {
  std::vector<Rational> v = vec_of(a);
  std::vector<Rational> w = vec_of(b);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

MatQ unit(int n, int i, int j) {
  MatQ e(n, n);
  e.at(i - 1, j - 1) = Rational(1);
  return e;
}

// Elements of coordinate bases must be matrix units: build_isotropic
// recovers the free-coordinate masks from them.
CoordMask mask_of_coordinate_basis(const SubalgebraBasis& p,
                                   const char* who) {
  CoordMask mask(p.n);
  for (const MatQ& e : p.first) {
    int hits = 0, ci = 0, cj = 0;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (!e.at(i, j).is_zero()) {
          ++hits;
          ci = i + 1;
          cj = j + 1;
        }
    if (hits != 1 || e.at(ci - 1, cj - 1) != Rational(1))
      throw AuditFailure(std::string(who) +
                         ": coordinate basis required (each element a "
                         "matrix unit)");
    mask.insert(ci, cj);
  }
  return mask;
}

// Closure audit for a subalgebra basis: every pairwise product must reduce
// to zero against the echelonized basis.
void audit_product_closure(const SubalgebraBasis& p, const char* who) {
  SpanChecker span;
  for (int k = 0; k < p.dim(); ++k) {
    std::vector<Rational> v = p.ambient == Ambient::MatN
                                  ? vec_of(p.first[static_cast<size_t>(k)])
                                  : vec_of_pair(p.first[static_cast<size_t>(k)],
                                                p.second[static_cast<size_t>(k)]);
    if (!span.add(std::move(v)))
      throw AuditFailure(std::string(who) + ": basis is linearly dependent");
  }
  for (int a = 0; a < p.dim(); ++a)
    for (int b = 0; b < p.dim(); ++b) {
      const MatQ prod1 =
          p.first[static_cast<size_t>(a)] * p.first[static_cast<size_t>(b)];
      std::vector<Rational> v =
          p.ambient == Ambient::MatN
              ? vec_of(prod1)
              : vec_of_pair(prod1, p.second[static_cast<size_t>(a)] *
                                       p.second[static_cast<size_t>(b)]);
      if (!span.contains(std::move(v)))
        throw AuditFailure(std::string(who) + ": product closure fails");
    }
}

// The cyclic length of the arc (i, j), i.e. the number of σ₀ steps from i
// to j.
int arc_len(const Arc& a, int n) {
  return ((a.second - a.first) % n + n) % n;
}

// A Π-set must compose along cyclic chains and contain both parts of every
// splitting of its members (the closure law of the arc chains).
void check_cyclic_closure(const ArcSet& pi, int n, const char* who) {
  for (const Arc& a : pi) {
    if (a.first < 1 || a.first > n || a.second < 1 || a.second > n ||
        a.first == a.second)
      throw ClosureViolation(std::string(who) + ": invalid pair " +
                             arc_str(a));
  }
  for (const Arc& a : pi)
    for (const Arc& b : pi) {
      if (a.second != b.first) continue;
      if (arc_len(a, n) + arc_len(b, n) >= n) continue;
      if (!pi.count({a.first, b.second}))
        throw ClosureViolation(std::string(who) + ": " + arc_str(a) + " + " +
                               arc_str(b) + " composes outside the set");
    }
  for (const Arc& a : pi) {
    const int len = arc_len(a, n);
    for (int s = 1; s < len; ++s) {
      int mid = a.first;
      for (int t = 0; t < s; ++t) mid = sigma0(mid, n);
      if (!pi.count({a.first, mid}) || !pi.count({mid, a.second}))
        throw ClosureViolation(std::string(who) + ": " + arc_str(a) +
                               " splits at " + std::to_string(mid) +
                               " outside the set");
    }
  }
}

void audit_dim(const SubalgebraBasis& p, int expected, const char* who) {
  if (p.dim() != expected)
    throw AuditFailure(std::string(who) + ": dimension " +
                       std::to_string(p.dim()) + " != expected " +
                       std::to_string(expected));
}

// Gluing conditions of I(P₁, P₂, g) as linear rows on (vec a, vec b)
// ∈ k^{2n²}; n² rows in total:
//   (1) a_ij = 0                 for i > j, (j,i) ∉ Π₁,
//   (2) a_ij − b_{g(i)g(j)} = 0  for (i,j) ∈ Π₁, both orientations, and
//       a_ii − b_{g(i)g(i)} = 0,
//   (3) b_ij = 0                 for (i,j) ∈ S_m ∖ Π₂.
// The a-side is pre-scaled by `lambda_weight` (λ for the twisted section
// condition (λ·a(0), a(∞)) ∈ I; 1 for plain membership).
std::vector<std::vector<Rational>> isotropic_rows(const AssocBDData& data,
                                                  int m, const Perm& gluing,
                                                  const Rational& lambda_weight) {
  const int n = data.n;
  const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  auto aidx = [n](int i, int j) {
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n) +
           static_cast<size_t>(j - 1);
  };
  std::vector<std::vector<Rational>> rows;
  auto fresh = [nn]() { return std::vector<Rational>(2 * nn); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i > j && !data.pi1.count({j, i})) {
        auto row = fresh();
        row[aidx(i, j)] = lambda_weight;
        rows.push_back(std::move(row));
      }
      if (in_s_m(i, j, m, n) && !data.pi2.count({i, j})) {
        auto row = fresh();
        row[nn + aidx(i, j)] = Rational(1);
        rows.push_back(std::move(row));
      }
    }
  auto glue = [&](int i, int j) {
    auto row = fresh();
    row[aidx(i, j)] = lambda_weight;
    row[nn + aidx(gluing.apply(i), gluing.apply(j))] = Rational(-1);
    rows.push_back(std::move(row));
  };
  for (const Arc& alpha : data.pi1) {
    glue(alpha.first, alpha.second);
    glue(alpha.second, alpha.first);
  }
  for (int i = 1; i <= n; ++i) glue(i, i);
  return rows;
}

// Neumann sum (1 − w·θ)⁻¹ v = Σ_{k≥0} (w·θ)ᵏ v, finite by nilpotency.
MatQ neumann(const ProjectorFamily& pf, ThetaSign sign, const Rational& w,
             MatQ v) {
  MatQ acc = v;
  const int guard = pf.n * pf.n + 2;
  for (int k = 0; k < guard; ++k) {
    v = theta_apply(pf, sign, v) * w;
    if (v.is_zero()) return acc;
    acc = acc + v;
  }
  throw NotNilpotent("theta Neumann series failed to terminate");
}

// (1 − λσ)⁻¹ on the diagonal: (1−λⁿ)⁻¹ Σ_{k=0}^{n−1} λᵏ σᵏ, acting by
// h_i ↦ h_{σᵏ(i)}.
MatQ cartan_resolvent(const Perm& sigma, const Rational& lambda,
                      const MatQ& diag_part) {
  const int n = sigma.n();
  Rational lam_n(1);
  for (int k = 0; k < n; ++k) lam_n = lam_n * lambda;
  const Rational pref = Rational(1) / (Rational(1) - lam_n);
  MatQ out(n, n);
  for (int i = 1; i <= n; ++i) {
    const Rational& c = diag_part.at(i - 1, i - 1);
    if (c.is_zero()) continue;
    int img = i;
    Rational lk(1);
    for (int k = 0; k < n; ++k) {
      out.at(img - 1, img - 1) = out.at(img - 1, img - 1) + pref * lk * c;
      img = sigma.apply(img);
      lk = lk * lambda;
    }
  }
  return out;
}

bool lambda_admissible(const Rational& lambda, int n) {
  if (lambda.is_zero()) return false;
  Rational p(1);
  for (int k = 0; k < n; ++k) p = p * lambda;
  return p != Rational(1);
}

}  // namespace

MatQ CoordMask::apply(const MatQ& a) const {
  MatQ out(n_, n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (contains(i, j)) out.at(i - 1, j - 1) = a.at(i - 1, j - 1);
  return out;
}

CoordMask CoordMask::intersect(const CoordMask& o) const {
  CoordMask out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (contains(i, j) && o.contains(i, j)) out.insert(i, j);
  return out;
}

int CoordMask::count() const {
  int c = 0;
  for (char v : on_) c += (v != 0);
  return c;
}

std::vector<Arc> CoordMask::coords() const {
  std::vector<Arc> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (contains(i, j)) out.push_back({i, j});
  return out;
}

bool in_s_m(int i, int j, int m, int n) {
  (void)n;
  return (i < j && j < m) || (m <= i && i < j) || (i >= m && m > j);
}

MatQ perm_conj(const Perm& s, const MatQ& a) {
  const int n = s.n();
  MatQ out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Rational& c = a.at(i - 1, j - 1);
      if (!c.is_zero()) out.at(s.apply(i) - 1, s.apply(j) - 1) = c;
    }
  return out;
}

ProjectorFamily make_projectors(const AssocBDData& data, int m) {
  const int n = data.n;
  if (m < 1 || m > n)
    throw AuditFailure("m-condition: m = " + std::to_string(m) +
                       " outside [1," + std::to_string(n) + "]");
  if (data.gamma2.count({sigma0_inv(m, n), m}))
    throw AuditFailure("m-condition: arc (" +
                       std::to_string(sigma0_inv(m, n)) + "," +
                       std::to_string(m) + ") lies in Gamma_2");

  ProjectorFamily pf;
  pf.n = n;
  pf.m = m;
  pf.sigma = data.sigma;
  pf.b1p = CoordMask(n);
  pf.b1m = CoordMask(n);
  pf.b2p = CoordMask(n);
  pf.b2m = CoordMask(n);
  pf.a1p = CoordMask(n);
  pf.a1m = CoordMask(n);
  pf.a2p = CoordMask(n);
  pf.a2m = CoordMask(n);
  pf.h = CoordMask(n);
  pf.n1p = CoordMask(n);
  pf.n2m = CoordMask(n);
  pf.o_minus = CoordMask(n);
  pf.o_zero = CoordMask(n);
  pf.o_plus = CoordMask(n);

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool s = in_s_m(i, j, m, n);
      if (i <= j) pf.b1p.insert(i, j);
      if (i >= j) pf.b1m.insert(i, j);
      if (!in_s_m(j, i, m, n)) pf.b2p.insert(i, j);
      if (!s) pf.b2m.insert(i, j);
      if (i == j) pf.h.insert(i, j);
      if (i < j) pf.n1p.insert(i, j);
      if (s) pf.n2m.insert(i, j);
      if (i < m && j >= m) pf.o_minus.insert(i, j);
      if ((i < m && j < m) || (i >= m && j >= m)) pf.o_zero.insert(i, j);
      if (i >= m && j < m) pf.o_plus.insert(i, j);
    }
  for (const Arc& alpha : data.pi1) {
    pf.a1p.insert(alpha.first, alpha.second);
    pf.a1m.insert(alpha.second, alpha.first);
  }
  for (const Arc& alpha : data.pi2) {
    pf.a2p.insert(alpha.first, alpha.second);
    pf.a2m.insert(alpha.second, alpha.first);
  }

  // S_m closure properties: transitivity, dichotomy, complement symmetry.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != j && !in_s_m(i, j, m, n) && !in_s_m(j, i, m, n))
        throw AuditFailure("S_m: complement symmetry fails at " +
                           arc_str({i, j}));
      if (!in_s_m(i, j, m, n)) continue;
      for (int k = 1; k <= n; ++k) {
        if (in_s_m(j, k, m, n) && !in_s_m(i, k, m, n))
          throw AuditFailure("S_m: transitivity fails at (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k) + ")");
        if (!in_s_m(i, k, m, n) && !in_s_m(k, j, m, n))
          throw AuditFailure("S_m: dichotomy fails at (" + std::to_string(i) +
                             "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
      }
    }
  // m-condition ⟹ Π₂ ⊆ S_m.
  for (const Arc& alpha : data.pi2)
    if (!in_s_m(alpha.first, alpha.second, m, n))
      throw AuditFailure("Pi_2 not contained in S_m at " + arc_str(alpha));
  // Displayed projector identities, as mask identities.
  if (pf.b1p.intersect(pf.o_plus).count() != 0)
    throw AuditFailure("projector identity: B1+ meets M(O(1))");
  if (pf.b2m.intersect(pf.o_plus).count() != 0)
    throw AuditFailure("projector identity: B2- meets M(O(1))");
  if (pf.b1p.intersect(pf.o_zero) != pf.b2p.intersect(pf.o_zero))
    throw AuditFailure("projector identity: B1+ and B2+ differ on M(O)");
  if (pf.b1m.intersect(pf.o_zero) != pf.b2m.intersect(pf.o_zero))
    throw AuditFailure("projector identity: B1- and B2- differ on M(O)");
  return pf;
}

MatQ theta_apply(const ProjectorFamily& pf, ThetaSign sign, const MatQ& b) {
  if (sign == ThetaSign::Plus)
    return perm_conj(pf.sigma, pf.a1p.apply(pf.o_zero.apply(b)));
  return perm_conj(pf.sigma.inverse(), pf.a2m.apply(pf.o_zero.apply(b)));
}

int nilpotency_index(const ProjectorFamily& pf, ThetaSign sign) {
  const int n = pf.n;
  std::vector<MatQ> cur;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cur.push_back(unit(n, i, j));
  const int guard = n * n + 1;
  for (int k = 1; k <= guard; ++k) {
    bool all_zero = true;
    for (auto& v : cur) {
      v = theta_apply(pf, sign, v);
      all_zero = all_zero && v.is_zero();
    }
    if (all_zero) return k;
  }
  throw NotNilpotent("theta power never vanishes");
}

SubalgebraBasis build_parabolic_plus(const ArcSet& pi, int n) {
  for (const Arc& a : pi)
    if (a.first >= a.second)
      throw ClosureViolation("P_+(Pi): pair " + arc_str(a) +
                             " is not increasing");
  check_cyclic_closure(pi, n, "P_+(Pi)");

  SubalgebraBasis p;
  p.ambient = Ambient::MatN;
  p.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) p.first.push_back(unit(n, i, j));
  for (const Arc& a : pi) p.first.push_back(unit(n, a.second, a.first));
  audit_dim(p, n * (n + 1) / 2 + static_cast<int>(pi.size()), "P_+(Pi)");
  audit_product_closure(p, "P_+(Pi)");
  return p;
}

SubalgebraBasis build_P2(const ArcSet& pi2, int m, int n) {
  check_cyclic_closure(pi2, n, "P_2");
  for (const Arc& a : pi2)
    if (!in_s_m(a.first, a.second, m, n))
      throw ClosureViolation("P_2: pair " + arc_str(a) +
                             " escapes S_m (m-condition violated)");

  SubalgebraBasis p;
  p.ambient = Ambient::MatN;
  p.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!in_s_m(i, j, m, n) || pi2.count({i, j}))
        p.first.push_back(unit(n, i, j));
  audit_dim(p, n * (n + 1) / 2 + static_cast<int>(pi2.size()), "P_2");
  audit_product_closure(p, "P_2");
  return p;
}

SubalgebraBasis build_isotropic(const SubalgebraBasis& p1,
                                const SubalgebraBasis& p2, const Perm& sigma) {
  const int n = p1.n;
  const CoordMask m1 = mask_of_coordinate_basis(p1, "I(P1,P2,sigma)");
  const CoordMask m2 = mask_of_coordinate_basis(p2, "I(P1,P2,sigma)");

  CoordMask levi1(n), levi2(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (m1.contains(i, j) && m1.contains(j, i)) levi1.insert(i, j);
      if (m2.contains(i, j) && m2.contains(j, i)) levi2.insert(i, j);
    }
  CoordMask levi1_img(n);
  for (const Arc& c : levi1.coords())
    levi1_img.insert(sigma.apply(c.first), sigma.apply(c.second));
  if (levi1_img != levi2)
    throw LeviMismatch(
        "sigma does not carry the Levi mask of P1 onto the Levi mask of P2");

  SubalgebraBasis iso;
  iso.ambient = Ambient::MatNPair;
  iso.n = n;
  const MatQ zero(n, n);
  for (const Arc& c : m1.coords()) {
    if (levi1.contains(c.first, c.second)) {
      iso.first.push_back(unit(n, c.first, c.second));
      iso.second.push_back(unit(n, sigma.apply(c.first), sigma.apply(c.second)));
    } else {
      iso.first.push_back(unit(n, c.first, c.second));
      iso.second.push_back(zero);
    }
  }
  for (const Arc& c : m2.coords())
    if (!levi2.contains(c.first, c.second)) {
      iso.first.push_back(zero);
      iso.second.push_back(unit(n, c.first, c.second));
    }

  audit_dim(iso, n * n, "I(P1,P2,sigma)");
  for (int a = 0; a < iso.dim(); ++a)
    for (int b = 0; b < iso.dim(); ++b) {
      const Rational pair_val =
          (iso.first[static_cast<size_t>(a)] * iso.first[static_cast<size_t>(b)])
              .trace() -
          (iso.second[static_cast<size_t>(a)] *
           iso.second[static_cast<size_t>(b)])
              .trace();
      if (!pair_val.is_zero())
        throw AuditFailure("I(P1,P2,sigma): isotropy fails on basis pair (" +
                           std::to_string(a) + "," + std::to_string(b) + ")");
    }
  audit_product_closure(iso, "I(P1,P2,sigma)");
  {
    SpanChecker span;
    for (int k = 0; k < iso.dim(); ++k)
      span.add(vec_of_pair(iso.first[static_cast<size_t>(k)],
                           iso.second[static_cast<size_t>(k)]));
    if (!span.contains(vec_of_pair(MatQ::identity(n), MatQ::identity(n))))
      throw AuditFailure("I(P1,P2,sigma): (1,1) not in the subalgebra");
  }
  return iso;
}

OrderModel::OrderModel(const AssocBDData& data, int m)
    : data_(data), m_(m), pf_() {
  require_normalized(data_);
  bool valid = false;
  for (int c : valid_ms(data_)) valid = valid || (c == m);
  if (!valid)
    throw AuditFailure("m-condition: m = " + std::to_string(m) +
                       " has (sigma0^{-1}(m), m) in Gamma_2");
  eps_.resize(static_cast<size_t>(data_.n));
  for (int i = 1; i <= data_.n; ++i)
    eps_[static_cast<size_t>(i - 1)] = i >= m ? 1 : 0;
  pf_ = make_projectors(data_, m_);
  p1_ = build_parabolic_plus(data_.pi1, data_.n);
  p2_ = build_P2(data_.pi2, m_, data_.n);
  iso_ = build_isotropic(p1_, p2_, data_.sigma);
}

OrderModel::OrderModel(const AssocBDData& data)
    : OrderModel(data, data.m_choice) {}

MatQ theta_apply(const OrderModel& model, ThetaSign sign, const MatQ& b) {
  return theta_apply(model.proj(), sign, b);
}

int nilpotency_index(const OrderModel& model, ThetaSign sign) {
  return nilpotency_index(model.proj(), sign);
}

int h0_dimension(const OrderModel& model) {
  return h0_dimension(model, model.data().sigma);
}

int h0_dimension(const OrderModel& model, const Perm& gluing) {
  const int n = model.n();
  const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  const ProjectorFamily& pf = model.proj();

  // Unknowns: a₀ on the complement of M(𝒪(−1)), a₁ on M(𝒪(1)).
  std::vector<Arc> a0_coords, a1_coords;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!pf.o_minus.contains(i, j)) a0_coords.push_back({i, j});
      if (pf.o_plus.contains(i, j)) a1_coords.push_back({i, j});
    }
  const int unknowns =
      static_cast<int>(a0_coords.size() + a1_coords.size());

  // Columns of (vec a(0), vec a(∞)) as functions of the unknowns:
  // a(0) = a₀, a(∞) = π_𝒪 a₀ + a₁.
  MatQ cols(static_cast<int>(2 * nn), unknowns);
  auto aidx = [n](const Arc& c) {
    return static_cast<size_t>(c.first - 1) * static_cast<size_t>(n) +
           static_cast<size_t>(c.second - 1);
  };
  int col = 0;
  for (const Arc& c : a0_coords) {
    cols.at(static_cast<int>(aidx(c)), col) = Rational(1);
    if (pf.o_zero.contains(c.first, c.second))
      cols.at(static_cast<int>(nn + aidx(c)), col) = Rational(1);
    ++col;
  }
  for (const Arc& c : a1_coords) {
    cols.at(static_cast<int>(nn + aidx(c)), col) = Rational(1);
    ++col;
  }

  const auto rows =
      isotropic_rows(model.data(), model.m(), gluing, Rational(1));
  MatQ sys(static_cast<int>(rows.size()), unknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) {
      Rational acc(0);
      for (size_t k = 0; k < 2 * nn; ++k)
        if (!rows[r][k].is_zero())
          acc = acc + rows[r][k] * cols.at(static_cast<int>(k), c);
      sys.at(static_cast<int>(r), c) = acc;
    }
  return static_cast<int>(nullspace(sys).size());
}

SectionSpace::SectionSpace(const OrderModel& model, const Rational& lambda,
                           const Rational& x)
    : n_(model.n()), m_(model.m()), lambda_(lambda), x_(x) {
  const int n = n_;
  const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  if (!lambda_admissible(lambda, n))
    throw SingularParameter("section space needs lambda nonzero with "
                            "lambda^n != 1");
  if (x.is_zero())
    throw SingularParameter("section space needs x != 0");
  const ProjectorFamily& pf = model.proj();

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!pf.o_minus.contains(i, j)) a1_coords_.push_back({i, j});
      if (pf.o_plus.contains(i, j)) a2_coords_.push_back({i, j});
    }
  const size_t unknowns = nn + a1_coords_.size() + a2_coords_.size();

  auto aidx = [n](const Arc& c) {
    return static_cast<size_t>(c.first - 1) * static_cast<size_t>(n) +
           static_cast<size_t>(c.second - 1);
  };

  // Columns of (vec a(0), vec a(∞)) as functions of the packed unknowns
  // (vec a₀; a₁ off M(𝒪(−1)); a₂ on M(𝒪(1))):
  //   a(0) = a₀,  a(∞) = −x·π_{𝒪(−1)}a₀ + π_𝒪 a₁ + a₂.
  MatQ cols(static_cast<int>(2 * nn), static_cast<int>(unknowns));
  size_t col = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Arc c{i, j};
      cols.at(static_cast<int>(aidx(c)), static_cast<int>(col)) = Rational(1);
      if (pf.o_minus.contains(i, j))
        cols.at(static_cast<int>(nn + aidx(c)), static_cast<int>(col)) = -x;
      ++col;
    }
  for (const Arc& c : a1_coords_) {
    if (pf.o_zero.contains(c.first, c.second))
      cols.at(static_cast<int>(nn + aidx(c)), static_cast<int>(col)) =
          Rational(1);
    ++col;
  }
  for (const Arc& c : a2_coords_) {
    cols.at(static_cast<int>(nn + aidx(c)), static_cast<int>(col)) =
        Rational(1);
    ++col;
  }

  const auto rows =
      isotropic_rows(model.data(), model.m(), model.data().sigma, lambda);
  MatQ sys(static_cast<int>(rows.size()), static_cast<int>(unknowns));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < unknowns; ++c) {
      Rational acc(0);
      for (size_t k = 0; k < 2 * nn; ++k)
        if (!rows[r][k].is_zero())
          acc = acc +
                rows[r][k] * cols.at(static_cast<int>(k), static_cast<int>(c));
      sys.at(static_cast<int>(r), static_cast<int>(c)) = acc;
    }
  kernel_ = nullspace(sys);
  if (kernel_.size() != nn)
    throw SingularParameter("section space has dimension " +
                            std::to_string(kernel_.size()) + " instead of " +
                            std::to_string(nn));

  // Residue map on the kernel basis: b = −a₀ + a₁ + x·a₂.
  MatQ rk(static_cast<int>(nn), static_cast<int>(kernel_.size()));
  for (size_t k = 0; k < kernel_.size(); ++k) {
    const Section s = unpack(kernel_[k]);
    const MatQ b = residue(s);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rk.at(i * n + j, static_cast<int>(k)) = b.at(i, j);
  }
  const Inverse inv = try_inverse(rk);
  if (!inv.invertible)
    throw SingularParameter("residue map of the section space is not "
                            "bijective");
  res_inv_ = inv.inv;
}

Section SectionSpace::unpack(const std::vector<Rational>& u) const {
  const int n = n_;
  const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  Section s{MatQ(n, n), MatQ(n, n), MatQ(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.a0.at(i, j) = u[static_cast<size_t>(i) * static_cast<size_t>(n) +
                        static_cast<size_t>(j)];
  size_t pos = nn;
  for (const Arc& c : a1_coords_)
    s.a1.at(c.first - 1, c.second - 1) = u[pos++];
  for (const Arc& c : a2_coords_)
    s.a2.at(c.first - 1, c.second - 1) = u[pos++];
  return s;
}

Section SectionSpace::basis_section(int k) const {
  return unpack(kernel_[static_cast<size_t>(k)]);
}

MatQ SectionSpace::residue(const Section& s) const {
  return -s.a0 + s.a1 + s.a2 * x_;
}

Section SectionSpace::section_for_residue(const MatQ& b) const {
  const int n = n_;
  std::vector<Rational> bv(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      bv[static_cast<size_t>(i) * static_cast<size_t>(n) +
         static_cast<size_t>(j)] = b.at(i, j);
  // coefficients in the kernel basis
  std::vector<Rational> coeff(bv.size());
  for (size_t r = 0; r < bv.size(); ++r) {
    Rational acc(0);
    for (size_t c = 0; c < bv.size(); ++c)
      if (!bv[c].is_zero())
        acc = acc + res_inv_.at(static_cast<int>(r), static_cast<int>(c)) *
                        bv[c];
    coeff[r] = acc;
  }
  std::vector<Rational> u(kernel_.empty() ? 0 : kernel_[0].size());
  for (size_t k = 0; k < kernel_.size(); ++k) {
    if (coeff[k].is_zero()) continue;
    for (size_t p = 0; p < u.size(); ++p)
      u[p] = u[p] + coeff[k] * kernel_[k][p];
  }
  return unpack(u);
}

MatQ SectionSpace::evaluate(const Section& s, const Rational& y) const {
  if (y == x_)
    throw SingularParameter("section evaluation at its pole y = x");
  const MatQ b = residue(s);
  return s.a0 + b * (y / (y - x_)) + s.a2 * y;
}

MatQ phi_closed(const OrderModel& model, const Rational& lambda,
                const Rational& x, const Rational& y, const MatQ& b) {
  const int n = model.n();
  if (!lambda_admissible(lambda, n))
    throw SingularParameter("phi needs lambda nonzero with lambda^n != 1");
  if (x == y) throw SingularParameter("phi needs x != y");
  if (x.is_zero() || y.is_zero()) throw SingularParameter("phi needs x, y != 0");
  const ProjectorFamily& pf = model.proj();
  const Perm& sigma = model.data().sigma;
  const Perm sigma_inv = sigma.inverse();
  const Rational lam_inv = Rational(1) / lambda;

  // φ₀(b) = (y/(y−x))·b − π_{N₁⁺}b − (1−λσ)⁻¹ π_H b
  MatQ out = b * (y / (y - x)) - pf.n1p.apply(b) -
             cartan_resolvent(sigma, lambda, pf.h.apply(b));

  // φ₋ = (1−λ⁻¹θ⁻)⁻¹ λ⁻¹σ⁻¹ π_{A₂⁻} π_𝒪
  out = out + neumann(pf, ThetaSign::Minus, lam_inv,
                      perm_conj(sigma_inv,
                                pf.a2m.apply(pf.o_zero.apply(b))) *
                          lam_inv);
  // ψ₋ = (1−λ⁻¹θ⁻)⁻¹ λ⁻¹σ⁻¹ π_{A₂⁻} π_{𝒪(−1)}, weighted by x
  out = out + neumann(pf, ThetaSign::Minus, lam_inv,
                      perm_conj(sigma_inv,
                                pf.a2m.apply(pf.o_minus.apply(b))) *
                          lam_inv) *
                  x;
  // (1−λθ⁺)⁻¹ σ π_{A₁⁺} b feeds both φ₊ (via π_𝒪) and ψ₊ (via π_{𝒪(1)})
  const MatQ plus_core =
      neumann(pf, ThetaSign::Plus, lambda, perm_conj(sigma, pf.a1p.apply(b)));
  out = out - pf.o_zero.apply(plus_core) * lambda;
  out = out - pf.o_plus.apply(plus_core) * (lambda * y);
  return out;
}

MatQ phi_oracle(const SectionSpace& sections, const Rational& y,
                const MatQ& b) {
  if (y.is_zero())
    throw SingularParameter("phi needs y != 0");
  return sections.evaluate(sections.section_for_residue(b), y);
}

MatQ phi_oracle(const OrderModel& model, const Rational& lambda,
                const Rational& x, const Rational& y, const MatQ& b) {
  const SectionSpace sections(model, lambda, x);
  return phi_oracle(sections, y, b);
}

Tensor2 geometric_rmatrix(const OrderModel& model, const Rational& lambda,
                          const Rational& x, const Rational& y, PhiPath path) {
  const int n = model.n();
  Tensor2 r(n);
  if (path == PhiPath::Closed) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const MatQ f = phi_closed(model, lambda, x, y, unit(n, i, j));
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            if (!f.at(k - 1, l - 1).is_zero())
              r.add_term(f.at(k - 1, l - 1), k, l, j, i);
      }
    return r;
  }
  const SectionSpace sections(model, lambda, x);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const MatQ f = phi_oracle(sections, y, unit(n, i, j));
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (!f.at(k - 1, l - 1).is_zero())
            r.add_term(f.at(k - 1, l - 1), k, l, j, i);
    }
  return r;
}

}  // namespace ybe
