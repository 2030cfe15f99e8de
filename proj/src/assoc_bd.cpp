/*
 * Validation and combinatorics of associative Belavin–Drinfeld data.
 */
#include "ybe/assoc_bd.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ybe {

namespace {

std::string arc_str(const Arc& a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

}  // namespace

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  int n = static_cast<int>(img_.size());
  if (n < 1) throw std::invalid_argument("Perm: empty one-line array");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : img_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("Perm: entry " + std::to_string(v) +
                                  " outside [1," + std::to_string(n) + "]");
    if (seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("Perm: entry " + std::to_string(v) +
                                  " repeated");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i - 1)] = i;
  return Perm(std::move(v));
}

Perm Perm::parse(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("Perm::parse: n must be positive");
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("Perm::parse: " + why + " in \"" + text +
                                "\"");
  };
  if (text.find('(') != std::string::npos) {
    // Cycle notation: one or more "(...)" groups; elements inside a group
    // are separated by spaces/commas, or are single digits when none occur.
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
    size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
      char ch = text[pos];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++pos;
        continue;
      }
      if (ch != '(') fail("unexpected character");
      size_t close = text.find(')', pos);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      std::string body = text.substr(pos + 1, close - pos - 1);
      pos = close + 1;
      std::vector<int> cyc;
      bool separated =
          body.find(' ') != std::string::npos ||
          body.find(',') != std::string::npos;
      if (separated) {
        std::string cur;
        for (char c : body) {
          if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
          } else if (c == ' ' || c == ',') {
            if (!cur.empty()) cyc.push_back(std::stoi(cur));
            cur.clear();
          } else {
            fail("unexpected character inside cycle");
          }
        }
        if (!cur.empty()) cyc.push_back(std::stoi(cur));
      } else {
        if (n > 9)
          fail("compact cycle digits are ambiguous for n > 9; separate "
               "elements with spaces or commas");
        for (char c : body) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            fail("unexpected character inside cycle");
          cyc.push_back(c - '0');
        }
      }
      if (cyc.empty()) continue;
      any = true;
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        if (from < 1 || from > n) fail("cycle entry outside [1,n]");
        if (img[static_cast<size_t>(from - 1)] != from)
          fail("element appears in two cycles");
        img[static_cast<size_t>(from - 1)] = to;
      }
    }
    if (!any) fail("no cycles found");
    return Perm(std::move(img));
  }
  // One-line notation.
  std::vector<int> img;
  std::string cur;
  for (char c : text + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ' ' || c == ',' || c == '\t') {
      if (!cur.empty()) img.push_back(std::stoi(cur));
      cur.clear();
    } else {
      fail("unexpected character");
    }
  }
  if (static_cast<int>(img.size()) != n)
    fail("one-line array has " + std::to_string(img.size()) +
         " entries, expected " + std::to_string(n));
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<size_t>(apply(i) - 1)] = i;
  return Perm(std::move(inv));
}

Perm Perm::compose(const Perm& o) const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= n(); ++i)
    v[static_cast<size_t>(i - 1)] = apply(o.apply(i));
  return Perm(std::move(v));
}

bool Perm::is_single_n_cycle() const {
  int i = 1, steps = 0;
  do {
    i = apply(i);
    ++steps;
  } while (i != 1 && steps <= n());
  return steps == n();
}

std::string Perm::cycle_str() const {
  std::vector<bool> seen(img_.size(), false);
  std::string out;
  bool compact = n() <= 9;
  for (int start = 1; start <= n(); ++start) {
    if (seen[static_cast<size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    int i = start;
    while (!seen[static_cast<size_t>(i - 1)]) {
      seen[static_cast<size_t>(i - 1)] = true;
      cyc.push_back(i);
      i = apply(i);
    }
    if (cyc.size() == 1) continue;  // fixed points omitted
    out += "(";
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k && !compact) out += " ";
      out += std::to_string(cyc[k]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string Perm::one_line_str() const {
  std::string out;
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) out += " ";
    out += std::to_string(apply(i));
  }
  return out;
}

ArcSet full_arc_set(int n) {
  ArcSet arcs;
  for (int i = 1; i <= n; ++i) arcs.insert({i, sigma0(i, n)});
  return arcs;
}

ArcSet compute_pi(const ArcSet& gamma, int n) {
  ArcSet pi;
  for (int i = 1; i <= n; ++i) {
    int j = i;
    // Extend the chain (i,σ₀(i)), (σ₀(i),σ₀²(i)), … while it stays in Γ.
    for (int r = 1; r < n; ++r) {
      int next = sigma0(j, n);
      if (gamma.count({j, next}) == 0) break;
      j = next;
      pi.insert({i, j});
    }
  }
  return pi;
}

AssocBDData validate(int n, const Perm& sigma, const ArcSet& gamma1,
                     const ArcSet& gamma2, NormalizationPolicy policy) {
  if (n < 2) throw std::invalid_argument("validate: n must be at least 2");
  if (sigma.n() != n)
    throw std::invalid_argument("validate: sigma is a permutation of [1," +
                                std::to_string(sigma.n()) + "], expected n=" +
                                std::to_string(n));
  if (!sigma.is_single_n_cycle())
    throw NotCyclic("sigma " + sigma.cycle_str() + " is not a single " +
                    std::to_string(n) + "-cycle");

  ArcSet arcs = full_arc_set(n);
  for (const auto* g : {&gamma1, &gamma2}) {
    for (const Arc& a : *g)
      if (arcs.count(a) == 0)
        throw NotProperSubset("pair " + arc_str(a) +
                              " is not an arc of the standard cycle");
    if (g->size() >= arcs.size())
      throw NotProperSubset("gamma must be a proper subset of the " +
                            std::to_string(n) + " arcs");
  }

  // σ(Γ₁) = Γ₂ under the diagonal action.
  if (gamma1.size() != gamma2.size())
    throw GammaMismatch("gamma1 and gamma2 have different sizes");
  for (const Arc& a : gamma1) {
    Arc image = sigma.apply(a);
    if (gamma2.count(image) == 0)
      throw GammaMismatch("sigma" + arc_str(a) + " = " + arc_str(image) +
                          " is not in gamma2");
  }

  AssocBDData data{n, sigma, gamma1, gamma2, {}, {}, 1, 0};
  if (!data.normalized()) {
    if (policy == NormalizationPolicy::Reject)
      throw UnnormalizedGamma("(" + std::to_string(n) + ",1) lies in gamma1");
    if (policy == NormalizationPolicy::AutoNormalize) return normalize(data);
  }

  data.pi1 = compute_pi(gamma1, n);
  data.pi2 = compute_pi(gamma2, n);
  // σ(Π₁) = Π₂ is forced by σ(Γ₁) = Γ₂; verified rather than assumed.
  for (const Arc& a : data.pi1)
    if (data.pi2.count(sigma.apply(a)) == 0)
      throw GammaMismatch("sigma(pi1) does not land in pi2 at " + arc_str(a));
  if (data.pi1.size() != data.pi2.size())
    throw GammaMismatch("pi1 and pi2 have different sizes");

  data.m_choice = choose_m(data);
  return data;
}

std::optional<Arc> tau_power(const AssocBDData& data, Arc alpha, int k) {
  Arc cur = alpha;
  for (int step = 0; step < k; ++step) {
    if (data.pi1.count(cur) == 0) return std::nullopt;
    cur = data.sigma.apply(cur);
  }
  return cur;
}

std::vector<int> valid_ms(const AssocBDData& data) {
  std::vector<int> ms;
  for (int m = 1; m <= data.n; ++m)
    if (data.gamma2.count({sigma0_inv(m, data.n), m}) == 0) ms.push_back(m);
  return ms;
}

int choose_m(const AssocBDData& data) {
  std::vector<int> ms = valid_ms(data);
  // Γ₂ proper guarantees at least one valid m.
  return ms.front();
}

AssocBDData reverse_data(const AssocBDData& data) {
  return validate(data.n, data.sigma.inverse(), data.gamma2, data.gamma1);
}

AssocBDData normalize(const AssocBDData& data) {
  if (data.normalized())
    return validate(data.n, data.sigma, data.gamma1, data.gamma2);
  int n = data.n;
  int j = 0;
  for (int i = 1; i <= n; ++i) {
    if (data.gamma1.count({i, sigma0(i, n)}) == 0) {
      j = i;
      break;
    }
  }
  // ρ(i) = ((i − j − 1) mod n) + 1 sends j ↦ n and σ₀(j) ↦ 1; it commutes
  // with σ₀, so arcs map to arcs and (n,1) leaves gamma1.
  auto rho = [&](int i) { return ((i - j - 1) % n + n) % n + 1; };
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    img[static_cast<size_t>(rho(i) - 1)] = rho(data.sigma.apply(i));
  ArcSet g1, g2;
  for (const Arc& a : data.gamma1) g1.insert({rho(a.first), rho(a.second)});
  for (const Arc& a : data.gamma2) g2.insert({rho(a.first), rho(a.second)});
  AssocBDData out = validate(n, Perm(std::move(img)), g1, g2);
  out.relabel_shift = j;
  return out;
}

void require_normalized(const AssocBDData& data) {
  if (!data.normalized())
    throw UnnormalizedGamma(
        "construction requires (n,1) not in gamma1; relabel first "
        "(normalize) or request auto-normalization");
}

}  // namespace ybe
