#include "ybe/cli_commands.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ybe/aybe.hpp"
#include "ybe/cybe.hpp"
#include "ybe/errors.hpp"
#include "ybe/lie_triple.hpp"
#include "ybe/loop_realization.hpp"
#include "ybe/order_model.hpp"
#include "ybe/report.hpp"

namespace ybe {
namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Flag-value parsers.  All failures are std::invalid_argument → exit 2.

// "(6,1),(1,2)" → [(6,1),(1,2)]; empty / whitespace-only → [].
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  size_t i = 0;
  auto skip_separators = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto read_int = [&] {
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start)
      throw std::invalid_argument("pair list: expected an integer in '" + text + "'");
    return std::stoi(text.substr(start, i - start));
  };
  skip_separators();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("pair list: expected '(' in '" + text + "'");
    ++i;
    skip_ws();
    int a = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ',')
      throw std::invalid_argument("pair list: expected ',' in '" + text + "'");
    ++i;
    skip_ws();
    int b = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ')')
      throw std::invalid_argument("pair list: expected ')' in '" + text + "'");
    ++i;
    out.emplace_back(a, b);
    skip_separators();
  }
  return out;
}

ArcSet parse_arcs(const std::string& text) {
  ArcSet out;
  for (const auto& p : parse_pairs(text)) out.insert(p);
  return out;
}

// "1,2" → {1,2}; empty → {}.
std::set<int> parse_indices(const std::string& text) {
  std::set<int> out;
  std::string tok;
  for (char c : text + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
          throw std::invalid_argument("index list: bad token '" + tok + "'");
        out.insert(v);
        tok.clear();
      }
    } else {
      tok += c;
    }
  }
  return out;
}

std::map<int, int> parse_pair_map(const std::string& text) {
  std::map<int, int> out;
  for (const auto& p : parse_pairs(text)) {
    if (!out.emplace(p.first, p.second).second)
      throw std::invalid_argument("tau: index " + std::to_string(p.first) +
                                  " mapped twice");
  }
  return out;
}

// Whitespace-separated rationals "p/q", row-major, exactly dim² entries.
MatQ read_matrix_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open r0 file: " + path);
  std::vector<Rational> entries;
  std::string tok;
  while (in >> tok) entries.push_back(Rational::parse(tok));
  if (static_cast<int>(entries.size()) != dim * dim)
    throw std::invalid_argument(
        "r0 file " + path + ": expected " + std::to_string(dim * dim) +
        " entries (" + std::to_string(dim) + "x" + std::to_string(dim) +
        "), found " + std::to_string(entries.size()));
  MatQ m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.at(i, j) = entries[static_cast<size_t>(i * dim + j)];
  return m;
}

// ---------------------------------------------------------------------------
// Serialization helpers (exact values only; rationals as "p/q" strings).

std::string arc_str(const Arc& a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

std::string arcs_str(const ArcSet& arcs) {
  std::string s;
  for (const Arc& a : arcs) {
    if (!s.empty()) s += ",";
    s += arc_str(a);
  }
  return s.empty() ? "{}" : s;
}

ordered_json arcs_json(const ArcSet& arcs) {
  ordered_json a = ordered_json::array();
  for (const Arc& p : arcs) a.push_back(arc_str(p));
  return a;
}

ordered_json indices_json(const std::set<int>& s) {
  ordered_json a = ordered_json::array();
  for (int v : s) a.push_back(v);
  return a;
}

ordered_json pair_map_json(const std::map<int, int>& m) {
  ordered_json a = ordered_json::array();
  for (const auto& [k, v] : m) a.push_back(arc_str({k, v}));
  return a;
}

ordered_json matrix_json(const MatQ& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string point3_str(const Rational& a, const Rational& b, const Rational& c) {
  return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

std::string trials_cert(int trials) {
  return std::to_string(trials) + "/" + std::to_string(trials) +
         " seeded points exact";
}

// ---------------------------------------------------------------------------
// Shared plumbing.

int input_error(const std::string& msg) {
  std::cerr << "input error: " << msg << "\n";
  return 2;
}

int finish(const VerificationReport& rep, const std::string& json_path) {
  rep.print_lines(std::cout);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "input error: cannot write JSON report to " << json_path
                << "\n";
      return 2;
    }
    out << rep.serialize();
  }
  return rep.all_passed() ? 0 : 1;
}

// YBE_FORGE_THREADS caps worker parallelism.  Every suite currently runs
// single-threaded (one exact-arithmetic worker respects any cap ≥ 1), so the
// value only needs validating and clamping; a parallel backend must consult
// this cap.  Unset or empty → 1.
int thread_cap() {
  const char* v = std::getenv("YBE_FORGE_THREADS");
  if (v == nullptr || *v == '\0') return 1;
  std::string s(v);
  size_t used = 0;
  long parsed = 0;
  try {
    parsed = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("YBE_FORGE_THREADS must be a positive integer, got '" + s + "'");
  }
  if (used != s.size() || parsed < 1)
    throw std::invalid_argument("YBE_FORGE_THREADS must be a positive integer, got '" + s + "'");
  return static_cast<int>(std::min(parsed, 256L));
}

}  // namespace

// ---------------------------------------------------------------------------
// verify-aybe

int cmd_verify_aybe(const AybeFlags& f) {
  std::optional<AssocBDData> parsed;
  try {
    if (f.n < 2) throw std::invalid_argument("--n must be at least 2");
    if (f.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    Perm sigma = Perm::parse(f.sigma, f.n);
    parsed = validate(f.n, sigma, parse_arcs(f.gamma1), parse_arcs(f.gamma2));
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  const AssocBDData& data = *parsed;

  VerificationReport rep("verify-aybe", f.seed);
  rep.input("n", f.n);
  rep.input("sigma", data.sigma.one_line_str());
  rep.input("gamma1", arcs_json(data.gamma1));
  rep.input("gamma2", arcs_json(data.gamma2));
  rep.input("trials", f.trials);

  {
    std::string w = "pi1 = " + arcs_str(data.pi1) + "; pi2 = " +
                    arcs_str(data.pi2) + "; valid m:";
    for (int m : valid_ms(data)) w += " " + std::to_string(m);
    rep.check("data-validation", true, w);
  }

  AybeKernel kernel{data, KernelVariant::Full};
  SampleRng rng(f.seed);
  {
    bool ok = true;
    std::string w;
    for (int k = 0; k < f.trials && ok; ++k) {
      AybePoint p = sample_aybe_point(rng, f.n);
      Tensor3 res =
          verify_general_aybe(kernel, p.l1, p.l2, p.l3, p.y1, p.y2, p.y3);
      if (!res.is_zero()) {
        ok = false;
        w = "trial " + std::to_string(k) + ": nonzero residual at lambdas " +
            point3_str(p.l1, p.l2, p.l3) + ", points " +
            point3_str(p.y1, p.y2, p.y3);
      }
    }
    rep.check("quadratic-identity", ok, ok ? trials_cert(f.trials) : w);
  }
  {
    bool ok = true;
    std::string w;
    for (int k = 0; k < f.trials && ok; ++k) {
      SkewPoint p = sample_skew_point(rng, f.n);
      Tensor2 res = verify_skew(kernel, p.lambda, p.y1, p.y2);
      if (!res.is_zero()) {
        ok = false;
        w = "trial " + std::to_string(k) + ": nonzero residual at " +
            point3_str(p.lambda, p.y1, p.y2) + ", " +
            std::to_string(res.terms().size()) + " surviving terms";
      }
    }
    rep.check("skew-symmetry", ok, ok ? trials_cert(f.trials) : w);
  }
  return finish(rep, f.json_path);
}

// ---------------------------------------------------------------------------
// geometric-compare

int cmd_geometric_compare(const GeoFlags& f) {
  std::optional<AssocBDData> norm;
  try {
    if (f.n < 2) throw std::invalid_argument("--n must be at least 2");
    if (f.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    Perm sigma = Perm::parse(f.sigma, f.n);
    AssocBDData given =
        validate(f.n, sigma, parse_arcs(f.gamma1), parse_arcs(f.gamma2));
    norm = normalize(given);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  const AssocBDData& data = *norm;
  AssocBDData rev = reverse_data(data);

  VerificationReport rep("geometric-compare", f.seed);
  rep.input("n", f.n);
  rep.input("sigma", data.sigma.one_line_str());
  rep.input("gamma1", arcs_json(data.gamma1));
  rep.input("gamma2", arcs_json(data.gamma2));
  rep.input("relabel_shift", data.relabel_shift);
  rep.input("all_m", f.all_m);
  rep.input("oracle", f.oracle);
  rep.input("trials", f.trials);

  std::vector<int> ms =
      f.all_m ? valid_ms(data) : std::vector<int>{data.m_choice};

  SampleRng rng(f.seed);
  for (int m : ms) {
    const std::string tag = " (m=" + std::to_string(m) + ")";

    std::optional<OrderModel> model;
    try {
      model.emplace(data, m);
      rep.check("order-audits" + tag, true,
                "dim I = " + std::to_string(f.n * f.n) +
                    "; isotropy, closure and nilpotency audits passed");
    } catch (const AuditFailure& e) {
      rep.check("order-audits" + tag, false, e.what());
      continue;
    } catch (const NotNilpotent& e) {
      rep.check("order-audits" + tag, false, e.what());
      continue;
    }

    // --corrupt-levi swaps the gluing permutation for the identity: the
    // space of global sections then exceeds the scalars and this check must
    // fail (the hook exists so harnesses can see a named failure).
    if (f.corrupt_levi) {
      int h0 = h0_dimension(*model, Perm::identity(f.n));
      rep.check("levi-gluing-h0" + tag, h0 == 1,
                "identity gluing: h0 = " + std::to_string(h0) + ", expected 1");
    } else {
      int h0 = h0_dimension(*model);
      rep.check("levi-gluing-h0" + tag, h0 == 1,
                "h0 = " + std::to_string(h0));
    }

    {
      bool ok = true;
      std::string w;
      for (int k = 0; k < f.trials && ok; ++k) {
        SkewPoint p = sample_skew_point(rng, f.n);
        Tensor2 expected = r_bd_eval(rev, p.lambda, p.y1, p.y2);
        if (f.oracle != "solve" &&
            !(geometric_rmatrix(*model, p.lambda, p.y1, p.y2,
                                PhiPath::Closed) == expected)) {
          ok = false;
          w = "trial " + std::to_string(k) + ": closed evaluation differs at " +
              point3_str(p.lambda, p.y1, p.y2);
        }
        if (ok && f.oracle != "closed" &&
            !(geometric_rmatrix(*model, p.lambda, p.y1, p.y2,
                                PhiPath::Solve) == expected)) {
          ok = false;
          w = "trial " + std::to_string(k) +
              ": section-solve evaluation differs at " +
              point3_str(p.lambda, p.y1, p.y2);
        }
      }
      rep.check("geometric-vs-kernel" + tag, ok,
                ok ? trials_cert(f.trials) : w);
    }

    if (f.oracle == "both") {
      bool ok = true;
      std::string w;
      for (int k = 0; k < f.trials && ok; ++k) {
        SkewPoint p = sample_skew_point(rng, f.n);
        SectionSpace sections(*model, p.lambda, p.y1);
        for (int i = 0; i < f.n && ok; ++i) {
          for (int j = 0; j < f.n && ok; ++j) {
            MatQ b(f.n, f.n);
            b.at(i, j) = Rational(1);
            if (!(phi_closed(*model, p.lambda, p.y1, p.y2, b) ==
                  phi_oracle(sections, p.y2, b))) {
              ok = false;
              w = "trial " + std::to_string(k) + ": paths differ on unit (" +
                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  ") at " + point3_str(p.lambda, p.y1, p.y2);
            }
          }
        }
      }
      rep.check("phi-paths-agree" + tag, ok,
                ok ? std::to_string(f.trials) + " points, full " +
                         std::to_string(f.n * f.n) + "-unit basis"
                   : w);
    }
  }
  return finish(rep, f.json_path);
}

// ---------------------------------------------------------------------------
// verify-cybe

namespace {

// Shared head of verify-cybe / manin-audit: parse index sets and tau, read
// or derive r0, run the full validation audit.  Throws on any input defect.
LieBDTriple build_triple(int n, const std::string& gamma1,
                         const std::string& gamma2, const std::string& tau,
                         const std::string& r0) {
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  std::set<int> g1 = parse_indices(gamma1);
  std::set<int> g2 = parse_indices(gamma2);
  std::map<int, int> t = parse_pair_map(tau);
  std::optional<MatQ> r0_coeffs;
  if (r0 != "auto") r0_coeffs = read_matrix_file(r0, n - 1);
  return validate_triple(n, g1, g2, t, r0_coeffs);
}

void echo_triple_inputs(VerificationReport& rep, const LieBDTriple& t, int n,
                        const std::string& r0_flag) {
  rep.input("n", n);
  rep.input("gamma1", indices_json(t.gamma1));
  rep.input("gamma2", indices_json(t.gamma2));
  rep.input("tau", pair_map_json(t.tau));
  rep.input("r0", r0_flag);
  rep.input("r0_coeffs", matrix_json(t.r0_coeffs));
}

std::string triple_cert(const LieBDTriple& t) {
  return "tau nilpotent on " + std::to_string(t.gamma1.size()) +
         " weights; gram compatibility and the r0 constraints hold; pi1 = " +
         arcs_str(ArcSet(t.pi1.begin(), t.pi1.end()));
}

}  // namespace

int cmd_verify_cybe(const CybeFlags& f) {
  std::optional<LieBDTriple> built;
  try {
    if (f.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    if (f.order < 1) throw std::invalid_argument("--order must be at least 1");
    built = build_triple(f.n, f.gamma1, f.gamma2, f.tau, f.r0);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  const LieBDTriple& t = *built;

  VerificationReport rep("verify-cybe", f.seed);
  echo_triple_inputs(rep, t, f.n, f.r0);
  rep.input("order", f.order);
  rep.input("trials", f.trials);

  rep.check("triple-validation", true, triple_cert(t));

  SampleRng rng(f.seed);
  {
    bool ok = true;
    std::string w;
    for (int k = 0; k < f.trials && ok; ++k) {
      Rational w1 =
          sample_rational(rng, [](const Rational& c) { return !c.is_zero(); });
      Rational w2 = sample_rational(rng, [&](const Rational& c) {
        return !c.is_zero() && c != w1 && c != -w1;
      });
      Rational w3 = sample_rational(rng, [&](const Rational& c) {
        return !c.is_zero() && c != w1 && c != -w1 && c != w2 && c != -w2;
      });
      if (!verify_cybe(t, w1, w2, w3).is_zero()) {
        ok = false;
        w = "trial " + std::to_string(k) + ": nonzero bracket sum at " +
            point3_str(w1, w2, w3);
      }
    }
    rep.check("cybe-identity", ok, ok ? trials_cert(f.trials) : w);
  }
  {
    bool ok = true;
    std::string w;
    for (int k = 0; k < f.trials && ok; ++k) {
      Rational wp = sample_rational(rng, [](const Rational& c) {
        return !c.is_zero() && c != Rational(1) && c != Rational(-1);
      });
      if (!verify_unitarity(t, wp).is_zero()) {
        ok = false;
        w = "trial " + std::to_string(k) + ": swap(r(w)) + r(1/w) != 0 at w = " +
            wp.str();
      }
    }
    rep.check("unitarity", ok, ok ? trials_cert(f.trials) : w);
  }
  {
    bool ok = true;
    std::string w;
    try {
      singular_part_check(t, f.order);
      w = "r(z) - Omega/z has no negative-degree coefficients through z^" +
          std::to_string(f.order);
    } catch (const AuditFailure& e) {
      ok = false;
      w = e.what();
    }
    rep.check("singular-part", ok, w);
  }
  return finish(rep, f.json_path);
}

// ---------------------------------------------------------------------------
// manin-audit

int cmd_manin_audit(const ManinFlags& f) {
  std::optional<LieBDTriple> built;
  try {
    if (f.pole_bound < 2)
      throw std::invalid_argument("--pole-bound must be at least 2");
    if (f.order < f.pole_bound + 2)
      throw std::invalid_argument("--order must be at least --pole-bound + 2");
    built = build_triple(f.n, f.gamma1, f.gamma2, f.tau, f.r0);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  const LieBDTriple& t = *built;
  const int h = t.base.h();

  VerificationReport rep("manin-audit", f.seed);
  echo_triple_inputs(rep, t, f.n, f.r0);
  rep.input("pole_bound", f.pole_bound);
  rep.input("order", f.order);

  rep.check("triple-validation", true, triple_cert(t));

  {
    bool ok = true;
    std::string w;
    try {
      NodeIdealReport nr = node_ideal_audit(6);
      for (int m = 0; m <= 3; ++m) {
        if (m > 0) w += "; ";
        w += "a" + std::to_string(m) + " = " + nr.a[static_cast<size_t>(m)].str();
      }
    } catch (const AuditFailure& e) {
      ok = false;
      w = e.what();
    }
    rep.check("node-ideal", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    int elements = 0;
    for (int j = 0; j < h && ok; ++j) {
      std::vector<GradedLoopElement> direct = spanning_set(t, j, 4);
      std::vector<GradedLoopElement> extracted = extract_gr_from_r(t, j, 4, 6);
      elements += static_cast<int>(direct.size());
      if (direct != extracted) {
        ok = false;
        w = "grade " + std::to_string(j) +
            ": extraction disagrees with the direct spanning family";
      }
    }
    rep.check("spanning-vs-extraction", ok,
              ok ? std::to_string(elements) + " elements agree across " +
                       std::to_string(h) + " grades, pole orders <= 5"
                 : w);
  }
  {
    bool ok = true;
    std::string w;
    try {
      ClosureReport cr = verify_module_closure(t, 3);
      w = "products " + std::to_string(cr.products_checked) + ", inclusions " +
          std::to_string(cr.inclusions_checked) + ", identities " +
          std::to_string(cr.identities_checked);
    } catch (const ClosureFailure& e) {
      ok = false;
      w = e.what();
    }
    rep.check("module-closure", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    try {
      ManinReport mr = manin_audit(t, f.pole_bound, f.order);
      w = "isotropy pairs " + std::to_string(mr.isotropy_pairs) +
          ", cross-grade pairs " + std::to_string(mr.cross_grade_pairs) +
          ", principal-part matrix " + std::to_string(mr.matrix_size) + "x" +
          std::to_string(mr.matrix_size) + " invertible";
    } catch (const AuditFailure& e) {
      ok = false;
      w = e.what();
    }
    rep.check("manin-pairing", ok, w);
  }
  return finish(rep, f.json_path);
}

// ---------------------------------------------------------------------------
// Dispatcher

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "ybe-forge: exact verification suites for trigonometric solutions of "
      "the associative and classical Yang-Baxter equations"};
  app.require_subcommand(1);
  // Keys match the subcommand flags, grouped under a [subcommand] section:
  //   [verify-cybe]
  //   n=2
  //   trials=5
  app.set_config("--config", "",
                 "Read flags from a key=value file ([subcommand] sections)");

  AybeFlags af;
  GeoFlags gf;
  CybeFlags cf;
  ManinFlags mf;

  auto add_perm_data_flags = [](CLI::App* sub, int& n, std::string& sigma,
                                std::string& gamma1, std::string& gamma2) {
    sub->add_option("--n", n, "Matrix size n (>= 2)")->required();
    sub->add_option("--sigma", sigma,
                    "Permutation: cycle \"(136245)\" or one-line \"3 4 6 5 1 2\"")
        ->required();
    sub->add_option("--gamma1", gamma1, "Arc list \"(6,1),(1,2)\" (default empty)");
    sub->add_option("--gamma2", gamma2, "Arc list \"(2,3),(3,4)\" (default empty)");
  };
  auto add_weight_data_flags = [](CLI::App* sub, int& n, std::string& gamma1,
                                  std::string& gamma2, std::string& tau,
                                  std::string& r0) {
    sub->add_option("--n", n, "Matrix size n (>= 2)")->required();
    sub->add_option("--gamma1", gamma1, "Simple-weight indices \"1,2\" (default empty)");
    sub->add_option("--gamma2", gamma2, "Simple-weight indices \"2,3\" (default empty)");
    sub->add_option("--tau", tau, "Weight bijection as pairs \"(1,2)\" (tau(1) = 2)");
    sub->add_option("--r0", r0,
                    "Cartan part: \"auto\" (canonical solution) or a file of "
                    "(n-1)^2 rationals");
  };
  auto add_report_flags = [](CLI::App* sub, std::uint64_t& seed,
                             std::string& json_path) {
    sub->add_option("--seed", seed, "Sampling seed (default 0)");
    sub->add_option("--json", json_path, "Write the JSON report to this path");
  };

  CLI::App* va = app.add_subcommand(
      "verify-aybe",
      "Quadratic associative identity and skew-symmetry at seeded points");
  add_perm_data_flags(va, af.n, af.sigma, af.gamma1, af.gamma2);
  va->add_option("--trials", af.trials, "Seeded sample points per check (default 20)");
  add_report_flags(va, af.seed, af.json_path);

  CLI::App* gc = app.add_subcommand(
      "geometric-compare",
      "Order-model audits and geometric-vs-kernel evaluation comparison");
  add_perm_data_flags(gc, gf.n, gf.sigma, gf.gamma1, gf.gamma2);
  gc->add_flag("--all-m", gf.all_m, "Audit every valid twist degree m");
  gc->add_option("--oracle", gf.oracle,
                 "Evaluation path(s) to compare against the kernel")
      ->check(CLI::IsMember({"closed", "solve", "both"}));
  gc->add_flag("--corrupt-levi", gf.corrupt_levi,
               "Test hook: replace the Levi gluing permutation by the identity");
  gc->add_option("--trials", gf.trials, "Seeded sample points per check (default 20)");
  add_report_flags(gc, gf.seed, gf.json_path);

  CLI::App* vc = app.add_subcommand(
      "verify-cybe",
      "Classical identity, unitarity and singular-part regularity");
  add_weight_data_flags(vc, cf.n, cf.gamma1, cf.gamma2, cf.tau, cf.r0);
  vc->add_option("--order", cf.order, "Singular-part expansion order (default 8)");
  vc->add_option("--trials", cf.trials, "Seeded sample points per check (default 20)");
  add_report_flags(vc, cf.seed, cf.json_path);

  CLI::App* ma = app.add_subcommand(
      "manin-audit",
      "Node-ideal coefficients, spanning-family extraction, module closure "
      "and the residue-pairing audit");
  add_weight_data_flags(ma, mf.n, mf.gamma1, mf.gamma2, mf.tau, mf.r0);
  ma->add_option("--pole-bound", mf.pole_bound,
                 "Principal parts audited through t^(-pole-bound) (default 3)");
  ma->add_option("--order", mf.order,
                 "Truncation order, >= pole-bound + 2 (default 8)");
  add_report_flags(ma, mf.seed, mf.json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    thread_cap();  // validate the environment before any work
    if (va->parsed()) return cmd_verify_aybe(af);
    if (gc->parsed()) return cmd_geometric_compare(gf);
    if (vc->parsed()) return cmd_verify_cybe(cf);
    if (ma->parsed()) return cmd_manin_audit(mf);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand selected\n";
  return 2;
}

}  // namespace ybe
