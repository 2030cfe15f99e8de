/*
 * Command-line front end: flag structs and subcommand drivers behind the
 * ybe-forge binary.
 *
 * Exit-code contract (total — every run terminates with one of these):
 *   0  every check passed
 *   1  at least one check failed (report still printed / written)
 *   2  input error: flag parsing, malformed data, or a validation audit
 *      rejected the datum before any checks ran
 */
#pragma once

#include <cstdint>
#include <string>

namespace ybe {

struct AybeFlags {
  int n = 0;
  std::string sigma;            // cycle "(136245)" or one-line "3 4 6 5 1 2"
  std::string gamma1, gamma2;   // arc lists "(6,1),(1,2)"; empty allowed
  int trials = 20;
  std::uint64_t seed = 0;
  std::string json_path;        // empty: no JSON written
};

struct GeoFlags {
  int n = 0;
  std::string sigma;
  std::string gamma1, gamma2;
  bool all_m = false;           // audit every valid twist degree m
  std::string oracle = "both";  // closed | solve | both
  bool corrupt_levi = false;    // test hook: break the Levi gluing on purpose
  int trials = 20;
  std::uint64_t seed = 0;
  std::string json_path;
};

struct CybeFlags {
  int n = 0;
  std::string gamma1, gamma2;   // simple-weight index lists "1,2"; empty allowed
  std::string tau;              // pair list "(1,2)" meaning tau(1) = 2
  std::string r0 = "auto";      // "auto" or a file of (n-1)^2 rationals
  int order = 8;                // singular-part expansion order
  int trials = 20;
  std::uint64_t seed = 0;
  std::string json_path;
};

struct ManinFlags {
  int n = 0;
  std::string gamma1, gamma2;
  std::string tau;
  std::string r0 = "auto";
  int pole_bound = 3;           // principal parts audited through t^{-pole_bound}
  int order = 8;                // truncation order; must be >= pole_bound + 2
  std::uint64_t seed = 0;
  std::string json_path;
};

int cmd_verify_aybe(const AybeFlags& f);
int cmd_geometric_compare(const GeoFlags& f);
int cmd_verify_cybe(const CybeFlags& f);
int cmd_manin_audit(const ManinFlags& f);

// Parses argv (subcommands verify-aybe, geometric-compare, verify-cybe,
// manin-audit; each accepts --config FILE with the same keys as its flags)
// and dispatches.  Never throws.
int run_cli(int argc, const char* const* argv);

}  // namespace ybe
