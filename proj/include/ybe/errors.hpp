/*
 * Error taxonomy.
 *
 * Every failure mode that callers are expected to handle gets its own type,
 * named after the contract it violates.  All of them carry a human-readable
 * message describing the offending input.
 */
#pragma once

#include <stdexcept>

namespace ybe {

// Evaluation of a rational function at one of its poles.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pole/vanishing order is undefined for the zero function.
struct ZeroFunctionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series division by a series that is identically zero to its truncation.
struct ZeroDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rejection sampler exceeded its retry budget.
struct ExhaustionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated-series computation was asked for more precision than the
// inputs carry.
struct TruncationTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation point lies on the singular locus of a closed formula
// (lambda^n = 1, coincident points, zero coordinates, non-bijective
// residue map, ...).
struct SingularParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- associative Belavin-Drinfeld data -----------------------------------

struct NotCyclic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotProperSubset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma(Gamma_1) != Gamma_2 under the diagonal action.
struct GammaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (n,1) in Gamma_1 where a construction requires the normalized labeling.
struct UnnormalizedGamma : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- order model ----------------------------------------------------------

// A claimed closure set is not closed under arc composition.
struct ClosureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma does not map the Levi part of P1 onto the Levi part of P2.
struct LeviMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural audit (dimension, isotropy, product closure, ...) failed;
// the message names the violated assertion.
struct AuditFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// theta+/theta- failed to be nilpotent (model-construction bug).
struct NotNilpotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- Lie Belavin-Drinfeld triples ------------------------------------------

// tau does not preserve the Gram matrix of weight scalar products.
struct GramViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Some tau-chain cycles instead of terminating.
struct NotNilpotentTau : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A supplied r0 violates its defining constraints.
struct R0ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The r0 constraint system is inconsistent (should not happen for valid
// triples; surfaced rather than silently patched).
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- loop realization -------------------------------------------------------

// A product f*c fell outside the certified span; the message names (f, c).
struct ClosureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ybe
