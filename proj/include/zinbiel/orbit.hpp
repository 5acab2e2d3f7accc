#pragma once

// Orbit recipes: a text format describing one case of an orbit analysis
// (sampled coefficients, conditions, automorphism parameters, source and
// target generators) and a checker that verifies act(phi, <source>) = <target>
// at exact samples.
//
//   case <label>
//   base <id>
//   note <free text>
//   field <g>: <minimal polynomial in g>      fixed number field, generator g
//   sample <v> ...                            random nonzero rationals
//   let <v> = <expr>
//   adjoin <v>: <v>^<d> = <expr>              sample-dependent radical
//   require <expr> == 0 | != 0                inadmissible samples are rejected
//   free <param> ...                          random nonzero automorphism parameters
//   phi <param> = <expr>
//   alt <name>: <param> = <expr> [; <param> = <expr>]
//   source <form>, <form>, ...
//   target <form>, <form>, ...
//   family <v> [exclude <expr>, ...]          target depends linearly on v; v is solved for
//   end
//
// Expressions use the N<k> (catalog cohomology basis) and D<ij> form atoms.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zinbiel/autact.hpp"
#include "zinbiel/expr.hpp"

namespace zinbiel {

/// Base algebra data an orbit case needs.
struct OrbitContext {
  std::string id;
  Algebra algebra;
  std::vector<BilinearForm> nabla;      ///< cohomology basis used for coordinates
  std::vector<std::string> parameters;  ///< automorphism parameter names
  std::vector<Expr> shape;              ///< n*n entries (row-major) in the parameters
};

struct OrbitStatement {
  enum Kind { Sample, Let, Adjoin, Require, Free, Phi } kind;
  std::vector<std::string> names;  // Sample / Free variables; Let / Adjoin / Phi target in names[0]
  Expr expr;
  int degree = 0;                  // Adjoin
  bool require_zero = false;       // Require
};

struct OrbitAlternative {
  std::string name;
  std::vector<std::pair<std::string, Expr>> assignments;
};

struct OrbitCase {
  std::string label;
  std::string base;
  std::vector<std::string> notes;
  std::optional<std::pair<std::string, RationalPolynomial>> field;
  std::vector<OrbitStatement> statements;
  std::vector<OrbitAlternative> alternatives;
  std::vector<Expr> source;
  std::vector<Expr> target;
  std::optional<std::string> family;
  std::vector<Expr> family_excludes;

  /// True when nothing is sampled, so a single evaluation decides the case.
  bool is_fixed() const;
};

std::vector<OrbitCase> parse_orbit_cases(std::string_view text);

struct SampleOutcome {
  enum Status { Pass, Fail, Rejected } status = Rejected;
  std::string detail;
  std::vector<std::string> passing_alternatives;
};

struct OrbitCaseResult {
  std::string label;
  std::string base;
  size_t requested = 0;
  size_t passed = 0;
  size_t failed = 0;
  size_t rejected = 0;
  bool fixed = false;
  bool pass = false;
  std::vector<std::string> alternative_summary;  // "<name>: k/n"
  std::string first_detail;                        // first failing (or first passing) sample
  std::vector<std::string> notes;
};

/// Evaluates the case once with the given random source; never throws for
/// paper-level problems (they come back as Fail / Rejected).
SampleOutcome evaluate_orbit_sample(const OrbitCase& c, const OrbitContext& ctx, std::mt19937_64& rng);

/// Nonzero rational with numerator in [-9, 9] and denominator in [1, 4], drawn from raw engine output.
Rational random_nonzero_rational(std::mt19937_64& rng);

/// Runs `samples` admissible samples (one for fixed cases) with a per-case seed.
OrbitCaseResult verify_orbit_case(const OrbitCase& c, const OrbitContext& ctx, size_t samples, uint64_t seed);

/// FNV-1a, used to derive per-case seeds.
uint64_t fnv1a(std::string_view s);

}  // namespace zinbiel
