#pragma once

// Central extensions A_theta = A + V, the admissibility test for T_s, and the
// reconstruction of a quotient algebra plus cocycles from an algebra with
// nonzero annihilator.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zinbiel/cohomology.hpp"

namespace zinbiel {

struct ExtensionSpec {
  Algebra base;
  std::vector<BilinearForm> cocycles;
};

struct NotACocycle : std::invalid_argument {
  NotACocycle(size_t index, const CocycleWitness& w);
  size_t index;  // 0-based position in the cocycle list
  CocycleWitness witness;
};

struct PreconditionViolated : std::logic_error {
  using std::logic_error::logic_error;
};

/// e_i e_j = (base product) + sum_t theta_t(e_i, e_j) e_{n+t}.
Algebra central_extension(const ExtensionSpec& spec);
/// Same construction without the cocycle check.
Algebra central_extension_unchecked(const ExtensionSpec& spec);

/// Intersection of the radicals of all cocycles with Ann(base).
Subspace common_radical(const ExtensionSpec& spec);
/// Ann(theta) cap Ann(A) = 0 and the classes are independent in H^2.
bool in_T_s(const ExtensionSpec& spec);
bool in_T_s(const ExtensionSpec& spec, const Cohomology& h);
/// Requires common_radical(spec) = 0; true iff the classes are dependent.
bool has_annihilator_component(const ExtensionSpec& spec);

/// Ann of the extension computed directly, after asserting it equals
/// (Ann(theta) cap Ann(A)) + V; throws std::logic_error on disagreement.
Subspace annihilator_of_extension(const ExtensionSpec& spec);
/// Right-hand side of the formula, embedded in the (n+s)-space.
Subspace annihilator_formula(const ExtensionSpec& spec);

struct QuotientResult {
  Algebra quotient;
  std::vector<BilinearForm> cocycles;
  Matrix section;                 ///< columns: chosen complement, then Ann basis
  std::vector<size_t> complement; ///< 0-based standard basis indices kept
};

/// Greedy standard-basis complement of Ann(A); throws "no annihilator" when Ann(A) = 0.
QuotientResult quotient_by_annihilator(const Algebra& a);

/// Extension spec file: `base <path or catalog:ID>` then `cocycle: <form>` lines.
/// The resolver turns the base reference into an algebra.
ExtensionSpec parse_extension_spec(std::string_view text,
                                   const std::function<Algebra(const std::string&)>& resolve_base);

}  // namespace zinbiel
