#pragma once

// Embedded dataset: base algebras with their cohomology bases and
// automorphism shapes, the listed central extensions, named orbit
// representatives and the orbit recipes.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/extensions.hpp"
#include "zinbiel/orbit.hpp"

namespace zinbiel {

struct CatalogEntry {
  std::string id;
  std::string base;  ///< empty for base algebras
  std::string source;
  std::vector<std::string> notes;
  std::vector<std::string> parameters;
  std::map<std::string, Rational> values;  ///< filled in by Catalog::lookup
  Algebra algebra;

  /// Extensions: the claimed class subspace, as forms in N<k> or one orbit-list name.
  std::vector<std::string> representative;
  /// Extensions: base algebra plus the cocycles read off the table.
  std::optional<ExtensionSpec> extension_of;

  // Base algebras only.
  std::vector<std::string> nabla;
  std::vector<std::string> automorphism_parameters;
  std::vector<std::string> automorphism_shape;  ///< n*n expressions, row-major
  std::vector<std::pair<std::string, std::vector<std::string>>> orbit_lists;

  bool is_base() const { return base.empty(); }
  size_t extension_dim() const;
  /// `id` followed by the parameter values, e.g. `[N1C]^2_02(1/2)`.
  std::string display_id() const;
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Catalog {
 public:
  /// The dataset compiled into the library (parsed and validated once).
  static const Catalog& embedded();
  /// Throws CatalogError naming the offending entry.
  static Catalog parse(std::string_view algebras, const std::vector<std::string_view>& orbit_texts);

  /// All ids, sorted.
  std::vector<std::string> ids() const;
  bool contains(const std::string& id) const { return templates_.count(id) != 0; }
  /// Entry as stored: parameters unsubstituted, algebra not built.
  const CatalogEntry& entry_template(const std::string& id) const;
  /// Entry with its parameters substituted; throws CatalogError on an unknown
  /// id or a missing parameter value.
  CatalogEntry lookup(const std::string& id, const std::map<std::string, Rational>& values = {}) const;
  /// Accepts `N2(1)` / `[N1C]^2_02(-1/2)` as shorthand for a one-parameter lookup.
  CatalogEntry lookup_text(const std::string& text) const;

  /// Every entry; parametric ones instantiated at each of `samples`.
  std::vector<CatalogEntry> instances(const std::vector<Rational>& samples) const;

  /// Products of the table as written, parameters left symbolic: `e1e1=e3, e1e2=beta e3`.
  std::string product_summary(const std::string& id) const;

  std::vector<BilinearForm> nabla(const CatalogEntry& base) const;
  /// Forms of a named orbit representative (`O3`, `P10`, ...) of a base.
  std::optional<std::vector<BilinearForm>> orbit_list(const std::string& base, const std::string& name) const;
  /// The claimed class subspace of an extension entry, as cocycles of its base.
  std::vector<BilinearForm> representative_forms(const CatalogEntry& e) const;

  OrbitContext orbit_context(const std::string& base) const;
  const std::vector<OrbitCase>& orbit_cases() const { return cases_; }

  /// Raw embedded texts (for export).
  static std::string_view algebra_text();
  static std::vector<std::pair<std::string, std::string_view>> orbit_texts();

 private:
  std::map<std::string, CatalogEntry> templates_;       // algebra not built yet
  std::map<std::string, std::string> table_templates_;  // multiplication table with {param}
  std::vector<OrbitCase> cases_;
};

/// Sample values for parametric entries: 0, 1, -1, 2, 1/2.
const std::vector<Rational>& default_parameter_samples();

}  // namespace zinbiel
