#pragma once

// Verification suites over the embedded catalog. Every check becomes a report
// row; nothing aborts a run.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/catalog.hpp"

namespace zinbiel {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ReportRow {
  std::string section;  ///< base, n1c, n1, orbits, properties
  std::string id;       ///< entry display id, recipe label or property name
  std::string group;    ///< rows sharing a group collapse to one markdown line
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const;
  void add(std::string name, bool ok, std::string witness = {});
};

/// Pairwise fingerprint comparison inside one theorem family, e.g. `[N1]^2`.
struct FingerprintFamily {
  std::string family;
  std::vector<std::string> members;
  size_t pairs = 0;
  size_t separated = 0;
  std::vector<std::pair<std::string, std::string>> unseparated;

  /// At least 80% of pairs separated (vacuous for fewer than two members).
  bool pass() const { return pairs == 0 || separated * 5 >= pairs * 4; }
};

struct VerifyOptions {
  size_t samples = 5;
  uint64_t seed = 1;
  std::vector<Rational> parameter_samples = default_parameter_samples();
  /// 0 runs serially.
  size_t threads = 0;
};

struct Report {
  std::string section = "all";
  VerifyOptions options;
  std::vector<ReportRow> rows;
  std::vector<FingerprintFamily> families;

  bool pass() const;
  size_t failed_rows() const;
  /// Orders rows by (section, id) and families by name.
  void normalize();
  void merge(Report other);
};

/// Worker count from ZINBIEL_EXT_THREADS; unset means hardware concurrency.
size_t threads_from_environment();

/// Runs tasks on at most `threads` workers; results keep the task order.
std::vector<ReportRow> run_tasks(const std::vector<std::function<ReportRow()>>& tasks, size_t threads);

Report verify_base_table(const Catalog& cat, const VerifyOptions& opt);
/// Listed extensions of `base` (Z1, N1C or N1) plus their fingerprint families.
Report verify_theorems(const Catalog& cat, const std::string& base, const VerifyOptions& opt);
Report verify_orbit_recipes(const Catalog& cat, const VerifyOptions& opt);
/// Randomized annihilator-formula and extension-iff-cocycle checks per base algebra.
Report verify_properties(const Catalog& cat, const VerifyOptions& opt);

/// `base`, `n1c`, `n1`, `orbits`, `properties` or `all`; throws std::invalid_argument otherwise.
Report verify_paper(const Catalog& cat, const std::string& section, const VerifyOptions& opt);

const std::vector<std::string>& report_sections();

}  // namespace zinbiel
