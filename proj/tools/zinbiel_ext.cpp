// zinbiel-ext: command line front end for the algebra engine and the
// verification harness. Exit codes: 0 pass, 1 discrepancy, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "zinbiel/catalog.hpp"
#include "zinbiel/extensions.hpp"
#include "zinbiel/harness.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/text.hpp"

namespace fs = std::filesystem;
using namespace zinbiel;

namespace {

constexpr int kPass = 0;
constexpr int kDiscrepancy = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `catalog:ID` or `catalog:ID(value)` selects a catalog entry; anything else is a file.
Algebra resolve_algebra(const std::string& ref) {
  if (ref.starts_with("catalog:")) return Catalog::embedded().lookup_text(ref.substr(8)).algebra;
  if (!fs::exists(ref)) throw InputError("no such file: " + ref);
  return load_algebra_file(ref);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<BilinearForm> parse_forms(const std::vector<std::string>& texts, const Algebra& a) {
  std::vector<BilinearForm> out;
  for (const auto& t : texts) out.push_back(parse_form(t, a.dim(), a.field()));
  return out;
}

std::string slug(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (c == '/') out += "over";
    else if (c == '-') out += "m";
    else if (!out.empty() && out.back() != '_') out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

int cmd_check(const std::string& ref) {
  const Algebra a = resolve_algebra(ref);
  const IdentityWitness w = check_zinbiel(a);
  std::cout << "dimension: " << a.dim() << "\n";
  std::cout << "zinbiel: " << (w.holds ? "yes" : "no, " + w.to_string()) << "\n";
  const Nilpotency nil = is_nilpotent(a);
  std::cout << "nilpotent: " << (nil.nilpotent ? "yes, index " + std::to_string(nil.index) : "no") << "\n";
  std::cout << "annihilator: " << annihilator(a).to_string() << "\n";
  return w.holds ? kPass : kDiscrepancy;
}

int cmd_cohomology(const std::string& ref, bool basis) {
  const Algebra a = resolve_algebra(ref);
  const Cohomology h(a);
  std::cout << "dim Z2 = " << h.cocycles().dim() << "\n";
  std::cout << "dim B2 = " << h.coboundaries().dim() << "\n";
  std::cout << "dim H2 = " << h.dim() << "\n";
  if (basis)
    for (size_t k = 0; k < h.dim(); ++k) std::cout << "N" << k + 1 << " = " << format_form(h.representatives()[k]) << "\n";
  return kPass;
}

int cmd_extend(const std::string& ref, const std::vector<std::string>& cocycles, const std::string& out) {
  const Algebra a = resolve_algebra(ref);
  ExtensionSpec spec{a, parse_forms(cocycles, a)};
  try {
    Algebra ext = central_extension(spec);
    write_output(format_algebra(ext), out);
  } catch (const NotACocycle& e) {
    std::cerr << "cocycle " << e.index + 1 << " is not a cocycle: " << e.witness.to_string() << "\n";
    return kDiscrepancy;
  }
  return kPass;
}

int cmd_act(const std::string& ref, const std::string& phi_path, const std::string& cocycle) {
  const Algebra a = resolve_algebra(ref);
  if (!fs::exists(phi_path)) throw InputError("no such file: " + phi_path);
  const Matrix phi = Matrix::parse(read_text_file(phi_path), a.field());
  if (phi.rows() != a.dim() || phi.cols() != a.dim()) throw InputError("phi must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()));
  const BilinearForm theta = parse_form(cocycle, a.dim(), a.field());
  const AutomorphismWitness w = is_automorphism(a, phi);
  if (!w.holds) {
    std::cerr << "not an automorphism: " << w.to_string() << "\n";
    return kDiscrepancy;
  }
  const BilinearForm image = act(phi, theta);
  std::cout << "image: " << format_form(image) << "\n";
  if (is_cocycle(a, theta)) {
    const Cohomology h(a);
    std::cout << "class coordinates: " << to_string(h.class_coordinates(theta)) << " -> "
              << to_string(h.class_coordinates(image)) << "\n";
  }
  return kPass;
}

std::vector<Rational> parse_params(const std::string& text) {
  std::vector<Rational> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(Rational::parse(trim(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (out.empty()) throw InputError("--params needs at least one value");
  return out;
}

int cmd_verify(const std::string& section, size_t samples, uint64_t seed, const std::string& format,
               const std::string& params, const std::string& out) {
  if (samples == 0) throw InputError("--samples must be at least 1");
  VerifyOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.threads = threads_from_environment();
  if (!params.empty()) opt.parameter_samples = parse_params(params);
  const ReportFormat fmt = parse_report_format(format);
  const Report report = verify_paper(Catalog::embedded(), section, opt);
  write_output(emit_report(report, fmt), out);
  return report.pass() ? kPass : kDiscrepancy;
}

int cmd_catalog_list() {
  const Catalog& cat = Catalog::embedded();
  for (const auto& id : cat.ids()) {
    const CatalogEntry& e = cat.entry_template(id);
    std::cout << id;
    if (!e.parameters.empty()) std::cout << "(" << e.parameters.front() << ")";
    std::cout << "\t" << (e.is_base() ? "base" : "extension of " + e.base) << "\t" << e.source << "\n";
  }
  return kPass;
}

int cmd_catalog_show(const std::string& text) {
  const Catalog& cat = Catalog::embedded();
  const std::string id = trim(text);
  if (cat.contains(id) && !cat.entry_template(id).parameters.empty()) {
    // Parametric entry without a value: show the symbolic table.
    const CatalogEntry& t = cat.entry_template(id);
    std::cout << "id: " << id << "(" << t.parameters.front() << ")\n";
    std::cout << "source: " << t.source << "\n";
    for (const auto& n : t.notes) std::cout << "note: " << n << "\n";
    std::cout << "products: " << cat.product_summary(id) << "\n";
    std::cout << "pass a value, e.g. '" << id << "(1)', for the full entry\n";
    return kPass;
  }
  const CatalogEntry e = cat.lookup_text(id);
  std::cout << "id: " << e.display_id() << "\n";
  if (!e.is_base()) std::cout << "base: " << e.base << "\n";
  std::cout << "source: " << e.source << "\n";
  for (const auto& n : e.notes) std::cout << "note: " << n << "\n";
  std::cout << "products: " << describe_products(e.algebra) << "\n";
  if (e.is_base()) {
    std::cout << "cohomology: " << (e.nabla.empty() ? "-" : "") << "\n";
    for (size_t k = 0; k < e.nabla.size(); ++k) std::cout << "  N" << k + 1 << " = " << e.nabla[k] << "\n";
    if (!e.automorphism_shape.empty()) {
      std::cout << "automorphisms (";
      for (size_t i = 0; i < e.automorphism_parameters.size(); ++i)
        std::cout << (i ? " " : "") << e.automorphism_parameters[i];
      std::cout << "):\n";
      const size_t n = e.algebra.dim();
      for (size_t r = 0; r < n; ++r) {
        std::cout << "  ";
        for (size_t c = 0; c < n; ++c) std::cout << (c ? ", " : "") << e.automorphism_shape[r * n + c];
        std::cout << "\n";
      }
    }
    for (const auto& [name, forms] : e.orbit_lists) {
      std::cout << "orbit " << name << ": <";
      for (size_t i = 0; i < forms.size(); ++i) std::cout << (i ? ", " : "") << forms[i];
      std::cout << ">\n";
    }
  } else {
    std::cout << "representative: ";
    for (size_t i = 0; i < e.representative.size(); ++i) std::cout << (i ? ", " : "") << e.representative[i];
    std::cout << "\n";
    for (size_t t = 0; t < e.extension_of->cocycles.size(); ++t)
      std::cout << "theta" << t + 1 << " = " << format_form(e.extension_of->cocycles[t]) << "\n";
  }
  std::cout << "\n" << format_algebra(e.algebra);
  return kPass;
}

int cmd_catalog_export(const std::string& dir) {
  const Catalog& cat = Catalog::embedded();
  fs::create_directories(dir);
  size_t count = 0;
  for (const auto& e : cat.instances(default_parameter_samples())) {
    std::string name = slug(e.id);
    for (const auto& [p, v] : e.values) name += "_" + p + "_" + slug(v.to_string());
    std::ofstream out(fs::path(dir) / (name + ".alg"));
    if (!out) throw InputError("cannot write into " + dir);
    out << format_algebra(e.algebra);
    ++count;
  }
  std::ofstream(fs::path(dir) / "algebras.txt") << Catalog::algebra_text();
  for (const auto& [file, text] : Catalog::orbit_texts()) std::ofstream(fs::path(dir) / file) << text;
  std::cout << "wrote " << count << " algebra files to " << dir << "\n";
  return kPass;
}

int cmd_fingerprint(const std::string& ref) {
  const Algebra a = resolve_algebra(ref);
  const auto fp = fingerprint(a);
  std::cout << "layout: " << fingerprint_layout(a.dim()) << "\n";
  std::cout << "values:";
  for (long v : fp) std::cout << ' ' << v;
  std::cout << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central extensions of Zinbiel algebras: exact computation and verification"};
  app.require_subcommand(1);

  std::string algebra, out, phi, cocycle, section = "all", format = "json", params, id, dir;
  std::vector<std::string> cocycles;
  bool basis = false;
  size_t samples = 5;
  uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Check the Zinbiel identity on all basis triples");
  check->add_option("algebra", algebra, "algebra file or catalog:ID")->required();

  auto* coh = app.add_subcommand("cohomology", "Dimensions of Z2, B2, H2");
  coh->add_option("algebra", algebra, "algebra file or catalog:ID")->required();
  coh->add_flag("--basis", basis, "print representatives of an H2 basis");

  auto* ext = app.add_subcommand("extend", "Central extension by cocycles");
  ext->add_option("algebra", algebra, "algebra file or catalog:ID")->required();
  ext->add_option("--cocycle", cocycles, "form such as '1 D12 + 2 D21'")->required();
  ext->add_option("-o,--output", out, "output file (default stdout)");

  auto* actc = app.add_subcommand("act", "Apply an automorphism to a cocycle");
  actc->add_option("algebra", algebra, "algebra file or catalog:ID")->required();
  actc->add_option("--phi", phi, "matrix file; columns are images of basis vectors")->required();
  actc->add_option("--cocycle", cocycle, "form")->required();

  auto* verify = app.add_subcommand("verify", "Reproduce the tables, theorems and orbit recipes");
  auto* paper = verify->add_subcommand("paper", "Run the verification suites");
  verify->require_subcommand(1);
  paper->add_option("--section", section, "base|n1c|n1|orbits|properties|all")
      ->check(CLI::IsMember({"base", "n1c", "n1", "orbits", "properties", "all"}));
  paper->add_option("--samples", samples, "admissible samples per orbit recipe");
  paper->add_option("--seed", seed, "random seed");
  paper->add_option("--format", format, "json|csv|markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
  paper->add_option("--params", params, "parameter samples, e.g. 0,1,-1,2,1/2");
  paper->add_option("-o,--output", out, "output file (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "Inspect the embedded catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries");
  auto* show = catalog->add_subcommand("show", "Show one entry");
  show->add_option("id", id, "entry id, e.g. N1, [N1]^2_03 or N2(1)")->required();
  auto* exp = catalog->add_subcommand("export", "Write the catalog as algebra files");
  exp->add_option("--dir", dir, "target directory")->required();

  auto* fpc = app.add_subcommand("fingerprint", "Isomorphism invariants");
  fpc->add_option("algebra", algebra, "algebra file or catalog:ID")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(algebra);
    if (*coh) return cmd_cohomology(algebra, basis);
    if (*ext) return cmd_extend(algebra, cocycles, out);
    if (*actc) return cmd_act(algebra, phi, cocycle);
    if (*paper) return cmd_verify(section, samples, seed, format, params, out);
    if (*list) return cmd_catalog_list();
    if (*show) return cmd_catalog_show(id);
    if (*exp) return cmd_catalog_export(dir);
    if (*fpc) return cmd_fingerprint(algebra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
