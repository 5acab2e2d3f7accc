#include "zinbiel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "zinbiel/text.hpp"

namespace zinbiel {

bool ReportRow::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void ReportRow::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
}

bool Report::pass() const {
  return failed_rows() == 0 &&
         std::all_of(families.begin(), families.end(), [](const FingerprintFamily& f) { return f.pass(); });
}

size_t Report::failed_rows() const {
  return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass(); }));
}

namespace {

size_t section_rank(const std::string& s) {
  const auto& all = report_sections();
  auto it = std::find(all.begin(), all.end(), s);
  return static_cast<size_t>(it - all.begin());
}

}  // namespace

void Report::normalize() {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    const size_t ra = section_rank(a.section), rb = section_rank(b.section);
    if (ra != rb) return ra < rb;
    return a.id < b.id;
  });
  std::sort(families.begin(), families.end(),
            [](const FingerprintFamily& a, const FingerprintFamily& b) { return a.family < b.family; });
}

void Report::merge(Report other) {
  for (auto& r : other.rows) rows.push_back(std::move(r));
  for (auto& f : other.families) families.push_back(std::move(f));
}

const std::vector<std::string>& report_sections() {
  static const std::vector<std::string> s{"base", "n1c", "n1", "orbits", "properties"};
  return s;
}

size_t threads_from_environment() {
  if (const char* v = std::getenv("ZINBIEL_EXT_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && n >= 0) return static_cast<size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ReportRow> run_tasks(const std::vector<std::function<ReportRow()>>& tasks, size_t threads) {
  std::vector<ReportRow> out(tasks.size());
  const auto guarded = [&](size_t i) {
    try {
      out[i] = tasks[i]();
    } catch (const std::exception& e) {
      out[i].id = "task " + std::to_string(i);
      out[i].add("completed", false, e.what());
    }
  };
  if (threads <= 1 || tasks.size() <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) guarded(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t t = 0; t < std::min(threads, tasks.size()); ++t)
    pool.emplace_back([&] {
      for (size_t i = next++; i < tasks.size(); i = next++) guarded(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

std::mt19937_64 rng_for(uint64_t seed, const std::string& label) { return std::mt19937_64(seed ^ fnv1a(label)); }

// Small integers, zero included.
Rational random_small(std::mt19937_64& rng, long bound = 3) {
  return Rational(static_cast<long>(rng() % static_cast<uint64_t>(2 * bound + 1)) - bound);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string describe_classes(const Subspace& w) {
  std::vector<std::string> rows;
  for (const auto& v : w.basis()) {
    std::vector<Term> terms;
    for (size_t k = 0; k < v.size(); ++k) terms.push_back({v[k], "N" + std::to_string(k + 1)});
    rows.push_back(format_linear_combination(terms));
  }
  return "<" + join(rows, ", ") + ">";
}

std::string section_of_base(const std::string& base) {
  if (base == "N1C") return "n1c";
  if (base == "N1") return "n1";
  return "base";
}

BilinearForm random_combination(const std::vector<Vector>& basis, size_t n, std::mt19937_64& rng) {
  Vector v = zero_vector(n * n);
  for (const auto& b : basis) {
    const FieldElement c = random_small(rng);
    for (size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
  }
  return unflatten(v, n);
}

// ---------------------------------------------------------------------------
// Base table

ReportRow base_row(const Catalog& cat, const CatalogEntry& e) {
  ReportRow row;
  row.section = "base";
  row.id = e.display_id();
  row.group = e.id;
  const Algebra& a = e.algebra;
  row.fields = {{"Multiplication table", cat.product_summary(e.id)}, {"Cohomology", join(e.nabla, ", ")}};

  const IdentityWitness zw = check_zinbiel(a);
  row.add("zinbiel", zw.holds, zw.holds ? "" : zw.to_string());

  const Nilpotency nil = is_nilpotent(a);
  row.add("nilpotent", nil.nilpotent, "index " + std::to_string(nil.index));

  const Subspace ann = annihilator(a);
  row.fields.push_back({"Ann", ann.to_string()});

  if (a.dim() == 0) {
    row.notes.push_back("zero-dimensional algebra skipped");
    return row;
  }
  const Cohomology automatic(a);
  const auto nabla = cat.nabla(e);
  row.fields.push_back({"dim H2", std::to_string(automatic.dim())});
  row.add("h2_dimension", automatic.dim() == nabla.size(),
          "computed " + std::to_string(automatic.dim()) + ", stated " + std::to_string(nabla.size()));
  const Subspace stated = class_subspace(automatic, nabla);
  const bool spans = stated == Subspace::full(automatic.dim());
  std::string why = spans ? "" : "stated classes span " + std::to_string(stated.dim()) + " dimensions";
  if (spans) {
    try {
      (void)Cohomology(a, nabla);
    } catch (const std::exception& ex) {
      why = ex.what();
    }
  }
  row.add("h2_span", why.empty(), why);
  return row;
}

// Every one-dimensional extension of N2(beta) and N3 by a sampled class is split
// or has an annihilator of dimension at least 2.
ReportRow remark_row(const Catalog& cat, const CatalogEntry& e, uint64_t seed) {
  ReportRow row;
  row.section = "base";
  row.id = e.display_id() + " one-dim extensions";
  row.group = e.id + " one-dim extensions";
  const Algebra& a = e.algebra;
  const auto nabla = cat.nabla(e);
  const Subspace b2 = coboundary_space(a);
  const Cohomology h(a, nabla);
  auto rng = rng_for(seed, row.id);

  std::vector<BilinearForm> samples = nabla;
  std::vector<Vector> flat;
  for (const auto& f : nabla) flat.push_back(flatten(f));
  while (samples.size() < nabla.size() + 20) {
    BilinearForm f = random_combination(flat, a.dim(), rng);
    if (class_subspace(h, {f}).is_zero()) continue;
    const BilinearForm shift = random_combination(b2.basis(), a.dim(), rng);
    samples.push_back(f + shift);
  }
  size_t ok = 0;
  size_t min_ann = a.dim() + 2;
  std::string first_bad;
  for (const auto& theta : samples) {
    const ExtensionSpec spec{a, {theta}};
    const size_t d = annihilator(central_extension(spec)).dim();
    min_ann = std::min(min_ann, d);
    const bool split = common_radical(spec).is_zero() && has_annihilator_component(spec);
    if (d >= 2 || split) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = format_form(theta);
    }
  }
  row.fields = {{"Cocycles", std::to_string(samples.size())}, {"min dim Ann", std::to_string(min_ann)}};
  row.add("split_or_enlarged_annihilator", ok == samples.size(),
          std::to_string(ok) + "/" + std::to_string(samples.size()) + (first_bad.empty() ? "" : ", fails at " + first_bad));
  return row;
}

// ---------------------------------------------------------------------------
// Theorem entries

ReportRow theorem_row(const Catalog& cat, const CatalogEntry& e) {
  ReportRow row;
  row.section = section_of_base(e.base);
  row.id = e.display_id();
  row.group = e.id;
  const size_t s = e.extension_dim();
  row.fields = {{"Multiplication table", cat.product_summary(e.id)}, {"s", std::to_string(s)}, {"Class subspace", "-"}};

  const IdentityWitness zw = check_zinbiel(e.algebra);
  row.add("zinbiel", zw.holds, zw.holds ? "" : zw.to_string());

  const CatalogEntry base = cat.lookup(e.base);
  const Subspace ann = annihilator(e.algebra);
  row.add("annihilator_dimension", ann.dim() == s, "dim Ann = " + std::to_string(ann.dim()));

  const ExtensionSpec& spec = *e.extension_of;
  row.add("reconstruction", central_extension_unchecked(spec) == e.algebra);

  QuotientResult q;
  try {
    q = quotient_by_annihilator(e.algebra);
  } catch (const std::exception& ex) {
    row.add("quotient", false, ex.what());
    return row;
  }
  const bool same_base = q.quotient == base.algebra;
  row.add("quotient", same_base, same_base ? "" : "quotient " + describe_products(q.quotient));
  if (!same_base || q.cocycles.size() != s) return row;

  const Cohomology h(base.algebra, cat.nabla(base));
  const ExtensionSpec recovered{base.algebra, q.cocycles};
  const Subspace classes = class_subspace(h, q.cocycles);
  row.add("classes_independent", classes.dim() == s, "rank " + std::to_string(classes.dim()));
  const Subspace rad = common_radical(recovered);
  row.add("radical_trivial", rad.is_zero(), rad.is_zero() ? "" : rad.to_string());
  row.add("in_T_s", in_T_s(recovered, h));

  const Subspace claimed = class_subspace(h, cat.representative_forms(e));
  row.fields[2].second = describe_classes(classes);
  row.add("representative", classes == claimed,
          classes == claimed ? "" : "table gives " + describe_classes(classes) + ", listed " + describe_classes(claimed));

  const Subspace direct = annihilator(central_extension_unchecked(spec));
  const Subspace formula = annihilator_formula(spec);
  row.add("annihilator_formula", direct == formula,
          direct == formula ? "" : "direct " + direct.to_string() + ", formula " + formula.to_string());
  return row;
}

std::vector<FingerprintFamily> fingerprint_families(const std::vector<CatalogEntry>& entries,
                                                    const std::string& base) {
  std::map<size_t, std::map<std::string, std::vector<std::vector<long>>>> by_dim;
  for (const auto& e : entries) by_dim[e.extension_dim()][e.id].push_back(fingerprint(e.algebra));
  std::vector<FingerprintFamily> out;
  for (const auto& [s, members] : by_dim) {
    FingerprintFamily f;
    f.family = "[" + base + "]^" + std::to_string(s);
    for (const auto& [id, fps] : members) f.members.push_back(id);
    for (auto i = members.begin(); i != members.end(); ++i)
      for (auto j = std::next(i); j != members.end(); ++j) {
        ++f.pairs;
        bool separated = true;
        for (const auto& a : i->second)
          for (const auto& b : j->second)
            if (a == b) separated = false;
        if (separated)
          ++f.separated;
        else
          f.unseparated.push_back({i->first, j->first});
      }
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbit recipes and auxiliary identities

ReportRow orbit_row(const OrbitCase& c, const OrbitContext& ctx, const VerifyOptions& opt) {
  const OrbitCaseResult r = verify_orbit_case(c, ctx, opt.samples, opt.seed);
  ReportRow row;
  row.section = "orbits";
  row.id = r.label;
  row.fields = {{"Base", r.base},
                {"Samples", std::to_string(r.passed) + "/" + std::to_string(r.requested)},
                {"Rejected", std::to_string(r.rejected)}};
  row.fields.push_back({"Alternatives", r.alternative_summary.empty() ? "-" : join(r.alternative_summary, "; ")});
  row.add("recipe", r.pass, r.pass ? "" : r.first_detail);
  row.notes = r.notes;
  return row;
}

ReportRow cubic_row() {
  ReportRow row;
  row.section = "orbits";
  row.id = "aux.cubic-reduction";
  for (const Rational& k : {Rational(2), Rational(1, 2), Rational(-3), Rational(3, 4), Rational(5)}) {
    const FieldElement kk(k);
    const FieldElement q = (kk * kk * kk - FieldElement(3) * kk) / (FieldElement(3) * kk * kk - FieldElement(1));
    for (const Rational& a1 : {Rational(1), Rational(-2)}) {
      const CubicCheck c = check_cubic_reduction(q, kk, FieldElement(a1));
      row.add("k=" + k.to_string() + ",a1=" + a1.to_string(), c.satisfies && !c.degenerate && c.system_holds,
              "q=" + q.to_string() + ": " + c.to_string());
    }
  }
  const FieldRef qi = NumberField::create(RationalPolynomial({Rational(1), Rational(0), Rational(1)}), "i");
  const FieldElement i = FieldElement::generator(qi);
  for (int sign : {1, -1}) {
    const FieldElement q = FieldElement(sign) * i;
    const CubicCheck c = check_cubic_reduction(q, q);
    row.add(std::string("q=k=") + (sign > 0 ? "i" : "-i"), c.satisfies && c.degenerate, c.to_string());
    // (k - q)^3 vanishes only at k = q.
    const CubicCheck other = check_cubic_reduction(q, -q);
    row.add(std::string("q=") + (sign > 0 ? "i" : "-i") + ",k=-q", !other.satisfies, other.to_string());
  }
  row.fields = {{"Constructed pairs", std::to_string(row.checks.size())}};
  return row;
}

ReportRow second_reduction_row() {
  ReportRow row;
  row.section = "orbits";
  row.id = "aux.second-reduction";
  const std::vector<std::pair<Rational, Rational>> picks{
      {Rational(2), Rational(1)}, {Rational(1, 2), Rational(2)}, {Rational(-2), Rational(-1)}, {Rational(1, 3), Rational(3)}};
  for (const auto& [k, a2] : picks) {
    const FieldElement kk(k), b(a2);
    const FieldElement w = (FieldElement(1) + kk * kk) / ((FieldElement(3) - kk * kk) * kk);
    const FieldElement y = kk * w;
    const FieldElement d = w * w - FieldElement(3) * y * y;
    const FieldElement s = w * w + y * y;
    const FieldElement a1 = s * s * s * b * b / (FieldElement(4) * d * d * w * w);
    const SecondReductionCheck c = check_second_reduction(a1, b, y, w);
    row.add("k=" + k.to_string() + ",a2=" + a2.to_string(), c.system_holds && c.nondegenerate,
            "a1=" + a1.to_string() + ": " + c.to_string());
  }
  row.fields = {{"Constructed solutions", std::to_string(row.checks.size())}};
  return row;
}

struct ClosedForm {
  std::string base;
  std::vector<std::string> alpha_star;
};

const std::vector<ClosedForm>& closed_forms() {
  static const std::vector<ClosedForm> forms{
      {"N1C",
       {"x^3 a1", "t x a1 + x y a2 + u y a4", "2 t x a1 + x y a3 + u y a4", "y^2 a4"}},
      {"N1",
       {"a1 x^2 + (a2 x + a3 z) z + (a4 x + a5 z) t",
        "a1 x y + (a2 x + a3 z) w + (a4 x + a5 z) p + a1 x y + (a2 y + a3 w) z + (a4 y + a5 w) t",
        "a1 y^2 + (a2 y + a3 w) w + (a4 y + a5 w) p", "(a4 x + a5 z)(w x - y z)", "(a4 y + a5 w)(w x - y z)"}},
  };
  return forms;
}

ReportRow closed_form_row(const Catalog& cat, const ClosedForm& cf, uint64_t seed) {
  ReportRow row;
  row.section = "orbits";
  row.id = "aux.alpha-star." + cf.base;
  const OrbitContext ctx = cat.orbit_context(cf.base);
  const Cohomology h(ctx.algebra, ctx.nabla);
  std::vector<Expr> exprs;
  for (const auto& s : cf.alpha_star) exprs.push_back(Expr::parse(s));
  auto rng = rng_for(seed, row.id);
  const size_t n = ctx.algebra.dim();

  size_t tuples = 0, agree = 0, attempts = 0;
  std::string first_bad;
  while (tuples < 25 && attempts < 1000) {
    ++attempts;
    std::map<std::string, FieldElement> vars;
    for (const auto& p : ctx.parameters) vars[p] = FieldElement(random_nonzero_rational(rng));
    for (size_t k = 0; k < ctx.nabla.size(); ++k) vars["a" + std::to_string(k + 1)] = FieldElement(random_small(rng));
    const Resolver resolve = [&](const std::string& name) -> std::optional<Value> {
      auto it = vars.find(name);
      if (it == vars.end()) return std::nullopt;
      return Value::of(it->second);
    };
    Matrix phi(n, n);
    for (size_t i = 0; i < n * n; ++i) phi(i / n, i % n) = ctx.shape[i].evaluate_scalar(resolve);
    if (determinant(phi).is_zero()) continue;
    ++tuples;
    BilinearForm theta(n, n);
    for (size_t k = 0; k < ctx.nabla.size(); ++k) {
      const FieldElement& c = vars["a" + std::to_string(k + 1)];
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) theta(i, j) += c * ctx.nabla[k](i, j);
    }
    const Vector got = h.class_coordinates(act_on_cocycle(ctx.algebra, phi, theta));
    bool same = true;
    for (size_t k = 0; k < exprs.size(); ++k)
      if (!(got[k] == exprs[k].evaluate_scalar(resolve))) same = false;
    if (same) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = "phi=" + phi.to_string() + ", coordinates " + to_string(got);
    }
  }
  row.fields = {{"Tuples", std::to_string(tuples)}};
  row.add("closed_forms", tuples == 25 && agree == tuples,
          std::to_string(agree) + "/" + std::to_string(tuples) + (first_bad.empty() ? "" : ", " + first_bad));
  return row;
}

// ---------------------------------------------------------------------------
// Randomized properties

ReportRow annihilator_property_row(const CatalogEntry& e, uint64_t seed) {
  ReportRow row;
  row.section = "properties";
  row.id = "annihilator-formula." + e.display_id();
  row.group = "annihilator-formula." + e.id;
  const Algebra& a = e.algebra;
  const Subspace z2 = cocycle_space(a);
  auto rng = rng_for(seed, row.id);
  size_t agree = 0;
  const size_t total = 100;
  std::string first_bad;
  for (size_t trial = 0; trial < total; ++trial) {
    const size_t s = 1 + rng() % 3;
    ExtensionSpec spec{a, {}};
    for (size_t t = 0; t < s; ++t) spec.cocycles.push_back(random_combination(z2.basis(), a.dim(), rng));
    const Subspace direct = annihilator(central_extension(spec));
    const Subspace formula = annihilator_formula(spec);
    if (direct == formula)
      ++agree;
    else if (first_bad.empty())
      first_bad = "direct " + direct.to_string() + ", formula " + formula.to_string();
  }
  row.fields = {{"Specs", std::to_string(total)}};
  row.add("annihilator_formula", agree == total,
          std::to_string(agree) + "/" + std::to_string(total) + (first_bad.empty() ? "" : ", " + first_bad));
  return row;
}

ReportRow extension_iff_cocycle_row(const CatalogEntry& e, uint64_t seed) {
  ReportRow row;
  row.section = "properties";
  row.id = "extension-iff-cocycle." + e.display_id();
  row.group = "extension-iff-cocycle." + e.id;
  const Algebra& a = e.algebra;
  const size_t n = a.dim();
  const Subspace z2 = cocycle_space(a);
  auto rng = rng_for(seed, row.id);
  const size_t total = 200;
  size_t agree = 0, cocycles = 0;
  std::string first_bad;
  for (size_t trial = 0; trial < total; ++trial) {
    BilinearForm theta(n, n);
    if (trial % 2 == 0) {
      theta = random_combination(z2.basis(), n, rng);
    } else {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) theta(i, j) = random_small(rng);
    }
    const bool cocycle = is_cocycle(a, theta);
    cocycles += cocycle;
    const bool zinbiel = check_zinbiel(central_extension_unchecked({a, {theta}})).holds;
    if (cocycle == zinbiel)
      ++agree;
    else if (first_bad.empty())
      first_bad = format_form(theta);
  }
  row.fields = {{"Forms", std::to_string(total)}, {"Cocycles", std::to_string(cocycles)}};
  row.add("extension_iff_cocycle", agree == total,
          std::to_string(agree) + "/" + std::to_string(total) + (first_bad.empty() ? "" : ", disagrees at " + first_bad));
  row.add("both_directions_exercised", cocycles > 0 && cocycles < total,
          std::to_string(cocycles) + " cocycles");
  return row;
}

std::vector<CatalogEntry> base_instances(const Catalog& cat, const VerifyOptions& opt) {
  std::vector<CatalogEntry> out;
  for (const auto& e : cat.instances(opt.parameter_samples))
    if (e.is_base()) out.push_back(e);
  return out;
}

Report make_report(const std::string& section, const VerifyOptions& opt, std::vector<ReportRow> rows) {
  Report r;
  r.section = section;
  r.options = opt;
  r.rows = std::move(rows);
  return r;
}

}  // namespace

Report verify_base_table(const Catalog& cat, const VerifyOptions& opt) {
  std::vector<std::function<ReportRow()>> tasks;
  for (const auto& e : base_instances(cat, opt)) {
    tasks.push_back([&cat, e] { return base_row(cat, e); });
    if (e.id == "N2" || e.id == "N3") tasks.push_back([&cat, e, seed = opt.seed] { return remark_row(cat, e, seed); });
  }
  Report r = make_report("base", opt, run_tasks(tasks, opt.threads));
  r.normalize();
  return r;
}

Report verify_theorems(const Catalog& cat, const std::string& base, const VerifyOptions& opt) {
  std::vector<CatalogEntry> entries;
  for (const auto& e : cat.instances(opt.parameter_samples))
    if (e.base == base) entries.push_back(e);
  std::vector<std::function<ReportRow()>> tasks;
  for (const auto& e : entries) tasks.push_back([&cat, e] { return theorem_row(cat, e); });
  Report r = make_report(section_of_base(base), opt, run_tasks(tasks, opt.threads));
  r.families = fingerprint_families(entries, base);
  r.normalize();
  return r;
}

Report verify_orbit_recipes(const Catalog& cat, const VerifyOptions& opt) {
  if (opt.samples == 0) throw std::invalid_argument("samples per case must be at least 1");
  std::map<std::string, OrbitContext> contexts;
  for (const auto& c : cat.orbit_cases())
    if (!contexts.count(c.base)) contexts.emplace(c.base, cat.orbit_context(c.base));
  std::vector<std::function<ReportRow()>> tasks;
  for (const auto& c : cat.orbit_cases())
    tasks.push_back([&c, &ctx = contexts.at(c.base), &opt] { return orbit_row(c, ctx, opt); });
  tasks.push_back([] { return cubic_row(); });
  tasks.push_back([] { return second_reduction_row(); });
  for (const auto& cf : closed_forms()) tasks.push_back([&cat, &cf, &opt] { return closed_form_row(cat, cf, opt.seed); });
  Report r = make_report("orbits", opt, run_tasks(tasks, opt.threads));
  r.normalize();
  return r;
}

Report verify_properties(const Catalog& cat, const VerifyOptions& opt) {
  std::vector<std::function<ReportRow()>> tasks;
  for (const auto& e : base_instances(cat, opt)) {
    tasks.push_back([e, seed = opt.seed] { return annihilator_property_row(e, seed); });
    tasks.push_back([e, seed = opt.seed] { return extension_iff_cocycle_row(e, seed); });
  }
  Report r = make_report("properties", opt, run_tasks(tasks, opt.threads));
  r.normalize();
  return r;
}

Report verify_paper(const Catalog& cat, const std::string& section, const VerifyOptions& opt) {
  const auto& known = report_sections();
  if (section != "all" && std::find(known.begin(), known.end(), section) == known.end())
    throw std::invalid_argument("unknown section '" + section + "' (expected base, n1c, n1, orbits, properties or all)");
  Report out = make_report(section, opt, {});
  const auto want = [&](const char* s) { return section == "all" || section == s; };
  if (want("base")) {
    out.merge(verify_base_table(cat, opt));
    out.merge(verify_theorems(cat, "Z1", opt));
  }
  if (want("n1c")) out.merge(verify_theorems(cat, "N1C", opt));
  if (want("n1")) out.merge(verify_theorems(cat, "N1", opt));
  if (want("orbits")) out.merge(verify_orbit_recipes(cat, opt));
  if (want("properties")) out.merge(verify_properties(cat, opt));
  out.normalize();
  return out;
}

}  // namespace zinbiel
