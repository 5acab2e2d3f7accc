#include "zinbiel/extensions.hpp"

#include "zinbiel/text.hpp"

namespace zinbiel {

NotACocycle::NotACocycle(size_t idx, const CocycleWitness& w)
    : std::invalid_argument("cocycle #" + std::to_string(idx + 1) + ": " + w.to_string()), index(idx), witness(w) {}

Algebra central_extension_unchecked(const ExtensionSpec& spec) {
  const size_t n = spec.base.dim();
  const size_t s = spec.cocycles.size();
  Algebra out(n + s, spec.base.name());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) out.c(i, j, k) = spec.base.c(i, j, k);
      for (size_t t = 0; t < s; ++t) out.c(i, j, n + t) = spec.cocycles[t](i, j);
    }
  return out;
}

Algebra central_extension(const ExtensionSpec& spec) {
  for (size_t t = 0; t < spec.cocycles.size(); ++t) {
    const CocycleWitness w = check_cocycle(spec.base, spec.cocycles[t]);
    if (!w.holds) throw NotACocycle(t, w);
  }
  return central_extension_unchecked(spec);
}

Subspace common_radical(const ExtensionSpec& spec) {
  Subspace acc = annihilator(spec.base);
  for (const auto& theta : spec.cocycles) acc = subspace_intersect(acc, radical(theta));
  return acc;
}

bool in_T_s(const ExtensionSpec& spec, const Cohomology& h) {
  if (!common_radical(spec).is_zero()) return false;
  return class_subspace(h, spec.cocycles).dim() == spec.cocycles.size();
}

bool in_T_s(const ExtensionSpec& spec) { return in_T_s(spec, Cohomology(spec.base)); }

bool has_annihilator_component(const ExtensionSpec& spec) {
  if (!common_radical(spec).is_zero())
    throw PreconditionViolated("Ann(theta) cap Ann(A) is nonzero; annihilator-component criterion does not apply");
  const Cohomology h(spec.base);
  return class_subspace(h, spec.cocycles).dim() < spec.cocycles.size();
}

Subspace annihilator_formula(const ExtensionSpec& spec) {
  const size_t n = spec.base.dim();
  const size_t s = spec.cocycles.size();
  std::vector<Vector> gens;
  const Subspace rad = common_radical(spec);
  for (const auto& v : rad.basis()) {
    Vector w(n + s);
    for (size_t i = 0; i < n; ++i) w[i] = v[i];
    gens.push_back(std::move(w));
  }
  for (size_t t = 0; t < s; ++t) gens.push_back(unit_vector(n + s, n + t));
  return Subspace::span(n + s, gens);
}

Subspace annihilator_of_extension(const ExtensionSpec& spec) {
  const Subspace direct = annihilator(central_extension(spec));
  const Subspace formula = annihilator_formula(spec);
  if (!(direct == formula))
    throw std::logic_error("internal error: Ann(A_theta) = " + direct.to_string() +
                           " but formula gives " + formula.to_string());
  return direct;
}

QuotientResult quotient_by_annihilator(const Algebra& a) {
  const size_t n = a.dim();
  const Subspace ann = annihilator(a);
  if (ann.is_zero()) throw std::invalid_argument("no annihilator");
  QuotientResult r;
  Subspace acc = ann;
  std::vector<Vector> columns;
  for (size_t i = 0; i < n && acc.dim() < n; ++i) {
    const Vector e = unit_vector(n, i);
    if (acc.contains(e)) continue;
    r.complement.push_back(i);
    columns.push_back(e);
    acc = subspace_sum(acc, Subspace::span(n, {e}));
  }
  for (const auto& b : ann.basis()) columns.push_back(b);
  r.section = Matrix::from_columns(columns, n);
  const Algebra t = transport(a, r.section);
  const size_t m = r.complement.size();
  const size_t s = ann.dim();
  r.quotient = Algebra(m, a.name().empty() ? std::string() : a.name() + "/Ann");
  r.cocycles.assign(s, BilinearForm(m, m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      for (size_t k = 0; k < m; ++k) r.quotient.c(i, j, k) = t.c(i, j, k);
      for (size_t q = 0; q < s; ++q) r.cocycles[q](i, j) = t.c(i, j, m + q);
    }
  return r;
}

ExtensionSpec parse_extension_spec(std::string_view text,
                                   const std::function<Algebra(const std::string&)>& resolve_base) {
  ExtensionSpec spec;
  bool have_base = false;
  std::vector<std::string> forms;
  for (const auto& raw : split_lines(text)) {
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.starts_with("base")) {
      if (have_base) throw ParseError("duplicate base line");
      spec.base = resolve_base(trim(line.substr(4)));
      have_base = true;
    } else if (line.starts_with("cocycle:")) {
      forms.push_back(line.substr(8));
    } else {
      throw ParseError("unexpected line in extension spec: '" + line + "'");
    }
  }
  if (!have_base) throw ParseError("extension spec has no base line");
  const FieldRef field = spec.base.field();
  for (const auto& f : forms) spec.cocycles.push_back(parse_form(f, spec.base.dim(), field));
  return spec;
}

}  // namespace zinbiel
