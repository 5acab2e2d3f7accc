#include "zinbiel/catalog.hpp"

#include <algorithm>

#include "zinbiel/text.hpp"

namespace zinbiel {

// Defined in the generated catalog_data.cpp.
extern const char* const kCatalogAlgebras;
extern const char* const kCatalogOrbitsN1C;
extern const char* const kCatalogOrbitsN1;

const std::vector<Rational>& default_parameter_samples() {
  static const std::vector<Rational> samples{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  return samples;
}

size_t CatalogEntry::extension_dim() const {
  return extension_of ? extension_of->cocycles.size() : 0;
}

std::string CatalogEntry::display_id() const {
  if (parameters.empty()) return id;
  std::string out = id + "(";
  for (size_t i = 0; i < parameters.size(); ++i) {
    if (i) out += ",";
    auto it = values.find(parameters[i]);
    out += it == values.end() ? parameters[i] : it->second.to_string();
  }
  return out + ")";
}

namespace {

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string substitute(std::string text, const std::map<std::string, Rational>& values) {
  for (const auto& [name, v] : values) {
    const std::string key = "{" + name + "}";
    const std::string repl = "(" + v.to_string() + ")";
    for (size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + repl.size()))
      text.replace(pos, key.size(), repl);
  }
  return text;
}

// `(v)` is accepted by the expression parser but not by the linear-combination
// reader used for tables, so tables get the bare value.
std::string substitute_table(std::string text, const std::map<std::string, Rational>& values) {
  for (const auto& [name, v] : values) {
    const std::string key = "{" + name + "}";
    const std::string repl = v.to_string();
    for (size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + repl.size()))
      text.replace(pos, key.size(), repl);
  }
  return text;
}

BilinearForm evaluate_form(const std::string& text, const std::vector<BilinearForm>& nabla, size_t n) {
  const Expr e = Expr::parse(text);
  const Resolver resolve = [&](const std::string& name) -> std::optional<Value> {
    if (name.size() >= 2 && name[0] == 'N' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
      const size_t k = std::stoul(name.substr(1));
      if (k >= 1 && k <= nabla.size()) return Value::of(nabla[k - 1]);
    }
    if (name.size() == 3 && name[0] == 'D' && std::isdigit(static_cast<unsigned char>(name[1])) &&
        std::isdigit(static_cast<unsigned char>(name[2]))) {
      const size_t i = static_cast<size_t>(name[1] - '1'), j = static_cast<size_t>(name[2] - '1');
      if (i < n && j < n) return Value::of(delta(n, i, j));
    }
    return std::nullopt;
  };
  return e.evaluate(resolve).as_form();
}

}  // namespace

Catalog Catalog::parse(std::string_view algebras, const std::vector<std::string_view>& orbit_texts) {
  Catalog cat;
  std::optional<CatalogEntry> cur;
  std::string table;
  size_t lineno = 0;
  for (const auto& raw : split_lines(algebras)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    const size_t sp = line.find_first_of(" \t");
    const std::string head = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : trim(line.substr(sp));
    const auto fail = [&](const std::string& what) {
      throw CatalogError("catalog line " + std::to_string(lineno) + (cur ? " (" + cur->id + ")" : "") + ": " + what);
    };
    if (head == "entry") {
      if (cur) fail("'entry' before 'end'");
      cur.emplace();
      cur->id = rest;
      table.clear();
      continue;
    }
    if (!cur) fail("directive outside an entry");
    if (head == "end") {
      if (cat.templates_.count(cur->id)) fail("duplicate id");
      cat.table_templates_[cur->id] = table;
      cat.templates_[cur->id] = std::move(*cur);
      cur.reset();
    } else if (head == "base") {
      cur->base = rest;
    } else if (head == "param") {
      cur->parameters = words(rest);
    } else if (head == "source") {
      cur->source = rest;
    } else if (head == "note") {
      cur->notes.push_back(rest);
    } else if (head == "nabla") {
      cur->nabla = split_list(rest, ';');
    } else if (head == "automorphism") {
      const size_t colon = rest.find(':');
      if (colon == std::string::npos) fail("expected 'automorphism <params>: <rows>'");
      cur->automorphism_parameters = words(rest.substr(0, colon));
      for (const auto& row : split_list(rest.substr(colon + 1), ';'))
        for (const auto& cell : split_list(row, ',')) cur->automorphism_shape.push_back(cell);
    } else if (head == "representative") {
      cur->representative = split_list(rest, ',');
    } else if (head == "orbitlist") {
      const size_t colon = rest.find(':');
      if (colon == std::string::npos) fail("expected 'orbitlist <name>: <forms>'");
      cur->orbit_lists.emplace_back(trim(rest.substr(0, colon)), split_list(rest.substr(colon + 1), ','));
    } else if (head == "dim" || head.starts_with("e")) {
      table += line + "\n";
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (cur) throw CatalogError("catalog entry " + cur->id + " has no 'end'");

  for (auto text : orbit_texts) {
    try {
      auto cases = parse_orbit_cases(text);
      cat.cases_.insert(cat.cases_.end(), cases.begin(), cases.end());
    } catch (const std::exception& e) {
      throw CatalogError(e.what());
    }
  }

  // Validate: every instance builds, is Zinbiel, and its representative parses.
  for (const auto& e : cat.instances(default_parameter_samples())) {
    const IdentityWitness w = check_zinbiel(e.algebra);
    if (!w.holds) throw CatalogError("catalog entry " + e.display_id() + " is not Zinbiel: " + w.to_string());
    if (!e.is_base() && !cat.contains(e.base)) throw CatalogError("catalog entry " + e.id + ": unknown base " + e.base);
    try {
      if (e.is_base()) {
        (void)cat.nabla(e);
        if (!e.automorphism_shape.empty()) (void)cat.orbit_context(e.id);
      } else {
        (void)cat.representative_forms(e);
      }
    } catch (const std::exception& ex) {
      throw CatalogError("catalog entry " + e.display_id() + ": " + ex.what());
    }
  }
  for (const auto& c : cat.cases_)
    if (!cat.contains(c.base)) throw CatalogError("orbit recipe " + c.label + ": unknown base " + c.base);
  return cat;
}

const Catalog& Catalog::embedded() {
  static const Catalog cat = parse(kCatalogAlgebras, {kCatalogOrbitsN1C, kCatalogOrbitsN1});
  return cat;
}

std::string_view Catalog::algebra_text() { return kCatalogAlgebras; }

std::vector<std::pair<std::string, std::string_view>> Catalog::orbit_texts() {
  return {{"orbits_n1c.txt", kCatalogOrbitsN1C}, {"orbits_n1.txt", kCatalogOrbitsN1}};
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, e] : templates_) out.push_back(id);
  return out;
}

const CatalogEntry& Catalog::entry_template(const std::string& id) const {
  auto it = templates_.find(id);
  if (it == templates_.end()) throw CatalogError("unknown catalog id '" + id + "'");
  return it->second;
}

CatalogEntry Catalog::lookup(const std::string& id, const std::map<std::string, Rational>& values) const {
  auto it = templates_.find(id);
  if (it == templates_.end()) throw CatalogError("unknown catalog id '" + id + "'");
  CatalogEntry e = it->second;
  for (const auto& p : e.parameters) {
    auto v = values.find(p);
    if (v == values.end()) throw CatalogError("catalog entry " + id + " needs a value for parameter '" + p + "'");
    e.values[p] = v->second;
  }
  try {
    e.algebra = parse_algebra(substitute_table(table_templates_.at(id), e.values));
  } catch (const std::exception& ex) {
    throw CatalogError("catalog entry " + e.display_id() + ": " + ex.what());
  }
  e.algebra.set_name(e.display_id());
  for (auto& r : e.representative) r = substitute(r, e.values);
  for (auto& r : e.nabla) r = substitute(r, e.values);

  if (!e.is_base()) {
    const CatalogEntry base = lookup(e.base, {});
    const size_t n = base.algebra.dim(), m = e.algebra.dim();
    if (m <= n) throw CatalogError("catalog entry " + id + " is not larger than its base");
    ExtensionSpec spec{base.algebra, {}};
    for (size_t t = n; t < m; ++t) {
      BilinearForm theta(n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) theta(i, j) = e.algebra.c(i, j, t);
      spec.cocycles.push_back(std::move(theta));
    }
    e.extension_of = std::move(spec);
  }
  return e;
}

CatalogEntry Catalog::lookup_text(const std::string& text) const {
  const std::string s = trim(text);
  if (contains(s)) {
    const auto& t = templates_.at(s);
    if (t.parameters.empty()) return lookup(s);
  }
  const size_t open = s.rfind('(');
  if (open == std::string::npos || s.back() != ')') return lookup(s);  // reports the missing parameter
  const std::string id = s.substr(0, open);
  auto it = templates_.find(id);
  if (it == templates_.end()) throw CatalogError("unknown catalog id '" + id + "'");
  const auto vals = split_list(s.substr(open + 1, s.size() - open - 2), ',');
  if (vals.size() != it->second.parameters.size())
    throw CatalogError("catalog entry " + id + " takes " + std::to_string(it->second.parameters.size()) +
                       " parameter(s)");
  std::map<std::string, Rational> values;
  try {
    for (size_t i = 0; i < vals.size(); ++i) values[it->second.parameters[i]] = Rational::parse(vals[i]);
  } catch (const std::exception& ex) {
    throw CatalogError("bad parameter value in '" + s + "': " + ex.what());
  }
  return lookup(id, values);
}

std::vector<CatalogEntry> Catalog::instances(const std::vector<Rational>& samples) const {
  std::vector<CatalogEntry> out;
  for (const auto& [id, t] : templates_) {
    if (t.parameters.empty()) {
      out.push_back(lookup(id));
      continue;
    }
    if (t.parameters.size() != 1) throw CatalogError("entry " + id + ": only one-parameter families are sampled");
    for (const auto& v : samples) out.push_back(lookup(id, {{t.parameters[0], v}}));
  }
  return out;
}

std::string Catalog::product_summary(const std::string& id) const {
  auto it = table_templates_.find(id);
  if (it == table_templates_.end()) throw CatalogError("unknown catalog id '" + id + "'");
  std::string out;
  for (const auto& raw : split_lines(it->second)) {
    std::string line = trim(strip_comment(raw));
    const size_t eq = line.find('=');
    if (line.empty() || line.starts_with("dim") || eq == std::string::npos) continue;
    std::string lhs = trim(line.substr(0, eq)), rhs = trim(line.substr(eq + 1));
    lhs.erase(std::remove(lhs.begin(), lhs.end(), '*'), lhs.end());
    lhs.erase(std::remove(lhs.begin(), lhs.end(), ' '), lhs.end());
    rhs.erase(std::remove(rhs.begin(), rhs.end(), '{'), rhs.end());
    rhs.erase(std::remove(rhs.begin(), rhs.end(), '}'), rhs.end());
    if (!out.empty()) out += ", ";
    out += lhs + "=" + rhs;
  }
  return out.empty() ? "(zero)" : out;
}

std::vector<BilinearForm> Catalog::nabla(const CatalogEntry& base) const {
  std::vector<BilinearForm> out;
  const size_t n = base.algebra.dim();
  for (const auto& text : base.nabla) out.push_back(evaluate_form(text, {}, n));
  return out;
}

std::optional<std::vector<BilinearForm>> Catalog::orbit_list(const std::string& base, const std::string& name) const {
  auto it = templates_.find(base);
  if (it == templates_.end()) return std::nullopt;
  for (const auto& [label, forms] : it->second.orbit_lists) {
    if (label != name) continue;
    const CatalogEntry b = lookup(base);
    const auto nab = nabla(b);
    std::vector<BilinearForm> out;
    for (const auto& f : forms) out.push_back(evaluate_form(f, nab, b.algebra.dim()));
    return out;
  }
  return std::nullopt;
}

std::vector<BilinearForm> Catalog::representative_forms(const CatalogEntry& e) const {
  if (e.is_base()) throw CatalogError(e.id + " is a base algebra");
  if (e.representative.size() == 1)
    if (auto named = orbit_list(e.base, e.representative[0])) return *named;
  const CatalogEntry b = lookup(e.base);
  const auto nab = nabla(b);
  std::vector<BilinearForm> out;
  for (const auto& f : e.representative) out.push_back(evaluate_form(f, nab, b.algebra.dim()));
  return out;
}

OrbitContext Catalog::orbit_context(const std::string& base) const {
  const CatalogEntry b = lookup(base);
  if (b.automorphism_shape.empty()) throw CatalogError(base + " has no automorphism shape");
  const size_t n = b.algebra.dim();
  if (b.automorphism_shape.size() != n * n)
    throw CatalogError(base + ": automorphism shape must have " + std::to_string(n * n) + " entries");
  OrbitContext ctx;
  ctx.id = base;
  ctx.algebra = b.algebra;
  ctx.nabla = nabla(b);
  ctx.parameters = b.automorphism_parameters;
  for (const auto& cell : b.automorphism_shape) ctx.shape.push_back(Expr::parse(cell));
  return ctx;
}

}  // namespace zinbiel
