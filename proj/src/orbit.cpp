#include "zinbiel/orbit.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "zinbiel/text.hpp"

namespace zinbiel {

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  const uint64_t a = rng(), b = rng();
  long num = static_cast<long>(a % 18) - 9;
  if (num >= 0) ++num;
  const long den = 1 + static_cast<long>(b % 4);
  return Rational(num, den);
}

namespace {

std::optional<mpz_class> exact_integer_root(const mpz_class& n, int d) {
  if (n < 0 && d % 2 == 0) return std::nullopt;
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d)) == 0) return std::nullopt;
  return r;
}

// The d-th root of q when it is rational; for even d the positive one.
std::optional<Rational> exact_root(const Rational& q, int d) {
  const auto num = exact_integer_root(q.raw().get_num(), d);
  const auto den = exact_integer_root(q.raw().get_den(), d);
  if (!num || !den) return std::nullopt;
  return Rational(mpq_class(*num, *den));
}

}  // namespace

bool OrbitCase::is_fixed() const {
  for (const auto& s : statements)
    if (s.kind == OrbitStatement::Sample || s.kind == OrbitStatement::Free) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::pair<std::string, std::string> split_assignment(const std::string& s, const std::string& where) {
  const size_t eq = s.find('=');
  if (eq == std::string::npos) throw ParseError(where + ": expected '<name> = <expr>'");
  return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
}

}  // namespace

std::vector<OrbitCase> parse_orbit_cases(std::string_view text) {
  std::vector<OrbitCase> cases;
  std::optional<OrbitCase> cur;
  size_t lineno = 0;
  for (const auto& raw : split_lines(text)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    const std::string where = "orbit recipe line " + std::to_string(lineno);
    const size_t sp = line.find_first_of(" \t");
    const std::string head = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : trim(line.substr(sp));

    if (head == "case") {
      if (cur) throw ParseError(where + ": 'case' before 'end'");
      cur.emplace();
      cur->label = rest;
      continue;
    }
    if (!cur) throw ParseError(where + ": directive outside a case");
    try {
      if (head == "end") {
        if (cur->base.empty()) throw ParseError("case has no base");
        if (cur->source.empty() || cur->target.empty()) throw ParseError("case needs source and target");
        cases.push_back(std::move(*cur));
        cur.reset();
      } else if (head == "base") {
        cur->base = rest;
      } else if (head == "note") {
        cur->notes.push_back(rest);
      } else if (head == "field") {
        const size_t colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'field <g>: <poly>'");
        const std::string g = trim(rest.substr(0, colon));
        if (g.size() != 1) throw ParseError("field generator must be a single letter");
        cur->field = {g, RationalPolynomial::parse(trim(rest.substr(colon + 1)), g[0])};
      } else if (head == "sample" || head == "free") {
        OrbitStatement s{head == "sample" ? OrbitStatement::Sample : OrbitStatement::Free, split_words(rest), {}};
        if (s.names.empty()) throw ParseError("no variables listed");
        cur->statements.push_back(std::move(s));
      } else if (head == "let" || head == "phi") {
        auto [name, e] = split_assignment(rest, where);
        cur->statements.push_back({head == "let" ? OrbitStatement::Let : OrbitStatement::Phi, {name}, Expr::parse(e)});
      } else if (head == "adjoin") {
        const size_t colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'adjoin <v>: <v>^<d> = <expr>'");
        const std::string v = trim(rest.substr(0, colon));
        auto [lhs, e] = split_assignment(rest.substr(colon + 1), where);
        const std::string prefix = v + "^";
        if (!lhs.starts_with(prefix)) throw ParseError("adjoin lhs must be " + prefix + "<d>");
        OrbitStatement s{OrbitStatement::Adjoin, {v}, Expr::parse(e)};
        s.degree = std::stoi(lhs.substr(prefix.size()));
        if (s.degree < 2 || s.degree > 4) throw ParseError("adjoin degree must be 2, 3 or 4");
        cur->statements.push_back(std::move(s));
      } else if (head == "require") {
        OrbitStatement s{OrbitStatement::Require, {}, {}};
        size_t op = rest.find("==");
        if (op != std::string::npos) {
          s.require_zero = true;
        } else {
          op = rest.find("!=");
          if (op == std::string::npos) throw ParseError("require needs '== 0' or '!= 0'");
        }
        if (trim(rest.substr(op + 2)) != "0") throw ParseError("require compares against 0");
        s.expr = Expr::parse(rest.substr(0, op));
        cur->statements.push_back(std::move(s));
      } else if (head == "alt") {
        const size_t colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'alt <name>: <param> = <expr>'");
        OrbitAlternative a{trim(rest.substr(0, colon)), {}};
        for (const auto& piece : split_top_level(rest.substr(colon + 1), ';')) {
          auto [name, e] = split_assignment(piece, where);
          a.assignments.emplace_back(name, Expr::parse(e));
        }
        cur->alternatives.push_back(std::move(a));
      } else if (head == "source" || head == "target") {
        auto& dst = head == "source" ? cur->source : cur->target;
        for (const auto& piece : split_top_level(rest, ',')) dst.push_back(Expr::parse(piece));
      } else if (head == "family") {
        const size_t ex = rest.find("exclude");
        cur->family = trim(rest.substr(0, ex));
        if (ex != std::string::npos)
          for (const auto& piece : split_top_level(rest.substr(ex + 7), ','))
            cur->family_excludes.push_back(Expr::parse(piece));
      } else {
        throw ParseError("unknown directive '" + head + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + " (" + cur->label + "): " + e.what());
    } catch (const std::exception& e) {
      throw ParseError(where + " (" + cur->label + "): " + e.what());
    }
  }
  if (cur) throw ParseError("orbit recipe '" + cur->label + "' has no 'end'");
  return cases;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Rejection {
  std::string reason;
};

struct Env {
  std::map<std::string, Value> vars;
  std::vector<std::string> shown;  // sampled names in order, for reports
  const OrbitContext* ctx = nullptr;

  std::optional<Value> lookup(const std::string& name) const {
    if (auto it = vars.find(name); it != vars.end()) return it->second;
    const size_t n = ctx->algebra.dim();
    if (name.size() >= 2 && name[0] == 'N' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const size_t k = std::stoul(name.substr(1));
      if (k >= 1 && k <= ctx->nabla.size()) return Value::of(ctx->nabla[k - 1]);
    }
    if (name.size() == 3 && name[0] == 'D' && std::isdigit(static_cast<unsigned char>(name[1])) &&
        std::isdigit(static_cast<unsigned char>(name[2]))) {
      const size_t i = static_cast<size_t>(name[1] - '1'), j = static_cast<size_t>(name[2] - '1');
      if (i < n && j < n) return Value::of(delta(n, i, j));
    }
    return std::nullopt;
  }

  Resolver resolver() const {
    return [this](const std::string& s) { return lookup(s); };
  }

  FieldElement scalar(const Expr& e) const { return e.evaluate_scalar(resolver()); }
  Value value(const Expr& e) const { return e.evaluate(resolver()); }

  std::string describe() const {
    std::string out;
    for (const auto& name : shown) {
      if (!out.empty()) out += ", ";
      const Value& v = vars.at(name);
      out += name + "=" + (v.is_form ? format_form(v.form) : v.scalar.to_string());
    }
    return out;
  }
};

void run_statements(const OrbitCase& c, Env& env, std::mt19937_64& rng) {
  FieldRef fixed_field;
  if (c.field) {
    fixed_field = NumberField::create(c.field->second, c.field->first);
    env.vars[c.field->first] = Value::of(FieldElement::generator(fixed_field));
  }
  for (const auto& s : c.statements) {
    switch (s.kind) {
      case OrbitStatement::Sample:
      case OrbitStatement::Free:
        for (const auto& name : s.names) {
          env.vars[name] = Value::of(FieldElement(random_nonzero_rational(rng)));
          env.shown.push_back(name);
        }
        break;
      case OrbitStatement::Let:
      case OrbitStatement::Phi:
        env.vars[s.names[0]] = env.value(s.expr);
        break;
      case OrbitStatement::Require: {
        const bool zero = env.scalar(s.expr).is_zero();
        if (zero != s.require_zero)
          throw Rejection{"condition " + s.expr.text() + (s.require_zero ? " == 0" : " != 0") + " fails"};
        break;
      }
      case OrbitStatement::Adjoin: {
        if (fixed_field) throw EvalError("adjoin cannot be combined with a fixed field");
        const FieldElement v = env.scalar(s.expr);
        if (!v.is_rational()) throw EvalError("adjoin radicand must be rational");
        const Rational q = v.to_rational();
        if (q.is_zero()) throw Rejection{"radicand of " + s.names[0] + " is zero"};
        std::vector<Rational> coeffs(static_cast<size_t>(s.degree) + 1, Rational(0));
        coeffs[0] = -q;
        coeffs.back() = Rational(1);
        const RationalPolynomial m(coeffs);
        if (const auto root = exact_root(q, s.degree)) {
          env.vars[s.names[0]] = Value::of(FieldElement(*root));
        } else {
          // Without a rational root, degree 2 and 3 binomials are irreducible.
          const IrreducibilityResult irr =
              s.degree < 4 ? IrreducibilityResult{true, true} : check_irreducible(m);
          if (!irr.decided || !irr.irreducible)
            throw Rejection{m.to_string() + " is reducible without a rational root"};
          env.vars[s.names[0]] = Value::of(FieldElement::generator(NumberField::create(m, s.names[0])));
        }
        env.shown.push_back(s.names[0]);
        break;
      }
    }
  }
}

std::string describe_subspace(const Subspace& w) {
  std::string out = "<";
  for (size_t r = 0; r < w.dim(); ++r) {
    if (r) out += ", ";
    std::vector<Term> terms;
    for (size_t k = 0; k < w.ambient_dim(); ++k) terms.push_back({w.basis()[r][k], "N" + std::to_string(k + 1)});
    out += format_linear_combination(terms);
  }
  return out + ">";
}

// Returns empty string on success, otherwise the reason.
std::string check_once(const OrbitCase& c, const OrbitContext& ctx, const Cohomology& h, Env& env) {
  const size_t n = ctx.algebra.dim();
  Matrix phi(n, n);
  for (size_t i = 0; i < n * n; ++i) phi(i / n, i % n) = env.scalar(ctx.shape[i]);
  const std::string phi_text = "phi=" + phi.to_string();
  const AutomorphismWitness aw = is_automorphism(ctx.algebra, phi);
  if (!aw.holds) return phi_text + ": " + aw.to_string();

  std::vector<BilinearForm> src;
  for (const auto& e : c.source) src.push_back(env.value(e).as_form());
  const Subspace w = class_subspace(h, src);
  if (w.dim() != src.size()) throw Rejection{"source generators are dependent"};
  const Subspace image = act_on_subspace(ctx.algebra, h, phi, w);

  if (!c.family) {
    std::vector<BilinearForm> tgt;
    for (const auto& e : c.target) tgt.push_back(env.value(e).as_form());
    const Subspace expected = class_subspace(h, tgt);
    if (image == expected) return {};
    return phi_text + ", image " + describe_subspace(image) + " != target " + describe_subspace(expected);
  }

  // Family: target generators are affine in the family parameter g.
  const std::string& g = *c.family;
  std::vector<Vector> base, slope;
  for (const auto& e : c.target) {
    env.vars[g] = Value::of(FieldElement(0));
    const Vector c0 = h.class_coordinates(env.value(e).as_form());
    env.vars[g] = Value::of(FieldElement(1));
    Vector d = h.class_coordinates(env.value(e).as_form());
    for (size_t k = 0; k < d.size(); ++k) d[k] -= c0[k];
    base.push_back(image.reduce(c0));
    slope.push_back(image.reduce(d));
  }
  env.vars.erase(g);
  std::optional<FieldElement> value;
  for (size_t j = 0; j < base.size() && !value; ++j)
    for (size_t k = 0; k < base[j].size(); ++k)
      if (!slope[j][k].is_zero()) {
        value = -base[j][k] / slope[j][k];
        break;
      }
  const FieldElement gv = value.value_or(FieldElement(0));
  for (size_t j = 0; j < base.size(); ++j)
    for (size_t k = 0; k < base[j].size(); ++k)
      if (!(base[j][k] + gv * slope[j][k]).is_zero())
        return phi_text + ", image " + describe_subspace(image) + " is not in the target family";
  env.vars[g] = Value::of(gv);
  std::vector<BilinearForm> tgt;
  for (const auto& e : c.target) tgt.push_back(env.value(e).as_form());
  if (!(class_subspace(h, tgt) == image))
    return phi_text + ", image " + describe_subspace(image) + " is a proper degeneration of the family at " + g +
           "=" + gv.to_string();
  for (const auto& ex : c.family_excludes)
    if (env.scalar(ex) == gv) return phi_text + ", family parameter " + g + "=" + gv.to_string() + " is excluded";
  env.shown.push_back(g);
  return {};
}

}  // namespace

SampleOutcome evaluate_orbit_sample(const OrbitCase& c, const OrbitContext& ctx, std::mt19937_64& rng) {
  SampleOutcome out;
  Env env;
  env.ctx = &ctx;
  try {
    const Cohomology h(ctx.algebra, ctx.nabla);
    run_statements(c, env, rng);
    if (c.alternatives.empty()) {
      const std::string why = check_once(c, ctx, h, env);
      out.status = why.empty() ? SampleOutcome::Pass : SampleOutcome::Fail;
      out.detail = env.describe() + (why.empty() ? "" : "; " + why);
      return out;
    }
    std::string fails;
    for (const auto& alt : c.alternatives) {
      Env local = env;
      for (const auto& [name, e] : alt.assignments) local.vars[name] = local.value(e);
      std::string why;
      try {
        why = check_once(c, ctx, h, local);
      } catch (const DivisionByZero&) {
        why = "division by zero";
      }
      if (why.empty()) out.passing_alternatives.push_back(alt.name);
      else fails += "; " + alt.name + ": " + why;
    }
    out.status = out.passing_alternatives.empty() ? SampleOutcome::Fail : SampleOutcome::Pass;
    out.detail = env.describe() + fails;
  } catch (const Rejection& r) {
    out.status = SampleOutcome::Rejected;
    out.detail = env.describe() + "; sample rejected: " + r.reason;
  } catch (const DivisionByZero&) {
    out.status = SampleOutcome::Rejected;
    out.detail = env.describe() + "; sample rejected: division by zero";
  } catch (const std::exception& e) {
    out.status = SampleOutcome::Fail;
    out.detail = env.describe() + "; error: " + e.what();
  }
  return out;
}

OrbitCaseResult verify_orbit_case(const OrbitCase& c, const OrbitContext& ctx, size_t samples, uint64_t seed) {
  OrbitCaseResult r;
  r.label = c.label;
  r.base = c.base;
  r.notes = c.notes;
  r.fixed = c.is_fixed();
  r.requested = r.fixed ? 1 : samples;
  std::mt19937_64 rng(seed ^ fnv1a(c.label));
  std::map<std::string, size_t> alt_hits;
  std::string first_pass;
  const size_t budget = 200 * r.requested;
  for (size_t attempt = 0; attempt < budget && r.passed + r.failed < r.requested; ++attempt) {
    SampleOutcome s = evaluate_orbit_sample(c, ctx, rng);
    switch (s.status) {
      case SampleOutcome::Pass:
        ++r.passed;
        for (const auto& a : s.passing_alternatives) ++alt_hits[a];
        if (first_pass.empty()) first_pass = s.detail;
        break;
      case SampleOutcome::Fail:
        ++r.failed;
        if (r.first_detail.empty()) r.first_detail = s.detail;
        break;
      case SampleOutcome::Rejected:
        ++r.rejected;
        break;
    }
  }
  if (r.first_detail.empty()) r.first_detail = first_pass;
  for (const auto& a : c.alternatives)
    r.alternative_summary.push_back(a.name + ": " + std::to_string(alt_hits[a.name]) + "/" +
                                    std::to_string(r.passed + r.failed));
  r.pass = r.failed == 0 && r.passed == r.requested;
  if (r.passed + r.failed < r.requested)
    r.notes.push_back("only " + std::to_string(r.passed + r.failed) + " admissible samples found in " +
                      std::to_string(budget) + " attempts");
  return r;
}

}  // namespace zinbiel
