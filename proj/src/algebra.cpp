#include "zinbiel/algebra.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "zinbiel/text.hpp"

namespace zinbiel {

Algebra::Algebra(size_t n, std::string name) : n_(n), name_(std::move(name)), c_(n * n * n) {}

Vector Algebra::basis_product(size_t i, size_t j) const {
  Vector v(n_);
  for (size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

void Algebra::set_basis_product(size_t i, size_t j, std::span<const FieldElement> v) {
  if (v.size() != n_) throw std::invalid_argument("product vector has wrong length");
  for (size_t k = 0; k < n_; ++k) c(i, j, k) = v[k];
}

Vector Algebra::product(std::span<const FieldElement> x, std::span<const FieldElement> y) const {
  if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("vector length does not match algebra dimension");
  Vector out(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const FieldElement xy = x[i] * y[j];
      for (size_t k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(std::span<const FieldElement> x) const {
  Matrix m(n_, n_);
  for (size_t j = 0; j < n_; ++j) {
    const Vector col = product(x, unit_vector(n_, j));
    for (size_t k = 0; k < n_; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_multiplication(std::span<const FieldElement> x) const {
  Matrix m(n_, n_);
  for (size_t j = 0; j < n_; ++j) {
    const Vector col = product(unit_vector(n_, j), x);
    for (size_t k = 0; k < n_; ++k) m(k, j) = col[k];
  }
  return m;
}

FieldRef Algebra::field() const {
  FieldRef f;
  for (const auto& x : c_) f = join_fields(f, x.field());
  return f;
}

bool Algebra::is_zero() const { return zinbiel::is_zero(c_); }

std::string IdentityWitness::to_string() const {
  if (holds) return "holds";
  return "violated at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
         "), defect " + zinbiel::to_string(defect);
}

IdentityWitness check_zinbiel(const Algebra& a) {
  const size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Vector eij = a.basis_product(i, j);
      for (size_t k = 0; k < n; ++k) {
        Vector lhs = a.product(eij, unit_vector(n, k));
        Vector sym = a.basis_product(j, k);
        const Vector ekj = a.basis_product(k, j);
        for (size_t m = 0; m < n; ++m) sym[m] += ekj[m];
        const Vector rhs = a.product(unit_vector(n, i), sym);
        for (size_t m = 0; m < n; ++m) lhs[m] -= rhs[m];
        if (!is_zero(lhs)) return {false, i + 1, j + 1, k + 1, std::move(lhs)};
      }
    }
  return {};
}

namespace {

// Stack the n x n blocks [rows of x -> x e_j] (left) and/or [x -> e_j x] (right)
// into one matrix acting on x.
Matrix multiplication_conditions(const Algebra& a, bool left, bool right) {
  const size_t n = a.dim();
  const size_t blocks = (left ? 1 : 0) + (right ? 1 : 0);
  Matrix m(blocks * n * n, n);
  size_t row = 0;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < n; ++i) {
        if (left) m(row, i) = a.c(i, j, k);
        if (right) m(row + (left ? n * n : 0), i) = a.c(j, i, k);
      }
      ++row;
    }
  return m;
}

}  // namespace

Subspace annihilator(const Algebra& a) { return nullspace(multiplication_conditions(a, true, true)); }
Subspace left_annihilator(const Algebra& a) { return nullspace(multiplication_conditions(a, true, false)); }
Subspace right_annihilator(const Algebra& a) { return nullspace(multiplication_conditions(a, false, true)); }

Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vector> gens;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      Vector p = a.product(x, y);
      if (!is_zero(p)) gens.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), gens);
}

Subspace derivations(const Algebra& a) {
  const size_t n = a.dim();
  // Unknown D_rs (row r, column s) sits at index r*n+s; D e_s = sum_r D_rs e_r.
  Matrix m(n * n * n, n * n);
  size_t row = 0;
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t k = 0; k < n; ++k, ++row) {
        for (size_t s = 0; s < n; ++s)
          if (!a.c(p, q, s).is_zero()) m(row, k * n + s) += a.c(p, q, s);
        for (size_t i = 0; i < n; ++i) {
          if (!a.c(i, q, k).is_zero()) m(row, i * n + p) -= a.c(i, q, k);
          if (!a.c(p, i, k).is_zero()) m(row, i * n + q) -= a.c(p, i, k);
        }
      }
  return nullspace(m);
}

Nilpotency is_nilpotent(const Algebra& a) {
  Nilpotency out;
  std::vector<Subspace> powers{Subspace::full(a.dim())};  // powers[k-1] = A^k
  out.chain.push_back(a.dim());
  if (a.dim() == 0) {
    out.nilpotent = true;
    out.index = 1;
    return out;
  }
  for (size_t k = 2;; ++k) {
    Subspace next(a.dim());
    for (size_t p = 1; p < k; ++p) next = subspace_sum(next, product_space(a, powers[p - 1], powers[k - p - 1]));
    out.chain.push_back(next.dim());
    if (next.is_zero()) {
      out.nilpotent = true;
      out.index = k;
      return out;
    }
    if (next == powers.back()) return out;
    powers.push_back(std::move(next));
  }
}

namespace {

// Projective points (p:q) with p, q in -2..2, normalized by gcd and sign.
std::vector<std::pair<long, long>> twist_grid() {
  std::vector<std::pair<long, long>> g{{0, 1}};
  for (long p = 1; p <= 2; ++p)
    for (long q = -2; q <= 2; ++q)
      if (std::gcd(p, q) == 1) g.emplace_back(p, q);
  return g;
}

// Homogeneous equations supplied one at a time; only the solution dimension is kept.
// Rational algebras go through the fraction-free reducer, others through a Matrix.
class Equations {
 public:
  Equations(const Algebra& a, size_t unknowns)
      : rational_(!a.field()), reducer_(unknowns), q_(unknowns), row_(unknowns) {}

  void add(size_t col, const FieldElement& c, long scale = 1) {
    if (c.is_zero() || scale == 0) return;
    if (rational_) {
      if (sgn(q_[col]) == 0) touched_.push_back(col);
      q_[col] += c.coords()[0].raw() * scale;
    } else {
      row_[col] += FieldElement(scale) * c;
    }
  }

  void end_row() {
    if (rational_) {
      if (touched_.empty()) return;
      reducer_.add(q_);
      for (size_t c : touched_) q_[c] = 0;
      touched_.clear();
    } else {
      if (!is_zero(row_)) rows_.push_back(row_);
      row_.assign(row_.size(), FieldElement());
    }
  }

  size_t solution_dim() const {
    const size_t n = q_.size();
    if (rational_) return n - reducer_.rank();
    return n - rank(Matrix::from_rows(rows_, n));
  }

 private:
  bool rational_;
  RationalRowReducer reducer_;
  std::vector<mpq_class> q_;
  std::vector<size_t> touched_;
  Vector row_;
  std::vector<Vector> rows_;
};

// Unknown T_rs at index r*n+s with T e_s = sum_r T_rs e_r. Left: T(xy) = T(x)y, right: T(xy) = xT(y).
size_t centroid_dim(const Algebra& a, bool left, bool right) {
  const size_t n = a.dim();
  Equations eq(a, n * n);
  for (int side = 0; side < 2; ++side) {
    if ((side == 0 && !left) || (side == 1 && !right)) continue;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) {
          for (size_t k = 0; k < n; ++k) eq.add(l * n + k, a.c(i, j, k));
          for (size_t r = 0; r < n; ++r) {
            if (side == 0) eq.add(r * n + i, a.c(r, j, l), -1);
            else eq.add(r * n + j, a.c(i, r, l), -1);
          }
          eq.end_row();
        }
  }
  return eq.solution_dim();
}

// Bilinear forms with theta(xy, z) = theta(x, p yz + q zy); unknown theta_ij at index i*n+j.
size_t cocycle_space_dim(const Algebra& a, long p, long q) {
  const size_t n = a.dim();
  Equations eq(a, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        for (size_t t = 0; t < n; ++t) {
          eq.add(t * n + k, a.c(i, j, t));
          eq.add(i * n + t, a.c(j, k, t), -p);
          eq.add(i * n + t, a.c(k, j, t), -q);
        }
        eq.end_row();
      }
  return eq.solution_dim();
}

// Maps with D(xy) = D(x)y + lambda xD(y); lambda = 1 gives the derivations.
size_t twisted_derivation_dim(const Algebra& a, long lambda) {
  const size_t n = a.dim();
  Equations eq(a, n * n);
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t k = 0; k < n; ++k) {
        for (size_t s = 0; s < n; ++s) eq.add(k * n + s, a.c(p, q, s));
        for (size_t i = 0; i < n; ++i) {
          eq.add(i * n + p, a.c(i, q, k), -1);
          eq.add(i * n + q, a.c(p, i, k), -lambda);
        }
        eq.end_row();
      }
  return eq.solution_dim();
}

}  // namespace

std::vector<long> fingerprint(const Algebra& a) {
  const size_t n = a.dim();
  std::vector<long> fp{static_cast<long>(n)};

  const Nilpotency nil = is_nilpotent(a);
  for (size_t k = 1; k <= n; ++k) fp.push_back(k < nil.chain.size() ? static_cast<long>(nil.chain[k]) : 0);

  const Subspace ann = annihilator(a);
  fp.push_back(static_cast<long>(ann.dim()));
  fp.push_back(static_cast<long>(left_annihilator(a).dim()));
  fp.push_back(static_cast<long>(right_annihilator(a).dim()));
  const Subspace full = Subspace::full(n);
  const Subspace square = product_space(a, full, full);
  fp.push_back(static_cast<long>(subspace_intersect(square, ann).dim()));
  fp.push_back(static_cast<long>(twisted_derivation_dim(a, 1)));
  fp.push_back(static_cast<long>(centroid_dim(a, true, true)));
  fp.push_back(static_cast<long>(centroid_dim(a, true, false)));
  fp.push_back(static_cast<long>(centroid_dim(a, false, true)));
  for (long lambda : {-1L, 0L, 2L}) fp.push_back(static_cast<long>(twisted_derivation_dim(a, lambda)));

  // For each (p:q): dim of the image of p xy + q yx and dim of {x : p xA + q Ax = 0}.
  for (const auto& [p, q] : twist_grid()) {
    const FieldElement fp_(p), fq(q);
    std::vector<Vector> image;
    Matrix radical(n * n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Vector v(n);
        for (size_t k = 0; k < n; ++k) {
          v[k] = fp_ * a.c(i, j, k) + fq * a.c(j, i, k);
          radical(j * n + k, i) = v[k];
        }
        image.push_back(std::move(v));
      }
    fp.push_back(static_cast<long>(Subspace::span(n, image).dim()));
    fp.push_back(static_cast<long>(nullspace(radical).dim()));
    fp.push_back(static_cast<long>(cocycle_space_dim(a, p, q)));
  }
  return fp;
}

std::string fingerprint_layout(size_t n) {
  std::string out = "n";
  for (size_t k = 2; k <= n + 1; ++k) out += ", dim A^" + std::to_string(k);
  out += ", dim Ann, dim {x: xA=0}, dim {x: Ax=0}, dim A^2 cap Ann, dim Der, dim centroid, dim left centroid, dim right centroid, dim Der(-1), dim Der(0), dim Der(2)";
  for (const auto& [p, q] : twist_grid()) {
    const std::string tag = "(" + std::to_string(p) + ":" + std::to_string(q) + ")";
    out += ", rank" + tag + ", rad" + tag + ", dim Z2" + tag;
  }
  return out;
}

Algebra transport(const Algebra& a, const Matrix& p) {
  const size_t n = a.dim();
  const auto inv = inverse(p);
  if (!inv) throw std::invalid_argument("change of basis matrix is singular");
  Algebra out(n, a.name());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.set_basis_product(i, j, inv->apply(a.product(p.column(i), p.column(j))));
  return out;
}

// ---------------------------------------------------------------------------
// File format

namespace {

size_t parse_basis_index(const std::string& sym, char prefix, size_t n, const std::string& line) {
  if (sym.size() < 2 || sym[0] != prefix) throw ParseError("expected " + std::string(1, prefix) + "<k> in '" + line + "'");
  size_t k = 0;
  for (size_t i = 1; i < sym.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(sym[i]))) throw ParseError("bad basis symbol '" + sym + "'");
    k = k * 10 + static_cast<size_t>(sym[i] - '0');
  }
  if (k < 1 || k > n) throw ParseError("basis index out of range in '" + line + "'");
  return k - 1;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  std::optional<Algebra> a;
  FieldRef field;
  size_t lineno = 0;
  for (const auto& raw : split_lines(text)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    const auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (line.starts_with("dim")) {
      if (a) throw ParseError(where() + "duplicate dim");
      try {
        const long n = std::stol(line.substr(3));
        if (n < 0 || n > 64) throw ParseError(where() + "dimension out of range");
        a.emplace(static_cast<size_t>(n));
      } catch (const std::logic_error&) {
        throw ParseError(where() + "bad dim line '" + line + "'");
      }
      continue;
    }
    if (line.starts_with("field")) {
      if (a && !a->is_zero()) throw ParseError(where() + "field must precede the products");
      try {
        field = NumberField::create(RationalPolynomial::parse(trim(line.substr(5))));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(where() + e.what());
      }
      continue;
    }
    if (!a) throw ParseError(where() + "missing 'dim <n>' header");
    const size_t eq = line.find('=');
    const size_t star = line.find('*');
    if (eq == std::string::npos || star == std::string::npos || star > eq)
      throw ParseError(where() + "expected 'e<i>*e<j> = ...', got '" + line + "'");
    const size_t i = parse_basis_index(trim(line.substr(0, star)), 'e', a->dim(), line);
    const size_t j = parse_basis_index(trim(line.substr(star + 1, eq - star - 1)), 'e', a->dim(), line);
    Vector v(a->dim());
    for (const auto& t : parse_linear_combination(line.substr(eq + 1), field)) {
      if (t.symbol.empty()) throw ParseError(where() + "scalar without basis vector");
      v[parse_basis_index(t.symbol, 'e', a->dim(), line)] += t.coeff;
    }
    for (size_t k = 0; k < a->dim(); ++k) a->c(i, j, k) += v[k];
  }
  if (!a) throw ParseError("missing 'dim <n>' header");
  return *a;
}

std::string format_algebra(const Algebra& a) {
  std::ostringstream out;
  if (!a.name().empty()) out << "# " << a.name() << "\n";
  out << "dim " << a.dim() << "\n";
  if (const FieldRef f = a.field()) out << "field " << f->minimal_polynomial().to_string() << "\n";
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      std::vector<Term> terms;
      for (size_t k = 0; k < a.dim(); ++k)
        if (!a.c(i, j, k).is_zero()) terms.push_back({a.c(i, j, k), "e" + std::to_string(k + 1)});
      if (terms.empty()) continue;
      out << "e" << i + 1 << "*e" << j + 1 << " = " << format_linear_combination(terms) << "\n";
    }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Algebra load_algebra_file(const std::filesystem::path& path) {
  Algebra a = parse_algebra(read_text_file(path));
  if (a.name().empty()) a.set_name(path.stem().string());
  return a;
}

std::string describe_products(const Algebra& a) {
  std::string out;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      std::vector<Term> terms;
      for (size_t k = 0; k < a.dim(); ++k)
        if (!a.c(i, j, k).is_zero()) terms.push_back({a.c(i, j, k), "e" + std::to_string(k + 1)});
      if (terms.empty()) continue;
      if (!out.empty()) out += ", ";
      std::string rhs = format_linear_combination(terms);
      if (rhs.starts_with("1 ")) rhs = rhs.substr(2);
      if (rhs.starts_with("-1 ")) rhs = "-" + rhs.substr(3);
      for (const std::string unit : {" + 1 e", " - 1 e"})
        for (size_t at = rhs.find(unit); at != std::string::npos; at = rhs.find(unit, at))
          rhs.replace(at, unit.size(), unit.substr(0, 3) + "e");
      out += "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + "=" + rhs;
    }
  return out.empty() ? "(zero)" : out;
}

}  // namespace zinbiel
