#include "gvk/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gvk {
namespace {

const std::vector<Term>& empty_terms() {
  static const std::vector<Term> empty;
  return empty;
}

std::strong_ordering cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& f : m) d += f.exponent;
  return d;
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    const auto c = ia->atom <=> ib->atom;
    if (c < 0) {
      out.push_back(*ia++);
    } else if (c > 0) {
      out.push_back(*ib++);
    } else {
      const int e = ia->exponent + ib->exponent;
      if (e != 0) out.push_back(Factor{ia->atom, e});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

bool term_less(const Term& a, const Term& b) { return compare_monomials(a.mono, b.mono) < 0; }

// Sorts, merges equal monomials and drops zero coefficients.
std::vector<Term> collect(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && compare_monomials(out.back().mono, t.mono) == 0) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

Expr atom_expr(Atom atom, int exponent = 1) {
  Term t{Rational(1), Monomial{Factor{std::move(atom), exponent}}};
  return Expr::from_terms({std::move(t)});
}

// Single term with coefficient one and a single factor of the given kind.
const Factor* lone_factor(const Expr& e, AtomKind kind) {
  if (!e.is_single_term()) return nullptr;
  const auto& t = e.terms().front();
  if (t.coeff != 1 || t.mono.size() != 1) return nullptr;
  const auto& f = t.mono.front();
  if (f.atom.kind != kind || f.exponent != 1) return nullptr;
  return &f;
}

const char* function_name(AtomKind k) {
  switch (k) {
    case AtomKind::Exp: return "exp";
    case AtomKind::Sin: return "sin";
    case AtomKind::Cos: return "cos";
    case AtomKind::Ln: return "ln";
    default: return "";
  }
}

std::string chart_name(const Chart* chart, std::size_t i) {
  return chart ? chart->var(i) : "v" + std::to_string(i);
}

std::string render(const Expr& e, const Chart* chart);

std::string render_atom(const Atom& a, const Chart* chart) {
  switch (a.kind) {
    case AtomKind::Var: return chart_name(chart, a.var);
    case AtomKind::Group: return "(" + render(a.arg, chart) + ")";
    default: return std::string(function_name(a.kind)) + "(" + render(a.arg, chart) + ")";
  }
}

std::string render_monomial(const Monomial& m, const Chart* chart) {
  std::string out;
  for (const auto& f : m) {
    if (!out.empty()) out += "*";
    out += render_atom(f.atom, chart);
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string render(const Expr& e, const Chart* chart) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += render_monomial(t.mono, chart);
    } else {
      out += to_string(mag) + "*" + render_monomial(t.mono, chart);
    }
  }
  return out;
}

// Raises to a positive power any Group atom that acquired a positive
// exponent, so Group atoms in a normal form only carry negative exponents.
std::vector<Term> expand_positive_groups(std::vector<Term> terms) {
  bool any = false;
  for (const auto& t : terms) {
    for (const auto& f : t.mono) {
      if (f.atom.kind == AtomKind::Group && f.exponent > 0) any = true;
    }
  }
  if (!any) return terms;
  std::vector<Term> out;
  for (auto& t : terms) {
    Expr product = Expr(t.coeff);
    Monomial rest;
    std::vector<std::pair<Expr, int>> expand;
    for (auto& f : t.mono) {
      if (f.atom.kind == AtomKind::Group && f.exponent > 0) {
        expand.emplace_back(f.atom.arg, f.exponent);
      } else {
        rest.push_back(f);
      }
    }
    if (expand.empty()) {
      out.push_back(std::move(t));
      continue;
    }
    product = product * Expr::from_terms({Term{Rational(1), std::move(rest)}});
    for (const auto& [arg, k] : expand) product = product * arg.pow(k);
    for (const auto& pt : product.terms()) out.push_back(pt);
  }
  return collect(std::move(out));
}

}  // namespace

std::strong_ordering Atom::operator<=>(const Atom& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  if (kind == AtomKind::Var) return var <=> other.var;
  return arg.compare(other.arg);
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (auto c = degree(a) <=> degree(b); c != 0) return c;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].atom <=> b[i].atom; c != 0) return c;
    if (auto c = b[i].exponent <=> a[i].exponent; c != 0) return c;
  }
  return a.size() <=> b.size();
}

Expr::Expr(long value) {
  if (value != 0) {
    terms_ = std::make_shared<const std::vector<Term>>(
        std::vector<Term>{Term{Rational(value), {}}});
  }
}

Expr::Expr(const Rational& value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_ = std::make_shared<const std::vector<Term>>(std::vector<Term>{Term{v, {}}});
  }
}

Expr Expr::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.coeff.canonicalize();
  auto collected = expand_positive_groups(collect(std::move(terms)));
  Expr e;
  if (!collected.empty()) e.terms_ = std::make_shared<const std::vector<Term>>(std::move(collected));
  return e;
}

Expr Expr::var(std::size_t index) {
  if (index >= kMaxDim) throw ChartError("variable index out of range");
  return atom_expr(Atom{AtomKind::Var, static_cast<std::uint32_t>(index), {}});
}

Expr Expr::exp(const Expr& arg) {
  if (arg.is_zero()) return Expr(1);
  if (const auto* f = lone_factor(arg, AtomKind::Ln)) return f->atom.arg;
  return atom_expr(Atom{AtomKind::Exp, 0, arg});
}

Expr Expr::sin(const Expr& arg) {
  if (arg.is_zero()) return Expr();
  return atom_expr(Atom{AtomKind::Sin, 0, arg});
}

Expr Expr::cos(const Expr& arg) {
  if (arg.is_zero()) return Expr(1);
  return atom_expr(Atom{AtomKind::Cos, 0, arg});
}

Expr Expr::ln(const Expr& arg) {
  if (arg.is_zero()) throw DomainError("ln of zero", "0");
  if (auto c = arg.constant_value(); c && *c == 1) return Expr();
  if (const auto* f = lone_factor(arg, AtomKind::Exp)) return f->atom.arg;
  return atom_expr(Atom{AtomKind::Ln, 0, arg});
}

Expr Expr::pow(int k) const {
  if (k == 0) return Expr(1);
  if (k < 0) return inverse().pow(-k);
  if (is_single_term()) {
    const auto& t = terms().front();
    Term out;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), t.coeff.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), t.coeff.get_den_mpz_t(), static_cast<unsigned long>(k));
    out.coeff = Rational(num, den);
    out.mono = t.mono;
    for (auto& f : out.mono) f.exponent *= k;
    return from_terms({std::move(out)});
  }
  Expr result(1);
  Expr base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Expr Expr::inverse() const {
  if (is_zero()) throw DomainError("division by zero", "0");
  if (is_single_term()) {
    const auto& t = terms().front();
    Term out{Rational(1) / t.coeff, t.mono};
    for (auto& f : out.mono) f.exponent = -f.exponent;
    return from_terms({std::move(out)});
  }
  // Scale so the leading term has coefficient one; keeps Group atoms canonical.
  const Rational lead = terms().front().coeff;
  const Expr monic = *this * Expr(Rational(1) / lead);
  return Expr(Rational(1) / lead) * atom_expr(Atom{AtomKind::Group, 0, monic}, -1);
}

bool Expr::is_constant() const noexcept {
  if (is_zero()) return true;
  return terms_->size() == 1 && terms_->front().mono.empty();
}

std::optional<Rational> Expr::constant_value() const {
  if (is_zero()) return Rational(0);
  if (is_constant()) return terms_->front().coeff;
  return std::nullopt;
}

std::size_t Expr::term_count() const noexcept { return terms_ ? terms_->size() : 0; }

const std::vector<Term>& Expr::terms() const { return terms_ ? *terms_ : empty_terms(); }

int Expr::max_var() const {
  int m = -1;
  for (const auto& t : terms()) {
    for (const auto& f : t.mono) {
      m = std::max(m, f.atom.kind == AtomKind::Var ? static_cast<int>(f.atom.var)
                                                   : f.atom.arg.max_var());
    }
  }
  return m;
}

namespace {

double eval_atom(const Atom& a, std::span<const double> p) {
  switch (a.kind) {
    case AtomKind::Var:
      if (a.var >= p.size()) throw ChartError("point has too few coordinates");
      return p[a.var];
    case AtomKind::Exp: return std::exp(a.arg.eval(p));
    case AtomKind::Sin: return std::sin(a.arg.eval(p));
    case AtomKind::Cos: return std::cos(a.arg.eval(p));
    case AtomKind::Ln: {
      const double v = a.arg.eval(p);
      if (!(v > 0)) throw DomainError("ln of non-positive value", "ln(" + to_string(a.arg) + ")");
      return std::log(v);
    }
    case AtomKind::Group: return a.arg.eval(p);
  }
  return 0;
}

}  // namespace

double Expr::eval(std::span<const double> point) const {
  double sum = 0;
  for (const auto& t : terms()) {
    double v = t.coeff.get_d();
    for (const auto& f : t.mono) {
      const double base = eval_atom(f.atom, point);
      if (f.exponent < 0 && base == 0) {
        throw DomainError("division by zero", render_atom(f.atom, nullptr));
      }
      v *= f.exponent == 1 ? base : std::pow(base, f.exponent);
    }
    sum += v;
  }
  if (!std::isfinite(sum)) throw DomainError("non-finite value", to_string(*this));
  return sum;
}

std::strong_ordering Expr::compare(const Expr& other) const {
  const auto& a = terms();
  const auto& b = other.terms();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_monomials(a[i].mono, b[i].mono); c != 0) return c;
    if (auto c = cmp_rational(a[i].coeff, b[i].coeff); c != 0) return c;
  }
  return a.size() <=> b.size();
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() && ib != tb.end()) {
    const auto c = compare_monomials(ia->mono, ib->mono);
    if (c < 0) {
      out.push_back(*ia++);
    } else if (c > 0) {
      out.push_back(*ib++);
    } else {
      Rational s = ia->coeff + ib->coeff;
      if (s != 0) out.push_back(Term{std::move(s), ia->mono});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ta.end());
  out.insert(out.end(), ib, tb.end());
  Expr e;
  if (!out.empty()) e.terms_ = std::make_shared<const std::vector<Term>>(std::move(out));
  return e;
}

Expr operator-(const Expr& a) {
  if (a.is_zero()) return a;
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = -t.coeff;
  Expr e;
  e.terms_ = std::make_shared<const std::vector<Term>>(std::move(out));
  return e;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  std::vector<Term> out;
  out.reserve(a.term_count() * b.term_count());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      out.push_back(Term{x.coeff * y.coeff, multiply_monomials(x.mono, y.mono)});
    }
  }
  return Expr::from_terms(std::move(out));
}

namespace {

Expr atom_derivative(const Atom& a, std::size_t index) {
  switch (a.kind) {
    case AtomKind::Var: return a.var == index ? Expr(1) : Expr();
    case AtomKind::Exp: {
      const Expr inner = diff(a.arg, index);
      return inner.is_zero() ? Expr() : Expr::exp(a.arg) * inner;
    }
    case AtomKind::Sin: {
      const Expr inner = diff(a.arg, index);
      return inner.is_zero() ? Expr() : Expr::cos(a.arg) * inner;
    }
    case AtomKind::Cos: {
      const Expr inner = diff(a.arg, index);
      return inner.is_zero() ? Expr() : -(Expr::sin(a.arg) * inner);
    }
    case AtomKind::Ln: {
      const Expr inner = diff(a.arg, index);
      return inner.is_zero() ? Expr() : inner * a.arg.inverse();
    }
    case AtomKind::Group: return diff(a.arg, index);
  }
  return Expr();
}

}  // namespace

Expr diff(const Expr& e, std::size_t index) {
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    for (std::size_t j = 0; j < t.mono.size(); ++j) {
      const Factor& f = t.mono[j];
      const Expr da = atom_derivative(f.atom, index);
      if (da.is_zero()) continue;
      Term rest{t.coeff * f.exponent, t.mono};
      if (f.exponent == 1) {
        rest.mono.erase(rest.mono.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        rest.mono[j].exponent -= 1;
      }
      const Expr piece = Expr::from_terms({std::move(rest)}) * da;
      out.insert(out.end(), piece.terms().begin(), piece.terms().end());
    }
  }
  return Expr::from_terms(std::move(out));
}

Expr diff(const Expr& e, const Chart& chart, std::string_view var) {
  return diff(e, chart.require(var));
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const Expr& e, const Chart& chart) { return render(e, &chart); }
std::string to_string(const Expr& e) { return render(e, nullptr); }

}  // namespace gvk
