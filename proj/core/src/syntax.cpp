#include "gvk/syntax.hpp"

#include <cctype>
#include <variant>

namespace gvk {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_function(std::string_view s) { return s == "exp" || s == "sin" || s == "cos" || s == "ln"; }

enum class Tok { Number, Var, Vector, Form, Func, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string text;
  Rational number = 0;
  std::size_t index = 0;

  Token(Tok k, std::size_t off, std::string t = {}, Rational num = 0, std::size_t idx = 0)
      : kind(k), offset(off), text(std::move(t)), number(std::move(num)), index(idx) {}
};

const std::vector<std::string>& operand_expected() {
  static const std::vector<std::string> e{"number", "variable", "d/d<var>", "d<var>", "function", "(", "-"};
  return e;
}

class Lexer {
 public:
  Lexer(std::string_view text, const Chart& chart, SourcePos at) : text_(text), chart_(chart), at_(at) {}

  [[noreturn]] void fail(std::size_t offset, const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError(at_.line, at_.column + offset, msg, std::move(expected));
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
      if (i >= text_.size()) {
        out.push_back(Token{Tok::End, i});
        return out;
      }
      out.push_back(next(i));
    }
  }

 private:
  Token next(std::size_t& i) {
    const std::size_t start = i;
    const char c = text_[i];
    auto single = [&](Tok k) {
      ++i;
      return Token{k, start, std::string(1, c)};
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(i);
    if (!ident_start(c)) fail(start, std::string("unexpected character '") + c + "'", operand_expected());

    if (text_.substr(i, 3) == "d/d" && i + 3 < text_.size() && ident_start(text_[i + 3])) {
      std::size_t j = i + 3;
      while (j < text_.size() && ident_char(text_[j])) ++j;
      const std::string name(text_.substr(i + 3, j - i - 3));
      const auto idx = chart_.index_of(name);
      if (!idx) fail(start + 3, "unknown variable '" + name + "'");
      i = j;
      return Token{Tok::Vector, start, std::string(text_.substr(start, j - start)), 0, *idx};
    }
    std::size_t j = i;
    while (j < text_.size() && ident_char(text_[j])) ++j;
    std::string name(text_.substr(i, j - i));
    i = j;
    if (auto idx = chart_.index_of(name)) return Token{Tok::Var, start, name, 0, *idx};
    if (name.size() > 1 && name[0] == 'd') {
      if (auto idx = chart_.index_of(std::string_view(name).substr(1))) {
        return Token{Tok::Form, start, name, 0, *idx};
      }
    }
    if (is_function(name)) return Token{Tok::Func, start, name};
    fail(start, "unknown variable '" + name + "'");
  }

  Token number(std::size_t& i) {
    const std::size_t start = i;
    std::string digits;
    long scale = 0;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) digits += text_[i++];
    bool decimal = false;
    if (i < text_.size() && text_[i] == '.') {
      decimal = true;
      ++i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
        digits += text_[i++];
        --scale;
      }
    }
    if (digits.empty()) fail(start, "malformed number", {"digit"});
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      decimal = true;
      std::size_t j = i + 1;
      bool neg = false;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) neg = text_[j++] == '-';
      const std::size_t exp_start = j;
      long e = 0;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        e = e * 10 + (text_[j++] - '0');
        if (e > 400) fail(exp_start, "exponent out of range");
      }
      if (j == exp_start) fail(j, "malformed exponent", {"digit"});
      scale += neg ? -e : e;
      i = j;
    }
    Rational value(mpz_class(digits, 10), 1);
    if (scale > 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale));
      value *= p;
    } else if (scale < 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-scale));
      value /= p;
    }
    if (!decimal && i + 1 < text_.size() && text_[i] == '/' && std::isdigit(static_cast<unsigned char>(text_[i + 1]))) {
      std::string den;
      std::size_t j = i + 1;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) den += text_[j++];
      mpz_class d(den, 10);
      if (d == 0) fail(i + 1, "zero denominator");
      value /= d;
      i = j;
    }
    value.canonicalize();
    return Token{Tok::Number, start, std::string(text_.substr(start, i - start)), value};
  }

  std::string_view text_;
  const Chart& chart_;
  SourcePos at_;
};

using Value = std::variant<Expr, MultiVector, DiffForm>;

class Parser {
 public:
  Parser(std::string_view text, ChartPtr chart, SourcePos at)
      : chart_(std::move(chart)), at_(at), tokens_(Lexer(text, *chart_, at).run()) {}

  Value parse() {
    Value v = sum();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'", {"+", "-", "*", "^", "end of expression"});
    return v;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError(at_.line, at_.column + t.offset, msg, std::move(expected));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  Value sum() {
    Value acc = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      Value rhs = product();
      acc = add(op, std::move(acc), op.kind == Tok::Minus ? negate(std::move(rhs)) : std::move(rhs));
    }
    return acc;
  }

  Value product() {
    Value acc = unary();
    while (peek().kind == Tok::Star) {
      const Token& op = take();
      Value rhs = unary();
      acc = multiply(op, std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Value unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return negate(unary());
    }
    return power();
  }

  Value power() {
    Value acc = primary();
    while (peek().kind == Tok::Caret) {
      const Token& op = take();
      bool neg = false;
      if (peek().kind == Tok::Minus) {
        take();
        neg = true;
      }
      Value rhs = primary();
      if (neg) rhs = negate(std::move(rhs));
      acc = caret(op, std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Value primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number: return Expr(t.number);
      case Tok::Var: return Expr::var(t.index);
      case Tok::Vector: return MultiVector::unit(chart_, t.index);
      case Tok::Form: return DiffForm::unit(chart_, t.index);
      case Tok::Func: {
        expect(Tok::LParen, "(");
        const Token& arg_start = peek();
        Value arg = sum();
        expect(Tok::RParen, ")");
        const auto* e = std::get_if<Expr>(&arg);
        if (!e) fail(arg_start, "argument of " + t.text + " must be a scalar");
        if (t.text == "exp") return Expr::exp(*e);
        if (t.text == "sin") return Expr::sin(*e);
        if (t.text == "cos") return Expr::cos(*e);
        return Expr::ln(*e);
      }
      case Tok::LParen: {
        Value v = sum();
        expect(Tok::RParen, ")");
        return v;
      }
      case Tok::End: fail(t, "unexpected end of expression", operand_expected());
      default: fail(t, "unexpected '" + t.text + "'", operand_expected());
    }
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) {
      const Token& t = peek();
      fail(t, t.kind == Tok::End ? std::string("unexpected end of expression") : "unexpected '" + t.text + "'",
           {what});
    }
    take();
  }

  static Value negate(Value v) {
    return std::visit([](auto&& x) -> Value { return -x; }, std::move(v));
  }

  template <Variance V>
  Graded<V> lift_scalar(const Expr& e, int grade) const {
    if (e.is_zero()) return Graded<V>(chart_, grade);
    return Graded<V>::scalar(chart_, e);
  }

  template <Variance V>
  Graded<V> add_graded(const Token& op, Graded<V> a, const Graded<V>& b) const {
    if (a.grade() != b.grade()) {
      fail(op, "sum of grade " + std::to_string(a.grade()) + " and grade " + std::to_string(b.grade()) + " terms");
    }
    return a += b;
  }

  Value add(const Token& op, Value a, Value b) const {
    if (auto* x = std::get_if<Expr>(&a)) {
      if (auto* y = std::get_if<Expr>(&b)) return *x + *y;
      if (auto* y = std::get_if<MultiVector>(&b)) return add_graded(op, lift_scalar<Variance::Vector>(*x, y->grade()), *y);
      const auto& w = std::get<DiffForm>(b);
      return add_graded(op, lift_scalar<Variance::Form>(*x, w.grade()), w);
    }
    if (auto* u = std::get_if<MultiVector>(&a)) {
      if (auto* y = std::get_if<Expr>(&b)) return add_graded(op, *u, lift_scalar<Variance::Vector>(*y, u->grade()));
      if (auto* y = std::get_if<MultiVector>(&b)) return add_graded(op, *u, *y);
      fail(op, "sum of a multivector and a form");
    }
    const auto& w = std::get<DiffForm>(a);
    if (auto* y = std::get_if<Expr>(&b)) return add_graded(op, w, lift_scalar<Variance::Form>(*y, w.grade()));
    if (auto* y = std::get_if<DiffForm>(&b)) return add_graded(op, w, *y);
    fail(op, "sum of a form and a multivector");
  }

  Value multiply(const Token& op, Value a, Value b) const {
    const auto* x = std::get_if<Expr>(&a);
    const auto* y = std::get_if<Expr>(&b);
    if (x && y) return *x * *y;
    if (x) return std::visit([&](auto&& g) -> Value {
      if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Expr>) return *x * g;
      else return *x * g;
    }, std::move(b));
    if (y) return std::visit([&](auto&& g) -> Value {
      if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Expr>) return g * *y;
      else return g * *y;
    }, std::move(a));
    fail(op, "'*' between two graded elements; use '^' for the wedge product", {"^"});
  }

  std::optional<int> integer_of(const Value& v) const {
    const auto* e = std::get_if<Expr>(&v);
    if (!e) return std::nullopt;
    const auto c = e->constant_value();
    if (!c || c->get_den() != 1 || !c->get_num().fits_sint_p()) return std::nullopt;
    return static_cast<int>(c->get_num().get_si());
  }

  Value caret(const Token& op, Value a, Value b) const {
    const auto k = integer_of(b);
    if (auto* x = std::get_if<Expr>(&a)) {
      if (k) {
        if (x->is_zero() && *k < 0) fail(op, "negative power of zero");
        return x->pow(*k);
      }
      if (std::holds_alternative<Expr>(b)) fail(op, "exponent must be an integer constant", {"integer"});
      return multiply(op, std::move(a), std::move(b));
    }
    if (k) {
      if (*k < 0) fail(op, "negative wedge power");
      return std::visit([&](auto&& g) -> Value {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Expr>) return g;
        else return gvk::power(g, *k);
      }, std::move(a));
    }
    if (std::holds_alternative<Expr>(b)) return multiply(op, std::move(a), std::move(b));
    if (a.index() != b.index()) fail(op, "wedge of a multivector with a form");
    if (auto* u = std::get_if<MultiVector>(&a)) return wedge(*u, std::get<MultiVector>(b));
    return wedge(std::get<DiffForm>(a), std::get<DiffForm>(b));
  }

  ChartPtr chart_;
  SourcePos at_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <Variance V>
Graded<V> parse_graded(std::string_view text, const ChartPtr& chart, std::optional<int> grade, SourcePos at) {
  Value v = Parser(text, chart, at).parse();
  const char* noun = V == Variance::Vector ? "multivector" : "form";
  if (auto* e = std::get_if<Expr>(&v)) {
    if (e->is_zero() && grade) return Graded<V>(chart, *grade);
    v = Graded<V>::scalar(chart, *e);
  }
  auto* g = std::get_if<Graded<V>>(&v);
  if (!g) {
    throw ParseError(at.line, at.column, std::string("expected a ") + noun + ", got " +
                                             (V == Variance::Vector ? "a form" : "a multivector"));
  }
  if (grade && g->grade() != *grade) {
    if (g->is_zero()) return Graded<V>(chart, *grade);
    throw ParseError(at.line, at.column, "expected a grade-" + std::to_string(*grade) + " " + noun +
                                             ", got grade " + std::to_string(g->grade()));
  }
  return std::move(*g);
}

}  // namespace

Expr parse_scalar(std::string_view text, const ChartPtr& chart, SourcePos at) {
  Value v = Parser(text, chart, at).parse();
  if (auto* e = std::get_if<Expr>(&v)) return *e;
  if (auto* u = std::get_if<MultiVector>(&v); u && u->grade() == 0) return u->coeff(0);
  if (auto* w = std::get_if<DiffForm>(&v); w && w->grade() == 0) return w->coeff(0);
  throw ParseError(at.line, at.column, "expected a scalar expression");
}

MultiVector parse_multivector(std::string_view text, const ChartPtr& chart, std::optional<int> grade, SourcePos at) {
  return parse_graded<Variance::Vector>(text, chart, grade, at);
}

DiffForm parse_form(std::string_view text, const ChartPtr& chart, std::optional<int> grade, SourcePos at) {
  return parse_graded<Variance::Form>(text, chart, grade, at);
}

void validate_chart_names(const Chart& chart, SourcePos at) {
  for (const auto& v : chart.vars()) {
    const bool ident = ident_start(v[0]) && std::all_of(v.begin(), v.end(), ident_char);
    if (!ident) throw ParseError(at.line, at.column, "variable name '" + v + "' is not an identifier");
    if (is_function(v)) throw ParseError(at.line, at.column, "variable name '" + v + "' is a function name");
    if (v.size() > 1 && v[0] == 'd' && chart.index_of(std::string_view(v).substr(1))) {
      throw ParseError(at.line, at.column, "variable name '" + v + "' reads as the differential of '" +
                                               v.substr(1) + "'");
    }
  }
}

}  // namespace gvk
