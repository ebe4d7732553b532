#include "difacet/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace difacet {

std::string Variable::to_string() const {
  return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

MatrixContext::MatrixContext(int m, int n, FieldSpec f) : rows(m), cols(n), field(std::move(f)) {
  if (m < 1 || n < 1) throw std::invalid_argument("MatrixContext: need at least one row and column");
  if (field.kind == FieldKind::Prime && !is_prime(field.p))
    throw std::invalid_argument("MatrixContext: field modulus must be prime");
}

std::string MatrixContext::to_string() const {
  return std::to_string(rows) + "x" + std::to_string(cols) + " over " + field.to_string();
}

Monomial Monomial::variable(Variable v, int exp) {
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  Monomial m;
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.second < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (f.second == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(f);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent_of(const Variable& v) const {
  for (const Factor& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "*";
    out += factors_[i].first.to_string();
    if (factors_[i].second != 1) out += "^" + std::to_string(factors_[i].second);
  }
  return out;
}

namespace {

void validate_monomial(const Monomial& m, const MatrixContext& ctx) {
  for (const auto& [v, e] : m.factors()) {
    (void)e;
    if (!ctx.contains(v))
      throw std::invalid_argument("monomial variable " + v.to_string() + " outside context " +
                                  ctx.to_string());
  }
}

}  // namespace

Ordering compare_monomials(const Monomial& a, const Monomial& b, const MatrixContext& ctx) {
  validate_monomial(a, ctx);
  validate_monomial(b, ctx);
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  // Factors are sorted by position, most significant variable first. The
  // first variable where the exponents differ decides.
  while (i < fa.size() && j < fb.size()) {
    const Variable &va = fa[i].first, &vb = fb[j].first;
    if (va == vb) {
      if (fa[i].second != fb[j].second)
        return fa[i].second > fb[j].second ? Ordering::Greater : Ordering::Less;
      ++i;
      ++j;
    } else if (va < vb) {
      return Ordering::Greater;  // a has a positive power of a more significant variable
    } else {
      return Ordering::Less;
    }
  }
  if (i < fa.size()) return Ordering::Greater;
  if (j < fb.size()) return Ordering::Less;
  return Ordering::Equal;
}

bool monomial_less(const Monomial& a, const Monomial& b, const MatrixContext& ctx) {
  return compare_monomials(a, b, ctx) == Ordering::Less;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> fs = a.factors();
  fs.insert(fs.end(), b.factors().begin(), b.factors().end());
  return Monomial::from_factors(std::move(fs));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  std::size_t j = 0;
  const auto& fb = b.factors();
  for (const auto& [v, e] : a.factors()) {
    while (j < fb.size() && fb[j].first < v) ++j;
    if (j == fb.size() || !(fb[j].first == v) || fb[j].second < e) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw std::invalid_argument("mono_div: not divisible");
  std::vector<Monomial::Factor> out;
  std::size_t j = 0;
  const auto& fb = b.factors();
  const auto& fa = a.factors();
  for (const auto& f : fb) {
    int e = f.second;
    if (j < fa.size() && fa[j].first == f.first) {
      e -= fa[j].second;
      ++j;
    }
    if (e > 0) out.push_back({f.first, e});
  }
  return Monomial::from_factors(std::move(out));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> out;
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      out.push_back(fb[j++]);
    } else {
      out.push_back({fa[i].first, std::max(fa[i].second, fb[j].second)});
      ++i;
      ++j;
    }
  }
  return Monomial::from_factors(std::move(out));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) return false;
    if (fa[i].first < fb[j].first)
      ++i;
    else
      ++j;
  }
  return true;
}

Polynomial Polynomial::constant(const MatrixContext& ctx, const Rational& c) {
  return from_terms(ctx, {{c, Monomial::one()}});
}

Polynomial Polynomial::variable(const MatrixContext& ctx, Variable v) {
  return from_terms(ctx, {{Rational(1), Monomial::variable(v)}});
}

Polynomial Polynomial::term(const MatrixContext& ctx, const Rational& c, const Monomial& m) {
  return from_terms(ctx, {{c, m}});
}

Polynomial Polynomial::from_terms(const MatrixContext& ctx, std::vector<Term> terms) {
  for (Term& t : terms) {
    validate_monomial(t.mono, ctx);
    t.coeff = field_normalize(t.coeff, ctx.field);
  }
  std::sort(terms.begin(), terms.end(), [&ctx](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono, ctx) == Ordering::Greater;
  });
  Polynomial p(ctx);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field_add(p.terms_.back().coeff, t.coeff, ctx.field);
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial has no leading term");
  return terms_.front();
}

namespace {

void check_ctx(const Polynomial& p, const Polynomial& q) {
  if (p.ctx() != q.ctx())
    throw std::invalid_argument("context mismatch: " + p.ctx().to_string() + " vs " +
                                q.ctx().to_string());
}

}  // namespace

Polynomial add(const Polynomial& p, const Polynomial& q) {
  check_ctx(p, q);
  const MatrixContext& ctx = p.ctx();
  Polynomial out(ctx);
  out.terms_.reserve(p.terms().size() + q.terms().size());
  std::size_t i = 0, j = 0;
  while (i < p.terms().size() && j < q.terms().size()) {
    Ordering ord = compare_monomials(p.terms()[i].mono, q.terms()[j].mono, ctx);
    if (ord == Ordering::Greater) {
      out.terms_.push_back(p.terms()[i++]);
    } else if (ord == Ordering::Less) {
      out.terms_.push_back(q.terms()[j++]);
    } else {
      Rational c = field_add(p.terms()[i].coeff, q.terms()[j].coeff, ctx.field);
      if (!c.is_zero()) out.terms_.push_back({std::move(c), p.terms()[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < p.terms().size(); ++i) out.terms_.push_back(p.terms()[i]);
  for (; j < q.terms().size(); ++j) out.terms_.push_back(q.terms()[j]);
  return out;
}

Polynomial negate(const Polynomial& p) {
  std::vector<Term> ts = p.terms();
  for (Term& t : ts) t.coeff = field_neg(t.coeff, p.ctx().field);
  return Polynomial::from_terms(p.ctx(), std::move(ts));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, negate(q)); }

Polynomial mul_term(const Polynomial& p, const Rational& c, const Monomial& m) {
  if (c.is_zero()) return Polynomial::zero(p.ctx());
  std::vector<Term> ts;
  ts.reserve(p.terms().size());
  for (const Term& t : p.terms())
    ts.push_back({field_mul(t.coeff, c, p.ctx().field), mono_mul(t.mono, m)});
  // Multiplying by a fixed monomial preserves the ordering of terms, so the
  // list is already canonical, but from_terms keeps this airtight.
  return Polynomial::from_terms(p.ctx(), std::move(ts));
}

Polynomial scale(const Polynomial& p, const Rational& c) { return mul_term(p, c, Monomial::one()); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  check_ctx(p, q);
  std::vector<Term> ts;
  ts.reserve(p.terms().size() * q.terms().size());
  for (const Term& a : p.terms())
    for (const Term& b : q.terms())
      ts.push_back({field_mul(a.coeff, b.coeff, p.ctx().field), mono_mul(a.mono, b.mono)});
  return Polynomial::from_terms(p.ctx(), std::move(ts));
}

std::string Polynomial::to_string() const { return render_polynomial(*this); }

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = c.abs();
    if (t.mono.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += t.mono.to_string();
    } else {
      out += mag.to_string() + "*" + t.mono.to_string();
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the rendered polynomial grammar.
class PolyParser {
 public:
  PolyParser(const MatrixContext& ctx, std::string text) : ctx_(ctx), text_(std::move(text)) {
    // Normalize the U+2212 minus sign to ASCII.
    std::string cleaned;
    for (std::size_t i = 0; i < text_.size();) {
      if (i + 2 < text_.size() && static_cast<unsigned char>(text_[i]) == 0xE2 &&
          static_cast<unsigned char>(text_[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text_[i + 2]) == 0x92) {
        cleaned += '-';
        i += 3;
      } else {
        cleaned += text_[i++];
      }
    }
    text_ = std::move(cleaned);
  }

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool neg = consume_sign();
    terms.push_back(parse_term(neg));
    skip_ws();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return Polynomial::from_terms(ctx_, std::move(terms));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                msg);
  }

  long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  Variable parse_variable() {
    if (text_[pos_] != 'x') fail("expected variable");
    ++pos_;
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '['");
    ++pos_;
    int r = static_cast<int>(parse_integer());
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ','");
    ++pos_;
    int c = static_cast<int>(parse_integer());
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
    ++pos_;
    Variable v{r, c};
    if (!ctx_.contains(v)) fail("variable " + v.to_string() + " outside context");
    return v;
  }

  Term parse_term(bool negative) {
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long num = parse_integer();
      long den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = parse_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      have_coeff = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
    }
    std::vector<Monomial::Factor> factors;
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      Variable v = parse_variable();
      int exp = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exp = static_cast<int>(parse_integer());
        if (exp <= 0) fail("exponent must be positive");
      }
      factors.push_back({v, exp});
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else {
        break;
      }
    }
    if (factors.empty() && !have_coeff) fail("expected term");
    if (negative) coeff = -coeff;
    return Term{coeff, Monomial::from_factors(std::move(factors))};
  }

  const MatrixContext& ctx_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const MatrixContext& ctx, const std::string& text) {
  return PolyParser(ctx, text).parse();
}

}  // namespace difacet
