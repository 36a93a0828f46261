#include "dsbent/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dsbent {

MultiPoly MultiPoly::zero(FieldPtr field, unsigned nvars, MonomialOrder order) {
  MultiPoly p;
  p.field_ = std::move(field);
  p.nvars_ = nvars;
  p.order_ = order;
  return p;
}

MultiPoly MultiPoly::constant(FieldPtr field, unsigned nvars, CycNum c, MonomialOrder order) {
  return term(std::move(field), nvars, Monomial::one(), std::move(c), order);
}

MultiPoly MultiPoly::term(FieldPtr field, unsigned nvars, Monomial m, CycNum c,
                          MonomialOrder order) {
  MultiPoly p = zero(std::move(field), nvars, order);
  if (!c.is_zero()) {
    p.terms_.push_back(Term{std::move(m), std::move(c)});
    p.degree_ = p.terms_[0].mono.degree();
  }
  return p;
}

MultiPoly MultiPoly::of_terms(FieldPtr field, unsigned nvars, std::vector<Term> terms,
                              MonomialOrder order) {
  MultiPoly p = zero(std::move(field), nvars, order);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  for (const Term& t : terms_)
    if (t.mono.max_var() >= nvars_ && !t.mono.is_one())
      throw std::invalid_argument("monomial variable beyond ring arity");
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return Monomial::compare(a.mono, b.mono, order_) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  terms_.clear();
  degree_ = 0;
  for (Term& t : merged) {
    if (t.coeff.is_zero()) continue;
    degree_ = std::max(degree_, t.mono.degree());
    terms_.push_back(std::move(t));
  }
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_[0];
}

MultiPoly MultiPoly::without_leading_term() const {
  if (terms_.empty()) throw std::logic_error("tail of the zero polynomial");
  MultiPoly r = zero(field_, nvars_, order_);
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  for (const Term& t : r.terms_) r.degree_ = std::max(r.degree_, t.mono.degree());
  return r;
}

namespace {

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ring arity mismatch");
  if (a.order() != b.order()) throw std::invalid_argument("monomial order mismatch");
  if (a.field()->level() != b.field()->level())
    throw std::invalid_argument("coefficient field mismatch");
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(*this, o);
  MultiPoly r = zero(field_, nvars_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size())
      cmp = -1;
    else if (j == o.terms_.size())
      cmp = 1;
    else
      cmp = Monomial::compare(terms_[i].mono, o.terms_[j].mono, order_);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      CycNum c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back(Term{terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (const Term& t : r.terms_) r.degree_ = std::max(r.degree_, t.mono.degree());
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::sub_scaled(const CycNum& c, const Monomial& m, const MultiPoly& g) const {
  check_compatible(*this, g);
  MultiPoly r = zero(field_, nvars_, order_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    // candidate from g, shifted by m
    Monomial gm;
    if (j < g.terms_.size()) gm = g.terms_[j].mono * m;
    int cmp;
    if (i == terms_.size())
      cmp = -1;
    else if (j == g.terms_.size())
      cmp = 1;
    else
      cmp = Monomial::compare(terms_[i].mono, gm, order_);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      CycNum nc = -(c * g.terms_[j].coeff);
      if (!nc.is_zero()) r.terms_.push_back(Term{std::move(gm), std::move(nc)});
      ++j;
    } else {
      CycNum nc = terms_[i].coeff - c * g.terms_[j].coeff;
      if (!nc.is_zero()) r.terms_.push_back(Term{terms_[i].mono, std::move(nc)});
      ++i;
      ++j;
    }
  }
  for (const Term& t : r.terms_) r.degree_ = std::max(r.degree_, t.mono.degree());
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(*this, o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return of_terms(field_, nvars_, std::move(prod), order_);
}

MultiPoly MultiPoly::scaled(const CycNum& c) const {
  if (c.is_zero()) return zero(field_, nvars_, order_);
  MultiPoly r = *this;
  for (Term& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_term().coeff.inverse());
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
  MultiPoly r = *this;
  r.order_ = order;
  r.normalize();
  return r;
}

CycNum MultiPoly::eval(std::span<const CycNum> values) const {
  if (values.size() < nvars_) throw std::invalid_argument("not enough values for eval");
  CycNum acc = CycNum::zero(field_);
  for (const Term& t : terms_) {
    CycNum prod = t.coeff;
    for (const auto& [v, e] : t.mono.factors())
      for (std::uint32_t p = 0; p < e; ++p) prod = prod * values[v];
    acc += prod;
  }
  return acc;
}

MultiPoly MultiPoly::homogenized(std::uint32_t extra_var) const {
  if (extra_var < nvars_) throw std::invalid_argument("homogenization variable inside the ring");
  MultiPoly r = zero(field_, extra_var + 1, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    const std::uint32_t lift = degree_ - t.mono.degree();
    terms.push_back(Term{t.mono * Monomial::var(extra_var, lift), t.coeff});
  }
  return of_terms(field_, extra_var + 1, std::move(terms), order_);
}

bool MultiPoly::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != degree_) return false;
  return true;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string MultiPoly::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.str();
    if (!t.mono.is_one()) os << " * " << t.mono.str(var_prefix);
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

Rational parse_rational(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
  while (c.pos < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '/'))
    ++c.pos;
  if (c.pos == start) throw std::invalid_argument("expected a rational literal");
  Rational r(std::string(c.s.substr(start, c.pos - start)));
  r.canonicalize();
  return r;
}

CycNum parse_coeff(Cursor& c, const FieldPtr& field) {
  if (c.peek() == '[') {
    c.eat('[');
    std::vector<Rational> coeffs;
    while (true) {
      coeffs.push_back(parse_rational(c));
      if (!c.eat(',')) break;
    }
    if (!c.eat(']')) throw std::invalid_argument("expected ']' in coefficient vector");
    if (coeffs.size() > field->degree())
      throw std::invalid_argument("coefficient vector longer than field degree");
    CycNum acc = CycNum::zero(field);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      acc += CycNum::root_power(field, static_cast<long long>(i)).scaled(coeffs[i]);
    return acc;
  }
  return CycNum::of(field, parse_rational(c));
}

}  // namespace

MultiPoly MultiPoly::parse(FieldPtr field, unsigned nvars, std::string_view text,
                           MonomialOrder order, const std::string& var_prefix) {
  Cursor c{text};
  std::vector<Term> terms;
  bool negate_next = false;
  if (c.eat('-')) negate_next = true;
  while (!c.done()) {
    CycNum coeff = parse_coeff(c, field);
    if (negate_next) coeff = -coeff;
    std::vector<Monomial::Factor> factors;
    while (c.eat('*')) {
      c.skip_ws();
      if (c.s.substr(c.pos, var_prefix.size()) != var_prefix)
        throw std::invalid_argument("expected variable after '*'");
      c.pos += var_prefix.size();
      std::size_t start = c.pos;
      while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
      if (c.pos == start) throw std::invalid_argument("expected variable index");
      const std::uint32_t v =
          static_cast<std::uint32_t>(std::stoul(std::string(c.s.substr(start, c.pos - start))));
      std::uint32_t e = 1;
      if (c.eat('^')) {
        c.skip_ws();
        start = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        if (c.pos == start) throw std::invalid_argument("expected exponent");
        e = static_cast<std::uint32_t>(std::stoul(std::string(c.s.substr(start, c.pos - start))));
      }
      factors.emplace_back(v, e);
    }
    terms.push_back(Term{Monomial::of_factors(std::move(factors)), std::move(coeff)});
    negate_next = false;
    if (c.eat('+')) continue;
    if (c.eat('-')) {
      negate_next = true;
      continue;
    }
    break;
  }
  if (!c.done()) throw std::invalid_argument("trailing characters in polynomial text");
  return of_terms(std::move(field), nvars, std::move(terms), order);
}

}  // namespace dsbent
