#include "dsbent/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsbent {

Monomial Monomial::var(std::uint32_t v, std::uint32_t e) {
  Monomial m;
  if (e > 0) {
    m.factors_.emplace_back(v, e);
    m.degree_ = e;
  }
  return m;
}

Monomial Monomial::of_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

std::optional<Monomial::Factor> Monomial::as_pure_power() const {
  if (factors_.size() == 1) return factors_[0];
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first))
      r.factors_.push_back(factors_[i++]);
    else if (i == factors_.size() || o.factors_[j].first < factors_[i].first)
      r.factors_.push_back(o.factors_[j++]);
    else {
      r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < o.factors_.size() && o.factors_[j].first < v) ++j;
    if (j == o.factors_.size() || o.factors_[j].first != v || o.factors_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    while (j < o.factors_.size() && o.factors_[j].first < v) ++j;
    if (j < o.factors_.size() && o.factors_[j].first == v) sub = o.factors_[j].second;
    if (sub > e) throw std::invalid_argument("monomial division is not exact");
    if (e - sub > 0) {
      r.factors_.emplace_back(v, e - sub);
      r.degree_ += e - sub;
    }
  }
  if (o.degree() > degree_) throw std::invalid_argument("monomial division is not exact");
  return r;
}

Monomial Monomial::lcm_with(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first))
      r.factors_.push_back(factors_[i++]);
    else if (i == factors_.size() || o.factors_[j].first < factors_[i].first)
      r.factors_.push_back(o.factors_[j++]);
    else {
      r.factors_.emplace_back(factors_[i].first, std::max(factors_[i].second, o.factors_[j].second));
      ++i;
      ++j;
    }
  }
  for (const auto& [v, e] : r.factors_) r.degree_ += e;
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first < o.factors_[j].first)
      ++i;
    else if (o.factors_[j].first < factors_[i].first)
      ++j;
    else
      return false;
  }
  return true;
}

namespace {

// Grevlex tie-break: scan from the largest variable index downward; at the
// first variable where exponents differ, the monomial with the smaller
// exponent is the larger one.
int grevlex_tail(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = fa.size(), j = fb.size();
  while (i > 0 || j > 0) {
    const std::uint32_t va = i > 0 ? fa[i - 1].first : 0;
    const std::uint32_t vb = j > 0 ? fb[j - 1].first : 0;
    if (i > 0 && (j == 0 || va > vb)) {
      // a has a positive exponent at va, b has zero there
      return -1;
    }
    if (j > 0 && (i == 0 || vb > va)) {
      return 1;
    }
    // same variable
    const std::uint32_t ea = fa[i - 1].second;
    const std::uint32_t eb = fb[j - 1].second;
    if (ea != eb) return ea < eb ? 1 : -1;
    --i;
    --j;
  }
  return 0;
}

// Lex with variable 0 largest: compare exponents from variable 0 upward.
int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    const std::uint32_t va = i < fa.size() ? fa[i].first : UINT32_MAX;
    const std::uint32_t vb = j < fb.size() ? fb[j].first : UINT32_MAX;
    if (va < vb) return 1;   // a has the smaller (more significant) variable
    if (vb < va) return -1;
    const std::uint32_t ea = fa[i].second;
    const std::uint32_t eb = fb[j].second;
    if (ea != eb) return ea > eb ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

}  // namespace

int Monomial::compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return grevlex_tail(a, b);
    case MonomialOrder::Lex:
      return lex_compare(a, b);
  }
  throw std::logic_error("unknown monomial order");
}

std::string Monomial::str(const std::string& var_prefix,
                          const std::vector<std::string>* names) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    if (names && v < names->size())
      os << (*names)[v];
    else
      os << var_prefix << v;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace dsbent
