#include "dsbent/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dsbent {

namespace {

// Z[x] polynomials as coefficient vectors, constant term first.
using ZPoly = std::vector<mpz_class>;

ZPoly ztrim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Exact division, valid when b is monic and divides a.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) throw std::logic_error("inexact cyclotomic division");
  ZPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const mpz_class c = a[shift + b.size() - 1];
    if (c == 0) continue;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  for (const mpz_class& c : a)
    if (c != 0) throw std::logic_error("inexact cyclotomic division");
  return ztrim(std::move(q));
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
ZPoly cyclotomic_zpoly(unsigned n, std::map<unsigned, ZPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = zdiv_exact(std::move(p), cyclotomic_zpoly(d, cache));
  cache.emplace(n, p);
  return p;
}

}  // namespace

namespace polyq {

std::vector<Rational> trim(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(std::move(r));
}

std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> a,
                                                               const std::vector<Rational>& b_in) {
  std::vector<Rational> b = trim(b_in);
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  a = trim(std::move(a));
  std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return {trim(std::move(q)), std::move(a)};
}

}  // namespace polyq

CyclotomicField::CyclotomicField(unsigned n) : n_(n) {
  if (n == 0) throw std::invalid_argument("cyclotomic level must be positive");
  std::map<unsigned, ZPoly> cache;
  const ZPoly phi = cyclotomic_zpoly(n, cache);
  degree_ = static_cast<unsigned>(phi.size() - 1);
  min_poly_.reserve(phi.size());
  for (const mpz_class& c : phi) min_poly_.emplace_back(c);

  // x^degree = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})  (Phi monic)
  std::vector<Rational> top(degree_, Rational(0));
  for (unsigned i = 0; i < degree_; ++i) top[i] = -min_poly_[i];

  // overflow_[j] = x^{degree+j} mod Phi
  overflow_.resize(degree_ > 1 ? degree_ - 1 : 0);
  std::vector<Rational> cur = top;
  for (unsigned j = 0; j + 1 < degree_; ++j) {
    if (j > 0) {
      // multiply by x: shift up, fold the spill through top
      std::vector<Rational> next(degree_, Rational(0));
      const Rational spill = cur[degree_ - 1];
      for (unsigned i = degree_ - 1; i-- > 0;) next[i + 1] = cur[i];
      if (spill != 0)
        for (unsigned i = 0; i < degree_; ++i) next[i] += spill * top[i];
      cur = std::move(next);
    }
    overflow_[j] = cur;
  }

  zeta_pow_.resize(n_);
  std::vector<Rational> z(degree_, Rational(0));
  z[0] = 1;
  for (unsigned e = 0; e < n_; ++e) {
    zeta_pow_[e] = z;
    // z *= x, folding the spilled top coefficient back through Phi
    std::vector<Rational> next(degree_, Rational(0));
    const Rational spill = z[degree_ - 1];
    for (unsigned i = 0; i + 1 < degree_; ++i) next[i + 1] = z[i];
    if (spill != 0)
      for (unsigned i = 0; i < degree_; ++i) next[i] += spill * top[i];
    z = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned level) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(level);
  if (it != registry.end()) return it->second;
  auto f = std::shared_ptr<const CyclotomicField>(new CyclotomicField(level));
  registry.emplace(level, f);
  return f;
}

CycNum CycNum::zero(FieldPtr f) {
  std::vector<Rational> c(f->degree(), Rational(0));
  return CycNum(std::move(f), std::move(c));
}

CycNum CycNum::of(FieldPtr f, Rational r) {
  r.canonicalize();  // raw mpq_class construction need not be canonical
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = std::move(r);
  return CycNum(std::move(f), std::move(c));
}

CycNum CycNum::root_power(FieldPtr f, long long e) {
  const long long n = f->level();
  long long r = e % n;
  if (r < 0) r += n;
  std::vector<Rational> c = f->root_power(static_cast<unsigned>(r));
  return CycNum(std::move(f), std::move(c));
}

void CycNum::check_same_field(const CycNum& o) const {
  if (is_null() || o.is_null()) throw std::invalid_argument("operation on null CycNum");
  if (field_->level() != o.field_->level())
    throw std::invalid_argument("cyclotomic level mismatch");
}

bool CycNum::is_zero() const {
  for (const Rational& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (is_null()) throw std::invalid_argument("null CycNum");
  if (!is_rational()) throw std::domain_error("CycNum is not rational");
  return c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r += o;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

CycNum CycNum::scaled(const Rational& r) const {
  Rational s = r;
  s.canonicalize();
  CycNum out = *this;
  for (Rational& x : out.c_) x *= s;
  return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
  check_same_field(o);
  const unsigned d = field_->degree();
  if (d == 1) {
    std::vector<Rational> c{c_[0] * o.c_[0]};
    return CycNum(field_, std::move(c));
  }
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (unsigned i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + d);
  for (unsigned j = 0; j + 1 < d; ++j) {
    if (conv[d + j] == 0) continue;
    const std::vector<Rational>& row = field_->overflow_row(j);
    for (unsigned i = 0; i < d; ++i) out[i] += conv[d + j] * row[i];
  }
  return CycNum(field_, std::move(out));
}

CycNum CycNum::conj() const {
  if (is_null()) throw std::invalid_argument("null CycNum");
  const unsigned n = field_->level();
  CycNum out = zero(field_);
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::vector<Rational>& rep = field_->root_power((n - i) % n);
    for (unsigned j = 0; j < c_.size(); ++j) out.c_[j] += c_[i] * rep[j];
  }
  return out;
}

CycNum CycNum::inverse() const {
  if (is_null()) throw std::invalid_argument("null CycNum");
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  if (field_->degree() == 1) {
    std::vector<Rational> c{Rational(1) / c_[0]};
    return CycNum(field_, std::move(c));
  }
  // Extended Euclid: u * c + w * Phi = gcd = const, so c^{-1} = u / const.
  std::vector<Rational> r0 = field_->minimal_polynomial();
  std::vector<Rational> r1 = polyq::trim(c_);
  if (r1.size() == 1) return of(field_, Rational(1) / r1[0]);
  std::vector<Rational> u0, u1{Rational(1)};
  while (true) {
    auto [q, rem] = polyq::divmod(r0, r1);
    // u2 = u0 - q*u1
    std::vector<Rational> qu = polyq::mul(q, u1);
    std::vector<Rational> u2 = u0;
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
    for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    u2 = polyq::trim(std::move(u2));
    r0 = std::move(r1);
    r1 = polyq::trim(std::move(rem));
    u0 = std::move(u1);
    u1 = std::move(u2);
    if (r1.size() == 1) break;  // constant gcd (Phi irreducible, c nonzero)
    if (r1.empty()) throw std::logic_error("unexpected zero remainder inverting CycNum");
  }
  const Rational g = r1[0];
  std::vector<Rational> out(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < u1.size() && i < out.size(); ++i) out[i] = u1[i] / g;
  return CycNum(field_, std::move(out));
}

bool CycNum::operator==(const CycNum& o) const {
  if (is_null() && o.is_null()) return true;
  if (is_null() || o.is_null()) return false;
  return field_->level() == o.field_->level() && c_ == o.c_;
}

std::string CycNum::str() const {
  if (is_null()) return "<null>";
  if (field_->level() <= 2 || field_->degree() == 1) return c_[0].get_str();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  os << ']';
  return os.str();
}

}  // namespace dsbent
