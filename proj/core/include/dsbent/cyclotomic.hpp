#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dsbent {

using Rational = mpq_class;

/// Shared context for Q(zeta_N): the N-th cyclotomic polynomial, the power
/// basis 1, zeta, ..., zeta^{phi(N)-1}, and reduction tables for products.
/// Levels N = 1, 2 degenerate to plain rationals (degree 1).
class CyclotomicField {
 public:
  /// Cached, thread-safe lookup by level.
  static std::shared_ptr<const CyclotomicField> get(unsigned level);

  unsigned level() const { return n_; }
  unsigned degree() const { return degree_; }  // phi(N)

  /// Monic Phi_N coefficients, constant term first, size degree()+1.
  const std::vector<Rational>& minimal_polynomial() const { return min_poly_; }

  /// zeta^e reduced mod Phi_N, e in [0, N).
  const std::vector<Rational>& root_power(unsigned e) const { return zeta_pow_[e % n_]; }

  /// x^{degree+j} mod Phi_N for j in [0, degree-1); used to fold products.
  const std::vector<Rational>& overflow_row(unsigned j) const { return overflow_[j]; }

 private:
  explicit CyclotomicField(unsigned n);

  unsigned n_ = 1;
  unsigned degree_ = 1;
  std::vector<Rational> min_poly_;
  std::vector<std::vector<Rational>> zeta_pow_;
  std::vector<std::vector<Rational>> overflow_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N) in the power basis, always reduced mod Phi_N.
/// Equality is coefficientwise; there is no floating point anywhere.
class CycNum {
 public:
  CycNum() = default;  // null value; usable only as a placeholder

  static CycNum zero(FieldPtr f);
  static CycNum one(FieldPtr f) { return of(std::move(f), Rational(1)); }
  static CycNum of(FieldPtr f, Rational r);
  static CycNum of_int(FieldPtr f, long v) { return of(std::move(f), Rational(v)); }
  /// zeta^e (any integer exponent; reduced mod N).
  static CycNum root_power(FieldPtr f, long long e);

  bool is_null() const { return field_ == nullptr; }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws when the value has a nonzero coefficient beyond the constant.
  Rational to_rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);

  CycNum scaled(const Rational& r) const;

  /// Galois conjugate zeta -> zeta^{-1} (complex conjugation on unit roots).
  CycNum conj() const;

  /// Multiplicative inverse; throws on zero.
  CycNum inverse() const;

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  /// "p/q" when the level is at most 2 or the value is rational at level 1/2;
  /// otherwise "[a0,a1,...]" in the power basis.
  std::string str() const;

 private:
  CycNum(FieldPtr f, std::vector<Rational> c) : field_(std::move(f)), c_(std::move(c)) {}

  void check_same_field(const CycNum& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Extended Euclid helpers over Q[x]; exposed for tests.
namespace polyq {
std::vector<Rational> trim(std::vector<Rational> p);
std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b);
/// Quotient and remainder of a by b (b nonzero).
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> a,
                                                               const std::vector<Rational>& b);
}  // namespace polyq

}  // namespace dsbent
