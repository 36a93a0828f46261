#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsbent/cyclotomic.hpp"
#include "dsbent/monomial.hpp"

namespace dsbent {

/// Sparse multivariate polynomial over Q(zeta_N): terms sorted descending in
/// the active monomial order, no zero coefficients stored.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    CycNum coeff;
  };

  MultiPoly() = default;
  static MultiPoly zero(FieldPtr field, unsigned nvars, MonomialOrder order = MonomialOrder::Grevlex);
  static MultiPoly constant(FieldPtr field, unsigned nvars, CycNum c,
                            MonomialOrder order = MonomialOrder::Grevlex);
  static MultiPoly term(FieldPtr field, unsigned nvars, Monomial m, CycNum c,
                        MonomialOrder order = MonomialOrder::Grevlex);
  /// Collects (possibly unsorted, possibly repeated) terms.
  static MultiPoly of_terms(FieldPtr field, unsigned nvars, std::vector<Term> terms,
                            MonomialOrder order = MonomialOrder::Grevlex);

  const FieldPtr& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  std::uint32_t degree() const { return degree_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  /// Tail of the polynomial; pre: nonzero.
  MultiPoly without_leading_term() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;

  /// this - c * m * g, the division-step workhorse.
  MultiPoly sub_scaled(const CycNum& c, const Monomial& m, const MultiPoly& g) const;

  MultiPoly scaled(const CycNum& c) const;
  MultiPoly monic() const;

  /// Re-sorts the terms under another order.
  MultiPoly with_order(MonomialOrder order) const;

  /// Substitutes values (one per variable).
  CycNum eval(std::span<const CycNum> values) const;

  /// B^{deg - deg(term)} per term; extra_var must be >= nvars().
  MultiPoly homogenized(std::uint32_t extra_var) const;
  bool is_homogeneous() const;

  bool operator==(const MultiPoly& o) const;

  /// Textual form "c * A_3^2 * A_7 + ...". Rational coefficients print as
  /// p/q; above level 2 they print as power-basis vectors [a0,a1,...].
  std::string str(const std::string& var_prefix = "A_") const;
  /// Parses the textual form (inverse of str for valid input).
  static MultiPoly parse(FieldPtr field, unsigned nvars, std::string_view text,
                         MonomialOrder order = MonomialOrder::Grevlex,
                         const std::string& var_prefix = "A_");

 private:
  void normalize();  // sort, merge, drop zeros, recompute degree

  FieldPtr field_;
  unsigned nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::Grevlex;
  std::vector<Term> terms_;
  std::uint32_t degree_ = 0;
};

}  // namespace dsbent
