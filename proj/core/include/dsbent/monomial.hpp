#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dsbent {

enum class MonomialOrder { Grevlex, Lex };

/// Sparse power product: (variable, exponent) pairs sorted by variable, all
/// exponents positive, with the total degree cached. Variable 0 is the
/// largest in every supported order.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;  // the monomial 1
  static Monomial one() { return Monomial(); }
  static Monomial var(std::uint32_t v, std::uint32_t e = 1);
  static Monomial of_factors(std::vector<Factor> factors);

  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(std::uint32_t v) const;
  std::uint32_t max_var() const { return factors_.empty() ? 0 : factors_.back().first; }

  /// As (variable, exponent) when this is a pure power of one variable.
  std::optional<Factor> as_pure_power() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;     // this | o
  Monomial divide_by(const Monomial& o) const;  // pre: o | this
  Monomial lcm_with(const Monomial& o) const;
  bool coprime_with(const Monomial& o) const;

  /// Negative when a < b, 0 when equal, positive when a > b.
  static int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

  bool operator==(const Monomial&) const = default;

  std::string str(const std::string& var_prefix = "A_",
                  const std::vector<std::string>* names = nullptr) const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

inline bool order_is_degree_compatible(MonomialOrder order) {
  return order == MonomialOrder::Grevlex;
}

}  // namespace dsbent
