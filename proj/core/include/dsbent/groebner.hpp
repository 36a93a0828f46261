#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dsbent/polynomial.hpp"

namespace dsbent {

/// Raised when a computation exceeds its configured resource budget.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerLimits {
  std::uint64_t max_reduction_steps = 1'000'000;
  double max_seconds = 0.0;  // 0 = no wall-clock cap
};

struct GroebnerBasis {
  std::vector<MultiPoly> generators;  // monic, sorted by leading monomial descending
  MonomialOrder order = MonomialOrder::Grevlex;
  bool reduced = false;
  unsigned nvars = 0;
  FieldPtr field;
};

/// Full normal form of p against the basis polynomials, first-divisor rule.
/// steps, when given, accumulates the number of division steps taken.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      std::uint64_t* steps = nullptr,
                      const BuchbergerLimits& limits = BuchbergerLimits{});

/// Buchberger's algorithm with the two standard pair-elimination criteria and
/// normal (minimal-lcm) selection; returns the reduced basis, which is unique
/// for the order and independent of generator input order.
GroebnerBasis buchberger(std::vector<MultiPoly> generators,
                         MonomialOrder order = MonomialOrder::Grevlex,
                         const BuchbergerLimits& limits = BuchbergerLimits{});

}  // namespace dsbent
