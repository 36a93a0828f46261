#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsbent/bitvec.hpp"

namespace dsbent {

/// Element of a finite abelian group, stored as canonical coordinates
/// 0 <= coords[l] < n_l.
struct GroupElement {
  std::vector<std::uint32_t> coords;

  bool operator==(const GroupElement&) const = default;
};

/// Finite abelian group Z/n_1 x ... x Z/n_t with a fixed mixed-radix element
/// indexing (first coordinate most significant).
class GroupSpec {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  explicit GroupSpec(std::vector<std::uint32_t> moduli);

  std::size_t rank() const { return moduli_.size(); }
  std::uint32_t modulus(std::size_t l) const { return moduli_[l]; }
  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  std::uint64_t order() const { return order_; }
  bool is_elementary_2group() const;

  GroupElement identity() const { return GroupElement{std::vector<std::uint32_t>(rank(), 0)}; }

  std::uint64_t index_of(const GroupElement& e) const;
  GroupElement element_at(std::uint64_t index) const;

  /// All v elements in ascending mixed-radix index order.
  std::vector<GroupElement> elements() const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  // Index-level arithmetic; avoids materializing coordinates in hot loops.
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_index(std::uint64_t a) const;
  std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const;

  bool operator==(const GroupSpec& other) const { return moduli_ == other.moduli_; }

 private:
  void check_element(const GroupElement& e) const;

  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint64_t> place_;  // place_[l] = prod of moduli after l
  std::uint64_t order_ = 1;
};

/// Characteristic bit vector of a subset, indexed by group element index.
/// Immutable; the popcount is computed once at construction.
class SubsetMask {
 public:
  static SubsetMask empty(std::uint64_t v) { return SubsetMask(BitVec(v)); }
  static SubsetMask full(std::uint64_t v);
  static SubsetMask of_bits(BitVec bits) { return SubsetMask(std::move(bits)); }
  static SubsetMask of_indices(std::uint64_t v, std::span<const std::uint64_t> indices);
  static SubsetMask of_indices(std::uint64_t v, std::initializer_list<std::uint64_t> indices);

  /// Lowercase hex, least significant bit = element index 0, padded to
  /// ceil(v/4) digits; parse accepts an optional 0x prefix.
  static SubsetMask from_hex(std::uint64_t v, std::string_view hex);
  std::string to_hex() const { return bits_.to_hex(); }

  std::uint64_t universe_size() const { return bits_.size(); }
  std::uint64_t count() const { return count_; }
  bool contains(std::uint64_t index) const { return bits_.get(index); }
  const BitVec& bits() const { return bits_; }

  SubsetMask set_minus(const SubsetMask& o) const { return SubsetMask(bits_.and_not(o.bits_)); }
  SubsetMask intersect(const SubsetMask& o) const { return SubsetMask(bits_ & o.bits_); }
  SubsetMask unite(const SubsetMask& o) const { return SubsetMask(bits_ | o.bits_); }
  SubsetMask sym_diff(const SubsetMask& o) const { return SubsetMask(bits_ ^ o.bits_); }
  SubsetMask complement() const { return SubsetMask(bits_.complement()); }

  std::vector<std::uint64_t> indices() const;

  bool operator==(const SubsetMask&) const = default;

 private:
  explicit SubsetMask(BitVec bits) : bits_(std::move(bits)), count_(bits_.popcount()) {}

  BitVec bits_;
  std::uint64_t count_ = 0;
};

/// (v, k, lambda) parameter triple. The counting identity k(k-1) = lambda(v-1)
/// is deliberately not enforced at construction; query it via consistent().
struct DSParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;

  DSParams(std::uint64_t v_, std::uint64_t k_, std::uint64_t lambda_);

  bool consistent() const { return k * (k - (k > 0 ? 1 : 0)) == lambda * (v - (v > 0 ? 1 : 0)); }

  bool operator==(const DSParams&) const = default;
};

inline bool params_consistent(const DSParams& p) { return p.consistent(); }

/// Number of ordered pairs (d1, d2) in D x D with d1 - d2 = g.
std::uint64_t diff_count(const GroupSpec& spec, const SubsetMask& D, const GroupElement& g);
std::uint64_t diff_count(const GroupSpec& spec, const SubsetMask& D, std::uint64_t g_index);

/// Definition check: |D| = k and every non-identity difference hit lambda times.
bool is_difference_set_bruteforce(const GroupSpec& spec, const SubsetMask& D, const DSParams& params);

struct EnumerateOptions {
  std::uint64_t order_cap = 24;
  bool collect = false;
};

struct EnumerateResult {
  std::uint64_t count = 0;
  std::vector<SubsetMask> sets;  // filled when collect requested
};

/// Exhaustive scan over all k-subsets of the group, counting those that are
/// (v,k,lambda)-difference sets. Throws when spec.order() exceeds the cap.
EnumerateResult enumerate_difference_sets(const GroupSpec& spec, const DSParams& params,
                                          const EnumerateOptions& options = {});

}  // namespace dsbent
