#include "dsbent/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsbent {

GroupSpec::GroupSpec(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("group needs at least one modulus");
  for (std::uint32_t n : moduli_) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (order_ > kMaxOrder / n) throw std::invalid_argument("group order exceeds 2^24 cap");
    order_ *= n;
  }
  place_.assign(moduli_.size(), 1);
  for (std::size_t l = moduli_.size(); l-- > 1;) place_[l - 1] = place_[l] * moduli_[l];
}

bool GroupSpec::is_elementary_2group() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [](std::uint32_t n) { return n == 2; });
}

void GroupSpec::check_element(const GroupElement& e) const {
  if (e.coords.size() != rank()) throw std::invalid_argument("element rank mismatch");
  for (std::size_t l = 0; l < rank(); ++l)
    if (e.coords[l] >= moduli_[l]) throw std::invalid_argument("element coordinate out of range");
}

std::uint64_t GroupSpec::index_of(const GroupElement& e) const {
  check_element(e);
  std::uint64_t idx = 0;
  for (std::size_t l = 0; l < rank(); ++l) idx += e.coords[l] * place_[l];
  return idx;
}

GroupElement GroupSpec::element_at(std::uint64_t index) const {
  if (index >= order_) throw std::out_of_range("element index out of range");
  GroupElement e{std::vector<std::uint32_t>(rank(), 0)};
  for (std::size_t l = 0; l < rank(); ++l) {
    e.coords[l] = static_cast<std::uint32_t>(index / place_[l]);
    index %= place_[l];
  }
  return e;
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  GroupElement r{std::vector<std::uint32_t>(rank(), 0)};
  for (std::size_t l = 0; l < rank(); ++l) {
    std::uint32_t s = a.coords[l] + b.coords[l];
    if (s >= moduli_[l]) s -= moduli_[l];
    r.coords[l] = s;
  }
  return r;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  check_element(a);
  GroupElement r{std::vector<std::uint32_t>(rank(), 0)};
  for (std::size_t l = 0; l < rank(); ++l)
    r.coords[l] = a.coords[l] == 0 ? 0 : moduli_[l] - a.coords[l];
  return r;
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

std::uint64_t GroupSpec::add_index(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r = 0;
  for (std::size_t l = 0; l < rank(); ++l) {
    const std::uint64_t n = moduli_[l];
    std::uint64_t s = a / place_[l] + b / place_[l];
    a %= place_[l];
    b %= place_[l];
    if (s >= n) s -= n;
    r += s * place_[l];
  }
  return r;
}

std::uint64_t GroupSpec::neg_index(std::uint64_t a) const {
  std::uint64_t r = 0;
  for (std::size_t l = 0; l < rank(); ++l) {
    const std::uint64_t n = moduli_[l];
    const std::uint64_t c = a / place_[l];
    a %= place_[l];
    r += (c == 0 ? 0 : n - c) * place_[l];
  }
  return r;
}

std::uint64_t GroupSpec::sub_index(std::uint64_t a, std::uint64_t b) const {
  return add_index(a, neg_index(b));
}

SubsetMask SubsetMask::full(std::uint64_t v) {
  BitVec b(v);
  for (std::uint64_t i = 0; i < v; ++i) b.set(i);
  return SubsetMask(std::move(b));
}

SubsetMask SubsetMask::of_indices(std::uint64_t v, std::span<const std::uint64_t> indices) {
  BitVec b(v);
  for (std::uint64_t i : indices) b.set(i);
  return SubsetMask(std::move(b));
}

SubsetMask SubsetMask::of_indices(std::uint64_t v, std::initializer_list<std::uint64_t> indices) {
  BitVec b(v);
  for (std::uint64_t i : indices) b.set(i);
  return SubsetMask(std::move(b));
}

SubsetMask SubsetMask::from_hex(std::uint64_t v, std::string_view hex) {
  return SubsetMask(BitVec::from_hex(v, hex));
}

std::vector<std::uint64_t> SubsetMask::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  bits_.for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

DSParams::DSParams(std::uint64_t v_, std::uint64_t k_, std::uint64_t lambda_)
    : v(v_), k(k_), lambda(lambda_) {
  if (k > v) throw std::invalid_argument("DSParams requires k <= v");
  if (lambda > k) throw std::invalid_argument("DSParams requires lambda <= k");
}

std::uint64_t diff_count(const GroupSpec& spec, const SubsetMask& D, std::uint64_t g_index) {
  if (D.universe_size() != spec.order()) throw std::invalid_argument("mask size mismatch");
  std::uint64_t n = 0;
  D.bits().for_each_set([&](std::size_t d1) {
    const std::uint64_t d2 = spec.sub_index(d1, g_index);
    if (D.contains(d2)) ++n;
  });
  return n;
}

std::uint64_t diff_count(const GroupSpec& spec, const SubsetMask& D, const GroupElement& g) {
  return diff_count(spec, D, spec.index_of(g));
}

bool is_difference_set_bruteforce(const GroupSpec& spec, const SubsetMask& D,
                                  const DSParams& params) {
  if (params.v != spec.order()) throw std::invalid_argument("params.v does not match group order");
  if (D.count() != params.k) return false;
  for (std::uint64_t g = 1; g < spec.order(); ++g)
    if (diff_count(spec, D, g) != params.lambda) return false;
  return true;
}

namespace {

// Depth-first scan over k-subsets in ascending index order, maintaining the
// table of difference counts. Counts above lambda prune the branch; the
// result equals the plain exhaustive scan.
class SubsetScanner {
 public:
  SubsetScanner(const GroupSpec& spec, const DSParams& params, bool collect)
      : spec_(spec),
        params_(params),
        collect_(collect),
        v_(spec.order()),
        counts_(spec.order(), 0),
        chosen_() {
    chosen_.reserve(params.k);
    // sub_table_[a * v + b] = a - b, precomputed for the whole group
    sub_table_.resize(v_ * v_);
    for (std::uint64_t a = 0; a < v_; ++a)
      for (std::uint64_t b = 0; b < v_; ++b) sub_table_[a * v_ + b] = spec.sub_index(a, b);
  }

  EnumerateResult run() {
    if (params_.k == 0) {
      // The empty set is a (v,0,0)-difference set precisely when lambda = 0.
      if (params_.lambda == 0) {
        result_.count = 1;
        if (collect_) result_.sets.push_back(SubsetMask::empty(v_));
      }
      return std::move(result_);
    }
    descend(0);
    return std::move(result_);
  }

 private:
  void descend(std::uint64_t first_candidate) {
    if (chosen_.size() == params_.k) {
      for (std::uint64_t g = 1; g < v_; ++g)
        if (counts_[g] != params_.lambda) return;
      ++result_.count;
      if (collect_) result_.sets.push_back(SubsetMask::of_indices(v_, chosen_));
      return;
    }
    const std::uint64_t remaining = params_.k - chosen_.size();
    for (std::uint64_t e = first_candidate; e + remaining <= v_; ++e) {
      if (!push(e)) {
        pop(e);
        continue;
      }
      descend(e + 1);
      pop(e);
    }
  }

  // Adds e and updates difference counts; false when some count overshoots.
  bool push(std::uint64_t e) {
    bool ok = true;
    for (std::uint64_t d : chosen_) {
      const std::uint64_t g1 = sub_table_[e * v_ + d];
      const std::uint64_t g2 = sub_table_[d * v_ + e];
      if (++counts_[g1] > params_.lambda) ok = false;
      if (++counts_[g2] > params_.lambda) ok = false;
    }
    chosen_.push_back(e);
    return ok;
  }

  void pop(std::uint64_t e) {
    chosen_.pop_back();
    for (std::uint64_t d : chosen_) {
      --counts_[sub_table_[e * v_ + d]];
      --counts_[sub_table_[d * v_ + e]];
    }
  }

  const GroupSpec& spec_;
  const DSParams& params_;
  const bool collect_;
  const std::uint64_t v_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::uint64_t> sub_table_;
  EnumerateResult result_;
};

}  // namespace

EnumerateResult enumerate_difference_sets(const GroupSpec& spec, const DSParams& params,
                                          const EnumerateOptions& options) {
  if (params.v != spec.order()) throw std::invalid_argument("params.v does not match group order");
  if (spec.order() > options.order_cap)
    throw std::invalid_argument("group order exceeds the enumeration cap");
  return SubsetScanner(spec, params, options.collect).run();
}

}  // namespace dsbent
