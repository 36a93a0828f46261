#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsbent {

/// Fixed-width bit vector. Backs subset masks and truth tables.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    check_index(i);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }

  void flip(std::size_t i) {
    check_index(i);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool operator==(const BitVec& other) const = default;

  BitVec operator&(const BitVec& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  BitVec operator|(const BitVec& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  BitVec operator^(const BitVec& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }
  BitVec and_not(const BitVec& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

  BitVec complement() const {
    BitVec r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  /// Visits set bit indices in ascending order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = __builtin_ctzll(w);
        f(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> set_indices() const {
    std::vector<std::size_t> out;
    out.reserve(popcount());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Lowercase hex, most significant digit first, padded to ceil(nbits/4) digits.
  /// Bit 0 is the least significant bit of the value.
  std::string to_hex() const {
    const std::size_t digits = (nbits_ + 3) / 4;
    std::string s(digits == 0 ? 1 : digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
      const std::size_t shift = 4 * d;
      const unsigned nib = static_cast<unsigned>((words_[shift >> 6] >> (shift & 63)) & 0xF);
      s[s.size() - 1 - d] = "0123456789abcdef"[nib];
    }
    return s;
  }

  /// Parses hex (optional 0x prefix, case-insensitive). Rejects values with
  /// bits at or above nbits.
  static BitVec from_hex(std::size_t nbits, std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty hex string");
    BitVec r(nbits);
    for (std::size_t d = 0; d < hex.size(); ++d) {
      const char c = hex[hex.size() - 1 - d];
      unsigned nib;
      if (c >= '0' && c <= '9')
        nib = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        nib = static_cast<unsigned>(c - 'a') + 10;
      else if (c >= 'A' && c <= 'F')
        nib = static_cast<unsigned>(c - 'A') + 10;
      else
        throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
      if (nib == 0) continue;
      const std::size_t shift = 4 * d;
      if (shift + 3 >= nbits) {
        for (unsigned b = 0; b < 4; ++b)
          if ((nib >> b) & 1u) {
            if (shift + b >= nbits)
              throw std::invalid_argument("hex value has bits beyond vector width");
            r.set(shift + b);
          }
      } else {
        r.words_[shift >> 6] |= std::uint64_t{nib} << (shift & 63);
      }
    }
    return r;
  }

 private:
  template <class Op>
  BitVec zip(const BitVec& o, Op op) const {
    if (o.nbits_ != nbits_) throw std::invalid_argument("bit vector size mismatch");
    BitVec r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
    return r;
  }

  void check_index(std::size_t i) const {
    if (i >= nbits_) throw std::out_of_range("bit index out of range");
  }

  void trim() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dsbent
