#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace qae {

/// Fixed-length vector of binary variables, packed 64 per word.
/// Bit i of the vector lives in word i/64 at position i%64.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool operator==(const BitVec& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// Lexicographic order on the bit sequence (q_0, q_1, ..., q_{n-1});
  /// a leading 0 sorts before a leading 1.
  bool lex_less(const BitVec& o) const {
    const std::size_t nw = words_.size();
    for (std::size_t k = 0; k < nw; ++k) {
      const std::uint64_t d = words_[k] ^ o.words_[k];
      if (d) {
        const int b = std::countr_zero(d);
        return ((words_[k] >> b) & 1u) == 0;
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qae
