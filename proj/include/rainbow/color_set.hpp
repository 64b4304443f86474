#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rainbow {

using ColorId = int;

// Set of interned color ids, stored as a bitset.  Color ids are dense and
// small (bounded by the edge count of the graph under study), so word-level
// storage keeps every set operation a few popcounts.
class ColorSet {
 public:
  ColorSet() = default;

  void insert(ColorId c) {
    std::size_t w = static_cast<std::size_t>(c) >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (c & 63);
  }

  bool contains(ColorId c) const {
    if (c < 0) return false;
    std::size_t w = static_cast<std::size_t>(c) >> 6;
    if (w >= words_.size()) return false;
    return (words_[w] >> (c & 63)) & 1;
  }

  int size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  ColorSet& operator|=(const ColorSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  ColorSet operator|(const ColorSet& o) const {
    ColorSet r = *this;
    r |= o;
    return r;
  }

  ColorSet operator&(const ColorSet& o) const {
    ColorSet r;
    std::size_t n = std::min(words_.size(), o.words_.size());
    r.words_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  // Set difference: elements of *this not in o.
  ColorSet operator-(const ColorSet& o) const {
    ColorSet r = *this;
    std::size_t n = std::min(r.words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  bool operator==(const ColorSet& o) const {
    std::size_t n = std::max(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t a = i < words_.size() ? words_[i] : 0;
      std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
      if (a != b) return false;
    }
    return true;
  }
  bool operator!=(const ColorSet& o) const { return !(*this == o); }

  bool intersects(const ColorSet& o) const {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const ColorSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~b) return false;
    }
    return true;
  }

  // Ascending list of members.
  std::vector<ColorId> to_vector() const {
    std::vector<ColorId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<ColorId>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace rainbow
