#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weiltate {

/// Points are 0-based internally; every textual form (cycle notation, index
/// lists) is 1-based.
using Point = std::uint8_t;

/// Hard limit of the bitmask representation of index subsets.
inline constexpr int kMaxPoints = 32;

/// Subset of {0, ..., n-1} for n <= 32, stored as a bitmask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  /// From 0-based points.
  static IndexSet of(const std::vector<int>& points);
  /// From 1-based indices (as written in files and reports).
  static IndexSet from_one_based(const std::vector<int>& indices);
  static constexpr IndexSet range(int begin, int end) {
    std::uint32_t b = 0;
    for (int i = begin; i < end; ++i) b |= (1u << i);
    return IndexSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= (1u << i); }
  constexpr void erase(int i) { bits_ &= ~(1u << i); }
  /// Smallest member; undefined for the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet complement(int n) const {
    return IndexSet(~bits_ & (n >= 32 ? 0xffffffffu : ((1u << n) - 1u)));
  }

  std::vector<int> to_vector() const;
  std::vector<int> to_one_based() const;
  /// "{1, 2, 3}"
  std::string to_string() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic comparison of the sorted index lists.
bool lex_less(IndexSet a, IndexSet b);

/// A bijection of {0, ..., n-1}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws HypothesisError if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(int n);
  /// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3 4)(5 6 7 8)".
  /// "()" and the empty string denote the identity.
  static Permutation from_cycles(int n, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  IndexSet apply(IndexSet s) const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace weiltate
