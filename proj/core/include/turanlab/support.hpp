#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace turanlab {

// Bitmask over a vertex set [0, n), n <= 32.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxUniverse = 64;

// A subset of an indexed variable universe of at most 64 elements. Used for
// squarefree monomial supports, edge sets of r-graphs and copy edge sets.
class Support {
 public:
  constexpr Support() = default;
  constexpr explicit Support(std::uint64_t bits) : bits_(bits) {}

  static constexpr Support single(int i) { return Support(std::uint64_t{1} << i); }
  static constexpr Support full(int size) {
    return Support(size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Support other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Support other) const { return (bits_ & other.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr Support& insert(int i) {
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }
  constexpr Support& erase(int i) {
    bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }

  constexpr Support operator|(Support o) const { return Support(bits_ | o.bits_); }
  constexpr Support operator&(Support o) const { return Support(bits_ & o.bits_); }
  constexpr Support operator^(Support o) const { return Support(bits_ ^ o.bits_); }
  constexpr Support minus(Support o) const { return Support(bits_ & ~o.bits_); }
  constexpr Support& operator|=(Support o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Support& operator&=(Support o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const Support&) const = default;

  // Ascending element indices.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical witness order shared by every exact search in the library.
// `a` precedes `b` when, at the lowest index where they differ, `a` contains
// the element. Among sets of equal size this is the lexicographic order of
// their sorted element lists, and it is the order in which an include-first
// depth-first search over ascending indices reaches its leaves.
constexpr bool canonical_less(Support a, Support b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

struct SupportHash {
  std::size_t operator()(Support s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

inline int vertex_count(VertexSet s) { return std::popcount(s); }

inline std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

}  // namespace turanlab
