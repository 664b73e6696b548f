#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "geoconv/error.hpp"

namespace geoconv {

/// Raw vertex bitmask; bit v is vertex v.
using Mask = std::uint64_t;

/// Largest vertex count supported anywhere in the library (graph6 short form).
inline constexpr int kMaxVertices = 62;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline int popcount(Mask m) { return std::popcount(m); }

/// Calls fn(v) for every vertex in m, in increasing order.
template <typename Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    fn(v);
  }
}

/// Lexicographic order on equal-size sets compared as sorted vertex lists:
/// a precedes b iff the least element of the symmetric difference is in a.
inline bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

/// A subset of {0, ..., n-1}. Binary operations require equal capacity.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity, Mask bits = 0)
      : capacity_(capacity), bits_(bits & full_mask(capacity)) {
    if (capacity < 0 || capacity > kMaxVertices)
      throw Error("vertex set capacity out of range: " +
                  std::to_string(capacity));
  }

  static VertexSet all(int capacity) {
    return VertexSet(capacity, full_mask(capacity));
  }
  static VertexSet of(int capacity, const std::vector<int>& members) {
    VertexSet s(capacity);
    for (int v : members) s.insert(v);
    return s;
  }

  int capacity() const { return capacity_; }
  Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int v) const {
    return v >= 0 && v < capacity_ && (bits_ & bit(v)) != 0;
  }
  void insert(int v) {
    check_index(v);
    bits_ |= bit(v);
  }
  void erase(int v) {
    check_index(v);
    bits_ &= ~bit(v);
  }

  bool is_subset_of(const VertexSet& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
  }

  VertexSet operator|(const VertexSet& o) const {
    check_same(o);
    return VertexSet(capacity_, bits_ | o.bits_);
  }
  VertexSet operator&(const VertexSet& o) const {
    check_same(o);
    return VertexSet(capacity_, bits_ & o.bits_);
  }
  VertexSet operator-(const VertexSet& o) const {
    check_same(o);
    return VertexSet(capacity_, bits_ & ~o.bits_);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each_bit(bits_, [&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_index(int v) const {
    if (v < 0 || v >= capacity_)
      throw Error("vertex " + std::to_string(v) + " outside [0, " +
                  std::to_string(capacity_) + ")");
  }
  void check_same(const VertexSet& o) const {
    if (o.capacity_ != capacity_)
      throw Error("vertex sets of capacity " + std::to_string(capacity_) +
                  " and " + std::to_string(o.capacity_) + " cannot be mixed");
  }

  int capacity_ = 0;
  Mask bits_ = 0;
};

std::string to_string(const VertexSet& s);

}  // namespace geoconv
