#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace latentid {

/// Set of node ids in [0, 64) packed into a single machine word.
class NodeSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int v : nodes) insert(v);
  }

  static NodeSet from_vector(const std::vector<int>& nodes) {
    NodeSet s;
    for (int v : nodes) s.insert(v);
    return s;
  }

  /// {0, 1, ..., count - 1}
  static constexpr NodeSet first_n(int count) {
    if (count >= kCapacity) return NodeSet(~std::uint64_t{0});
    return NodeSet((std::uint64_t{1} << count) - 1);
  }

  static constexpr NodeSet single(int v) { return NodeSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool contains(NodeSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  NodeSet& operator|=(NodeSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  NodeSet& operator&=(NodeSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(NodeSet a, NodeSet b) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Calls fn(v) for each element in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  /// "{1,4,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending element lists.
bool lex_less(NodeSet a, NodeSet b);

/// Order by cardinality, then lexicographically.
bool size_lex_less(NodeSet a, NodeSet b);

/// Every subset of `s`, including the empty set and `s` itself.
template <typename Fn>
void for_each_subset(NodeSet s, Fn&& fn) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(NodeSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

struct NodeSetHash {
  std::size_t operator()(NodeSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace latentid
