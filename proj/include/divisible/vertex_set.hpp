#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "divisible/errors.hpp"

namespace divisible {

/// Hard upper bound on the order of a Graph; vertex sets are single machine words.
inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

/// A subset of the vertices 0..host_size-1 of some host graph.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int host_size) : host_size_(host_size) { check_host(host_size); }
  VertexSet(int host_size, std::initializer_list<int> members) : VertexSet(host_size) {
    for (int v : members) insert(v);
  }
  VertexSet(int host_size, const std::vector<int>& members) : VertexSet(host_size) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int host_size) { return from_bits(host_size, low_bits(host_size)); }
  static VertexSet from_bits(int host_size, std::uint64_t bits) {
    VertexSet s(host_size);
    if ((bits & ~low_bits(host_size)) != 0) throw InvalidArgument("vertex set member out of range");
    s.bits_ = bits;
    return s;
  }

  int host_size() const { return host_size_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return v >= 0 && v < host_size_ && (bits_ & bit(v)) != 0; }
  /// Smallest member; -1 when empty.
  int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  VertexSet& insert(int v) {
    check_member(v);
    bits_ |= bit(v);
    return *this;
  }
  VertexSet& erase(int v) {
    check_member(v);
    bits_ &= ~bit(v);
    return *this;
  }
  VertexSet with(int v) const { return VertexSet(*this).insert(v); }
  VertexSet without(int v) const { return VertexSet(*this).erase(v); }

  VertexSet complement() const { return from_raw(host_size_, ~bits_ & low_bits(host_size_)); }
  bool is_subset_of(const VertexSet& other) const {
    same_host(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const VertexSet& other) const {
    same_host(other);
    return (bits_ & other.bits_) != 0;
  }

  VertexSet operator|(const VertexSet& o) const {
    same_host(o);
    return from_raw(host_size_, bits_ | o.bits_);
  }
  VertexSet operator&(const VertexSet& o) const {
    same_host(o);
    return from_raw(host_size_, bits_ & o.bits_);
  }
  VertexSet operator-(const VertexSet& o) const {
    same_host(o);
    return from_raw(host_size_, bits_ & ~o.bits_);
  }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }
  bool operator==(const VertexSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<int> members() const { return {begin(), end()}; }
  std::string to_string() const;

 private:
  static VertexSet from_raw(int host_size, std::uint64_t bits) {
    VertexSet s;
    s.host_size_ = host_size;
    s.bits_ = bits;
    return s;
  }
  static void check_host(int host_size) {
    if (host_size < 0 || host_size > kMaxVertices)
      throw InvalidArgument("host size " + std::to_string(host_size) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
  void check_member(int v) const {
    if (v < 0 || v >= host_size_)
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range for host of size " +
                            std::to_string(host_size_));
  }
  void same_host(const VertexSet& o) const {
    if (o.host_size_ != host_size_) throw InvalidArgument("vertex sets belong to different hosts");
  }

  int host_size_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace divisible
