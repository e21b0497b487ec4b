#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace torsion {

using ObjectId = std::uint32_t;

// Set of indecomposables of one finite model, as a bitmask over object ids.
class ObjectSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ObjectId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ObjectId*;
    using reference = ObjectId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    ObjectId operator*() const { return static_cast<ObjectId>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ObjectSet() = default;
  ObjectSet(std::initializer_list<ObjectId> ids) {
    for (ObjectId id : ids) insert(id);
  }
  static constexpr ObjectSet from_bits(std::uint64_t bits) {
    ObjectSet s;
    s.bits_ = bits;
    return s;
  }
  static ObjectSet first(std::size_t n) {
    if (n > kCapacity) throw std::length_error("ObjectSet holds at most 64 objects");
    return from_bits(n == kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(ObjectId id) const { return id < kCapacity && (bits_ >> id & 1u); }
  void insert(ObjectId id) {
    if (id >= kCapacity) throw std::length_error("ObjectSet holds at most 64 objects");
    bits_ |= std::uint64_t{1} << id;
  }
  void erase(ObjectId id) {
    if (id < kCapacity) bits_ &= ~(std::uint64_t{1} << id);
  }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(ObjectSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(ObjectSet o) const { return (bits_ & o.bits_) != 0; }
  std::uint64_t bits() const { return bits_; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<ObjectId> to_vector() const { return {begin(), end()}; }

  ObjectSet& operator|=(ObjectSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ObjectSet& operator&=(ObjectSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  ObjectSet& operator-=(ObjectSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend ObjectSet operator|(ObjectSet a, ObjectSet b) { return a |= b; }
  friend ObjectSet operator&(ObjectSet a, ObjectSet b) { return a &= b; }
  friend ObjectSet operator-(ObjectSet a, ObjectSet b) { return a -= b; }
  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;
  friend bool operator<(const ObjectSet& a, const ObjectSet& b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace torsion
