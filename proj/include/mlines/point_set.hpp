#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mlines/error.hpp"

namespace mlines {

/// Fixed-universe bit vector over point indices [0, universe). Serves as the
/// canonical key of a line: two lines are equal iff their PointSets are.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static PointSet full(std::size_t universe);
  static PointSet of(std::size_t universe, const std::vector<PointId>& members);

  std::size_t universe() const noexcept { return universe_; }

  void insert(PointId p) noexcept { words_[p >> 6] |= (std::uint64_t{1} << (p & 63)); }
  void erase(PointId p) noexcept { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
  bool contains(PointId p) const noexcept { return (words_[p >> 6] >> (p & 63)) & 1U; }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const PointSet& other) const noexcept;
  bool intersects(const PointSet& other) const noexcept;

  PointSet& operator|=(const PointSet& other) noexcept;
  PointSet& operator&=(const PointSet& other) noexcept;

  /// Members in increasing order.
  std::vector<PointId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<PointId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Orders by the increasing member list, compared lexicographically. This is
  /// the order of every exported line set.
  friend bool operator<(const PointSet& a, const PointSet& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

}  // namespace mlines
