#include "mlines/point_set.hpp"

#include <algorithm>

namespace mlines {

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (PointId p = 0; p < universe; ++p) s.insert(p);
  return s;
}

PointSet PointSet::of(std::size_t universe, const std::vector<PointId>& members) {
  PointSet s(universe);
  for (PointId p : members) s.insert(p);
  return s;
}

std::size_t PointSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PointSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PointSet::is_subset_of(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

PointSet& PointSet::operator|=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<PointId> PointSet::members() const {
  std::vector<PointId> out;
  out.reserve(count());
  for_each([&](PointId p) { out.push_back(p); });
  return out;
}

std::size_t PointSet::hash() const noexcept {
  // FNV-1a over the words, mixed with the universe size.
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool operator<(const PointSet& a, const PointSet& b) noexcept {
  // Lexicographic on increasing member lists: scan for the first index where
  // membership differs. The set holding that index is smaller, unless the
  // other set has already ended (a proper prefix is smaller).
  const std::size_t nw = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < nw; ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool a_has = (a.words_[w] >> bit) & 1U;
    // Members of both sets below the differing index agree. If the set that
    // lacks the index has no further members, it is a proper prefix.
    const PointSet& lacking = a_has ? b : a;
    bool lacking_has_more = false;
    const std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    if ((lacking.words_[w] & above) != 0) lacking_has_more = true;
    for (std::size_t v = w + 1; !lacking_has_more && v < lacking.words_.size(); ++v) {
      lacking_has_more = lacking.words_[v] != 0;
    }
    if (!lacking_has_more) return !a_has;  // a is the prefix iff a lacks the index
    return a_has;
  }
  return a.universe_ < b.universe_;
}

}  // namespace mlines
