#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace mlines {

/// Normalized exact rational (den > 0, gcd(num, den) = 1).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const;
};

using Wide = unsigned __int128;

/// Least k >= 0 with pred(k), for a monotone predicate that eventually holds
/// at or below `hi`.
std::uint64_t least_satisfying(std::uint64_t hi, const std::function<bool(std::uint64_t)>& pred);

/// Largest k with k^3 <= n^2, i.e. floor(n^(2/3)).
std::uint64_t floor_two_thirds_power(std::uint64_t n);

/// Smallest T with T^10 >= n^9, i.e. ceil(n^(9/10)).
std::uint64_t ceil_nine_tenths_power(std::uint64_t n);

/// Smallest t with t^2 >= m, i.e. ceil(sqrt(m)).
std::uint64_t ceil_sqrt(std::uint64_t m);

Wide wide_pow(Wide base, unsigned exp);

inline std::uint64_t binom2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace mlines
