#include "mlines/exact.hpp"

#include <stdexcept>

namespace mlines {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t least_satisfying(std::uint64_t hi, const std::function<bool(std::uint64_t)>& pred) {
  std::uint64_t lo = 0;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Wide wide_pow(Wide base, unsigned exp) {
  Wide r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t floor_two_thirds_power(std::uint64_t n) {
  const Wide sq = Wide{n} * n;
  // first k with k^3 > n^2, minus one
  const std::uint64_t first_above =
      least_satisfying(n + 1, [&](std::uint64_t k) { return wide_pow(k, 3) > sq; });
  return first_above - 1;
}

std::uint64_t ceil_nine_tenths_power(std::uint64_t n) {
  const Wide target = wide_pow(n, 9);
  return least_satisfying(n, [&](std::uint64_t t) { return wide_pow(t, 10) >= target; });
}

std::uint64_t ceil_sqrt(std::uint64_t m) {
  return least_satisfying(m, [&](std::uint64_t t) { return Wide{t} * t >= m; });
}

}  // namespace mlines
