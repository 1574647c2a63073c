#include "annular/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace annular {

ExactInt count_maximal(std::uint64_t n, std::uint64_t k) {
  if (n == 0 && k == 0) return 1;
  const std::uint64_t endpoints = 2 * n + k;
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(gcd(endpoints, n))) {
    sum += ExactInt(totient(d)) * binomial(endpoints / d, static_cast<std::int64_t>(n / d));
  }
  return exact_divide(sum, ExactInt(endpoints));
}

ExactInt count_maximal_prime(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("count_maximal_prime: " + std::to_string(p) + " is not prime");
  const std::uint64_t endpoints = 2 * n + p;
  // C(2n+p, n)/(2n+p) + (p-1)/p * C_{n/p}, over the common denominator p(2n+p).
  const ExactInt numerator =
      ExactInt(p) * binomial(endpoints, static_cast<std::int64_t>(n)) +
      ExactInt(p - 1) * ExactInt(endpoints) *
          catalan_ratio(static_cast<std::int64_t>(n), static_cast<std::int64_t>(p));
  return exact_divide(numerator, ExactInt(p) * ExactInt(endpoints));
}

ExactInt count_fixed_crosscuts(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  if (k == 0) return count_maximal(n, 0) * count_maximal(m, 0);
  if (m == 0) return count_maximal(n, k);
  if (n == 0) return count_maximal(m, k);
  const std::uint64_t outer = 2 * n + k;
  const std::uint64_t inner = 2 * m + k;
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(gcd3(outer, n, m))) {
    sum += ExactInt(totient(d)) * binomial(outer / d, static_cast<std::int64_t>(n / d)) *
           binomial(inner / d, static_cast<std::int64_t>(m / d));
  }
  return exact_divide(ExactInt(k) * sum, ExactInt(outer) * ExactInt(inner));
}

ExactInt count_ann(std::uint64_t a, std::uint64_t b) {
  if ((a + b) % 2 != 0) return 0;
  ExactInt total = 0;
  for (std::uint64_t k = a % 2; k <= std::min(a, b); k += 2) {
    total += count_fixed_crosscuts((a - k) / 2, (b - k) / 2, k);
  }
  return total;
}

ExactInt count(const CountQuery& query) {
  const auto a = query.outer_endpoints;
  const auto b = query.inner_endpoints;
  if (!query.crosscuts) return count_ann(a, b);
  const auto k = *query.crosscuts;
  if (k > a || k > b || (a - k) % 2 != 0 || (b - k) % 2 != 0) return 0;
  return count_fixed_crosscuts((a - k) / 2, (b - k) / 2, k);
}

ExactInt count_total(std::uint64_t total_endpoints) {
  if (total_endpoints % 2 != 0) return 0;
  ExactInt total = 0;
  for (std::uint64_t a = 0; a <= total_endpoints; ++a) total += count_ann(a, total_endpoints - a);
  return total;
}

ExactInt count_circular(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_circular: order must be positive");
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += ExactInt(totient(n / d)) * binomial(2 * d, static_cast<std::int64_t>(d));
  }
  // sum/(2n) - C_n/2 + C_{(n-1)/2}/2, over the common denominator 2n.
  const auto order = static_cast<std::int64_t>(n);
  const ExactInt numerator =
      sum - ExactInt(n) * catalan(order) + ExactInt(n) * catalan_ratio(order - 1, 2);
  return exact_divide(numerator, ExactInt(2 * n));
}

ExactInt count_necklace(std::uint64_t black, std::uint64_t white) {
  const std::uint64_t length = black + white;
  if (length == 0) throw std::invalid_argument("count_necklace: empty necklace");
  ExactInt sum = 0;
  for (std::uint64_t d : divisors(gcd(black, white))) {
    sum += ExactInt(totient(d)) * binomial(length / d, static_cast<std::int64_t>(white / d));
  }
  return exact_divide(sum, ExactInt(length));
}

}  // namespace annular
