#include "annular/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace annular {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return gcd(gcd(a, b), c);
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    small.push_back(d);
    if (d != x / d) large.push_back(x / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t totient(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("totient: argument must be positive");
  std::uint64_t result = d;
  std::uint64_t rest = d;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

ExactInt binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) return 0;
  std::uint64_t k = static_cast<std::uint64_t>(b);
  if (k > a - k) k = a - k;
  ExactInt result = 1;
  // Each partial product is itself a binomial coefficient, so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= a - k + i;
    result /= i;
  }
  return result;
}

ExactInt catalan(std::int64_t n) {
  if (n < 0) return 0;
  const auto u = static_cast<std::uint64_t>(n);
  return exact_divide(binomial(2 * u, n), ExactInt(u + 1));
}

ExactInt catalan_ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("catalan_ratio: zero denominator");
  if (numerator % denominator != 0) return 0;
  return catalan(numerator / denominator);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator == 0) throw std::logic_error("exact_divide: division by zero");
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_divide: " + numerator.str() + " is not divisible by " +
                           denominator.str());
  }
  return quotient;
}

}  // namespace annular
