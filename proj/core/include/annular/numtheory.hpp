#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace annular {

/// Unbounded exact integer used for every count in the library.
using ExactInt = boost::multiprecision::cpp_int;

/// gcd(x, 0) = x and gcd(0, 0) = 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// All positive divisors of x in ascending order. Throws std::invalid_argument for x == 0.
std::vector<std::uint64_t> divisors(std::uint64_t x);

/// Euler's totient. Throws std::invalid_argument for d == 0.
std::uint64_t totient(std::uint64_t d);

/// Exact binomial coefficient; zero when b < 0 or b > a.
ExactInt binomial(std::uint64_t a, std::int64_t b);

/// n-th Catalan number; zero for negative n.
ExactInt catalan(std::int64_t n);

/// Catalan number at the index numerator/denominator, zero whenever that
/// index is not a nonnegative integer.
ExactInt catalan_ratio(std::int64_t numerator, std::int64_t denominator);

bool is_prime(std::uint64_t p);

/// numerator / denominator, throwing std::logic_error when the division
/// leaves a remainder. Every closed-form count divides exactly; a remainder
/// means a broken formula.
ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator);

}  // namespace annular
