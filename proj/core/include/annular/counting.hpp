#pragma once

#include <cstdint>
#include <optional>

#include "annular/numtheory.hpp"

namespace annular {

/// A request for |Ann(a, b)| or, when crosscuts is set, |Ann_k(a, b)|.
struct CountQuery {
  std::uint64_t outer_endpoints = 0;
  std::uint64_t inner_endpoints = 0;
  std::optional<std::uint64_t> crosscuts;
};

/// |Ann_k(2n+k, k)|: maximal cross-cut matchings with n outer half-circles.
ExactInt count_maximal(std::uint64_t n, std::uint64_t k);

/// The same count through the prime-k simplification. Throws
/// std::invalid_argument unless p is prime.
ExactInt count_maximal_prime(std::uint64_t n, std::uint64_t p);

/// |Ann_k(2n+k, 2m+k)|: n outer half-circles, m inner half-circles, k cross-cuts.
ExactInt count_fixed_crosscuts(std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// |Ann(a, b)|, summed over every feasible number of cross-cuts.
ExactInt count_ann(std::uint64_t a, std::uint64_t b);

/// Evaluates a query with endpoint counts; infeasible parities give zero.
ExactInt count(const CountQuery& query);

/// |Ann(N)|: all matchings with N endpoints in total.
ExactInt count_total(std::uint64_t total_endpoints);

/// Circular non-crossing matchings of order n up to rotation. Throws for n == 0.
ExactInt count_circular(std::uint64_t n);

/// N_2(black, white): binary necklaces with the given bead counts.
/// Throws when both are zero.
ExactInt count_necklace(std::uint64_t black, std::uint64_t white);

}  // namespace annular
