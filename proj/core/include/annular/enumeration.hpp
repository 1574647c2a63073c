#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "annular/model.hpp"
#include "annular/numtheory.hpp"

namespace annular {

/// Limits on brute-force enumeration. Instances over the limits are refused
/// with BudgetExceeded instead of running for hours.
struct EnumerationBudget {
  std::uint64_t max_outer_endpoints = 14;
  std::uint64_t max_inner_endpoints = 14;
  /// Ceiling on raw candidate states (and therefore on stored forms).
  std::uint64_t memory_ceiling = 100'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All Dyck words of semilength n in increasing symbol order (U < D).
std::vector<DyckWord> gen_dyck(std::size_t n);

/// All weak compositions of total into exactly `parts` parts, first part
/// descending. Throws std::invalid_argument for parts == 0.
std::vector<std::vector<std::size_t>> gen_compositions(std::size_t total, std::size_t parts);

/// Number of raw cell sequences (k >= 1) or raw boundary-word pairs (k = 0)
/// that the cell oracle examines for (n, m, k).
ExactInt raw_cell_states(std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Number of (outer left set, inner left set, twist) states for (n, m, k).
ExactInt raw_leftset_states(std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Every canonical matching with n outer half-circles, m inner half-circles
/// and k cross-cuts, sorted by code.
std::vector<AnnularMatching> enumerate_matchings(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                                                 const EnumerationBudget& budget = {});

/// |enumerate_matchings(n, m, k)| without storing the matchings: a raw cell
/// sequence is counted iff it is its own least rotation. The search is split
/// by first cell across `threads` workers; the total does not depend on it.
ExactInt oracle_count(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                      const EnumerationBudget& budget = {}, unsigned threads = 1);

/// Distinct canonical matchings reached by matching_from_leftset over every
/// choice of left endpoints on both boundaries and every twist.
ExactInt state_oracle_count(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                            const EnumerationBudget& budget = {});

/// Circular non-crossing matchings of order n up to rotation, each given by
/// the least U/D reading over all 2n starting points. Sorted.
std::vector<std::string> enumerate_circular(std::uint64_t n, const EnumerationBudget& budget = {});

}  // namespace annular
