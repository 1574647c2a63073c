#include <doctest.h>

#include "annular/counting.hpp"
#include "brute_force.hpp"
#include "reference_tables.hpp"

using namespace annular;

TEST_CASE("count_maximal") {
  CHECK(count_maximal(4, 3) == 30);
  CHECK(count_maximal(0, 0) == 1);
  CHECK(count_maximal(10, 10) == 1001603);
  for (std::uint64_t n = 0; n <= 10; ++n) {
    for (std::uint64_t k = 0; k <= 10; ++k) CHECK(count_maximal(n, k) == reference::kMaximal[n][k]);
  }
}

TEST_CASE("count_maximal_prime") {
  CHECK(count_maximal_prime(2, 2) == 3);
  CHECK(count_maximal_prime(3, 3) == 10);
  CHECK(count_maximal_prime(5, 2) == 66);
  CHECK_THROWS_AS(count_maximal_prime(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_maximal_prime(3, 1), std::invalid_argument);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t n = 0; n <= 20; ++n) CHECK(count_maximal_prime(n, p) == count_maximal(n, p));
  }
}

TEST_CASE("count_fixed_crosscuts examples") {
  CHECK(count_fixed_crosscuts(2, 1, 2) == 5);
  CHECK(count_fixed_crosscuts(1, 1, 2) == 2);
  CHECK(count_fixed_crosscuts(2, 2, 0) == 4);
  CHECK(count_fixed_crosscuts(2, 2, 2) == 13);
  CHECK(count_fixed_crosscuts(1, 1, 4) == 4);
}

TEST_CASE("count_fixed_crosscuts matches naive orbit enumeration") {
  for (std::uint64_t k = 0; k <= 8; ++k) {
    for (std::uint64_t n = 0; 2 * n + k <= 8; ++n) {
      for (std::uint64_t m = 0; 2 * m + k <= 8; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(count_fixed_crosscuts(n, m, k) == brute::annular_classes(n, m, k));
      }
    }
  }
}

TEST_CASE("symmetry under exchanging the boundaries") {
  for (std::uint64_t n = 0; n <= 16; ++n) {
    for (std::uint64_t m = 0; m <= 16; ++m) {
      for (std::uint64_t k = 0; k <= 16; ++k) {
        CHECK(count_fixed_crosscuts(n, m, k) == count_fixed_crosscuts(m, n, k));
      }
      CHECK(count_ann(n, m) == count_ann(m, n));
    }
  }
}

TEST_CASE("reduction to the maximal case") {
  for (std::uint64_t n = 0; n <= 15; ++n) {
    for (std::uint64_t k = 0; k <= 15; ++k) {
      CHECK(count_fixed_crosscuts(n, 0, k) == count_maximal(n, k));
      CHECK(count_fixed_crosscuts(0, n, k) == count_maximal(n, k));
    }
    for (std::uint64_t m = 0; m <= 15; ++m) {
      CHECK(count_fixed_crosscuts(n, m, 0) == count_maximal(n, 0) * count_maximal(m, 0));
    }
  }
}

TEST_CASE("with two or more cross-cuts and both half-circle kinds the count exceeds the product") {
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      for (std::uint64_t m = 1; m <= 4; ++m) {
        CHECK(count_fixed_crosscuts(n, m, k) > count_maximal(n, k) * count_maximal(m, k));
      }
    }
  }
}

TEST_CASE("count_ann") {
  CHECK(count_ann(6, 6) == 34);
  CHECK(count_ann(3, 2) == 0);
  CHECK(count_ann(12, 12) == 24198);
  CHECK(count_ann(6, 6) == count_fixed_crosscuts(3, 3, 0) + count_fixed_crosscuts(2, 2, 2) +
                               count_fixed_crosscuts(1, 1, 4) + count_fixed_crosscuts(0, 0, 6));
  for (std::uint64_t a = 0; a <= 12; ++a) {
    for (std::uint64_t b = 0; b <= 12; ++b) CHECK(count_ann(a, b) == reference::kAnn[a][b]);
  }
}

TEST_CASE("count dispatches on the query") {
  CHECK(count({6, 6, std::nullopt}) == 34);
  CHECK(count({6, 4, 2}) == 5);
  CHECK(count({6, 4, 1}) == 0);
  CHECK(count({6, 4, 8}) == 0);
  CHECK(count({3, 2, std::nullopt}) == 0);
}

TEST_CASE("count_total") {
  CHECK(count_total(8) == 57);
  CHECK(count_total(2) == 3);
  CHECK(count_total(26) == 3544416);
  CHECK(count_total(7) == 0);
  for (std::uint64_t n = 0; n <= 13; ++n) CHECK(count_total(2 * n) == reference::kTotal[n]);
}

TEST_CASE("count_circular") {
  CHECK(count_circular(1) == 1);
  CHECK(count_circular(2) == 1);
  CHECK(count_circular(3) == 2);
  CHECK_THROWS_AS(count_circular(0), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 7; ++n) CHECK(count_circular(n) == brute::circular_classes(n));
}

TEST_CASE("count_necklace") {
  CHECK(count_necklace(2, 1) == 1);
  CHECK(count_necklace(4, 2) == 3);
  CHECK(count_necklace(5, 0) == 1);
  CHECK_THROWS_AS(count_necklace(0, 0), std::invalid_argument);
  for (std::uint64_t b = 0; b <= 9; ++b) {
    for (std::uint64_t w = 0; w <= 9; ++w) {
      if (b + w == 0) continue;
      CHECK(count_necklace(b, w) == brute::necklaces(b, w).size());
    }
  }
}
