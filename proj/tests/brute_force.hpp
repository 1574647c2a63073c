#pragma once

// Deliberately naive reference computations used to derive expected values.
// Nothing here calls into the library; everything is generate-and-dedupe.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brute {

using Int = boost::multiprecision::cpp_int;

inline std::uint64_t totient(std::uint64_t d) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= d; ++i) count += std::gcd(i, d) == 1 ? 1 : 0;
  return count;
}

inline std::vector<std::vector<Int>> pascal(std::size_t rows) {
  std::vector<std::vector<Int>> t(rows + 1);
  for (std::size_t a = 0; a <= rows; ++a) {
    t[a].assign(a + 1, 1);
    for (std::size_t b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

inline std::string least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t s = 1; s < w.size(); ++s) best = std::min(best, w.substr(s) + w.substr(0, s));
  return best;
}

// Balanced words over {a, b} ("a" opens), every one of the 2^(2n) strings tested.
inline std::vector<std::string> dyck_words(std::size_t n) {
  std::vector<std::string> out;
  const std::size_t len = 2 * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::string w;
    int depth = 0;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      const bool up = (mask >> (len - 1 - i)) & 1u;
      w.push_back(up ? 'a' : 'b');
      depth += up ? 1 : -1;
      ok = depth >= 0;
    }
    if (ok && depth == 0) out.push_back(w);
  }
  return out;
}

// Binary words of the given length with `ones` copies of '1', up to rotation.
inline std::set<std::string> necklaces(std::size_t zeros, std::size_t ones) {
  std::string w(zeros, '0');
  w += std::string(ones, '1');
  std::set<std::string> out;
  do {
    out.insert(least_rotation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Matchings with k >= 1 cross-cuts as k-tuples of gap cells up to cyclic
// shift. Letters are remapped so that plain string order is the symbol
// order a < b < c < d < e for U, D, '|', '(', ')'.
inline std::uint64_t cell_orbits(std::size_t n, std::size_t m, std::size_t k) {
  std::vector<std::string> cells;
  std::vector<std::size_t> outer_len, inner_len;
  for (std::size_t a = 0; a <= n; ++a) {
    for (const auto& o : dyck_words(a)) {
      for (std::size_t b = 0; b <= m; ++b) {
        for (const auto& i : dyck_words(b)) {
          cells.push_back("d" + o + "c" + i + "e");
          outer_len.push_back(a);
          inner_len.push_back(b);
        }
      }
    }
  }
  std::set<std::string> seen;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::size_t sn = 0, sm = 0;
    for (auto p : pick) {
      sn += outer_len[p];
      sm += inner_len[p];
    }
    if (sn == n && sm == m) {
      std::string best;
      for (std::size_t s = 0; s < k; ++s) {
        std::string w;
        for (std::size_t j = 0; j < k; ++j) w += cells[pick[(s + j) % k]];
        if (best.empty() || w < best) best = w;
      }
      seen.insert(best);
    }
    std::size_t pos = 0;
    while (pos < k && ++pick[pos] == cells.size()) pick[pos++] = 0;
    if (pos == k) break;
  }
  return seen.size();
}

inline std::uint64_t annular_classes(std::size_t n, std::size_t m, std::size_t k) {
  if (k == 0) {
    const std::uint64_t outer = n == 0 ? 1 : necklaces(n, n).size();
    const std::uint64_t inner = m == 0 ? 1 : necklaces(m, m).size();
    return outer * inner;
  }
  return cell_orbits(n, m, k);
}

// Non-crossing perfect matchings of 2n points on a circle, up to rotation.
// Each matching is stored as partner offsets (partner - i) mod 2n.
inline std::uint64_t circular_classes(std::size_t n) {
  const std::size_t size = 2 * n;
  std::set<std::vector<std::size_t>> classes;
  std::vector<int> partner(size, -1);
  auto record = [&] {
    std::vector<std::size_t> best;
    for (std::size_t s = 0; s < size; ++s) {
      std::vector<std::size_t> off(size);
      for (std::size_t i = 0; i < size; ++i) {
        const std::size_t p = static_cast<std::size_t>(partner[(i + s) % size]);
        off[i] = (p + size - (i + s) % size) % size;
      }
      if (best.empty() || off < best) best = off;
    }
    classes.insert(best);
  };
  auto crosses = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < size; ++i) {
      if (partner[i] < 0) continue;
      const std::size_t j = static_cast<std::size_t>(partner[i]);
      const bool i_in = a < i && i < b;
      const bool j_in = a < j && j < b;
      if (i_in != j_in && i != a && i != b && j != a && j != b) return true;
    }
    return false;
  };
  auto place = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < size && partner[first] >= 0) ++first;
    if (first == size) {
      record();
      return;
    }
    for (std::size_t j = first + 1; j < size; ++j) {
      if (partner[j] >= 0 || crosses(first, j)) continue;
      partner[first] = static_cast<int>(j);
      partner[j] = static_cast<int>(first);
      self(self);
      partner[first] = partner[j] = -1;
    }
  };
  place(place);
  return classes.size();
}

}  // namespace brute
