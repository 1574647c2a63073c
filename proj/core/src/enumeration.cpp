#include "annular/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>
#include <unordered_set>

namespace annular {

std::vector<DyckWord> gen_dyck(std::size_t n) {
  std::vector<DyckWord> out;
  std::string word;
  word.reserve(2 * n);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t ups, std::size_t downs) {
    if (downs == n) {
      out.emplace_back(word);
      return;
    }
    if (ups < n) {
      word.push_back('U');
      extend(ups + 1, downs);
      word.pop_back();
    }
    if (downs < ups) {
      word.push_back('D');
      extend(ups, downs + 1);
      word.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

std::vector<std::vector<std::size_t>> gen_compositions(std::size_t total, std::size_t parts) {
  if (parts == 0) throw std::invalid_argument("gen_compositions: parts must be positive");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(parts, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t index, std::size_t left) {
    if (index + 1 == parts) {
      current[index] = left;
      out.push_back(current);
      return;
    }
    for (std::size_t v = left + 1; v-- > 0;) {
      current[index] = v;
      fill(index + 1, left - v);
    }
  };
  fill(0, total);
  return out;
}

namespace {

// k-tuples of Dyck words with total semilength n.
ExactInt dyck_tuples(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  return exact_divide(ExactInt(k) * binomial(2 * n + k, static_cast<std::int64_t>(n)),
                      ExactInt(2 * n + k));
}

void check_budget(std::uint64_t n, std::uint64_t m, std::uint64_t k, const ExactInt& raw,
                  const EnumerationBudget& budget) {
  const std::string where = "(n,m,k)=(" + std::to_string(n) + "," + std::to_string(m) + "," +
                            std::to_string(k) + ")";
  if (2 * n + k > budget.max_outer_endpoints) {
    throw BudgetExceeded(where + ": " + std::to_string(2 * n + k) + " outer endpoints exceed " +
                         std::to_string(budget.max_outer_endpoints));
  }
  if (2 * m + k > budget.max_inner_endpoints) {
    throw BudgetExceeded(where + ": " + std::to_string(2 * m + k) + " inner endpoints exceed " +
                         std::to_string(budget.max_inner_endpoints));
  }
  if (raw > budget.memory_ceiling) {
    throw BudgetExceeded(where + ": " + raw.str() + " raw states exceed ceiling " +
                         std::to_string(budget.memory_ceiling));
  }
}

// Canonical L/R words with `half` of each letter, in increasing order.
std::vector<std::string> canonical_boundary_words(std::size_t half) {
  std::vector<std::string> out;
  std::string word(2 * half, 'R');
  std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(half), 'L');
  do {
    if (word.empty() || canonical_rotation(word) == word) out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// All gap cells a cell sequence for (n, m) can use, sorted by the cell order
// so that rank order equals cell order.
struct CellCatalog {
  std::vector<GapCell> cells;
  std::vector<std::size_t> outer_len;
  std::vector<std::size_t> inner_len;

  CellCatalog(std::size_t n, std::size_t m) {
    for (std::size_t a = 0; a <= n; ++a) {
      for (const auto& o : gen_dyck(a)) {
        for (std::size_t b = 0; b <= m; ++b) {
          for (const auto& i : gen_dyck(b)) cells.push_back({o, i});
        }
      }
    }
    std::sort(cells.begin(), cells.end(),
              [](const GapCell& x, const GapCell& y) { return compare_cells(x, y) < 0; });
    for (const auto& c : cells) {
      outer_len.push_back(c.outer.semilength());
      inner_len.push_back(c.inner.semilength());
    }
  }
};

bool ranks_least_rotation(const std::vector<std::size_t>& seq) {
  const std::size_t k = seq.size();
  for (std::size_t shift = 1; shift < k; ++shift) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t a = seq[(i + shift) % k];
      if (a < seq[i]) return false;
      if (a > seq[i]) break;
    }
  }
  return true;
}

// Walks every cell sequence whose first cell is `first` and calls visit on
// the canonical ones. Cells after the first never rank below it, since such
// a sequence has a smaller rotation.
template <class Visit>
void walk_sequences(const CellCatalog& catalog, std::size_t k, std::size_t n, std::size_t m,
                    std::size_t first, Visit&& visit) {
  if (catalog.outer_len[first] > n || catalog.inner_len[first] > m) return;
  std::vector<std::size_t> seq(k);
  seq[0] = first;
  std::function<void(std::size_t, std::size_t, std::size_t)> place =
      [&](std::size_t pos, std::size_t n_left, std::size_t m_left) {
        if (pos == k) {
          if (n_left == 0 && m_left == 0 && ranks_least_rotation(seq)) visit(seq);
          return;
        }
        for (std::size_t r = first; r < catalog.cells.size(); ++r) {
          const std::size_t a = catalog.outer_len[r];
          const std::size_t b = catalog.inner_len[r];
          if (a > n_left || b > m_left) continue;
          if (pos + 1 == k && (a != n_left || b != m_left)) continue;
          seq[pos] = r;
          place(pos + 1, n_left - a, m_left - b);
        }
      };
  place(1, n - catalog.outer_len[first], m - catalog.inner_len[first]);
}

}  // namespace

ExactInt raw_cell_states(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  if (k == 0) {
    return binomial(2 * n, static_cast<std::int64_t>(n)) *
           binomial(2 * m, static_cast<std::int64_t>(m));
  }
  return dyck_tuples(n, k) * dyck_tuples(m, k);
}

ExactInt raw_leftset_states(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  return ExactInt(std::max<std::uint64_t>(k, 1)) *
         binomial(2 * n + k, static_cast<std::int64_t>(n)) *
         binomial(2 * m + k, static_cast<std::int64_t>(m));
}

std::vector<AnnularMatching> enumerate_matchings(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                                                 const EnumerationBudget& budget) {
  check_budget(n, m, k, raw_cell_states(n, m, k), budget);
  std::vector<AnnularMatching> out;
  if (k == 0) {
    const auto outer = canonical_boundary_words(n);
    const auto inner = canonical_boundary_words(m);
    for (const auto& o : outer) {
      for (const auto& i : inner) out.push_back(AnnularMatching::from_words(o, i));
    }
  } else {
    const CellCatalog catalog(n, m);
    for (std::size_t first = 0; first < catalog.cells.size(); ++first) {
      walk_sequences(catalog, k, n, m, first, [&](const std::vector<std::size_t>& seq) {
        std::vector<GapCell> cells;
        cells.reserve(k);
        for (std::size_t r : seq) cells.push_back(catalog.cells[r]);
        out.push_back(AnnularMatching::raw_cells(std::move(cells)));
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactInt oracle_count(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                      const EnumerationBudget& budget, unsigned threads) {
  check_budget(n, m, k, raw_cell_states(n, m, k), budget);
  if (k == 0) {
    return ExactInt(canonical_boundary_words(n).size()) *
           ExactInt(canonical_boundary_words(m).size());
  }
  const CellCatalog catalog(n, m);
  std::atomic<std::size_t> next_first{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    std::uint64_t local = 0;
    for (std::size_t first = next_first++; first < catalog.cells.size(); first = next_first++) {
      walk_sequences(catalog, k, n, m, first, [&](const std::vector<std::size_t>&) { ++local; });
    }
    total += local;
  };
  const unsigned workers = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return ExactInt(total.load());
}

ExactInt state_oracle_count(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                            const EnumerationBudget& budget) {
  check_budget(n, m, k, raw_leftset_states(n, m, k), budget);
  auto subsets = [](std::size_t size, std::size_t chosen) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(size, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(chosen), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < size; ++i) {
        if (mask[i]) s.push_back(i);
      }
      out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
  };
  const std::size_t outer_size = 2 * n + k;
  const std::size_t inner_size = 2 * m + k;
  const auto outer_sets = subsets(outer_size, n);
  const auto inner_sets = subsets(inner_size, m);
  const std::size_t twists = std::max<std::uint64_t>(k, 1);
  std::unordered_set<std::string> seen;
  for (const auto& so : outer_sets) {
    for (const auto& si : inner_sets) {
      for (std::size_t t = 0; t < twists; ++t) {
        seen.insert(matching_from_leftset(so, outer_size, si, inner_size, t).code());
      }
    }
  }
  return ExactInt(seen.size());
}

std::vector<std::string> enumerate_circular(std::uint64_t n, const EnumerationBudget& budget) {
  if (n == 0) throw std::invalid_argument("enumerate_circular: order must be positive");
  if (2 * n > budget.max_outer_endpoints + budget.max_inner_endpoints) {
    throw BudgetExceeded("circular order " + std::to_string(n) + " exceeds endpoint budget");
  }
  if (catalan(static_cast<std::int64_t>(n)) * ExactInt(2 * n) > budget.memory_ceiling) {
    throw BudgetExceeded("circular order " + std::to_string(n) + " exceeds state ceiling");
  }
  const std::size_t size = 2 * n;
  std::set<std::string> classes;
  std::vector<std::size_t> partner(size);
  std::string reading(size, 'U');
  for (const auto& word : gen_dyck(n)) {
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < size; ++i) {
      if (word.letters()[i] == 'U') {
        stack.push_back(i);
      } else {
        partner[i] = stack.back();
        partner[stack.back()] = i;
        stack.pop_back();
      }
    }
    std::string best;
    for (std::size_t shift = 0; shift < size; ++shift) {
      // Point i of the rotated matching is point i - shift of the original.
      for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = (partner[(i + size - shift) % size] + shift) % size;
        reading[i] = j > i ? 'U' : 'D';
      }
      if (best.empty() || compare_symbols(reading, best) < 0) best = reading;
    }
    classes.insert(best);
  }
  return {classes.begin(), classes.end()};
}

}  // namespace annular
