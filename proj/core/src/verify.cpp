#include "annular/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "annular/bijections.hpp"
#include "annular/counting.hpp"
#include "annular/enumeration.hpp"
#include "annular/refdata.hpp"

namespace annular {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

std::string VerificationReport::matrix() const {
  std::map<std::string, std::pair<std::size_t, std::size_t>> groups;  // passed, total
  std::vector<std::string> order;
  for (const auto& c : checks) {
    if (groups.find(c.group) == groups.end()) order.push_back(c.group);
    auto& g = groups[c.group];
    g.first += c.passed ? 1 : 0;
    ++g.second;
  }
  std::ostringstream out;
  for (const auto& name : order) {
    const auto& [ok, total] = groups[name];
    out << (ok == total ? "PASS " : "FAIL ") << name << " " << ok << "/" << total << "\n";
  }
  for (const auto& c : checks) {
    if (!c.passed) out << "  failed " << c.group << " " << c.instance << ": " << c.detail << "\n";
  }
  out << "total " << passed() << "/" << checks.size() << " passed\n";
  return out.str();
}

namespace {

std::string triple(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  return "(n,m,k)=(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void check(const std::string& group, const std::string& instance, bool ok, std::string detail = {}) {
    report_.checks.push_back({group, instance, ok, std::move(detail)});
  }

  void equal(const std::string& group, const std::string& instance, const ExactInt& expected,
             const ExactInt& actual, const std::string& what) {
    check(group, instance, expected == actual,
          expected == actual ? "" : what + ": expected " + expected.str() + ", got " + actual.str());
  }

 private:
  VerificationReport& report_;
};

void run_roundtrips(Recorder& rec, const std::vector<AnnularMatching>& all, std::uint64_t n,
                    std::uint64_t m, std::uint64_t k) {
  const std::string at = triple(n, m, k);
  bool valid = true;
  bool reflect_ok = true;
  bool diagram_ok = true;
  bool graph_ok = true;
  bool necklace_ok = true;
  bool linear_ok = true;
  std::set<std::string> necklaces;
  std::set<std::string> graphs;
  for (const auto& mt : all) {
    valid = valid && validate(mt).empty();
    reflect_ok = reflect_ok && reflect(reflect(mt)) == mt;
    diagram_ok = diagram_ok && compress(endpoints(mt)) == mt;
    if (k > 0 || m == 0) {
      const PlanarGraph g = to_graph(mt);
      graph_ok = graph_ok && from_graph(g) == mt;
      graphs.insert(graph_signature(g));
      if (k > 0) {
        const GraphSummary s = summarize(g);
        graph_ok = graph_ok && s.connected && s.cycle_rank == 1 && s.cycle_length == k &&
                   s.interior_edges == n && s.exterior_edges == m;
      }
    }
    if (m == 0) {
      const Necklace neck = to_necklace(mt);
      necklace_ok = necklace_ok && from_necklace(neck) == mt;
      necklaces.insert(neck.word());
    }
    if (k == 1 && m == 0) linear_ok = linear_ok && from_linear(to_linear(mt)) == mt;
  }
  rec.check("validate", at, valid, "an enumerated matching fails validation");
  rec.check("reflect", at, reflect_ok, "reflect is not an involution");
  rec.check("endpoints", at, diagram_ok, "compress(endpoints(M)) != M");
  if (k > 0 || m == 0) {
    rec.check("graph", at, graph_ok && graphs.size() == all.size(),
              "graph round trip, distinctness or cycle conditions failed");
  }
  if (m == 0) {
    rec.check("necklace", at, necklace_ok && necklaces.size() == all.size(),
              "necklace round trip or image size failed");
  }
  if (k == 1 && m == 0) rec.check("linear", at, linear_ok, "linear round trip failed");

  std::set<std::pair<std::string, std::string>> images;
  for (const auto& mt : all) {
    const auto [a, b] = split(mt);
    images.insert({a.code(), b.code()});
  }
  const bool injective = images.size() == all.size();
  if (m == 0 || k == 0) {
    rec.check("split", at, injective, "split should be injective here");
  } else if (k >= 2 && n >= 1) {
    rec.check("split", at, !injective, "split should lose information here");
  }
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  Recorder rec(report);
  const CrosscutFormula formula = options.formula ? options.formula : CrosscutFormula(count_fixed_crosscuts);
  const std::uint64_t e = options.max_endpoints;
  EnumerationBudget budget;
  budget.max_outer_endpoints = std::max<std::uint64_t>(budget.max_outer_endpoints, e);
  budget.max_inner_endpoints = std::max<std::uint64_t>(budget.max_inner_endpoints, e);

  for (std::uint64_t k = 0; k <= e; ++k) {
    for (std::uint64_t n = 0; 2 * n + k <= e; ++n) {
      for (std::uint64_t m = 0; 2 * m + k <= e; ++m) {
        const std::string at = triple(n, m, k);
        const ExactInt expected = formula(n, m, k);
        rec.equal("burnside", at, expected, oracle_count(n, m, k, budget, options.threads), "cell oracle");
        if (options.state_oracle) {
          rec.equal("burnside-state", at, expected, state_oracle_count(n, m, k, budget), "left-set oracle");
        }
        rec.equal("symmetry", at, formula(n, m, k), formula(m, n, k), "reflected count");
        if (m == 0) {
          rec.equal("reduction", at, count_maximal(n, k), formula(n, 0, k), "m = 0 reduction");
        }
        run_roundtrips(rec, enumerate_matchings(n, m, k, budget), n, m, k);
      }
    }
  }

  for (std::uint64_t a = 0; a <= e; ++a) {
    for (std::uint64_t b = 0; b <= e; ++b) {
      rec.equal("symmetry", "Ann(" + std::to_string(a) + "," + std::to_string(b) + ")", count_ann(a, b),
                count_ann(b, a), "count_ann symmetry");
    }
  }

  for (std::uint64_t n = 0; n <= e; ++n) {
    for (std::uint64_t k = 0; k <= e; ++k) {
      if (n + k == 0) continue;
      rec.equal("necklace-count", "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")",
                count_necklace(n + k, n), count_maximal(n, k), "N_2(n+k,n)");
    }
    rec.equal("catalan", "n=" + std::to_string(n), catalan(static_cast<std::int64_t>(n)), count_maximal(n, 1),
              "k = 1 column");
    for (std::uint64_t p : {2, 3, 5, 7}) {
      rec.equal("prime", "(n,p)=(" + std::to_string(n) + "," + std::to_string(p) + ")", count_maximal(n, p),
                count_maximal_prime(n, p), "prime simplification");
    }
  }

  for (std::uint64_t n = 1; 2 * n <= e && n <= 8; ++n) {
    rec.equal("circular", "n=" + std::to_string(n), count_circular(n),
              ExactInt(enumerate_circular(n, budget).size()), "circular classes");
  }
  for (std::uint64_t n = 3; n <= std::max<std::uint64_t>(e, 3); ++n) {
    const auto c = count_circular(n);
    const auto a = count_maximal(n, 0);
    const auto cat = catalan(static_cast<std::int64_t>(n));
    rec.check("strictness", "n=" + std::to_string(n), c < a && a < cat,
              c.str() + " < " + a.str() + " < " + cat.str() + " does not hold");
  }
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      for (std::uint64_t m = 1; m <= 4; ++m) {
        const auto lhs = formula(n, m, k);
        const auto rhs = count_maximal(n, k) * count_maximal(m, k);
        rec.check("product-strictness", triple(n, m, k), lhs > rhs,
                  lhs.str() + " is not larger than " + rhs.str());
      }
    }
  }

  if (options.sequences) {
    auto against = [&](const std::string& id, std::int64_t shift,
                       const std::function<ExactInt(std::uint64_t)>& compute) {
      const auto seq = bundled_sequence(id);
      for (std::size_t i = 0; i < seq.values.size(); ++i) {
        const std::int64_t index = seq.offset + static_cast<std::int64_t>(i);
        if (index - shift < 0) continue;
        const auto n = static_cast<std::uint64_t>(index - shift);
        if (shift > 0 && n == 0) continue;
        rec.equal("sequence " + id, "index " + std::to_string(index), seq.values[i], compute(n), id);
      }
    };
    against("A003239", 0, [](std::uint64_t n) { return count_maximal(n, 0); });
    against("A007595", 0, [](std::uint64_t n) { return count_maximal(n, 2); });
    against("A003441", 0, [](std::uint64_t n) { return count_maximal(n, 3); });
    against("A002995", 1, [](std::uint64_t n) { return count_circular(n); });

    // Triangles stored by rows: entry (row, col) sits at index row(row+1)/2 + col.
    auto triangle = [&](const std::string& id, const std::function<ExactInt(std::uint64_t, std::uint64_t)>& compute) {
      const auto seq = bundled_sequence(id);
      std::uint64_t row = 0, col = 0;
      for (std::size_t i = 0; i < seq.values.size(); ++i) {
        if (row + col > 0) {
          rec.equal("sequence " + id, "T(" + std::to_string(row) + "," + std::to_string(col) + ")", seq.values[i],
                    compute(row, col), id);
        }
        if (++col > row) {
          ++row;
          col = 0;
        }
      }
    };
    // T(b, w): necklaces with b black and w white beads, w <= b.
    triangle("A241926", [](std::uint64_t b, std::uint64_t w) { return count_necklace(b, w); });
    // T(len, w): necklaces of length len with w white beads.
    triangle("A047996", [](std::uint64_t len, std::uint64_t w) { return count_necklace(len - w, w); });
  }
  return report;
}

}  // namespace annular
