#include <doctest.h>

#include <algorithm>

#include "annular/model.hpp"
#include "brute_force.hpp"

using namespace annular;

TEST_CASE("symbol order puts U before D before the delimiters") {
  CHECK(compare_symbols("U", "D") < 0);
  CHECK(compare_symbols("D", "|") < 0);
  CHECK(compare_symbols("|", "(") < 0);
  CHECK(compare_symbols("(", ")") < 0);
  CHECK(compare_symbols("UD", "UDU") < 0);
  CHECK(compare_symbols("(UD|)", "(UD|)") == 0);
}

TEST_CASE("canonical_rotation examples") {
  CHECK(canonical_rotation("WBB") == "BBW");
  CHECK(canonical_rotation("BWBW") == "BWBW");
  CHECK(canonical_rotation("b") == "b");
  CHECK_THROWS(canonical_rotation(""));
}

TEST_CASE("canonical_rotation is idempotent and rotation invariant on all short ternary words") {
  const std::string letters = "abc";
  for (std::size_t len = 1; len <= 12; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    std::string w(len, 'a');
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i, c /= 3) w[i] = letters[c % 3];
      const std::string canon = canonical_rotation(w);
      const std::string shifted = w.substr(1) + w.substr(0, 1);
      if (canonical_rotation(canon) != canon || canonical_rotation(shifted) != canon) {
        FAIL_CHECK("canonical form broken for " << w);
      }
    }
  }
  for (const std::string w : {"abcabc", "cba", "aab", "bbbbba", "cabcab"}) {
    CHECK(canonical_rotation(w) == brute::least_rotation(w));
  }
}

TEST_CASE("least_rotation_index on generic sequences") {
  const std::vector<int> seq = {3, 1, 2, 1, 2};
  CHECK(least_rotation_index(std::span<const int>(seq)) == 1);
  const auto canon = canonical_rotation(std::span<const int>(seq));
  CHECK(canon == std::vector<int>{1, 2, 1, 2, 3});
}

TEST_CASE("cyclic_partners pairs each opener with the next free closer") {
  const auto p = cyclic_partners("RLLRR", 'L');
  REQUIRE(p.size() == 5);
  CHECK(p[2] == std::optional<std::size_t>(3));
  CHECK(p[1] == std::optional<std::size_t>(4));
  CHECK(p[0] == std::optional<std::size_t>());
  const auto wrap = cyclic_partners("RL", 'L');
  CHECK(wrap[1] == std::optional<std::size_t>(0));
}

TEST_CASE("DyckWord parsing") {
  CHECK(DyckWord::parse("UUDD").semilength() == 2);
  CHECK(DyckWord::parse("").semilength() == 0);
  CHECK_THROWS_AS(DyckWord::parse("UDD"), ParseError);
  CHECK_THROWS_AS(DyckWord::parse("DU"), ParseError);
  CHECK_THROWS_AS(DyckWord::parse("UX"), ParseError);
  CHECK_FALSE(DyckWord("DU").is_valid());
}

TEST_CASE("compare_cells agrees with comparing encodings") {
  std::vector<GapCell> cells;
  for (const char* o : {"", "UD", "UUDD", "UDUD"}) {
    for (const char* i : {"", "UD", "UUDD"}) cells.push_back({DyckWord(o), DyckWord(i)});
  }
  for (const auto& a : cells) {
    for (const auto& b : cells) CHECK(compare_cells(a, b) == compare_symbols(a.encode(), b.encode()));
  }
}

TEST_CASE("codes parse and canonicalize") {
  const auto m = AnnularMatching::parse("(|UD)(UD|UD)(|)");
  CHECK(m.code() == "(UD|UD)(|)(|UD)");
  CHECK(m.crosscuts() == 3);
  CHECK(m.outer_halfcircles() == 1);
  CHECK(m.inner_halfcircles() == 2);
  CHECK(m.outer_endpoint_count() == 5);
  CHECK(m.inner_endpoint_count() == 7);

  const auto z = AnnularMatching::parse("outer:RRLL;inner:RL");
  CHECK(z.code() == "outer:LLRR;inner:LR");
  CHECK(z.crosscuts() == 0);
  CHECK(AnnularMatching::parse("outer:;inner:").code() == "outer:;inner:");
  CHECK(AnnularMatching().code() == "outer:;inner:");

  CHECK_THROWS_AS(AnnularMatching::parse("(UD|"), ParseError);
  CHECK_THROWS_AS(AnnularMatching::parse("(UDD|)"), ParseError);
  CHECK_THROWS_AS(AnnularMatching::parse("outer:LRR;inner:"), ParseError);
  CHECK_THROWS_AS(AnnularMatching::parse("hello"), ParseError);
}

TEST_CASE("matching_from_leftset examples") {
  const std::vector<std::size_t> out0 = {0};
  const std::vector<std::size_t> none;
  CHECK(matching_from_leftset(out0, 3, none, 1, 0).code() == "(UD|)");

  const std::vector<std::size_t> out01 = {0, 1};
  CHECK(matching_from_leftset(out01, 4, none, 0, 0).code() == "outer:LLRR;inner:");

  CHECK_THROWS_AS(matching_from_leftset(out0, 3, none, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(matching_from_leftset(out0, 3, none, 2, 0), std::invalid_argument);
}

TEST_CASE("matching_from_leftset keeps (n, m, k)") {
  for (std::size_t size = 0; size <= 8; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
      std::vector<std::size_t> left;
      for (std::size_t i = 0; i < size; ++i) {
        if (mask >> i & 1u) left.push_back(i);
      }
      if (2 * left.size() > size) continue;
      const std::size_t k = size - 2 * left.size();
      const std::vector<std::size_t> inner_left;
      const auto mt = matching_from_leftset(left, size, inner_left, k, 0);
      CHECK(mt.outer_halfcircles() == left.size());
      CHECK(mt.inner_halfcircles() == 0);
      CHECK(mt.crosscuts() == k);
      CHECK(validate(mt).empty());
    }
  }
}

TEST_CASE("endpoint diagrams") {
  const auto one = AnnularMatching::parse("(UD|)");
  const auto d = endpoints(one);
  CHECK(d.outer == std::vector<EndpointKind>{EndpointKind::Crosscut, EndpointKind::LeftHalfCircle,
                                             EndpointKind::RightHalfCircle});
  CHECK(d.inner == std::vector<EndpointKind>{EndpointKind::Crosscut});
  CHECK(d.chords.size() == 2);
  CHECK(std::count_if(d.chords.begin(), d.chords.end(),
                      [](const Chord& c) { return c.kind == ChordKind::Crosscut; }) == 1);

  const auto pure = endpoints(AnnularMatching::pure_crosscuts(5));
  CHECK(pure.chords.size() == 5);
  CHECK(std::all_of(pure.chords.begin(), pure.chords.end(),
                    [](const Chord& c) { return c.kind == ChordKind::Crosscut; }));

  const auto mixed = endpoints(AnnularMatching::parse("(UD|UD)(UD|)"));
  auto kinds = [&](ChordKind k) {
    return std::count_if(mixed.chords.begin(), mixed.chords.end(), [&](const Chord& c) { return c.kind == k; });
  };
  CHECK(kinds(ChordKind::Crosscut) == 2);
  CHECK(kinds(ChordKind::OuterHalfCircle) == 2);
  CHECK(kinds(ChordKind::InnerHalfCircle) == 1);
  CHECK(mixed.outer.size() == 6);
  CHECK(mixed.inner.size() == 4);
}

TEST_CASE("compress inverts endpoints and rejects inconsistent diagrams") {
  for (const char* code : {"(UD|)", "(|)(|)(|)", "(UUDD|UD)(|)", "(UD|UD)(|)(|UD)", "outer:LLRRLR;inner:LR",
                           "outer:;inner:LLRR"}) {
    const auto m = AnnularMatching::parse(code);
    CHECK(compress(endpoints(m)) == m);
  }
  auto d = endpoints(AnnularMatching::parse("(UD|UD)(|)"));
  d.chords.pop_back();
  CHECK_THROWS_AS(compress(d), std::invalid_argument);
}

TEST_CASE("validate reports each kind of violation") {
  CHECK(validate(AnnularMatching::parse("(UD|)")).empty());

  auto kinds_of = [](const AnnularMatching& m) {
    std::vector<Violation::Kind> out;
    for (const auto& v : validate(m)) out.push_back(v.kind);
    return out;
  };
  const auto rotated = AnnularMatching::parse_raw("(|)(UD|)");
  CHECK(kinds_of(rotated) == std::vector{Violation::Kind::NotCanonical});
  CHECK(to_string(Violation::Kind::NotCanonical) == "not canonical");

  const auto prefix = AnnularMatching::raw_cells({GapCell{DyckWord("UDDU"), DyckWord()}});
  CHECK(kinds_of(prefix) == std::vector{Violation::Kind::DyckPrefix});
  CHECK(to_string(Violation::Kind::DyckPrefix) == "Dyck prefix");

  const auto balance = AnnularMatching::raw_cells({GapCell{DyckWord("UUD"), DyckWord()}});
  CHECK(kinds_of(balance) == std::vector{Violation::Kind::DyckBalance});

  const auto letter = AnnularMatching::raw_cells({GapCell{DyckWord("UX"), DyckWord()}});
  CHECK(kinds_of(letter).front() == Violation::Kind::BadLetter);

  const auto neck = AnnularMatching::raw_words("LLR", "");
  CHECK(kinds_of(neck) == std::vector{Violation::Kind::NecklaceBalance});
  const auto uncanon = AnnularMatching::raw_words("RL", "");
  CHECK(kinds_of(uncanon) == std::vector{Violation::Kind::NotCanonical});
}
