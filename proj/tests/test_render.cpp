#include <doctest.h>

#include "annular/enumeration.hpp"
#include "annular/render.hpp"

using namespace annular;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("two cross-cuts give two chords and no arcs") {
  const auto svg = render_svg(AnnularMatching::parse("(|)(|)"));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(occurrences(svg, "class=\"crosscut\"") == 2);
  CHECK(occurrences(svg, "class=\"outer-arc\"") == 0);
  CHECK(occurrences(svg, "class=\"inner-arc\"") == 0);
}

TEST_CASE("one cross-cut and one outer arc") {
  const auto svg = render_svg(AnnularMatching::parse("(UD|)"));
  CHECK(occurrences(svg, "class=\"crosscut\"") == 1);
  CHECK(occurrences(svg, "class=\"outer-arc\"") == 1);
  CHECK(occurrences(svg, "class=\"inner-arc\"") == 0);
}

TEST_CASE("rendering is deterministic and embeds the code") {
  for (std::uint64_t k = 0; k <= 4; ++k) {
    for (std::uint64_t n = 0; 2 * n + k <= 6; ++n) {
      for (std::uint64_t m = 0; 2 * m + k <= 6; ++m) {
        for (const auto& mt : enumerate_matchings(n, m, k)) {
          const auto svg = render_svg(mt);
          CHECK(svg == render_svg(mt));
          CHECK(code_from_svg(svg) == mt.code());
          CHECK(occurrences(svg, "class=\"crosscut\"") == k);
          CHECK(occurrences(svg, "class=\"outer-arc\"") == n);
          CHECK(occurrences(svg, "class=\"inner-arc\"") == m);
        }
      }
    }
  }
  CHECK_FALSE(code_from_svg("<svg></svg>").has_value());
}
