#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "annular/counting.hpp"
#include "annular/refdata.hpp"
#include "reference_tables.hpp"

using namespace annular;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("annular-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_bfile") {
  const auto s = parse_bfile("A000001", "# comment\n\n3 10\n4 -2\n5 123456789012345678901234567890\n");
  CHECK(s.offset == 3);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[1] == -2);
  CHECK(s.at(5).value() == ExactInt("123456789012345678901234567890"));
  CHECK_FALSE(s.at(2).has_value());
  CHECK_FALSE(s.at(6).has_value());
  CHECK(parse_bfile("A000001", to_bfile(s)).values == s.values);
  CHECK_THROWS_AS(parse_bfile("X", "1 2\n3 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bfile("X", "1 2x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bfile("X", "1\n"), std::invalid_argument);
}

TEST_CASE("bundled snapshots exist for the allowlist") {
  for (const auto& id : sequence_allowlist()) {
    const auto s = bundled_sequence(id);
    CHECK(s.id == id);
    CHECK(s.values.size() >= 10);
    CHECK(s.source == SequenceSource::Bundled);
  }
  CHECK_THROWS_AS(bundled_sequence("A000045"), std::invalid_argument);
}

TEST_CASE("bundled snapshots agree with the published table and with computed counts") {
  const auto a003239 = bundled_sequence("A003239");
  const std::vector<int> prefix = {1, 1, 2, 4, 10, 26, 80, 246, 810, 2704, 9252};
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    CHECK(a003239.at(static_cast<std::int64_t>(i)).value() == prefix[i]);
    CHECK(a003239.at(static_cast<std::int64_t>(i)).value() == reference::kMaximal[i][0]);
  }
  const auto a007595 = bundled_sequence("A007595");
  const auto a003441 = bundled_sequence("A003441");
  for (std::int64_t n = 0; n <= 10; ++n) {
    CHECK(a007595.at(n).value() == reference::kMaximal[static_cast<std::size_t>(n)][2]);
    CHECK(a003441.at(n).value() == reference::kMaximal[static_cast<std::size_t>(n)][3]);
  }
  for (std::int64_t i = a003239.offset; i < a003239.offset + static_cast<std::int64_t>(a003239.values.size()); ++i) {
    CHECK(a003239.at(i).value() == count_maximal(static_cast<std::uint64_t>(i), 0));
  }
  const auto a002995 = bundled_sequence("A002995");
  for (std::int64_t n = 1; n + 1 < a002995.offset + static_cast<std::int64_t>(a002995.values.size()); ++n) {
    CHECK(a002995.at(n + 1).value() == count_circular(static_cast<std::uint64_t>(n)));
  }
}

TEST_CASE("fetch falls back to the bundle without network") {
  FetchOptions options;
  options.cache_dir = fresh_dir("offline");
  options.allow_network = false;
  std::vector<std::string> warnings;
  options.warn = [&](const std::string& w) { warnings.push_back(w); };
  const auto s = fetch_sequence("A003239", options);
  CHECK(s.source == SequenceSource::Bundled);
  CHECK(warnings.size() == 1);
  CHECK_THROWS_AS(fetch_sequence("A000045", options), std::invalid_argument);
}

TEST_CASE("failed downloads fall back with a warning") {
  FetchOptions options;
  options.cache_dir = fresh_dir("failed");
  options.fetcher = [](const std::string&) { return std::optional<std::string>(); };
  std::vector<std::string> warnings;
  options.warn = [&](const std::string& w) { warnings.push_back(w); };
  ::unsetenv("ANNULAR_OFFLINE");
  const auto s = fetch_sequence("A007595", options);
  CHECK(s.source == SequenceSource::Bundled);
  CHECK(warnings.size() == 1);
}

TEST_CASE("downloads are checked against the bundle and cached") {
  ::unsetenv("ANNULAR_OFFLINE");
  const auto dir = fresh_dir("cache");
  const std::string good = to_bfile(bundled_sequence("A003441"));
  int calls = 0;
  FetchOptions options;
  options.cache_dir = dir;
  options.fetcher = [&](const std::string&) {
    ++calls;
    return std::optional<std::string>(good);
  };
  const auto first = fetch_sequence("A003441", options);
  CHECK(first.source == SequenceSource::Fetched);
  CHECK(std::filesystem::exists(dir / "b003441.txt"));
  const auto second = fetch_sequence("A003441", options);
  CHECK(calls == 1);
  CHECK(second.values == first.values);

  FetchOptions bad = options;
  bad.cache_dir = fresh_dir("mismatch");
  bad.fetcher = [](const std::string&) { return std::optional<std::string>("0 1\n1 1\n2 99\n"); };
  CHECK_THROWS_AS(fetch_sequence("A003441", bad), ChecksumMismatch);
}

TEST_CASE("ANNULAR_OFFLINE disables the fetcher") {
  ::setenv("ANNULAR_OFFLINE", "1", 1);
  FetchOptions options;
  options.cache_dir = fresh_dir("env");
  bool called = false;
  options.fetcher = [&](const std::string&) {
    called = true;
    return std::optional<std::string>();
  };
  options.warn = [](const std::string&) {};
  CHECK(fetch_sequence("A002995", options).source == SequenceSource::Bundled);
  CHECK_FALSE(called);
  ::unsetenv("ANNULAR_OFFLINE");
}

TEST_CASE("disagreements") {
  const auto a = parse_bfile("A", "0 1\n1 2\n2 3\n");
  const auto b = parse_bfile("A", "1 2\n2 4\n3 5\n");
  CHECK(disagreements(a, b) == std::vector<std::int64_t>{2});
}
