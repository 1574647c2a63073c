#include "annular/refdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bundled_data.hpp"

#ifdef ANNULAR_HAVE_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace annular {

std::optional<ExactInt> ReferenceSequence::at(std::int64_t index) const {
  if (index < offset) return std::nullopt;
  const auto i = static_cast<std::size_t>(index - offset);
  if (i >= values.size()) return std::nullopt;
  return values[i];
}

const std::vector<std::string>& sequence_allowlist() {
  static const std::vector<std::string> ids = {"A003239", "A002995", "A241926",
                                               "A047996", "A007595", "A003441"};
  return ids;
}

ReferenceSequence parse_bfile(std::string_view id, std::string_view text, SequenceSource source) {
  ReferenceSequence seq;
  seq.id = std::string(id);
  seq.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  std::int64_t expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::int64_t index = 0;
    std::string value;
    if (!(fields >> index >> value)) {
      throw std::invalid_argument(seq.id + " b-file line " + std::to_string(line_no) + ": expected 'index value'");
    }
    const bool negative = value.front() == '-';
    if (value.find_first_not_of("0123456789", negative ? 1 : 0) != std::string::npos ||
        value.size() == (negative ? 1u : 0u)) {
      throw std::invalid_argument(seq.id + " b-file line " + std::to_string(line_no) + ": bad value '" + value + "'");
    }
    if (first) {
      seq.offset = index;
      expected = index;
      first = false;
    }
    if (index != expected) {
      throw std::invalid_argument(seq.id + " b-file line " + std::to_string(line_no) + ": index " +
                                  std::to_string(index) + " out of sequence");
    }
    ++expected;
    seq.values.emplace_back(value);
  }
  return seq;
}

std::string to_bfile(const ReferenceSequence& sequence) {
  std::string out = "# " + sequence.id + "\n";
  for (std::size_t i = 0; i < sequence.values.size(); ++i) {
    out += std::to_string(sequence.offset + static_cast<std::int64_t>(i)) + " " + sequence.values[i].str() + "\n";
  }
  return out;
}

ReferenceSequence bundled_sequence(std::string_view id) {
  const auto& files = detail::bundled_bfiles();
  const auto it = files.find(std::string(id));
  if (it == files.end()) throw std::invalid_argument("no bundled snapshot for " + std::string(id));
  return parse_bfile(id, it->second, SequenceSource::Bundled);
}

std::vector<std::int64_t> disagreements(const ReferenceSequence& a, const ReferenceSequence& b) {
  std::vector<std::int64_t> out;
  const std::int64_t lo = std::max(a.offset, b.offset);
  const std::int64_t hi = std::min(a.offset + static_cast<std::int64_t>(a.values.size()),
                                   b.offset + static_cast<std::int64_t>(b.values.size()));
  for (std::int64_t i = lo; i < hi; ++i) {
    if (*a.at(i) != *b.at(i)) out.push_back(i);
  }
  return out;
}

namespace {

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("ANNULAR_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "annular";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "annular";
  return std::filesystem::temp_directory_path() / "annular";
}

bool network_disabled_by_env() {
  const char* v = std::getenv("ANNULAR_OFFLINE");
  return v && *v && std::string_view(v) != "0";
}

std::optional<std::string> https_fetch(const std::string& id) {
#ifdef ANNULAR_HAVE_HTTPS
  try {
    httplib::Client client("https://oeis.org");
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    client.set_follow_location(true);
    const std::string digits = id.substr(1);
    const auto res = client.Get("/" + id + "/b" + digits + ".txt");
    if (!res || res->status != 200) return std::nullopt;
    return res->body;
  } catch (const std::exception&) {
    return std::nullopt;
  }
#else
  (void)id;
  return std::nullopt;
#endif
}

void verify_against_bundle(const ReferenceSequence& candidate, const ReferenceSequence& bundled) {
  const auto bad = disagreements(candidate, bundled);
  if (!bad.empty()) {
    throw ChecksumMismatch(candidate.id + ": fetched copy disagrees with bundled snapshot at index " +
                           std::to_string(bad.front()));
  }
}

}  // namespace

ReferenceSequence fetch_sequence(const std::string& id, const FetchOptions& options) {
  const auto& allow = sequence_allowlist();
  if (std::find(allow.begin(), allow.end(), id) == allow.end()) {
    throw std::invalid_argument("sequence " + id + " is not on the allowlist");
  }
  std::function<void(const std::string&)> warn = options.warn;
  if (!warn) warn = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
  const ReferenceSequence bundled = bundled_sequence(id);
  const auto cache_dir = options.cache_dir.value_or(default_cache_dir());
  const auto cache_file = cache_dir / ("b" + id.substr(1) + ".txt");

  if (std::ifstream in(cache_file); in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto cached = parse_bfile(id, buffer.str(), SequenceSource::Fetched);
    verify_against_bundle(cached, bundled);
    return cached;
  }

  if (!options.allow_network || network_disabled_by_env()) {
    warn(id + ": network disabled, using bundled snapshot");
    return bundled;
  }
  const auto fetcher = options.fetcher ? options.fetcher : SequenceFetcher(https_fetch);
  const auto body = fetcher(id);
  if (!body) {
    warn(id + ": fetch failed, using bundled snapshot");
    return bundled;
  }
  auto fetched = parse_bfile(id, *body, SequenceSource::Fetched);
  verify_against_bundle(fetched, bundled);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (std::ofstream out(cache_file); out) {
    out << *body;
  } else {
    warn(id + ": could not write cache file " + cache_file.string());
  }
  return fetched;
}

}  // namespace annular
