#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "annular/numtheory.hpp"

namespace annular {

enum class SequenceSource { Bundled, Fetched };

/// A stretch of an integer sequence from the reference database.
struct ReferenceSequence {
  std::string id;
  std::int64_t offset = 0;
  std::vector<ExactInt> values;
  SequenceSource source = SequenceSource::Bundled;

  /// Value at a sequence index, if the stored stretch covers it.
  std::optional<ExactInt> at(std::int64_t index) const;
};

/// Raised when a fetched copy disagrees with the bundled snapshot.
class ChecksumMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ids accepted by fetch_sequence.
const std::vector<std::string>& sequence_allowlist();

/// Parses "index value" lines. '#' comments and blank lines are skipped;
/// indices must be consecutive. Throws std::invalid_argument otherwise.
ReferenceSequence parse_bfile(std::string_view id, std::string_view text,
                              SequenceSource source = SequenceSource::Bundled);

std::string to_bfile(const ReferenceSequence& sequence);

/// Snapshot compiled into the library. Throws std::invalid_argument for
/// unknown ids.
ReferenceSequence bundled_sequence(std::string_view id);

/// Downloads b-file text for an id; returns nullopt on any network failure.
using SequenceFetcher = std::function<std::optional<std::string>(const std::string& id)>;

struct FetchOptions {
  /// Defaults to $ANNULAR_CACHE_DIR, else $XDG_CACHE_HOME/annular, else ~/.cache/annular.
  std::optional<std::filesystem::path> cache_dir;
  /// Network is also disabled by ANNULAR_OFFLINE=1 in the environment.
  bool allow_network = true;
  /// Defaults to an HTTPS fetch of https://oeis.org/A<n>/b<n>.txt.
  SequenceFetcher fetcher;
  /// Receives fallback warnings; defaults to stderr.
  std::function<void(const std::string&)> warn;
};

/// Cached copy, else a fresh download (stored in the cache), else the
/// bundled snapshot with a warning. Fetched and cached copies must agree
/// with the snapshot on every shared index or ChecksumMismatch is thrown.
ReferenceSequence fetch_sequence(const std::string& id, const FetchOptions& options = {});

/// Shared indices where the two copies disagree (empty when consistent).
std::vector<std::int64_t> disagreements(const ReferenceSequence& a, const ReferenceSequence& b);

}  // namespace annular
