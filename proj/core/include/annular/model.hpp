#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace annular {

/// Thrown when a canonical code does not follow the matching grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Symbol order
//
// Every textual comparison in the model uses the fixed order
//   U < D < '|' < '(' < ')'
// which differs from ASCII ('D' < 'U'). Letters outside this set rank after
// all of them, by ASCII.
// ---------------------------------------------------------------------------

int symbol_rank(char c);
std::strong_ordering compare_symbols(std::string_view a, std::string_view b);

// ---------------------------------------------------------------------------
// Least rotation
// ---------------------------------------------------------------------------

/// Start index of the lexicographically least rotation (the smallest such
/// index when the word is periodic). Linear time. Throws on an empty word.
template <class T, class Less = std::less<>>
std::size_t least_rotation_index(std::span<const T> word, Less less = {}) {
  const std::size_t n = word.size();
  if (n == 0) throw std::invalid_argument("least rotation of an empty word");
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const T& a = word[(i + k) % n];
    const T& b = word[(j + k) % n];
    if (less(a, b)) {
      j += k + 1;
      k = 0;
    } else if (less(b, a)) {
      i += k + 1;
      k = 0;
    } else {
      ++k;
      continue;
    }
    if (i == j) ++j;
  }
  return std::min(i, j);
}

template <class T, class Less = std::less<>>
std::vector<T> canonical_rotation(std::span<const T> word, Less less = {}) {
  const std::size_t start = least_rotation_index(word, less);
  std::vector<T> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out.push_back(word[(start + i) % word.size()]);
  return out;
}

/// Least rotation of a string under plain character order.
std::string canonical_rotation(std::string_view word);

/// Cyclic nearest-available-right matching. Every occurrence of `open` is
/// paired with the first unpaired non-`open` letter found by moving to
/// higher indices (wrapping around). Returns the partner of every position,
/// or nullopt for positions left unpaired. Requires at least as many
/// non-`open` letters as `open` letters.
std::vector<std::optional<std::size_t>> cyclic_partners(std::string_view word, char open);

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

/// Word over {U, D}: U opens a half-circle, D closes it. Construction does
/// not enforce balance so that invalid data can be inspected by validate().
class DyckWord {
 public:
  DyckWord() = default;
  explicit DyckWord(std::string letters) : letters_(std::move(letters)) {}

  /// Throws ParseError unless the letters form a balanced Dyck word.
  static DyckWord parse(std::string_view letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t semilength() const;
  bool is_valid() const;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) {
    return compare_symbols(a.letters_, b.letters_);
  }

 private:
  std::string letters_;
};

/// Contents of the annulus between two consecutive cross-cuts.
struct GapCell {
  DyckWord outer;
  DyckWord inner;

  /// "(" outer "|" inner ")"
  std::string encode() const;

  friend bool operator==(const GapCell&, const GapCell&) = default;
  friend std::strong_ordering operator<=>(const GapCell& a, const GapCell& b);
};

/// Same result as compare_symbols(a.encode(), b.encode()), without allocating.
std::strong_ordering compare_cells(const GapCell& a, const GapCell& b);

inline std::strong_ordering operator<=>(const GapCell& a, const GapCell& b) {
  return compare_cells(a, b);
}

/// Cyclic word in least-rotation form (character order). The empty necklace
/// is allowed and represents an empty boundary.
class Necklace {
 public:
  Necklace() = default;
  explicit Necklace(std::string_view word);

  /// Stores the word as given, without canonicalizing.
  static Necklace raw(std::string word);

  const std::string& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  std::size_t count(char letter) const;
  bool is_canonical() const;

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  std::string word_;
};

// ---------------------------------------------------------------------------
// Annular matchings
// ---------------------------------------------------------------------------

/// One equivalence class in Ann_k(2n+k, 2m+k).
///
/// With k >= 1 cross-cuts the class is a cyclic sequence of k gap cells; cell
/// i holds the outer arc counter-clockwise of cross-cut i and the inner arc
/// counter-clockwise of that cross-cut's inner endpoint. The canonical
/// representative is the least rotation of the cell sequence.
///
/// With k = 0 the two boundaries are independent and each is a necklace over
/// {L, R} (L marks the counter-clockwise-first endpoint of a half-circle).
///
/// Factories canonicalize; the raw_* constructors do not and exist so that
/// validate() has something to reject.
class AnnularMatching {
 public:
  AnnularMatching() = default;  // the empty matching in Ann_0(0, 0)

  static AnnularMatching from_cells(std::vector<GapCell> cells);
  static AnnularMatching from_words(std::string_view outer, std::string_view inner);
  static AnnularMatching pure_crosscuts(std::size_t k);

  static AnnularMatching raw_cells(std::vector<GapCell> cells);
  static AnnularMatching raw_words(std::string outer, std::string inner);

  /// Parses and canonicalizes a code; throws ParseError on malformed input.
  static AnnularMatching parse(std::string_view code);
  /// Parses the grammar only; balance and canonicality are left to validate().
  static AnnularMatching parse_raw(std::string_view code);

  std::size_t crosscuts() const { return crosscuts_; }
  /// n: number of outer half-circles.
  std::size_t outer_halfcircles() const;
  /// m: number of inner half-circles.
  std::size_t inner_halfcircles() const;
  std::size_t outer_endpoint_count() const { return 2 * outer_halfcircles() + crosscuts_; }
  std::size_t inner_endpoint_count() const { return 2 * inner_halfcircles() + crosscuts_; }

  const std::vector<GapCell>& cells() const { return cells_; }
  const Necklace& outer_necklace() const { return outer_; }
  const Necklace& inner_necklace() const { return inner_; }

  /// Canonical text code: "(UUDD|UD)(|)" or "outer:LRLR;inner:".
  std::string code() const;

  friend bool operator==(const AnnularMatching&, const AnnularMatching&) = default;
  friend bool operator<(const AnnularMatching& a, const AnnularMatching& b) {
    return a.code() < b.code();
  }

 private:
  std::size_t crosscuts_ = 0;
  std::vector<GapCell> cells_;
  Necklace outer_;
  Necklace inner_;
};

/// Cyclically rotates a cell sequence into least-rotation form.
std::vector<GapCell> canonical_cells(std::span<const GapCell> cells);
bool is_least_rotation(std::span<const GapCell> cells);

/// Builds the matching determined by which endpoints are left endpoints of
/// half-circles. Each boundary is matched by cyclic_partners(); the k
/// unpaired endpoints per boundary are cross-cuts, and outer cross-cut i
/// (counting counter-clockwise from position 0) joins inner cross-cut
/// (i + twist) mod k. The result is canonical.
///
/// Throws std::invalid_argument when the two boundaries disagree on k, when
/// a position repeats or is out of range, or when twist >= max(k, 1).
AnnularMatching matching_from_leftset(std::span<const std::size_t> outer_left,
                                      std::size_t outer_size,
                                      std::span<const std::size_t> inner_left,
                                      std::size_t inner_size, std::size_t twist);

// ---------------------------------------------------------------------------
// Explicit endpoint form
// ---------------------------------------------------------------------------

enum class Boundary { Outer, Inner };
enum class EndpointKind { LeftHalfCircle, RightHalfCircle, Crosscut };
enum class ChordKind { OuterHalfCircle, InnerHalfCircle, Crosscut };

struct EndpointRef {
  Boundary side;
  std::size_t index;
  friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
};

struct Chord {
  ChordKind kind;
  EndpointRef first;
  EndpointRef second;
  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Endpoints are numbered counter-clockwise on each boundary.
struct EndpointDiagram {
  std::vector<EndpointKind> outer;
  std::vector<EndpointKind> inner;
  std::vector<Chord> chords;
  /// Outer cross-cut i joins inner cross-cut (i + twist) mod k.
  std::size_t twist = 0;
};

EndpointDiagram endpoints(const AnnularMatching& matching);

/// Inverse of endpoints() up to rotation; accepts any twist and returns the
/// canonical matching. Throws std::invalid_argument for diagrams whose
/// labels and chords disagree or that cross.
AnnularMatching compress(const EndpointDiagram& diagram);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation {
  enum class Kind { BadLetter, DyckPrefix, DyckBalance, NotCanonical, NecklaceBalance };
  Kind kind;
  std::string detail;
};

std::string_view to_string(Violation::Kind kind);

/// Empty when every invariant of the matching holds.
std::vector<Violation> validate(const AnnularMatching& matching);

}  // namespace annular
