#include "annular/model.hpp"

#include <algorithm>
#include <map>

namespace annular {

int symbol_rank(char c) {
  switch (c) {
    case 'U': return 0;
    case 'D': return 1;
    case '|': return 2;
    case '(': return 3;
    case ')': return 4;
    default: return 5 + static_cast<unsigned char>(c);
  }
}

std::strong_ordering compare_symbols(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = symbol_rank(a[i]);
    const int rb = symbol_rank(b[i]);
    if (ra != rb) return ra <=> rb;
  }
  return a.size() <=> b.size();
}

std::string canonical_rotation(std::string_view word) {
  const auto rotated = canonical_rotation(std::span<const char>(word.data(), word.size()));
  return {rotated.begin(), rotated.end()};
}

std::vector<std::optional<std::size_t>> cyclic_partners(std::string_view word, char open) {
  const std::size_t n = word.size();
  std::vector<std::optional<std::size_t>> partner(n);
  const auto opens = static_cast<std::size_t>(std::count(word.begin(), word.end(), open));
  if (2 * opens > n) {
    throw std::invalid_argument("cyclic_partners: more openers than closers");
  }
  std::vector<std::size_t> stack;
  std::vector<std::size_t> unpaired;
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] == open) {
      stack.push_back(i);
    } else if (!stack.empty()) {
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    } else {
      unpaired.push_back(i);
    }
  }
  // Openers still waiting take the earliest closers left over, nearest first.
  for (std::size_t closer : unpaired) {
    if (stack.empty()) break;
    partner[closer] = stack.back();
    partner[stack.back()] = closer;
    stack.pop_back();
  }
  return partner;
}

// --- DyckWord -------------------------------------------------------------

DyckWord DyckWord::parse(std::string_view letters) {
  DyckWord word{std::string(letters)};
  if (!word.is_valid()) throw ParseError("not a Dyck word: '" + std::string(letters) + "'");
  return word;
}

std::size_t DyckWord::semilength() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'U'));
}

bool DyckWord::is_valid() const {
  long height = 0;
  for (char c : letters_) {
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

// --- GapCell --------------------------------------------------------------

std::string GapCell::encode() const {
  std::string out;
  out.reserve(outer.size() + inner.size() + 3);
  out += '(';
  out += outer.letters();
  out += '|';
  out += inner.letters();
  out += ')';
  return out;
}

namespace {

// Compares a+terminator against b+terminator under the symbol order.
std::strong_ordering compare_terminated(std::string_view a, std::string_view b, char terminator) {
  const std::size_t n = std::max(a.size(), b.size()) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const char ca = i < a.size() ? a[i] : terminator;
    const char cb = i < b.size() ? b[i] : terminator;
    if (ca != cb) return symbol_rank(ca) <=> symbol_rank(cb);
    if (ca == terminator) break;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_cells(const GapCell& a, const GapCell& b) {
  const auto outer = compare_terminated(a.outer.letters(), b.outer.letters(), '|');
  if (outer != 0) return outer;
  return compare_terminated(a.inner.letters(), b.inner.letters(), ')');
}

// --- Necklace -------------------------------------------------------------

Necklace::Necklace(std::string_view word)
    : word_(word.empty() ? std::string() : canonical_rotation(word)) {}

Necklace Necklace::raw(std::string word) {
  Necklace n;
  n.word_ = std::move(word);
  return n;
}

std::size_t Necklace::count(char letter) const {
  return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), letter));
}

bool Necklace::is_canonical() const {
  return word_.empty() || canonical_rotation(word_) == word_;
}

// --- AnnularMatching ------------------------------------------------------

std::vector<GapCell> canonical_cells(std::span<const GapCell> cells) {
  return canonical_rotation(cells, [](const GapCell& a, const GapCell& b) {
    return compare_cells(a, b) < 0;
  });
}

bool is_least_rotation(std::span<const GapCell> cells) {
  const std::size_t k = cells.size();
  for (std::size_t shift = 1; shift < k; ++shift) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = compare_cells(cells[(i + shift) % k], cells[i]);
      if (c < 0) return false;
      if (c > 0) break;
    }
  }
  return true;
}

AnnularMatching AnnularMatching::from_cells(std::vector<GapCell> cells) {
  if (cells.empty()) throw std::invalid_argument("from_cells: at least one cell required");
  return raw_cells(canonical_cells(cells));
}

AnnularMatching AnnularMatching::from_words(std::string_view outer, std::string_view inner) {
  AnnularMatching m;
  m.outer_ = Necklace(outer);
  m.inner_ = Necklace(inner);
  return m;
}

AnnularMatching AnnularMatching::pure_crosscuts(std::size_t k) {
  if (k == 0) return {};
  return raw_cells(std::vector<GapCell>(k));
}

AnnularMatching AnnularMatching::raw_cells(std::vector<GapCell> cells) {
  AnnularMatching m;
  m.crosscuts_ = cells.size();
  m.cells_ = std::move(cells);
  return m;
}

AnnularMatching AnnularMatching::raw_words(std::string outer, std::string inner) {
  AnnularMatching m;
  m.outer_ = Necklace::raw(std::move(outer));
  m.inner_ = Necklace::raw(std::move(inner));
  return m;
}

namespace {

constexpr std::string_view kOuterTag = "outer:";
constexpr std::string_view kInnerTag = ";inner:";

bool all_of_letters(std::string_view s, std::string_view alphabet) {
  return s.find_first_not_of(alphabet) == std::string_view::npos;
}

}  // namespace

AnnularMatching AnnularMatching::parse_raw(std::string_view code) {
  if (code.starts_with(kOuterTag)) {
    const auto sep = code.find(kInnerTag);
    if (sep == std::string_view::npos) throw ParseError("missing ';inner:' in '" + std::string(code) + "'");
    const auto outer = code.substr(kOuterTag.size(), sep - kOuterTag.size());
    const auto inner = code.substr(sep + kInnerTag.size());
    if (!all_of_letters(outer, "LR") || !all_of_letters(inner, "LR")) {
      throw ParseError("boundary words use only L and R: '" + std::string(code) + "'");
    }
    return raw_words(std::string(outer), std::string(inner));
  }
  std::vector<GapCell> cells;
  std::size_t pos = 0;
  while (pos < code.size()) {
    if (code[pos] != '(') throw ParseError("expected '(' at offset " + std::to_string(pos));
    const auto bar = code.find('|', pos);
    const auto close = code.find(')', pos);
    if (bar == std::string_view::npos || close == std::string_view::npos || bar > close) {
      throw ParseError("malformed cell at offset " + std::to_string(pos));
    }
    const auto outer = code.substr(pos + 1, bar - pos - 1);
    const auto inner = code.substr(bar + 1, close - bar - 1);
    if (!all_of_letters(outer, "UD") || !all_of_letters(inner, "UD")) {
      throw ParseError("cell contents use only U and D at offset " + std::to_string(pos));
    }
    cells.push_back({DyckWord(std::string(outer)), DyckWord(std::string(inner))});
    pos = close + 1;
  }
  if (cells.empty()) throw ParseError("empty matching code");
  return raw_cells(std::move(cells));
}

AnnularMatching AnnularMatching::parse(std::string_view code) {
  const AnnularMatching raw = parse_raw(code);
  if (raw.crosscuts() == 0) {
    for (const Necklace* side : {&raw.outer_, &raw.inner_}) {
      if (side->count('L') != side->count('R')) {
        throw ParseError("boundary word needs equal L and R counts: '" + side->word() + "'");
      }
    }
    return from_words(raw.outer_.word(), raw.inner_.word());
  }
  for (const auto& cell : raw.cells_) {
    if (!cell.outer.is_valid() || !cell.inner.is_valid()) {
      throw ParseError("cell " + cell.encode() + " is not a pair of Dyck words");
    }
  }
  return from_cells(raw.cells_);
}

std::size_t AnnularMatching::outer_halfcircles() const {
  if (crosscuts_ == 0) return outer_.count('L');
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.outer.semilength();
  return n;
}

std::size_t AnnularMatching::inner_halfcircles() const {
  if (crosscuts_ == 0) return inner_.count('L');
  std::size_t m = 0;
  for (const auto& c : cells_) m += c.inner.semilength();
  return m;
}

std::string AnnularMatching::code() const {
  if (crosscuts_ == 0) {
    return std::string(kOuterTag) + outer_.word() + std::string(kInnerTag) + inner_.word();
  }
  std::string out;
  for (const auto& c : cells_) out += c.encode();
  return out;
}

// --- matching_from_leftset -------------------------------------------------

namespace {

struct BoundaryReading {
  std::vector<std::size_t> crosscut_positions;
  std::vector<std::string> gaps;  // gap after each cross-cut, counter-clockwise
  std::string word;               // full word; U at left endpoints, D elsewhere
};

BoundaryReading read_boundary(std::span<const std::size_t> left, std::size_t size) {
  BoundaryReading r;
  r.word.assign(size, 'D');
  for (std::size_t p : left) {
    if (p >= size) throw std::invalid_argument("left endpoint out of range");
    if (r.word[p] == 'U') throw std::invalid_argument("left endpoint listed twice");
    r.word[p] = 'U';
  }
  if (2 * left.size() > size) throw std::invalid_argument("too many left endpoints for boundary");
  const auto partner = cyclic_partners(r.word, 'U');
  for (std::size_t i = 0; i < size; ++i) {
    if (!partner[i]) r.crosscut_positions.push_back(i);
  }
  const std::size_t k = r.crosscut_positions.size();
  r.gaps.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t from = r.crosscut_positions[c];
    const std::size_t to = r.crosscut_positions[(c + 1) % k];
    std::size_t len = (to + size - from - 1) % size;
    if (k == 1) len = size - 1;
    for (std::size_t j = 1; j <= len; ++j) r.gaps[c] += r.word[(from + j) % size];
  }
  return r;
}

}  // namespace

AnnularMatching matching_from_leftset(std::span<const std::size_t> outer_left,
                                      std::size_t outer_size,
                                      std::span<const std::size_t> inner_left,
                                      std::size_t inner_size, std::size_t twist) {
  const BoundaryReading outer = read_boundary(outer_left, outer_size);
  const BoundaryReading inner = read_boundary(inner_left, inner_size);
  const std::size_t k = outer.crosscut_positions.size();
  if (k != inner.crosscut_positions.size()) {
    throw std::invalid_argument("boundaries disagree on the number of cross-cuts");
  }
  if (twist >= std::max<std::size_t>(k, 1)) throw std::invalid_argument("twist out of range");
  if (k == 0) {
    std::string o = outer.word;
    std::string i = inner.word;
    std::replace(o.begin(), o.end(), 'U', 'L');
    std::replace(o.begin(), o.end(), 'D', 'R');
    std::replace(i.begin(), i.end(), 'U', 'L');
    std::replace(i.begin(), i.end(), 'D', 'R');
    return AnnularMatching::from_words(o, i);
  }
  std::vector<GapCell> cells(k);
  for (std::size_t c = 0; c < k; ++c) {
    cells[c].outer = DyckWord(outer.gaps[c]);
    cells[c].inner = DyckWord(inner.gaps[(c + twist) % k]);
  }
  return AnnularMatching::from_cells(std::move(cells));
}

// --- Endpoint diagrams -----------------------------------------------------

namespace {

void append_halfcircles(const std::vector<std::optional<std::size_t>>& partner,
                        const std::string& word, char open, Boundary side, ChordKind kind,
                        std::vector<EndpointKind>& labels, std::vector<Chord>& chords) {
  labels.clear();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!partner[i]) {
      labels.push_back(EndpointKind::Crosscut);
    } else if (word[i] == open) {
      labels.push_back(EndpointKind::LeftHalfCircle);
      chords.push_back({kind, {side, i}, {side, *partner[i]}});
    } else {
      labels.push_back(EndpointKind::RightHalfCircle);
    }
  }
}

// Boundary word with 'X' at cross-cut endpoints, gap contents in between.
std::string boundary_word(const std::vector<GapCell>& cells, bool outer_side) {
  std::string w;
  for (const auto& c : cells) {
    w += 'X';
    w += outer_side ? c.outer.letters() : c.inner.letters();
  }
  return w;
}

std::vector<std::optional<std::size_t>> linear_partners(const std::string& w) {
  std::vector<std::optional<std::size_t>> partner(w.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'U') {
      stack.push_back(i);
    } else if (w[i] == 'D') {
      if (stack.empty()) throw std::invalid_argument("unbalanced gap word");
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw std::invalid_argument("unbalanced gap word");
  return partner;
}

}  // namespace

EndpointDiagram endpoints(const AnnularMatching& matching) {
  EndpointDiagram d;
  if (matching.crosscuts() == 0) {
    const std::string& outer = matching.outer_necklace().word();
    const std::string& inner = matching.inner_necklace().word();
    append_halfcircles(cyclic_partners(outer, 'L'), outer, 'L', Boundary::Outer,
                       ChordKind::OuterHalfCircle, d.outer, d.chords);
    append_halfcircles(cyclic_partners(inner, 'L'), inner, 'L', Boundary::Inner,
                       ChordKind::InnerHalfCircle, d.inner, d.chords);
    return d;
  }
  const std::string outer = boundary_word(matching.cells(), true);
  const std::string inner = boundary_word(matching.cells(), false);
  append_halfcircles(linear_partners(outer), outer, 'U', Boundary::Outer,
                     ChordKind::OuterHalfCircle, d.outer, d.chords);
  append_halfcircles(linear_partners(inner), inner, 'U', Boundary::Inner,
                     ChordKind::InnerHalfCircle, d.inner, d.chords);
  std::vector<std::size_t> outer_cuts;
  std::vector<std::size_t> inner_cuts;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] == 'X') outer_cuts.push_back(i);
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 'X') inner_cuts.push_back(i);
  }
  for (std::size_t c = 0; c < outer_cuts.size(); ++c) {
    d.chords.push_back({ChordKind::Crosscut,
                        {Boundary::Outer, outer_cuts[c]},
                        {Boundary::Inner, inner_cuts[c]}});
  }
  d.twist = 0;
  return d;
}

namespace {

// Reads one boundary's labels as a U/D/X word and checks that the given
// half-circle chords are exactly the nesting the labels imply.
std::string read_labels(const std::vector<EndpointKind>& labels, char open, char close) {
  std::string w;
  for (auto kind : labels) {
    switch (kind) {
      case EndpointKind::LeftHalfCircle: w += open; break;
      case EndpointKind::RightHalfCircle: w += close; break;
      case EndpointKind::Crosscut: w += 'X'; break;
    }
  }
  return w;
}

}  // namespace

AnnularMatching compress(const EndpointDiagram& d) {
  std::map<std::size_t, std::size_t> outer_pairs;
  std::map<std::size_t, std::size_t> inner_pairs;
  std::map<std::size_t, std::size_t> cut_pairs;
  for (const auto& chord : d.chords) {
    const auto a = chord.first;
    const auto b = chord.second;
    const auto& side_labels = [&](Boundary s) -> const std::vector<EndpointKind>& {
      return s == Boundary::Outer ? d.outer : d.inner;
    };
    if (a.index >= side_labels(a.side).size() || b.index >= side_labels(b.side).size()) {
      throw std::invalid_argument("chord endpoint out of range");
    }
    switch (chord.kind) {
      case ChordKind::OuterHalfCircle:
        if (a.side != Boundary::Outer || b.side != Boundary::Outer) {
          throw std::invalid_argument("outer half-circle must stay on the outer boundary");
        }
        outer_pairs[a.index] = b.index;
        outer_pairs[b.index] = a.index;
        break;
      case ChordKind::InnerHalfCircle:
        if (a.side != Boundary::Inner || b.side != Boundary::Inner) {
          throw std::invalid_argument("inner half-circle must stay on the inner boundary");
        }
        inner_pairs[a.index] = b.index;
        inner_pairs[b.index] = a.index;
        break;
      case ChordKind::Crosscut: {
        if (a.side == b.side) throw std::invalid_argument("cross-cut must join both boundaries");
        const auto outer_end = a.side == Boundary::Outer ? a.index : b.index;
        const auto inner_end = a.side == Boundary::Outer ? b.index : a.index;
        if (cut_pairs.count(outer_end) != 0) throw std::invalid_argument("endpoint reused");
        cut_pairs[outer_end] = inner_end;
        break;
      }
    }
  }

  const std::size_t k = cut_pairs.size();
  if (k == 0) {
    const std::string outer = read_labels(d.outer, 'L', 'R');
    const std::string inner = read_labels(d.inner, 'L', 'R');
    if (outer.find('X') != std::string::npos || inner.find('X') != std::string::npos) {
      throw std::invalid_argument("cross-cut endpoint without a cross-cut chord");
    }
    for (const auto& [word, pairs] : {std::pair{outer, outer_pairs}, std::pair{inner, inner_pairs}}) {
      const auto expected = cyclic_partners(word, 'L');
      if (pairs.size() != word.size()) throw std::invalid_argument("endpoint without a chord");
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (!expected[i] || *expected[i] != pairs.at(i)) {
          throw std::invalid_argument("half-circles cross or disagree with endpoint labels");
        }
      }
    }
    return AnnularMatching::from_words(outer, inner);
  }

  const std::string outer = read_labels(d.outer, 'U', 'D');
  const std::string inner = read_labels(d.inner, 'U', 'D');
  std::vector<std::size_t> outer_cuts;
  std::vector<std::size_t> inner_cuts;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] == 'X') outer_cuts.push_back(i);
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 'X') inner_cuts.push_back(i);
  }
  if (outer_cuts.size() != k || inner_cuts.size() != k) {
    throw std::invalid_argument("cross-cut labels disagree with cross-cut chords");
  }

  // Rotate each boundary to start at its first cross-cut so gap words are linear.
  auto gaps_of = [](const std::string& w, const std::vector<std::size_t>& cuts,
                    const std::map<std::size_t, std::size_t>& pairs) {
    const std::size_t size = w.size();
    const std::size_t kk = cuts.size();
    std::vector<std::string> gaps(kk);
    for (std::size_t c = 0; c < kk; ++c) {
      const std::size_t from = cuts[c];
      const std::size_t to = c + 1 < kk ? cuts[c + 1] : cuts[0] + size;
      std::vector<std::size_t> stack;
      for (std::size_t p = from + 1; p < to; ++p) {
        const std::size_t pos = p % size;
        gaps[c] += w[pos];
        if (w[pos] == 'U') {
          stack.push_back(pos);
        } else {
          if (stack.empty()) throw std::invalid_argument("gap word is not balanced");
          const auto it = pairs.find(pos);
          if (it == pairs.end() || it->second != stack.back()) {
            throw std::invalid_argument("half-circles cross or disagree with endpoint labels");
          }
          stack.pop_back();
        }
      }
      if (!stack.empty()) throw std::invalid_argument("gap word is not balanced");
    }
    return gaps;
  };
  const auto outer_gaps = gaps_of(outer, outer_cuts, outer_pairs);
  const auto inner_gaps = gaps_of(inner, inner_cuts, inner_pairs);
  if (outer_pairs.size() + k != outer.size() || inner_pairs.size() + k != inner.size()) {
    throw std::invalid_argument("endpoint without a chord");
  }

  std::map<std::size_t, std::size_t> inner_rank;
  for (std::size_t c = 0; c < k; ++c) inner_rank[inner_cuts[c]] = c;
  const std::size_t twist = inner_rank.at(cut_pairs.at(outer_cuts[0]));
  for (std::size_t c = 0; c < k; ++c) {
    const auto it = inner_rank.find(cut_pairs.at(outer_cuts[c]));
    if (it == inner_rank.end() || it->second != (c + twist) % k) {
      throw std::invalid_argument("cross-cuts cross each other");
    }
  }

  std::vector<GapCell> cells(k);
  for (std::size_t c = 0; c < k; ++c) {
    cells[c].outer = DyckWord(outer_gaps[c]);
    cells[c].inner = DyckWord(inner_gaps[(c + twist) % k]);
  }
  return AnnularMatching::from_cells(std::move(cells));
}

// --- validate ---------------------------------------------------------------

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::BadLetter: return "bad letter";
    case Violation::Kind::DyckPrefix: return "Dyck prefix";
    case Violation::Kind::DyckBalance: return "Dyck balance";
    case Violation::Kind::NotCanonical: return "not canonical";
    case Violation::Kind::NecklaceBalance: return "necklace balance";
  }
  return "unknown";
}

namespace {

void check_dyck(const DyckWord& w, std::string_view where, std::vector<Violation>& out) {
  long height = 0;
  bool prefix_reported = false;
  for (char c : w.letters()) {
    if (c != 'U' && c != 'D') {
      out.push_back({Violation::Kind::BadLetter, std::string(where) + ": letter '" + c + "'"});
      return;
    }
    height += c == 'U' ? 1 : -1;
    if (height < 0 && !prefix_reported) {
      out.push_back({Violation::Kind::DyckPrefix,
                     std::string(where) + ": prefix of '" + w.letters() + "' closes more than it opens"});
      prefix_reported = true;
    }
  }
  if (height != 0) {
    out.push_back({Violation::Kind::DyckBalance,
                   std::string(where) + ": '" + w.letters() + "' has unequal U and D counts"});
  }
}

void check_boundary(const Necklace& n, std::string_view where, std::vector<Violation>& out) {
  if (!all_of_letters(n.word(), "LR")) {
    out.push_back({Violation::Kind::BadLetter, std::string(where) + ": letters other than L/R"});
    return;
  }
  if (n.count('L') != n.count('R')) {
    out.push_back({Violation::Kind::NecklaceBalance,
                   std::string(where) + ": '" + n.word() + "' has unequal L and R counts"});
  }
  if (!n.is_canonical()) {
    out.push_back({Violation::Kind::NotCanonical,
                   std::string(where) + ": '" + n.word() + "' is not its least rotation"});
  }
}

}  // namespace

std::vector<Violation> validate(const AnnularMatching& matching) {
  std::vector<Violation> out;
  if (matching.crosscuts() == 0) {
    check_boundary(matching.outer_necklace(), "outer", out);
    check_boundary(matching.inner_necklace(), "inner", out);
    return out;
  }
  const auto& cells = matching.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    check_dyck(cells[i].outer, "cell " + std::to_string(i) + " outer", out);
    check_dyck(cells[i].inner, "cell " + std::to_string(i) + " inner", out);
  }
  if (!is_least_rotation(cells)) {
    out.push_back({Violation::Kind::NotCanonical, "cell sequence is not its least rotation"});
  }
  return out;
}

}  // namespace annular
