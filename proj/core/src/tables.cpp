#include "annular/tables.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "annular/counting.hpp"

namespace annular {

Range Range::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("bad range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::vector<std::uint64_t> Range::values() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

namespace {

// Fills every cell with fn(row, col) across worker threads.
void fill_cells(CountTable& t, std::size_t rows, std::size_t cols, unsigned threads,
                const std::function<ExactInt(std::size_t, std::size_t)>& fn) {
  t.cells.assign(rows, std::vector<ExactInt>(cols));
  const std::size_t total = rows * cols;
  const unsigned workers = std::max(1u, threads == 0 ? std::thread::hardware_concurrency() : threads);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) t.cells[i / cols][i % cols] = fn(i / cols, i % cols);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)); ++w) {
    pool.emplace_back(work);
  }
  work();
  for (auto& th : pool) th.join();
}

std::vector<std::string> names(const std::vector<std::uint64_t>& values) {
  std::vector<std::string> out;
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

}  // namespace

CountTable maximal_table(Range n, Range k, unsigned threads) {
  CountTable t;
  t.name = "maximal";
  t.corner = "n\\k";
  const auto ns = n.values();
  const auto ks = k.values();
  t.row_names = names(ns);
  t.col_names = names(ks);
  fill_cells(t, ns.size(), ks.size(), threads,
             [&](std::size_t r, std::size_t c) { return count_maximal(ns[r], ks[c]); });
  return t;
}

CountTable ann_table(std::uint64_t max, unsigned threads) {
  CountTable t;
  t.name = "ann";
  t.corner = "n\\m";
  const auto vs = Range{0, max}.values();
  t.row_names = names(vs);
  t.col_names = names(vs);
  fill_cells(t, vs.size(), vs.size(), threads,
             [&](std::size_t r, std::size_t c) { return count_ann(vs[r], vs[c]); });
  return t;
}

CountTable total_table(std::uint64_t max, unsigned threads) {
  CountTable t;
  t.name = "total";
  t.corner = "n";
  const auto vs = Range{0, max}.values();
  t.row_names = {"Ann(2n)"};
  t.col_names = names(vs);
  fill_cells(t, 1, vs.size(), threads,
             [&](std::size_t, std::size_t c) { return count_total(2 * vs[c]); });
  return t;
}

std::string to_csv(const CountTable& t, bool zeros) {
  std::string out = t.corner;
  for (const auto& c : t.col_names) out += "," + c;
  out += "\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    out += t.row_names[r];
    for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
      out += ",";
      if (zeros || !t.is_blank(r, c)) out += t.cells[r][c].str();
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const CountTable& t) {
  nlohmann::json j;
  j["schema"] = "annular-table/1";
  j["table"] = t.name;
  j["corner"] = t.corner;
  j["rows"] = t.row_names;
  j["cols"] = t.col_names;
  j["cells"] = nlohmann::json::array();
  for (const auto& row : t.cells) {
    auto jr = nlohmann::json::array();
    for (const auto& v : row) jr.push_back(v.str());
    j["cells"].push_back(std::move(jr));
  }
  return j.dump();
}

CountTable table_from_json(std::string_view text) {
  CountTable t;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema") != "annular-table/1") throw std::invalid_argument("table json: unknown schema");
    t.name = j.at("table").get<std::string>();
    t.corner = j.at("corner").get<std::string>();
    t.row_names = j.at("rows").get<std::vector<std::string>>();
    t.col_names = j.at("cols").get<std::vector<std::string>>();
    for (const auto& row : j.at("cells")) {
      std::vector<ExactInt> values;
      for (const auto& v : row) values.emplace_back(v.get<std::string>());
      if (values.size() != t.col_names.size()) throw std::invalid_argument("table json: ragged row");
      t.cells.push_back(std::move(values));
    }
    if (t.cells.size() != t.row_names.size()) throw std::invalid_argument("table json: row count mismatch");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table json: ") + e.what());
  }
  return t;
}

}  // namespace annular
