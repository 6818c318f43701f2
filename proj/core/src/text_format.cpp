#include "rgconj/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rgconj {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
  std::vector<std::string_view> fields;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = (end == std::string_view::npos) ? std::string_view{} : text.substr(end + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, raw, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && raw[pos] == ' ') ++pos;
      const auto start = pos;
      while (pos < raw.size() && raw[pos] != ' ') ++pos;
      if (pos > start) line.fields.push_back(raw.substr(start, pos - start));
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void malformed(const Line& line, std::string_view why) {
  throw Error(ErrorKind::MalformedLine,
              "line " + std::to_string(line.number) + " '" + std::string(line.text) + "': " +
                  std::string(why));
}

Nat parse_nat(const Line& line, std::string_view field) {
  Nat value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) malformed(line, "expected a natural");
  return value;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.fields.size() != count) malformed(line, "wrong number of fields");
}

GraphOracle graph_from(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  expect_fields(header, 2);
  const bool omega = header.fields[1] == "omega";
  const Nat n = omega ? 0 : parse_nat(header, header.fields[1]);
  std::set<MapPair> seen;
  std::vector<MapPair> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.fields[0] != "e") malformed(line, "expected 'e <i> <j>'");
    expect_fields(line, 3);
    const Nat a = parse_nat(line, line.fields[1]);
    const Nat b = parse_nat(line, line.fields[2]);
    if (a == b) malformed(line, "loop edge");
    if (!omega && (a >= n || b >= n)) malformed(line, "vertex out of range");
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  "line " + std::to_string(line.number) + " '" + std::string(line.text) + "'");
    }
    edges.emplace_back(a, b);
  }
  return omega ? GraphOracle::omega(edges) : GraphOracle::finite(n, edges);
}

OrderOracle order_from(const std::vector<Line>& lines) {
  const Line& header = lines.front();
  expect_fields(header, 3);
  if (header.fields[1] == "catalog") {
    if (lines.size() != 1) malformed(lines[1], "catalog orders take no body");
    const auto name = header.fields[2];
    if (name == "N") return OrderOracle::catalog(OrderCatalog::N);
    if (name == "Z") return OrderOracle::catalog(OrderCatalog::Z);
    if (name == "Q") return OrderOracle::catalog(OrderCatalog::Q);
    throw Error(ErrorKind::UnknownCatalog,
                "line " + std::to_string(header.number) + " '" + std::string(header.text) + "'");
  }
  if (header.fields[1] != "finite") malformed(header, "expected 'finite' or 'catalog'");
  const Nat n = parse_nat(header, header.fields[2]);
  std::map<Nat, Nat> rank;
  std::set<Nat> used;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.fields[0] != "rank") malformed(line, "expected 'rank <i> <r>'");
    expect_fields(line, 3);
    const Nat i = parse_nat(line, line.fields[1]);
    const Nat r = parse_nat(line, line.fields[2]);
    if (i >= n) malformed(line, "element out of range");
    if (rank.count(i) != 0) malformed(line, "element ranked twice");
    if (r >= n || !used.insert(r).second) {
      throw Error(ErrorKind::RankNotPermutation,
                  "line " + std::to_string(line.number) + " '" + std::string(line.text) + "'");
    }
    rank.emplace(i, r);
  }
  if (rank.size() != n) {
    throw Error(ErrorKind::RankNotPermutation,
                "line " + std::to_string(header.number) + ": expected " + std::to_string(n) +
                    " rank lines, found " + std::to_string(rank.size()));
  }
  std::vector<Nat> ranks;
  ranks.reserve(n);
  for (auto [i, r] : rank) ranks.push_back(r);
  return OrderOracle::finite(std::move(ranks));
}

}  // namespace

Structure parse_structure(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorKind::MalformedLine, "line 1: empty input");
  const auto tag = lines.front().fields[0];
  if (tag == "graph") return graph_from(lines);
  if (tag == "order") return order_from(lines);
  malformed(lines.front(), "expected 'graph' or 'order' header");
}

GraphOracle parse_graph(std::string_view text) {
  auto s = parse_structure(text);
  if (auto* g = std::get_if<GraphOracle>(&s)) return *g;
  throw Error(ErrorKind::MalformedLine, "line 1: expected a graph file");
}

OrderOracle parse_order(std::string_view text) {
  auto s = parse_structure(text);
  if (auto* o = std::get_if<OrderOracle>(&s)) return *o;
  throw Error(ErrorKind::MalformedLine, "line 1: expected an order file");
}

std::vector<MapPair> parse_map(std::string_view text) {
  std::vector<MapPair> out;
  std::set<Nat> keys;
  std::set<Nat> values;
  for (const Line& line : split_lines(text)) {
    if (line.fields[0] != "map") malformed(line, "expected 'map <a> <b>'");
    expect_fields(line, 3);
    const Nat a = parse_nat(line, line.fields[1]);
    const Nat b = parse_nat(line, line.fields[2]);
    if (!keys.insert(a).second) malformed(line, "key mapped twice");
    if (!values.insert(b).second) malformed(line, "value hit twice");
    out.emplace_back(a, b);
  }
  return out;
}

std::string format_map(const std::vector<MapPair>& pairs) {
  std::string out;
  for (auto [a, b] : pairs) {
    out += "map " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace rgconj
