#include "pedigree/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace pedigree {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view line, int column_offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1 + column_offset});
  }
  return out;
}

Node parse_node(const Token& tok, int line) {
  Node value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 1)
    throw ParseError("expected a positive node label, got '" + std::string(tok.text) + "'", line, tok.column);
  return value;
}

Tour tour_from_line(std::string_view line, int line_no) {
  const auto tokens = tokenize(line);
  std::vector<Node> order;
  order.reserve(tokens.size());
  for (const auto& tok : tokens) order.push_back(parse_node(tok, line_no));
  try {
    return Tour(order);
  } catch (const ValidationError& e) {
    int column = 1;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (order.size() > i && e.node() != 0 && order[i] == e.node()) column = tokens[i].column;
    }
    throw ParseError(e.what(), line_no, column);
  }
}

}  // namespace

std::vector<Tour> parse_tours(std::string_view text) {
  std::vector<Tour> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_skippable(lines[i])) continue;
    out.push_back(tour_from_line(lines[i], static_cast<int>(i) + 1));
  }
  return out;
}

Tour parse_tour(std::string_view text) {
  auto tours = parse_tours(text);
  if (tours.size() != 1)
    throw ParseError("expected exactly one tour, found " + std::to_string(tours.size()), 1, 1);
  return std::move(tours.front());
}

InsertionHistory parse_history(std::string_view text) {
  const auto lines = split_lines(text);
  GrowingCycle cycle;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const int line_no = static_cast<int>(i) + 1;
    if (is_skippable(line)) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'n: i j'", line_no, 1);
    const auto head = tokenize(line.substr(0, colon));
    if (head.size() != 1) throw ParseError("expected a single node label before ':'", line_no, 1);
    const Node n = parse_node(head.front(), line_no);

    const auto body = tokenize(line.substr(colon + 1), static_cast<int>(colon) + 1);
    if (body.size() != 2)
      throw ParseError("expected two endpoints after ':'", line_no, static_cast<int>(colon) + 2);
    const Node a = parse_node(body[0], line_no);
    const Node b = parse_node(body[1], line_no);

    if (n != cycle.size() + 1)
      throw ParseError("expected node " + std::to_string(cycle.size() + 1) + ", got " + std::to_string(n), line_no,
                       head.front().column);
    if (a == b) throw ParseError("edge endpoints must differ", line_no, body[1].column);
    try {
      cycle.insert(CycleEdge(a, b));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no, body[0].column);
    }
  }
  return InsertionHistory::from_cycle(std::move(cycle));
}

InsertionHistory parse_tour_or_history(std::string_view text) {
  if (text.find(':') != std::string_view::npos) return parse_history(text);
  return decode_tour(parse_tour(text));
}

std::string format_tour(const Tour& t) { return t.str(); }

std::string format_history(const InsertionHistory& h) {
  std::ostringstream os;
  for (Node k = 4; k <= h.length(); ++k) {
    const auto e = h.nu(k);
    os << k << ": " << e.lo() << ' ' << e.hi() << '\n';
  }
  return os.str();
}

}  // namespace pedigree
