#pragma once

// Edge-list text format, one record per line:
//
//   v <id>          optional isolated-vertex declaration
//   e <u> <v> <+|->  signed edge; endpoints are declared implicitly
//   # ...            comment (also allowed after a record)
//
// Edge ids are assigned in file order starting at 0, so writing and
// re-reading a graph reproduces it exactly when its ids are already
// dense in id order.

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sigcirc/graph.hpp"

namespace sigcirc {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

namespace detail {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline int parse_int(const Token& t, int line_no) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, t.column, "expected an integer, got '" + t.text + "'");
  }
}

}  // namespace detail

inline SignedGraph read_graph(std::istream& in) {
  std::vector<VertexId> vertices;
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> edges;
  std::string line;
  int line_no = 0;
  EdgeId next_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    if (head.text == "v") {
      if (tokens.size() != 2)
        throw ParseError(line_no, head.column, "'v' record takes exactly one vertex id");
      vertices.push_back(detail::parse_int(tokens[1], line_no));
    } else if (head.text == "e") {
      if (tokens.size() != 4)
        throw ParseError(line_no, head.column, "'e' record takes: e <u> <v> <+|->");
      VertexId u = detail::parse_int(tokens[1], line_no);
      VertexId v = detail::parse_int(tokens[2], line_no);
      const auto& st = tokens[3];
      int sign;
      if (st.text == "+")
        sign = +1;
      else if (st.text == "-")
        sign = -1;
      else
        throw ParseError(line_no, st.column, "edge sign must be '+' or '-'");
      vertices.push_back(u);
      vertices.push_back(v);
      edges.emplace_back(next_id++, u, v, sign);
    } else {
      throw ParseError(line_no, head.column, "unknown record '" + head.text + "'");
    }
  }
  return SignedGraph(std::move(vertices), edges);
}

inline SignedGraph read_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const SignedGraph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) out << "v " << v << "\n";
  for (const Edge& e : g.edges())
    out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-') << "\n";
}

inline std::string write_graph(const SignedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace sigcirc
