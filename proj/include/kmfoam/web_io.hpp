#pragma once

// Text format for webs:
//
//   # comment
//   vertex <id>: <h1> <h2> <h3>     half-edge ids in counterclockwise order
//   edge <id>: <h> <h'>             pairs two half-edges
//   loop <id> in outer              a vertex-free circle
//   loop <id> in <edge>:<L|R>       ... drawn in the face on that edge side
//
// Side L of an edge is the face of its first listed half-edge.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kmfoam/web.hpp"

namespace kmfoam {

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    if (line[i] == ':') {
      j = i + 1;
    } else {
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ':') ++j;
      // keep "edge:L" style side specs in one token
      if (j < line.size() && line[j] == ':' && j + 1 < line.size() &&
          !std::isspace(static_cast<unsigned char>(line[j + 1])))
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    }
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] inline void syntax_error(int line, int col, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                        ": " + what);
}

}  // namespace detail

inline Web parse_web(const std::string& text) {
  struct VertexDecl {
    std::string id;
    std::vector<std::string> he;
    int line;
  };
  struct EdgeDecl {
    std::string id;
    std::string a, b;
    int line;
  };
  struct LoopDecl {
    std::string id;
    std::string host;
    int line, col;
  };
  std::vector<VertexDecl> verts;
  std::vector<EdgeDecl> edges;
  std::vector<LoopDecl> loops;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto expect_colon = [&](std::size_t at) {
      if (toks.size() <= at || toks[at].text != ":")
        detail::syntax_error(lineno, toks.size() > at ? toks[at].column : static_cast<int>(line.size()) + 1,
                             "expected ':'");
    };
    if (kw == "vertex") {
      expect_colon(2);
      if (toks.size() != 6)
        detail::syntax_error(lineno, toks.back().column, "a vertex lists exactly three half-edges");
      verts.push_back({toks[1].text, {toks[3].text, toks[4].text, toks[5].text}, lineno});
    } else if (kw == "edge") {
      expect_colon(2);
      if (toks.size() != 5)
        detail::syntax_error(lineno, toks.back().column, "an edge pairs exactly two half-edges");
      if (toks[3].text == toks[4].text)
        detail::syntax_error(lineno, toks[4].column, "edge pairs a half-edge with itself");
      edges.push_back({toks[1].text, toks[3].text, toks[4].text, lineno});
    } else if (kw == "loop") {
      if (toks.size() != 4 || toks[2].text != "in")
        detail::syntax_error(lineno, toks.back().column, "expected 'loop <id> in <face>'");
      loops.push_back({toks[1].text, toks[3].text, lineno, toks[3].column});
    } else {
      detail::syntax_error(lineno, toks[0].column, "unknown keyword '" + kw + "'");
    }
  }

  auto names = std::make_shared<NameTable>();
  std::map<std::string, int> kinds;
  auto declare = [&](const std::string& id, int line) {
    if (kinds.count(id)) detail::syntax_error(line, 1, "duplicate identifier '" + id + "'");
    kinds[id] = 1;
    return names->intern(id);
  };
  std::vector<Label> vlabel, elabel;
  for (auto& v : verts) vlabel.push_back(declare(v.id, v.line));
  for (auto& e : edges) elabel.push_back(declare(e.id, e.line));
  std::vector<Label> llabel;
  for (auto& l : loops) llabel.push_back(declare(l.id, l.line));

  std::map<std::string, Port> port_of;
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (int s = 0; s < 3; ++s) {
      if (port_of.count(verts[v].he[s]))
        detail::syntax_error(verts[v].line, 1, "half-edge '" + verts[v].he[s] + "' listed twice");
      port_of[verts[v].he[s]] = {static_cast<int>(v), s};
    }

  WebBuilder b(names, static_cast<Label>(names->size()));
  for (std::size_t v = 0; v < verts.size(); ++v) b.add_vertex(vlabel[v]);
  std::map<std::string, int> used;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (const auto* h : {&edges[e].a, &edges[e].b}) {
      if (!port_of.count(*h))
        detail::syntax_error(edges[e].line, 1, "edge refers to unknown half-edge '" + *h + "'");
      if (used[*h]++)
        detail::syntax_error(edges[e].line, 1, "half-edge '" + *h + "' paired twice");
    }
    b.add_edge(elabel[e], port_of[edges[e].a], port_of[edges[e].b]);
  }
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const auto& l = loops[i];
    if (l.host == "outer") {
      b.add_loop(llabel[i]);
      continue;
    }
    auto colon = l.host.rfind(':');
    if (colon == std::string::npos || colon + 2 != l.host.size() ||
        (l.host.back() != 'L' && l.host.back() != 'R'))
      detail::syntax_error(l.line, l.col, "face must be 'outer' or '<edge>:<L|R>'");
    auto edge = l.host.substr(0, colon);
    auto lab = names->find(edge);
    bool is_edge = false;
    for (auto& e : edges) is_edge |= e.id == edge;
    if (!lab || !is_edge) detail::syntax_error(l.line, l.col, "unknown edge '" + edge + "'");
    b.add_loop(llabel[i], EdgeSide{*lab, static_cast<std::uint8_t>(l.host.back() == 'R')});
  }
  return std::move(b).build();
}

inline Web load_web(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open web file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_web(ss.str());
}

inline std::string write_web(const Web& w) {
  std::ostringstream out;
  auto he = [](int h) { return "h" + std::to_string(h); };
  for (int v = 0; v < w.num_vertices(); ++v) {
    out << "vertex " << w.name(w.vertex_label(v)) << ":";
    for (int h : w.rotation(v)) out << ' ' << he(h);
    out << '\n';
  }
  for (int e = 0; e < w.num_edges(); ++e)
    out << "edge " << w.name(w.edge_label(e)) << ": " << he(2 * e) << ' ' << he(2 * e + 1) << '\n';
  for (const auto& lp : w.loops()) {
    out << "loop " << w.name(lp.label) << " in ";
    if (lp.host)
      out << w.name(lp.host->edge) << ':' << (lp.host->side ? 'R' : 'L');
    else
      out << "outer";
    out << '\n';
  }
  return out.str();
}

}  // namespace kmfoam
