#pragma once

// Foams as movies: web slices K_1, ..., K_{n+1} joined by elementary
// cobordisms. Each event is a move applied to the larger of its two slices
// (the upper one for an upward event, the lower one for a reflected event);
// the cobordism runs from the move's result back to its source.
//
// Text form, bottom to top:
//
//   slice empty
//   event C1 dots=2 at disk _31
//   slice derived
//   event C2 at bigon a:L
//   slice inline
//   <web lines>
//   end
//   event C2^ at bigon a:L
//   ...
//
// Exactly one slice is written out in full; the others are rebuilt from it by
// replaying the moves (downwards through upward events, upwards through
// reflected ones).

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kmfoam/complex.hpp"
#include "kmfoam/web_io.hpp"

namespace kmfoam {

struct Event {
  MoveSite site;  // on the move's source slice; for squares the variant picks 4a/4b
  int dots = 0;
  bool reflected = false;

  friend bool operator==(const Event&, const Event&) = default;
};

inline const char* cobordism_name(const MoveSite& s) {
  switch (s.kind) {
    case MoveKind::Disk: return "C1";
    case MoveKind::Bigon: return "C2";
    case MoveKind::Triangle: return "C3";
    case MoveKind::Square: return s.variant ? "C4b" : "C4a";
    case MoveKind::Zip: return "Zip";
    case MoveKind::Unzip: return "Unzip";
    case MoveKind::Saddle: return "Saddle";
    case MoveKind::IH: return "IH";
  }
  return "?";
}

inline int max_dots(MoveKind k) { return k == MoveKind::Disk ? 2 : k == MoveKind::Bigon ? 1 : 0; }

/// Degrees of the elementary cobordisms (dotted caps and bigons add 2 per dot).
inline int elementary_degree(const Event& e) {
  switch (e.site.kind) {
    case MoveKind::Disk: return -2 + 2 * e.dots;
    case MoveKind::Bigon: return -1 + 2 * e.dots;
    case MoveKind::Triangle:
    case MoveKind::Square: return 0;
    case MoveKind::Saddle: return 2;
    default: return 1;
  }
}

struct Movie {
  std::vector<WebPtr> slices;
  std::vector<Event> events;
  std::vector<std::shared_ptr<const MoveResult>> moves;  // replay record per event

  bool closed() const { return slices.front()->empty() && slices.back()->empty(); }
  const Web& top() const { return *slices.back(); }

  int degree() const {
    int d = 0;
    for (const auto& e : events) d += elementary_degree(e);
    return d;
  }

  /// Appends an event at the top: upward events take `next` as the source of
  /// their move; reflected events apply the move to the current top.
  void push(const Event& e, std::shared_ptr<const MoveResult> m, WebPtr next) {
    events.push_back(e);
    moves.push_back(std::move(m));
    slices.push_back(std::move(next));
  }
};

inline void check_event(const Event& e) {
  if (e.dots < 0 || e.dots > max_dots(e.site.kind))
    throw ValidationError(std::string(cobordism_name(e.site)) + " cannot carry " + std::to_string(e.dots) +
                          " dots");
}

inline CellComplex build_complex(const Movie& m) {
  if (m.slices.size() != m.events.size() + 1 || m.moves.size() != m.events.size())
    throw ValidationError("movie slices and events do not alternate");
  ComplexBuilder b;
  SliceCells prev = b.add_slice(*m.slices[0]);
  for (std::size_t i = 0; i < m.events.size(); ++i) {
    SliceCells next = b.add_slice(*m.slices[i + 1]);
    const auto& e = m.events[i];
    check_event(e);
    const Web& lo = *m.slices[i];
    const Web& hi = *m.slices[i + 1];
    const Web& res = e.reflected ? hi : lo;
    if (!(m.moves[i]->web == res)) throw ValidationError("event " + std::to_string(i) + " does not match its slices");
    if (e.reflected)
      b.add_layer(lo, prev, hi, next, *m.moves[i], e.site, e.dots);
    else
      b.add_layer(hi, next, lo, prev, *m.moves[i], e.site, e.dots);
    prev = std::move(next);
  }
  if (m.slices.back()->empty()) return std::move(b).finish();
  return std::move(b).finish(m.slices.back(), std::move(prev));
}

inline Movie reflect(const Movie& m) {
  Movie r;
  r.slices.assign(m.slices.rbegin(), m.slices.rend());
  r.events.assign(m.events.rbegin(), m.events.rend());
  r.moves.assign(m.moves.rbegin(), m.moves.rend());
  for (auto& e : r.events) e.reflected = !e.reflected;
  return r;
}

/// The closed movie f1 followed by the reflection of f2.
inline Movie glue_movies(const Movie& f1, const Movie& f2) {
  if (!(f1.top() == f2.top())) throw ValidationError("half-foams have different boundary webs");
  if (!f1.slices.front()->empty() || !f2.slices.front()->empty())
    throw ValidationError("half-foams must start at the empty web");
  Movie out = f1;
  Movie r = reflect(f2);
  for (std::size_t i = 0; i < r.events.size(); ++i) out.push(r.events[i], r.moves[i], r.slices[i + 1]);
  return out;
}

inline CellComplex glue(const Movie& f1, const Movie& f2) { return build_complex(glue_movies(f1, f2)); }

inline std::string write_movie(const Movie& m) {
  std::size_t anchor = 0;
  while (anchor < m.events.size() && !m.events[anchor].reflected) ++anchor;
  for (std::size_t i = anchor; i < m.events.size(); ++i)
    if (!m.events[i].reflected) throw ValidationError("movie has an upward event above a reflected one");
  std::ostringstream out;
  for (std::size_t i = 0; i < m.slices.size(); ++i) {
    if (i == anchor) {
      out << "slice inline\n" << write_web(*m.slices[i]) << "end\n";
    } else {
      out << (m.slices[i]->empty() ? "slice empty\n" : "slice derived\n");
    }
    if (i < m.events.size()) {
      const auto& e = m.events[i];
      const Web& src = e.reflected ? *m.slices[i] : *m.slices[i + 1];
      out << "event " << cobordism_name(e.site) << (e.reflected ? "^" : "");
      if (e.dots) out << " dots=" << e.dots;
      out << " at " << site_text(src, e.site) << '\n';
    }
  }
  return out.str();
}

inline Movie parse_movie(const std::string& text) {
  struct SliceDecl {
    std::string mode, web;
  };
  struct EventDecl {
    std::string kind, site;
    int dots = 0;
    bool reflected = false;
    int line = 0;
  };
  std::vector<SliceDecl> slices;
  std::vector<EventDecl> events;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) -> Movie {
    throw ValidationError("movie line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    std::istringstream ls(body);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "slice") {
      if (slices.size() != events.size()) return fail("two slices without an event between them");
      SliceDecl s;
      if (!(ls >> s.mode) || (s.mode != "empty" && s.mode != "derived" && s.mode != "inline"))
        return fail("expected 'slice empty|derived|inline'");
      if (s.mode == "inline") {
        std::string wl;
        bool closed = false;
        while (std::getline(in, wl)) {
          ++lineno;
          if (wl == "end") {
            closed = true;
            break;
          }
          s.web += wl + "\n";
        }
        if (!closed) return fail("inline slice without 'end'");
      }
      slices.push_back(std::move(s));
    } else if (kw == "event") {
      if (slices.size() != events.size() + 1) return fail("event without a slice below it");
      EventDecl e;
      e.line = lineno;
      ls >> e.kind;
      if (!e.kind.empty() && e.kind.back() == '^') {
        e.reflected = true;
        e.kind.pop_back();
      }
      std::string tok;
      ls >> tok;
      if (tok.rfind("dots=", 0) == 0) {
        try {
          e.dots = std::stoi(tok.substr(5));
        } catch (const std::exception&) {
          return fail("bad dot count");
        }
        ls >> tok;
      }
      if (tok != "at") return fail("expected 'at <site>'");
      std::getline(ls, e.site);
      events.push_back(std::move(e));
    } else {
      return fail("unknown keyword '" + kw + "'");
    }
  }
  if (slices.size() != events.size() + 1) return fail("movie must start and end with a slice");
  std::size_t anchor = slices.size();
  for (std::size_t i = 0; i < slices.size(); ++i)
    if (slices[i].mode == "inline") {
      if (anchor != slices.size()) return fail("more than one inline slice");
      anchor = i;
    }
  if (anchor == slices.size()) return fail("no inline slice");

  Movie m;
  m.slices.assign(slices.size(), nullptr);
  m.events.resize(events.size());
  m.moves.resize(events.size());
  m.slices[anchor] = std::make_shared<const Web>(parse_web(slices[anchor].web));
  auto replay = [&](std::size_t i, const Web& src) {
    const auto& d = events[i];
    lineno = d.line;
    Event e;
    e.site = parse_site(src, d.site);
    e.dots = d.dots;
    e.reflected = d.reflected;
    if (cobordism_name(e.site) != d.kind && !(e.site.kind == MoveKind::Square && d.kind.rfind("C4", 0) == 0))
      fail("event " + d.kind + " does not match its site");
    if (e.site.kind == MoveKind::Square && d.kind == "C4b") e.site.variant = 1;
    if (e.site.kind == MoveKind::Square && d.kind == "C4a") e.site.variant = 0;
    check_event(e);
    auto mr = std::make_shared<const MoveResult>(apply_move(src, e.site));
    if (!mr->generic) fail("site has no elementary cobordism");
    m.events[i] = e;
    m.moves[i] = mr;
    return WebPtr(mr, &mr->web);
  };
  for (std::size_t i = anchor; i-- > 0;) {
    if (events[i].reflected) {
      lineno = events[i].line;
      return fail("a reflected event below the inline slice cannot be replayed");
    }
    m.slices[i] = replay(i, *m.slices[i + 1]);
  }
  for (std::size_t i = anchor; i < events.size(); ++i) {
    if (!events[i].reflected) {
      lineno = events[i].line;
      return fail("an upward event above the inline slice cannot be replayed");
    }
    m.slices[i + 1] = replay(i, *m.slices[i]);
  }
  for (std::size_t i = 0; i < slices.size(); ++i)
    if (slices[i].mode == "empty" && !m.slices[i]->empty()) {
      lineno = 0;
      return fail("slice " + std::to_string(i) + " is declared empty but is not");
    }
  return m;
}

}  // namespace kmfoam
