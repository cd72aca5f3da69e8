#include "skein/lift.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_comment(std::string line) {
  auto h = line.find('#');
  if (h != std::string::npos) line.resize(h);
  return line;
}

[[noreturn]] void line_error(int ln, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(ln) + ": " + what);
}

int to_int(const std::string& tok, int ln) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) line_error(ln, "not an integer: " + tok);
    return v;
  } catch (const std::logic_error&) {
    line_error(ln, "not an integer: " + tok);
  }
}

// a^(halves/2) for a monomial A
Scalar monomial_half_power(const Scalar& A, int halves) {
  if (halves % 2 == 0) return A.pow(halves / 2);
  if (A.terms().size() != 1 || !A.terms()[0].second.is_one()) throw std::domain_error("half power of a non-monomial");
  Mono m;
  for (int i = 0; i < 4; ++i) {
    int e = A.terms()[0].first.e[i];
    if (e % 2) throw std::domain_error("half power not representable");
    m.e[i] = e / 2 * halves;
  }
  return Scalar::mono(m);
}

Scalar a12() { return sA1() * sA2(); }

}  // namespace

// ---------------------------------------------------------------- parsing

CoverChart parse_chart(const std::string& text) {
  CoverChart c;
  std::stringstream in(text);
  std::string line;
  int ln = 0;
  bool seen_kind = false;
  static const std::regex kind_re(R"(^\s*chart\s+(planar|annular|torus)\s*$)");
  static const std::regex wall_re(
      R"(^\s*wall\s+(-?\d+)\s+sheets\s+([12])\s+([12])\s+class\s+(-?\d+)\s+(-?\d+)\s+turn\s+(-?\d+)\s*$)");
  static const std::regex blank_re(R"(^\s*$)");
  while (std::getline(in, line)) {
    ++ln;
    line = strip_comment(line);
    std::smatch m;
    if (std::regex_match(line, blank_re)) continue;
    if (std::regex_match(line, m, kind_re)) {
      if (seen_kind) line_error(ln, "chart kind given twice");
      seen_kind = true;
      c.kind = m[1] == "planar" ? ChartKind::Planar : m[1] == "annular" ? ChartKind::Annular : ChartKind::Torus;
    } else if (std::regex_match(line, m, wall_re)) {
      Wall w;
      w.id = std::stoi(m[1]);
      w.from = std::stoi(m[2]);
      w.to = std::stoi(m[3]);
      if (w.from == w.to) line_error(ln, "wall needs two distinct sheets");
      w.cls = {std::stoi(m[4]), std::stoi(m[5])};
      w.turn_halves = std::stoi(m[6]);
      if (c.walls.count(w.id)) line_error(ln, "duplicate wall id");
      c.walls[w.id] = w;
    } else {
      line_error(ln, "cannot parse '" + line + "'");
    }
  }
  if (!seen_kind) throw std::invalid_argument("chart kind missing");
  if (c.kind != ChartKind::Torus && !c.walls.empty()) throw std::invalid_argument("walls are only supported on torus charts");
  return c;
}

CoverChart load_chart(const std::string& path) { return parse_chart(read_file(path)); }

LeafDiagram parse_diagram(const std::string& text) {
  LeafDiagram d;
  std::stringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::stringstream ls(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& op = tok[0];
    auto need = [&](size_t n) {
      if (tok.size() != n) line_error(ln, op + " takes " + std::to_string(n - 1) + " argument(s)");
    };
    Slice s;
    if (op == "strands") {
      if (!d.bottom.empty() || !d.slices.empty()) line_error(ln, "strands must come first");
      for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "u") d.bottom.push_back(1);
        else if (tok[i] == "d") d.bottom.push_back(-1);
        else line_error(ln, "strand orientation must be u or d");
      }
      continue;
    }
    if (op == "periodic") {
      need(1);
      d.periodic = true;
      continue;
    }
    if (op == "braid") {
      if (tok.size() < 2) line_error(ln, "braid needs a strand count");
      std::string w;
      for (size_t i = 2; i < tok.size(); ++i) w += tok[i] + " ";
      try {
        d.braid = BraidWord::parse(w, to_int(tok[1], ln));
      } catch (const std::invalid_argument& e) {
        line_error(ln, e.what());
      }
      d.is_braid = true;
      continue;
    }
    if (op == "cup") {
      need(3);
      s.type = SliceType::Cup;
      s.k = to_int(tok[1], ln);
      if (tok[2] == ">") s.arg = 1;
      else if (tok[2] == "<") s.arg = -1;
      else line_error(ln, "cup orientation must be > or <");
    } else if (op == "cap") {
      need(2);
      s.type = SliceType::Cap;
      s.k = to_int(tok[1], ln);
    } else if (op == "x") {
      need(3);
      s.type = SliceType::Cross;
      s.k = to_int(tok[1], ln);
      if (tok[2] == "L") s.arg = 0;
      else if (tok[2] == "R") s.arg = 1;
      else line_error(ln, "crossing over-strand must be L or R");
    } else if (op == "twist") {
      need(3);
      s.type = SliceType::Twist;
      s.k = to_int(tok[1], ln);
      if (tok[2] == "+") s.arg = 1;
      else if (tok[2] == "-") s.arg = -1;
      else line_error(ln, "twist sign must be + or -");
    } else if (op == "sign") {
      if (tok.size() != 2 && tok.size() != 3) line_error(ln, "sign takes a position and an optional sheet");
      s.type = SliceType::Sign;
      s.k = to_int(tok[1], ln);
      s.arg = tok.size() == 3 ? to_int(tok[2], ln) : 0;
      if (s.arg < 0 || s.arg > 2) line_error(ln, "sign sheet must be 1 or 2");
    } else if (op == "cut") {
      need(2);
      s.type = SliceType::Cut;
      s.k = to_int(tok[1], ln);
    } else if (op == "wall") {
      need(3);
      s.type = SliceType::WallX;
      s.k = to_int(tok[1], ln);
      s.arg = to_int(tok[2], ln);
    } else if (op == "shift") {
      need(2);
      s.type = SliceType::Shift;
      if (tok[1] == "+" || tok[1] == "+1") s.arg = 1;
      else if (tok[1] == "-" || tok[1] == "-1") s.arg = -1;
      else line_error(ln, "shift must be + or -");
    } else {
      line_error(ln, "unknown event '" + op + "'");
    }
    if (s.k < 0) line_error(ln, "negative position");
    d.slices.push_back(s);
  }
  if (d.is_braid && (!d.slices.empty() || !d.bottom.empty()))
    throw std::invalid_argument("a braid diagram cannot also have slices");
  return d;
}

LeafDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

std::string format_diagram(const LeafDiagram& d) {
  std::ostringstream o;
  if (d.is_braid) {
    o << "braid " << d.braid.n << (d.braid.word.empty() ? "" : " " + d.braid.str()) << "\n";
    return o.str();
  }
  if (d.periodic) o << "periodic\n";
  if (!d.bottom.empty()) {
    o << "strands";
    for (int b : d.bottom) o << (b > 0 ? " u" : " d");
    o << "\n";
  }
  for (auto& s : d.slices) {
    switch (s.type) {
      case SliceType::Cup: o << "cup " << s.k << (s.arg > 0 ? " >" : " <"); break;
      case SliceType::Cap: o << "cap " << s.k; break;
      case SliceType::Cross: o << "x " << s.k << (s.arg == 0 ? " L" : " R"); break;
      case SliceType::Twist: o << "twist " << s.k << (s.arg > 0 ? " +" : " -"); break;
      case SliceType::Sign: o << "sign " << s.k; if (s.arg) o << " " << s.arg; break;
      case SliceType::Cut: o << "cut " << s.k; break;
      case SliceType::WallX: o << "wall " << s.k << " " << s.arg; break;
      case SliceType::Shift: o << "shift " << (s.arg > 0 ? "+" : "-"); break;
      case SliceType::Id: o << "# id"; break;
    }
    o << "\n";
  }
  return o.str();
}

// ---------------------------------------------------------------- geometry

namespace {

// directions in eighths of a turn: 0 east, 2 north, 4 west, 6 south
int turn_between(int a, int b) {
  int d = ((b - a) % 8 + 8) % 8;
  if (d == 4) throw std::logic_error("cusp in leaf diagram");
  return d > 4 ? d - 8 : d;
}

struct Elem {
  int from = -1, to = -1;  // ports in traversal order, -1 at a boundary or crossing centre
  std::vector<int> dirs;
  int twist = 0;
  int sign_sheet = -1;  // -1 none, 0 both sheets
  int cuts = 0;
  int wall = -1;
  LatticeVector d;
  int cross = -1, role = -1;  // role 0 over, 1 under
  bool in_half = false;
};

struct Geometry {
  std::vector<Elem> elems;
  std::vector<int> sign;                          // per crossing
  std::vector<std::array<std::array<int, 2>, 2>> half;  // [c][role][in/out] -> elem
  std::vector<int> out_of, in_of;                 // per port
};

std::vector<std::vector<int>> levels(const LeafDiagram& d) {
  std::vector<std::vector<int>> lev{d.bottom};
  for (size_t si = 0; si < d.slices.size(); ++si) {
    const Slice& s = d.slices[si];
    std::vector<int> o = lev.back();
    int w = static_cast<int>(o.size());
    auto where = "slice " + std::to_string(si + 1) + ": ";
    switch (s.type) {
      case SliceType::Cup:
        if (s.k > w) throw std::invalid_argument(where + "cup position out of range");
        o.insert(o.begin() + s.k, {s.arg > 0 ? -1 : 1, s.arg > 0 ? 1 : -1});
        break;
      case SliceType::Cap:
        if (s.k + 1 >= w) throw std::invalid_argument(where + "cap position out of range");
        if (o[s.k] == o[s.k + 1]) throw std::invalid_argument(where + "cap joins strands of equal orientation");
        o.erase(o.begin() + s.k, o.begin() + s.k + 2);
        break;
      case SliceType::Cross:
        if (s.k + 1 >= w) throw std::invalid_argument(where + "crossing position out of range");
        std::swap(o[s.k], o[s.k + 1]);
        break;
      case SliceType::Shift:
        if (!d.periodic) throw std::invalid_argument(where + "shift needs a periodic diagram");
        if (w > 0) std::rotate(o.begin(), s.arg > 0 ? o.end() - 1 : o.begin() + 1, o.end());
        break;
      case SliceType::Id:
        break;
      default:
        if (s.k >= w) throw std::invalid_argument(where + "position out of range");
    }
    lev.push_back(o);
  }
  return lev;
}

int slice_crossing_sign(const std::vector<int>& o, const Slice& s) {
  // A runs from bottom k to top k+1, B from bottom k+1 to top k
  int ax = o[s.k], ay = o[s.k], bx = -o[s.k + 1], by = o[s.k + 1];
  int ox = s.arg == 0 ? ax : bx, oy = s.arg == 0 ? ay : by;
  int ux = s.arg == 0 ? bx : ax, uy = s.arg == 0 ? by : ay;
  int c = ox * uy - oy * ux;
  return c > 0 ? 1 : -1;
}

Geometry build_geometry(LeafDiagram d) {
  d.slices.push_back(Slice{});  // closing identity slice
  auto lev = levels(d);
  int S = static_cast<int>(d.slices.size());
  if (d.periodic && lev.back() != lev.front())
    throw std::invalid_argument("periodic diagram: top orientations differ from bottom");
  if (!d.periodic && !lev.back().empty() && lev.back().size() != d.bottom.size())
    throw std::invalid_argument("open strands must run from bottom to top");
  std::vector<int> offset(S + 2, 0);
  for (int l = 0; l <= S; ++l) offset[l + 1] = offset[l] + static_cast<int>(lev[l].size());
  auto port = [&](int l, int p) { return (d.periodic && l == S) ? offset[0] + p : offset[l] + p; };
  Geometry g;
  g.out_of.assign(offset[S + 1], -1);
  g.in_of.assign(offset[S + 1], -1);
  auto add = [&](Elem e) {
    g.elems.push_back(std::move(e));
    return static_cast<int>(g.elems.size()) - 1;
  };
  for (int l = 0; l < S; ++l) {
    const Slice& s = d.slices[l];
    const auto& o = lev[l];
    int w = static_cast<int>(o.size());
    auto straight = [&](int p, int q, int orient) {
      Elem e;
      if (orient > 0) e.from = port(l, p), e.to = port(l + 1, q), e.dirs = {2};
      else e.from = port(l + 1, q), e.to = port(l, p), e.dirs = {6};
      return e;
    };
    for (int p = 0; p < w; ++p) {
      int q = p;
      if (s.type == SliceType::Cup && p >= s.k) q = p + 2;
      if (s.type == SliceType::Cap && (p == s.k || p == s.k + 1)) continue;
      if (s.type == SliceType::Cap && p > s.k + 1) q = p - 2;
      if (s.type == SliceType::Cross && (p == s.k || p == s.k + 1)) continue;
      Elem e;
      if (s.type == SliceType::Shift) {
        q = ((p + s.arg) % w + w) % w;
        e = straight(p, q, o[p]);
        bool wraps = (s.arg > 0 && p == w - 1) || (s.arg < 0 && p == 0);
        if (wraps) e.d.i = s.arg * o[p];
      } else {
        e = straight(p, q, o[p]);
      }
      if (p == s.k) {
        if (s.type == SliceType::Twist) e.twist = s.arg;
        if (s.type == SliceType::Sign) e.sign_sheet = s.arg;
        if (s.type == SliceType::Cut) e.cuts = 1;
        if (s.type == SliceType::WallX) e.wall = s.arg;
      }
      if (l == S - 1 && d.periodic) e.d.j = o[p];
      add(e);
    }
    if (s.type == SliceType::Cup) {
      Elem e;
      if (s.arg > 0) e.from = port(l + 1, s.k), e.to = port(l + 1, s.k + 1), e.dirs = {6, 0, 2};
      else e.from = port(l + 1, s.k + 1), e.to = port(l + 1, s.k), e.dirs = {6, 4, 2};
      add(e);
    } else if (s.type == SliceType::Cap) {
      Elem e;
      if (o[s.k] > 0) e.from = port(l, s.k), e.to = port(l, s.k + 1), e.dirs = {2, 0, 6};
      else e.from = port(l, s.k + 1), e.to = port(l, s.k), e.dirs = {2, 4, 6};
      add(e);
    } else if (s.type == SliceType::Cross) {
      int c = static_cast<int>(g.sign.size());
      g.sign.push_back(slice_crossing_sign(o, s));
      g.half.push_back({});
      // strand A: bottom k -> top k+1, strand B: bottom k+1 -> top k
      for (int strand = 0; strand < 2; ++strand) {
        int up = o[s.k + strand];
        int bot = s.k + strand, top = s.k + 1 - strand;
        int centre = strand == 0 ? (up > 0 ? 1 : 5) : (up > 0 ? 3 : 7);
        int role = (strand == s.arg) ? 0 : 1;
        Elem in, out;
        in.cross = out.cross = c;
        in.role = out.role = role;
        in.in_half = true;
        if (up > 0) {
          in.from = port(l, bot), out.to = port(l + 1, top);
          in.dirs = {2, centre}, out.dirs = {centre, 2};
        } else {
          in.from = port(l + 1, top), out.to = port(l, bot);
          in.dirs = {6, centre}, out.dirs = {centre, 6};
        }
        g.half[c][role][0] = add(in);
        g.half[c][role][1] = add(out);
      }
    }
  }
  for (int e = 0; e < static_cast<int>(g.elems.size()); ++e) {
    const Elem& x = g.elems[e];
    if (x.from >= 0) {
      if (g.out_of[x.from] >= 0) throw std::logic_error("port used twice");
      g.out_of[x.from] = e;
    }
    if (x.to >= 0) {
      if (g.in_of[x.to] >= 0) throw std::logic_error("port used twice");
      g.in_of[x.to] = e;
    }
  }
  return g;
}

struct Piece {
  bool closed = true;
  std::vector<int> elems;
};

int successor(const Geometry& g, int e, const std::vector<char>& exch) {
  const Elem& x = g.elems[e];
  if (x.in_half) return g.half[x.cross][exch[x.cross] ? 1 - x.role : x.role][1];
  if (x.to < 0) return -1;
  return g.out_of[x.to];
}

std::vector<Piece> trace_pieces(const Geometry& g, const std::vector<char>& exch) {
  std::vector<Piece> out;
  std::vector<char> seen(g.elems.size(), 0);
  // open pieces start at an element with no predecessor
  for (int e = 0; e < static_cast<int>(g.elems.size()); ++e) {
    const Elem& x = g.elems[e];
    bool out_half = x.cross >= 0 && !x.in_half;
    if (out_half || x.from < 0 || g.in_of[x.from] >= 0) continue;
    Piece p;
    p.closed = false;
    for (int f = e; f >= 0; f = successor(g, f, exch)) {
      p.elems.push_back(f);
      seen[f] = 1;
    }
    out.push_back(p);
  }
  for (int e = 0; e < static_cast<int>(g.elems.size()); ++e) {
    if (seen[e]) continue;
    Piece p;
    int f = e;
    do {
      if (f < 0) throw std::logic_error("broken closed piece");
      p.elems.push_back(f);
      seen[f] = 1;
      f = successor(g, f, exch);
    } while (f != e);
    out.push_back(p);
  }
  return out;
}

// sheet per element along a piece, and whether a detour was taken there
struct PieceChoice {
  std::vector<int> sheet_in, sheet_out;
  std::vector<char> detour;
};

std::vector<PieceChoice> piece_choices(const Geometry& g, const Piece& p, const std::vector<char>& exch,
                                       const CoverChart& chart) {
  std::vector<PieceChoice> out;
  PieceChoice cur;
  size_t n = p.elems.size();
  cur.sheet_in.resize(n);
  cur.sheet_out.resize(n);
  cur.detour.resize(n);
  std::function<void(size_t, int, int)> rec = [&](size_t i, int sheet, int start) {
    if (i == n) {
      if (!p.closed || sheet == start) out.push_back(cur);
      return;
    }
    const Elem& x = g.elems[p.elems[i]];
    if (x.cross >= 0 && exch[x.cross]) {
      // over-in and under-out on sheet 1, under-in and over-out on sheet 2
      int need = (x.in_half == (x.role == 0)) ? 1 : 2;
      if (sheet != need) return;
    }
    cur.sheet_in[i] = sheet;
    int next = (x.cuts % 2) ? 3 - sheet : sheet;
    cur.detour[i] = 0;
    cur.sheet_out[i] = next;
    rec(i + 1, next, start);
    if (x.wall >= 0) {
      auto it = chart.walls.find(x.wall);
      if (it == chart.walls.end()) throw std::invalid_argument("diagram crosses unknown wall " + std::to_string(x.wall));
      if (sheet == it->second.from) {
        cur.detour[i] = 1;
        cur.sheet_out[i] = it->second.to;
        rec(i + 1, it->second.to, start);
        cur.detour[i] = 0;
      }
    }
  };
  for (int s0 = 1; s0 <= 2; ++s0) rec(0, s0, s0);
  return out;
}

}  // namespace

int crossing_count(const LeafDiagram& d) {
  int n = 0;
  for (auto& s : d.slices) n += s.type == SliceType::Cross;
  return n;
}

std::string LiftTerm::describe() const {
  std::vector<std::string> ps;
  for (auto& p : pieces) {
    std::ostringstream o;
    o << (p.closed ? "loop" : "arc") << "@";
    if (p.sheet) o << p.sheet;
    else o << "mixed";
    int r = p.rot8[1] + p.rot8[2];
    o << " turn " << (r % 8 == 0 ? std::to_string(r / 8) : std::to_string(r) + "/8");
    if (!p.visits.empty()) o << " crossings " << p.visits.size();
    ps.push_back(o.str());
  }
  std::sort(ps.begin(), ps.end());
  std::string out = weight.str() + " :";
  for (size_t i = 0; i < ps.size(); ++i) out += (i ? " + " : " ") + ps[i];
  return out;
}

LiftSum enumerate_lifts(const LeafDiagram& din, const CoverChart& chart) {
  if (din.is_braid) throw std::invalid_argument("braid diagrams are lifted with lift_braid");
  LeafDiagram d = din;
  if (chart.kind == ChartKind::Torus) d.periodic = true;
  if (chart.kind == ChartKind::Annular) throw std::invalid_argument("annular charts take braid diagrams");
  if (chart.kind == ChartKind::Planar) {
    if (d.periodic) throw std::invalid_argument("planar chart cannot take a periodic diagram");
    for (auto& s : d.slices)
      if (s.type == SliceType::Cut || s.type == SliceType::WallX || s.type == SliceType::Shift)
        throw std::invalid_argument("planar chart has no cuts, walls or shifts");
  }
  Geometry g = build_geometry(d);
  int C = static_cast<int>(g.sign.size());
  if (C > 20) throw std::invalid_argument("too many crossings to enumerate lifts");
  // every base component must meet the cuts an even number of times
  {
    std::vector<char> none(C, 0);
    for (auto& p : trace_pieces(g, none)) {
      int cuts = 0;
      for (int e : p.elems) cuts += g.elems[e].cuts;
      if (p.closed && cuts % 2) throw std::invalid_argument("a component crosses the branch cuts an odd number of times");
    }
  }
  LiftSum out;
  std::vector<char> exch(C, 0);
  for (long mask = 0; mask < (1L << C); ++mask) {
    for (int c = 0; c < C; ++c) exch[c] = (mask >> c) & 1;
    auto pieces = trace_pieces(g, exch);
    std::vector<std::vector<PieceChoice>> opts;
    bool dead = false;
    for (auto& p : pieces) {
      opts.push_back(piece_choices(g, p, exch, chart));
      if (opts.back().empty()) dead = true;
    }
    if (dead) continue;
    std::vector<size_t> pick(pieces.size(), 0);
    while (true) {
      // sheet of every element
      std::vector<int> sin(g.elems.size()), sout(g.elems.size());
      std::vector<char> det(g.elems.size());
      for (size_t k = 0; k < pieces.size(); ++k) {
        const PieceChoice& ch = opts[k][pick[k]];
        for (size_t i = 0; i < pieces[k].elems.size(); ++i) {
          int e = pieces[k].elems[i];
          sin[e] = ch.sheet_in[i], sout[e] = ch.sheet_out[i], det[e] = ch.detour[i];
        }
      }
      LiftTerm t;
      Scalar w(1);
      for (int c = 0; c < C; ++c) {
        if (exch[c]) {
          t.exchanges.push_back(c);
          w *= sZ() * Scalar(g.sign[c]);
          continue;
        }
        int so = sin[g.half[c][0][0]], su = sin[g.half[c][1][0]];
        if (so == su) t.crossing_sign[c] = g.sign[c], t.crossing_sheet[c] = so;
      }
      int twist = 0, detour_halves = 0;
      std::array<int, 3> rot{0, 0, 0};
      for (size_t k = 0; k < pieces.size(); ++k) {
        LiftedPiece lp;
        lp.closed = pieces[k].closed;
        std::set<int> sheets;
        std::vector<std::pair<int, int>> seq;  // (direction, sheet)
        for (int e : pieces[k].elems) {
          const Elem& x = g.elems[e];
          sheets.insert(sin[e]);
          sheets.insert(sout[e]);
          for (int dir : x.dirs) seq.emplace_back(dir, sin[e]);
          twist += x.twist;
          if (x.sign_sheet == 0 || x.sign_sheet == sin[e]) {
            if (x.sign_sheet >= 0) w = -w;
          }
          lp.cls[sin[e]] = lp.cls[sin[e]] + x.d;
          if (det[e]) {
            const Wall& wl = chart.walls.at(x.wall);
            lp.cls[wl.to] = lp.cls[wl.to] + wl.cls;
            detour_halves += wl.turn_halves;
          }
          if (x.in_half && t.crossing_sign.count(x.cross)) lp.visits.emplace_back(x.cross, x.role == 0);
        }
        for (size_t i = 1; i < seq.size(); ++i) lp.rot8[seq[i].second] += turn_between(seq[i - 1].first, seq[i].first);
        if (lp.closed && !seq.empty()) lp.rot8[seq[0].second] += turn_between(seq.back().first, seq[0].first);
        lp.sheet = sheets.size() == 1 ? *sheets.begin() : 0;
        rot[1] += lp.rot8[1];
        rot[2] += lp.rot8[2];
        t.pieces.push_back(lp);
      }
      if (rot[1] % 4 || rot[2] % 4) throw std::invalid_argument("turning on a sheet is not a multiple of a half turn");
      // sheet 1 pieces carry a2^turn, sheet 2 pieces a1^-turn
      w *= Scalar::mono(Mono::half(VA2, rot[1] / 4)) * Scalar::mono(Mono::half(VA1, -rot[2] / 4));
      w *= monomial_half_power(a12(), twist + detour_halves);
      t.weight = w;
      out.push_back(std::move(t));
      size_t k = 0;
      while (k < pick.size() && ++pick[k] == opts[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- HOMFLYPT

namespace {

struct GComp {
  bool open = false;
  std::vector<std::pair<int, bool>> v;  // (crossing, over)
};
struct GDiag {
  std::vector<GComp> comps;
  std::map<int, int> sign;
};

Scalar geval(GDiag g, const Scalar& A, const Scalar& delta) {
  std::stable_sort(g.comps.begin(), g.comps.end(), [](const GComp& a, const GComp& b) { return a.open > b.open; });
  std::set<int> seen;
  int bad = -1;
  for (auto& c : g.comps) {
    for (auto& [x, over] : c.v) {
      if (seen.insert(x).second && !over) {
        bad = x;
        break;
      }
    }
    if (bad >= 0) break;
  }
  if (bad < 0) {
    Scalar r(1);
    for (auto& c : g.comps) {
      std::map<int, int> cnt;
      for (auto& vv : c.v) ++cnt[vv.first];
      int w = 0;
      for (auto& [x, k] : cnt)
        if (k == 2) w += g.sign.at(x);
      r *= A.pow(w);
      if (!c.open) r *= delta;
    }
    return r;
  }
  int s = g.sign.at(bad);
  GDiag sw = g;
  for (auto& c : sw.comps)
    for (auto& vv : c.v)
      if (vv.first == bad) vv.second = !vv.second;
  sw.sign[bad] = -s;
  // oriented smoothing
  GDiag sm;
  sm.sign = g.sign;
  sm.sign.erase(bad);
  int ci = -1, cj = -1;
  size_t pi = 0, pj = 0;
  for (size_t a = 0; a < g.comps.size(); ++a)
    for (size_t b = 0; b < g.comps[a].v.size(); ++b)
      if (g.comps[a].v[b].first == bad) {
        if (ci < 0) ci = static_cast<int>(a), pi = b;
        else cj = static_cast<int>(a), pj = b;
      }
  for (size_t a = 0; a < g.comps.size(); ++a)
    if (static_cast<int>(a) != ci && static_cast<int>(a) != cj) sm.comps.push_back(g.comps[a]);
  if (ci == cj) {
    const auto& v = g.comps[ci].v;
    GComp rest{g.comps[ci].open, {}}, loop{false, {}};
    rest.v.insert(rest.v.end(), v.begin(), v.begin() + pi);
    rest.v.insert(rest.v.end(), v.begin() + pj + 1, v.end());
    loop.v.insert(loop.v.end(), v.begin() + pi + 1, v.begin() + pj);
    sm.comps.push_back(rest);
    sm.comps.push_back(loop);
  } else {
    const GComp* A0 = &g.comps[ci];
    const GComp* B0 = &g.comps[cj];
    if (B0->open && !A0->open) std::swap(A0, B0), std::swap(pi, pj);
    if (A0->open && B0->open) throw std::logic_error("two open strands");
    GComp m{A0->open, {}};
    m.v.insert(m.v.end(), A0->v.begin(), A0->v.begin() + pi);
    m.v.insert(m.v.end(), B0->v.begin() + pj + 1, B0->v.end());
    m.v.insert(m.v.end(), B0->v.begin(), B0->v.begin() + pj);
    m.v.insert(m.v.end(), A0->v.begin() + pi + 1, A0->v.end());
    sm.comps.push_back(m);
  }
  Scalar zs = sZ() * Scalar(s);
  return geval(sw, A, delta) + zs * geval(sm, A, delta);
}

Scalar gauss_value(const GDiag& g, const Scalar& A) {
  int open = 0;
  for (auto& c : g.comps) open += c.open;
  if (open > 1) throw std::invalid_argument("evaluation supports at most one open strand");
  return geval(g, A, (A - A.inverse()) / sZ());
}

}  // namespace

Scalar homflypt(const LeafDiagram& d, const Scalar& A) {
  if (d.is_braid || d.periodic) throw std::invalid_argument("homflypt needs a planar diagram");
  Geometry g = build_geometry(d);
  std::vector<char> none(g.sign.size(), 0);
  GDiag gd;
  int twist = 0;
  for (size_t c = 0; c < g.sign.size(); ++c) gd.sign[static_cast<int>(c)] = g.sign[c];
  for (auto& p : trace_pieces(g, none)) {
    GComp c{!p.closed, {}};
    for (int e : p.elems) {
      const Elem& x = g.elems[e];
      twist += x.twist;
      if (x.sign_sheet >= 0) throw std::invalid_argument("sign lines need a cover");
      if (x.in_half) c.v.emplace_back(x.cross, x.role == 0);
    }
    gd.comps.push_back(c);
  }
  return gauss_value(gd, A) * monomial_half_power(A, twist);
}

PlanarValue evaluate_trivial_cover(const LiftSum& L) {
  PlanarValue out;
  for (auto& t : L) {
    Scalar v = t.weight;
    int key = 0;
    for (int s = 1; s <= 2; ++s) {
      GDiag gd;
      for (auto& [c, sh] : t.crossing_sheet)
        if (sh == s) gd.sign[c] = t.crossing_sign.at(c);
      for (auto& p : t.pieces) {
        if (p.sheet == 0) throw std::invalid_argument("trivial cover evaluation needs single-sheet pieces");
        if (p.sheet != s) continue;
        if (!p.closed) key = s;
        gd.comps.push_back({!p.closed, p.visits});
      }
      v *= gauss_value(gd, s == 1 ? sA1() : sA2());
    }
    out[key] += v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

HomologicalValue evaluate_homological(const LiftSum& L) {
  HomologicalValue out;
  Bindings gl1{{"a1", sS(1)}, {"a2", sS(1)}};
  for (auto& t : L) {
    QField c = specialize(t.weight, gl1).constant();
    int w = 0;
    for (auto& [x, sg] : t.crossing_sign) w += sg;
    c *= QField::s_pow(w);
    LatticeVector c1, c2;
    for (auto& p : t.pieces) c1 = c1 + p.cls[1], c2 = c2 + p.cls[2];
    out[{c1, c2}] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string homological_str(const HomologicalValue& v) {
  if (v.empty()) return "0";
  std::string out;
  for (auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ") e" + k.first.str() + "|e" + k.second.str();
  }
  return out;
}

// ---------------------------------------------------------------- annulus

std::vector<BraidLift> lift_braid(const BraidWord& b) {
  b.validate();
  std::vector<BraidLift> out;
  int n = b.n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> start(n);
    for (int p = 0; p < n; ++p) start[p] = ((mask >> p) & 1) ? 2 : 1;
    std::function<void(size_t, std::vector<int>, Scalar, std::vector<int>, std::vector<int>)> go =
        [&](size_t i, std::vector<int> sh, Scalar wt, std::vector<int> u1, std::vector<int> u2) {
          if (i == b.word.size()) {
            if (sh != start) return;
            BraidLift L;
            L.weight = wt;
            int n1 = static_cast<int>(std::count(sh.begin(), sh.end(), 1));
            L.sheet1.n = n1, L.sheet1.word = u1;
            L.sheet2.n = n - n1, L.sheet2.word = u2;
            out.push_back(L);
            return;
          }
          int g = b.word[i], k = std::abs(g) - 1, sg = g > 0 ? 1 : -1;
          // straight: strands swap positions
          {
            std::vector<int> s2 = sh;
            std::swap(s2[k], s2[k + 1]);
            auto v1 = u1, v2 = u2;
            if (sh[k] == sh[k + 1]) {
              int rank = 1 + static_cast<int>(std::count(sh.begin(), sh.begin() + k, sh[k]));
              (sh[k] == 1 ? v1 : v2).push_back(sg * rank);
            }
            go(i + 1, s2, wt, v1, v2);
          }
          // exchange: sheets (1,2) for sigma, (2,1) for its inverse
          if ((sg > 0 && sh[k] == 1 && sh[k + 1] == 2) || (sg < 0 && sh[k] == 2 && sh[k + 1] == 1))
            go(i + 1, sh, wt * sZ() * Scalar(sg), u1, u2);
        };
    go(0, start, Scalar(1), {}, {});
  }
  return out;
}

Tensor2 evaluate_braid_lift(const std::vector<BraidLift>& L, int N) {
  Tensor2 out(Basis::Schur, N);
  auto closure = [](const BraidWord& b) {
    if (b.n == 0) return SymSeries::single(Basis::Schur, 0, {});
    return hecke_closure(b);
  };
  for (auto& l : L) {
    SymSeries x = closure(l.sheet1), y = closure(l.sheet2);
    for (auto& [p, u] : x.c)
      for (auto& [q, v] : y.c) out.add(p, q, l.weight * u * v);
  }
  return out;
}

namespace {

void compare_tensors(VerificationReport& r, const Tensor2& a, const Tensor2& b) {
  std::set<std::pair<Partition, Partition>> keys;
  for (auto& [k, v] : a.c) keys.insert(k);
  for (auto& [k, v] : b.c) keys.insert(k);
  for (auto& k : keys) r.check("W" + part_str(k.first) + "|W" + part_str(k.second), a.at(k.first, k.second) - b.at(k.first, k.second));
}

}  // namespace

VerificationReport verify_coproduct_on_braid(const BraidWord& b) {
  Stopwatch sw;
  VerificationReport r("coproduct on braid closure", b.str() + " on " + std::to_string(b.n) + " strands");
  Tensor2 lhs = evaluate_braid_lift(lift_braid(b), b.n);
  Tensor2 rhs = coproduct(hecke_closure(b));
  compare_tensors(r, lhs, rhs);
  r.seconds = sw.seconds();
  return r;
}

VerificationReport verify_coproduct_braids(int strands, int length, int random, unsigned seed) {
  Stopwatch sw;
  VerificationReport all("coproduct on braid closures", "<= " + std::to_string(strands) + " strands, length <= " +
                                                            std::to_string(length) + ", " + std::to_string(random) +
                                                            " random");
  auto absorb = [&](const VerificationReport& r) {
    all.checked += r.checked;
    for (auto& x : r.residuals) all.residuals.push_back({r.parameter + " " + x.cls, x.value});
  };
  for (int n = 1; n <= strands; ++n) {
    std::vector<int> word;
    std::function<void()> rec = [&]() {
      BraidWord b;
      b.n = n;
      b.word = word;
      absorb(verify_coproduct_on_braid(b));
      if (static_cast<int>(word.size()) == length || n == 1) return;
      for (int g = 1; g < n; ++g)
        for (int sg : {1, -1}) {
          word.push_back(sg * g);
          rec();
          word.pop_back();
        }
    };
    rec();
  }
  std::mt19937 rng(seed);
  for (int k = 0; k < random; ++k) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int len = std::uniform_int_distribution<int>(1, 8)(rng);
    BraidWord b;
    b.n = n;
    for (int t = 0; t < len; ++t)
      b.word.push_back(std::uniform_int_distribution<int>(1, n - 1)(rng) * (rng() % 2 ? 1 : -1));
    absorb(verify_coproduct_on_braid(b));
  }
  all.seconds = sw.seconds();
  return all;
}


Tensor2 aij_coproduct_formula(int i, int j) {
  int N = i + j + 1;
  SymSeries one = SymSeries::single(Basis::Schur, N, {});
  auto A = [&](int a, int b) {
    SymSeries x = aij(a, b);
    x.N = N;
    return x;
  };
  Scalar z = sZ();
  Tensor2 r = tensor(A(i, j), one) + tensor(one, A(i, j));
  for (int k = 0; k < i; ++k) r += tensor(A(k, 0), A(i - 1 - k, j)) * z;
  for (int l = 0; l < j; ++l) r -= tensor(A(0, l), A(i, j - 1 - l)) * z;
  for (int k = 0; k < i; ++k)
    for (int l = 0; l < j; ++l) r -= tensor(multiply(A(k, 0), A(0, l)), A(i - 1 - k, j - 1 - l)) * (z * z);
  r.N = N;
  return r;
}

VerificationReport verify_aij_coproduct(int max_sum) {
  Stopwatch sw;
  VerificationReport r("A_ij coproduct", "i+j <= " + std::to_string(max_sum));
  for (int n = 0; n <= max_sum; ++n)
    for (int i = 0; i <= n; ++i) {
      VerificationReport sub("", "");
      compare_tensors(sub, coproduct(aij(i, n - i)), aij_coproduct_formula(i, n - i));
      r.checked += sub.checked;
      for (auto& x : sub.residuals) r.residuals.push_back({"A(" + std::to_string(i) + "," + std::to_string(n - i) + ") " + x.cls, x.value});
    }
  r.seconds = sw.seconds();
  return r;
}

VerificationReport verify_pn_primitive(int max_n) {
  Stopwatch sw;
  VerificationReport r("P_n primitive", "n <= " + std::to_string(max_n));
  for (int n = 1; n <= max_n; ++n) {
    SymSeries P = power_sum_element(n, n);
    SymSeries one = SymSeries::single(Basis::Schur, n, {});
    Tensor2 prim = tensor(P, one) + tensor(one, P);
    Tensor2 formula(Basis::Schur, n);
    for (int i = 0; i < n; ++i) formula += aij_coproduct_formula(i, n - 1 - i);
    formula = formula * quantum_integer(n).inverse();
    VerificationReport a("", ""), b("", "");
    compare_tensors(a, formula, prim);
    compare_tensors(b, coproduct(P), prim);
    r.checked += a.checked + b.checked;
    for (auto& x : a.residuals) r.residuals.push_back({"n=" + std::to_string(n) + " formula " + x.cls, x.value});
    for (auto& x : b.residuals) r.residuals.push_back({"n=" + std::to_string(n) + " coproduct " + x.cls, x.value});
  }
  r.seconds = sw.seconds();
  return r;
}

VerificationReport verify_colored_unknot(int max_size) {
  Stopwatch sw;
  VerificationReport r("colored unknot coproduct", "|lambda| <= " + std::to_string(max_size));
  Scalar a1 = sA1(), a2 = sA2();
  for (auto& lam : partitions_upto(max_size)) {
    Scalar lhs = framed_unknot_value(lam, a1 * a2);
    Scalar rhs;
    int n = size(lam);
    for (int k = 0; k <= n; ++k)
      for (auto& mu : partitions_of(k))
        for (auto& nu : partitions_of(n - k)) {
          const auto& lr = lr_coefficients(mu, nu);
          auto it = lr.find(lam);
          if (it == lr.end()) continue;
          rhs += Scalar(it->second) * a2.pow(k) * a1.pow(k - n) * framed_unknot_value(mu, a1) * framed_unknot_value(nu, a2);
        }
    r.check("lambda=" + part_str(lam), lhs - rhs);
  }
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- diagrams

LeafDiagram unknot_diagram() { return parse_diagram("cup 0 >\ncap 0\n"); }

LeafDiagram positive_kink_diagram() { return parse_diagram("strands u\ncup 1 <\nx 0 L\ncap 1\n"); }

namespace {

std::vector<int> adjacent_opposite(const std::vector<int>& o) {
  std::vector<int> ks;
  for (size_t k = 0; k + 1 < o.size(); ++k)
    if (o[k] != o[k + 1]) ks.push_back(static_cast<int>(k));
  return ks;
}

}  // namespace

LeafDiagram random_planar_diagram(std::mt19937& rng, int max_crossings) {
  std::uniform_int_distribution<int> coin(0, 99);
  while (true) {
    LeafDiagram d;
    std::vector<int> o;
    int crossings = 0, steps = 2 + max_crossings * 3;
    for (int st = 0; st < steps; ++st) {
      int w = static_cast<int>(o.size());
      int roll = coin(rng);
      if (w < 2 || (roll < 25 && w < 6)) {
        Slice s{SliceType::Cup, std::uniform_int_distribution<int>(0, w)(rng), coin(rng) < 50 ? 1 : -1};
        o.insert(o.begin() + s.k, {s.arg > 0 ? -1 : 1, s.arg > 0 ? 1 : -1});
        d.slices.push_back(s);
      } else if (roll < 75 && crossings < max_crossings) {
        Slice s{SliceType::Cross, std::uniform_int_distribution<int>(0, w - 2)(rng), coin(rng) % 2};
        std::swap(o[s.k], o[s.k + 1]);
        d.slices.push_back(s);
        ++crossings;
      } else if (roll < 85) {
        d.slices.push_back({SliceType::Twist, std::uniform_int_distribution<int>(0, w - 1)(rng), coin(rng) < 50 ? 1 : -1});
      } else {
        auto ks = adjacent_opposite(o);
        int k = ks[std::uniform_int_distribution<size_t>(0, ks.size() - 1)(rng)];
        o.erase(o.begin() + k, o.begin() + k + 2);
        d.slices.push_back({SliceType::Cap, k, 0});
      }
    }
    while (!o.empty()) {
      auto ks = adjacent_opposite(o);
      int k = ks[std::uniform_int_distribution<size_t>(0, ks.size() - 1)(rng)];
      o.erase(o.begin() + k, o.begin() + k + 2);
      d.slices.push_back({SliceType::Cap, k, 0});
    }
    if (crossings > 0) return d;
  }
}

std::array<LeafDiagram, 3> skein_triple(const LeafDiagram& d, size_t at) {
  if (at >= d.slices.size() || d.slices[at].type != SliceType::Cross)
    throw std::invalid_argument("skein triple needs a crossing slice");
  auto lev = levels(d);
  const auto& o = lev[at];
  Slice s = d.slices[at];
  int sg = slice_crossing_sign(o, s);
  LeafDiagram kp = d, km = d, k0 = d;
  if (sg < 0) kp.slices[at].arg = 1 - s.arg;
  else km.slices[at].arg = 1 - s.arg;
  if (o[s.k] == o[s.k + 1]) {
    k0.slices.erase(k0.slices.begin() + at);
  } else {
    const auto& up = lev[at + 1];
    Slice cap{SliceType::Cap, s.k, 0};
    Slice cup{SliceType::Cup, s.k, up[s.k] < 0 ? 1 : -1};
    k0.slices[at] = cap;
    k0.slices.insert(k0.slices.begin() + at + 1, cup);
  }
  return {kp, km, k0};
}

VerificationReport verify_skein_relation(int samples, std::mt19937& rng) {
  Stopwatch sw;
  VerificationReport r("lift skein relation", std::to_string(samples) + " random diagrams");
  CoverChart planar;
  for (int k = 0; k < samples; ++k) {
    LeafDiagram d = random_planar_diagram(rng, 4);
    std::vector<size_t> cs;
    for (size_t i = 0; i < d.slices.size(); ++i)
      if (d.slices[i].type == SliceType::Cross) cs.push_back(i);
    size_t at = cs[std::uniform_int_distribution<size_t>(0, cs.size() - 1)(rng)];
    auto tri = skein_triple(d, at);
    PlanarValue vp = evaluate_trivial_cover(enumerate_lifts(tri[0], planar));
    PlanarValue vm = evaluate_trivial_cover(enumerate_lifts(tri[1], planar));
    PlanarValue v0 = evaluate_trivial_cover(enumerate_lifts(tri[2], planar));
    Scalar res = vp[0] - vm[0] - sZ() * v0[0];
    r.check("sample " + std::to_string(k), res);
    // the lift of a closed diagram evaluates to its HOMFLYPT value at a = a1 a2
    r.check("sample " + std::to_string(k) + " source", vp[0] - homflypt(tri[0], sA1() * sA2()));
  }
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- moves

namespace {

// local move inserted before slice `at`, acting on position k of that level
std::vector<Slice> move_slices(int kind, int k, const std::vector<int>& o) {
  int w = static_cast<int>(o.size());
  switch (kind) {
    case 0: {  // framed Reidemeister I: kink and two compensating half-twists
      std::vector<int> lo = o;
      Slice cup{SliceType::Cup, k + 1, o[k] > 0 ? -1 : 1};
      lo.insert(lo.begin() + k + 1, {cup.arg > 0 ? -1 : 1, cup.arg > 0 ? 1 : -1});
      Slice x{SliceType::Cross, k, 0};
      int sg = slice_crossing_sign(lo, x);
      return {cup, x, {SliceType::Cap, k + 1, 0}, {SliceType::Twist, k, -sg}, {SliceType::Twist, k, -sg}};
    }
    case 1:  // Reidemeister II
      if (k + 1 >= w) return {};
      return {{SliceType::Cross, k, 0}, {SliceType::Cross, k, 1}};
    case 2:  // Reidemeister III, one side
      if (k + 2 >= w) return {};
      return {{SliceType::Cross, k, 0}, {SliceType::Cross, k + 1, 0}, {SliceType::Cross, k, 0}};
    case 3:  // snake
      return {{SliceType::Cup, k + 1, o[k] > 0 ? 1 : -1}, {SliceType::Cap, k, 0}};
    case 4:  // sign line back and forth
      return {{SliceType::Sign, k, 0}, {SliceType::Sign, k, 0}};
    case 5:  // branch cut back and forth
      return {{SliceType::Cut, k, 0}, {SliceType::Cut, k, 0}};
    case 6:  // wrap and unwrap
      return {{SliceType::Shift, 0, 1}, {SliceType::Shift, 0, -1}};
    default:
      return {};
  }
}

std::vector<Slice> r3_other(int k) {
  return {{SliceType::Cross, k + 1, 0}, {SliceType::Cross, k, 0}, {SliceType::Cross, k + 1, 0}};
}

LeafDiagram random_torus_diagram(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 99);
  LeafDiagram d;
  d.periodic = true;
  int w = std::uniform_int_distribution<int>(1, 3)(rng);
  d.bottom.assign(w, 1);
  int steps = std::uniform_int_distribution<int>(1, 5)(rng);
  for (int st = 0; st < steps; ++st) {
    int roll = coin(rng);
    if (roll < 40 && w >= 2) d.slices.push_back({SliceType::Cross, std::uniform_int_distribution<int>(0, w - 2)(rng), coin(rng) % 2});
    else if (roll < 70) d.slices.push_back({SliceType::Shift, 0, coin(rng) < 50 ? 1 : -1});
    else if (roll < 85) d.slices.push_back({SliceType::Sign, std::uniform_int_distribution<int>(0, w - 1)(rng), coin(rng) % 3});
    else d.slices.push_back({SliceType::Twist, std::uniform_int_distribution<int>(0, w - 1)(rng), 1}),
         d.slices.push_back({SliceType::Twist, std::uniform_int_distribution<int>(0, w - 1)(rng), 1});
  }
  return d;
}

}  // namespace

VerificationReport move_invariance_suite(unsigned seed, int samples) {
  Stopwatch sw;
  VerificationReport r("move invariance", "seed " + std::to_string(seed));
  std::mt19937 rng(seed);
  CoverChart planar, torus;
  torus.kind = ChartKind::Torus;
  static const char* names[] = {"R1 framed", "R2", "R3", "snake", "sign line", "cut", "wrap"};
  for (int it = 0; it < samples; ++it) {
    for (int target = 0; target < 2; ++target) {
      LeafDiagram d = target == 0 ? random_planar_diagram(rng, 3) : random_torus_diagram(rng);
      auto lev = levels(d);
      int kinds = target == 0 ? 4 : 7;
      int kind = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
      // insert somewhere with enough strands
      std::vector<size_t> spots;
      for (size_t at = 0; at <= d.slices.size(); ++at) {
        int w = static_cast<int>(lev[at].size());
        if (w >= 1 + (kind == 1) + 2 * (kind == 2)) spots.push_back(at);
      }
      if (spots.empty()) continue;
      size_t at = spots[std::uniform_int_distribution<size_t>(0, spots.size() - 1)(rng)];
      const auto& o = lev[at];
      int w = static_cast<int>(o.size());
      int maxk = w - 1 - (kind == 1) - 2 * (kind == 2);
      int k = std::uniform_int_distribution<int>(0, maxk)(rng);
      LeafDiagram a = d, b = d;
      auto ins = move_slices(kind, k, o);
      if (kind == 2) {
        // both sides followed by the inverse of the first, so the strands return to place
        std::vector<Slice> undo = {{SliceType::Cross, k, 1}, {SliceType::Cross, k + 1, 1}, {SliceType::Cross, k, 1}};
        auto other = r3_other(k);
        ins.insert(ins.end(), undo.begin(), undo.end());
        other.insert(other.end(), undo.begin(), undo.end());
        a.slices.insert(a.slices.begin() + at, ins.begin(), ins.end());
        b.slices.insert(b.slices.begin() + at, other.begin(), other.end());
      } else {
        b.slices.insert(b.slices.begin() + at, ins.begin(), ins.end());
      }
      std::string cls = std::string(target == 0 ? "planar " : "torus ") + names[kind] + " #" + std::to_string(it);
      if (target == 0) {
        PlanarValue va = evaluate_trivial_cover(enumerate_lifts(a, planar));
        PlanarValue vb = evaluate_trivial_cover(enumerate_lifts(b, planar));
        r.check(cls, va[0] - vb[0]);
      } else {
        HomologicalValue va = evaluate_homological(enumerate_lifts(a, torus));
        HomologicalValue vb = evaluate_homological(enumerate_lifts(b, torus));
        ++r.checked;
        if (va != vb) r.fail(cls, homological_str(va) + " vs " + homological_str(vb));
      }
    }
  }
  r.seconds = sw.seconds();
  return r;
}

}  // namespace skein
