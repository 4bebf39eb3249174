#include "nugatory/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace nugatory {

namespace {

struct Occurrence {
  int crossing;
  int position;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t count() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

// occurrences[label] holds the two (crossing, position) pairs of that label.
std::vector<std::array<Occurrence, 2>> edge_occurrences(const std::vector<Crossing>& crossings) {
  std::vector<std::array<Occurrence, 2>> occ(2 * crossings.size() + 1);
  std::vector<int> seen(occ.size(), 0);
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    for (int p = 0; p < 4; ++p) {
      const int e = crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
      occ[static_cast<std::size_t>(e)][static_cast<std::size_t>(seen[static_cast<std::size_t>(e)]++)] = {c, p};
    }
  }
  return occ;
}

Occurrence other_end(const std::vector<std::array<Occurrence, 2>>& occ, const std::vector<Crossing>& crossings,
                     Occurrence at) {
  const int e = crossings[static_cast<std::size_t>(at.crossing)][static_cast<std::size_t>(at.position)];
  const auto& pair = occ[static_cast<std::size_t>(e)];
  if (pair[0].crossing == at.crossing && pair[0].position == at.position) return pair[1];
  return pair[0];
}

std::vector<Face> trace_faces(const std::vector<Crossing>& crossings) {
  const auto occ = edge_occurrences(crossings);
  const std::size_t slots = 4 * crossings.size();
  std::vector<bool> visited(slots, false);
  std::vector<Face> out;
  for (std::size_t s = 0; s < slots; ++s) {
    if (visited[s]) continue;
    Face face;
    QuadrantSlot cur{static_cast<int>(s / 4), static_cast<int>(s % 4)};
    for (;;) {
      const auto idx = static_cast<std::size_t>(4 * cur.crossing + cur.quadrant);
      if (visited[idx]) break;
      visited[idx] = true;
      face.slots.push_back(cur);
      // Leave along the counterclockwise bounding edge; the face continues on
      // the counterclockwise side of that edge at its other end.
      const Occurrence next = other_end(occ, crossings, {cur.crossing, (cur.quadrant + 1) % 4});
      cur = {next.crossing, next.position};
    }
    if (face.slots.front().crossing != static_cast<int>(s / 4) || face.slots.front().quadrant != static_cast<int>(s % 4)) {
      throw DiagramError(DiagramError::Kind::NonPlanar, "face traversal did not close");
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::string describe(const Crossing& c) {
  std::ostringstream os;
  os << "X(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return os.str();
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  using Kind = DiagramError::Kind;
  const std::size_t n = crossings_.size();
  if (n == 0) throw DiagramError(Kind::Empty, "empty diagram; the zero-crossing unknot is written U");

  const int edges = static_cast<int>(2 * n);
  std::vector<int> count(static_cast<std::size_t>(edges) + 1, 0);
  for (const auto& c : crossings_) {
    for (int e : c) {
      if (e < 1 || e > edges) {
        throw DiagramError(Kind::EdgeMultiplicity, "edge label " + std::to_string(e) + " in " + describe(c) +
                                                       " is outside 1.." + std::to_string(edges));
      }
      ++count[static_cast<std::size_t>(e)];
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (count[static_cast<std::size_t>(e)] != 2) {
      throw DiagramError(Kind::EdgeMultiplicity, "edge label " + std::to_string(e) + " appears " +
                                                     std::to_string(count[static_cast<std::size_t>(e)]) +
                                                     " times; expected 2");
    }
  }

  const auto occ = edge_occurrences(crossings_);

  UnionFind crossings_joined(n);
  for (int e = 1; e <= edges; ++e) {
    const auto& pair = occ[static_cast<std::size_t>(e)];
    crossings_joined.unite(static_cast<std::size_t>(pair[0].crossing), static_cast<std::size_t>(pair[1].crossing));
  }
  if (crossings_joined.count() != 1) {
    throw DiagramError(Kind::Disconnected, "diagram is disconnected (" + std::to_string(crossings_joined.count()) +
                                               " pieces)");
  }

  // Strands pass straight through a crossing (position p to p + 2) and
  // continue along edges; each closed curve is one component.
  UnionFind strands(4 * n);
  for (std::size_t c = 0; c < n; ++c) {
    strands.unite(4 * c + 0, 4 * c + 2);
    strands.unite(4 * c + 1, 4 * c + 3);
  }
  for (int e = 1; e <= edges; ++e) {
    const auto& pair = occ[static_cast<std::size_t>(e)];
    strands.unite(static_cast<std::size_t>(4 * pair[0].crossing + pair[0].position),
                  static_cast<std::size_t>(4 * pair[1].crossing + pair[1].position));
  }
  if (const auto components = strands.count(); components != 1) {
    throw DiagramError(Kind::Link, "diagram is a link with " + std::to_string(components) + " components");
  }

  const auto f = trace_faces(crossings_);
  if (f.size() != n + 2) {
    throw DiagramError(Kind::NonPlanar, "diagram has " + std::to_string(f.size()) + " faces; a planar diagram with " +
                                            std::to_string(n) + " crossings has " + std::to_string(n + 2));
  }
}

std::string PlanarDiagram::to_string() const {
  if (crossings_.empty()) return "U";
  std::string out;
  for (const auto& c : crossings_) {
    if (!out.empty()) out += ' ';
    out += describe(c);
  }
  return out;
}

PlanarDiagram parse_pd(std::string_view text) {
  using Kind = DiagramError::Kind;
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  }
  if (tokens.empty()) throw DiagramError(Kind::Empty, "empty diagram; the zero-crossing unknot is written U");
  if (tokens.size() == 1 && tokens[0] == "U") return PlanarDiagram::unknot();

  std::vector<Crossing> crossings;
  for (const auto& tok : tokens) {
    if (tok == "U") throw DiagramError(Kind::Syntax, "U must be the only term of a diagram");
    if (tok.size() < 3 || tok[0] != 'X' || tok[1] != '(' || tok.back() != ')') {
      throw DiagramError(Kind::Syntax, "expected X(a,b,c,d), got '" + tok + "'");
    }
    Crossing c{};
    std::size_t field = 0;
    std::string digits;
    auto flush = [&] {
      if (digits.empty() || field >= 4) throw DiagramError(Kind::Syntax, "expected four labels in '" + tok + "'");
      if (digits.size() > 9) throw DiagramError(Kind::Syntax, "edge label too large in '" + tok + "'");
      c[field++] = std::stoi(digits);
      digits.clear();
    };
    for (std::size_t i = 2; i + 1 < tok.size(); ++i) {
      const char ch = tok[i];
      if (ch == ',') {
        flush();
      } else if (ch >= '0' && ch <= '9') {
        digits.push_back(ch);
      } else {
        throw DiagramError(Kind::Syntax, "unexpected character '" + std::string(1, ch) + "' in '" + tok + "'");
      }
    }
    flush();
    if (field != 4) throw DiagramError(Kind::Syntax, "expected four labels in '" + tok + "'");
    crossings.push_back(c);
  }
  return PlanarDiagram(std::move(crossings));
}

FaceSet::FaceSet(std::vector<Face> faces, std::size_t crossing_count)
    : faces_(std::move(faces)), slot_face_(4 * crossing_count), crossing_count_(crossing_count) {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    for (const auto& s : faces_[i].slots) slot_face_[static_cast<std::size_t>(4 * s.crossing + s.quadrant)] = i;
  }
}

FaceSet faces(const PlanarDiagram& d) {
  auto f = trace_faces(d.crossings());
  if (d.crossing_count() > 0 && f.size() != d.crossing_count() + 2) {
    throw DiagramError(DiagramError::Kind::NonPlanar, "face count violates the Euler formula");
  }
  std::sort(f.begin(), f.end(), [](const Face& a, const Face& b) { return a.id() < b.id(); });
  return FaceSet(std::move(f), d.crossing_count());
}

std::string to_string(Color c) { return c == Color::White ? "white" : "black"; }

std::vector<std::size_t> Coloring::faces_of(Color c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < color.size(); ++i) {
    if (color[i] == c) out.push_back(i);
  }
  return out;
}

Coloring checkerboard(const PlanarDiagram& d, const FaceSet& f) {
  Coloring out{f, std::vector<Color>(f.size(), Color::White)};
  if (d.crossing_count() == 0) return out;

  const auto& crossings = d.crossings();
  const int top = d.edge_count();
  QuadrantSlot seed{};
  bool found = false;
  for (int c = 0; c < static_cast<int>(crossings.size()) && !found; ++c) {
    for (int p = 0; p < 4 && !found; ++p) {
      if (crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] == top) {
        seed = {c, p};
        found = true;
      }
    }
  }

  std::vector<int> assigned(f.size(), -1);
  const auto start = f.face_of(seed);
  assigned[start] = static_cast<int>(Color::Black);
  std::queue<std::size_t> todo;
  todo.push(start);
  while (!todo.empty()) {
    const auto face = todo.front();
    todo.pop();
    for (const auto& s : f.faces()[face].slots) {
      // Neighbouring quadrants at a crossing are separated by an edge.
      for (int step : {1, 3}) {
        const auto nb = f.face_of({s.crossing, (s.quadrant + step) % 4});
        const int want = 1 - assigned[face];
        if (assigned[nb] < 0) {
          assigned[nb] = want;
          todo.push(nb);
        } else if (assigned[nb] != want) {
          throw DiagramError(DiagramError::Kind::NonPlanar, "faces admit no checkerboard coloring");
        }
      }
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (assigned[i] < 0) throw DiagramError(DiagramError::Kind::Disconnected, "face graph is disconnected");
    out.color[i] = static_cast<Color>(assigned[i]);
  }
  return out;
}

GoeritzMatrix goeritz_matrix(const PlanarDiagram& d, const Coloring& c, Color color_class, std::size_t deleted_face) {
  GoeritzMatrix out;
  out.color_class = color_class;
  out.deleted_face = deleted_face;
  if (d.crossing_count() == 0) {
    out.matrix = IntMatrix(0, 0);
    return out;
  }
  const auto& f = c.faces;
  const auto members = c.faces_of(color_class);
  if (deleted_face >= f.size() || c.color[deleted_face] != color_class) {
    throw std::invalid_argument("goeritz_matrix: deleted face " + std::to_string(deleted_face) + " is not " +
                                to_string(color_class));
  }
  std::vector<long> row_of(f.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) row_of[members[i]] = static_cast<long>(i);

  const auto k = static_cast<Eigen::Index>(members.size());
  IntMatrix full = IntMatrix::Zero(k, k);
  for (int x = 0; x < static_cast<int>(d.crossing_count()); ++x) {
    const bool even_pair = c.color[f.face_of({x, 0})] == color_class;
    const int q = even_pair ? 0 : 1;
    const Integer type = even_pair ? 1 : -1;
    const auto i = row_of[f.face_of({x, q})];
    const auto j = row_of[f.face_of({x, q + 2})];
    if (i == j) continue;
    full(i, j) -= type;
    full(j, i) -= type;
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    Integer s = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (j != i) s += full(i, j);
    }
    full(i, i) = -s;
  }

  const auto drop = row_of[deleted_face];
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (i != drop) {
      keep.push_back(i);
      out.row_faces.push_back(members[static_cast<std::size_t>(i)]);
    }
  }
  out.matrix = full(keep, keep);
  return out;
}

GoeritzMatrix goeritz_matrix(const PlanarDiagram& d) {
  const auto f = faces(d);
  const auto c = checkerboard(d, f);
  if (d.crossing_count() == 0) return goeritz_matrix(d, c, Color::White, 0);
  return goeritz_matrix(d, c, Color::White, c.faces_of(Color::White).front());
}

namespace {

// Ports of a crossing in counterclockwise order.
enum Port { NE = 0, NW = 1, SW = 2, SE = 3 };

struct PortRef {
  int crossing;
  int port;
};

}  // namespace

PlanarDiagram pretzel_diagram(int a, int b, int c) {
  using Kind = DiagramError::Kind;
  const std::array<int, 3> twists{a, b, c};
  for (int t : twists) {
    if (t == 0) throw DiagramError(Kind::Parameters, "pretzel parameters must be nonzero");
  }

  // Column i holds |twists[i]| crossings stacked top to bottom.
  std::vector<bool> nw_se_over;
  std::array<int, 3> first{}, last{};
  int total = 0;
  for (int i = 0; i < 3; ++i) {
    first[static_cast<std::size_t>(i)] = total;
    const int len = std::abs(twists[static_cast<std::size_t>(i)]);
    for (int j = 0; j < len; ++j) nw_se_over.push_back(twists[static_cast<std::size_t>(i)] > 0);
    total += len;
    last[static_cast<std::size_t>(i)] = total - 1;
  }

  std::vector<std::array<PortRef, 4>> link(static_cast<std::size_t>(total));
  auto join = [&](PortRef x, PortRef y) {
    link[static_cast<std::size_t>(x.crossing)][static_cast<std::size_t>(x.port)] = y;
    link[static_cast<std::size_t>(y.crossing)][static_cast<std::size_t>(y.port)] = x;
  };
  for (int i = 0; i < 3; ++i) {
    for (int x = first[static_cast<std::size_t>(i)]; x < last[static_cast<std::size_t>(i)]; ++x) {
      join({x, SW}, {x + 1, NW});
      join({x, SE}, {x + 1, NE});
    }
  }
  join({first[0], NE}, {first[1], NW});
  join({first[1], NE}, {first[2], NW});
  join({first[2], NE}, {first[0], NW});
  join({last[0], SE}, {last[1], SW});
  join({last[1], SE}, {last[2], SW});
  join({last[2], SE}, {last[0], SW});

  // Walk the knot from crossing 0, numbering edges in order of traversal.
  std::vector<std::array<int, 4>> label(static_cast<std::size_t>(total), {0, 0, 0, 0});
  std::vector<int> entry_under(static_cast<std::size_t>(total), -1);
  PortRef in{0, NW};
  int next_label = 1;
  for (int steps = 0; steps < 2 * total; ++steps) {
    const auto ci = static_cast<std::size_t>(in.crossing);
    const bool over = nw_se_over[ci] ? (in.port == NW || in.port == SE) : (in.port == NE || in.port == SW);
    if (!over) entry_under[ci] = in.port;
    const PortRef out{in.crossing, (in.port + 2) % 4};
    const PortRef to = link[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.port)];
    label[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.port)] = next_label;
    label[static_cast<std::size_t>(to.crossing)][static_cast<std::size_t>(to.port)] = next_label;
    ++next_label;
    in = to;
    if (in.crossing == 0 && in.port == NW) {
      if (steps + 1 != 2 * total) break;
    }
  }
  const bool closed = next_label == 2 * total + 1 &&
                      std::all_of(entry_under.begin(), entry_under.end(), [](int p) { return p >= 0; });
  if (!closed) {
    throw DiagramError(Kind::Link, "P(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                       ") is a link, not a knot");
  }

  std::vector<Crossing> crossings;
  crossings.reserve(static_cast<std::size_t>(total));
  for (int x = 0; x < total; ++x) {
    const auto xi = static_cast<std::size_t>(x);
    Crossing cr{};
    for (int k = 0; k < 4; ++k) {
      cr[static_cast<std::size_t>(k)] = label[xi][static_cast<std::size_t>((entry_under[xi] + k) % 4)];
    }
    crossings.push_back(cr);
  }
  return PlanarDiagram(std::move(crossings));
}

}  // namespace nugatory
