#pragma once

#include "nugatory/intlinalg.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nugatory {

class DiagramError : public std::invalid_argument {
 public:
  enum class Kind { Syntax, Empty, EdgeMultiplicity, Link, Disconnected, NonPlanar, Parameters };

  DiagramError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Edge labels around a crossing, counterclockwise from the incoming
/// under-strand. Positions 0 and 2 are the under-strand, 1 and 3 the over.
using Crossing = std::array<int, 4>;

/// Validated planar diagram of a single-component knot. The zero-crossing
/// unknot is written "U".
class PlanarDiagram {
 public:
  static PlanarDiagram unknot() { return PlanarDiagram(); }
  /// Validates labels, component count and planarity; throws DiagramError.
  explicit PlanarDiagram(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int edge_count() const { return static_cast<int>(2 * crossings_.size()); }

  /// Canonical text, "X(1,5,2,4) X(3,1,4,6) ..." or "U".
  std::string to_string() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  PlanarDiagram() = default;
  std::vector<Crossing> crossings_;
};

/// Whitespace-separated X(a,b,c,d) terms, or the single token U.
PlanarDiagram parse_pd(std::string_view text);

/// Quadrant `quadrant` (0..3) of a crossing lies between tuple positions
/// `quadrant` and `quadrant + 1` (mod 4).
struct QuadrantSlot {
  int crossing = 0;
  int quadrant = 0;
  friend auto operator<=>(const QuadrantSlot&, const QuadrantSlot&) = default;
};

struct Face {
  std::vector<QuadrantSlot> slots;  // boundary order
  /// Least slot; used as the face's identity.
  QuadrantSlot id() const { return slots.front(); }
};

class FaceSet {
 public:
  FaceSet() = default;
  FaceSet(std::vector<Face> faces, std::size_t crossing_count);

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  std::size_t crossing_count() const { return crossing_count_; }
  /// Index into faces() of the face containing `slot`.
  std::size_t face_of(QuadrantSlot slot) const { return slot_face_[static_cast<std::size_t>(4 * slot.crossing + slot.quadrant)]; }

 private:
  std::vector<Face> faces_;
  std::vector<std::size_t> slot_face_;
  std::size_t crossing_count_ = 0;
};

/// Faces by rotation-system traversal, sorted by identity. For n >= 1
/// crossings there are n + 2 faces; the zero-crossing unknot has none.
FaceSet faces(const PlanarDiagram& d);

enum class Color { White, Black };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }
std::string to_string(Color c);

struct Coloring {
  FaceSet faces;
  std::vector<Color> color;  // parallel to faces.faces()

  std::vector<std::size_t> faces_of(Color c) const;
};

/// Proper two-coloring. The face on the counterclockwise side of the
/// highest-numbered edge, at its first occurrence, is black.
Coloring checkerboard(const PlanarDiagram& d, const FaceSet& f);

struct GoeritzMatrix {
  IntMatrix matrix;                       // symmetric, (#class faces - 1) square
  std::size_t deleted_face = 0;           // index into FaceSet::faces()
  Color color_class = Color::White;
  std::vector<std::size_t> row_faces;     // face index of each row
};

/// Goeritz matrix over the faces of `color_class`. At a crossing whose
/// class-colored quadrants are {0, 2} the type is +1, otherwise -1;
/// g_ij = -sum of types over crossings joining faces i and j, and each
/// row sums to zero before `deleted_face` is removed.
GoeritzMatrix goeritz_matrix(const PlanarDiagram& d, const Coloring& c, Color color_class, std::size_t deleted_face);

/// White class, least white face deleted.
GoeritzMatrix goeritz_matrix(const PlanarDiagram& d);

/// Standard three-column pretzel diagram P(a, b, c), |a| + |b| + |c|
/// crossings. Throws DiagramError (Kind::Link) when the result has more than
/// one component.
PlanarDiagram pretzel_diagram(int a, int b, int c);

}  // namespace nugatory
