#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicspan/gf.hpp"

namespace cubicspan {

/// Point of P^3(F_q), stored normalized: the first nonzero coordinate is 1,
/// so equal points have identical codes.
struct Point {
  std::array<Fe, 4> x{};

  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

/// Plane of P^3(F_q) as a normalized covector: the plane is n . x = 0.
struct Plane {
  std::array<Fe, 4> n{};

  bool operator==(const Plane&) const = default;
  auto operator<=>(const Plane&) const = default;
};

/// Line of P^3(F_q) as the row span of a 2x4 matrix in reduced row-echelon
/// form. RREF is a canonical representative, so lines compare by value.
struct Line {
  std::array<Fe, 8> b{};   // two rows, row-major
  std::array<int, 2> piv{};  // pivot columns, piv[0] < piv[1]

  Point point_a() const { return Point{{b[0], b[1], b[2], b[3]}}; }
  Point point_b() const { return Point{{b[4], b[5], b[6], b[7]}}; }

  bool operator==(const Line&) const = default;
  auto operator<=>(const Line&) const = default;
};

/// Normalizes a coordinate vector; throws std::invalid_argument if zero.
Point make_point(const Field& f, std::array<Fe, 4> raw);
Plane make_plane(const Field& f, std::array<Fe, 4> raw);

/// The unique line through two distinct points (throws if P == Q).
Line line_through(const Field& f, const Point& p, const Point& q);

/// Line from any two independent spanning rows.
Line line_from_span(const Field& f, std::array<Fe, 4> r0, std::array<Fe, 4> r1);

/// All q^3+q^2+q+1 points, in a fixed enumeration order compatible with
/// space_index below.
std::vector<Point> points_of_space(const Field& f);

/// All (q^2+1)(q^2+q+1) lines, each exactly once (canonical RREF bases).
std::vector<Line> lines_of_space(const Field& f);

/// Dense index of a (normalized) point within points_of_space order.
std::size_t space_index(const Field& f, const Point& p);
std::size_t space_size(const Field& f);

/// The q+1 points of a line.
std::vector<Point> points_on_line(const Field& f, const Line& l);

/// The point at pencil parameter (s:t) on the line's stored basis.
Point point_on_line_at(const Field& f, const Line& l, Fe s, Fe t);

bool line_contains(const Field& f, const Line& l, const Point& p);

/// Pencil coordinates (s:t) of a point on the line (reads the pivot columns).
std::array<Fe, 2> line_coords(const Field& f, const Line& l, const Point& p);

/// True iff the lines share no point (stacked bases have rank 4).
bool are_skew(const Field& f, const Line& l1, const Line& l2);

/// Two canonical independent planes through the line; every plane containing
/// the line is a combination of these.
std::array<Plane, 2> pencil_basis(const Field& f, const Line& l);

/// The q+1 planes containing the line.
std::vector<Plane> pencil_of_planes(const Field& f, const Line& l);

/// Unique intersection point when the line is not contained in the plane;
/// nullopt when it is.
std::optional<Point> meet_plane_line(const Field& f, const Plane& pl, const Line& l);

/// The unique plane containing the line and an off-line point (throws if the
/// point lies on the line).
Plane plane_through(const Field& f, const Line& l, const Point& p);

bool plane_contains(const Field& f, const Plane& pl, const Point& p);

/// The q^2+q+1 points of a plane.
std::vector<Point> points_on_plane(const Field& f, const Plane& pl);

/// Completes {P} to a canonical basis {P, U, V} of the plane with covector n.
/// Used for tangent-plane coordinates; deterministic in the covector and P.
std::array<Point, 2> plane_frame(const Field& f, const Plane& pl, const Point& p);

// ---- wire formats: points "a:b:c:d", planes "[a,b,c,d]" ----

std::string format_point(const Point& p);
Point parse_point(const Field& f, const std::string& s);
std::string format_plane(const Plane& pl);

}  // namespace cubicspan
