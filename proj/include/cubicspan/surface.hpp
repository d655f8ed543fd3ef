#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicspan/proj.hpp"

namespace cubicspan {

/// Restriction of the cubic form to a parametrized line: the binary cubic
/// c[3] s^3 + c[2] s^2 t + c[1] s t^2 + c[0] t^3 attached to an ordered basis
/// (A, B) of the line, with (s:t) the coordinates of s*A + t*B.
struct BinaryCubic {
  std::array<Fe, 4> c{};  // c[i] multiplies s^i t^(3-i)

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

struct BinaryQuad {
  std::array<Fe, 3> c{};  // c[i] multiplies s^i t^(2-i)

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

/// Cubic form in three variables (l, u, v), graded-lex coefficient order
/// l^3, l^2 u, l^2 v, l u^2, l u v, l v^2, u^3, u^2 v, u v^2, v^3.
struct TernaryCubic {
  std::array<Fe, 10> c{};
};

enum class PointKind { Node, ParabolicCusp, Eckardt };

/// Local classification of a smooth surface point. `quad` holds the (u^2, uv,
/// v^2) coefficients of the tangent-plane restriction in the canonical frame
/// {P, U, V}; the kind is read off it: identically zero means Eckardt, a
/// repeated root means a parabolic point with cuspidal section, anything else
/// a nodal section. Rational asymptotic directions are returned as the points
/// a*U + b*V of the tangent plane for the rational roots (a:b) of `quad`
/// (empty for an Eckardt point, where every direction is asymptotic, and for
/// a conjugate pair of directions at a node).
struct PointClass {
  PointKind kind = PointKind::Node;
  std::array<Fe, 3> quad{};  // u^2, uv, v^2
  std::vector<Point> asymptotic_dirs;
};

/// The degree-2 map from a line on the surface to its pencil of planes,
/// sending a point to its tangent plane: at s*A + t*B the tangent plane is
/// u(s,t) * pencil[0] + v(s,t) * pencil[1]. Parabolic points of the line are
/// the roots of `parabolic_locus`; the locus is identically zero exactly when
/// the map is inseparable (then every point is parabolic).
struct GaussOnLine {
  std::array<Plane, 2> pencil;
  BinaryQuad u, v;
  bool separable = true;
  BinaryQuad parabolic_locus;
};

/// The cubic surface S = V(F), with the 20 coefficients of F stored in the
/// fixed graded-lex monomial order x0^3, x0^2 x1, x0^2 x2, x0^2 x3, x0 x1^2,
/// x0 x1 x2, x0 x1 x3, x0 x2^2, x0 x2 x3, x0 x3^2, x1^3, x1^2 x2, x1^2 x3,
/// x1 x2^2, x1 x2 x3, x1 x3^2, x2^3, x2^2 x3, x2 x3^2, x3^3.
class Surface {
 public:
  /// Throws std::invalid_argument when all coefficients are zero or any code
  /// is out of range.
  Surface(const Field& f, const std::array<Fe, 20>& coeffs);

  Surface(const Surface& o)
      : f_(o.f_), c_(o.c_), terms_(o.terms_), grad_(o.grad_), grad_terms_(o.grad_terms_) {
    smooth_.store(o.smooth_.load());
  }
  Surface& operator=(const Surface& o) {
    f_ = o.f_;
    c_ = o.c_;
    terms_ = o.terms_;
    grad_ = o.grad_;
    grad_terms_ = o.grad_terms_;
    smooth_.store(o.smooth_.load());
    return *this;
  }

  const Field& field() const { return *f_; }
  const std::array<Fe, 20>& coeffs() const { return c_; }

  struct Term {
    std::array<std::uint8_t, 4> e;  // exponents
    Fe c;
  };
  const std::vector<Term>& terms() const { return terms_; }

  /// Formal partial derivatives as quadratic forms (10 coefficients each, in
  /// the graded-lex degree-2 order).
  const std::array<std::array<Fe, 10>, 4>& gradient_forms() const { return grad_; }
  const std::array<std::vector<Term>, 4>& gradient_terms() const { return grad_terms_; }

  /// Exact smoothness over the algebraic closure: the degree-8 graded piece
  /// of the ideal (F, dF/dx0, .., dF/dx3) must span all 165 degree-8 forms
  /// (Macaulay bound 3+2+2+2+2-3 = 8). Cached after the first call.
  bool is_smooth() const;

  /// Wire format "q=p^k; F=c0,c1,...,c19".
  std::string to_string() const;
  static Surface parse(const std::string& text);

  bool operator==(const Surface& o) const {
    return f_ == o.f_ && c_ == o.c_;
  }

 private:
  const Field* f_;
  std::array<Fe, 20> c_;
  std::vector<Term> terms_;
  std::array<std::array<Fe, 10>, 4> grad_;
  std::array<std::vector<Term>, 4> grad_terms_;
  mutable std::atomic<signed char> smooth_{-1};
};

// ---- evaluation and tangent geometry ----

Fe evaluate(const Surface& s, const Point& p);
std::array<Fe, 4> gradient(const Surface& s, const Point& p);

/// Throws when P is not on S or S is singular at P.
Plane tangent_plane(const Surface& s, const Point& p);

/// F(s*A + t*B) for an arbitrary ordered pair of independent points.
BinaryCubic restrict_to_points(const Surface& s, const std::array<Fe, 4>& a,
                               const std::array<Fe, 4>& b);

/// Restriction along the line's canonical (RREF) basis.
BinaryCubic restrict_to_line(const Surface& s, const Line& l);

bool line_on_surface(const Surface& s, const Line& l);

/// All K-lines contained in S. Exhaustive line filter for small q; above
/// q = 13 it walks the tangent pencils of the surface points instead (the
/// result set is identical).
std::vector<Line> k_lines_on_surface(const Surface& s);

/// Lines of S through a given surface point (at most 3 when S is smooth).
std::vector<Line> lines_on_surface_through(const Surface& s, const Point& p);

/// The residual point R with l . S = P + Q + R (divisor arithmetic on the
/// restriction). P = Q demands a double root at P. Throws when the line lies
/// on S or the stated multiplicities are not present.
Point third_intersection(const Surface& s, const Line& l, const Point& p,
                         const Point& q);

/// Classification without the asymptotic-direction scan (kind + quadratic).
PointKind point_kind(const Surface& s, const Point& p, std::array<Fe, 3>* quad = nullptr);

PointClass classify_point(const Surface& s, const Point& p);

/// Throws when the line does not lie on S.
GaussOnLine gauss_on_line(const Surface& s, const Line& l);

/// All K-points of S, in space enumeration order (densely indexable).
std::vector<Point> surface_points(const Surface& s);

/// Same surface with coefficients embedded into an extension field.
Surface embed_surface(const Surface& s, const Field& ext);

/// F(l*O + u*U + v*V): restriction of the cubic to the plane spanned by an
/// independent triple, in the coordinates (l:u:v).
TernaryCubic restrict_to_plane(const Surface& s, const Point& o, const Point& u,
                               const Point& v);

// ---- singular point searches (used as the independent smoothness route) ----

bool has_rational_singular_point(const Surface& s);

/// Brute-force singular point search over F_{q^m} for every m <= max_m with
/// q^m <= max_ext_q (larger extensions are skipped; full coverage up to
/// m = 6 is feasible for the census fields q = 2, 3).
bool has_singular_point_up_to(const Surface& s, unsigned max_m,
                              std::uint64_t max_ext_q = 729);

/// Rank test layered with the extension point search.
bool strict_is_smooth(const Surface& s, unsigned max_m = 6);

// ---- binary form utilities ----

Fe eval_binary_cubic(const Field& f, const BinaryCubic& c, Fe s, Fe t);
Fe eval_binary_quad(const Field& f, const BinaryQuad& c, Fe s, Fe t);

/// Exact division of the cubic by the linear form vanishing at (s0:t0);
/// nullopt when (s0:t0) is not a root.
std::optional<BinaryQuad> divide_root(const Field& f, const BinaryCubic& c, Fe s0, Fe t0);

/// Same for a quadratic; the quotient is a linear form a*s + b*t returned as
/// {a, b}.
std::optional<std::array<Fe, 2>> divide_root(const Field& f, const BinaryQuad& c,
                                             Fe s0, Fe t0);

/// Distinct projective roots of the quadratic over F_{q^m} (coefficients are
/// embedded first). m = 2 sees every root of a binary quadratic.
std::vector<std::array<Fe, 2>> quad_roots_ext(const Field& f, const BinaryQuad& c,
                                              unsigned m);

/// Index of a degree-3 monomial in the coefficient order above.
int cubic_monomial_index(unsigned e0, unsigned e1, unsigned e2, unsigned e3);

}  // namespace cubicspan
