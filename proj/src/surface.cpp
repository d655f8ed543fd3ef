#include "cubicspan/surface.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "cubicspan/linalg.hpp"

namespace cubicspan {

namespace {

// ---- monomial tables for 4 variables, graded-lex within a fixed degree ----

struct MonoTable {
  unsigned d = 0;
  std::vector<std::array<std::uint8_t, 4>> mons;
  std::vector<int> lookup;  // dense (d+1)^4 exponent -> index

  int index(unsigned e0, unsigned e1, unsigned e2, unsigned e3) const {
    unsigned b = d + 1;
    return lookup[((e0 * b + e1) * b + e2) * b + e3];
  }
};

MonoTable build_mono_table(unsigned d) {
  MonoTable t;
  t.d = d;
  unsigned b = d + 1;
  t.lookup.assign(std::size_t(b) * b * b * b, -1);
  for (int e0 = int(d); e0 >= 0; --e0)
    for (int e1 = int(d) - e0; e1 >= 0; --e1)
      for (int e2 = int(d) - e0 - e1; e2 >= 0; --e2) {
        int e3 = int(d) - e0 - e1 - e2;
        t.lookup[((std::size_t(e0) * b + e1) * b + e2) * b + e3] = int(t.mons.size());
        t.mons.push_back({std::uint8_t(e0), std::uint8_t(e1), std::uint8_t(e2),
                          std::uint8_t(e3)});
      }
  return t;
}

const MonoTable& mono_table(unsigned d) {
  static const std::vector<MonoTable> tables = [] {
    std::vector<MonoTable> v;
    for (unsigned i = 0; i <= 8; ++i) v.push_back(build_mono_table(i));
    return v;
  }();
  return tables[d];
}

// ---- ternary form index maps (variables l, u, v) ----

// (var, var) -> degree-2 monomial index in order l^2, lu, lv, u^2, uv, v^2
constexpr int kTernQuad[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
// (quad index, var) -> degree-3 monomial index in order
// l^3, l^2 u, l^2 v, l u^2, l u v, l v^2, u^3, u^2 v, u v^2, v^3
constexpr int kTernCubic[6][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5},
                                  {3, 6, 7}, {4, 7, 8}, {5, 8, 9}};

void vars_of_term(const std::array<std::uint8_t, 4>& e, int out[3]) {
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < e[i]; ++r) out[n++] = i;
}

}  // namespace

Surface::Surface(const Field& f, const std::array<Fe, 20>& coeffs)
    : f_(&f), c_(coeffs) {
  bool all_zero = true;
  const auto& t3 = mono_table(3);
  for (int i = 0; i < 20; ++i) {
    if (!f.is_valid(c_[i])) throw std::invalid_argument("coefficient out of range");
    if (c_[i]) {
      all_zero = false;
      terms_.push_back(Term{t3.mons[i], c_[i]});
    }
  }
  if (all_zero) throw std::invalid_argument("zero cubic form");

  const auto& t2 = mono_table(2);
  for (auto& g : grad_) g.fill(0);
  for (const Term& t : terms_) {
    for (int i = 0; i < 4; ++i) {
      if (!t.e[i]) continue;
      Fe c = f.mul(t.c, f.from_int(t.e[i]));
      if (!c) continue;  // formal derivative killed by the characteristic
      auto e = t.e;
      --e[i];
      int m = t2.index(e[0], e[1], e[2], e[3]);
      grad_[i][m] = f.add(grad_[i][m], c);
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int m = 0; m < 10; ++m)
      if (grad_[i][m]) grad_terms_[i].push_back(Term{t2.mons[m], grad_[i][m]});
}

Fe evaluate(const Surface& s, const Point& p) {
  const Field& f = s.field();
  Fe acc = 0;
  for (const Surface::Term& t : s.terms()) {
    Fe v = t.c;
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < t.e[i]; ++r) v = f.mul(v, p.x[i]);
    acc = f.add(acc, v);
  }
  return acc;
}

std::array<Fe, 4> gradient(const Surface& s, const Point& p) {
  const Field& f = s.field();
  std::array<Fe, 4> g{};
  for (int i = 0; i < 4; ++i) {
    Fe acc = 0;
    for (const Surface::Term& t : s.gradient_terms()[i]) {
      Fe v = t.c;
      for (int j = 0; j < 4; ++j)
        for (int r = 0; r < t.e[j]; ++r) v = f.mul(v, p.x[j]);
      acc = f.add(acc, v);
    }
    g[i] = acc;
  }
  return g;
}

Plane tangent_plane(const Surface& s, const Point& p) {
  if (evaluate(s, p) != 0) throw std::invalid_argument("point not on surface");
  auto g = gradient(s, p);
  if (g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0)
    throw std::invalid_argument("surface is singular at the point");
  return make_plane(s.field(), g);
}

BinaryCubic restrict_to_points(const Surface& s, const std::array<Fe, 4>& a,
                               const std::array<Fe, 4>& b) {
  const Field& f = s.field();
  BinaryCubic out;
  for (const Surface::Term& t : s.terms()) {
    int vars[3];
    vars_of_term(t.e, vars);
    Fe p1s = a[vars[0]], p1t = b[vars[0]];
    Fe q2 = f.mul(p1s, a[vars[1]]);
    Fe q1 = f.add(f.mul(p1s, b[vars[1]]), f.mul(p1t, a[vars[1]]));
    Fe q0 = f.mul(p1t, b[vars[1]]);
    Fe ls = a[vars[2]], lt = b[vars[2]];
    out.c[3] = f.add(out.c[3], f.mul(t.c, f.mul(q2, ls)));
    out.c[2] = f.add(out.c[2], f.mul(t.c, f.add(f.mul(q2, lt), f.mul(q1, ls))));
    out.c[1] = f.add(out.c[1], f.mul(t.c, f.add(f.mul(q1, lt), f.mul(q0, ls))));
    out.c[0] = f.add(out.c[0], f.mul(t.c, f.mul(q0, lt)));
  }
  return out;
}

BinaryCubic restrict_to_line(const Surface& s, const Line& l) {
  return restrict_to_points(s, {l.b[0], l.b[1], l.b[2], l.b[3]},
                            {l.b[4], l.b[5], l.b[6], l.b[7]});
}

bool line_on_surface(const Surface& s, const Line& l) {
  return restrict_to_line(s, l).is_zero();
}

TernaryCubic restrict_to_plane(const Surface& s, const Point& o, const Point& u,
                               const Point& v) {
  const Field& f = s.field();
  TernaryCubic out;
  for (const Surface::Term& t : s.terms()) {
    int vars[3];
    vars_of_term(t.e, vars);
    Fe lin1[3] = {o.x[vars[0]], u.x[vars[0]], v.x[vars[0]]};
    Fe lin2[3] = {o.x[vars[1]], u.x[vars[1]], v.x[vars[1]]};
    Fe lin3[3] = {o.x[vars[2]], u.x[vars[2]], v.x[vars[2]]};
    Fe quad[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      if (!lin1[i]) continue;
      for (int j = 0; j < 3; ++j) {
        if (!lin2[j]) continue;
        int m = kTernQuad[i][j];
        quad[m] = f.add(quad[m], f.mul(lin1[i], lin2[j]));
      }
    }
    for (int m = 0; m < 6; ++m) {
      if (!quad[m]) continue;
      Fe cq = f.mul(t.c, quad[m]);
      if (!cq) continue;
      for (int j = 0; j < 3; ++j) {
        if (!lin3[j]) continue;
        int target = kTernCubic[m][j];
        out.c[target] = f.add(out.c[target], f.mul(cq, lin3[j]));
      }
    }
  }
  return out;
}

// ---- binary form utilities ----

Fe eval_binary_cubic(const Field& f, const BinaryCubic& c, Fe s, Fe t) {
  Fe t2 = f.mul(t, t);
  Fe s2 = f.mul(s, s);
  Fe acc = f.mul(c.c[0], f.mul(t2, t));
  acc = f.add(acc, f.mul(c.c[1], f.mul(s, t2)));
  acc = f.add(acc, f.mul(c.c[2], f.mul(s2, t)));
  return f.add(acc, f.mul(c.c[3], f.mul(s2, s)));
}

Fe eval_binary_quad(const Field& f, const BinaryQuad& c, Fe s, Fe t) {
  Fe acc = f.mul(c.c[2], f.mul(s, s));
  acc = f.add(acc, f.mul(c.c[1], f.mul(s, t)));
  return f.add(acc, f.mul(c.c[0], f.mul(t, t)));
}

std::optional<BinaryQuad> divide_root(const Field& f, const BinaryCubic& c, Fe s0,
                                      Fe t0) {
  if (t0 == 0) {
    if (c.c[3] != 0) return std::nullopt;
    return BinaryQuad{{c.c[0], c.c[1], c.c[2]}};
  }
  Fe z0 = f.mul(s0, f.inv(t0));
  Fe b2 = c.c[3];
  Fe b1 = f.add(c.c[2], f.mul(z0, b2));
  Fe b0 = f.add(c.c[1], f.mul(z0, b1));
  Fe rem = f.add(c.c[0], f.mul(z0, b0));
  if (rem != 0) return std::nullopt;
  return BinaryQuad{{b0, b1, b2}};
}

std::optional<std::array<Fe, 2>> divide_root(const Field& f, const BinaryQuad& c,
                                             Fe s0, Fe t0) {
  if (t0 == 0) {
    if (c.c[2] != 0) return std::nullopt;
    return std::array<Fe, 2>{c.c[1], c.c[0]};  // coefficient of s, of t
  }
  Fe z0 = f.mul(s0, f.inv(t0));
  Fe b1 = c.c[2];
  Fe b0 = f.add(c.c[1], f.mul(z0, b1));
  Fe rem = f.add(c.c[0], f.mul(z0, b0));
  if (rem != 0) return std::nullopt;
  return std::array<Fe, 2>{b1, b0};
}

std::vector<std::array<Fe, 2>> quad_roots_ext(const Field& f, const BinaryQuad& c,
                                              unsigned m) {
  const Field& ext = m == 1 ? f : Field::get(f.p(), f.k() * m);
  BinaryQuad ce = c;
  if (m != 1)
    for (auto& v : ce.c) v = Field::embed(f, ext, v);
  std::vector<std::array<Fe, 2>> roots;
  for (std::uint64_t t = 0; t < ext.q(); ++t)
    if (eval_binary_quad(ext, ce, 1, Fe(t)) == 0) roots.push_back({1, Fe(t)});
  if (ce.c[2] == 0) roots.push_back({0, 1});
  return roots;
}

// ---- intersection divisors ----

Point third_intersection(const Surface& s, const Line& l, const Point& p,
                         const Point& q) {
  const Field& f = s.field();
  if (evaluate(s, p) != 0 || evaluate(s, q) != 0)
    throw std::invalid_argument("intersection points must lie on the surface");
  BinaryCubic c = restrict_to_line(s, l);
  if (c.is_zero()) throw std::invalid_argument("line lies on the surface");
  auto [sp, tp] = line_coords(f, l, p);
  auto [sq, tq] = line_coords(f, l, q);
  auto quad = divide_root(f, c, sp, tp);
  if (!quad) throw std::invalid_argument("multiplicity shortfall in divisor");
  auto lin = divide_root(f, *quad, sq, tq);
  if (!lin) throw std::invalid_argument("multiplicity shortfall in divisor");
  Fe a = (*lin)[0], b = (*lin)[1];  // residual factor a s + b t
  return point_on_line_at(f, l, b, f.neg(a));
}

// ---- local classification ----

PointKind point_kind(const Surface& s, const Point& p, std::array<Fe, 3>* quad_out) {
  const Field& f = s.field();
  Plane pi = tangent_plane(s, p);  // validates P on S and smoothness at P
  auto frame = plane_frame(f, pi, p);
  TernaryCubic g = restrict_to_plane(s, p, frame[0], frame[1]);
  if (g.c[0] != 0 || g.c[1] != 0 || g.c[2] != 0)
    throw std::logic_error("tangent restriction has nonzero low-order part");
  std::array<Fe, 3> quad{g.c[3], g.c[4], g.c[5]};  // u^2, uv, v^2
  if (quad_out) *quad_out = quad;
  if (quad[0] == 0 && quad[1] == 0 && quad[2] == 0) return PointKind::Eckardt;
  bool repeated;
  if (f.p() == 2) {
    repeated = quad[1] == 0;
  } else {
    Fe disc = f.sub(f.mul(quad[1], quad[1]),
                    f.mul(f.from_int(4), f.mul(quad[0], quad[2])));
    repeated = disc == 0;
  }
  return repeated ? PointKind::ParabolicCusp : PointKind::Node;
}

PointClass classify_point(const Surface& s, const Point& p) {
  const Field& f = s.field();
  Plane pi = tangent_plane(s, p);
  auto frame = plane_frame(f, pi, p);
  PointClass out;
  out.kind = point_kind(s, p, &out.quad);
  if (out.kind == PointKind::Eckardt) return out;
  auto dir_at = [&](Fe a, Fe b) {
    std::array<Fe, 4> w{};
    for (int i = 0; i < 4; ++i)
      w[i] = f.add(f.mul(a, frame[0].x[i]), f.mul(b, frame[1].x[i]));
    return make_point(f, w);
  };
  auto val = [&](Fe a, Fe b) {
    Fe acc = f.mul(out.quad[0], f.mul(a, a));
    acc = f.add(acc, f.mul(out.quad[1], f.mul(a, b)));
    return f.add(acc, f.mul(out.quad[2], f.mul(b, b)));
  };
  for (std::uint64_t b = 0; b < f.q(); ++b)
    if (val(1, Fe(b)) == 0) out.asymptotic_dirs.push_back(dir_at(1, Fe(b)));
  if (out.quad[2] == 0) out.asymptotic_dirs.push_back(dir_at(0, 1));
  return out;
}

// ---- Gauss map on a line of the surface ----

namespace {

BinaryQuad restrict_quadratic(const Field& f, const std::vector<Surface::Term>& terms,
                              const std::array<Fe, 4>& a, const std::array<Fe, 4>& b) {
  BinaryQuad out;
  for (const Surface::Term& t : terms) {
    int vars[2] = {0, 0};
    int n = 0;
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < t.e[i]; ++r) vars[n++] = i;
    Fe s2 = f.mul(a[vars[0]], a[vars[1]]);
    Fe s1 = f.add(f.mul(a[vars[0]], b[vars[1]]), f.mul(b[vars[0]], a[vars[1]]));
    Fe s0 = f.mul(b[vars[0]], b[vars[1]]);
    out.c[2] = f.add(out.c[2], f.mul(t.c, s2));
    out.c[1] = f.add(out.c[1], f.mul(t.c, s1));
    out.c[0] = f.add(out.c[0], f.mul(t.c, s0));
  }
  return out;
}

BinaryQuad mul_linear_forms(const Field& f, Fe a1, Fe a0, Fe b1, Fe b0) {
  // (a1 s + a0 t)(b1 s + b0 t)
  return BinaryQuad{{f.mul(a0, b0), f.add(f.mul(a1, b0), f.mul(a0, b1)),
                     f.mul(a1, b1)}};
}

}  // namespace

GaussOnLine gauss_on_line(const Surface& s, const Line& l) {
  const Field& f = s.field();
  if (!line_on_surface(s, l))
    throw std::invalid_argument("line does not lie on the surface");
  GaussOnLine out;
  out.pencil = pencil_basis(f, l);
  const auto& n0 = out.pencil[0].n;
  const auto& n1 = out.pencil[1].n;
  std::array<Fe, 4> a{l.b[0], l.b[1], l.b[2], l.b[3]};
  std::array<Fe, 4> b{l.b[4], l.b[5], l.b[6], l.b[7]};
  std::array<BinaryQuad, 4> g;
  for (int j = 0; j < 4; ++j)
    g[j] = restrict_quadratic(f, s.gradient_terms()[j], a, b);
  // solve grad = u*n0 + v*n1 coefficientwise from two independent coordinates
  int j0 = -1, j1 = -1;
  Fe det = 0;
  for (int x = 0; x < 4 && j0 < 0; ++x)
    for (int y = x + 1; y < 4; ++y) {
      det = f.sub(f.mul(n0[x], n1[y]), f.mul(n0[y], n1[x]));
      if (det != 0) {
        j0 = x;
        j1 = y;
        break;
      }
    }
  if (j0 < 0) throw std::logic_error("degenerate pencil basis");
  Fe dinv = f.inv(det);
  for (int i = 0; i < 3; ++i) {
    Fe g0 = g[j0].c[i], g1 = g[j1].c[i];
    out.u.c[i] = f.mul(dinv, f.sub(f.mul(n1[j1], g0), f.mul(n1[j0], g1)));
    out.v.c[i] = f.mul(dinv, f.sub(f.mul(n0[j0], g1), f.mul(n0[j1], g0)));
  }
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 3; ++i) {
      Fe want = f.add(f.mul(out.u.c[i], n0[j]), f.mul(out.v.c[i], n1[j]));
      if (want != g[j].c[i])
        throw std::logic_error("gradient leaves the pencil of the line");
    }

  if (f.p() == 2) {
    out.separable = out.u.c[1] != 0 || out.v.c[1] != 0;
    // h = v1*u + u1*v: the unique degenerate member of the pencil; its double
    // root is the ramification point. Identically zero iff inseparable.
    for (int i = 0; i < 3; ++i)
      out.parabolic_locus.c[i] =
          f.add(f.mul(out.v.c[1], out.u.c[i]), f.mul(out.u.c[1], out.v.c[i]));
  } else {
    // Jacobian du/ds dv/dt - du/dt dv/ds
    Fe two = f.from_int(2);
    Fe us1 = f.mul(two, out.u.c[2]), us0 = out.u.c[1];
    Fe ut1 = out.u.c[1], ut0 = f.mul(two, out.u.c[0]);
    Fe vs1 = f.mul(two, out.v.c[2]), vs0 = out.v.c[1];
    Fe vt1 = out.v.c[1], vt0 = f.mul(two, out.v.c[0]);
    BinaryQuad left = mul_linear_forms(f, us1, us0, vt1, vt0);
    BinaryQuad right = mul_linear_forms(f, ut1, ut0, vs1, vs0);
    for (int i = 0; i < 3; ++i)
      out.parabolic_locus.c[i] = f.sub(left.c[i], right.c[i]);
    out.separable = true;
    if (out.parabolic_locus.is_zero())
      throw std::logic_error("Gauss map degenerate in odd characteristic");
  }
  return out;
}

// ---- global point/line enumeration on the surface ----

std::vector<Point> surface_points(const Surface& s) {
  std::vector<Point> pts;
  for (const Point& p : points_of_space(s.field()))
    if (evaluate(s, p) == 0) pts.push_back(p);
  return pts;
}

std::vector<Line> lines_on_surface_through(const Surface& s, const Point& p) {
  const Field& f = s.field();
  std::vector<Line> out;
  auto g = gradient(s, p);
  if (g[0] || g[1] || g[2] || g[3]) {
    Plane pi = make_plane(f, g);
    auto frame = plane_frame(f, pi, p);
    auto probe = [&](Fe a, Fe b) {
      std::array<Fe, 4> d{};
      for (int i = 0; i < 4; ++i)
        d[i] = f.add(f.mul(a, frame[0].x[i]), f.mul(b, frame[1].x[i]));
      if (restrict_to_points(s, p.x, d).is_zero())
        out.push_back(line_from_span(f, p.x, d));
    };
    for (std::uint64_t b = 0; b < f.q(); ++b) probe(1, Fe(b));
    probe(0, 1);
    return out;
  }
  // singular point: any direction is possible; scan all lines through p
  std::set<Line> uniq;
  for (const Point& r : points_of_space(f)) {
    if (r == p) continue;
    Line l = line_through(f, p, r);
    if (!uniq.insert(l).second) continue;
    if (line_on_surface(s, l)) out.push_back(l);
  }
  return out;
}

std::vector<Line> k_lines_on_surface(const Surface& s) {
  const Field& f = s.field();
  if (f.q() <= 13) {
    std::vector<Line> out;
    for (const Line& l : lines_of_space(f)) {
      if (evaluate(s, l.point_a()) != 0 || evaluate(s, l.point_b()) != 0) continue;
      if (line_on_surface(s, l)) out.push_back(l);
    }
    return out;
  }
  std::set<Line> uniq;
  for (const Point& p : surface_points(s))
    for (const Line& l : lines_on_surface_through(s, p)) uniq.insert(l);
  return std::vector<Line>(uniq.begin(), uniq.end());
}

// ---- smoothness ----

namespace {

// Degree-8 graded piece of (F, dF0, .., dF3): 56 multiples of F by degree-5
// monomials plus 4 x 84 multiples of the partials by degree-6 monomials,
// expressed in the 165 degree-8 monomials. Full column rank iff the Jacobian
// scheme is empty, i.e. S is smooth over the closure. F itself must be among
// the generators: in characteristic 3 the Euler relation degenerates.
bool smooth_by_rank(const Surface& s) {
  const Field& f = s.field();
  const auto& t5 = mono_table(5);
  const auto& t6 = mono_table(6);
  const auto& t8 = mono_table(8);
  const std::size_t ncols = t8.mons.size();                       // 165
  const std::size_t nrows = t5.mons.size() + 4 * t6.mons.size();  // 392

  auto col_of = [&](const std::array<std::uint8_t, 4>& m,
                    const std::array<std::uint8_t, 4>& e) {
    return t8.index(m[0] + e[0], m[1] + e[1], m[2] + e[2], m[3] + e[3]);
  };

  if (f.q() == 2) {
    const std::size_t words = (ncols + 63) / 64;
    std::vector<std::uint64_t> rows(nrows * words, 0);
    std::size_t r = 0;
    for (const auto& m : t5.mons) {
      for (const auto& t : s.terms()) {
        int c = col_of(m, t.e);
        rows[r * words + (c >> 6)] |= std::uint64_t(1) << (c & 63);
      }
      ++r;
    }
    for (int i = 0; i < 4; ++i)
      for (const auto& m : t6.mons) {
        for (const auto& t : s.gradient_terms()[i]) {
          int c = col_of(m, t.e);
          rows[r * words + (c >> 6)] |= std::uint64_t(1) << (c & 63);
        }
        ++r;
      }
    return rank_gf2(rows, nrows, words) == ncols;
  }

  if (f.q() == 3) {
    std::vector<std::uint8_t> a(nrows * ncols, 0);
    std::size_t r = 0;
    for (const auto& m : t5.mons) {
      for (const auto& t : s.terms())
        a[r * ncols + col_of(m, t.e)] = std::uint8_t(t.c);
      ++r;
    }
    for (int i = 0; i < 4; ++i)
      for (const auto& m : t6.mons) {
        for (const auto& t : s.gradient_terms()[i])
          a[r * ncols + col_of(m, t.e)] = std::uint8_t(t.c);
        ++r;
      }
    return rank_gf3(a, nrows, ncols) == ncols;
  }

  Mat mat(nrows, ncols);
  std::size_t r = 0;
  for (const auto& m : t5.mons) {
    for (const auto& t : s.terms()) mat.at(r, col_of(m, t.e)) = t.c;
    ++r;
  }
  for (int i = 0; i < 4; ++i)
    for (const auto& m : t6.mons) {
      for (const auto& t : s.gradient_terms()[i]) mat.at(r, col_of(m, t.e)) = t.c;
      ++r;
    }
  return rank(f, std::move(mat)) == ncols;
}

// enumerate normalized points of P^3 without materializing them
template <typename Fn>
bool any_space_point(const Field& f, Fn&& fn) {
  const std::uint64_t q = f.q();
  std::array<Fe, 4> x{};
  for (int piv = 0; piv < 4; ++piv) {
    x.fill(0);
    x[piv] = 1;
    std::uint64_t count = 1;
    for (int j = piv + 1; j < 4; ++j) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (int j = 3; j > piv; --j) {
        x[j] = Fe(c % q);
        c /= q;
      }
      if (fn(x)) return true;
    }
  }
  return false;
}

bool singular_scan(const Surface& s) {
  const Field& f = s.field();
  const auto& gt = s.gradient_terms();
  return any_space_point(f, [&](const std::array<Fe, 4>& x) {
    for (int i = 0; i < 4; ++i) {
      Fe acc = 0;
      for (const Surface::Term& t : gt[i]) {
        Fe v = t.c;
        for (int j = 0; j < 4; ++j)
          for (int r = 0; r < t.e[j]; ++r) v = f.mul(v, x[j]);
        acc = f.add(acc, v);
      }
      if (acc != 0) return false;
    }
    Fe fv = 0;
    for (const Surface::Term& t : s.terms()) {
      Fe v = t.c;
      for (int j = 0; j < 4; ++j)
        for (int r = 0; r < t.e[j]; ++r) v = f.mul(v, x[j]);
      fv = f.add(fv, v);
    }
    return fv == 0;
  });
}

}  // namespace

bool Surface::is_smooth() const {
  signed char v = smooth_.load(std::memory_order_relaxed);
  if (v >= 0) return v != 0;
  bool sm = smooth_by_rank(*this);
  smooth_.store(sm ? 1 : 0, std::memory_order_relaxed);
  return sm;
}

bool has_rational_singular_point(const Surface& s) { return singular_scan(s); }

bool has_singular_point_up_to(const Surface& s, unsigned max_m,
                              std::uint64_t max_ext_q) {
  const Field& f = s.field();
  if (singular_scan(s)) return true;
  for (unsigned m = 2; m <= max_m; ++m) {
    if (f.k() * m > 16) break;
    std::uint64_t qm = 1;
    bool too_big = false;
    for (unsigned i = 0; i < m; ++i) {
      qm *= f.q();
      if (qm > max_ext_q) {
        too_big = true;
        break;
      }
    }
    if (too_big) break;
    const Field& ext = Field::get(f.p(), f.k() * m);
    if (singular_scan(embed_surface(s, ext))) return true;
  }
  return false;
}

bool strict_is_smooth(const Surface& s, unsigned max_m) {
  return s.is_smooth() && !has_singular_point_up_to(s, max_m);
}

Surface embed_surface(const Surface& s, const Field& ext) {
  const auto& img = Field::embedding(s.field(), ext);
  std::array<Fe, 20> c;
  for (int i = 0; i < 20; ++i) c[i] = img[s.coeffs()[i]];
  return Surface(ext, c);
}

// ---- wire format ----

std::string Surface::to_string() const {
  std::string out =
      "q=" + std::to_string(f_->p()) + "^" + std::to_string(f_->k()) + "; F=";
  for (int i = 0; i < 20; ++i) {
    if (i) out += ',';
    out += std::to_string(c_[i]);
  }
  return out;
}

Surface Surface::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind("q=", 0) != 0)
    throw std::invalid_argument("surface string must start with q=");
  std::size_t semi = t.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("missing ';' in surface string");
  auto to_uint = [](const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad integer in surface string");
    return std::stoull(v);
  };
  std::string qpart = t.substr(2, semi - 2);
  unsigned p = 0, k = 1;
  std::size_t caret = qpart.find('^');
  if (caret == std::string::npos) {
    p = unsigned(to_uint(qpart));
  } else {
    p = unsigned(to_uint(qpart.substr(0, caret)));
    k = unsigned(to_uint(qpart.substr(caret + 1)));
  }
  const Field& f = Field::get(p, k);
  if (t.compare(semi + 1, 2, "F=") != 0)
    throw std::invalid_argument("missing F= in surface string");
  std::array<Fe, 20> c{};
  std::size_t pos = semi + 3;
  for (int i = 0; i < 20; ++i) {
    std::size_t next = i < 19 ? t.find(',', pos) : t.size();
    if (next == std::string::npos)
      throw std::invalid_argument("surface string needs 20 coefficients");
    std::uint64_t v = to_uint(t.substr(pos, next - pos));
    if (v >= f.q()) throw std::invalid_argument("coefficient code out of range");
    c[i] = Fe(v);
    pos = next + 1;
  }
  return Surface(f, c);
}

int cubic_monomial_index(unsigned e0, unsigned e1, unsigned e2, unsigned e3) {
  return mono_table(3).index(e0, e1, e2, e3);
}

}  // namespace cubicspan
