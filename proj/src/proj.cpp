#include "cubicspan/proj.hpp"

#include <stdexcept>

#include "cubicspan/linalg.hpp"

namespace cubicspan {

namespace {

Fe dot4(const Field& f, const std::array<Fe, 4>& a, const std::array<Fe, 4>& b) {
  Fe s = 0;
  for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::array<Fe, 4> normalize4(const Field& f, std::array<Fe, 4> v) {
  for (int i = 0; i < 4; ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) {
      Fe s = f.inv(v[i]);
      for (int j = i; j < 4; ++j) v[j] = f.mul(v[j], s);
    }
    return v;
  }
  throw std::invalid_argument("zero coordinate vector");
}

std::array<Fe, 4> combine(const Field& f, Fe s, const std::array<Fe, 4>& a, Fe t,
                          const std::array<Fe, 4>& b) {
  std::array<Fe, 4> r;
  for (int i = 0; i < 4; ++i) r[i] = f.add(f.mul(s, a[i]), f.mul(t, b[i]));
  return r;
}

}  // namespace

Point make_point(const Field& f, std::array<Fe, 4> raw) {
  for (Fe c : raw)
    if (!f.is_valid(c)) throw std::invalid_argument("coordinate out of range");
  return Point{normalize4(f, raw)};
}

Plane make_plane(const Field& f, std::array<Fe, 4> raw) {
  for (Fe c : raw)
    if (!f.is_valid(c)) throw std::invalid_argument("covector entry out of range");
  return Plane{normalize4(f, raw)};
}

Line line_from_span(const Field& f, std::array<Fe, 4> r0, std::array<Fe, 4> r1) {
  Mat m(2, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = r0[j];
    m.at(1, j) = r1[j];
  }
  auto piv = rref_in_place(f, m);
  if (piv.size() != 2) throw std::invalid_argument("rows do not span a line");
  Line l;
  for (int j = 0; j < 4; ++j) {
    l.b[j] = m.at(0, j);
    l.b[4 + j] = m.at(1, j);
  }
  l.piv = {piv[0], piv[1]};
  return l;
}

Line line_through(const Field& f, const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line_through requires distinct points");
  return line_from_span(f, p.x, q.x);
}

std::vector<Point> points_of_space(const Field& f) {
  const std::uint64_t q = f.q();
  std::vector<Point> pts;
  pts.reserve(std::size_t(q * q * q + q * q + q + 1));
  for (int piv = 0; piv < 4; ++piv) {
    std::array<Fe, 4> x{0, 0, 0, 0};
    x[piv] = 1;
    std::size_t freedom = 3 - piv;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < freedom; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (int j = 3; j > piv; --j) {
        x[j] = Fe(c % q);
        c /= q;
      }
      pts.push_back(Point{x});
    }
  }
  return pts;
}

std::size_t space_size(const Field& f) {
  const std::uint64_t q = f.q();
  return std::size_t(q * q * q + q * q + q + 1);
}

std::size_t space_index(const Field& f, const Point& p) {
  const std::uint64_t q = f.q();
  int piv = 0;
  while (p.x[piv] == 0) ++piv;
  std::uint64_t offset = 0, block = q * q * q;
  for (int i = 0; i < piv; ++i) {
    offset += block;
    block /= q;
  }
  std::uint64_t code = 0;
  for (int j = piv + 1; j < 4; ++j) code = code * q + p.x[j];
  return std::size_t(offset + code);
}

std::vector<Line> lines_of_space(const Field& f) {
  const std::uint64_t q = f.q();
  std::vector<Line> ls;
  for (int c1 = 0; c1 < 4; ++c1) {
    for (int c2 = c1 + 1; c2 < 4; ++c2) {
      std::vector<int> free0, free1;
      for (int j = c1 + 1; j < 4; ++j)
        if (j != c2) free0.push_back(j);
      for (int j = c2 + 1; j < 4; ++j) free1.push_back(j);
      std::uint64_t n0 = 1, n1 = 1;
      for (std::size_t i = 0; i < free0.size(); ++i) n0 *= q;
      for (std::size_t i = 0; i < free1.size(); ++i) n1 *= q;
      for (std::uint64_t a = 0; a < n0; ++a) {
        for (std::uint64_t b = 0; b < n1; ++b) {
          Line l;
          l.piv = {c1, c2};
          l.b.fill(0);
          l.b[c1] = 1;
          l.b[4 + c2] = 1;
          std::uint64_t av = a;
          for (int j : free0) {
            l.b[j] = Fe(av % q);
            av /= q;
          }
          std::uint64_t bv = b;
          for (int j : free1) {
            l.b[4 + j] = Fe(bv % q);
            bv /= q;
          }
          ls.push_back(l);
        }
      }
    }
  }
  return ls;
}

Point point_on_line_at(const Field& f, const Line& l, Fe s, Fe t) {
  std::array<Fe, 4> a{l.b[0], l.b[1], l.b[2], l.b[3]};
  std::array<Fe, 4> b{l.b[4], l.b[5], l.b[6], l.b[7]};
  return Point{normalize4(f, combine(f, s, a, t, b))};
}

std::vector<Point> points_on_line(const Field& f, const Line& l) {
  std::vector<Point> pts;
  pts.reserve(std::size_t(f.q()) + 1);
  for (std::uint64_t t = 0; t < f.q(); ++t)
    pts.push_back(point_on_line_at(f, l, 1, Fe(t)));
  pts.push_back(point_on_line_at(f, l, 0, 1));
  return pts;
}

bool line_contains(const Field& f, const Line& l, const Point& p) {
  // p == s*A + t*B forced by the pivot columns; check the other coordinates
  Fe s = p.x[l.piv[0]], t = p.x[l.piv[1]];
  for (int j = 0; j < 4; ++j) {
    Fe want = f.add(f.mul(s, l.b[j]), f.mul(t, l.b[4 + j]));
    if (want != p.x[j]) return false;
  }
  return true;
}

std::array<Fe, 2> line_coords(const Field& f, const Line& l, const Point& p) {
  if (!line_contains(f, l, p))
    throw std::invalid_argument("point not on line");
  return {p.x[l.piv[0]], p.x[l.piv[1]]};
}

bool are_skew(const Field& f, const Line& l1, const Line& l2) {
  Mat m(4, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = l1.b[j];
    m.at(1, j) = l1.b[4 + j];
    m.at(2, j) = l2.b[j];
    m.at(3, j) = l2.b[4 + j];
  }
  return rank(f, std::move(m)) == 4;
}

std::array<Plane, 2> pencil_basis(const Field& f, const Line& l) {
  Mat m(2, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = l.b[j];
    m.at(1, j) = l.b[4 + j];
  }
  auto ns = null_space(f, std::move(m));
  if (ns.size() != 2) throw std::logic_error("line has degenerate basis");
  return {Plane{{ns[0][0], ns[0][1], ns[0][2], ns[0][3]}},
          Plane{{ns[1][0], ns[1][1], ns[1][2], ns[1][3]}}};
}

std::vector<Plane> pencil_of_planes(const Field& f, const Line& l) {
  auto [p0, p1] = pencil_basis(f, l);
  std::vector<Plane> ps;
  ps.reserve(std::size_t(f.q()) + 1);
  for (std::uint64_t t = 0; t < f.q(); ++t)
    ps.push_back(Plane{normalize4(f, combine(f, 1, p0.n, Fe(t), p1.n))});
  ps.push_back(p1);
  return ps;
}

std::optional<Point> meet_plane_line(const Field& f, const Plane& pl, const Line& l) {
  std::array<Fe, 4> a{l.b[0], l.b[1], l.b[2], l.b[3]};
  std::array<Fe, 4> b{l.b[4], l.b[5], l.b[6], l.b[7]};
  Fe na = dot4(f, pl.n, a), nb = dot4(f, pl.n, b);
  if (na == 0 && nb == 0) return std::nullopt;  // contained
  // X = s*A + t*B with s*na + t*nb = 0
  return Point{normalize4(f, combine(f, nb, a, f.neg(na), b))};
}

Plane plane_through(const Field& f, const Line& l, const Point& p) {
  Mat m(3, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = l.b[j];
    m.at(1, j) = l.b[4 + j];
    m.at(2, j) = p.x[j];
  }
  auto ns = null_space(f, std::move(m));
  if (ns.size() != 1)
    throw std::invalid_argument("point lies on the line; plane not unique");
  return Plane{{ns[0][0], ns[0][1], ns[0][2], ns[0][3]}};
}

bool plane_contains(const Field& f, const Plane& pl, const Point& p) {
  return dot4(f, pl.n, p.x) == 0;
}

std::vector<Point> points_on_plane(const Field& f, const Plane& pl) {
  Mat m(1, 4);
  for (int j = 0; j < 4; ++j) m.at(0, j) = pl.n[j];
  auto ns = null_space(f, std::move(m));
  // P^2 worth of combinations of the three basis vectors
  const std::uint64_t q = f.q();
  std::vector<Point> pts;
  pts.reserve(std::size_t(q * q + q + 1));
  auto emit = [&](Fe a, Fe b, Fe c) {
    std::array<Fe, 4> v{};
    for (int j = 0; j < 4; ++j)
      v[j] = f.add(f.mul(a, ns[0][j]),
                   f.add(f.mul(b, ns[1][j]), f.mul(c, ns[2][j])));
    pts.push_back(Point{normalize4(f, v)});
  };
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c) emit(1, Fe(b), Fe(c));
  for (std::uint64_t c = 0; c < q; ++c) emit(0, 1, Fe(c));
  emit(0, 0, 1);
  return pts;
}

std::array<Point, 2> plane_frame(const Field& f, const Plane& pl, const Point& p) {
  if (!plane_contains(f, pl, p))
    throw std::invalid_argument("point not on plane");
  Mat m(1, 4);
  for (int j = 0; j < 4; ++j) m.at(0, j) = pl.n[j];
  auto ns = null_space(f, std::move(m));
  std::array<Point, 2> frame{};
  int found = 0;
  Mat probe(3, 4);
  for (int j = 0; j < 4; ++j) probe.at(0, j) = p.x[j];
  for (const auto& w : ns) {
    for (int j = 0; j < 4; ++j) probe.at(found + 1, j) = w[j];
    Mat copy = probe;
    copy.rows = std::size_t(found + 2);
    if (rank(f, std::move(copy)) == std::size_t(found + 2)) {
      frame[found] = Point{normalize4(f, {w[0], w[1], w[2], w[3]})};
      ++found;
      if (found == 2) return frame;
    }
  }
  throw std::logic_error("failed to complete plane frame");
}

std::string format_point(const Point& p) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += ':';
    s += std::to_string(p.x[i]);
  }
  return s;
}

Point parse_point(const Field& f, const std::string& s) {
  std::array<Fe, 4> x{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t next = i < 3 ? s.find(':', pos) : s.size();
    if (next == std::string::npos)
      throw std::invalid_argument("point literal needs four ':'-separated codes");
    std::string tok = s.substr(pos, next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad point coordinate '" + tok + "'");
    std::uint64_t v = std::stoull(tok);
    if (v >= f.q()) throw std::invalid_argument("coordinate code out of range");
    x[i] = Fe(v);
    pos = next + 1;
  }
  return make_point(f, x);
}

std::string format_plane(const Plane& pl) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += std::to_string(pl.n[i]);
  }
  return s + "]";
}

}  // namespace cubicspan
