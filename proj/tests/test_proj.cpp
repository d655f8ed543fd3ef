#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cubicspan/proj.hpp"

using namespace cubicspan;

namespace {

// Independent oracle: collect distinct lines as closures of all point pairs.
std::set<Line> lines_by_pair_closure(const Field& f) {
  auto pts = points_of_space(f);
  std::set<Line> ls;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      ls.insert(line_through(f, pts[i], pts[j]));
  return ls;
}

}  // namespace

TEST_CASE("point normalization is canonical") {
  const Field& f = Field::get(7, 1);
  Point p = make_point(f, {3, 5, 0, 1});
  CHECK(p.x[0] == 1);  // scaled by inv(3) = 5
  CHECK(p.x[1] == f.mul(5, 5));
  CHECK(make_point(f, {6, 3, 0, 2}) == make_point(f, {3, 5, 0, 1}));
  CHECK_THROWS_AS(make_point(f, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_point(f, {9, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("point counts and dense index") {
  for (unsigned q : {2u, 3u, 11u}) {
    const Field& f = Field::get(q, 1);
    auto pts = points_of_space(f);
    std::size_t expect = std::size_t(q) * q * q + q * q + q + 1;
    CHECK(pts.size() == expect);
    CHECK(space_size(f) == expect);
    std::set<Point> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      CHECK(space_index(f, pts[i]) == i);
  }
  CHECK(points_of_space(Field::get(11, 1)).size() == 1464);
}

TEST_CASE("line_through basics") {
  const Field& f = Field::get(3, 1);
  Point e0 = make_point(f, {1, 0, 0, 0});
  Point e1 = make_point(f, {0, 1, 0, 0});
  Line l = line_through(f, e0, e1);
  // the line {X2 = X3 = 0}
  for (const Point& p : points_on_line(f, l)) {
    CHECK(p.x[2] == 0);
    CHECK(p.x[3] == 0);
  }
  CHECK(points_on_line(f, l).size() == 4);
  CHECK(line_through(f, e0, e1) == line_through(f, e1, e0));
  CHECK_THROWS_AS(line_through(f, e0, e0), std::invalid_argument);

  // any two points of the line reproduce it
  auto pts = points_on_line(f, l);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      CHECK(line_through(f, pts[i], pts[j]) == l);
}

TEST_CASE("lines_of_space matches the pair-closure oracle") {
  for (unsigned q : {2u, 3u}) {
    const Field& f = Field::get(q, 1);
    auto oracle = lines_by_pair_closure(f);
    auto ls = lines_of_space(f);
    CHECK(ls.size() == oracle.size());
    CHECK(ls.size() == std::size_t(q * q + 1) * (q * q + q + 1));
    std::set<Line> got(ls.begin(), ls.end());
    CHECK(got == oracle);
  }
  CHECK(lines_of_space(Field::get(2, 1)).size() == 35);
  CHECK(lines_of_space(Field::get(3, 1)).size() == 130);
}

TEST_CASE("incidence counts: each point lies on q^2+q+1 lines") {
  for (unsigned q : {2u, 3u}) {
    const Field& f = Field::get(q, 1);
    auto ls = lines_of_space(f);
    std::map<Point, int> cnt;
    for (const Line& l : ls)
      for (const Point& p : points_on_line(f, l)) cnt[p] += 1;
    for (auto& [p, c] : cnt) CHECK(c == int(q * q + q + 1));
    CHECK(cnt.size() == space_size(f));
  }
}

TEST_CASE("are_skew agrees with point-set disjointness") {
  for (unsigned q : {2u, 3u, 5u}) {
    const Field& f = Field::get(q, 1);
    auto ls = lines_of_space(f);
    SampleStream rng{q};
    for (int it = 0; it < 4000; ++it) {
      const Line& a = ls[rng.below(ls.size())];
      const Line& b = ls[rng.below(ls.size())];
      auto pa = points_on_line(f, a);
      auto pb = points_on_line(f, b);
      bool disjoint = true;
      for (const Point& p : pa)
        for (const Point& r : pb)
          if (p == r) disjoint = false;
      CHECK(are_skew(f, a, b) == disjoint);
    }
    Line h1 = line_through(f, make_point(f, {0, 0, 1, 0}), make_point(f, {0, 0, 0, 1}));
    Line h2 = line_through(f, make_point(f, {1, 0, 0, 0}), make_point(f, {0, 1, 0, 0}));
    CHECK(are_skew(f, h1, h2));  // {X=Y=0} vs {Z=W=0}
    CHECK_FALSE(are_skew(f, h1, h1));
  }
}

TEST_CASE("pencil of planes") {
  const Field& f = Field::get(3, 1);
  Line l = line_through(f, make_point(f, {0, 0, 1, 0}), make_point(f, {0, 0, 0, 1}));
  auto ps = pencil_of_planes(f, l);
  CHECK(ps.size() == 4);  // aX + bY = 0 over P^1(F_3)
  std::set<Plane> uniq(ps.begin(), ps.end());
  CHECK(uniq.size() == 4);
  for (const Plane& pl : ps) {
    CHECK(pl.n[2] == 0);
    CHECK(pl.n[3] == 0);
    for (const Point& p : points_on_line(f, l)) CHECK(plane_contains(f, pl, p));
  }
  // two distinct members meet exactly in the line
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      int common = 0;
      for (const Point& p : points_of_space(f))
        if (plane_contains(f, ps[i], p) && plane_contains(f, ps[j], p)) ++common;
      CHECK(common == 4);  // |l(F_3)|
    }
}

TEST_CASE("meet_plane_line") {
  const Field& f = Field::get(5, 1);
  Plane x0 = make_plane(f, {1, 0, 0, 0});
  Line zw0 = line_through(f, make_point(f, {1, 0, 0, 0}), make_point(f, {0, 1, 0, 0}));
  auto m = meet_plane_line(f, x0, zw0);
  REQUIRE(m.has_value());
  CHECK(*m == make_point(f, {0, 1, 0, 0}));
  CHECK(plane_contains(f, x0, *m));
  CHECK(line_contains(f, zw0, *m));

  Line xy0 = line_through(f, make_point(f, {0, 0, 1, 0}), make_point(f, {0, 0, 0, 1}));
  CHECK_FALSE(meet_plane_line(f, x0, xy0).has_value());  // contained
}

TEST_CASE("plane_through line and point") {
  const Field& f = Field::get(3, 1);
  Line zw0 = line_through(f, make_point(f, {1, 0, 0, 0}), make_point(f, {0, 1, 0, 0}));
  Point p = make_point(f, {0, 0, 1, 0});
  Plane pl = plane_through(f, zw0, p);
  CHECK(pl == make_plane(f, {0, 0, 0, 1}));  // {W = 0}
  CHECK(plane_contains(f, pl, p));
  for (const Point& r : points_on_line(f, zw0)) CHECK(plane_contains(f, pl, r));
  CHECK_THROWS_AS(plane_through(f, zw0, make_point(f, {1, 1, 0, 0})),
                  std::invalid_argument);
  // uniqueness: any off-line point of the output plane reproduces it
  for (const Point& r : points_on_plane(f, pl))
    if (!line_contains(f, zw0, r)) CHECK(plane_through(f, zw0, r) == pl);
}

TEST_CASE("points_on_plane enumerates q^2+q+1 distinct points") {
  for (unsigned q : {2u, 3u, 4u}) {
    const Field& f = q == 4 ? Field::get(2, 2) : Field::get(q, 1);
    Plane pl = make_plane(f, {1, Fe(2 % f.q()), 0, 1});
    auto pts = points_on_plane(f, pl);
    CHECK(pts.size() == std::size_t(f.q() * f.q() + f.q() + 1));
    std::set<Point> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == pts.size());
    for (const Point& p : pts) CHECK(plane_contains(f, pl, p));
  }
}

TEST_CASE("plane_frame spans the plane with the point") {
  const Field& f = Field::get(7, 1);
  Plane pl = make_plane(f, {1, 1, 0, 0});
  Point p = make_point(f, {1, 6, 0, 0});
  auto [u, v] = plane_frame(f, pl, p);
  CHECK(plane_contains(f, pl, u));
  CHECK(plane_contains(f, pl, v));
  // {p, u, v} independent: they generate q^2+q+1 distinct points
  std::set<Point> span;
  for (Fe a = 0; a < 7; ++a)
    for (Fe b = 0; b < 7; ++b) {
      std::array<Fe, 4> w{};
      for (int i = 0; i < 4; ++i)
        w[i] = f.add(p.x[i], f.add(f.mul(a, u.x[i]), f.mul(b, v.x[i])));
      span.insert(make_point(f, w));
    }
  for (Fe a = 0; a < 7; ++a)
    for (Fe b = 0; b < 7; ++b) {
      std::array<Fe, 4> w{};
      for (int i = 0; i < 4; ++i)
        w[i] = f.add(f.mul(a, u.x[i]), f.mul(b, v.x[i]));
      if (a || b) span.insert(make_point(f, w));
    }
  CHECK(span.size() == 57);  // all of P^2(F_7)
}

TEST_CASE("wire formats round-trip") {
  const Field& f = Field::get(7, 1);
  Point p = make_point(f, {1, 6, 0, 3});
  CHECK(format_point(p) == "1:6:0:3");
  CHECK(parse_point(f, "1:6:0:3") == p);
  CHECK(parse_point(f, "2:5:0:6") == p);  // non-normalized representative
  CHECK_THROWS_AS(parse_point(f, "1:2:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point(f, "1:2:3:9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point(f, "1:x:3:4"), std::invalid_argument);
  CHECK(format_plane(make_plane(f, {1, 1, 0, 0})) == "[1,1,0,0]");
}
