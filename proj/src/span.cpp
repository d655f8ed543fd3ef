#include "cubicspan/span.hpp"

#include <json.hpp>
#include <stdexcept>

namespace cubicspan {

SurfaceIndex::SurfaceIndex(const Surface& s)
    : pts_(surface_points(s)), by_space_(space_size(s.field()), -1) {
  for (std::size_t i = 0; i < pts_.size(); ++i)
    by_space_[space_index(s.field(), pts_[i])] = std::int32_t(i);
}

std::optional<Point> secant_candidates(const Surface& s, const Point& p,
                                       const Point& q) {
  const Field& f = s.field();
  if (p == q) throw std::invalid_argument("secant process requires distinct points");
  BinaryCubic c = restrict_to_points(s, p.x, q.x);
  // with basis (P, Q) the ends of the restriction are the surface values
  if (c.c[3] != 0 || c.c[0] != 0)
    throw std::invalid_argument("secant endpoints must lie on the surface");
  if (c.c[2] == 0 && c.c[1] == 0) return std::nullopt;  // line lies on S
  // c = s t (c2 s + c1 t); the residual root is (c1 : -c2)
  std::array<Fe, 4> r;
  Fe nc2 = f.neg(c.c[2]);
  for (int i = 0; i < 4; ++i)
    r[i] = f.add(f.mul(c.c[1], p.x[i]), f.mul(nc2, q.x[i]));
  return make_point(f, r);
}

std::vector<Point> tangent_candidates(const Surface& s, const Point& p) {
  const Field& f = s.field();
  Plane pi = tangent_plane(s, p);  // validates P on S, S smooth at P
  auto frame = plane_frame(f, pi, p);
  std::vector<Point> out;
  auto probe = [&](Fe a, Fe b) {
    std::array<Fe, 4> d{};
    for (int i = 0; i < 4; ++i)
      d[i] = f.add(f.mul(a, frame[0].x[i]), f.mul(b, frame[1].x[i]));
    BinaryCubic c = restrict_to_points(s, p.x, d);
    // P on S and D in the tangent plane force the s^3 and s^2 t ends to drop
    if (c.c[3] != 0 || c.c[2] != 0)
      throw std::logic_error("tangent pencil line is not doubly tangent");
    if (c.c[1] == 0 && c.c[0] == 0) return;  // line on the surface
    // c = t^2 (c1 s + c0 t); residual root (c0 : -c1)
    std::array<Fe, 4> r;
    Fe nc1 = f.neg(c.c[1]);
    for (int i = 0; i < 4; ++i)
      r[i] = f.add(f.mul(c.c[0], p.x[i]), f.mul(nc1, d[i]));
    Point rp = make_point(f, r);
    for (const Point& seen : out)
      if (seen == rp) return;
    out.push_back(rp);
  };
  for (std::uint64_t b = 0; b < f.q(); ++b) probe(1, Fe(b));
  probe(0, 1);
  return out;
}

SpanResult span_closure_bits(const Surface& s, const SurfaceIndex& ix,
                             const std::vector<int>& seeds,
                             std::uint64_t order_seed) {
  const Field& f = s.field();
  SpanResult res;
  res.members = Bitset(ix.size());
  std::vector<int> level(ix.size(), 0);
  std::vector<int> work;
  SampleStream order{order_seed};

  auto add = [&](const Point& r, int lvl) {
    int j = ix.index_of(f, r);
    if (j < 0) throw std::logic_error("span process left the surface");
    if (res.members.test(std::size_t(j))) return;
    res.members.set(std::size_t(j));
    level[j] = lvl;
    if (lvl > res.generations) res.generations = lvl;
    work.push_back(j);
  };

  for (int i : seeds) {
    if (i < 0 || std::size_t(i) >= ix.size())
      throw std::invalid_argument("seed index out of range");
    if (!res.members.test(std::size_t(i))) {
      res.members.set(std::size_t(i));
      work.push_back(i);
    }
  }

  std::size_t head = 0;
  while (head < work.size()) {
    std::size_t pick = head;
    if (order_seed)
      pick = head + std::size_t(order.below(work.size() - head));
    std::swap(work[head], work[pick]);
    int i = work[head++];
    const Point& p = ix.points()[std::size_t(i)];
    int next_lvl = level[i] + 1;

    for (const Point& r : tangent_candidates(s, p)) add(r, next_lvl);

    // pair the popped point against a snapshot of the current members
    std::vector<int> snapshot;
    for (std::size_t j = 0; j < ix.size(); ++j)
      if (res.members.test(j) && int(j) != i) snapshot.push_back(int(j));
    for (int j : snapshot) {
      auto r = secant_candidates(s, p, ix.points()[std::size_t(j)]);
      if (r) add(*r, std::max(level[i], level[j]) + 1);
    }
  }
  return res;
}

std::vector<Point> span_closure(const Surface& s, const std::vector<Point>& b) {
  if (!s.is_smooth())
    throw std::invalid_argument("span closure requires a smooth surface");
  SurfaceIndex ix(s);
  std::vector<int> seeds;
  for (const Point& p : b) {
    int i = ix.index_of(s.field(), p);
    if (i < 0) throw std::invalid_argument("seed point not on the surface");
    seeds.push_back(i);
  }
  SpanResult r = span_closure_bits(s, ix, seeds);
  std::vector<Point> out;
  for (std::size_t i = 0; i < ix.size(); ++i)
    if (r.members.test(i)) out.push_back(ix.points()[i]);
  return out;
}

bool is_generator(const Surface& s, const Point& p) {
  if (!s.is_smooth())
    throw std::invalid_argument("span closure requires a smooth surface");
  SurfaceIndex ix(s);
  int i = ix.index_of(s.field(), p);
  if (i < 0) throw std::invalid_argument("point not on the surface");
  return span_closure_bits(s, ix, {i}).members.count() == ix.size();
}

GeneratorReport generator_report(const Surface& s, int cap) {
  if (!s.is_smooth())
    throw std::invalid_argument("span closure requires a smooth surface");
  SurfaceIndex ix(s);
  GeneratorReport rep;
  rep.surface = s.to_string();
  const std::size_t n = ix.size();

  std::vector<int> first_witness;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = span_closure_bits(s, ix, {int(i)});
    std::size_t sz = r.members.count();
    rep.verdicts.push_back({ix.points()[i], sz == n, sz});
    if (sz == n && first_witness.empty()) first_witness = {int(i)};
  }
  if (!first_witness.empty()) {
    rep.minimal_size = 1;
  } else if (cap >= 2) {
    for (std::size_t i = 0; i < n && first_witness.empty(); ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto r = span_closure_bits(s, ix, {int(i), int(j)});
        if (r.members.count() == n) {
          first_witness = {int(i), int(j)};
          rep.minimal_size = 2;
          break;
        }
      }
    if (first_witness.empty()) rep.capped = true;
  } else {
    rep.capped = true;
  }

  for (int i : first_witness) rep.witness.push_back(ix.points()[std::size_t(i)]);
  if (!first_witness.empty()) {
    // re-verify the witness by re-running the closure
    auto r = span_closure_bits(s, ix, first_witness);
    if (r.members.count() != n)
      throw std::logic_error("witness failed re-verification");
  }
  return rep;
}

std::string GeneratorReport::to_json() const {
  nlohmann::json j;
  j["surface"] = surface;
  j["minimal_size"] =
      capped ? nlohmann::json(">2 (capped)") : nlohmann::json(minimal_size);
  nlohmann::json jv = nlohmann::json::array();
  for (const auto& v : verdicts)
    jv.push_back({{"point", format_point(v.p)},
                  {"generates_all", v.generates_all},
                  {"span_size", v.span_size}});
  j["verdicts"] = jv;
  nlohmann::json jw = nlohmann::json::array();
  for (const auto& w : witness) jw.push_back(format_point(w));
  j["witness"] = jw;
  return j.dump();
}

}  // namespace cubicspan
