#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicspan/surface.hpp"

namespace cubicspan {

struct Bitset {
  std::vector<std::uint64_t> w;

  Bitset() = default;
  explicit Bitset(std::size_t n) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto v : w) c += std::size_t(__builtin_popcountll(v));
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool operator==(const Bitset&) const = default;
};

/// Dense index of S(K): points in space enumeration order plus the inverse
/// lookup, shared by every closure over the same surface.
class SurfaceIndex {
 public:
  explicit SurfaceIndex(const Surface& s);

  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  /// -1 when the point is not on the surface.
  int index_of(const Field& f, const Point& p) const {
    std::size_t si = space_index(f, p);
    return si < by_space_.size() ? by_space_[si] : -1;
  }

 private:
  std::vector<Point> pts_;
  std::vector<std::int32_t> by_space_;
};

/// The secant-process residual: R with l.S = P + Q + R for the line joining
/// distinct surface points P, Q; absent when that line lies on S. Throws when
/// P or Q is off the surface or P == Q.
std::optional<Point> secant_candidates(const Surface& s, const Point& p,
                                       const Point& q);

/// The tangent-process residuals at P: for each of the q+1 lines through P
/// inside the tangent plane that do not lie on S, the point R with
/// l.S = 2P + R (R = P for asymptotic directions with triple contact).
/// Deduplicated, deterministic order, at most q+1 entries.
std::vector<Point> tangent_candidates(const Surface& s, const Point& p);

struct SpanResult {
  Bitset members;
  int generations = 0;  // worklist depth reached (B_0, B_1, ...)
};

/// Least fixed point of the secant-and-tangent process over the seed set.
/// order_seed != 0 shuffles worklist processing; the resulting member set is
/// order-independent (worklist closure of a monotone operator).
SpanResult span_closure_bits(const Surface& s, const SurfaceIndex& ix,
                             const std::vector<int>& seeds,
                             std::uint64_t order_seed = 0);

/// Point-level convenience wrapper. Throws when a seed is off the surface or
/// the surface is not smooth.
std::vector<Point> span_closure(const Surface& s, const std::vector<Point>& b);

bool is_generator(const Surface& s, const Point& p);

struct GeneratorReport {
  struct Verdict {
    Point p;
    bool generates_all = false;
    std::size_t span_size = 0;
  };
  std::string surface;
  std::vector<Verdict> verdicts;   // one per K-point, singleton spans
  int minimal_size = 0;            // 1 or 2; meaningless when capped
  bool capped = false;             // no generating set of size <= cap found
  std::vector<Point> witness;      // a minimal generating set, if found

  std::string to_json() const;
};

/// Tests every singleton; when none generates S(K) and cap >= 2, scans pairs.
GeneratorReport generator_report(const Surface& s, int cap = 2);

}  // namespace cubicspan
