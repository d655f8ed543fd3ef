#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicspan/linalg.hpp"

using namespace cubicspan;

namespace {

Mat random_mat(const Field& f, SampleStream& rng, std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (auto& v : m.a) v = rng.element(f);
  return m;
}

}  // namespace

TEST_CASE("rref is idempotent and preserves the row span") {
  const Field& f = Field::get(5, 1);
  SampleStream rng{7};
  for (int it = 0; it < 200; ++it) {
    Mat m = random_mat(f, rng, 4, 6);
    Mat r = m;
    auto piv = rref_in_place(f, r);
    Mat rr = r;
    auto piv2 = rref_in_place(f, rr);
    CHECK(piv == piv2);
    CHECK(r.a == rr.a);
    // every original row reduces to zero against the RREF rows
    for (std::size_t i = 0; i < m.rows; ++i) {
      std::vector<Fe> row(m.row(i), m.row(i) + m.cols);
      for (std::size_t pi = 0; pi < piv.size(); ++pi) {
        Fe c = row[piv[pi]];
        if (!c) continue;
        Fe nc = f.neg(c);
        for (std::size_t j = 0; j < m.cols; ++j)
          row[j] = f.add(row[j], f.mul(nc, r.at(pi, j)));
      }
      for (Fe v : row) CHECK(v == 0);
    }
  }
}

TEST_CASE("null_space vectors are solutions and count matches rank") {
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {7, 1}}) {
    const Field& f = Field::get(p, k);
    SampleStream rng{p * 10 + k};
    for (int it = 0; it < 100; ++it) {
      Mat m = random_mat(f, rng, 3, 5);
      std::size_t rk = rank(f, m);
      auto ns = null_space(f, m);
      CHECK(ns.size() == 5 - rk);
      for (const auto& v : ns)
        for (std::size_t i = 0; i < m.rows; ++i) {
          Fe s = 0;
          for (std::size_t j = 0; j < m.cols; ++j)
            s = f.add(s, f.mul(m.at(i, j), v[j]));
          CHECK(s == 0);
        }
    }
  }
}

TEST_CASE("specialized GF(2) and GF(3) ranks agree with the generic path") {
  SampleStream rng{11};
  const Field& f2 = Field::get(2, 1);
  const Field& f3 = Field::get(3, 1);
  for (int it = 0; it < 300; ++it) {
    std::size_t r = 1 + rng.below(12), c = 1 + rng.below(70);
    Mat m2(r, c);
    for (auto& v : m2.a) v = Fe(rng.below(2));
    std::size_t words = (c + 63) / 64;
    std::vector<std::uint64_t> packed(r * words, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (m2.at(i, j)) packed[i * words + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    CHECK(rank_gf2(packed, r, words) == rank(f2, m2));

    Mat m3(r, c);
    for (auto& v : m3.a) v = Fe(rng.below(3));
    std::vector<std::uint8_t> bytes(r * c);
    for (std::size_t i = 0; i < r * c; ++i) bytes[i] = std::uint8_t(m3.a[i]);
    CHECK(rank_gf3(bytes, r, c) == rank(f3, m3));
  }
}
