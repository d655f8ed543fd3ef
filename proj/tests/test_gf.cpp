#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cubicspan/gf.hpp"

using namespace cubicspan;

namespace {

const unsigned kSmallFields[][2] = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                    {7, 1}, {2, 3}, {3, 2}, {11, 1}};

}  // namespace

TEST_CASE("construction and pinned moduli") {
  const Field& f4 = Field::get(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
  const Field& f8 = Field::get(2, 3);
  CHECK(f8.modulus() == std::vector<unsigned>{1, 1, 0, 1});
  const Field& f9 = Field::get(3, 2);
  CHECK(f9.modulus() == std::vector<unsigned>{2, 2, 1});

  CHECK_THROWS_AS(Field::get(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(13, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(11, 12), std::invalid_argument);  // > 2^32
}

TEST_CASE("field axioms exhaustive for q <= 11") {
  for (auto [p, k] : kSmallFields) {
    const Field& f = Field::get(p, k);
    const auto q = f.q();
    CAPTURE(f.name());
    for (Fe a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q) == a);  // x^q = x
      for (Fe b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        for (Fe c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms sampled for larger tabled fields") {
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 6},
                      {3, 4},
                      {5, 3},
                      {7, 2},
                      {11, 2},
                      {2, 12},
                      {3, 10}}) {
    const Field& f = Field::get(p, k);
    CAPTURE(f.name());
    CHECK(f.tabled());
    SampleStream rng{0x75c1u * p + k};
    for (int i = 0; i < 300; ++i) {
      Fe a = rng.element(f), b = rng.element(f), c = rng.element(f);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, f.q()) == a);
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST_CASE("polynomial fallback above the table budget") {
  const Field& f = Field::get(3, 11);  // q = 177147
  CHECK_FALSE(f.tabled());
  CHECK(f.q() == 177147u);
  SampleStream rng{99};
  for (int i = 0; i < 120; ++i) {
    Fe a = rng.element(f), b = rng.element(f), c = rng.element(f);
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, f.q()) == a);
  }
  // prime subfield behaves as GF(3)
  CHECK(f.add(1, 2) == 0);
  CHECK(f.mul(2, 2) == 1);
}

TEST_CASE("specific arithmetic values") {
  const Field& f7 = Field::get(7, 1);
  CHECK(f7.inv(3) == 5);

  const Field& f4 = Field::get(2, 2);
  // g = code 2 is the residue of x; g^2 = g + 1 = code 3
  CHECK(f4.mul(2, 2) == 3);

  const Field& f8 = Field::get(2, 3);
  for (Fe a = 0; a < 8; ++a) CHECK(f8.add(a, a) == 0);

  const Field& f5 = Field::get(5, 1);
  Fe prod = 1;
  for (Fe a = 1; a < 5; ++a) prod = f5.mul(prod, a);
  CHECK(prod == 4);  // Wilson

  CHECK(Field::get(2, 1).elements() == std::vector<Fe>{0, 1});
  CHECK(Field::get(3, 2).elements().size() == 9);

  // GF(9): every nonzero element has multiplicative order dividing 8
  const Field& f9 = Field::get(3, 2);
  for (Fe a = 1; a < 9; ++a) CHECK(f9.pow(a, 8) == 1);
}

TEST_CASE("frobenius") {
  const Field& f4 = Field::get(2, 2);
  CHECK(f4.frobenius(2) == 3);  // g^2 = g + 1

  const Field& f9 = Field::get(3, 2);
  for (Fe a = 0; a < 9; ++a) CHECK(f9.frobenius(f9.frobenius(a)) == a);

  const Field& f2 = Field::get(2, 1);
  CHECK(f2.frobenius(0) == 0);
  CHECK(f2.frobenius(1) == 1);

  for (auto [p, k] : kSmallFields) {
    const Field& f = Field::get(p, k);
    for (Fe a = 0; a < f.q(); ++a)
      for (Fe b = 0; b < f.q(); ++b)
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
  }
}

TEST_CASE("inversion of zero throws") {
  CHECK_THROWS_AS(Field::get(7, 1).inv(0), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 2).inv(0), std::invalid_argument);
}

TEST_CASE("embeddings are unital, deterministic, injective homomorphisms") {
  struct Pair {
    unsigned p, ks, kd;
  };
  for (auto [p, ks, kd] : {Pair{2, 1, 6}, {2, 2, 4}, {2, 2, 6}, {3, 1, 2},
                           {3, 2, 4}, {5, 1, 3}, {2, 3, 6}}) {
    const Field& src = Field::get(p, ks);
    const Field& dst = Field::get(p, kd);
    CAPTURE(src.name());
    CAPTURE(dst.name());
    const auto& img = Field::embedding(src, dst);
    CHECK(img[0] == 0);
    CHECK(img[1] == 1);
    std::set<Fe> seen(img.begin(), img.end());
    CHECK(seen.size() == src.q());  // injective
    for (Fe a = 0; a < src.q(); ++a)
      for (Fe b = 0; b < src.q(); ++b) {
        CHECK(img[src.add(a, b)] == dst.add(img[a], img[b]));
        CHECK(img[src.mul(a, b)] == dst.mul(img[a], img[b]));
      }
    // deterministic across calls
    CHECK(Field::embedding(src, dst) == img);
  }

  // GF(2) -> GF(64): 1 -> 1
  CHECK(Field::embed(Field::get(2, 1), Field::get(2, 6), 1) == 1);
  // GF(3) -> GF(9): prime subfield fixed
  CHECK(Field::embed(Field::get(3, 1), Field::get(3, 2), 2) == 2);

  CHECK_THROWS_AS(Field::embedding(Field::get(2, 2), Field::get(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Field::embedding(Field::get(2, 1), Field::get(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("embedded generator keeps its minimal polynomial") {
  // oracle: brute-force the monic quadratic over GF(2) vanishing on the image
  const Field& f4 = Field::get(2, 2);
  const Field& f16 = Field::get(2, 4);
  Fe g = Field::embed(f4, f16, 2);
  CHECK(g != 0);
  CHECK(g != 1);
  // x^2 + x + 1 must vanish at g; no monic linear polynomial over GF(2) does
  CHECK(f16.add(f16.add(f16.mul(g, g), g), 1) == 0);
}

TEST_CASE("sample stream is deterministic and uniform-ish") {
  SampleStream a{42}, b{42};
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
  SampleStream c{43};
  std::set<std::uint64_t> draws;
  for (int i = 0; i < 100; ++i) draws.insert(c.below(1000));
  CHECK(draws.size() > 50);
  for (auto d : draws) CHECK(d < 1000);
}
