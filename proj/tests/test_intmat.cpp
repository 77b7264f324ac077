#include <random>

#include "doctest.h"
#include "kirby/intmat.hpp"
#include "oracles.hpp"

using namespace kirby;
using M = IntegerMatrix;

namespace {

const M kD22 = M::from_rows({{1, 1, -1, 0}, {-1, 1, 0, 1}, {-1, 0, 1, 1}, {0, 1, -1, 1}});
// Differs from D_{2,2} only in entry (1,1).
const M kD22Variant = M::from_rows({{-1, 1, -1, 0}, {-1, 1, 0, 1}, {-1, 0, 1, 1}, {0, 1, -1, 1}});

const std::vector<oracle::Slide> kD22Word = {{2, 1, -1}, {3, 1, -1}, {2, 4, 1}, {3, 4, 1},
                                             {4, 3, -1}, {1, 3, -1}, {4, 2, 1}, {1, 2, 1}};

}  // namespace

TEST_CASE("matrix products") {
  CHECK(M::identity(2) * M::identity(2) == M::identity(2));
  CHECK((M::identity(2) + e_ij(2, 1, 2)) * (M::identity(2) - e_ij(2, 1, 2)) == M::identity(2));
  CHECK_THROWS_AS(mat_mul(M(2, 3), M(2, 3)), KirbyError);
  CHECK_THROWS_AS(M(2, 2, {1, 2, 3}), KirbyError);
}

TEST_CASE("eight-factor slide word equals the Wall-form D_{2,2}") {
  const M oracle_product = oracle::slide_product(4, kD22Word);
  CHECK(oracle_product == kD22);
  M direct = M::identity(4);
  for (const auto& s : kD22Word) direct = direct * w_ij(4, s.i, s.j, s.eps);
  CHECK(direct == kD22);
}

TEST_CASE("smith normal form examples") {
  const auto snf = smith_normal_form(M::from_rows({{2, 0}, {0, 3}}));
  CHECK(oracle::invariant_factors(M::from_rows({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(snf.s == M::from_rows({{1, 0}, {0, 6}}));
  CHECK(snf.verify(M::from_rows({{2, 0}, {0, 3}})));

  CHECK(smith_normal_form(M(2, 2)).s == M(2, 2));
  CHECK(smith_normal_form(ipq({2, 2})).s == M::identity(4));

  const M rect = M::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto r = smith_normal_form(rect);
  CHECK(r.verify(rect));
  CHECK(r.invariant_factors() == oracle::invariant_factors(rect));
  CHECK(r.invariant_factors() == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith normal form laws on random matrices") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const M a = oracle::random_matrix(rng, dim(rng), dim(rng), -10, 10);
    const auto snf = smith_normal_form(a);
    REQUIRE(snf.verify(a));
    if (a.rows() <= 4 && a.cols() <= 4) {
      CHECK(snf.invariant_factors() == oracle::invariant_factors(a));
    }
  }
}

TEST_CASE("determinant and unimodular inverse") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const M a = oracle::random_matrix(rng, 1 + trial % 5, 1 + trial % 5, -6, 6);
    CHECK(determinant(a) == oracle::det(a));
  }
  CHECK(unimodular_inverse(kD22) * kD22 == M::identity(4));
  CHECK_THROWS_AS(unimodular_inverse(M::from_rows({{2, 0}, {0, 1}})), KirbyError);
  CHECK(unimodular_inverse(M(0, 0)) == M(0, 0));
}

TEST_CASE("cokernels") {
  CHECK(cokernel(M::from_rows({{1, 0}, {0, -1}})).is_trivial());
  CHECK(cokernel(M::from_rows({{2}})) == AbelianGroup{0, {2}});
  CHECK(cokernel(M::from_rows({{0}})) == AbelianGroup{1, {}});
  CHECK(cokernel(M(3, 0)) == AbelianGroup{3, {}});
  CHECK(cokernel(M::from_rows({{2, 0}, {0, 3}})) == AbelianGroup{0, {6}});
  CHECK(AbelianGroup{2, {2, 4}}.to_string() == "Z^2 + Z/2 + Z/4");
}

TEST_CASE("cokernel is invariant under unimodular changes of basis") {
  std::mt19937_64 rng(99);
  const auto gens = slide_generators(4);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const M a = oracle::random_matrix(rng, 4, 4, -5, 5);
    M u = M::identity(4);
    M v = M::identity(4);
    for (int k = 0; k < 6; ++k) {
      u = u * gens[pick(rng)].matrix;
      v = gens[pick(rng)].matrix * v;
    }
    CHECK(cokernel(u * a * v) == cokernel(a));
  }
}

TEST_CASE("I_{p,q}") {
  CHECK(ipq({2, 1}) == M::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  CHECK(ipq({0, 0}) == M(0, 0));
  CHECK(ipq({2, 2}) == M::diagonal({1, 1, -1, -1}));
}

TEST_CASE("membership in O(p,q;Z)") {
  CHECK(is_in_opq(M::identity(4), {2, 2}));
  CHECK_FALSE(is_in_opq(w_ij(4, 1, 2, 1), {2, 2}));
  CHECK(is_in_opq(kD22, {2, 2}));
  CHECK_FALSE(is_in_opq(kD22Variant, {2, 2}));
  CHECK_THROWS_AS(is_in_opq(M::identity(3), {2, 2}), KirbyError);
}

TEST_CASE("D_{p,q}") {
  CHECK(d_pq({2, 2}) == kD22);
  const M d33 = d_pq({3, 3});
  for (std::size_t j = 0; j < 6; ++j) CHECK(d33(2, j) == (j == 2 ? 1 : 0));
  CHECK(d33(0, 3) == -1);
  CHECK(d33(3, 0) == -1);
  CHECK_THROWS_AS(d_pq({1, 3}), KirbyError);
}

TEST_CASE("Wall generators") {
  const auto g22 = wall_generators({2, 2});
  REQUIRE(g22.size() == 7);
  CHECK(g22[0].name == "P1,2");
  CHECK(g22[1].name == "P3,4");
  CHECK(g22[6].matrix == kD22);
  CHECK(wall_generators({3, 2}).size() == 10);
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t q = 2; q <= 4; ++q)
      for (const auto& g : wall_generators({p, q})) CHECK(is_in_opq(g.matrix, {p, q}));
  CHECK_THROWS_AS(wall_generators({2, 1}), KirbyError);
}

TEST_CASE("O(p,q;Z) is closed under products and inverses") {
  std::mt19937_64 rng(3);
  for (SignatureType sig : {SignatureType{2, 2}, SignatureType{3, 2}, SignatureType{2, 4}}) {
    const auto gens = wall_generators(sig);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      M a = M::identity(sig.size());
      M b = M::identity(sig.size());
      for (int k = 0; k < 5; ++k) {
        a = a * gens[pick(rng)].matrix;
        b = gens[pick(rng)].matrix * b;
      }
      REQUIRE(is_in_opq(a, sig));
      REQUIRE(is_in_opq(b, sig));
      CHECK(is_in_opq(a * b, sig));
      CHECK(is_in_opq(unimodular_inverse(a), sig));
    }
  }
}

TEST_CASE("bounded word search") {
  const auto wall = wall_generators({2, 2});
  CHECK(bfs_decompose_opq(M::identity(4), {2, 2}, wall) == GeneratorWord{});

  const auto q1 = bfs_decompose_opq(q_i(4, 1), {2, 2}, wall);
  REQUIRE(q1);
  REQUIRE(q1->size() == 1);
  CHECK(wall[q1->front()].name == "Q1");

  const auto slides = slide_generators(4);
  CHECK(slides.size() == 24);
  const auto word = bfs_decompose_opq(kD22, {2, 2}, slides, {8, 64});
  REQUIRE(word);
  CHECK(word->size() <= 8);
  CHECK(evaluate_word(*word, slides, 4) == kD22);
  // An independent numpy search found no slide word shorter than 6.
  CHECK(word->size() == 6);
  CHECK_FALSE(bfs_decompose_opq(kD22, {2, 2}, slides, {5, 64}));

  CHECK_THROWS_AS(bfs_decompose_opq(w_ij(4, 1, 2, 1), {2, 2}, slides), KirbyError);
}

TEST_CASE("inverse closure of generator lists") {
  auto gens = close_under_inverses(wall_generators({2, 2}));
  CHECK(gens.size() == 8);
  CHECK(gens.back().matrix * kD22 == M::identity(4));
  CHECK(close_under_inverses(slide_generators(3)).size() == 12);
}

TEST_CASE("matrix text format") {
  const M m = parse_matrix("2   3\n 1 -2\t3\n\n4 5 +6");
  CHECK(m == M::from_rows({{1, -2, 3}, {4, 5, 6}}));
  CHECK(format_matrix(m) == "2 3\n1 -2 3\n4 5 6\n");
  CHECK(parse_matrix(format_matrix(kD22)) == kD22);
  CHECK(format_matrix_inline(m) == "[[1,-2,3],[4,5,6]]");
  CHECK(parse_matrix("0 0") == M(0, 0));
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3"), KirbyError);
  CHECK_THROWS_AS(parse_matrix("1 1\n1 2"), KirbyError);
  CHECK_THROWS_AS(parse_matrix("1 1\nx"), KirbyError);
  CHECK_THROWS_AS(parse_matrix("-1 1\n"), KirbyError);
}
