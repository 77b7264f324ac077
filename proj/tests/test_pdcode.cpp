#include <random>

#include "doctest.h"
#include "kirby/pdcode.hpp"

using namespace kirby;
using M = IntegerMatrix;

namespace {

PlanarDiagram positive_hopf() { return PlanarDiagram(2, {{1, 2, 1}, {2, 1, 1}}); }

PlanarDiagram random_diagram(std::mt19937_64& rng, std::size_t k) {
  std::vector<Crossing> xs;
  for (std::size_t a = 1; a <= k; ++a) {
    for (std::size_t b = a; b <= k; ++b) {
      const int pairs = static_cast<int>(rng() % 4);
      for (int t = 0; t < pairs; ++t) {
        const int s = (rng() & 1) ? 1 : -1;
        if (a == b) {
          xs.push_back({a, a, s});
        } else {
          // Crossings between two components come in pairs with matching
          // parity; a clasp contributes two of the same sign.
          const int s2 = (rng() & 1) ? s : -s;
          xs.push_back({a, b, s});
          xs.push_back({b, a, s2});
        }
      }
    }
  }
  return PlanarDiagram(k, xs);
}

}  // namespace

TEST_CASE("linking numbers of small diagrams") {
  CHECK(linking_number(positive_hopf(), 1, 2) == 1);
  CHECK(linking_number(positive_hopf(), 2, 1) == 1);
  CHECK(linking_number(positive_hopf().mirror(), 1, 2) == -1);
  CHECK(linking_number(PlanarDiagram(2), 1, 2) == 0);
  // Whitehead-like clasp pair with cancelling signs.
  CHECK(linking_number(PlanarDiagram(2, {{1, 2, 1}, {2, 1, 1}, {1, 2, -1}, {2, 1, -1}}), 1, 2) == 0);
  CHECK(linking_number(positive_hopf().reverse_orientation(1), 1, 2) == -1);
  CHECK(linking_number(positive_hopf().reverse_orientation(2).reverse_orientation(1), 1, 2) == 1);
}

TEST_CASE("writhe is the blackboard framing") {
  const PlanarDiagram trefoil(1, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(writhe(trefoil, 1) == 3);
  CHECK(writhe(trefoil.with_kink(1, 1), 1) == 4);
  CHECK(writhe(trefoil.with_kink(1, -1), 1) == 2);
  CHECK(writhe(trefoil.mirror(), 1) == -3);
  // Reversing a knot's orientation does not change its writhe.
  CHECK(writhe(trefoil.reverse_orientation(1), 1) == 3);
}

TEST_CASE("linking matrices") {
  CHECK(linking_matrix_from_pd(positive_hopf()) == M::from_rows({{0, 1}, {1, 0}}));
  const PlanarDiagram kinks = PlanarDiagram(1).with_kink(1, 1).disjoint_union(PlanarDiagram(1).with_kink(1, 1));
  CHECK(linking_matrix_from_pd(kinks) == M::identity(2));
  const auto both = positive_hopf().disjoint_union(positive_hopf().mirror());
  CHECK(linking_matrix_from_pd(both) ==
        M::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pd = random_diagram(rng, 1 + trial % 5);
    const M lk = linking_matrix_from_pd(pd);
    CHECK(lk.is_symmetric());
    CHECK(linking_matrix_from_pd(pd.mirror()) == -lk);
    const std::size_t c = 1 + rng() % pd.components();
    const M rev = linking_matrix_from_pd(pd.reverse_orientation(c));
    for (std::size_t a = 0; a < lk.rows(); ++a)
      for (std::size_t b = 0; b < lk.cols(); ++b) {
        const bool flips = (a == c - 1) != (b == c - 1);
        CHECK(rev(a, b) == (flips ? -lk(a, b) : lk(a, b)));
      }
  }
}

TEST_CASE("malformed diagrams") {
  CHECK_THROWS_AS(linking_number(PlanarDiagram(2, {{1, 2, 1}}), 1, 2), KirbyError);
  CHECK_THROWS_AS(linking_number(positive_hopf(), 1, 1), KirbyError);
  CHECK_THROWS_AS(linking_number(positive_hopf(), 1, 3), KirbyError);
  CHECK_THROWS_AS(PlanarDiagram(2, {{1, 3, 1}}), KirbyError);
  CHECK_THROWS_AS(PlanarDiagram(2, {{1, 2, 0}}), KirbyError);
}

TEST_CASE("planar diagram text format") {
  const auto pd = parse_planar_diagram(
      "# positive Hopf link\n"
      "pd components=2\n"
      "x 1 2 +1\n"
      "x 2 1 1\n");
  CHECK(pd.components() == 2);
  CHECK(linking_number(pd, 1, 2) == 1);
  CHECK(parse_planar_diagram(format_planar_diagram(pd)).crossings() == pd.crossings());

  CHECK_THROWS_AS(parse_planar_diagram(""), KirbyError);
  CHECK_THROWS_AS(parse_planar_diagram("pd comps=2\n"), KirbyError);
  CHECK_THROWS_AS(parse_planar_diagram("pd components=2\nx 1 2\n"), KirbyError);
  CHECK_THROWS_WITH_AS(parse_planar_diagram("pd components=2\nx 1 2 +1\nx 1 5 +1\n"),
                       doctest::Contains("line 3"), KirbyError);
  CHECK_THROWS_WITH_AS(parse_planar_diagram("pd components=2\nx 1 2 2\n"), doctest::Contains("line 2"),
                       KirbyError);
}
