#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kirby/figures.hpp"
#include "kirby/homlink.hpp"
#include "kirby/movecalc.hpp"
#include "oracles.hpp"

using namespace kirby;
using M = IntegerMatrix;

namespace {

HomFramedLink random_link(std::mt19937_64& rng, std::size_t r, std::size_t n) {
  return HomFramedLink(r, oracle::random_matrix(rng, r, n, -2, 2), oracle::random_symmetric(rng, n, -3, 3));
}

EmbeddingShadow random_shadow(std::mt19937_64& rng, std::size_t g, std::size_t r, std::size_t n) {
  return {oracle::random_matrix(rng, r, g, -2, 2), oracle::random_symmetric(rng, g, -2, 2),
          oracle::random_matrix(rng, g, n, -2, 2)};
}

EmbeddingShadow zero_shadow(std::size_t g, std::size_t r, std::size_t n) { return {M(r, g), M(g, g), M(g, n)}; }

AbelianGroup h1_oracle(const HomFramedLink& l) {
  M rel(l.r() + l.n(), l.n());
  for (std::size_t k = 0; k < l.n(); ++k) {
    for (std::size_t d = 0; d < l.r(); ++d) rel(d, k) = l.classes()(d, k);
    for (std::size_t a = 0; a < l.n(); ++a) rel(l.r() + a, k) = l.lk()(a, k);
  }
  return oracle::cokernel_by_minors(rel);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

HomFramedLink admissible_link(std::mt19937_64& rng, std::size_t r, std::size_t n) {
  std::vector<Integer> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back((rng() & 1) ? 1 : -1);
  return HomFramedLink(r, M(r, n), M::diagonal(d));
}

}  // namespace

TEST_CASE("link construction") {
  CHECK_THROWS_AS(HomFramedLink(1, M(1, 2), M::from_rows({{0, 1}, {2, 0}})), KirbyError);
  CHECK_THROWS_AS(HomFramedLink(2, M(1, 2), M(2, 2)), KirbyError);
  const auto e = HomFramedLink::empty(3);
  CHECK(e.n() == 0);
  CHECK(e.r() == 3);
  const HomFramedLink l(2, M::from_rows({{1, 0}, {2, 0}}), M::identity(2));
  CHECK(l.class_of(1) == std::vector<Integer>{1, 2});
  CHECK_THROWS_AS(l.class_of(3), KirbyError);
}

TEST_CASE("transport") {
  const CurveSystemShadow zero_classes{M(3, 2), M::from_rows({{1, 2}, {2, -1}})};
  const auto l = HomFramedLink(1, M::from_rows({{1}}), M::from_rows({{4}}));
  std::mt19937_64 rng(31);
  const auto sh = random_shadow(rng, 3, 1, 1);
  const auto out = transport(zero_classes, sh, l);
  CHECK(out.n() == 3);
  CHECK(out.lk() == M::from_rows({{4, 0, 0}, {0, 1, 2}, {0, 2, -1}}));
  CHECK(out.classes() == M::from_rows({{1, 0, 0}}));

  const CurveSystemShadow one{M::from_rows({{1}, {0}}), M::from_rows({{1}})};
  EmbeddingShadow sh2{M(0, 2), M::from_rows({{3, 0}, {0, 0}}), M(2, 0)};
  CHECK(transport(one, sh2, HomFramedLink::empty(0)).lk() == M::from_rows({{4}}));

  // Classes, external and internal linking with a nonzero class, checked by hand.
  const CurveSystemShadow c{M::from_rows({{1}, {-1}}), M::from_rows({{1}})};
  EmbeddingShadow sh3{M::from_rows({{2, 1}}), M::from_rows({{1, 1}, {1, 2}}), M::from_rows({{3}, {1}})};
  const auto t = transport(c, sh3, l);
  CHECK(t.classes() == M::from_rows({{1, 1}}));
  // mu^t c = 3 - 1; framing 1 + (1 - 1 - 1 + 2) = 2
  CHECK(t.lk() == M::from_rows({{4, 2}, {2, 2}}));

  CHECK_THROWS_AS(transport(zero_classes, random_shadow(rng, 4, 1, 1), l), KirbyError);
  CHECK_THROWS_AS(transport(zero_classes, random_shadow(rng, 3, 2, 1), l), KirbyError);
  CHECK_THROWS_AS(transport(zero_classes, random_shadow(rng, 3, 1, 2), l), KirbyError);
}

TEST_CASE("stabilization") {
  const auto s = stabilize(HomFramedLink::empty(2), 1);
  CHECK(s.n() == 1);
  CHECK(s.lk() == M::from_rows({{1}}));
  CHECK(s.classes().is_zero());
  CHECK(is_admissible(s));
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto l = random_link(rng, trial % 4, trial % 5);
    CHECK(destabilize(stabilize(l, -1), l.n() + 1) == l);
  }
  CHECK_THROWS_AS(destabilize(HomFramedLink(0, M(0, 1), M::from_rows({{2}})), 1), KirbyError);
  CHECK_THROWS_AS(destabilize(HomFramedLink(1, M::from_rows({{1}}), M::from_rows({{1}})), 1), KirbyError);
  CHECK_THROWS_AS(destabilize(HomFramedLink(0, M(0, 2), M::from_rows({{1, 1}, {1, 0}})), 1), KirbyError);
}

TEST_CASE("handle slides") {
  const HomFramedLink l(0, M(0, 2), M::diagonal({1, -1}));
  CHECK(handle_slide(l, 1, 2, 1).lk() == M::from_rows({{0, -1}, {-1, -1}}));
  CHECK(handle_slide(handle_slide(l, 1, 2, 1), 1, 2, -1) == l);
  const HomFramedLink h(2, M::from_rows({{3, 0}, {-1, 0}}), M::from_rows({{0, 2}, {2, 1}}));
  CHECK(handle_slide(h, 1, 2, 1).classes() == h.classes());
  CHECK(handle_slide(h, 2, 1, -1).classes() == M::from_rows({{3, -3}, {-1, 1}}));
  CHECK_THROWS_AS(handle_slide(l, 1, 1, 1), KirbyError);

  // Agrees with the move calculus on the linking matrix.
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    auto link = random_link(rng, trial % 3, n);
    const M start = link.lk();
    std::vector<ElementaryMove> moves;
    for (int k = 0; k < 8; ++k) {
      const std::size_t i = 1 + rng() % n;
      const std::size_t j = 1 + (i + rng() % (n - 1)) % n;
      const int eps = (rng() & 1) ? 1 : -1;
      moves.push_back(ElementaryMove::slide(i, j, eps));
      link = handle_slide(link, i, j, eps);
    }
    CHECK(link.lk() == evolve_lk(start, MoveSequence(n, moves)));
  }
}

TEST_CASE("K3-moves") {
  const auto a = k3_add(HomFramedLink::empty(0), 5, {});
  CHECK(a.lk() == M::from_rows({{5, 1}, {1, 0}}));
  CHECK(h1_of_surgery(a).is_trivial());
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto l = random_link(rng, trial % 4, trial % 5);
    std::vector<Integer> row;
    for (std::size_t k = 0; k < l.n(); ++k) row.push_back(static_cast<long>(rng() % 7) - 3);
    const auto out = k3_add(l, static_cast<long>(rng() % 9) - 4, row);
    CHECK(h1_of_surgery(out) == h1_of_surgery(l));
    CHECK(k3_remove(out, l.n() + 1, l.n() + 2) == l);
  }
  CHECK_THROWS_AS(k3_remove(HomFramedLink(0, M(0, 2), M::from_rows({{0, 2}, {2, 0}})), 1, 2), KirbyError);
  CHECK_THROWS_AS(k3_remove(HomFramedLink(0, M(0, 2), M::from_rows({{0, 1}, {1, 1}})), 1, 2), KirbyError);
  CHECK_THROWS_AS(k3_remove(HomFramedLink(1, M::from_rows({{1, 0}}), M::from_rows({{0, 1}, {1, 0}})), 1, 2),
                  KirbyError);
  CHECK_THROWS_AS(
      k3_remove(HomFramedLink(0, M(0, 3), M::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})), 1, 2), KirbyError);
}

TEST_CASE("pair-moves") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto adm = admissible_link(rng, trial % 3, trial % 6);
    const auto out = pair_add(adm);
    CHECK(is_admissible(out));
    CHECK(h1_of_surgery(out) == h1_of_surgery(adm));
    CHECK(pair_remove(out, adm.n() + 1, adm.n() + 2) == adm);
    const auto l = random_link(rng, trial % 3, trial % 5);
    CHECK(h1_of_surgery(pair_add(l)) == h1_of_surgery(l));
  }
  const auto p = pair_add(HomFramedLink::empty(0));
  CHECK(p.lk() == M::diagonal({1, -1}));
  CHECK_THROWS_AS(pair_remove(p, 2, 1), KirbyError);
  CHECK_THROWS_AS(pair_remove(HomFramedLink(0, M(0, 2), M::from_rows({{1, 1}, {1, -1}})), 1, 2), KirbyError);
}

TEST_CASE("IHX-moves") {
  CHECK(ihx_block().m() == 6);
  CHECK(ihx_block().classes.is_zero());
  const M h = M::from_rows({{0, 1}, {1, 0}});
  CHECK(ihx_block().internal_lk == direct_sum(direct_sum(h, h), h));
  CHECK(cokernel(ihx_block().internal_lk).is_trivial());

  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = trial % 6;
    const std::size_t n = trial % 5;
    const auto l = random_link(rng, r, n);
    const auto out = ihx_add(l, random_shadow(rng, 4, r, n));
    CHECK(out == ihx_add(l, random_shadow(rng, 4, r, n)));
    CHECK(out == ihx_add(l, zero_shadow(4, r, n)));
    CHECK(h1_of_surgery(out) == h1_of_surgery(l));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = n; k < n + 6; ++k) CHECK(out.lk()(a, k) == 0);
    const auto z = HomFramedLink(r, M(r, n), l.lk());
    CHECK(is_z_null(ihx_add(z, random_shadow(rng, 4, r, n))));
  }
  CHECK_THROWS_AS(ihx_add(HomFramedLink::empty(0), zero_shadow(3, 0, 0)), KirbyError);
}

TEST_CASE("admissible IHX-moves") {
  CHECK(ihx_adm_block().m() == 9);
  CHECK(ihx_adm_block().classes.is_zero());
  CHECK(ihx_adm_block().internal_lk == M::diagonal({1, -1, 1, 1, -1, 1, 1, -1, 1}));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = trial % 6;
    const auto l = admissible_link(rng, r, trial % 5);
    const auto out = admissible_ihx_add(l, random_shadow(rng, 4, r, l.n()));
    CHECK(is_admissible(out));
    CHECK(h1_of_surgery(out) == h1_of_surgery(l));
  }
  CHECK_THROWS_AS(admissible_ihx_add(HomFramedLink(0, M(0, 1), M::from_rows({{2}})), zero_shadow(4, 0, 1)),
                  KirbyError);
}

TEST_CASE("admissible associated link follows from the 2-component one by moves") {
  const auto& a = embedded_constant_text("y2_assoc_a");
  const auto& b = embedded_constant_text("y2_assoc_b");
  const auto lt = parse_curve_system(std::string(a));
  const auto adm = parse_curve_system(std::string(b));
  auto l = transport(lt, zero_shadow(4, 0, 0), HomFramedLink::empty(0));
  l = stabilize(l, 1);
  l = handle_slide(l, 1, 3, 1);
  l = handle_slide(l, 2, 3, -1);
  l = handle_slide(l, 3, 1, -1);
  l = handle_slide(l, 3, 2, 1);
  CHECK(l.lk() == M::diagonal({1, 1, -1}));
  CHECK(p_ij(3, 2, 3) * l.lk() * p_ij(3, 2, 3) == adm.internal_lk);
  CHECK(is_admissible(l));
}

TEST_CASE("lantern swap") {
  CHECK(lantern_k().m() == 4);
  CHECK(lantern_kprime().m() == 3);
  const auto k = transport(lantern_k(), zero_shadow(3, 0, 0), HomFramedLink::empty(0));
  CHECK(k.lk() == lantern_k().internal_lk);
  const auto kp = lantern_swap(k, {1, 2, 3, 4}, zero_shadow(3, 0, 0), LanternDirection::KToKPrime);
  CHECK(kp.lk() == lantern_kprime().internal_lk);
  CHECK(lantern_swap(kp, {1, 2, 3}, zero_shadow(3, 0, 0), LanternDirection::KPrimeToK) == k);

  // Block in the middle of a larger link, with external linking.
  std::mt19937_64 rng(38);
  const auto base = random_link(rng, 2, 3);
  EmbeddingShadow sh{M(2, 3), oracle::random_symmetric(rng, 3, -2, 2), oracle::random_matrix(rng, 3, 3, -2, 2)};
  const auto with_k = transport(lantern_k(), sh, base);
  const auto swapped = lantern_swap(with_k, {4, 5, 6, 7}, sh, LanternDirection::KToKPrime);
  CHECK(swapped == transport(lantern_kprime(), sh, base));
  CHECK(lantern_swap(swapped, {4, 5, 6}, sh, LanternDirection::KPrimeToK) == with_k);

  CHECK_THROWS_AS(lantern_swap(with_k, {4, 5, 7, 6}, sh, LanternDirection::KToKPrime), KirbyError);
  CHECK_THROWS_AS(lantern_swap(with_k, {4, 5, 6}, sh, LanternDirection::KToKPrime), KirbyError);
  EmbeddingShadow bad = sh;
  bad.f(0, 0) = 1;
  CHECK_THROWS_AS(lantern_swap(with_k, {4, 5, 6, 7}, bad, LanternDirection::KToKPrime), KirbyError);
}

TEST_CASE("lantern sides differ in admissibility for some external linking") {
  // mu = 0, L empty: f(K) has Lk = I + C^t lambda C with C = [e1 e2 e3 (1,1,1)].
  const EmbeddingShadow sh{M(0, 3), M::from_rows({{-1, 1, 0}, {1, -1, 0}, {0, 0, -1}}), M(3, 0)};
  const auto k = transport(lantern_k(), sh, HomFramedLink::empty(0));
  const auto kp = transport(lantern_kprime(), sh, HomFramedLink::empty(0));
  CHECK_FALSE(is_admissible(k));
  CHECK(is_admissible(kp));
  CHECK(kp.lk() == M::diagonal({1, -1, -1}));

  // lambda = 0 keeps both sides admissible, with the same surgery homology.
  const auto k0 = transport(lantern_k(), zero_shadow(3, 0, 0), HomFramedLink::empty(0));
  const auto kp0 = transport(lantern_kprime(), zero_shadow(3, 0, 0), HomFramedLink::empty(0));
  CHECK(is_admissible(k0));
  CHECK(is_admissible(kp0));
  CHECK(h1_of_surgery(k0) == h1_of_surgery(kp0));
}

TEST_CASE("surgery homology") {
  CHECK(h1_of_surgery(HomFramedLink::empty(2)) == free_abelian(2));
  CHECK(h1_of_surgery(HomFramedLink(0, M(0, 2), M::diagonal({1, -1}))).is_trivial());
  CHECK(h1_of_surgery(HomFramedLink(0, M(0, 1), M::from_rows({{2}}))).to_string() == "Z/2");
  CHECK(h1_of_surgery(HomFramedLink(0, M(0, 1), M::from_rows({{0}}))) == free_abelian(1));
  CHECK(h1_of_surgery(HomFramedLink(1, M::from_rows({{2}}), M::from_rows({{0}}))).to_string() == "Z + Z/2");

  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = random_link(rng, trial % 3, trial % 4);
    CHECK(h1_of_surgery(l) == h1_oracle(l));
  }
}

TEST_CASE("surgery homology is invariant under every move") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = trial % 6;
    auto l = random_link(rng, r, 1 + trial % 5);
    const AbelianGroup h = h1_of_surgery(l);
    for (int step = 0; step < 6; ++step) {
      switch (rng() % 6) {
        case 0:
          l = stabilize(l, (rng() & 1) ? 1 : -1);
          break;
        case 1: {
          if (l.n() < 2) break;
          const std::size_t i = 1 + rng() % l.n();
          const std::size_t j = 1 + (i + rng() % (l.n() - 1)) % l.n();
          l = handle_slide(l, i, j, (rng() & 1) ? 1 : -1);
          break;
        }
        case 2:
          l = pair_add(l);
          break;
        case 3:
          l = k3_add(l, static_cast<long>(rng() % 5) - 2, std::vector<Integer>(l.n(), 1));
          break;
        case 4:
          l = ihx_add(l, random_shadow(rng, 4, r, l.n()));
          break;
        default: {
          const auto d = stabilize(l, 1);
          l = destabilize(d, d.n());
        }
      }
      CHECK(h1_of_surgery(l) == h);
    }
  }
}

TEST_CASE("predicates") {
  CHECK(is_admissible(stabilize(HomFramedLink::empty(0), -1)));
  CHECK_FALSE(is_admissible(HomFramedLink(0, M(0, 2), M::from_rows({{1, 1}, {1, -1}}))));
  const HomFramedLink c(2, M::from_rows({{1}, {0}}), M::from_rows({{1}}));
  CHECK_FALSE(is_z_null(c));
  CHECK_FALSE(is_q_null(c));
  CHECK_FALSE(is_admissible(c));

  // Stabilization keeps admissibility; a handle slide can break it.
  const auto a = stabilize(stabilize(HomFramedLink::empty(1), 1), -1);
  CHECK(is_admissible(a));
  CHECK_FALSE(is_admissible(handle_slide(a, 1, 2, 1)));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto l = admissible_link(rng, trial % 3, trial % 5);
    CHECK(is_admissible(stabilize(l, 1)));
    CHECK(is_admissible(stabilize(l, -1)));
  }
}

TEST_CASE("link and shadow text formats") {
  const auto l = parse_hom_link(
      "# two components in a rank-2 manifold\n"
      "homlink r=2 n=2\n"
      "comp 1 h=1 -2 f=3\n"
      "comp 2 h=0 0 f=-1\n"
      "lk 1 2 4\n");
  CHECK(l.classes() == M::from_rows({{1, 0}, {-2, 0}}));
  CHECK(l.lk() == M::from_rows({{3, 4}, {4, -1}}));
  CHECK(parse_hom_link(format_hom_link(l)) == l);
  const auto r0 = parse_hom_link("homlink r=0 n=1\ncomp 1 h= f=2\n");
  CHECK(r0.lk() == M::from_rows({{2}}));
  CHECK(format_hom_link(r0) == "homlink r=0 n=1\ncomp 1 h= f=2\n");
  CHECK(parse_hom_link(format_hom_link(HomFramedLink::empty(3))) == HomFramedLink::empty(3));

  CHECK_THROWS_AS(parse_hom_link("homlink r=1 n=1\n"), KirbyError);
  CHECK_THROWS_AS(parse_hom_link("homlink r=1 n=1\ncomp 1 h=1 2 f=0\n"), KirbyError);
  CHECK_THROWS_AS(parse_hom_link("homlink r=1 n=2\ncomp 1 h=1 f=0\ncomp 2 h=1 f=0\nlk 2 1 3\n"), KirbyError);
  CHECK_THROWS_WITH_AS(parse_hom_link("homlink r=1 n=1\ncomp 1 h=1 f=0\nzz 1\n"), doctest::Contains("line 3"),
                       KirbyError);

  std::mt19937_64 rng(42);
  const auto sh = random_shadow(rng, 3, 2, 4);
  CHECK(parse_embedding_shadow(format_embedding_shadow(sh)) == sh);
  const auto z = zero_shadow(4, 0, 0);
  CHECK(parse_embedding_shadow(format_embedding_shadow(z)) == z);
  CHECK_THROWS_AS(parse_embedding_shadow("shadow g=1 r=1\nF\n1 1\n1\nlambda\n1 1\n0\n"), KirbyError);
  CHECK_THROWS_AS(parse_embedding_shadow("shadow g=2 r=1\nF\n1 2\n1 0\nlambda\n2 2\n0 1\n2 0\nmu\n2 0\n"),
                  KirbyError);

  for (const auto* cs : {&ihx_block(), &ihx_adm_block(), &lantern_k(), &lantern_kprime()})
    CHECK(parse_curve_system(format_curve_system(*cs)) == *cs);
}

TEST_CASE("compiled-in constants match the stored files and the encoded diagrams") {
  const std::string dir = KIRBY_TEST_DATA_DIR;
  for (const auto& d : figure_derivations()) {
    CAPTURE(d.constant);
    const std::string stored = read_file(dir + "/constants/" + d.constant + ".curves");
    CHECK(std::string(embedded_constant_text(d.constant)) == stored);
    const auto pd = parse_planar_diagram(read_file(dir + "/pd/" + d.pd_file));
    CHECK(format_curve_system(curve_system_from_pd(pd, d.strands)) == stored);
  }
  CHECK_THROWS_AS(embedded_constant_text("nope"), KirbyError);
  CHECK_THROWS_AS(curve_system_from_pd(PlanarDiagram(2), 3), KirbyError);
}
