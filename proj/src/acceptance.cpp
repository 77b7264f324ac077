#include "kirby/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "kirby/braidclasp.hpp"
#include "kirby/figures.hpp"
#include "kirby/fourman.hpp"
#include "kirby/h4.hpp"
#include "kirby/homlink.hpp"
#include "kirby/movecalc.hpp"
#include "kirby/pdcode.hpp"

namespace kirby {

namespace {

using Rng = std::mt19937_64;
using Details = std::vector<std::string>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KirbyError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntegerMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

IntegerMatrix random_symmetric(Rng& rng, std::size_t n, long lo, long hi) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = uniform(rng, lo, hi);
      m(j, i) = m(i, j);
    }
  return m;
}

MoveSequence random_sequence(Rng& rng, std::size_t n, std::size_t len) {
  std::vector<ElementaryMove> moves;
  for (std::size_t k = 0; k < len; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
    auto j = i;
    while (n > 1 && j == i) j = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
    const long kind = n == 1 ? 1 : uniform(rng, 0, 2);
    if (kind == 0) {
      moves.push_back(ElementaryMove::reorder(i, j));
    } else if (kind == 1) {
      moves.push_back(ElementaryMove::reorient(i));
    } else {
      moves.push_back(ElementaryMove::slide(i, j, uniform(rng, 0, 1) ? 1 : -1));
    }
  }
  return MoveSequence(n, std::move(moves));
}

// Applies the moves one congruence at a time.
IntegerMatrix stepwise_congruence(IntegerMatrix lk, const MoveSequence& s) {
  for (const auto& m : s.moves()) {
    const IntegerMatrix x = m.matrix(s.n());
    lk = x * lk * x.transpose();
  }
  return lk;
}

HomFramedLink random_link(Rng& rng, std::size_t r, std::size_t n) {
  return HomFramedLink(r, random_matrix(rng, r, n, -2, 2), random_symmetric(rng, n, -3, 3));
}

HomFramedLink random_admissible(Rng& rng, std::size_t r, std::size_t n) {
  std::vector<Integer> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(uniform(rng, 0, 1) ? 1 : -1);
  return HomFramedLink(r, IntegerMatrix(r, n), IntegerMatrix::diagonal(d));
}

EmbeddingShadow random_shadow(Rng& rng, std::size_t g, std::size_t r, std::size_t n) {
  return {random_matrix(rng, r, g, -2, 2), random_symmetric(rng, g, -2, 2), random_matrix(rng, g, n, -2, 2)};
}

std::vector<Integer> random_vector(Rng& rng, std::size_t r) {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < r; ++i) v.push_back(uniform(rng, -4, 4));
  return v;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

// ---------------------------------------------------------------------------

bool c1_d_word(Details& out) {
  const auto f = verify_d22();
  out.push_back("W-word product = " + format_matrix_inline(f.word_product));
  out.push_back(std::string("equals D_{2,2}: ") + (f.word_matches_d22 ? "yes" : "no") +
                ", in O(2,2;Z): " + (f.word_in_opq ? "yes" : "no"));
  out.push_back(std::string("variant with (1,1) = -1 in O(2,2;Z): ") + (f.variant_in_opq ? "yes" : "no") +
                ", its form = " + format_matrix_inline(f.variant_form));
  return f.word_matches_d22 && f.word_in_opq && !f.variant_in_opq;
}

bool c2_wall(Details& out) {
  std::size_t total = 0;
  bool ok = true;
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t q = 2; q <= 4; ++q) {
      const SignatureType sig{p, q};
      const IntegerMatrix form = ipq(sig);
      for (const auto& g : wall_generators(sig)) {
        ++total;
        if (g.matrix * form * g.matrix.transpose() != form) {
          ok = false;
          out.push_back("generator " + g.name + " fails for (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")");
        }
      }
    }
  out.insert(out.begin(), std::to_string(total) + " generators checked for 2 <= p,q <= 4");
  return ok;
}

bool c3_congruence(Details& out) {
  Rng rng(1003);
  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const IntegerMatrix lk = random_symmetric(rng, n, -5, 5);
    const auto s = random_sequence(rng, n, static_cast<std::size_t>(uniform(rng, 0, 20)));
    const IntegerMatrix f = phi(s);
    const IntegerMatrix got = evolve_lk(lk, s);
    if (got != f * lk * f.transpose() || got != stepwise_congruence(lk, s)) ++bad;
  }
  out.push_back("1000 random sequences, mismatches: " + std::to_string(bad));
  return bad == 0;
}

bool c4_reverse(Details& out) {
  Rng rng(1004);
  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto s = random_sequence(rng, n, static_cast<std::size_t>(uniform(rng, 0, 20)));
    if (phi(reverse(s)) * phi(s) != IntegerMatrix::identity(n)) ++bad;
  }
  out.push_back("1000 random sequences, failures: " + std::to_string(bad));
  return bad == 0;
}

bool c5_band_slides(Details& out) {
  Rng rng(1005);
  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 6));
    std::vector<ElementaryMove> moves;
    const long pairs = uniform(rng, 0, 10);
    for (long k = 0; k < pairs; ++k) {
      const auto i = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
      auto j = i;
      while (j == i) j = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
      const int first = uniform(rng, 0, 1) ? 1 : -1;
      moves.push_back(ElementaryMove::slide(i, j, first));
      moves.push_back(ElementaryMove::slide(i, j, -first));
    }
    if (!is_band_slide_realizable(MoveSequence(n, moves))) ++bad;
  }
  std::size_t singles = 0;
  std::size_t single_bad = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        for (int eps : {1, -1}) {
          if (i == j) continue;
          ++singles;
          if (is_band_slide_realizable(MoveSequence(n, {ElementaryMove::slide(i, j, eps)}))) ++single_bad;
        }
  out.push_back("1000 band-slide sequences with phi != I: " + std::to_string(bad));
  out.push_back(std::to_string(singles) + " single slides with phi = I: " + std::to_string(single_bad));
  return bad == 0 && single_bad == 0;
}

bool c6_bfs(Details& out) {
  const auto gens = slide_generators(4);
  const IntegerMatrix target = d_pq({2, 2});
  const auto word = bfs_decompose_opq(target, {2, 2}, gens, SearchLimits{8, 64});
  if (!word) {
    out.push_back("no word of length <= 8 found");
    return false;
  }
  std::string names;
  for (auto k : *word) names += (names.empty() ? "" : ", ") + gens[k].name;
  const bool ok = evaluate_word(*word, gens, 4) == target && word->size() <= 8;
  out.push_back("word of length " + std::to_string(word->size()) + " (bound 8), applied in order: " + names);
  out.push_back(std::string("product re-verified: ") + (ok ? "yes" : "no"));
  return ok;
}

bool c7_snf(Details& out) {
  Rng rng(1007);
  std::size_t bad = 0;
  for (int t = 0; t < 500; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(uniform(rng, 1, 6));
    const IntegerMatrix a = random_matrix(rng, r, c, -10, 10);
    const auto d = smith_normal_form(a);
    bool ok = d.u * a * d.v == d.s && is_unimodular(d.u) && is_unimodular(d.v) && d.verify(a);
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && d.s(i, j) != 0) ok = false;
    const auto f = d.invariant_factors();
    for (std::size_t k = 0; k < f.size() && ok; ++k) {
      if (f[k] < 0) ok = false;
      if (k + 1 < f.size() && f[k] != 0 && f[k + 1] % f[k] != 0) ok = false;
      if (k + 1 < f.size() && f[k] == 0 && f[k + 1] != 0) ok = false;
    }
    if (!ok) ++bad;
  }
  out.push_back("500 random matrices, law violations: " + std::to_string(bad));
  return bad == 0;
}

bool c8_surgery(Details& out) {
  Rng rng(1008);
  std::size_t bad = 0;
  std::size_t checks = 0;
  for (int t = 0; t < 500; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 0, 5));
    const auto n = static_cast<std::size_t>(uniform(rng, 0, 8));
    const auto l = random_link(rng, r, n);
    const AbelianGroup h = h1_of_surgery(l);
    std::vector<HomFramedLink> moved = {stabilize(l, uniform(rng, 0, 1) ? 1 : -1), pair_add(l),
                                        k3_add(l, uniform(rng, -3, 3), random_vector(rng, n)),
                                        ihx_add(l, random_shadow(rng, 4, r, n))};
    if (n >= 2) {
      const auto i = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
      auto j = i;
      while (j == i) j = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
      moved.push_back(handle_slide(handle_slide(l, i, j, 1), i, j, -1));
    }
    for (const auto& m : moved) {
      ++checks;
      if (h1_of_surgery(m) != h) ++bad;
    }
    const auto adm = random_admissible(rng, r, n);
    ++checks;
    if (h1_of_surgery(admissible_ihx_add(adm, random_shadow(rng, 4, r, n))) != h1_of_surgery(adm)) ++bad;
  }
  out.push_back(std::to_string(checks) + " move applications over 500 random links, H_1 changes: " +
                std::to_string(bad));
  return bad == 0;
}

bool c9_eta(Details& out) {
  std::size_t bad = 0;
  std::size_t basis = 0;
  for (std::size_t r = 4; r <= 7; ++r)
    for (std::size_t a = 1; a <= r; ++a)
      for (std::size_t b = a + 1; b <= r; ++b)
        for (std::size_t c = b + 1; c <= r; ++c)
          for (std::size_t d = c + 1; d <= r; ++d) {
            EmbeddingShadow sh{IntegerMatrix(r, 4), IntegerMatrix(4, 4), IntegerMatrix(4, 0)};
            const std::size_t cols[4] = {a, b, c, d};
            for (std::size_t j = 0; j < 4; ++j) sh.f(cols[j] - 1, j) = 1;
            const auto e = eta_of_ihx(sh);
            const auto unit = Wedge4Class::basis(r, {a, b, c, d});
            ++basis;
            if (e != unit && e != negate(unit)) ++bad;
          }
  Rng rng(1009);
  std::size_t law_bad = 0;
  for (int t = 0; t < 300; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 4, 7));
    const auto y1 = random_vector(rng, r), y2 = random_vector(rng, r), y3 = random_vector(rng, r),
               y4 = random_vector(rng, r), e = random_vector(rng, r);
    auto sum = y1;
    for (std::size_t i = 0; i < r; ++i) sum[i] += e[i];
    if (wedge4(sum, y2, y3, y4) != wedge4(y1, y2, y3, y4) + wedge4(e, y2, y3, y4)) ++law_bad;
    if (wedge4(y2, y1, y3, y4) != negate(wedge4(y1, y2, y3, y4))) ++law_bad;
    if (!wedge4(y1, y2, y1, y4).is_zero()) ++law_bad;
  }
  std::size_t small_bad = 0;
  for (int t = 0; t < 100; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 0, 3));
    if (!wedge4(random_vector(rng, r), random_vector(rng, r), random_vector(rng, r), random_vector(rng, r)).is_zero() ||
        wedge4_rank(r) != 0) {
      ++small_bad;
    }
  }
  out.push_back(std::to_string(basis) + " coordinate embeddings (r = 4..7), not +-basis: " + std::to_string(bad));
  out.push_back("multilinear/alternating violations: " + std::to_string(law_bad) +
                ", nonzero classes for r < 4: " + std::to_string(small_bad));
  return bad == 0 && law_bad == 0 && small_bad == 0;
}

bool c10_plan(Details& out) {
  Rng rng(1010);
  std::size_t bad = 0;
  std::size_t moves = 0;
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 0, 6));
    Wedge4Class target(r);
    if (r >= 4) {
      for (int k = 0; k < 5; ++k) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 1; i <= r; ++i) idx.push_back(i);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::sort(idx.begin(), idx.begin() + 4);
        target.add_term({idx[0], idx[1], idx[2], idx[3]}, uniform(rng, -4, 4));
      }
    }
    const auto plan = plan_cancellation(target);
    moves += plan.size();
    if (!(plan_total(plan, r) + target).is_zero()) ++bad;
  }
  out.push_back("200 random targets (" + std::to_string(moves) + " planned moves), sums != -target: " +
                std::to_string(bad));
  return bad == 0;
}

bool c11_t4(const std::string& data_dir, Details& out) {
  const auto sk = parse_kirby_skeleton(read_file(data_dir + "/kirby/ihx1.kirby4"));
  const auto h = closed4_homology(sk);
  const bool d2 = boundary2(sk).is_zero();
  const AbelianGroup ab = pi1_abelianization(sk);
  std::string groups;
  for (const auto& g : h) groups += (groups.empty() ? "" : ", ") + g.to_string();
  out.push_back("boundary2 zero: " + std::string(d2 ? "yes" : "no") + ", pi_1 abelianized: " + ab.to_string() +
                ", chi = " + std::to_string(sk.euler_characteristic()));
  out.push_back("H_0..H_4 = (" + groups + ")");
  return d2 && ab == free_abelian(4) && sk.euler_characteristic() == 0 && h[0] == free_abelian(1) &&
         h[1] == free_abelian(4) && h[2] == free_abelian(6) && h[3] == free_abelian(4) && h[4] == free_abelian(1);
}

bool c12_braids(const std::string& data_dir, Details& out) {
  const auto beta1 = parse_braid_word(read_file(data_dir + "/braids/beta1.braid"));
  const auto alpha = parse_braid_word(read_file(data_dir + "/braids/alpha.braid"));
  const bool ihx = verify_ihx_braid_identity(beta1, alpha);
  const bool left = verify_witt_hall(Conjugation::InverseLeft);
  const bool right = verify_witt_hall(Conjugation::InverseRight);
  const bool frozen = verify_witt_hall(kWittHallConvention);

  Rng rng(1012);
  std::size_t bad = 0;
  for (std::size_t s = 3; s <= 6; ++s)
    for (int i = 1; i + 1 < static_cast<int>(s); ++i) {
      if (artin_action(BraidWord(s, {i, i + 1, i})) != artin_action(BraidWord(s, {i + 1, i, i + 1}))) ++bad;
      for (int j = i + 2; j < static_cast<int>(s); ++j)
        if (artin_action(BraidWord(s, {i, j})) != artin_action(BraidWord(s, {j, i}))) ++bad;
    }
  for (int t = 0; t < 200; ++t) {
    const auto s = static_cast<std::size_t>(uniform(rng, 2, 5));
    std::vector<int> a, b;
    for (long k = uniform(rng, 0, 30); k > 0; --k) a.push_back(static_cast<int>(uniform(rng, 1, static_cast<long>(s) - 1)) * (uniform(rng, 0, 1) ? 1 : -1));
    for (long k = uniform(rng, 0, 30); k > 0; --k) b.push_back(static_cast<int>(uniform(rng, 1, static_cast<long>(s) - 1)) * (uniform(rng, 0, 1) ? 1 : -1));
    const BraidWord ba(s, a), bb(s, b);
    if (artin_action(ba * bb) != compose(artin_action(ba), artin_action(bb))) ++bad;
  }
  out.push_back(std::string("beta1 * alpha^2 beta1 alpha^-2 * alpha beta1 alpha^-1 trivial: ") + (ihx ? "yes" : "no") +
                " (beta1 has " + std::to_string(beta1.length()) + " letters)");
  out.push_back(std::string("Witt-Hall: g^-1 a g ") + (left ? "holds" : "fails") + ", g a g^-1 " +
                (right ? "holds" : "fails"));
  out.push_back("braid relation and homomorphism violations: " + std::to_string(bad));
  return ihx && (left != right) && frozen && bad == 0;
}

bool c13_lantern(Details& out) {
  const auto& k = lantern_k();
  const auto& kp = lantern_kprime();
  Rng rng(1013);
  std::size_t random_mismatch = 0;
  std::size_t h1_mismatch = 0;
  std::string example;
  auto compare = [&](const HomFramedLink& l, const EmbeddingShadow& sh) {
    const auto a = transport(k, sh, l);
    const auto b = transport(kp, sh, l);
    const bool ka = is_admissible(a);
    const bool kb = is_admissible(b);
    if (ka && kb && h1_of_surgery(a) != h1_of_surgery(b)) ++h1_mismatch;
    if (ka != kb && example.empty()) {
      example = "lambda = " + format_matrix_inline(sh.lambda) + ", mu = " + format_matrix_inline(sh.mu) +
                ": L+f(K) " + (ka ? "admissible" : "not admissible") + ", L+f(K') " +
                (kb ? "admissible" : "not admissible");
    }
    return ka == kb;
  };
  // F f(c) = 0 for every curve forces F = 0: the classes of either side span
  // a rank-3 sublattice of H_1(V_3).
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto n = static_cast<std::size_t>(uniform(rng, 0, 4));
    const auto l = random_admissible(rng, r, n);
    EmbeddingShadow sh{IntegerMatrix(r, 3), random_symmetric(rng, 3, -1, 1),
                       uniform(rng, 0, 1) ? IntegerMatrix(3, n) : random_matrix(rng, 3, n, -1, 1)};
    if (!compare(l, sh)) ++random_mismatch;
  }
  std::size_t sweep_mismatch = 0;
  std::size_t sweep = 0;
  const long vals[3] = {-1, 0, 1};
  for (long a : vals)
    for (long b : vals)
      for (long c : vals)
        for (long d : vals)
          for (long e : vals)
            for (long f : vals) {
              ++sweep;
              const EmbeddingShadow sh{IntegerMatrix(0, 3), IntegerMatrix::from_rows({{a, d, e}, {d, b, f}, {e, f, c}}),
                                       IntegerMatrix(3, 0)};
              if (!compare(HomFramedLink::empty(0), sh)) ++sweep_mismatch;
            }
  out.push_back("random shadows (200): admissibility differs in " + std::to_string(random_mismatch));
  out.push_back("sweep over lambda in {-1,0,1}^6 with mu = 0 (" + std::to_string(sweep) +
                "): differs in " + std::to_string(sweep_mismatch));
  out.push_back("both admissible but H_1 differs: " + std::to_string(h1_mismatch));
  if (!example.empty()) out.push_back("example: " + example);
  return random_mismatch == 0 && sweep_mismatch == 0 && h1_mismatch == 0;
}

bool c14_provenance(const std::string& data_dir, Details& out) {
  bool ok = true;
  for (const auto& d : figure_derivations()) {
    const auto pd = parse_planar_diagram(read_file(data_dir + "/pd/" + d.pd_file));
    const std::string derived = format_curve_system(curve_system_from_pd(pd, d.strands));
    const std::string stored = read_file(data_dir + "/constants/" + d.constant + ".curves");
    const bool same = derived == stored && std::string(embedded_constant_text(d.constant)) == stored;
    ok = ok && same;
    out.push_back(d.pd_file + " -> " + d.constant + ": " + (same ? "matches" : "DIFFERS"));
  }
  // The admissible associated link is diagonal +-1 with zero classes, and
  // follows from the two-component one by a stabilization and four slides.
  const auto adm = parse_curve_system(read_file(data_dir + "/constants/y2_assoc_b.curves"));
  bool cert = adm.classes.is_zero() && adm.internal_lk.is_diagonal();
  for (std::size_t k = 0; k < adm.m() && cert; ++k)
    if (abs(adm.internal_lk(k, k)) != 1) cert = false;
  const auto lt = parse_curve_system(read_file(data_dir + "/constants/y2_assoc_a.curves"));
  auto l = transport(lt, {IntegerMatrix(0, 4), IntegerMatrix(4, 4), IntegerMatrix(4, 0)}, HomFramedLink::empty(0));
  l = stabilize(l, 1);
  l = handle_slide(l, 1, 3, 1);
  l = handle_slide(l, 2, 3, -1);
  l = handle_slide(l, 3, 1, -1);
  l = handle_slide(l, 3, 2, 1);
  const IntegerMatrix p = p_ij(3, 2, 3);
  const bool moves = p * l.lk() * p == adm.internal_lk;
  out.push_back("admissible associated link diagonal +-1: " + std::string(cert ? "yes" : "no") +
                ", reached from the 2-component link by moves: " + (moves ? "yes" : "no"));
  return ok && cert && moves;
}

struct Criterion {
  const char* title;
  double limit;
  std::function<bool(const std::string&, Details&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {"D-word identity", 1, [](const std::string&, Details& d) { return c1_d_word(d); }},
      {"Wall generators preserve I_{p,q}", 1, [](const std::string&, Details& d) { return c2_wall(d); }},
      {"linking congruence", 10, [](const std::string&, Details& d) { return c3_congruence(d); }},
      {"reverse law", 10, [](const std::string&, Details& d) { return c4_reverse(d); }},
      {"band-slide criterion", 5, [](const std::string&, Details& d) { return c5_band_slides(d); }},
      {"BFS decomposition of D_{2,2}", 60, [](const std::string&, Details& d) { return c6_bfs(d); }},
      {"Smith normal form laws", 10, [](const std::string&, Details& d) { return c7_snf(d); }},
      {"surgery H_1 invariance", 30, [](const std::string&, Details& d) { return c8_surgery(d); }},
      {"IHX classes in H_4", 5, [](const std::string&, Details& d) { return c9_eta(d); }},
      {"cancellation planner", 5, [](const std::string&, Details& d) { return c10_plan(d); }},
      {"T^4 homology certificate", 1, c11_t4},
      {"braid certificates", 5, c12_braids},
      {"lantern admissibility equivalence", 10, [](const std::string&, Details& d) { return c13_lantern(d); }},
      {"figure-constant provenance", 5, c14_provenance},
  };
  return table;
}

}  // namespace

D22Finding verify_d22() {
  D22Finding f;
  const std::size_t n = 4;
  f.word_product = w_ij(n, 2, 1, -1) * w_ij(n, 3, 1, -1) * w_ij(n, 2, 4, 1) * w_ij(n, 3, 4, 1) *
                   w_ij(n, 4, 3, -1) * w_ij(n, 1, 3, -1) * w_ij(n, 4, 2, 1) * w_ij(n, 1, 2, 1);
  f.word_matches_d22 = f.word_product == d_pq({2, 2});
  f.word_in_opq = is_in_opq(f.word_product, {2, 2});
  f.variant = IntegerMatrix::from_rows({{-1, 1, -1, 0}, {-1, 1, 0, 1}, {-1, 0, 1, 1}, {0, 1, -1, 1}});
  f.variant_in_opq = is_in_opq(f.variant, {2, 2});
  f.variant_form = f.variant * ipq({2, 2}) * f.variant.transpose();
  return f;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw KirbyError("no criterion " + std::to_string(id));
  const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit_seconds = c.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.check_passed = c.run(opts.data_dir, r.details);
  } catch (const std::exception& e) {
    r.check_passed = false;
    r.details.insert(r.details.begin(), std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> results(kCriterionCount);
  if (opts.jobs <= 1) {
    for (int id = 1; id <= kCriterionCount; ++id) results[static_cast<std::size_t>(id - 1)] = run_criterion(id, opts);
    return results;
  }
  // Checks are independent; run them in waves of `jobs`.
  for (int first = 1; first <= kCriterionCount; first += static_cast<int>(opts.jobs)) {
    std::vector<std::future<CriterionResult>> wave;
    for (int id = first; id < first + static_cast<int>(opts.jobs) && id <= kCriterionCount; ++id)
      wave.push_back(std::async(std::launch::async, run_criterion, id, std::cref(opts)));
    for (auto& f : wave) {
      auto r = f.get();
      results[static_cast<std::size_t>(r.id - 1)] = std::move(r);
    }
  }
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  std::string line = std::string(r.passed() ? "PASS" : "FAIL") + " " + (r.id < 10 ? " " : "") + std::to_string(r.id) +
                     " " + r.title + " (" + fmt_seconds(r.seconds) + "s, limit " + fmt_seconds(r.limit_seconds) + "s)";
  if (r.check_passed && !r.passed()) line += ": time limit exceeded";
  if (!r.details.empty()) line += ": " + r.details.front();
  return line;
}

std::string default_data_dir() { return KIRBY_DEFAULT_DATA_DIR; }

}  // namespace kirby
