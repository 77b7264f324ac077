#pragma once

// Chain-level invariants of a closed 4-manifold given by a Kirby diagram
// skeleton: one 0-handle, dotted circles for 1-handles, 2-handles recorded
// by the signed passages of their attaching circles through the dotted
// circles, and counts of 3- and 4-handles.
//
// No 3-handle attaching data is given, so H_2, H_3 and H_4 come from
// Poincare duality; the answer is only meaningful for closed orientable
// manifolds.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "kirby/braidclasp.hpp"
#include "kirby/intmat.hpp"

namespace kirby {

class KirbySkeleton {
 public:
  /// `words` has one entry per 2-handle, over h[1] generators.
  KirbySkeleton(std::array<std::size_t, 5> handles, std::vector<FreeWord> words);

  const std::array<std::size_t, 5>& handles() const noexcept { return h_; }
  const std::vector<FreeWord>& words() const noexcept { return words_; }
  long euler_characteristic() const;

 private:
  std::array<std::size_t, 5> h_;
  std::vector<FreeWord> words_;
};

/// h1 x h2 matrix of exponent sums.
IntegerMatrix boundary2(const KirbySkeleton& sk);

/// Z^h1 modulo the abelianized attaching words.
AbelianGroup pi1_abelianization(const KirbySkeleton& sk);

/// H_0 .. H_4. Throws unless h0 = h4 = 1 and the counts admit a closed
/// orientable manifold with this H_1.
std::array<AbelianGroup, 5> closed4_homology(const KirbySkeleton& sk);

// Text format: `kirby4 h=<h0> <h1> <h2> <h3> <h4>`, then one `rel <letters>`
// line per 2-handle.
KirbySkeleton parse_kirby_skeleton(std::istream& in);
KirbySkeleton parse_kirby_skeleton(const std::string& text);
std::string format_kirby_skeleton(const KirbySkeleton& sk);

}  // namespace kirby
