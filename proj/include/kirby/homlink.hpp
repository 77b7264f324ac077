#pragma once

// Homological shadows of framed links in a 3-manifold M with H_1(M) = Z^r
// free abelian, and the moves of the calculus acting on them.
//
// A shadow records, per component, its class in H_1(M) and the linking
// matrix (framings on the diagonal). Pair-moves and K3-moves change the
// fundamental-group data of a link without changing these classes; that
// information is not visible here.
//
// Components are numbered 1..n in every public function.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "kirby/intmat.hpp"

namespace kirby {

class HomFramedLink {
 public:
  /// `classes` is r x n: column k holds the class of component k+1.
  HomFramedLink(std::size_t r, IntegerMatrix classes, IntegerMatrix lk);
  static HomFramedLink empty(std::size_t r);

  std::size_t r() const noexcept { return r_; }
  std::size_t n() const noexcept { return lk_.rows(); }
  const IntegerMatrix& classes() const noexcept { return classes_; }
  const IntegerMatrix& lk() const noexcept { return lk_; }
  std::vector<Integer> class_of(std::size_t i) const;

  friend bool operator==(const HomFramedLink&, const HomFramedLink&) = default;

 private:
  std::size_t r_;
  IntegerMatrix classes_;
  IntegerMatrix lk_;
};

/// Shadow of an embedding f of the genus-g handlebody V_g into the link
/// complement.
struct EmbeddingShadow {
  IntegerMatrix f;       // r x g: images of the handle generators in H_1(M)
  IntegerMatrix lambda;  // g x g symmetric: linking of pushed-off handle cores
  IntegerMatrix mu;      // g x n: linking of handle cores with the link

  std::size_t g() const noexcept { return lambda.rows(); }
  std::size_t r() const noexcept { return f.rows(); }
  /// Throws unless the blocks have consistent sizes and lambda is symmetric.
  void validate() const;

  friend bool operator==(const EmbeddingShadow&, const EmbeddingShadow&) = default;
};

/// Framed curves inside V_g, with linking and framings measured in the
/// cylinder.
struct CurveSystemShadow {
  IntegerMatrix classes;      // g x m: column k is the class of curve k+1 in H_1(V_g)
  IntegerMatrix internal_lk;  // m x m symmetric

  std::size_t g() const noexcept { return classes.rows(); }
  std::size_t m() const noexcept { return internal_lk.rows(); }
  void validate() const;

  friend bool operator==(const CurveSystemShadow&, const CurveSystemShadow&) = default;
};

/// Appends f(cs) to L.
HomFramedLink transport(const CurveSystemShadow& cs, const EmbeddingShadow& sh, const HomFramedLink& l);

/// Appends an isolated unknot with framing `sign`.
HomFramedLink stabilize(const HomFramedLink& l, int sign);
/// Removes an isolated +-1-framed, null-homologous component.
HomFramedLink destabilize(const HomFramedLink& l, std::size_t i);

/// Slides component i over component j.
HomFramedLink handle_slide(const HomFramedLink& l, std::size_t i, std::size_t j, int eps);

/// Appends a null-homologous K with the given framing and linking row, and
/// its 0-framed meridian K'.
HomFramedLink k3_add(const HomFramedLink& l, const Integer& framing, const std::vector<Integer>& lk_row);
/// Removes K = i together with its meridian K' = j.
HomFramedLink k3_remove(const HomFramedLink& l, std::size_t i, std::size_t j);

/// Appends a parallel pair with framings +1 and -1 and no linking.
HomFramedLink pair_add(const HomFramedLink& l);
/// Removes such a pair; i is the +1 component, j the -1 component.
HomFramedLink pair_remove(const HomFramedLink& l, std::size_t i, std::size_t j);

/// Appends the six-component IHX block under a genus-4 shadow.
HomFramedLink ihx_add(const HomFramedLink& l, const EmbeddingShadow& sh);
/// Appends the nine-component admissible IHX block; L must be admissible.
HomFramedLink admissible_ihx_add(const HomFramedLink& l, const EmbeddingShadow& sh);

enum class LanternDirection { KToKPrime, KPrimeToK };

/// `block` lists, in curve order, the components forming f(K) (or f(K')).
/// They are removed, and f of the other side is appended after the
/// remaining components. `sh.mu` refers to the remaining components.
HomFramedLink lantern_swap(const HomFramedLink& l, const std::vector<std::size_t>& block,
                           const EmbeddingShadow& sh, LanternDirection direction);

/// Z^(r+n) modulo, for each component, its class plus its linking row.
AbelianGroup h1_of_surgery(const HomFramedLink& l);

bool is_z_null(const HomFramedLink& l);
/// Same as is_z_null: H_1(M) has no torsion.
bool is_q_null(const HomFramedLink& l);
bool is_admissible(const HomFramedLink& l);

/// L with the listed components deleted (others keep their order).
HomFramedLink remove_components(const HomFramedLink& l, std::vector<std::size_t> indices);

// Link file:
//   homlink r=<r> n=<n>
//   comp <i> h=<r ints> f=<int>
//   lk <i> <j> <int>            (i < j; absent pairs are 0)
HomFramedLink parse_hom_link(std::istream& in);
HomFramedLink parse_hom_link(const std::string& text);
std::string format_hom_link(const HomFramedLink& l);

// Shadow file: `shadow g=<g> r=<r>`, then `F`, `lambda` and `mu` each
// followed by a matrix.
EmbeddingShadow parse_embedding_shadow(std::istream& in);
EmbeddingShadow parse_embedding_shadow(const std::string& text);
std::string format_embedding_shadow(const EmbeddingShadow& sh);

// Curve file:
//   curves g=<g> m=<m>
//   curve <k> c=<g ints> f=<int>
//   lk <k> <l> <int>            (k < l; absent pairs are 0)
CurveSystemShadow parse_curve_system(std::istream& in);
CurveSystemShadow parse_curve_system(const std::string& text);
std::string format_curve_system(const CurveSystemShadow& cs);

}  // namespace kirby
