#pragma once

// H_4(Z^r) as the fourth exterior power of Z^r, and the classes that
// IHX-moves contribute there.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kirby/homlink.hpp"
#include "kirby/intmat.hpp"

namespace kirby {

/// Orientation constant multiplying every IHX class; the orientation of the
/// four-torus is not pinned down, so this is a convention.
inline constexpr int kIhxEtaSign = 1;

class Wedge4Class {
 public:
  /// Strictly increasing, 1-based.
  using Subset = std::array<std::size_t, 4>;

  explicit Wedge4Class(std::size_t r) : r_(r) {}
  static Wedge4Class basis(std::size_t r, Subset s);

  std::size_t r() const noexcept { return r_; }
  /// Only nonzero coefficients are stored.
  const std::map<Subset, Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coefficient(const Subset& s) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Wedge4Class& add_term(const Subset& s, const Integer& v);

  friend bool operator==(const Wedge4Class&, const Wedge4Class&) = default;

 private:
  std::size_t r_;
  std::map<Subset, Integer> coeffs_;
};

Wedge4Class add(const Wedge4Class& a, const Wedge4Class& b);
Wedge4Class negate(const Wedge4Class& a);
Wedge4Class operator+(const Wedge4Class& a, const Wedge4Class& b);
Wedge4Class operator-(const Wedge4Class& a);

/// y1 ^ y2 ^ y3 ^ y4: the coefficient on {i1<i2<i3<i4} is the 4x4 minor on
/// those rows.
Wedge4Class wedge4(const std::vector<Integer>& y1, const std::vector<Integer>& y2,
                   const std::vector<Integer>& y3, const std::vector<Integer>& y4);

/// Number of basis subsets, C(r, 4).
std::size_t wedge4_rank(std::size_t r);

/// sign * (wedge of the columns of F).
Wedge4Class eta_of_ihx(const EmbeddingShadow& sh, int sign = kIhxEtaSign);

struct PlannedIhx {
  EmbeddingShadow shadow;
  int sign;
};

/// IHX-moves on coordinate embeddings whose classes sum to -target; one move
/// per unit of each coefficient.
std::vector<PlannedIhx> plan_cancellation(const Wedge4Class& target);

/// Sum of eta_of_ihx over a plan.
Wedge4Class plan_total(const std::vector<PlannedIhx>& plan, std::size_t r);

// Text format: header `wedge4 r=<r>`, then `coef i1 i2 i3 i4 <int>` lines.
Wedge4Class parse_wedge4(std::istream& in);
Wedge4Class parse_wedge4(const std::string& text);
std::string format_wedge4(const Wedge4Class& c);

}  // namespace kirby
