#pragma once

// Sequences of elementary moves on ordered, oriented framed links and the
// functor phi into GL(n;Z).
//
// Composition order: a sequence x_1, x_2, ..., x_k (x_1 applied first) maps
// to phi = X_k * ... * X_2 * X_1. The first move is the right-most factor.
//
// Slide(i, j, eps) slides component i over component j; its matrix
// W_{i,j}^eps = I + eps E_{i,j} adds eps * row j to row i. Worked example on
// two components with Lk = diag(1, -1):
//
//   Slide(1, 2, +1):  W = [[1,1],[0,1]],  W Lk W^t = [[0,-1],[-1,-1]].
//
// Component 1 picks up the framing of component 2 (1 + (-1) = 0) and now
// links it with -1.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kirby/intmat.hpp"

namespace kirby {

struct ElementaryMove {
  enum class Kind { Reorder, Reorient, Slide };

  Kind kind = Kind::Reorient;
  std::size_t i = 1;  // 1-based
  std::size_t j = 0;  // unused for Reorient
  int eps = 1;        // Slide only

  static ElementaryMove reorder(std::size_t i, std::size_t j) { return {Kind::Reorder, i, j, 1}; }
  static ElementaryMove reorient(std::size_t i) { return {Kind::Reorient, i, 0, 1}; }
  static ElementaryMove slide(std::size_t i, std::size_t j, int eps) {
    return {Kind::Slide, i, j, eps};
  }

  /// Matrix of the move on n components.
  IntegerMatrix matrix(std::size_t n) const;
  ElementaryMove inverse() const;
  std::string to_string() const;

  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

class MoveSequence {
 public:
  explicit MoveSequence(std::size_t n, std::vector<ElementaryMove> moves = {});

  std::size_t n() const noexcept { return n_; }
  const std::vector<ElementaryMove>& moves() const noexcept { return moves_; }
  std::size_t size() const noexcept { return moves_.size(); }

  /// This sequence followed by `next`.
  MoveSequence then(const MoveSequence& next) const;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;

 private:
  std::size_t n_;
  std::vector<ElementaryMove> moves_;
};

IntegerMatrix phi(const MoveSequence& s);

/// Reverse sequence: moves in opposite order, slide signs negated.
MoveSequence reverse(const MoveSequence& s);

/// phi(S) * Lk * phi(S)^t for a symmetric Lk.
IntegerMatrix evolve_lk(const IntegerMatrix& lk, const MoveSequence& s);

/// phi(S) == I: the hypothesis under which the two ends are related by band-slides.
bool is_band_slide_realizable(const MoveSequence& s);

/// (p,q) when lk == I_{p,q} exactly.
std::optional<SignatureType> admissible_type(const IntegerMatrix& lk);

/// For a diagonal +-1 matrix: Reorder moves that bring every +1 first, and
/// the resulting type.
std::optional<std::pair<MoveSequence, SignatureType>> normalize_admissible(const IntegerMatrix& lk);

struct DSlots {
  std::size_t a1, a2, b1, b2;
};

/// The eight slides realizing D_{2,2} (eps = +1) or its inverse (eps = -1),
/// with abstract indices 1,2,3,4 placed on a1,a2,b1,b2.
MoveSequence expand_d_move(std::size_t n, DSlots slots, int eps);

// Text format: header `n <count>`, then one move per line:
//   P i j | Q i | W+ i j | W- i j | BS i j | D+ a1 a2 b1 b2 | D- a1 a2 b1 b2
// Lines starting with # are comments. Macros are expanded on parsing.
MoveSequence parse_move_sequence(std::istream& in);
MoveSequence parse_move_sequence(const std::string& text);
std::string format_move_sequence(const MoveSequence& s);

}  // namespace kirby
