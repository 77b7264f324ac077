#pragma once

// Free-group words, Artin's action of the braid group on the free group, and
// the braid identities behind the IHX relation.
//
// Letters are signed generator indices: +k for x_k, -k for its inverse.
//
// Braid composition: stacking b on top of b' is the word b followed by b'.
// On two strands:
//
//   sigma_1 stacked on sigma_1   ->  word (1, 1)
//   action: x1 -> (x1 x2) x1 (x1 x2)^-1,  x2 -> x1 x2 x1^-1
//
// and action(b b') = action(b) o action(b'), with
//   sigma_i:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "kirby/intmat.hpp"

namespace kirby {

class FreeWord {
 public:
  explicit FreeWord(std::size_t generators, std::vector<int> letters = {});
  static FreeWord generator(std::size_t generators, int letter);

  std::size_t generators() const noexcept { return n_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::size_t n_;
  std::vector<int> letters_;
};

/// Concatenation, without reduction.
FreeWord operator*(const FreeWord& a, const FreeWord& b);

FreeWord free_reduce(const FreeWord& w);

/// [a, b] = a b a^-1 b^-1, reduced.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

enum class Conjugation {
  InverseLeft,  // a^g = g^-1 a g
  InverseRight  // a^g = g a g^-1
};

/// The convention under which the three-term Witt-Hall product collapses;
/// fixed by the free-reduction check in the test suite.
inline constexpr Conjugation kWittHallConvention = Conjugation::InverseLeft;

FreeWord conjugate(const FreeWord& a, const FreeWord& g, Conjugation convention);

/// [z,[y^-1,x]]^(y^-1) [y,[x^-1,z]]^(x^-1) [x,[z^-1,y]]^(z^-1), reduced.
FreeWord witt_hall_product(const FreeWord& x, const FreeWord& y, const FreeWord& z, Conjugation convention);

/// witt_hall_product on the free generators of F_3 reduces to the empty word.
bool verify_witt_hall(Conjugation convention);

class FreeAutomorphism {
 public:
  static FreeAutomorphism identity(std::size_t n);
  explicit FreeAutomorphism(std::vector<FreeWord> images);

  std::size_t generators() const noexcept { return images_.size(); }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  /// Image of a word, reduced.
  FreeWord apply(const FreeWord& w) const;
  bool is_identity() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// (f o g)(w) = f(g(w)).
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);

class BraidWord {
 public:
  explicit BraidWord(std::size_t strands, std::vector<int> letters = {});

  std::size_t strands() const noexcept { return s_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t s_;
  std::vector<int> letters_;
};

/// b stacked on top of b'.
BraidWord operator*(const BraidWord& b, const BraidWord& bp);

FreeAutomorphism artin_action(const BraidWord& b);
bool braid_is_trivial(const BraidWord& b);

/// Strand permutation: entry k is where the strand starting at position k+1 ends.
std::vector<std::size_t> induced_permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

/// A_{i,j} = (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1 ... sigma_{j-1}^-1).
BraidWord pure_braid_generator(std::size_t i, std::size_t j, std::size_t strands);

/// Replaces each generator x_k of a free word by braids[k-1].
BraidWord substitute(const FreeWord& w, const std::vector<BraidWord>& braids);

/// beta1 * alpha^2 beta1 alpha^-2 * alpha beta1 alpha^-1 is trivial.
bool verify_ihx_braid_identity(const BraidWord& beta1, const BraidWord& alpha);

// Text formats: header `braid s=<strands>` or `free n=<generators>`, then
// whitespace-separated signed integers over any number of lines.
BraidWord parse_braid_word(std::istream& in);
BraidWord parse_braid_word(const std::string& text);
std::string format_braid_word(const BraidWord& b);
FreeWord parse_free_word(std::istream& in);
FreeWord parse_free_word(const std::string& text);
std::string format_free_word(const FreeWord& w);

std::string to_string(const FreeWord& w);

}  // namespace kirby
