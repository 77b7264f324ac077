#pragma once

// Exact integer matrices, Smith normal form, and the integral orthogonal
// groups O(p,q;Z) = { T : T I_{p,q} T^t = I_{p,q} }.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kirby {

using Integer = mpz_class;

/// Raised on malformed input or a violated precondition.
class KirbyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  // 0-based access.
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const;

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntegerMatrix transpose() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  bool is_zero() const;

  /// Largest absolute value of any entry (0 for an empty matrix).
  Integer max_abs() const;

  /// Canonical byte encoding of the entries (dimensions included); used as a
  /// hash key by the word search.
  std::string key() const;

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a);

/// Block sum a (+) b.
IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b);

Integer determinant(const IntegerMatrix& a);
bool is_unimodular(const IntegerMatrix& a);

/// Exact inverse of a unimodular matrix; anything else is an error.
IntegerMatrix unimodular_inverse(const IntegerMatrix& a);

// Elementary matrices, 1-based indices as in the move calculus.
IntegerMatrix e_ij(std::size_t n, std::size_t i, std::size_t j);
IntegerMatrix p_ij(std::size_t n, std::size_t i, std::size_t j);
IntegerMatrix q_i(std::size_t n, std::size_t i);
IntegerMatrix w_ij(std::size_t n, std::size_t i, std::size_t j, int eps);

// ---------------------------------------------------------------------------
// Smith normal form and abelian groups

/// U * A * V = S with U, V unimodular and S = diag(d_1, d_2, ...) where
/// d_i >= 0 and d_i | d_{i+1}.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix s;
  IntegerMatrix v;
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;

  std::vector<Integer> invariant_factors() const;
  /// Re-checks every invariant against the source matrix.
  bool verify(const IntegerMatrix& source) const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each divides the next

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup free_abelian(std::size_t rank);

/// Cokernel Z^rows / A Z^cols of A acting on column vectors.
AbelianGroup cokernel(const IntegerMatrix& a);

// ---------------------------------------------------------------------------
// Indefinite orthogonal groups

struct SignatureType {
  std::size_t p = 0;
  std::size_t q = 0;

  std::size_t size() const noexcept { return p + q; }
  friend bool operator==(const SignatureType&, const SignatureType&) = default;
};

/// I_{p,q} = I_p (+) (-I_q).
IntegerMatrix ipq(SignatureType sig);

bool is_in_opq(const IntegerMatrix& t, SignatureType sig);

struct NamedMatrix {
  std::string name;
  IntegerMatrix matrix;
};

/// D_{p,q}: acts on indices {1, 2, p+1, p+2}, identity elsewhere.
IntegerMatrix d_pq(SignatureType sig);

/// Wall's generating set of O(p,q;Z) for p, q >= 2: transpositions inside
/// each sign block, all reflections Q_i, and D_{p,q}.
std::vector<NamedMatrix> wall_generators(SignatureType sig);

/// The 24 slide matrices W_{i,j}^{+-1} on four indices.
std::vector<NamedMatrix> slide_generators(std::size_t n);

/// Appends the inverse of every generator whose inverse is not already listed.
std::vector<NamedMatrix> close_under_inverses(std::vector<NamedMatrix> gens);

struct SearchLimits {
  std::size_t max_len = 8;
  long magnitude_cap = 64;
};

/// Indices into the generator list, in application order: the product is
/// gens[w.back()] * ... * gens[w.front()].
using GeneratorWord = std::vector<std::size_t>;

IntegerMatrix evaluate_word(const GeneratorWord& word, const std::vector<NamedMatrix>& gens,
                            std::size_t n);

/// Bidirectional breadth-first search for a shortest word over `gens`
/// (length <= limits.max_len, intermediate entries bounded by the cap) whose
/// product is `t`. Throws if `t` is not in O(p,q;Z).
std::optional<GeneratorWord> bfs_decompose_opq(const IntegerMatrix& t, SignatureType sig,
                                               const std::vector<NamedMatrix>& gens,
                                               SearchLimits limits = {});

// ---------------------------------------------------------------------------
// Text format: "<rows> <cols>" then one row per line.

IntegerMatrix parse_matrix(std::istream& in);
IntegerMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntegerMatrix& m);
/// Single-line form [[a,b],[c,d]] for report lines.
std::string format_matrix_inline(const IntegerMatrix& m);

}  // namespace kirby
