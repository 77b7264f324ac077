#include "kirby/intmat.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "text_util.hpp"

namespace kirby {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw KirbyError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw KirbyError("ragged matrix literal");
    for (long v : row) entries.emplace_back(v);
  }
  return IntegerMatrix(r, c, std::move(entries));
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Integer>& diag) {
  IntegerMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

const Integer& IntegerMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw KirbyError("matrix index out of range");
  return (*this)(i, j);
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntegerMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntegerMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : entries_) {
    if (mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(x);
  }
  return best;
}

std::string IntegerMatrix::key() const {
  std::string out = std::to_string(rows_) + 'x' + std::to_string(cols_) + ':';
  for (const auto& x : entries_) {
    out += x.get_str(36);
    out += ',';
  }
  return out;
}

IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw KirbyError("dimension mismatch in product: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) { return mat_mul(a, b); }

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw KirbyError("dimension mismatch in sum");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) { return a + (-b); }

IntegerMatrix operator-(const IntegerMatrix& a) {
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix& a) {
  if (!a.is_square()) throw KirbyError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& a) {
  return a.is_square() && abs(determinant(a)) == 1;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  if (!a.is_square()) throw KirbyError("inverse of a non-square matrix");
  const SmithDecomposition snf = smith_normal_form(a);
  if (snf.s != IntegerMatrix::identity(a.rows())) {
    throw KirbyError("matrix is not unimodular; no integral inverse");
  }
  // U A V = I  =>  A^{-1} = V U.
  return snf.v * snf.u;
}

namespace {

void check_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw KirbyError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

IntegerMatrix e_ij(std::size_t n, std::size_t i, std::size_t j) {
  check_index(n, i);
  check_index(n, j);
  IntegerMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

IntegerMatrix p_ij(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j) throw KirbyError("P_{i,j} requires i != j");
  return IntegerMatrix::identity(n) - e_ij(n, i, i) - e_ij(n, j, j) + e_ij(n, i, j) + e_ij(n, j, i);
}

IntegerMatrix q_i(std::size_t n, std::size_t i) {
  check_index(n, i);
  IntegerMatrix m = IntegerMatrix::identity(n);
  m(i - 1, i - 1) = -1;
  return m;
}

IntegerMatrix w_ij(std::size_t n, std::size_t i, std::size_t j, int eps) {
  if (i == j) throw KirbyError("W_{i,j} requires i != j");
  if (eps != 1 && eps != -1) throw KirbyError("slide sign must be +1 or -1");
  check_index(n, i);
  check_index(n, j);
  IntegerMatrix m = IntegerMatrix::identity(n);
  m(i - 1, j - 1) = eps;
  return m;
}

// ---------------------------------------------------------------------------

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += f * row[src]
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix s = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  IntegerMatrix v = IntegerMatrix::identity(n);

  auto row_swap = [&](std::size_t x, std::size_t y) {
    swap_rows(s, x, y);
    swap_rows(u, x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    swap_cols(s, x, y);
    swap_cols(v, x, y);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    add_row(s, dst, src, f);
    add_row(u, dst, src, f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    add_col(s, dst, src, f);
    add_col(v, dst, src, f);
  };

  // Nearest-integer quotient keeps remainders at most half the pivot.
  auto quotient = [](const Integer& a, const Integer& p) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), Integer(2 * a + p).get_mpz_t(), Integer(2 * p).get_mpz_t());
    return q;
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m;
      std::size_t pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (pi == m || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        row_add(i, t, -quotient(s(i, t), s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        col_add(j, t, -quotient(s(t, j), s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return SmithDecomposition{std::move(u), std::move(s), std::move(v), m, n};
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

bool SmithDecomposition::verify(const IntegerMatrix& source) const {
  if (source.rows() != source_rows || source.cols() != source_cols) return false;
  if (u.rows() != source_rows || v.rows() != source_cols) return false;
  if (!is_unimodular(u) || !is_unimodular(v)) return false;
  if (u * source * v != s) return false;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  const auto d = invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (i + 1 < d.size()) {
      if (d[i] == 0 ? d[i + 1] != 0 : !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

AbelianGroup free_abelian(std::size_t rank) { return AbelianGroup{rank, {}}; }

AbelianGroup cokernel(const IntegerMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  AbelianGroup g;
  std::size_t rank = 0;
  for (const auto& d : snf.invariant_factors()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = a.rows() - rank;
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

// ---------------------------------------------------------------------------

IntegerMatrix ipq(SignatureType sig) {
  IntegerMatrix m(sig.size(), sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) m(i, i) = i < sig.p ? 1 : -1;
  return m;
}

bool is_in_opq(const IntegerMatrix& t, SignatureType sig) {
  if (t.rows() != sig.size() || t.cols() != sig.size()) {
    throw KirbyError("matrix is " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                     " but the form has size " + std::to_string(sig.size()));
  }
  const IntegerMatrix form = ipq(sig);
  return t * form * t.transpose() == form && is_unimodular(t);
}

namespace {

void require_wall_range(SignatureType sig) {
  if (sig.p < 2 || sig.q < 2) {
    throw KirbyError("Wall generators need p >= 2 and q >= 2, got (" + std::to_string(sig.p) +
                     "," + std::to_string(sig.q) + ")");
  }
}

}  // namespace

IntegerMatrix d_pq(SignatureType sig) {
  require_wall_range(sig);
  IntegerMatrix d = IntegerMatrix::identity(sig.size());
  const std::size_t a1 = 0;
  const std::size_t a2 = 1;
  const std::size_t b1 = sig.p;
  const std::size_t b2 = sig.p + 1;
  const std::size_t idx[4] = {a1, a2, b1, b2};
  static constexpr int kCore[4][4] = {
      {1, 1, -1, 0},
      {-1, 1, 0, 1},
      {-1, 0, 1, 1},
      {0, 1, -1, 1},
  };
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) d(idx[r], idx[c]) = kCore[r][c];
  return d;
}

std::vector<NamedMatrix> wall_generators(SignatureType sig) {
  require_wall_range(sig);
  const std::size_t n = sig.size();
  std::vector<NamedMatrix> gens;
  auto add_block = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i <= hi; ++i)
      for (std::size_t j = i + 1; j <= hi; ++j)
        gens.push_back({"P" + std::to_string(i) + "," + std::to_string(j), p_ij(n, i, j)});
  };
  add_block(1, sig.p);
  add_block(sig.p + 1, n);
  for (std::size_t i = 1; i <= n; ++i) gens.push_back({"Q" + std::to_string(i), q_i(n, i)});
  gens.push_back({"D", d_pq(sig)});
  return gens;
}

std::vector<NamedMatrix> slide_generators(std::size_t n) {
  std::vector<NamedMatrix> gens;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int eps : {1, -1}) {
        gens.push_back({std::string(eps > 0 ? "W+" : "W-") + " " + std::to_string(i) + " " +
                            std::to_string(j),
                        w_ij(n, i, j, eps)});
      }
    }
  return gens;
}

std::vector<NamedMatrix> close_under_inverses(std::vector<NamedMatrix> gens) {
  const std::size_t original = gens.size();
  for (std::size_t k = 0; k < original; ++k) {
    IntegerMatrix inv = unimodular_inverse(gens[k].matrix);
    const bool listed = std::any_of(gens.begin(), gens.end(),
                                    [&](const NamedMatrix& g) { return g.matrix == inv; });
    if (!listed) gens.push_back({gens[k].name + "^-1", std::move(inv)});
  }
  return gens;
}

IntegerMatrix evaluate_word(const GeneratorWord& word, const std::vector<NamedMatrix>& gens,
                            std::size_t n) {
  IntegerMatrix acc = IntegerMatrix::identity(n);
  for (std::size_t g : word) {
    if (g >= gens.size()) throw KirbyError("generator index out of range");
    acc = gens[g].matrix * acc;
  }
  return acc;
}

std::optional<GeneratorWord> bfs_decompose_opq(const IntegerMatrix& t, SignatureType sig,
                                               const std::vector<NamedMatrix>& gens,
                                               SearchLimits limits) {
  if (!is_in_opq(t, sig)) throw KirbyError("target is not in O(p,q;Z)");
  const std::size_t n = sig.size();
  std::vector<IntegerMatrix> inverses;
  inverses.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.matrix.rows() != n || g.matrix.cols() != n) throw KirbyError("generator size mismatch");
    inverses.push_back(unimodular_inverse(g.matrix));
  }
  const Integer cap = limits.magnitude_cap;

  // Forward states: M = G(word). Backward states: B with T = G(word) * B.
  struct Side {
    std::unordered_map<std::string, GeneratorWord> seen;
    std::vector<std::pair<IntegerMatrix, GeneratorWord>> frontier;
    std::size_t depth = 0;
  };
  Side fwd;
  Side bwd;
  const IntegerMatrix id = IntegerMatrix::identity(n);
  fwd.seen.emplace(id.key(), GeneratorWord{});
  fwd.frontier.push_back({id, {}});
  bwd.seen.emplace(t.key(), GeneratorWord{});
  bwd.frontier.push_back({t, {}});
  if (t == id) return GeneratorWord{};

  while (fwd.depth + bwd.depth < limits.max_len) {
    const bool forward = fwd.frontier.size() <= bwd.frontier.size();
    Side& side = forward ? fwd : bwd;
    const Side& other = forward ? bwd : fwd;
    if (side.frontier.empty()) return std::nullopt;
    std::vector<std::pair<IntegerMatrix, GeneratorWord>> next;
    std::optional<GeneratorWord> hit;
    for (const auto& [state, word] : side.frontier) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        IntegerMatrix nm = forward ? gens[g].matrix * state : inverses[g] * state;
        if (nm.max_abs() > cap) continue;
        std::string k = nm.key();
        if (side.seen.count(k)) continue;
        GeneratorWord nw;
        if (forward) {
          nw = word;
          nw.push_back(g);
        } else {
          nw.reserve(word.size() + 1);
          nw.push_back(g);
          nw.insert(nw.end(), word.begin(), word.end());
        }
        if (!hit) {
          auto it = other.seen.find(k);
          if (it != other.seen.end()) {
            GeneratorWord full = forward ? nw : it->second;
            const GeneratorWord& tail = forward ? it->second : nw;
            full.insert(full.end(), tail.begin(), tail.end());
            hit = std::move(full);
          }
        }
        side.seen.emplace(std::move(k), nw);
        next.push_back({std::move(nm), std::move(nw)});
      }
    }
    if (hit) return hit;
    side.frontier = std::move(next);
    ++side.depth;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

IntegerMatrix parse_matrix(std::istream& in) {
  const Integer rows = detail::read_integer(in, "matrix row count");
  const Integer cols = detail::read_integer(in, "matrix column count");
  if (rows < 0 || cols < 0) throw KirbyError("negative matrix dimension");
  const std::size_t r = rows.get_ui();
  const std::size_t c = cols.get_ui();
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (std::size_t k = 0; k < r * c; ++k) entries.push_back(detail::read_integer(in, "matrix entry"));
  return IntegerMatrix(r, c, std::move(entries));
}

IntegerMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  IntegerMatrix m = parse_matrix(in);
  std::string extra;
  if (in >> extra) throw KirbyError("unexpected trailing token '" + extra + "' after matrix");
  return m;
}

std::string format_matrix(const IntegerMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_inline(const IntegerMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace kirby
