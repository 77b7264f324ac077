#include "kirby/movecalc.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "text_util.hpp"

namespace kirby {

IntegerMatrix ElementaryMove::matrix(std::size_t n) const {
  switch (kind) {
    case Kind::Reorder:
      return p_ij(n, i, j);
    case Kind::Reorient:
      return q_i(n, i);
    case Kind::Slide:
      return w_ij(n, i, j, eps);
  }
  throw KirbyError("unknown move kind");
}

ElementaryMove ElementaryMove::inverse() const {
  ElementaryMove m = *this;
  if (kind == Kind::Slide) m.eps = -eps;
  return m;
}

std::string ElementaryMove::to_string() const {
  switch (kind) {
    case Kind::Reorder:
      return "P " + std::to_string(i) + " " + std::to_string(j);
    case Kind::Reorient:
      return "Q " + std::to_string(i);
    case Kind::Slide:
      return std::string(eps > 0 ? "W+ " : "W- ") + std::to_string(i) + " " + std::to_string(j);
  }
  return "?";
}

namespace {

void validate(const ElementaryMove& m, std::size_t n) {
  auto in_range = [n](std::size_t k) { return k >= 1 && k <= n; };
  if (!in_range(m.i)) throw KirbyError("move " + m.to_string() + ": index out of range for n=" + std::to_string(n));
  if (m.kind == ElementaryMove::Kind::Reorient) return;
  if (!in_range(m.j)) throw KirbyError("move " + m.to_string() + ": index out of range for n=" + std::to_string(n));
  if (m.i == m.j) throw KirbyError("move " + m.to_string() + ": indices must differ");
  if (m.kind == ElementaryMove::Kind::Slide && m.eps != 1 && m.eps != -1) {
    throw KirbyError("slide sign must be +1 or -1");
  }
}

}  // namespace

MoveSequence::MoveSequence(std::size_t n, std::vector<ElementaryMove> moves)
    : n_(n), moves_(std::move(moves)) {
  for (const auto& m : moves_) validate(m, n_);
}

MoveSequence MoveSequence::then(const MoveSequence& next) const {
  if (next.n_ != n_) throw KirbyError("cannot concatenate sequences on different component counts");
  std::vector<ElementaryMove> all = moves_;
  all.insert(all.end(), next.moves_.begin(), next.moves_.end());
  return MoveSequence(n_, std::move(all));
}

IntegerMatrix phi(const MoveSequence& s) {
  IntegerMatrix acc = IntegerMatrix::identity(s.n());
  for (const auto& m : s.moves()) acc = m.matrix(s.n()) * acc;
  return acc;
}

MoveSequence reverse(const MoveSequence& s) {
  std::vector<ElementaryMove> out;
  out.reserve(s.size());
  for (auto it = s.moves().rbegin(); it != s.moves().rend(); ++it) out.push_back(it->inverse());
  return MoveSequence(s.n(), std::move(out));
}

IntegerMatrix evolve_lk(const IntegerMatrix& lk, const MoveSequence& s) {
  if (!lk.is_symmetric()) throw KirbyError("linking matrix must be symmetric");
  if (lk.rows() != s.n()) throw KirbyError("linking matrix size does not match the sequence");
  const IntegerMatrix f = phi(s);
  return f * lk * f.transpose();
}

bool is_band_slide_realizable(const MoveSequence& s) {
  return phi(s) == IntegerMatrix::identity(s.n());
}

std::optional<SignatureType> admissible_type(const IntegerMatrix& lk) {
  if (!lk.is_diagonal()) return std::nullopt;
  const std::size_t n = lk.rows();
  std::size_t p = 0;
  while (p < n && lk(p, p) == 1) ++p;
  for (std::size_t k = p; k < n; ++k)
    if (lk(k, k) != -1) return std::nullopt;
  return SignatureType{p, n - p};
}

std::optional<std::pair<MoveSequence, SignatureType>> normalize_admissible(const IntegerMatrix& lk) {
  if (!lk.is_diagonal()) return std::nullopt;
  const std::size_t n = lk.rows();
  std::vector<int> signs(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (lk(k, k) == 1) {
      signs[k] = 1;
    } else if (lk(k, k) == -1) {
      signs[k] = -1;
    } else {
      return std::nullopt;
    }
  }
  // Stable partition by adjacent transpositions.
  std::vector<ElementaryMove> moves;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (signs[k] == -1 && signs[k + 1] == 1) {
        std::swap(signs[k], signs[k + 1]);
        moves.push_back(ElementaryMove::reorder(k + 1, k + 2));
      }
    }
  }
  const auto p = static_cast<std::size_t>(std::count(signs.begin(), signs.end(), 1));
  return std::make_pair(MoveSequence(n, std::move(moves)), SignatureType{p, n - p});
}

MoveSequence expand_d_move(std::size_t n, DSlots slots, int eps) {
  const std::size_t idx[5] = {0, slots.a1, slots.a2, slots.b1, slots.b2};
  for (int a = 1; a <= 4; ++a) {
    if (idx[a] < 1 || idx[a] > n) throw KirbyError("D-move slot out of range");
    for (int b = a + 1; b <= 4; ++b)
      if (idx[a] == idx[b]) throw KirbyError("D-move slots must be distinct");
  }
  if (eps != 1 && eps != -1) throw KirbyError("D-move sign must be +1 or -1");
  // D_{2,2} = W21^-1 W31^-1 W24 W34 W43^-1 W13^-1 W42 W12; the right-most
  // factor is the first move.
  static constexpr int kSlides[8][3] = {{1, 2, 1},  {4, 2, 1},  {1, 3, -1}, {4, 3, -1},
                                        {3, 4, 1},  {2, 4, 1},  {3, 1, -1}, {2, 1, -1}};
  std::vector<ElementaryMove> moves;
  for (const auto& s : kSlides) moves.push_back(ElementaryMove::slide(idx[s[0]], idx[s[1]], s[2]));
  MoveSequence seq(n, std::move(moves));
  return eps == 1 ? seq : reverse(seq);
}

// ---------------------------------------------------------------------------

MoveSequence parse_move_sequence(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw KirbyError("move sequence: missing header 'n <count>'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "n") detail::fail_at(head, "expected header 'n <count>'");
  const std::size_t n = detail::to_count(detail::parse_integer(head.tokens[1], "component count"), "component count");

  std::vector<ElementaryMove> moves;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    auto arg = [&](std::size_t pos) {
      return detail::to_count(detail::parse_integer(t[pos], "move index"), "move index");
    };
    auto need = [&](std::size_t count) {
      if (t.size() != count + 1) detail::fail_at(line, "'" + t[0] + "' takes " + std::to_string(count) + " arguments");
    };
    try {
      if (t[0] == "P") {
        need(2);
        moves.push_back(ElementaryMove::reorder(arg(1), arg(2)));
      } else if (t[0] == "Q") {
        need(1);
        moves.push_back(ElementaryMove::reorient(arg(1)));
      } else if (t[0] == "W+" || t[0] == "W-") {
        need(2);
        moves.push_back(ElementaryMove::slide(arg(1), arg(2), t[0] == "W+" ? 1 : -1));
      } else if (t[0] == "BS") {
        need(2);
        moves.push_back(ElementaryMove::slide(arg(1), arg(2), 1));
        moves.push_back(ElementaryMove::slide(arg(1), arg(2), -1));
      } else if (t[0] == "D+" || t[0] == "D-") {
        need(4);
        const auto d = expand_d_move(n, {arg(1), arg(2), arg(3), arg(4)}, t[0] == "D+" ? 1 : -1);
        moves.insert(moves.end(), d.moves().begin(), d.moves().end());
      } else {
        detail::fail_at(line, "unknown move '" + t[0] + "'");
      }
      MoveSequence(n, {moves.back()});
    } catch (const KirbyError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      detail::fail_at(line, msg);
    }
  }
  return MoveSequence(n, std::move(moves));
}

MoveSequence parse_move_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_move_sequence(in);
}

std::string format_move_sequence(const MoveSequence& s) {
  std::string out = "n " + std::to_string(s.n()) + "\n";
  for (const auto& m : s.moves()) out += m.to_string() + "\n";
  return out;
}

}  // namespace kirby
