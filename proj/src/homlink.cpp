#include "kirby/homlink.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "kirby/figures.hpp"
#include "text_util.hpp"

namespace kirby {

namespace {

void check_index(const HomFramedLink& l, std::size_t i) {
  if (i < 1 || i > l.n()) {
    throw KirbyError("component " + std::to_string(i) + " out of range (link has " +
                     std::to_string(l.n()) + ")");
  }
}

bool column_is_zero(const IntegerMatrix& m, std::size_t col) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, col) != 0) return false;
  return true;
}

// Places `extra` after the components of l: classes side by side, lk as a
// block matrix with `cross` (n x m) off the diagonal.
HomFramedLink append_block(const HomFramedLink& l, const IntegerMatrix& classes,
                           const IntegerMatrix& cross, const IntegerMatrix& block) {
  const std::size_t n = l.n();
  const std::size_t m = block.rows();
  IntegerMatrix c(l.r(), n + m);
  for (std::size_t i = 0; i < l.r(); ++i) {
    for (std::size_t k = 0; k < n; ++k) c(i, k) = l.classes()(i, k);
    for (std::size_t k = 0; k < m; ++k) c(i, n + k) = classes(i, k);
  }
  IntegerMatrix lk(n + m, n + m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) lk(a, b) = l.lk()(a, b);
    for (std::size_t k = 0; k < m; ++k) {
      lk(a, n + k) = cross(a, k);
      lk(n + k, a) = cross(a, k);
    }
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t k2 = 0; k2 < m; ++k2) lk(n + k, n + k2) = block(k, k2);
  return HomFramedLink(l.r(), std::move(c), std::move(lk));
}

std::vector<Integer> parse_vector_after(const std::vector<std::string>& t, std::size_t& pos,
                                        std::string_view key, std::size_t count) {
  const std::string first = detail::kv_value(t.at(pos), key);
  std::vector<Integer> out;
  if (!first.empty()) out.push_back(detail::parse_integer(first, key));
  ++pos;
  while (out.size() < count && pos < t.size() && detail::is_integer_token(t[pos])) {
    out.push_back(detail::parse_integer(t[pos], key));
    ++pos;
  }
  if (out.size() != count) {
    throw KirbyError("'" + std::string(key) + "=' needs " + std::to_string(count) + " integers");
  }
  return out;
}

std::string vector_token(std::string_view key, const IntegerMatrix& m, std::size_t col) {
  std::string out = std::string(key) + "=";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ' ';
    out += m(i, col).get_str();
  }
  return out;
}

// Shared reader for the link and curve formats, which differ only in names.
struct Components {
  std::size_t dim = 0;
  IntegerMatrix classes;
  IntegerMatrix lk;
};

Components parse_components(std::istream& in, std::string_view header, std::string_view dim_key,
                            std::string_view count_key, std::string_view item, std::string_view vec_key) {
  const auto lines = detail::content_lines(in);
  const std::string usage = std::string(header) + " " + std::string(dim_key) + "=<int> " +
                            std::string(count_key) + "=<int>";
  if (lines.empty()) throw KirbyError("missing header '" + usage + "'");
  const auto& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != header) detail::fail_at(head, "expected header '" + usage + "'");
  Components out;
  std::size_t count = 0;
  try {
    out.dim = detail::kv_count(head.tokens[1], dim_key);
    count = detail::kv_count(head.tokens[2], count_key);
  } catch (const KirbyError& e) {
    detail::fail_at(head, e.what());
  }
  out.classes = IntegerMatrix(out.dim, count);
  out.lk = IntegerMatrix(count, count);
  std::vector<bool> seen(count, false);
  std::vector<bool> seen_pair(count * count, false);

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    try {
      auto index = [&](std::size_t pos) {
        const auto i = detail::to_count(detail::parse_integer(t.at(pos), "index"), "index");
        if (i < 1 || i > count) throw KirbyError("index " + std::to_string(i) + " out of range");
        return i;
      };
      if (t[0] == item) {
        if (t.size() < 3) throw KirbyError("expected '" + std::string(item) + " <i> " + std::string(vec_key) + "=... f=<int>'");
        const std::size_t i = index(1);
        if (seen[i - 1]) throw KirbyError("component " + std::to_string(i) + " given twice");
        seen[i - 1] = true;
        std::size_t pos = 2;
        const auto v = parse_vector_after(t, pos, vec_key, out.dim);
        if (pos + 1 != t.size()) throw KirbyError("expected a single 'f=<int>' after the class");
        for (std::size_t d = 0; d < out.dim; ++d) out.classes(d, i - 1) = v[d];
        out.lk(i - 1, i - 1) = detail::parse_integer(detail::kv_value(t[pos], "f"), "framing");
      } else if (t[0] == "lk") {
        if (t.size() != 4) throw KirbyError("expected 'lk <i> <j> <int>'");
        const std::size_t i = index(1);
        const std::size_t j = index(2);
        if (i >= j) throw KirbyError("lk lines need i < j");
        if (seen_pair[(i - 1) * count + (j - 1)]) throw KirbyError("pair given twice");
        seen_pair[(i - 1) * count + (j - 1)] = true;
        const Integer v = detail::parse_integer(t[3], "linking number");
        out.lk(i - 1, j - 1) = v;
        out.lk(j - 1, i - 1) = v;
      } else {
        throw KirbyError("unknown record '" + t[0] + "'");
      }
    } catch (const KirbyError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      detail::fail_at(line, msg);
    } catch (const std::out_of_range&) {
      detail::fail_at(line, "truncated record");
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!seen[i]) throw KirbyError("component " + std::to_string(i + 1) + " has no '" + std::string(item) + "' line");
  return out;
}

std::string format_components(std::string_view header, std::string_view dim_key, std::string_view count_key,
                              std::string_view item, std::string_view vec_key, const IntegerMatrix& classes,
                              const IntegerMatrix& lk) {
  const std::size_t n = lk.rows();
  std::string out = std::string(header) + " " + std::string(dim_key) + "=" + std::to_string(classes.rows()) +
                    " " + std::string(count_key) + "=" + std::to_string(n) + "\n";
  for (std::size_t k = 0; k < n; ++k) {
    out += std::string(item) + " " + std::to_string(k + 1) + " " + vector_token(vec_key, classes, k) +
           " f=" + lk(k, k).get_str() + "\n";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (lk(a, b) != 0) out += "lk " + std::to_string(a + 1) + " " + std::to_string(b + 1) + " " + lk(a, b).get_str() + "\n";
  return out;
}

}  // namespace

HomFramedLink::HomFramedLink(std::size_t r, IntegerMatrix classes, IntegerMatrix lk)
    : r_(r), classes_(std::move(classes)), lk_(std::move(lk)) {
  if (!lk_.is_square()) throw KirbyError("linking matrix must be square");
  if (!lk_.is_symmetric()) throw KirbyError("linking matrix must be symmetric");
  if (classes_.rows() != r_ || classes_.cols() != lk_.rows()) {
    throw KirbyError("class matrix must be r x n");
  }
}

HomFramedLink HomFramedLink::empty(std::size_t r) { return HomFramedLink(r, IntegerMatrix(r, 0), IntegerMatrix(0, 0)); }

std::vector<Integer> HomFramedLink::class_of(std::size_t i) const {
  check_index(*this, i);
  std::vector<Integer> out(r_);
  for (std::size_t d = 0; d < r_; ++d) out[d] = classes_(d, i - 1);
  return out;
}

void EmbeddingShadow::validate() const {
  if (!lambda.is_square() || !lambda.is_symmetric()) throw KirbyError("lambda must be square and symmetric");
  if (f.cols() != g()) throw KirbyError("F must have g columns");
  if (mu.rows() != g()) throw KirbyError("mu must have g rows");
}

void CurveSystemShadow::validate() const {
  if (!internal_lk.is_square() || !internal_lk.is_symmetric()) {
    throw KirbyError("internal linking matrix must be square and symmetric");
  }
  if (classes.cols() != m()) throw KirbyError("curve classes must be g x m");
}

HomFramedLink transport(const CurveSystemShadow& cs, const EmbeddingShadow& sh, const HomFramedLink& l) {
  cs.validate();
  sh.validate();
  if (sh.g() != cs.g()) {
    throw KirbyError("shadow genus " + std::to_string(sh.g()) + " does not match curve system genus " +
                     std::to_string(cs.g()));
  }
  if (sh.r() != l.r()) throw KirbyError("shadow rank does not match the link");
  if (sh.mu.cols() != l.n()) throw KirbyError("mu must have one column per link component");
  const IntegerMatrix& c = cs.classes;
  const IntegerMatrix classes = sh.f * c;
  const IntegerMatrix cross = sh.mu.transpose() * c;
  const IntegerMatrix block = cs.internal_lk + c.transpose() * sh.lambda * c;
  return append_block(l, classes, cross, block);
}

HomFramedLink stabilize(const HomFramedLink& l, int sign) {
  if (sign != 1 && sign != -1) throw KirbyError("stabilization sign must be +1 or -1");
  return append_block(l, IntegerMatrix(l.r(), 1), IntegerMatrix(l.n(), 1), IntegerMatrix::diagonal({sign}));
}

HomFramedLink destabilize(const HomFramedLink& l, std::size_t i) {
  check_index(l, i);
  const std::size_t k = i - 1;
  if (!column_is_zero(l.classes(), k)) throw KirbyError("destabilize: component is not null-homologous");
  if (abs(l.lk()(k, k)) != 1) throw KirbyError("destabilize: framing must be +1 or -1");
  for (std::size_t a = 0; a < l.n(); ++a)
    if (a != k && l.lk()(a, k) != 0) throw KirbyError("destabilize: component links another component");
  return remove_components(l, {i});
}

HomFramedLink handle_slide(const HomFramedLink& l, std::size_t i, std::size_t j, int eps) {
  check_index(l, i);
  check_index(l, j);
  if (i == j) throw KirbyError("cannot slide a component over itself");
  if (eps != 1 && eps != -1) throw KirbyError("slide sign must be +1 or -1");
  const IntegerMatrix w = w_ij(l.n(), i, j, eps);
  return HomFramedLink(l.r(), l.classes() * w.transpose(), w * l.lk() * w.transpose());
}

HomFramedLink k3_add(const HomFramedLink& l, const Integer& framing, const std::vector<Integer>& lk_row) {
  if (lk_row.size() != l.n()) throw KirbyError("k3_add: linking row must have one entry per component");
  IntegerMatrix cross(l.n(), 2);
  for (std::size_t a = 0; a < l.n(); ++a) cross(a, 0) = lk_row[a];
  IntegerMatrix block(2, 2);
  block(0, 0) = framing;
  block(0, 1) = 1;
  block(1, 0) = 1;
  return append_block(l, IntegerMatrix(l.r(), 2), cross, block);
}

HomFramedLink k3_remove(const HomFramedLink& l, std::size_t i, std::size_t j) {
  check_index(l, i);
  check_index(l, j);
  if (i == j) throw KirbyError("k3_remove: components must differ");
  const std::size_t a = i - 1;
  const std::size_t b = j - 1;
  if (!column_is_zero(l.classes(), a) || !column_is_zero(l.classes(), b)) {
    throw KirbyError("k3_remove: components must be null-homologous");
  }
  if (l.lk()(a, b) != 1) throw KirbyError("k3_remove: the meridian must link K once");
  if (l.lk()(b, b) != 0) throw KirbyError("k3_remove: the meridian must be 0-framed");
  for (std::size_t c = 0; c < l.n(); ++c)
    if (c != a && c != b && l.lk()(c, b) != 0) throw KirbyError("k3_remove: the meridian links another component");
  return remove_components(l, {i, j});
}

HomFramedLink pair_add(const HomFramedLink& l) {
  return append_block(l, IntegerMatrix(l.r(), 2), IntegerMatrix(l.n(), 2), IntegerMatrix::diagonal({1, -1}));
}

HomFramedLink pair_remove(const HomFramedLink& l, std::size_t i, std::size_t j) {
  check_index(l, i);
  check_index(l, j);
  if (i == j) throw KirbyError("pair_remove: components must differ");
  const std::size_t a = i - 1;
  const std::size_t b = j - 1;
  if (!column_is_zero(l.classes(), a) || !column_is_zero(l.classes(), b)) {
    throw KirbyError("pair_remove: components must be null-homologous");
  }
  if (l.lk()(a, a) != 1 || l.lk()(b, b) != -1) throw KirbyError("pair_remove: framings must be +1 and -1");
  for (std::size_t c = 0; c < l.n(); ++c) {
    if (c != a && l.lk()(c, a) != 0) throw KirbyError("pair_remove: the +1 component links another component");
    if (c != b && l.lk()(c, b) != 0) throw KirbyError("pair_remove: the -1 component links another component");
  }
  return remove_components(l, {i, j});
}

HomFramedLink ihx_add(const HomFramedLink& l, const EmbeddingShadow& sh) {
  if (sh.g() != 4) throw KirbyError("IHX-move needs a genus-4 shadow");
  return transport(ihx_block(), sh, l);
}

HomFramedLink admissible_ihx_add(const HomFramedLink& l, const EmbeddingShadow& sh) {
  if (sh.g() != 4) throw KirbyError("IHX-move needs a genus-4 shadow");
  if (!is_admissible(l)) throw KirbyError("admissible IHX-move needs an admissible link");
  return transport(ihx_adm_block(), sh, l);
}

HomFramedLink lantern_swap(const HomFramedLink& l, const std::vector<std::size_t>& block,
                           const EmbeddingShadow& sh, LanternDirection direction) {
  const bool forward = direction == LanternDirection::KToKPrime;
  const CurveSystemShadow& from = forward ? lantern_k() : lantern_kprime();
  const CurveSystemShadow& to = forward ? lantern_kprime() : lantern_k();
  if (sh.g() != 3) throw KirbyError("lantern-move needs a genus-3 shadow");
  if (block.size() != from.m()) {
    throw KirbyError("lantern block must list " + std::to_string(from.m()) + " components");
  }
  for (const auto* cs : {&from, &to}) {
    if (!(sh.f * cs->classes).is_zero()) throw KirbyError("lantern curves are not null-homologous under F");
  }
  const HomFramedLink rest = remove_components(l, block);
  const HomFramedLink expected = transport(from, sh, rest);

  // Compare the block as it sits in l with the freshly transported one.
  std::vector<std::size_t> order;
  std::vector<bool> in_block(l.n(), false);
  for (auto b : block) in_block[b - 1] = true;
  for (std::size_t k = 0; k < l.n(); ++k)
    if (!in_block[k]) order.push_back(k);
  for (auto b : block) order.push_back(b - 1);
  for (std::size_t a = 0; a < l.n(); ++a) {
    for (std::size_t d = 0; d < l.r(); ++d)
      if (expected.classes()(d, a) != l.classes()(d, order[a])) throw KirbyError("lantern block does not match");
    for (std::size_t b = 0; b < l.n(); ++b)
      if (expected.lk()(a, b) != l.lk()(order[a], order[b])) throw KirbyError("lantern block does not match");
  }
  return transport(to, sh, rest);
}

AbelianGroup h1_of_surgery(const HomFramedLink& l) {
  const std::size_t r = l.r();
  const std::size_t n = l.n();
  IntegerMatrix rel(r + n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t d = 0; d < r; ++d) rel(d, k) = l.classes()(d, k);
    for (std::size_t a = 0; a < n; ++a) rel(r + a, k) = l.lk()(a, k);
  }
  return cokernel(rel);
}

bool is_z_null(const HomFramedLink& l) { return l.classes().is_zero(); }

bool is_q_null(const HomFramedLink& l) { return is_z_null(l); }

bool is_admissible(const HomFramedLink& l) {
  if (!is_z_null(l) || !l.lk().is_diagonal()) return false;
  for (std::size_t k = 0; k < l.n(); ++k)
    if (abs(l.lk()(k, k)) != 1) return false;
  return true;
}

HomFramedLink remove_components(const HomFramedLink& l, std::vector<std::size_t> indices) {
  std::vector<bool> drop(l.n(), false);
  for (auto i : indices) {
    check_index(l, i);
    if (drop[i - 1]) throw KirbyError("component " + std::to_string(i) + " listed twice");
    drop[i - 1] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < l.n(); ++k)
    if (!drop[k]) keep.push_back(k);
  IntegerMatrix c(l.r(), keep.size());
  IntegerMatrix lk(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t d = 0; d < l.r(); ++d) c(d, a) = l.classes()(d, keep[a]);
    for (std::size_t b = 0; b < keep.size(); ++b) lk(a, b) = l.lk()(keep[a], keep[b]);
  }
  return HomFramedLink(l.r(), std::move(c), std::move(lk));
}

// ---------------------------------------------------------------------------

HomFramedLink parse_hom_link(std::istream& in) {
  auto c = parse_components(in, "homlink", "r", "n", "comp", "h");
  return HomFramedLink(c.dim, std::move(c.classes), std::move(c.lk));
}

HomFramedLink parse_hom_link(const std::string& text) {
  std::istringstream in(text);
  return parse_hom_link(in);
}

std::string format_hom_link(const HomFramedLink& l) {
  return format_components("homlink", "r", "n", "comp", "h", l.classes(), l.lk());
}

CurveSystemShadow parse_curve_system(std::istream& in) {
  auto c = parse_components(in, "curves", "g", "m", "curve", "c");
  return CurveSystemShadow{std::move(c.classes), std::move(c.lk)};
}

CurveSystemShadow parse_curve_system(const std::string& text) {
  std::istringstream in(text);
  return parse_curve_system(in);
}

std::string format_curve_system(const CurveSystemShadow& cs) {
  return format_components("curves", "g", "m", "curve", "c", cs.classes, cs.internal_lk);
}

EmbeddingShadow parse_embedding_shadow(std::istream& in) {
  std::string cleaned;
  for (const auto& line : detail::content_lines(in)) {
    for (const auto& t : line.tokens) cleaned += t + " ";
    cleaned += "\n";
  }
  std::istringstream s(cleaned);
  std::string word, gtok, rtok;
  if (!(s >> word >> gtok >> rtok) || word != "shadow") {
    throw KirbyError("expected header 'shadow g=<g> r=<r>'");
  }
  const std::size_t g = detail::kv_count(gtok, "g");
  const std::size_t r = detail::kv_count(rtok, "r");
  EmbeddingShadow sh;
  for (const char* name : {"F", "lambda", "mu"}) {
    if (!(s >> word) || word != name) throw KirbyError(std::string("expected '") + name + "' block");
    IntegerMatrix m = parse_matrix(s);
    if (word == "F") sh.f = std::move(m);
    if (word == "lambda") sh.lambda = std::move(m);
    if (word == "mu") sh.mu = std::move(m);
  }
  if (s >> word) throw KirbyError("unexpected trailing token '" + word + "'");
  if (sh.f.rows() != r || sh.f.cols() != g) throw KirbyError("F must be r x g");
  if (sh.lambda.rows() != g) throw KirbyError("lambda must be g x g");
  sh.validate();
  return sh;
}

EmbeddingShadow parse_embedding_shadow(const std::string& text) {
  std::istringstream in(text);
  return parse_embedding_shadow(in);
}

std::string format_embedding_shadow(const EmbeddingShadow& sh) {
  return "shadow g=" + std::to_string(sh.g()) + " r=" + std::to_string(sh.r()) + "\nF\n" + format_matrix(sh.f) +
         "lambda\n" + format_matrix(sh.lambda) + "mu\n" + format_matrix(sh.mu);
}

}  // namespace kirby
