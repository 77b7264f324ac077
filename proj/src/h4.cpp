#include "kirby/h4.hpp"

#include <istream>
#include <sstream>

#include "text_util.hpp"

namespace kirby {

namespace {

void check_subset(std::size_t r, const Wedge4Class::Subset& s) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (s[k] < 1 || s[k] > r) throw KirbyError("wedge index out of range for r=" + std::to_string(r));
    if (k > 0 && s[k - 1] >= s[k]) throw KirbyError("wedge indices must be strictly increasing");
  }
}

void check_rank(const Wedge4Class& a, const Wedge4Class& b) {
  if (a.r() != b.r()) throw KirbyError("wedge classes of different rank");
}

}  // namespace

Wedge4Class Wedge4Class::basis(std::size_t r, Subset s) {
  Wedge4Class c(r);
  c.add_term(s, 1);
  return c;
}

Integer Wedge4Class::coefficient(const Subset& s) const {
  const auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

Wedge4Class& Wedge4Class::add_term(const Subset& s, const Integer& v) {
  check_subset(r_, s);
  Integer& slot = coeffs_[s];
  slot += v;
  if (slot == 0) coeffs_.erase(s);
  return *this;
}

Wedge4Class add(const Wedge4Class& a, const Wedge4Class& b) {
  check_rank(a, b);
  Wedge4Class out = a;
  for (const auto& [s, v] : b.coeffs()) out.add_term(s, v);
  return out;
}

Wedge4Class negate(const Wedge4Class& a) {
  Wedge4Class out(a.r());
  for (const auto& [s, v] : a.coeffs()) out.add_term(s, -v);
  return out;
}

Wedge4Class operator+(const Wedge4Class& a, const Wedge4Class& b) { return add(a, b); }
Wedge4Class operator-(const Wedge4Class& a) { return negate(a); }

Wedge4Class wedge4(const std::vector<Integer>& y1, const std::vector<Integer>& y2,
                   const std::vector<Integer>& y3, const std::vector<Integer>& y4) {
  const std::size_t r = y1.size();
  if (y2.size() != r || y3.size() != r || y4.size() != r) throw KirbyError("wedge4: vectors of different length");
  const std::vector<Integer>* ys[4] = {&y1, &y2, &y3, &y4};
  Wedge4Class out(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      for (std::size_t c = b + 1; c < r; ++c)
        for (std::size_t d = c + 1; d < r; ++d) {
          const std::size_t rows[4] = {a, b, c, d};
          IntegerMatrix minor(4, 4);
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) minor(i, j) = (*ys[j])[rows[i]];
          const Integer det = determinant(minor);
          if (det != 0) out.add_term({a + 1, b + 1, c + 1, d + 1}, det);
        }
  return out;
}

std::size_t wedge4_rank(std::size_t r) {
  if (r < 4) return 0;
  return r * (r - 1) * (r - 2) * (r - 3) / 24;
}

Wedge4Class eta_of_ihx(const EmbeddingShadow& sh, int sign) {
  if (sh.g() != 4 || sh.f.cols() != 4) throw KirbyError("IHX class needs a genus-4 shadow");
  if (sign != 1 && sign != -1) throw KirbyError("IHX sign must be +1 or -1");
  std::vector<Integer> cols[4];
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < sh.r(); ++i) cols[j].push_back(sh.f(i, j));
  const Wedge4Class w = wedge4(cols[0], cols[1], cols[2], cols[3]);
  return sign == 1 ? w : negate(w);
}

std::vector<PlannedIhx> plan_cancellation(const Wedge4Class& target) {
  const std::size_t r = target.r();
  std::vector<PlannedIhx> out;
  for (const auto& [s, v] : target.coeffs()) {
    EmbeddingShadow sh{IntegerMatrix(r, 4), IntegerMatrix(4, 4), IntegerMatrix(4, 0)};
    for (std::size_t j = 0; j < 4; ++j) sh.f(s[j] - 1, j) = 1;
    const int sign = v > 0 ? -1 : 1;
    for (Integer k = abs(v); k > 0; --k) out.push_back({sh, sign});
  }
  return out;
}

Wedge4Class plan_total(const std::vector<PlannedIhx>& plan, std::size_t r) {
  Wedge4Class total(r);
  for (const auto& p : plan) total = add(total, eta_of_ihx(p.shadow, p.sign));
  return total;
}

Wedge4Class parse_wedge4(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw KirbyError("missing header 'wedge4 r=<r>'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "wedge4") detail::fail_at(head, "expected header 'wedge4 r=<r>'");
  std::size_t r = 0;
  try {
    r = detail::kv_count(head.tokens[1], "r");
  } catch (const KirbyError& e) {
    detail::fail_at(head, e.what());
  }
  Wedge4Class out(r);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    if (t[0] != "coef" || t.size() != 6) detail::fail_at(line, "expected 'coef i1 i2 i3 i4 <int>'");
    try {
      Wedge4Class::Subset s;
      for (std::size_t j = 0; j < 4; ++j) s[j] = detail::to_count(detail::parse_integer(t[1 + j], "index"), "index");
      out.add_term(s, detail::parse_integer(t[5], "coefficient"));
    } catch (const KirbyError& e) {
      detail::fail_at(line, e.what());
    }
  }
  return out;
}

Wedge4Class parse_wedge4(const std::string& text) {
  std::istringstream in(text);
  return parse_wedge4(in);
}

std::string format_wedge4(const Wedge4Class& c) {
  std::string out = "wedge4 r=" + std::to_string(c.r()) + "\n";
  for (const auto& [s, v] : c.coeffs()) {
    out += "coef";
    for (auto i : s) out += " " + std::to_string(i);
    out += " " + v.get_str() + "\n";
  }
  return out;
}

}  // namespace kirby
