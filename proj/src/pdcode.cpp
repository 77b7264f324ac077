#include "kirby/pdcode.hpp"

#include <istream>
#include <sstream>

#include "text_util.hpp"

namespace kirby {

namespace {

void check_component(std::size_t k, std::size_t c) {
  if (c < 1 || c > k) {
    throw KirbyError("unknown component " + std::to_string(c) + " (diagram has " +
                     std::to_string(k) + ")");
  }
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::size_t components, std::vector<Crossing> crossings)
    : components_(components), crossings_(std::move(crossings)) {
  for (const auto& x : crossings_) {
    check_component(components_, x.over);
    check_component(components_, x.under);
    if (x.sign != 1 && x.sign != -1) throw KirbyError("crossing sign must be +1 or -1");
  }
}

PlanarDiagram PlanarDiagram::mirror() const {
  auto xs = crossings_;
  for (auto& x : xs) x.sign = -x.sign;
  return PlanarDiagram(components_, std::move(xs));
}

PlanarDiagram PlanarDiagram::reverse_orientation(std::size_t component) const {
  check_component(components_, component);
  auto xs = crossings_;
  for (auto& x : xs)
    if ((x.over == component) != (x.under == component)) x.sign = -x.sign;
  return PlanarDiagram(components_, std::move(xs));
}

PlanarDiagram PlanarDiagram::with_kink(std::size_t component, int sign) const {
  auto xs = crossings_;
  xs.push_back({component, component, sign});
  return PlanarDiagram(components_, std::move(xs));
}

PlanarDiagram PlanarDiagram::disjoint_union(const PlanarDiagram& other) const {
  auto xs = crossings_;
  for (auto x : other.crossings_) {
    x.over += components_;
    x.under += components_;
    xs.push_back(x);
  }
  return PlanarDiagram(components_ + other.components_, std::move(xs));
}

long linking_number(const PlanarDiagram& pd, std::size_t a, std::size_t b) {
  check_component(pd.components(), a);
  check_component(pd.components(), b);
  if (a == b) throw KirbyError("linking number needs two distinct components");
  long sum = 0;
  for (const auto& x : pd.crossings())
    if ((x.over == a && x.under == b) || (x.over == b && x.under == a)) sum += x.sign;
  if (sum % 2 != 0) {
    throw KirbyError("odd signed crossing count between components " + std::to_string(a) +
                     " and " + std::to_string(b) + "; diagram is malformed");
  }
  return sum / 2;
}

long writhe(const PlanarDiagram& pd, std::size_t a) {
  check_component(pd.components(), a);
  long sum = 0;
  for (const auto& x : pd.crossings())
    if (x.over == a && x.under == a) sum += x.sign;
  return sum;
}

IntegerMatrix linking_matrix_from_pd(const PlanarDiagram& pd) {
  const std::size_t k = pd.components();
  IntegerMatrix m(k, k);
  for (std::size_t a = 1; a <= k; ++a) {
    m(a - 1, a - 1) = writhe(pd, a);
    for (std::size_t b = a + 1; b <= k; ++b) {
      const long l = linking_number(pd, a, b);
      m(a - 1, b - 1) = l;
      m(b - 1, a - 1) = l;
    }
  }
  return m;
}

PlanarDiagram parse_planar_diagram(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw KirbyError("planar diagram: missing header 'pd components=<k>'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "pd") {
    detail::fail_at(head, "expected header 'pd components=<k>'");
  }
  const std::size_t k = detail::kv_count(head.tokens[1], "components");
  std::vector<Crossing> xs;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto& line = lines[n];
    const auto& t = line.tokens;
    if (t[0] != "x" || t.size() != 4) detail::fail_at(line, "expected 'x <over> <under> <+1|-1>'");
    try {
      const auto over = detail::to_count(detail::parse_integer(t[1], "over component"), "component");
      const auto under = detail::to_count(detail::parse_integer(t[2], "under component"), "component");
      const auto sign = detail::parse_integer(t[3], "crossing sign");
      if (sign != 1 && sign != -1) detail::fail_at(line, "crossing sign must be +1 or -1");
      check_component(k, over);
      check_component(k, under);
      xs.push_back({over, under, static_cast<int>(sign.get_si())});
    } catch (const KirbyError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      detail::fail_at(line, msg);
    }
  }
  return PlanarDiagram(k, std::move(xs));
}

PlanarDiagram parse_planar_diagram(const std::string& text) {
  std::istringstream in(text);
  return parse_planar_diagram(in);
}

std::string format_planar_diagram(const PlanarDiagram& pd) {
  std::string out = "pd components=" + std::to_string(pd.components()) + "\n";
  for (const auto& x : pd.crossings()) {
    out += "x " + std::to_string(x.over) + " " + std::to_string(x.under) + " " +
           (x.sign > 0 ? "+1" : "-1") + "\n";
  }
  return out;
}

}  // namespace kirby
