#include "kirby/fourman.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>

#include "text_util.hpp"

namespace kirby {

KirbySkeleton::KirbySkeleton(std::array<std::size_t, 5> handles, std::vector<FreeWord> words)
    : h_(handles), words_(std::move(words)) {
  if (words_.size() != h_[2]) throw KirbyError("need one attaching word per 2-handle");
  for (const auto& w : words_)
    if (w.generators() != h_[1]) throw KirbyError("attaching words must use one generator per 1-handle");
}

long KirbySkeleton::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < 5; ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(h_[k]);
  return chi;
}

IntegerMatrix boundary2(const KirbySkeleton& sk) {
  IntegerMatrix d(sk.handles()[1], sk.handles()[2]);
  for (std::size_t k = 0; k < sk.words().size(); ++k)
    for (int l : sk.words()[k].letters()) d(static_cast<std::size_t>(std::abs(l)) - 1, k) += l > 0 ? 1 : -1;
  return d;
}

AbelianGroup pi1_abelianization(const KirbySkeleton& sk) { return cokernel(boundary2(sk)); }

std::array<AbelianGroup, 5> closed4_homology(const KirbySkeleton& sk) {
  const auto& h = sk.handles();
  if (h[0] != 1 || h[4] != 1) throw KirbyError("a closed connected 4-manifold needs one 0-handle and one 4-handle");
  const AbelianGroup h1 = pi1_abelianization(sk);
  const long b1 = static_cast<long>(h1.free_rank);
  const long b2 = sk.euler_characteristic() - 2 + 2 * b1;
  if (b2 < 0) {
    throw KirbyError("handle counts are inconsistent with duality (second Betti number " + std::to_string(b2) + ")");
  }
  if (static_cast<std::size_t>(b1) > h[3]) throw KirbyError("fewer 3-handles than the first Betti number");
  AbelianGroup h2 = free_abelian(static_cast<std::size_t>(b2));
  h2.torsion = h1.torsion;
  return {free_abelian(1), h1, h2, free_abelian(static_cast<std::size_t>(b1)), free_abelian(1)};
}

KirbySkeleton parse_kirby_skeleton(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const std::string usage = "kirby4 h=<h0> <h1> <h2> <h3> <h4>";
  if (lines.empty()) throw KirbyError("missing header '" + usage + "'");
  const auto& head = lines.front();
  if (head.tokens.size() != 6 || head.tokens[0] != "kirby4") detail::fail_at(head, "expected header '" + usage + "'");
  std::array<std::size_t, 5> h{};
  try {
    h[0] = detail::kv_count(head.tokens[1], "h");
    for (std::size_t k = 1; k < 5; ++k)
      h[k] = detail::to_count(detail::parse_integer(head.tokens[k + 1], "handle count"), "handle count");
  } catch (const KirbyError& e) {
    detail::fail_at(head, e.what());
  }
  std::vector<FreeWord> words;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens[0] != "rel") detail::fail_at(line, "expected 'rel <letters>'");
    try {
      std::vector<int> letters;
      for (std::size_t t = 1; t < line.tokens.size(); ++t)
        letters.push_back(static_cast<int>(detail::to_long(detail::parse_integer(line.tokens[t], "letter"), "letter")));
      words.emplace_back(h[1], std::move(letters));
    } catch (const KirbyError& e) {
      detail::fail_at(line, e.what());
    }
  }
  return KirbySkeleton(h, std::move(words));
}

KirbySkeleton parse_kirby_skeleton(const std::string& text) {
  std::istringstream in(text);
  return parse_kirby_skeleton(in);
}

std::string format_kirby_skeleton(const KirbySkeleton& sk) {
  const auto& h = sk.handles();
  std::string out = "kirby4 h=" + std::to_string(h[0]);
  for (std::size_t k = 1; k < 5; ++k) out += " " + std::to_string(h[k]);
  out += "\n";
  for (const auto& w : sk.words()) {
    out += "rel";
    for (int l : w.letters()) out += " " + std::to_string(l);
    out += "\n";
  }
  return out;
}

}  // namespace kirby
