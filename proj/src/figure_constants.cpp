#include <utility>

#include "kirby/figures.hpp"

namespace kirby {

namespace {

struct Embedded {
  std::string_view stem;
  std::string_view text;
};

constexpr Embedded kEmbedded[] = {
#include "figure_constants.inc"
};

const CurveSystemShadow& load(std::string_view stem) {
  // One parsed copy per stem, built on first use.
  static const auto table = [] {
    std::vector<std::pair<std::string_view, CurveSystemShadow>> t;
    for (const auto& e : kEmbedded) t.emplace_back(e.stem, parse_curve_system(std::string(e.text)));
    return t;
  }();
  for (const auto& [name, cs] : table)
    if (name == stem) return cs;
  throw KirbyError("no compiled-in constant '" + std::string(stem) + "'");
}

}  // namespace

const CurveSystemShadow& ihx_block() { return load("ihx_block"); }
const CurveSystemShadow& ihx_adm_block() { return load("ihx_adm_block"); }
const CurveSystemShadow& lantern_k() { return load("lantern_k"); }
const CurveSystemShadow& lantern_kprime() { return load("lantern_kprime"); }

std::string_view embedded_constant_text(std::string_view stem) {
  for (const auto& e : kEmbedded)
    if (e.stem == stem) return e.text;
  throw KirbyError("no compiled-in constant '" + std::string(stem) + "'");
}

CurveSystemShadow curve_system_from_pd(const PlanarDiagram& pd, std::size_t strands) {
  if (strands > pd.components()) throw KirbyError("more strands than diagram components");
  const IntegerMatrix full = linking_matrix_from_pd(pd);
  const std::size_t m = pd.components() - strands;
  CurveSystemShadow cs{IntegerMatrix(strands, m), IntegerMatrix(m, m)};
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < strands; ++j) cs.classes(j, k) = full(j, strands + k);
    for (std::size_t l = 0; l < m; ++l) cs.internal_lk(k, l) = full(strands + k, strands + l);
  }
  return cs;
}

const std::vector<FigureDerivation>& figure_derivations() {
  static const std::vector<FigureDerivation> table = {
      {"ihx.pd", 4, "ihx_block"},
      {"ihx_adm.pd", 4, "ihx_adm_block"},
      {"lantern_a.pd", 3, "lantern_k"},
      {"lantern_b.pd", 3, "lantern_kprime"},
      {"y2_assoc_a.pd", 4, "y2_assoc_a"},
      {"y2_assoc_b.pd", 4, "y2_assoc_b"},
  };
  return table;
}

}  // namespace kirby
