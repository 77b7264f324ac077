#pragma once

// Curve systems read off the encoded diagrams under data/pd, compiled in
// from data/constants.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kirby/homlink.hpp"
#include "kirby/pdcode.hpp"

namespace kirby {

/// Six curves: the associated links of the three Y2-claspers of the IHX
/// clasper, in V_4.
const CurveSystemShadow& ihx_block();
/// Nine curves: the admissible associated links of the same claspers.
const CurveSystemShadow& ihx_adm_block();
/// Four curves of the lantern relation, in V_3.
const CurveSystemShadow& lantern_k();
/// Three curves on the other side of the lantern relation.
const CurveSystemShadow& lantern_kprime();

/// The compiled-in text of data/constants/<stem>.curves.
std::string_view embedded_constant_text(std::string_view stem);

/// The first `strands` components of the diagram are the dotted circles of
/// the handlebody; the rest become curves whose classes are their linking
/// numbers with those circles.
CurveSystemShadow curve_system_from_pd(const PlanarDiagram& pd, std::size_t strands);

struct FigureDerivation {
  std::string pd_file;   // relative to data/pd
  std::size_t strands;
  std::string constant;  // stem under data/constants
};

const std::vector<FigureDerivation>& figure_derivations();

}  // namespace kirby
