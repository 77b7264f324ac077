#pragma once

// Crossing-sign records of a link diagram, enough to read off linking
// numbers and blackboard framings.
//
// Sign convention: a right-handed crossing counts +1. With the over-strand
// pointing up, the crossing is positive when the under-strand runs from
// right to left.
//
// Components are numbered 1..k.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "kirby/intmat.hpp"

namespace kirby {

struct Crossing {
  std::size_t over = 1;
  std::size_t under = 1;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class PlanarDiagram {
 public:
  explicit PlanarDiagram(std::size_t components, std::vector<Crossing> crossings = {});

  std::size_t components() const noexcept { return components_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  /// Every crossing sign negated.
  PlanarDiagram mirror() const;
  /// Reverses the orientation of one component; flips the sign of each
  /// crossing between it and another component.
  PlanarDiagram reverse_orientation(std::size_t component) const;
  /// Adds a kink of the given sign to a component.
  PlanarDiagram with_kink(std::size_t component, int sign) const;
  /// This diagram next to `other`, whose components are renumbered after ours.
  PlanarDiagram disjoint_union(const PlanarDiagram& other) const;

 private:
  std::size_t components_;
  std::vector<Crossing> crossings_;
};

/// Half the signed count of crossings between a and b.
long linking_number(const PlanarDiagram& pd, std::size_t a, std::size_t b);

/// Signed count of self-crossings (the blackboard framing).
long writhe(const PlanarDiagram& pd, std::size_t a);

/// Diagonal = writhes, off-diagonal = linking numbers.
IntegerMatrix linking_matrix_from_pd(const PlanarDiagram& pd);

// Text format: header `pd components=<k>`, then `x <over> <under> <+1|-1>`
// lines; `#` starts a comment line.
PlanarDiagram parse_planar_diagram(std::istream& in);
PlanarDiagram parse_planar_diagram(const std::string& text);
std::string format_planar_diagram(const PlanarDiagram& pd);

}  // namespace kirby
