#ifndef BRAUERDET_RENDER_HPP
#define BRAUERDET_RENDER_HPP

#include <string>

#include "brauerdet/diagram.hpp"

namespace brauerdet {

// SVG picture of a diagram: top row above bottom row, unit horizontal
// spacing, arcs drawn as straight segments, cups bulging down and caps
// bulging up with depth proportional to their span, labels per the chosen
// labeling. Purely presentational; crossing counts always come from the
// combinatorial predicates.
std::string render_svg(const BrauerDiagram& d, Labeling lab);

}  // namespace brauerdet

#endif
