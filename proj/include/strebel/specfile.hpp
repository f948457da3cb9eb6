#pragma once

#include <map>
#include <string>

#include "strebel/surface.hpp"

namespace strebel {

// Result of parsing a surface-spec text: the validated surface plus any
// curve families declared with `curve`/`pairing` directives.  All curves
// share one family whose pairing defaults to zero off-diagonal entries.
struct ParsedSpec {
    CylinderSurface surface;
    std::shared_ptr<const CurveFamily> family;  // null when no curves declared
    std::map<std::string, MeasuredMulticurve> curves;
};

// Directive-per-line format:
//   cylinder <label> a=<real> b=<real>
//   segment <id> cyl=<label> side=top|bottom off=<real> len=<real>
//   glue <id> <id> sign=+|-
//   curve <name> weights=<w1,...,wk>
//   pairing <j> <j'> <value>
// Reals accept decimal or p/q notation; blank lines and `#` comments are
// ignored.  When every numeric literal is rational the surface carries
// exact data and is validated exactly.
ParsedSpec parse_surface_spec(const std::string& text);

// Deterministic serialization; re-parses to an equal surface.
std::string serialize_surface_spec(const ParsedSpec& spec);

}  // namespace strebel
