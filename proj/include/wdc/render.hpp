#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdc/ctd.hpp"
#include "wdc/diagrams.hpp"

// Text renderings of diagrams: ASCII (one character column per integer
// position), JSON, and SVG. All three are byte-deterministic for a fixed
// input.
namespace wdc {

/// Arc overlays drawn above the symbol line. Arrows get a '>' head, caps
/// get plain ends. A zero-length arc renders as a single '*'.
struct Overlays {
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::pair<int, int>> caps;
};

/// Window defaults to [min symbol - 1, max symbol + 1], widened to cover
/// overlay endpoints; explicit bounds win.
std::string render_ascii(const WeightDiagram& d, const Overlays& overlays = {},
                         std::optional<int> from = std::nullopt,
                         std::optional<int> to = std::nullopt);

/// {"positions": [{"p": int, "x": int, "marker": "gt"|"lt"|null}, ...]}
std::string render_json(const WeightDiagram& d);
WeightDiagram parse_diagram_json(const std::string& text);

std::string render_svg(const WeightDiagram& d, const Overlays& overlays = {},
                       std::optional<int> from = std::nullopt,
                       std::optional<int> to = std::nullopt);

/// m lines of n characters, '#' for set bits.
std::string render_ctd_ascii(const Ctd& c);
/// {"m": int, "n": int, "rows": [{"i": int, "jmin": int, "jmax": int}]}
/// with empty rows absent.
std::string render_ctd_json(const Ctd& c);

}  // namespace wdc
