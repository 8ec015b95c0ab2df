#include "wdc/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace wdc {

namespace {

struct Window {
  int lo = -1;
  int hi = 1;
  int width() const { return hi - lo + 1; }
  int col(int p) const { return p - lo; }
};

Window pick_window(const WeightDiagram& d, const Overlays& overlays,
                   std::optional<int> from, std::optional<int> to) {
  Window w;
  if (!d.cells.empty()) {
    w.lo = d.cells.begin()->first - 1;
    w.hi = d.cells.rbegin()->first + 1;
  }
  for (const auto& [s, e] : overlays.arrows) {
    w.lo = std::min(w.lo, std::min(s, e));
    w.hi = std::max(w.hi, std::max(s, e));
  }
  for (const auto& [s, e] : overlays.caps) {
    w.lo = std::min(w.lo, std::min(s, e));
    w.hi = std::max(w.hi, std::max(s, e));
  }
  if (from) w.lo = *from;
  if (to) w.hi = *to;
  if (w.hi < w.lo) w.hi = w.lo;
  return w;
}

/// Greedy lane assignment; arcs in one lane never touch.
std::vector<std::string> arc_lanes(const std::vector<std::pair<int, int>>& arcs,
                                   const Window& w, bool arrow_heads) {
  std::vector<std::string> lanes;
  std::vector<int> lane_busy_until;
  std::vector<std::pair<int, int>> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [s, e] : sorted) {
    const int lo = std::min(s, e), hi = std::max(s, e);
    if (hi < w.lo || lo > w.hi) continue;
    size_t lane = 0;
    for (; lane < lanes.size(); ++lane)
      if (lane_busy_until[lane] < lo) break;
    if (lane == lanes.size()) {
      lanes.emplace_back(static_cast<size_t>(w.width()), ' ');
      lane_busy_until.push_back(w.lo - 1);
    }
    lane_busy_until[lane] = hi;
    auto put = [&](int p, char c) {
      if (p >= w.lo && p <= w.hi)
        lanes[lane][static_cast<size_t>(w.col(p))] = c;
    };
    if (lo == hi) {
      put(lo, '*');
      continue;
    }
    for (int p = lo + 1; p < hi; ++p) put(p, '-');
    if (arrow_heads) {
      put(s, '.');
      put(e, '>');
    } else {
      put(lo, '(');
      put(hi, ')');
    }
  }
  return lanes;  // first lane holds the outermost arcs and prints on top
}

char symbol_char(const Cell& c) {
  if (c.x > 0) return 'X';
  if (c.marker == Marker::gt) return '>';
  if (c.marker == Marker::lt) return '<';
  return 'o';
}

}  // namespace

std::string render_ascii(const WeightDiagram& d, const Overlays& overlays,
                         std::optional<int> from, std::optional<int> to) {
  const Window w = pick_window(d, overlays, from, to);
  std::ostringstream out;
  for (const std::string& lane : arc_lanes(overlays.caps, w, false))
    out << lane << '\n';
  for (const std::string& lane : arc_lanes(overlays.arrows, w, true))
    out << lane << '\n';
  std::string symbols(static_cast<size_t>(w.width()), 'o');
  for (const auto& [p, c] : d.cells)
    if (p >= w.lo && p <= w.hi)
      symbols[static_cast<size_t>(w.col(p))] = symbol_char(c);
  out << symbols << '\n';
  std::string ticks(static_cast<size_t>(w.width()), ' ');
  std::string labels(static_cast<size_t>(w.width()), ' ');
  for (int p = w.lo; p <= w.hi; ++p) {
    if (p % 5 != 0) continue;
    ticks[static_cast<size_t>(w.col(p))] = '|';
    const std::string text = std::to_string(p);
    const size_t at = static_cast<size_t>(w.col(p));
    if (at + text.size() <= labels.size()) {
      bool free = true;
      for (size_t t = 0; t < text.size(); ++t)
        if (labels[at + t] != ' ') free = false;
      if (free)
        for (size_t t = 0; t < text.size(); ++t) labels[at + t] = text[t];
    }
  }
  out << ticks << '\n' << labels << '\n';
  std::string legend;
  for (const auto& [p, c] : d.cells) {
    if (c.symbols() <= 1) continue;
    if (!legend.empty()) legend += ", ";
    legend += std::to_string(p) + "=";
    if (c.x > 0) legend += "X" + std::to_string(c.x);
    if (c.marker == Marker::gt) legend += ">";
    if (c.marker == Marker::lt) legend += "<";
  }
  if (!legend.empty()) out << "stacked: " << legend << '\n';
  return out.str();
}

std::string render_json(const WeightDiagram& d) {
  nlohmann::ordered_json root;
  root["positions"] = nlohmann::ordered_json::array();
  for (const auto& [p, c] : d.cells) {
    nlohmann::ordered_json cell;
    cell["p"] = p;
    cell["x"] = c.x;
    if (c.marker == Marker::gt)
      cell["marker"] = "gt";
    else if (c.marker == Marker::lt)
      cell["marker"] = "lt";
    else
      cell["marker"] = nullptr;
    root["positions"].push_back(cell);
  }
  return root.dump();
}

WeightDiagram parse_diagram_json(const std::string& text) {
  WeightDiagram d;
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("bad diagram JSON: ") + e.what());
  }
  if (!root.contains("positions") || !root["positions"].is_array())
    throw Error(Errc::parse, "diagram JSON must have a 'positions' array");
  for (const auto& cell : root["positions"]) {
    Cell c;
    c.x = cell.value("x", 0);
    if (cell.contains("marker") && !cell["marker"].is_null()) {
      const std::string marker = cell["marker"];
      if (marker == "gt")
        c.marker = Marker::gt;
      else if (marker == "lt")
        c.marker = Marker::lt;
      else
        throw Error(Errc::parse, "bad marker '" + marker + "'");
    }
    if (c.symbols() > 0) d.cells[cell.at("p").get<int>()] = c;
  }
  return d;
}

namespace {

constexpr int kScale = 40;
constexpr int kBaseline = 120;

int svg_x(const Window& w, int p) { return w.col(p) * kScale + kScale / 2; }

void svg_glyph(std::ostringstream& out, int cx, int cy, char glyph) {
  switch (glyph) {
    case 'X':
      out << "<path class=\"sym\" d=\"M" << cx - 8 << " " << cy - 8 << " L"
          << cx + 8 << " " << cy + 8 << " M" << cx - 8 << " " << cy + 8
          << " L" << cx + 8 << " " << cy - 8 << "\"/>";
      break;
    case '>':
      out << "<path class=\"sym\" d=\"M" << cx - 8 << " " << cy - 8 << " L"
          << cx + 8 << " " << cy << " L" << cx - 8 << " " << cy + 8
          << "\"/>";
      break;
    case '<':
      out << "<path class=\"sym\" d=\"M" << cx + 8 << " " << cy - 8 << " L"
          << cx - 8 << " " << cy << " L" << cx + 8 << " " << cy + 8
          << "\"/>";
      break;
    default:
      out << "<circle class=\"sym\" cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"8\"/>";
  }
}

}  // namespace

std::string render_svg(const WeightDiagram& d, const Overlays& overlays,
                       std::optional<int> from, std::optional<int> to) {
  const Window w = pick_window(d, overlays, from, to);
  std::ostringstream out;
  const int width = w.width() * kScale;
  const int height = kBaseline + 40;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<style>.sym,.arrow,.cap{stroke:black;fill:none;stroke-width:2}"
         "text{font-family:monospace;font-size:12px}</style>\n";
  out << "<line x1=\"0\" y1=\"" << kBaseline << "\" x2=\"" << width
      << "\" y2=\"" << kBaseline << "\" stroke=\"black\"/>\n";
  for (int p = w.lo; p <= w.hi; ++p) {
    const int cx = svg_x(w, p);
    out << "<g>";
    const Cell c = d.at(p);
    if (c.symbols() == 0) {
      svg_glyph(out, cx, kBaseline, 'o');
    } else {
      int level = 0;
      if (c.marker == Marker::gt) svg_glyph(out, cx, kBaseline, '>'), level = 1;
      if (c.marker == Marker::lt) svg_glyph(out, cx, kBaseline, '<'), level = 1;
      for (int t = 0; t < c.x; ++t, ++level)
        svg_glyph(out, cx, kBaseline - 20 * level, 'X');
    }
    out << "<text x=\"" << cx - 4 << "\" y=\"" << height - 4 << "\">" << p
        << "</text>";
    out << "</g>\n";
  }
  auto arc = [&](int s, int e, const char* cls, bool head) {
    const int x1 = svg_x(w, s), x2 = svg_x(w, e);
    const int lift = 30 + 4 * std::abs(e - s);
    out << "<path class=\"" << cls << "\" d=\"M" << x1 << " "
        << kBaseline - 12 << " C" << x1 << " " << kBaseline - lift << " "
        << x2 << " " << kBaseline - lift << " " << x2 << " "
        << kBaseline - 12;
    if (head)
      out << " M" << x2 - 5 << " " << kBaseline - 22 << " L" << x2 << " "
          << kBaseline - 12 << " L" << x2 + 5 << " " << kBaseline - 22;
    out << "\"/>\n";
  };
  for (const auto& [s, e] : overlays.arrows) arc(s, e, "arrow", true);
  for (const auto& [s, e] : overlays.caps) arc(s, e, "cap", false);
  out << "</svg>\n";
  return out.str();
}

std::string render_ctd_ascii(const Ctd& c) {
  std::ostringstream out;
  for (int i = 1; i <= c.m; ++i) {
    for (int j = 1; j <= c.n; ++j) out << (c.bit(i, j) ? '#' : '.');
    out << '\n';
  }
  return out.str();
}

std::string render_ctd_json(const Ctd& c) {
  nlohmann::ordered_json root;
  root["m"] = c.m;
  root["n"] = c.n;
  root["rows"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= c.m; ++i) {
    if (c.row_empty(i)) continue;
    nlohmann::ordered_json row;
    row["i"] = i;
    row["jmin"] = c.window[static_cast<size_t>(i) - 1].first;
    row["jmax"] = c.window[static_cast<size_t>(i) - 1].second;
    root["rows"].push_back(row);
  }
  return root.dump();
}

}  // namespace wdc
