#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "wdc/render.hpp"
#include "wdc/ctd.hpp"
#include "wdc/tails.hpp"

using namespace wdc;

namespace {

ShiftedWeight sw(const char* text) { return ShiftedWeight::parse(text); }

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t count = 0, at = 0;
  while ((at = hay.find(needle, at)) != std::string::npos) {
    ++count;
    at += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("ascii symbols and window") {
  std::string out = render_ascii(weight_diagram(sw("4 2 0 | 0 -3 -5")));
  // columns -1..6: one char per position
  CHECK(out.substr(0, out.find('\n')) == "oXo><><o");
  CHECK(out.find("stacked:") == std::string::npos);

  std::string empty = render_ascii(WeightDiagram{});
  CHECK(empty.substr(0, empty.find('\n')) == "ooo");

  std::string stacked = render_ascii(weight_diagram(sw("4 4 2 | -1 -2 -4 -4 -5")));
  CHECK(stacked.substr(0, stacked.find('\n')) == "o<XoX<o");  // window 0..6
  CHECK(stacked.find("stacked: 4=X2") != std::string::npos);
}

TEST_CASE("ascii window overrides") {
  WeightDiagram d = weight_diagram(sw("0 | 0"));
  std::string out = render_ascii(d, {}, 0, 4);
  CHECK(out.substr(0, out.find('\n')) == "Xoooo");
}

TEST_CASE("ascii overlays") {
  ShiftedWeight w = sw("4 3 1 0 | 0 -1 -4 -5");
  ArrowDiagram ad = arrow_diagram(w);
  Overlays ov;
  for (size_t i = 0; i < ad.k.size(); ++i)
    ov.arrows.emplace_back(ad.start[i], ad.k[i]);
  std::string out = render_ascii(weight_diagram(w), ov);
  // deterministic golden over the window [-1, 7]
  const std::string expected =
      " .->.--> \n"
      "  .->.-->\n"
      "oXXo>X<oo\n"
      " |    |  \n"
      " 0    5  \n";
  CHECK(out == expected);
}

TEST_CASE("json round trip") {
  for (const char* text :
       {"4 2 0 | 0 -3 -5", "4 4 2 | -1 -2 -4 -4 -5", " | "}) {
    WeightDiagram d = weight_diagram(sw(text));
    std::string json = render_json(d);
    WeightDiagram back = parse_diagram_json(json);
    CHECK(back == d);
    CHECK(render_json(back) == json);
  }
  CHECK_THROWS_AS(parse_diagram_json("{"), Error);
  CHECK_THROWS_AS(parse_diagram_json("{\"positions\": [{\"p\": 0, \"x\": 1, "
                                     "\"marker\": \"xx\"}]}"),
                  Error);
}

TEST_CASE("ascii and json agree on symbol placement") {
  for (const char* text : {"4 2 0 | 0 -3 -5", "5 4 3 0 -1 | 1 0 -3 -4 -5"}) {
    WeightDiagram d = weight_diagram(sw(text));
    WeightDiagram parsed = parse_diagram_json(render_json(d));
    std::string a1 = render_ascii(d);
    std::string a2 = render_ascii(parsed);
    CHECK(a1 == a2);
  }
}

TEST_CASE("svg structure") {
  std::string empty = render_svg(WeightDiagram{});
  CHECK(empty.find("<svg") == 0);
  CHECK(empty.rfind("</svg>\n") == empty.size() - 7);

  ShiftedWeight w = sw("4 3 1 0 | 0 -1 -4 -5");
  ArrowDiagram ad = arrow_diagram(w);
  Overlays arrows;
  for (size_t i = 0; i < ad.k.size(); ++i)
    arrows.arrows.emplace_back(ad.start[i], ad.k[i]);
  std::string svg = render_svg(weight_diagram(w), arrows);
  CHECK(count_occurrences(svg, "class=\"arrow\"") == 4);  // one path per arrow

  CapDiagram cd = cap_diagram(w);
  Overlays caps;
  for (const Cap& c : cd.caps) caps.caps.emplace_back(c.start, c.end);
  std::string csvg = render_svg(weight_diagram(w), caps);
  CHECK(count_occurrences(csvg, "class=\"cap\"") == 3);

  // byte determinism
  CHECK(render_svg(weight_diagram(w), arrows) == svg);
}

TEST_CASE("walk figures render as frozen goldens") {
  ShiftedWeight w = sw("6 4 3 0 | 0 -1 -4 -5");
  std::vector<ShiftedWeight> walk = distinguished_to_anti_walk(w);
  REQUIRE(walk.size() == 5);
  std::vector<std::string> lines;
  for (const ShiftedWeight& step : walk) {
    std::string text = render_ascii(weight_diagram(step), {}, -1, 8);
    lines.push_back(text.substr(0, text.find('\n')));
  }
  CHECK(lines[0] == "oX<o>X<>oo");
  CHECK(lines[1] == "oo<X>X<>oo");
  CHECK(lines[2] == "oo<X>X<>oo");
  CHECK(lines[3] == "oo<X>o<Xoo");
  CHECK(lines[4] == "oo<X>o<>Xo");
  // the fourth step stacks a cross under the marker at position 6
  std::string step3 = render_ascii(weight_diagram(walk[3]), {}, -1, 8);
  CHECK(step3.find("stacked: 6=X1>") != std::string::npos);
}

TEST_CASE("ctd renderings") {
  Ctd c = ctd(sw("4 3 0 | 0 -1 -3 -4 -5"));
  CHECK(render_ctd_ascii(c) ==
        "..###\n"
        "..###\n"
        "##...\n");
  CHECK(render_ctd_json(c) ==
        "{\"m\":3,\"n\":5,\"rows\":[{\"i\":1,\"jmin\":3,\"jmax\":5},"
        "{\"i\":2,\"jmin\":3,\"jmax\":5},{\"i\":3,\"jmin\":1,\"jmax\":2}]}");
  Ctd typical = ctd(sw("5 3 | 0 -1"));
  CHECK(render_ctd_json(typical) == "{\"m\":2,\"n\":2,\"rows\":[]}");
}
