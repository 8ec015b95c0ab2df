// Command-line front end for the weight diagram calculus library.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
// mismatch.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdc/core.hpp"
#include "wdc/ctd.hpp"
#include "wdc/diagrams.hpp"
#include "wdc/oracle.hpp"
#include "wdc/render.hpp"
#include "wdc/tails.hpp"

namespace {

using namespace wdc;

struct Options {
  std::string weight_text;
  std::string base_text;
  std::string set_text;
  std::string format = "ascii";
  std::optional<int> from;
  std::optional<int> to;
  int bound = 3;
  int jobs = 1;
  int m = 2;
  int n = 2;
};

BaseWord resolve_base(const Options& opt, const ShiftedWeight& w) {
  if (!opt.base_text.empty() && !opt.set_text.empty())
    throw Error(Errc::parse, "give either --base or --set, not both");
  if (!opt.base_text.empty()) {
    BaseWord word = BaseWord::parse(opt.base_text);
    if (word.m() != w.m() || word.n() != w.n())
      throw Error(Errc::dimension_mismatch,
                  "base word shape (" + std::to_string(word.m()) + "|" +
                      std::to_string(word.n()) +
                      ") does not match the weight");
    return word;
  }
  if (!opt.set_text.empty())
    return base_from_incomparable_set(IncomparableSet::parse(opt.set_text),
                                      w.m(), w.n());
  throw Error(Errc::parse, "this command needs --base WORD or --set \"i:j,...\"");
}

std::string weights_json(const std::vector<ShiftedWeight>& list) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& w : list) root.push_back(w.str());
  return root.dump();
}

int dispatch(const std::string& command, const Options& opt) {
  const bool json = opt.format == "json";
  const bool svg = opt.format == "svg";
  auto weight = [&]() { return ShiftedWeight::parse(opt.weight_text); };

  if (command == "diagram") {
    WeightDiagram d = weight_diagram(weight());
    if (json)
      std::cout << render_json(d) << "\n";
    else if (svg)
      std::cout << render_svg(d, {}, opt.from, opt.to);
    else
      std::cout << render_ascii(d, {}, opt.from, opt.to);
    return 0;
  }
  if (command == "arrows") {
    ShiftedWeight w = weight();
    ArrowDiagram ad = arrow_diagram(w);
    Overlays ov;
    for (size_t i = 0; i < ad.k.size(); ++i)
      ov.arrows.emplace_back(ad.start[i], ad.k[i]);
    if (json) {
      nlohmann::ordered_json root;
      root["start"] = ad.start;
      root["k"] = ad.k;
      root["M"] = ad.M;
      std::cout << root.dump() << "\n";
    } else if (svg) {
      std::cout << render_svg(weight_diagram(w), ov, opt.from, opt.to);
    } else {
      std::cout << render_ascii(weight_diagram(w), ov, opt.from, opt.to);
    }
    return 0;
  }
  if (command == "caps") {
    ShiftedWeight w = weight();
    CapDiagram cd = cap_diagram(w);
    Overlays ov;
    for (const Cap& c : cd.caps) ov.caps.emplace_back(c.start, c.end);
    if (json) {
      nlohmann::ordered_json root = nlohmann::ordered_json::array();
      for (const Cap& c : cd.caps)
        root.push_back({{"start", c.start}, {"end", c.end}});
      std::cout << root.dump() << "\n";
    } else if (svg) {
      std::cout << render_svg(weight_diagram(w), ov, opt.from, opt.to);
    } else {
      std::cout << render_ascii(weight_diagram(w), ov, opt.from, opt.to);
    }
    return 0;
  }
  if (command == "dual") {
    ShiftedWeight w = weight();
    DualArrowDiagram dd = dual_arrow_diagram(w);
    Overlays ov;
    for (size_t j = 0; j < dd.l.size(); ++j)
      ov.arrows.emplace_back(dd.start[j], dd.l[j]);
    if (json) {
      nlohmann::ordered_json root;
      root["start"] = dd.start;
      root["l"] = dd.l;
      root["N"] = dd.N;
      std::cout << root.dump() << "\n";
    } else if (svg) {
      std::cout << render_svg(weight_diagram(w), ov, opt.from, opt.to);
    } else {
      std::cout << render_ascii(weight_diagram(w), ov, opt.from, opt.to);
    }
    return 0;
  }
  if (command == "ctd") {
    Ctd c = ctd(weight());
    std::cout << (json ? render_ctd_json(c) + "\n" : render_ctd_ascii(c));
    return 0;
  }
  if (command == "transport") {
    ShiftedWeight w = weight();
    std::cout << shifted_weight_for_base(w, resolve_base(opt, w)).str()
              << "\n";
    return 0;
  }
  if (command == "anti") {
    WeightDiagram d = anti_distinguished_diagram(weight());
    if (json)
      std::cout << render_json(d) << "\n";
    else if (svg)
      std::cout << render_svg(d, {}, opt.from, opt.to);
    else
      std::cout << render_ascii(d, {}, opt.from, opt.to);
    return 0;
  }
  if (command == "walk") {
    std::vector<ShiftedWeight> walk = distinguished_to_anti_walk(weight());
    if (json) {
      std::cout << weights_json(walk) << "\n";
    } else {
      // one shared window so the steps line up
      std::optional<int> lo = opt.from, hi = opt.to;
      for (const auto& w : walk) {
        WeightDiagram d = weight_diagram(w);
        if (d.cells.empty()) continue;
        if (!opt.from)
          lo = std::min(lo.value_or(d.cells.begin()->first - 1),
                        d.cells.begin()->first - 1);
        if (!opt.to)
          hi = std::max(hi.value_or(d.cells.rbegin()->first + 1),
                        d.cells.rbegin()->first + 1);
      }
      for (const auto& w : walk) {
        std::cout << w.str() << "\n";
        std::cout << render_ascii(weight_diagram(w), {}, lo, hi);
      }
    }
    return 0;
  }
  if (command == "atoms") {
    ShiftedWeight w = weight();
    if (json) {
      nlohmann::ordered_json root = nlohmann::ordered_json::array();
      for (const Atom& at : atom_index_sets(w)) {
        nlohmann::ordered_json entry;
        entry["pos"] = at.pos;
        entry["neg"] = at.neg;
        entry["segment"] = {at.segment.lo, at.segment.hi};
        entry["weight"] = atom_weight(w, at).str();
        root.push_back(entry);
      }
      std::cout << root.dump() << "\n";
    } else {
      for (const Atom& at : atom_index_sets(w)) {
        std::cout << "indices {";
        for (size_t t = 0; t < at.pos.size(); ++t)
          std::cout << (t ? "," : "") << at.pos[t];
        for (int j : at.neg) std::cout << ",-" << j;
        std::cout << "}  segment [" << at.segment.lo << ", " << at.segment.hi
                  << "]  weight " << atom_weight(w, at).str() << "\n";
      }
    }
    return 0;
  }
  if (command == "tail") {
    std::cout << tail(weight()) << "\n";
    return 0;
  }
  if (command == "longtail") {
    std::cout << longtail_via_ctd(weight()) << "\n";
    return 0;
  }
  if (command == "hwt") {
    std::vector<ShiftedWeight> list = hwt(weight());
    if (json) {
      std::cout << weights_json(list) << "\n";
    } else {
      for (const auto& w : list) std::cout << w.str() << "\n";
    }
    return 0;
  }
  if (command == "phi") {
    DaggerDiagram dag = phi(weight());
    if (json)
      std::cout << render_json(dag.diagram) << "\n";
    else if (svg)
      std::cout << render_svg(dag.diagram, {}, opt.from, opt.to);
    else
      std::cout << render_ascii(dag.diagram, {}, opt.from, opt.to);
    return 0;
  }
  if (command == "psi") {
    // argument is the diagram JSON emitted by `phi --format json`
    WeightDiagram d = parse_diagram_json(opt.weight_text);
    std::cout << psi(dagger_from_diagram(d)).str() << "\n";
    return 0;
  }
  if (command == "sigma") {
    std::cout << sigma_lambda(weight()).str() << "\n";
    return 0;
  }
  if (command == "verify") {
    OracleReport report = run_verification_suite(opt.m, opt.n, opt.bound);
    std::cout << report.to_json() << "\n";
    return report.ok() ? 0 : 3;
  }
  if (command == "search") {
    std::vector<GapWitness> hits =
        search_tail_gap(opt.m, opt.n, opt.bound, opt.jobs);
    for (const GapWitness& g : hits) {
      nlohmann::ordered_json line;
      line["weight"] = g.weight.str();
      line["tail"] = g.tail_value;
      line["longtail"] = g.longtail_value;
      line["sigma_lambda"] = g.sigma.str();
      line["witness_base"] = g.witness_base.str();
      std::cout << line.dump() << "\n";
    }
    return 0;
  }
  throw Error(Errc::parse, "unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight diagram calculus for gl(m|n)"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> weight_commands = {
      "diagram", "arrows", "caps", "dual", "ctd",  "transport", "anti",
      "walk",    "atoms",  "tail", "longtail", "hwt", "phi", "psi", "sigma"};
  for (const std::string& name : weight_commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("weight", opt.weight_text,
                    name == "psi" ? "diagram JSON" : "shifted weight text")
        ->required();
    sub->add_option("--base", opt.base_text, "base word over {e,d}");
    sub->add_option("--set", opt.set_text, "incomparable set \"i:j,...\"");
    sub->add_option("--format", opt.format, "ascii, json or svg")
        ->check(CLI::IsMember({"ascii", "json", "svg"}));
    sub->add_option("--from", [&opt](const CLI::results_t& res) {
      opt.from = std::stoi(res[0]);
      return true;
    }, "left edge of the display window");
    sub->add_option("--to", [&opt](const CLI::results_t& res) {
      opt.to = std::stoi(res[0]);
      return true;
    }, "right edge of the display window");
  }
  for (const std::string& name : {std::string("verify"), std::string("search")}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("m", opt.m, "number of eps coordinates")->required();
    sub->add_option("n", opt.n, "number of delta coordinates")->required();
    sub->add_option("--bound", opt.bound, "position bound");
    sub->add_option("--jobs", opt.jobs, "parallel workers (search only)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
