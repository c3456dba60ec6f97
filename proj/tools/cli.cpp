#include "cli.hpp"

#include "hexafern/count.hpp"
#include "hexafern/formulas.hpp"
#include "hexafern/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace hexafern::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

int get_int(const json& params, const char* key) {
  if (!params.contains(key)) bad(std::string("missing parameter \"") + key + "\"");
  const json& v = params.at(key);
  if (!v.is_number_integer()) bad(std::string("parameter \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> get_list(const json& params, const char* key) {
  if (!params.contains(key)) bad(std::string("missing parameter \"") + key + "\"");
  const json& v = params.at(key);
  if (!v.is_array()) bad(std::string("parameter \"") + key + "\" must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(std::string("parameter \"") + key + "\" must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      bad("unknown field \"" + key + "\" in " + where);
    }
  }
}

Family base_family(Family f) {
  switch (f) {
    case Family::Pp: return Family::P;
    case Family::Qp: return Family::Q;
    case Family::Kp: return Family::K;
    case Family::Lbar: return Family::L;
    case Family::Rp: return Family::R;
    default: return f;
  }
}

Family promote(Family f) {
  switch (f) {
    case Family::P: return Family::Pp;
    case Family::Q: return Family::Qp;
    case Family::K: return Family::Kp;
    case Family::L: return Family::Lbar;
    case Family::R: return Family::Rp;
    case Family::F: bad("family F has no primed version");
    default: return f;
  }
}

std::string read_spec_text(const std::string& arg) {
  auto first = std::find_if(arg.begin(), arg.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != arg.end() && *first == '{') return arg;
  std::ostringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(arg);
    if (!in) bad("cannot read spec file '" + arg + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::uint64_t node_cap_from_env() {
  const char* env = std::getenv("HEXAFERN_NODE_CAP");
  if (!env || !*env) return kDefaultNodeCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) bad(std::string("HEXAFERN_NODE_CAP must be a positive integer, got '") + env + "'");
  return v;
}

// --- SVG -------------------------------------------------------------------

constexpr double kUnit = 24.0;  // pixels per unit edge
constexpr double kMargin = 12.0;

struct Pt {
  double x, y;
};

Pt to_svg(int h, int k) { return {(2.0 * k + h) * kUnit / 2.0, h * kUnit * std::sqrt(3.0) / 2.0}; }

std::vector<LatticePoint> corners(const TriCoord& t) {
  if (t.orient == Orient::Up) return {{t.row, t.col}, {t.row + 1, t.col}, {t.row + 1, t.col - 1}};
  return {{t.row, t.col}, {t.row, t.col + 1}, {t.row + 1, t.col}};
}

// Four corners of a lozenge in cyclic order: the two shared-edge ends
// separated by the two far corners.
std::vector<LatticePoint> lozenge_corners(const Lozenge& l) {
  const auto a = corners(l.first), b = corners(l.second);
  std::vector<LatticePoint> shared, far;
  for (const auto& p : a) (std::find(b.begin(), b.end(), p) != b.end() ? shared : far).push_back(p);
  for (const auto& p : b) {
    if (std::find(a.begin(), a.end(), p) == a.end()) far.push_back(p);
  }
  return {shared[0], far[0], shared[1], far[1]};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + kMargin);
  return buf;
}

std::string points_attr(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& p : pts) {
    const Pt q = to_svg(p.h, p.k);
    if (!s.empty()) s += ' ';
    s += fmt(q.x) + "," + fmt(q.y);
  }
  return s;
}

std::string path_d(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& p : pts) {
    const Pt q = to_svg(p.h, p.k);
    s += (s.empty() ? "M" : " L") + fmt(q.x) + " " + fmt(q.y);
  }
  return s + " Z";
}

const char* kind_class(LozengeKind k) {
  switch (k) {
    case LozengeKind::Vertical: return "vertical";
    case LozengeKind::LeftTilting: return "left";
    case LozengeKind::RightTilting: return "right";
  }
  return "";
}

// --- subcommands -----------------------------------------------------------

struct Options {
  std::string spec;
  std::string method = "search";
  bool no_memo = false;
  bool print_spec = false;
  bool tiling = false;
  std::string output;
  std::vector<std::string> suites;
  std::string out;
  bool inject_fault = false;
  bool quiet = false;
  unsigned threads = 0;
  std::uint64_t no_memo_cap = SuiteConfig{}.no_memo_cap;
  SweepBounds bounds;
};

int cmd_count(const Options& o, std::ostream& out) {
  const RegionSpec spec = parse_spec(read_spec_text(o.spec));
  if (o.print_spec) {
    out << spec_document(spec) << "\n";
    return ok;
  }
  CountOptions opts;
  opts.memoize = !o.no_memo;
  opts.node_cap = node_cap_from_env();
  const WeightedRegion region = build(spec);
  const Rational v = o.method == "dual" ? count_matchings_dual(region, opts) : count_tilings(region, opts).value;
  out << to_string(v) << "\n";
  return ok;
}

int cmd_formula(const Options& o, std::ostream& out, std::ostream& err) {
  const RegionSpec spec = parse_spec(read_spec_text(o.spec));
  if (o.print_spec) {
    out << spec_document(spec) << "\n";
    return ok;
  }
  const FormulaValue v = evaluate(spec);
  out << to_string(v.value) << "\n";
  err << "hypothesis: " << (v.hypothesis_ok ? "satisfied" : "not satisfied") << "\n";
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  if (!o.suites.empty()) config.suites = o.suites;
  config.bounds = o.bounds;
  config.threads = o.threads;
  config.inject_fault = o.inject_fault;
  config.no_memo_cap = o.no_memo_cap;
  config.count.node_cap = node_cap_from_env();
  const auto reports = run_suites(config);
  bool all_ok = true;
  for (const auto& r : reports) {
    all_ok = all_ok && r.passed();
    if (!o.quiet || !r.passed()) out << report_text(r);
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) bad("cannot write '" + o.out + "'");
    f << report_json(reports);
  }
  return all_ok ? ok : failed;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const RegionSpec spec = parse_spec(read_spec_text(o.spec));
  if (o.print_spec) {
    out << spec_document(spec) << "\n";
    return ok;
  }
  const RegionGeometry g = build_geometry(spec);
  std::optional<Tiling> tiling;
  if (o.tiling) {
    CountOptions opts;
    opts.node_cap = node_cap_from_env();
    tiling = find_one_tiling(g.region, opts);
    if (!tiling) {
      err << "error: " << describe(spec) << " has no tiling\n";
      return failed;
    }
  }
  const std::string svg = render_svg(g, tiling);
  if (o.output.empty() || o.output == "-") {
    out << svg;
  } else {
    std::ofstream f(o.output);
    if (!f) bad("cannot write '" + o.output + "'");
    f << svg;
  }
  return ok;
}

}  // namespace

RegionSpec parse_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("spec must be a JSON object");
  only_keys(doc, {"family", "params", "primed"}, "spec");
  if (!doc.contains("family") || !doc["family"].is_string()) bad("spec needs a string \"family\"");
  if (!doc.contains("params") || !doc["params"].is_object()) bad("spec needs an object \"params\"");
  bool primed = false;
  if (doc.contains("primed")) {
    if (!doc["primed"].is_boolean()) bad("\"primed\" must be a boolean");
    primed = doc["primed"].get<bool>();
  }

  RegionSpec s;
  s.family = parse_family(doc["family"].get<std::string>());
  if (primed) s.family = promote(s.family);
  const json& p = doc["params"];
  switch (s.family) {
    case Family::P:
    case Family::Pp:
      only_keys(p, {"a", "b", "c"}, "params");
      s.a = get_int(p, "a");
      s.b = get_int(p, "b");
      s.c = get_int(p, "c");
      break;
    case Family::Q:
    case Family::Qp:
    case Family::K:
    case Family::Kp:
      only_keys(p, {"t"}, "params");
      s.t = get_list(p, "t");
      break;
    case Family::L:
    case Family::Lbar:
      only_keys(p, {"m", "n", "positions"}, "params");
      s.m = get_int(p, "m");
      s.n = get_int(p, "n");
      s.positions = get_list(p, "positions");
      break;
    case Family::R:
    case Family::Rp:
    case Family::F:
      only_keys(p, {"x", "y", "z", "a"}, "params");
      s.x = get_int(p, "x");
      s.y = get_int(p, "y");
      s.z = get_int(p, "z");
      s.fern = get_list(p, "a");
      break;
  }
  return s;
}

std::string spec_document(const RegionSpec& spec) {
  json params;
  switch (spec.family) {
    case Family::P:
    case Family::Pp: params = {{"a", spec.a}, {"b", spec.b}, {"c", spec.c}}; break;
    case Family::Q:
    case Family::Qp:
    case Family::K:
    case Family::Kp: params = {{"t", spec.t}}; break;
    case Family::L:
    case Family::Lbar: params = {{"m", spec.m}, {"n", spec.n}, {"positions", spec.positions}}; break;
    case Family::R:
    case Family::Rp:
    case Family::F: params = {{"x", spec.x}, {"y", spec.y}, {"z", spec.z}, {"a", spec.fern}}; break;
  }
  json doc = {{"family", family_name(base_family(spec.family))}, {"params", params}, {"primed", is_primed(spec.family)}};
  return doc.dump();
}

std::string render_svg(const RegionGeometry& g, const std::optional<Tiling>& tiling) {
  int max_h = 0, max_x2 = 0;
  auto grow = [&](const LatticePoint& p) {
    max_h = std::max(max_h, p.h);
    max_x2 = std::max(max_x2, 2 * p.k + p.h);
  };
  for (const auto& p : g.outline) grow(p);
  for (const auto& t : g.region.cells()) {
    for (const auto& p : corners(t)) grow(p);
  }
  for (const auto& t : g.removed) {
    for (const auto& p : corners(t)) grow(p);
  }
  const double width = max_x2 * kUnit / 2.0 + 2 * kMargin;
  const double height = max_h * kUnit * std::sqrt(3.0) / 2.0 + 2 * kMargin;

  std::ostringstream s;
  char size[96];
  std::snprintf(size, sizeof size, "width=\"%.2f\" height=\"%.2f\" viewBox=\"0 0 %.2f %.2f\"", width, height, width,
                height);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" " << size << ">\n"
    << "<style>"
       ".outline{fill:none;stroke:#000;stroke-width:2}"
       ".hole{fill:#555;stroke:#000;stroke-width:1}"
       ".lozenge{stroke:#222;stroke-width:0.8}"
       ".vertical{fill:#e8c170}.left{fill:#7fa7d9}.right{fill:#b5d99c}"
       ".half{stroke:#c00;stroke-width:1.6;stroke-dasharray:3 2}"
       ".notch{fill:#c00}"
       "</style>\n";
  if (!g.outline.empty()) s << "<path class=\"outline\" d=\"" << path_d(g.outline) << "\"/>\n";
  for (const auto& t : g.removed) s << "<path class=\"hole\" d=\"" << path_d(corners(t)) << "\"/>\n";
  if (tiling) {
    for (const auto& l : tiling->lozenges) {
      const bool weighted = g.region.weights().count(l) > 0;
      s << "<polygon class=\"lozenge " << kind_class(l.kind) << (weighted ? " half" : "") << "\" points=\""
        << points_attr(lozenge_corners(l)) << "\"/>\n";
    }
  }
  // weighted lozenge positions: a dot on the shared edge
  for (const auto& [l, w] : g.region.weights()) {
    const auto c = lozenge_corners(l);
    const Pt a = to_svg(c[0].h, c[0].k), b = to_svg(c[2].h, c[2].k);
    char dot[128];
    std::snprintf(dot, sizeof dot, "<circle class=\"notch\" cx=\"%s\" cy=\"%s\" r=\"2.5\"><title>%s</title></circle>\n",
                  fmt((a.x + b.x) / 2).c_str(), fmt((a.y + b.y) / 2).c_str(), to_string(w).c_str());
    s << dot;
  }
  s << "</svg>\n";
  return s.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact lozenge-tiling counts for halved hexagons with ferns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hexafern 0.1.0");

  const std::string spec_help = "region spec: inline JSON, a file path, or - for stdin";
  auto* count = app.add_subcommand("count", "count tilings with the search oracle");
  count->add_option("spec", o.spec, spec_help)->required();
  count->add_option("--method", o.method, "search or dual")->check(CLI::IsMember({"search", "dual"}));
  count->add_flag("--no-memo", o.no_memo, "disable memoization of the search");
  count->add_flag("--print-spec", o.print_spec, "print the canonical spec and exit");

  auto* formula = app.add_subcommand("formula", "evaluate the closed form");
  formula->add_option("spec", o.spec, spec_help)->required();
  formula->add_flag("--print-spec", o.print_spec, "print the canonical spec and exit");

  auto* verify = app.add_subcommand("verify", "run identity checks over parameter sweeps");
  std::string suite_list;
  for (const auto& n : suite_names()) suite_list += (suite_list.empty() ? "" : ", ") + n;
  verify->add_option("--suite", o.suites, "suite to run (repeatable): all, " + suite_list);
  verify->add_option("--out", o.out, "write the JSON report here");
  verify->add_flag("--inject-fault", o.inject_fault, "add 1 to every right-hand side (harness self-test)");
  verify->add_flag("--quiet", o.quiet, "only print failing suites");
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)");
  verify->add_option("--no-memo-cap", o.no_memo_cap, "node cap for the unmemoized side of the memo suite");
  verify->add_option("--max-x", o.bounds.x_max);
  verify->add_option("--max-y", o.bounds.y_max);
  verify->add_option("--max-z", o.bounds.z_max);
  verify->add_option("--max-fern-len", o.bounds.fern_len_max);
  verify->add_option("--fern-values", o.bounds.fern_values)->delimiter(',');
  verify->add_option("--max-pbc", o.bounds.pbc_max);
  verify->add_option("--max-t-len", o.bounds.t_len_max);
  verify->add_option("--max-t-sum", o.bounds.t_sum_max);
  verify->add_option("--max-mn", o.bounds.mn_max);
  verify->add_option("--max-lgv-k", o.bounds.lgv_k_max);
  verify->add_option("--max-lgv-pos", o.bounds.lgv_pos_max);
  verify->add_option("--krattenthaler-points", o.bounds.krattenthaler_points);

  auto* render = app.add_subcommand("render", "draw the region as SVG");
  render->add_option("spec", o.spec, spec_help)->required();
  render->add_flag("--tiling", o.tiling, "draw one tiling");
  render->add_option("-o,--output", o.output, "output file (default stdout)");
  render->add_flag("--print-spec", o.print_spec, "print the canonical spec and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*formula) return cmd_formula(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*render) return cmd_render(o, out, err);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return resource_cap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  }
  return usage;
}

}  // namespace hexafern::cli
