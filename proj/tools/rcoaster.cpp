// rcoaster: command-line front end for the rollercoaster library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rollercoaster/braid.hpp"
#include "rollercoaster/catalog.hpp"
#include "rollercoaster/codes.hpp"
#include "rollercoaster/embed.hpp"
#include "rollercoaster/invariants.hpp"
#include "rollercoaster/search.hpp"
#include "rollercoaster/warp.hpp"

namespace rc = rollercoaster;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const std::string kDataDir = ROLLERCOASTER_DATA_DIR;

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_source(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) throw rc::InputError("cannot open " + path);
  return read_all(in);
}

// Non-empty, non-comment lines with trailing '#' comments removed.
std::vector<std::string> code_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

std::string direction_name(rc::Direction d) { return d == rc::Direction::Forward ? "forward" : "backward"; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

json basepoint_json(rc::Basepoint b) { return {{"edge", b.edge}, {"direction", direction_name(b.direction)}}; }

// ---------------------------------------------------------------- warp

struct WarpOptions {
  std::string dt;
  std::string gauss;
  bool all_basepoints = false;
  bool mirror = false;
  bool json = false;
};

int run_warp(const WarpOptions& opt) {
  struct Input {
    std::string label;
    rc::GaussCode code;
  };
  std::vector<Input> inputs;
  if (!opt.dt.empty()) {
    const std::vector<std::string> lines = opt.dt == "-" ? code_lines(read_all(std::cin)) : std::vector{opt.dt};
    for (const auto& line : lines) {
      const auto dt = rc::parse_dt(line);
      inputs.push_back({dt.str(), rc::dt_to_gauss(dt)});
    }
  } else {
    for (const auto& line : code_lines(read_source(opt.gauss))) {
      auto g = rc::parse_gauss(line);
      inputs.push_back({g.str(), std::move(g)});
    }
  }
  if (inputs.empty()) throw rc::InputError("no code given");

  json all = json::array();
  bool first = true;
  for (const auto& in : inputs) {
    const auto best = rc::min_warp(in.code);
    const auto fwd = rc::warp_profile(in.code, rc::Direction::Forward);
    const auto bwd = rc::warp_profile(in.code, rc::Direction::Backward);
    std::optional<rc::MinWarp> mirrored;
    if (opt.mirror) mirrored = rc::min_warp(rc::mirror(in.code));
    if (opt.json) {
      json j;
      j["code"] = in.label;
      j["crossings"] = in.code.crossings();
      j["min_warp"] = best.degree;
      j["witness"] = basepoint_json(best.witness.basepoint);
      j["below"] = best.witness.below;
      j["above"] = best.witness.above;
      if (mirrored) {
        j["mirror_min_warp"] = mirrored->degree;
        j["min_warp_with_mirror"] = std::min(best.degree, mirrored->degree);
      }
      if (opt.all_basepoints) j["profile"] = {{"forward", fwd}, {"backward", bwd}};
      all.push_back(j);
      continue;
    }
    if (!first) std::cout << "\n";
    first = false;
    if (inputs.size() > 1) std::cout << "code: " << in.label << "\n";
    std::cout << "min_warp: " << best.degree << "\n";
    std::cout << "witness: edge " << best.witness.basepoint.edge << " "
              << direction_name(best.witness.basepoint.direction) << "\n";
    std::cout << "below: " << join(best.witness.below) << "\n";
    if (mirrored) {
      std::cout << "mirror_min_warp: " << mirrored->degree << "\n";
      std::cout << "min_warp_with_mirror: " << std::min(best.degree, mirrored->degree) << "\n";
    }
    if (opt.all_basepoints) {
      std::cout << "profile forward: " << join(fwd) << "\n";
      std::cout << "profile backward: " << join(bwd) << "\n";
    }
  }
  if (opt.json) std::cout << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- braid

struct BraidOptions {
  std::string word;
  std::optional<int> strands;
  std::string action;
  bool json = false;
};

json counts_json(rc::ABCounts c) { return {{"a", c.above}, {"b", c.below}}; }
std::string counts_str(rc::ABCounts c) { return "(" + std::to_string(c.above) + ", " + std::to_string(c.below) + ")"; }

int run_braid(const BraidOptions& opt) {
  const std::string text = opt.word == "-" ? read_all(std::cin) : opt.word;
  const auto word = rc::parse_braid(text, opt.strands);
  if (opt.action == "counts") {
    const auto c = rc::ab_counts(word);
    if (opt.json) std::cout << counts_json(c).dump() << "\n";
    else std::cout << counts_str(c) << "\n";
  } else if (opt.action == "unknotting") {
    const int u = rc::positive_unknotting(word);
    if (opt.json) std::cout << json{{"unknotting", u}}.dump() << "\n";
    else std::cout << u << "\n";
  } else if (opt.action == "closure-dt") {
    const auto closure = rc::closure_gauss(word);
    const auto dt = rc::canonical_dt(closure.code);
    if (opt.json) std::cout << json{{"dt", dt.str()}, {"gauss", closure.code.str()}}.dump() << "\n";
    else std::cout << dt.str() << "\n";
  } else {  // reduce
    const auto steps = rc::reduce(word);
    json out = json::array();
    for (const auto& s : steps) {
      const int n = s.word.strands();
      const auto& c = s.counts;
      std::string line;
      json j;
      switch (s.kind) {
        case rc::ReductionStep::Kind::Start:
          line = "start";
          j["step"] = "start";
          break;
        case rc::ReductionStep::Kind::SmoothBigon:
          line = "smooth bigon at (" + std::to_string(s.bigon->first) + ", " + std::to_string(s.bigon->second) + ")";
          j["step"] = "smooth_bigon";
          j["bigon"] = {s.bigon->first, s.bigon->second};
          break;
        case rc::ReductionStep::Kind::RemoveStrand:
          line = "remove strand " + std::to_string(s.removal->removed_strand) + " resolving letter " +
                 std::to_string(s.removal->resolved_letter) + " m=" + std::to_string(s.removal->m);
          j["step"] = "remove_strand";
          j["removed_strand"] = s.removal->removed_strand;
          j["resolved_letter"] = s.removal->resolved_letter;
          j["m"] = s.removal->m;
          break;
      }
      j["word"] = s.word.str();
      j["strands"] = n;
      j["counts"] = counts_json(c);
      j["a_minus_b"] = c.above - c.below;
      out.push_back(j);
      std::ostringstream os;
      os << line << ": n=" << n << " word=" << s.word.str() << " (a, b)=" << counts_str(c)
         << " a-b=" << c.above - c.below << " n-1=" << n - 1;
      if (!opt.json) std::cout << os.str() << "\n";
    }
    if (opt.json) std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify-catalog

struct CatalogOptions {
  std::string catalog = kDataDir + "/catalog.csv";
  std::string refs = kDataDir + "/jones_refs.dat";
  std::string json_out;
  bool quiet = false;
};

int run_verify_catalog(const CatalogOptions& opt) {
  const auto entries = rc::load_catalog(opt.catalog);
  const auto refs = rc::load_jones_refs(opt.refs);
  const auto reports = rc::verify_catalog(entries, refs);

  // With the JSON on stdout, the text report moves to stderr.
  std::ostream& text = opt.json_out == "-" ? std::cerr : text;
  bool all_pass = true;
  json rows = json::array();
  std::vector<std::string> collisions;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass();
    rows.push_back(r.to_json());
    for (const auto& f : r.flags)
      if (f.starts_with("Jones collision")) collisions.push_back(r.name);
    if (opt.quiet && r.pass()) continue;
    text << (r.pass() ? "PASS " : "FAIL ") << r.name << " min_warp=" << r.computed_min_warp
              << " expected=" << r.expected << " crossings=" << r.witness_crossings << " rc=" << r.rc_crossing
              << " id=" << r.identification;
    for (const auto& c : r.checks)
      if (!c.pass) text << " failed:" << c.name;
    for (const auto& f : r.flags) text << " [" << f << "]";
    text << "\n";
  }

  // Class counts cover the two tables only.
  std::optional<rc::ClassCounts> counts;
  try {
    counts = rc::summarize(rc::entries_in_tables(entries, {"1", "2"}));
  } catch (const rc::InputError& e) {
    text << "counts unavailable: " << e.what() << "\n";
    all_pass = false;
  }
  if (counts) text << counts->str() << "\n";
  text << "jones collisions: " << (collisions.empty() ? "none" : "") ;
  for (std::size_t i = 0; i < collisions.size(); ++i) text << (i ? " " : "") << collisions[i];
  text << "\n";
  text << "rows: " << reports.size() << " " << (all_pass ? "all checks pass" : "FAILURES") << "\n";

  if (!opt.json_out.empty()) {
    json doc;
    doc["rows"] = rows;
    if (counts) doc["counts"] = {{"SRC", counts->src}, {"RC", counts->rc}, {"Neither", counts->neither},
                                 {"Unknown", counts->unknown}};
    doc["jones_collisions"] = collisions;
    doc["pass"] = all_pass;
    if (opt.json_out == "-") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(opt.json_out);
      if (!out) throw rc::InputError("cannot write " + opt.json_out);
      out << doc.dump(2) << "\n";
    }
  }
  return all_pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- search

struct SearchOptions {
  int max = 8;
  int crossings = 3;
  bool offline = false;
  bool json = false;
  std::string csv;
};

int search_cap(const SearchOptions& opt) { return opt.offline ? rc::kDefaultSearchCap : 8; }

int run_conjecture(const SearchOptions& opt) {
  const auto rows = rc::conjecture_report(opt.max, search_cap(opt));
  bool all = true;
  json out = json::array();
  if (!opt.json) std::cout << "# diagram-level a_min: minimum warping degree over reduced alternating diagrams\n"
                           << "c a_min ceil(c/4) match diagrams witness\n";
  for (const auto& r : rows) {
    all = all && r.match;
    if (opt.json) {
      out.push_back({{"crossings", r.crossings}, {"a_min", r.a_min}, {"predicted", r.predicted},
                     {"match", r.match}, {"diagrams", r.diagrams}, {"witness", r.witness.str()}});
    } else {
      std::cout << r.crossings << " " << r.a_min << " " << r.predicted << " " << (r.match ? "yes" : "no") << " "
                << r.diagrams << " " << r.witness.str() << "\n";
    }
  }
  if (opt.json) std::cout << json{{"level", "diagram"}, {"rows", out}}.dump(2) << "\n";
  return all ? kExitOk : kExitFailure;
}

int run_enumerate(const SearchOptions& opt) {
  std::optional<std::ofstream> csv;
  if (!opt.csv.empty()) {
    csv.emplace(opt.csv);
    if (!*csv) throw rc::InputError("cannot write " + opt.csv);
    *csv << "crossings,dt_code,min_warp\n";
  }
  int count = 0;
  rc::for_each_alternating(
      opt.crossings,
      [&](const rc::DTCode& code) {
        ++count;
        const int d = rc::min_warp(rc::dt_to_gauss(code)).degree;
        if (csv) *csv << opt.crossings << ",\"" << code.str() << "\"," << d << "\n";
        else std::cout << code.str() << " min_warp=" << d << "\n";
      },
      search_cap(opt));
  std::cout << "diagrams: " << count << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- jones

struct JonesOptions {
  std::string dt;
  std::string braid;
  std::string refs = kDataDir + "/jones_refs.dat";
  bool identify = false;
};

int run_jones(const JonesOptions& opt) {
  const rc::PlanarDiagram pd = !opt.dt.empty() ? rc::realize(rc::parse_dt(opt.dt))
                                               : rc::pd_from_braid(rc::parse_braid(opt.braid));
  const auto v = rc::jones(pd);
  std::cout << "jones: " << v.str() << "\n";
  if (opt.identify) std::cout << "identify: " << rc::identify_jones(v, rc::load_jones_refs(opt.refs)).str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roller-coaster algorithm, positive braids and knot-table verification"};
  app.require_subcommand(1);

  WarpOptions warp;
  auto* warp_cmd = app.add_subcommand("warp", "Minimal warping degree of a diagram");
  auto* dt_opt = warp_cmd->add_option("--dt", warp.dt, "DT code, e.g. \"[4, 6, 2]\" ('-' reads stdin)");
  auto* gauss_opt = warp_cmd->add_option("--gauss", warp.gauss, "File of signed Gauss codes ('-' reads stdin)");
  dt_opt->excludes(gauss_opt);
  warp_cmd->add_flag("--all-basepoints", warp.all_basepoints, "Print the degree at every basepoint");
  warp_cmd->add_flag("--mirror", warp.mirror, "Also minimise over the mirror diagram");
  warp_cmd->add_flag("--json", warp.json, "JSON output");

  BraidOptions braid;
  auto* braid_cmd = app.add_subcommand("braid", "Positive braid operations");
  braid_cmd->add_option("--word", braid.word, "Braid word, e.g. \"1 2 1 2\" or \"s1^3\"")->required();
  braid_cmd->add_option("--strands", braid.strands, "Strand count (default: largest index + 1)");
  braid_cmd->add_option("action", braid.action, "counts | unknotting | closure-dt | reduce")
      ->required()
      ->check(CLI::IsMember({"counts", "unknotting", "closure-dt", "reduce"}));
  braid_cmd->add_flag("--json", braid.json, "JSON output");

  CatalogOptions cat;
  auto* cat_cmd = app.add_subcommand("verify-catalog", "Verify every catalog row and recompute the class counts");
  cat_cmd->add_option("--catalog", cat.catalog, "Catalog CSV")->capture_default_str();
  cat_cmd->add_option("--refs", cat.refs, "Reference Jones polynomials")->capture_default_str();
  cat_cmd->add_option("--json", cat.json_out, "Write the JSON report to this file ('-' for stdout)");
  cat_cmd->add_flag("--quiet", cat.quiet, "Only print failing rows and the summary");

  SearchOptions search;
  auto* conj_cmd = app.add_subcommand("conjecture", "Diagram-level a_min(c) against ceil(c/4)");
  conj_cmd->add_option("--max", search.max, "Largest crossing number")->capture_default_str();
  conj_cmd->add_flag("--offline", search.offline, "Allow crossing numbers up to 10");
  conj_cmd->add_flag("--json", search.json, "JSON output");

  auto* enum_cmd = app.add_subcommand("enumerate", "List reduced alternating diagrams by canonical DT code");
  enum_cmd->add_option("--crossings", search.crossings, "Crossing number")->required();
  enum_cmd->add_option("--csv", search.csv, "Write codes to this CSV file");
  enum_cmd->add_flag("--offline", search.offline, "Allow crossing numbers up to 10");

  JonesOptions jopt;
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a DT code or braid closure");
  auto* jdt = jones_cmd->add_option("--dt", jopt.dt, "DT code");
  auto* jbraid = jones_cmd->add_option("--braid", jopt.braid, "Braid word");
  jdt->excludes(jbraid);
  jones_cmd->add_flag("--identify", jopt.identify, "Match against the reference table");
  jones_cmd->add_option("--refs", jopt.refs, "Reference Jones polynomials")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*warp_cmd) {
      if (warp.dt.empty() && warp.gauss.empty()) throw rc::InputError("one of --dt or --gauss is required");
      return run_warp(warp);
    }
    if (*braid_cmd) return run_braid(braid);
    if (*cat_cmd) return run_verify_catalog(cat);
    if (*conj_cmd) return run_conjecture(search);
    if (*enum_cmd) return run_enumerate(search);
    if (*jones_cmd) {
      if (jopt.dt.empty() && jopt.braid.empty()) throw rc::InputError("one of --dt or --braid is required");
      return run_jones(jopt);
    }
  } catch (const rc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
