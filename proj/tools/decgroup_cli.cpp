// decgroup: command-line front end for decomposition groups of
// zero-dimensional ideals.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <decgroup/decgroup.hpp>

namespace {

using json = nlohmann::json;
using namespace decgroup;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotZeroDimensional = 2,
  kTimeout = 3,
  kContainment = 4,
  kNotRadical = 5,
  kTooLarge = 6,
};

struct RunConfig {
  std::string order = "degrevlex";
  std::string radical = "auto";
  std::size_t cutoff = kDefaultSymbolicCutoff;
  double timeout = 600;
  bool json = false;
  bool show_basis = false;
  std::string cache_dir;
  std::string group;
};

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RadicalPolicy parse_policy(const std::string& s) {
  if (s == "auto") return RadicalPolicy::automatic;
  if (s == "strict") return RadicalPolicy::strict;
  if (s == "off") return RadicalPolicy::off;
  throw Error("unknown radical policy: " + s);
}

std::vector<std::string> format_all(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_poly(p));
  return out;
}

json group_json(const PermGroup& g) {
  const auto r = describe(g);
  json elements = json::array();
  for (const auto& e : g.elements()) elements.push_back(e.to_cycles());
  return {{"order", r.order}, {"generators", r.generators}, {"tag", r.tag}, {"elements", elements}};
}

std::string blocks_text(const std::vector<std::size_t>& block) {
  std::string s = "{";
  for (std::size_t k = 0; k < block.size(); ++k) s += (k ? "," : "") + std::to_string(block[k] + 1);
  return s + "}";
}

// --- Groebner basis cache -------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

GroebnerBasis cached_basis(const PolynomialSystem& sys, const RunConfig& cfg, const Deadline& deadline,
                           json& info) {
  const auto key_text = format_system(sys) + "\norder: " + cfg.order;
  const auto compute = [&] {
    BuchbergerStats st;
    auto g = buchberger(sys.polys, deadline, &st);
    info["pairs_processed"] = st.pairs_processed;
    info["zero_reductions"] = st.zero_reductions;
    return g;
  };
  if (cfg.cache_dir.empty()) return compute();

  namespace fs = std::filesystem;
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.gb.json", static_cast<unsigned long long>(fnv1a(key_text)));
  const fs::path path = fs::path(cfg.cache_dir) / name;
  if (fs::exists(path)) {
    const json entry = json::parse(read_file(path.string()));
    if (entry.value("key", std::string()) == key_text) {
      std::vector<Polynomial> gens;
      for (const auto& line : entry.at("basis")) gens.push_back(parse_polynomial(line.get<std::string>(), sys.ring));
      info["cache"] = "hit";
      return GroebnerBasis::adopt(sys.ring, std::move(gens));
    }
    info["cache"] = "collision";
  } else {
    info["cache"] = "miss";
  }
  auto g = compute();
  fs::create_directories(cfg.cache_dir);
  std::ofstream out(path);
  out << json{{"schema", 1}, {"key", key_text}, {"basis", format_all(g.generators())}}.dump(1) << "\n";
  return g;
}

// --- commands ---------------------------------------------------------------

json cmd_dec(const std::string& file, const RunConfig& cfg) {
  Stopwatch clock;
  const auto sys = parse_system(read_file(file), parse_order_kind(cfg.order));
  DecOptions opts;
  opts.radical = parse_policy(cfg.radical);
  opts.symbolic_cutoff = cfg.cutoff;
  opts.deadline = Deadline::after(std::chrono::duration<double>(cfg.timeout));
  json gb_info = json::object();
  const GroebnerBasis g = cached_basis(sys, cfg, opts.deadline, gb_info);
  const double t_gb = clock.lap();
  const DecResult r = dec_group(g, opts);
  const double t_dec = clock.lap();

  json rep{{"schema", 1}, {"command", "dec"}, {"variables", sys.ring->names()}, {"order", cfg.order}};
  if (cfg.show_basis) rep["groebner_basis"] = format_all(g.generators());
  if (r.radicalized && cfg.show_basis) rep["radical_basis"] = format_all(r.basis.generators());
  rep["unit_ideal"] = r.unit_ideal;
  rep["radicalized"] = r.radicalized;
  rep["dimension"] = r.dimension;
  rep["char_polys"] = format_all(r.char_polys);
  json blocks = json::array();
  for (std::size_t k = 0; k < r.partition.blocks.size(); ++k) {
    json b{{"variables", blocks_text(r.partition.blocks[k])}, {"sym", group_json(r.block_groups[k])}};
    if (k < r.block_polys.size()) b["F"] = format_poly(r.block_polys[k]);
    blocks.push_back(b);
  }
  rep["partition"] = r.partition.to_string();
  rep["blocks"] = blocks;
  rep["strategy"] = to_string(r.strategy);
  rep["candidate_group"] = group_json(r.candidate_group);
  rep["dec_group"] = group_json(r.dec_group);
  rep["warnings"] = r.warnings;
  rep["groebner"] = gb_info;
  rep["timings"] = {{"groebner_s", t_gb}, {"dec_s", t_dec}};
  return rep;
}

json cmd_sym(const std::string& file, const RunConfig&) {
  const auto sys = parse_system(read_file(file));
  if (sys.polys.size() != 1)
    throw Error("expected exactly one polynomial, found " + std::to_string(sys.polys.size()));
  const std::size_t n = sys.ring->arity();
  std::string extra = "lambda";
  while (sys.ring->index_of(extra)) extra += "_";
  const Polynomial f = sys.polys.front().embedded(with_extra_variable(sys.ring, extra));
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const PermGroup g = sym_group(f, all, n);
  return {{"schema", 1},
          {"command", "sym"},
          {"variables", sys.ring->names()},
          {"polynomial", format_poly(sys.polys.front())},
          {"sym_group", group_json(g)}};
}

json cmd_zeros_dec(const std::string& file, const RunConfig&) {
  const auto pts = parse_points(read_file(file));
  const auto r = dec_from_points(pts.points);
  json sets = json::array();
  for (const auto& s : r.coordinate_sets) {
    json row = json::array();
    for (const auto& c : s) row.push_back(to_string(c));
    sets.push_back(row);
  }
  json warnings = json::array();
  if (r.dec_group.order() < r.candidate_group.order())
    warnings.push_back("block-preserving candidates have order " + std::to_string(r.candidate_group.order()) +
                       " but Dec has order " + std::to_string(r.dec_group.order()));
  return {{"schema", 1},
          {"command", "zeros-dec"},
          {"variables", pts.names},
          {"points", pts.points.size()},
          {"coordinate_sets", sets},
          {"partition", r.partition.to_string()},
          {"candidate_group", group_json(r.candidate_group)},
          {"dec_group", group_json(r.dec_group)},
          {"warnings", warnings}};
}

json cmd_orbit(const std::string& system_file, const std::string& tri_file, const RunConfig& cfg) {
  Stopwatch clock;
  const auto sys = parse_system(read_file(system_file), parse_order_kind(cfg.order));
  const auto tri = parse_system(read_file(tri_file), parse_order_kind(cfg.order));
  if (tri.ring->names() != sys.ring->names()) throw Error("triangular set and system declare different variables");
  std::vector<Polynomial> tpolys;
  for (const auto& p : tri.polys) tpolys.push_back(p.in_ring(sys.ring));
  const auto check = is_triangular(tpolys);
  if (!check) throw Error("input is not a triangular set: " + check.reason);

  const Deadline deadline = Deadline::after(std::chrono::duration<double>(cfg.timeout));
  json gb_info = json::object();
  const GroebnerBasis g = cached_basis(sys, cfg, deadline, gb_info);
  const std::size_t n = sys.ring->arity();
  PermGroup group;
  std::string source;
  if (!cfg.group.empty()) {
    group = group_closure(parse_permutation_list(cfg.group, n), n);
    source = "explicit";
  } else {
    DecOptions opts;
    opts.radical = parse_policy(cfg.radical);
    opts.symbolic_cutoff = cfg.cutoff;
    opts.deadline = deadline;
    group = dec_group(g, opts).dec_group;
    source = "dec";
  }
  const auto report = orbit_triangular(*check.set, group, g, deadline);
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"sigma", e.sigma.to_cycles()}, {"set", format_all(e.set.polys)}, {"verified", e.verified}});
  return {{"schema", 1},
          {"command", "orbit"},
          {"variables", sys.ring->names()},
          {"input", format_all(check.set->polys)},
          {"input_regular", is_regular(*check.set)},
          {"group_source", source},
          {"group", group_json(group)},
          {"orbit", entries},
          {"not_triangular", report.not_triangular},
          {"violations", report.violations},
          {"groebner", gb_info},
          {"timings", {{"total_s", clock.lap()}}}};
}

// --- text rendering ---------------------------------------------------------

void print_group(std::ostream& os, const std::string& label, const json& g) {
  const std::string indent(label.find_first_not_of(' ') + 2, ' ');
  os << label << ": order " << g["order"].get<std::size_t>();
  const auto tag = g["tag"].get<std::string>();
  if (!tag.empty()) os << ", " << tag;
  os << "\n" << indent << "generators:";
  if (g["generators"].empty()) os << " none";
  for (const auto& s : g["generators"]) os << " " << s.get<std::string>();
  os << "\n" << indent << "elements:";
  for (const auto& s : g["elements"]) os << " " << s.get<std::string>();
  os << "\n";
}

void print_list(std::ostream& os, const std::string& label, const json& list) {
  os << label << ":\n";
  for (const auto& s : list) os << "  " << s.get<std::string>() << "\n";
}

void print_text(std::ostream& os, const json& rep) {
  const auto cmd = rep["command"].get<std::string>();
  os << "variables:";
  for (const auto& v : rep["variables"]) os << " " << v.get<std::string>();
  os << "\n";
  if (cmd == "dec") {
    os << "order: " << rep["order"].get<std::string>() << "\n";
    if (rep.contains("groebner_basis")) print_list(os, "groebner basis", rep["groebner_basis"]);
    if (rep.contains("radical_basis")) print_list(os, "radical basis", rep["radical_basis"]);
    os << "unit ideal: " << (rep["unit_ideal"].get<bool>() ? "yes" : "no") << "\n";
    os << "radicalized: " << (rep["radicalized"].get<bool>() ? "yes" : "no") << "\n";
    os << "quotient dimension: " << rep["dimension"].get<std::size_t>() << "\n";
    os << "characteristic polynomials:\n";
    std::size_t i = 0;
    for (const auto& f : rep["char_polys"]) os << "  f" << ++i << " = " << f.get<std::string>() << "\n";
    os << "partition: " << rep["partition"].get<std::string>() << "\n";
    os << "strategy: " << rep["strategy"].get<std::string>() << "\n";
    for (const auto& b : rep["blocks"]) {
      os << "block " << b["variables"].get<std::string>() << ":\n";
      if (b.contains("F")) os << "  F = " << b["F"].get<std::string>() << "\n";
      print_group(os, "  Sym", b["sym"]);
    }
    print_group(os, "candidate group", rep["candidate_group"]);
    print_group(os, "Dec", rep["dec_group"]);
  } else if (cmd == "sym") {
    os << "polynomial: " << rep["polynomial"].get<std::string>() << "\n";
    print_group(os, "Sym", rep["sym_group"]);
  } else if (cmd == "zeros-dec") {
    os << "points: " << rep["points"].get<std::size_t>() << "\n";
    std::size_t i = 0;
    for (const auto& s : rep["coordinate_sets"]) {
      os << "S" << ++i << " = {";
      bool first = true;
      for (const auto& c : s) {
        os << (first ? "" : ", ") << c.get<std::string>();
        first = false;
      }
      os << "}\n";
    }
    os << "partition: " << rep["partition"].get<std::string>() << "\n";
    print_group(os, "candidate group", rep["candidate_group"]);
    print_group(os, "Dec", rep["dec_group"]);
  } else if (cmd == "orbit") {
    os << "input: [";
    bool first = true;
    for (const auto& p : rep["input"]) {
      os << (first ? "" : ", ") << p.get<std::string>();
      first = false;
    }
    os << "]\ninput regular: " << (rep["input_regular"].get<bool>() ? "yes" : "no") << "\n";
    print_group(os, "group (" + rep["group_source"].get<std::string>() + ")", rep["group"]);
    os << "orbit (" << rep["orbit"].size() << " triangular sets, " << rep["not_triangular"].get<std::size_t>()
       << " non-triangular images):\n";
    for (const auto& e : rep["orbit"]) {
      os << "  " << e["sigma"].get<std::string>() << " [";
      first = true;
      for (const auto& p : e["set"]) {
        os << (first ? "" : ", ") << p.get<std::string>();
        first = false;
      }
      os << "] " << (e["verified"].get<bool>() ? "verified" : "NOT CONTAINED") << "\n";
    }
    for (const auto& v : rep["violations"]) os << "violation: " << v.get<std::string>() << "\n";
  }
  if (rep.contains("groebner") && rep["groebner"].contains("cache"))
    os << "cache: " << rep["groebner"]["cache"].get<std::string>() << "\n";
  if (rep.contains("warnings"))
    for (const auto& w : rep["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  if (rep.contains("timings"))
    for (const auto& [k, v] : rep["timings"].items()) os << "time " << k << ": " << v.get<double>() << "\n";
}

int fail(int code, const std::string& msg) {
  std::cerr << "decgroup: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition groups of zero-dimensional ideals"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string file, second;

  const auto common = [&](CLI::App* sub, bool algebra) {
    sub->add_flag("--json", cfg.json, "Emit a JSON report");
    if (!algebra) return;
    sub->add_option("--order", cfg.order, "Monomial order")
        ->check(CLI::IsMember({"lex", "grlex", "degrevlex"}));
    sub->add_option("--radical", cfg.radical, "Radicalization policy")
        ->check(CLI::IsMember({"auto", "strict", "off"}));
    sub->add_option("--cutoff", cfg.cutoff, "Largest quotient dimension for symbolic determinants")
        ->check(CLI::PositiveNumber);
    sub->add_option("--timeout", cfg.timeout, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
    sub->add_option("--cache", cfg.cache_dir, "Directory for cached Groebner bases");
  };

  auto* dec = app.add_subcommand("dec", "Dec(I) of a polynomial system");
  dec->add_option("system", file, "System file")->required();
  dec->add_flag("--basis", cfg.show_basis, "Include the reduced Groebner basis");
  common(dec, true);

  auto* sym = app.add_subcommand("sym", "Sym(F) of a single polynomial");
  sym->add_option("polynomial", file, "Polynomial file")->required();
  common(sym, false);

  auto* zeros = app.add_subcommand("zeros-dec", "Dec from an explicit zero set");
  zeros->add_option("points", file, "Points file")->required();
  common(zeros, false);

  auto* orbit = app.add_subcommand("orbit", "Orbit of a triangular set under Dec(I)");
  orbit->add_option("system", file, "System file")->required();
  orbit->add_option("triangular", second, "Triangular set file")->required();
  orbit->add_option("--group", cfg.group, "Group generators, e.g. \"(1 2),(1 2 3 4 5)\"");
  common(orbit, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    json rep;
    if (*dec) rep = cmd_dec(file, cfg);
    else if (*sym) rep = cmd_sym(file, cfg);
    else if (*zeros) rep = cmd_zeros_dec(file, cfg);
    else rep = cmd_orbit(file, second, cfg);
    if (cfg.json) std::cout << rep.dump(2) << "\n";
    else print_text(std::cout, rep);
    for (const auto& v : rep.value("violations", json::array()))
      std::cerr << "decgroup: violation: " << v.get<std::string>() << "\n";
    return kOk;
  } catch (const NotZeroDimensional& e) {
    return fail(kNotZeroDimensional, e.what());
  } catch (const Timeout& e) {
    return fail(kTimeout, e.what());
  } catch (const ContainmentFailure& e) {
    return fail(kContainment, e.what());
  } catch (const NotRadical& e) {
    return fail(kNotRadical, e.what());
  } catch (const EnumerationCapExceeded& e) {
    return fail(kTooLarge, e.what());
  } catch (const CutoffExceeded& e) {
    return fail(kTooLarge, e.what());
  } catch (const ParseError& e) {
    return fail(kUsage, e.what());
  } catch (const std::exception& e) {
    return fail(kUsage, e.what());
  }
}
