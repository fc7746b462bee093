// gem: catalog, analysis, and mapping-torus CLI over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gemc.h"

using nlohmann::json;

namespace {

constexpr int kExitBadInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    std::exit(kExitBadInput);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(kExitBadInput);
  }
  out << text;
}

[[noreturn]] void fail(gemc_status st) {
  std::cerr << "error: " << gemc_last_error() << "\n";
  std::exit(static_cast<int>(st));
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { gemc_string_free(s); }
};

struct GraphGuard {
  gemc_graph* g = nullptr;
  ~GraphGuard() { gemc_graph_free(g); }
};

gemc_graph* load_graph(const std::string& path) {
  gemc_graph* g = nullptr;
  if (auto st = gemc_graph_decode(read_input(path).c_str(), &g); st != GEMC_OK) fail(st);
  return g;
}

std::string abelian_text(const json& h1) {
  long long free_rank = h1["free_rank"].get<long long>();
  std::string s;
  for (long long i = 0; i < free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
  for (const auto& t : h1["torsion"]) s += (s.empty() ? "Z/" : " + Z/") + t.dump();
  return s.empty() ? "0" : s;
}

std::string half_text(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

// Optional isomorphism argument: "auto" / empty -> NULL (library picks the
// lexicographically least shift-1 isomorphism), otherwise a document path.
std::string iso_arg(const std::string& arg) {
  if (arg.empty() || arg == "auto") return "";
  return read_input(arg);
}

int run_reproduce(const std::string& theorem, const json& params, bool as_json) {
  StringGuard out;
  auto st = gemc_reproduce(theorem.c_str(), params.dump().c_str(), &out.s);
  if (st != GEMC_OK && st != GEMC_ERR_MISMATCH) fail(st);
  if (as_json) {
    std::cout << out.s;
  } else {
    for (const auto& row : json::parse(out.s)) {
      std::cout << (row["pass"].get<bool>() ? "PASS" : "FAIL") << "  thm " << theorem << "  "
                << row["item"].get<std::string>() << "  (|V|=" << row["vertices"] << ")"
                << "  claimed=" << row["claimed"].get<std::string>()
                << "  computed=" << row["computed"].get<std::string>() << "\n";
    }
  }
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-colored graph crystallizations: catalog, invariants, mapping tori"};
  app.require_subcommand(1);

  // catalog list | catalog emit
  auto* catalog = app.add_subcommand("catalog", "built-in crystallization families");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list families and their parameters");

  auto* emit = catalog->add_subcommand("emit", "write one catalog graph document");
  std::string emit_family, emit_kind, emit_out;
  int emit_d = -1, emit_q = -1;
  bool emit_twisted = false;
  emit->add_option("family", emit_family, "sphere|sphere_bundle|lens|projective|surface")
      ->required();
  emit->add_option("--d", emit_d, "dimension parameter");
  emit->add_option("--q", emit_q, "lens parameter");
  emit->add_option("--kind", emit_kind, "surface kind: rp2|klein|torus|genus2");
  emit->add_flag("--twisted", emit_twisted, "non-orientable sphere bundle");
  emit->add_option("-o,--output", emit_out, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "compute invariants of a graph document");
  std::string analyze_file;
  bool opt_genus = false, opt_orientable = false, opt_json = false;
  std::vector<int> opt_h1;
  analyze->add_option("file", analyze_file, "graph document ('-' for stdin)")->required();
  analyze->add_flag("--genus", opt_genus, "regular genus sweep over all cyclic permutations");
  analyze->add_option("--h1", opt_h1, "fundamental group + H1 for a color pair i j")
      ->expected(2);
  analyze->add_flag("--orientable", opt_orientable, "bipartiteness / orientability");
  analyze->add_flag("--json", opt_json, "raw JSON report");

  // torus build
  auto* torus = app.add_subcommand("torus", "mapping-torus construction");
  auto* build = torus->add_subcommand("build", "build the mapping-torus crystallization");
  std::string build_file, build_iso = "auto", build_iso2, build_out, build_intermediates_out;
  bool build_intermediates = false;
  build->add_option("file", build_file, "base graph document ('-' for stdin)")->required();
  build->add_option("--iso", build_iso, "shift-1 isomorphism document, or 'auto'");
  build->add_option("--iso2", build_iso2, "closing isomorphism document, or 'auto' (default: same as --iso)");
  build->add_flag("--intermediates", build_intermediates, "also print the intermediate stages");
  build->add_option("-o,--output", build_out, "output file (default stdout)");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "check claimed invariant tables");
  std::string theorem;
  int rep_d = -1, rep_q = -1, rep_h = -1;
  bool rep_json = false, rep_table = false;
  reproduce->set_help_flag("--help", "print help");  // frees -h for the --h parameter
  reproduce->add_option("--theorem", theorem, "1.1|1.2|1.3|1.4")->required();
  reproduce->add_option("--d", rep_d, "restrict dimension");
  reproduce->add_option("--q", rep_q, "restrict lens parameter");
  reproduce->add_option("--h", rep_h, "restrict genus parameter");
  reproduce->add_flag("--json", rep_json, "JSON rows");
  reproduce->add_flag("--table", rep_table, "plain table (default)");

  // export dot
  auto* exp = app.add_subcommand("export", "export formats");
  auto* dot = exp->add_subcommand("dot", "Graphviz text");
  std::string dot_file, dot_eps, dot_out;
  dot->add_option("file", dot_file, "graph document ('-' for stdin)")->required();
  dot->add_option("--eps", dot_eps, "cyclic permutation as comma-separated colors");
  dot->add_option("-o,--output", dot_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  if (catalog->parsed() && catalog->get_subcommand("list")->parsed()) {
    StringGuard out;
    if (auto st = gemc_catalog_list(&out.s); st != GEMC_OK) fail(st);
    std::cout << out.s;
    return 0;
  }

  if (emit->parsed()) {
    json params = json::object();
    if (emit_d >= 0) params["d"] = emit_d;
    if (emit_q >= 0) params["q"] = emit_q;
    if (!emit_kind.empty()) params["kind"] = emit_kind;
    if (emit_family == "sphere_bundle") params["orientable"] = !emit_twisted;
    GraphGuard g;
    if (auto st = gemc_catalog_emit(emit_family.c_str(), params.dump().c_str(), &g.g);
        st != GEMC_OK)
      fail(st);
    StringGuard text;
    if (auto st = gemc_graph_encode(g.g, &text.s); st != GEMC_OK) fail(st);
    write_output(emit_out, text.s);
    return 0;
  }

  if (analyze->parsed()) {
    GraphGuard g{load_graph(analyze_file)};
    json options = json::object();
    if (opt_genus) options["genus"] = true;
    if (opt_orientable) options["orientable"] = true;
    if (opt_h1.size() == 2) options["h1"] = opt_h1;
    StringGuard out;
    if (auto st = gemc_graph_analyze(g.g, options.dump().c_str(), &out.s); st != GEMC_OK)
      fail(st);
    if (opt_json) {
      std::cout << out.s;
      return 0;
    }
    json rep = json::parse(out.s);
    std::cout << "colors: " << rep["colors"] << "  vertices: " << rep["vertices"] << "\n";
    std::cout << "regular: " << (rep["regular"].get<bool>() ? "yes" : "no")
              << "  connected: " << (rep["connected"].get<bool>() ? "yes" : "no");
    if (rep.contains("contracted"))
      std::cout << "  contracted: " << (rep["contracted"].get<bool>() ? "yes" : "no");
    std::cout << "\n";
    if (rep.contains("gem_complexity"))
      std::cout << "gem-complexity bound: " << rep["gem_complexity"] << "\n";
    if (rep.contains("orientable"))
      std::cout << "orientable: " << (rep["orientable"].get<bool>() ? "yes" : "no") << "\n";
    if (rep.contains("genus")) {
      const auto& gen = rep["genus"];
      std::cout << "min regular genus: " << half_text(gen["min_rho_doubled"].get<long long>())
                << "  at eps=" << gen["minimizing_eps"].dump() << "  ("
                << gen["sweep"].size() << " permutation classes)\n";
    }
    if (rep.contains("h1")) {
      std::cout << "pi1: " << rep["pi1_presentation"]["generators"] << " generators, "
                << rep["pi1_presentation"]["relators"].size() << " relators\n";
      std::cout << "H1: " << abelian_text(rep["h1"]) << "\n";
    }
    return 0;
  }

  if (build->parsed()) {
    GraphGuard base{load_graph(build_file)};
    std::string iso_doc = iso_arg(build_iso);
    std::string iso2_doc = iso_arg(build_iso2);
    GraphGuard result;
    StringGuard intermediates;
    auto st = gemc_torus_build(base.g, iso_doc.empty() ? nullptr : iso_doc.c_str(),
                               iso2_doc.empty() ? nullptr : iso2_doc.c_str(), &result.g,
                               build_intermediates ? &intermediates.s : nullptr);
    if (st != GEMC_OK) fail(st);
    StringGuard text;
    if (auto st2 = gemc_graph_encode(result.g, &text.s); st2 != GEMC_OK) fail(st2);
    write_output(build_out, text.s);
    if (build_intermediates) std::cerr << intermediates.s;
    return 0;
  }

  if (reproduce->parsed()) {
    json params = json::object();
    if (rep_d >= 0) params["d"] = rep_d;
    if (rep_q >= 0) params["q"] = rep_q;
    if (rep_h >= 0) params["h"] = rep_h;
    return run_reproduce(theorem, params, rep_json && !rep_table);
  }

  if (dot->parsed()) {
    GraphGuard g{load_graph(dot_file)};
    std::string eps_json;
    if (!dot_eps.empty()) {
      json arr = json::array();
      std::istringstream ss(dot_eps);
      std::string tok;
      while (std::getline(ss, tok, ',')) arr.push_back(std::stoi(tok));
      eps_json = arr.dump();
    }
    StringGuard out;
    if (auto st = gemc_graph_dot(g.g, eps_json.empty() ? nullptr : eps_json.c_str(), &out.s);
        st != GEMC_OK)
      fail(st);
    write_output(dot_out, out.s);
    return 0;
  }

  return kExitBadInput;
}
