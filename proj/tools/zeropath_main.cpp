// zeropath: generate, solve, reduce, and verify zero-residue terminal path
// instances. Subcommands read JSON on stdin and write JSON on stdout unless
// a file flag says otherwise, so they compose under pipes. Exit codes:
// 0 success, 1 domain failure (bad input data, infeasible operation, failed
// verification), 2 usage error.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeropath/blocks.hpp"
#include "zeropath/bundle_io.hpp"
#include "zeropath/duality.hpp"
#include "zeropath/graph.hpp"
#include "zeropath/json_io.hpp"
#include "zeropath/modpath.hpp"
#include "zeropath/reductions.hpp"
#include "zeropath/surgery.hpp"
#include "zeropath/verify.hpp"
#include "zeropath/wall.hpp"
#include "zeropath/windmill.hpp"

namespace {

using namespace zeropath;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

Json load_json(const std::string& path) { return parse_json_text(slurp(path)); }

Json paths_json(const std::vector<Path>& ps) {
  Json arr = Json::array();
  for (const Path& p : ps) arr.push_back(path_to_json(p));
  return arr;
}

Json set_json(const VertexSet& s) {
  Json arr = Json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

std::array<int, 3> three(const std::vector<int>& xs, const std::string& what) {
  if (xs.size() != 3)
    throw std::invalid_argument("need exactly three " + what);
  return {xs[0], xs[1], xs[2]};
}

// Largest bipartite block of g - a, ties broken by enumeration order.
VertexSet pick_gadget_block(const Graph& g, const VertexSet& a) {
  const Graph h = g.minus(a);
  VertexSet best;
  for (const Block& b : blocks_and_cutvertices(h)) {
    if (b.vertices.size() <= best.size()) continue;
    if (is_bipartite(h.induced(b.vertices))) best = b.vertices;
  }
  if (best.empty())
    throw std::invalid_argument("instance has no bipartite block to reduce");
  return best;
}

struct SpecFlags {
  int modulus = 4;
  int residue = 0;
  bool any = false;

  ResidueSpec spec() const {
    return any ? ResidueSpec::any() : ResidueSpec(modulus, residue);
  }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--mod", f.modulus, "length modulus")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--residue", f.residue, "length residue");
  cmd->add_flag("--any-residue", f.any, "accept every terminal path length");
}

Json spec_header(const ResidueSpec& spec) {
  Json j;
  j["modulus"] = spec.modulus;
  j["residue"] = spec.residue;
  return j;
}

Json suites_json(const std::vector<SuiteResult>& results) {
  Json j;
  Json arr = Json::array();
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    Json s;
    s["suite"] = r.suite;
    s["trials"] = r.trials;
    s["pass"] = r.pass();
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    s["checks"] = checks;
    arr.push_back(s);
    all_pass = all_pass && r.pass();
  }
  j["suites"] = arr;
  j["pass"] = all_pass;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing and covering of zero-residue terminal paths"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "emit a synthetic instance as JSON");
  gen->require_subcommand(1);

  struct {
    int size = 4;
    int subdivide = 1;
    std::string out;
  } gw;
  auto* gen_wall = gen->add_subcommand("wall", "elementary wall, nails as terminals");
  gen_wall->add_option("--size", gw.size, "wall size")->check(CLI::Range(2, 64));
  gen_wall->add_option("--subdivide", gw.subdivide, "stretch every wall edge to this length")
      ->check(CLI::PositiveNumber);
  gen_wall->add_option("--out", gw.out, "output file");
  gen_wall->callback([&] {
    Wall w = build_elementary_wall(gw.size);
    if (gw.subdivide > 1) w = subdivide_wall(w, SubdivisionRule{gw.subdivide, {}});
    const std::vector<int> nails = w.nails();
    emit(dump_canonical(wall_bundle_to_json(
             w.to_graph(), VertexSet(nails.begin(), nails.end()), w)),
         gw.out);
  });

  struct {
    int n = 2;
    int d = 1;
    std::string out;
  } gc;
  auto* gen_cx = gen->add_subcommand("counterexample", "packing-covering gap family member");
  gen_cx->add_option("--n", gc.n, "grid size")->required();
  gen_cx->add_option("--d", gc.d, "target residue, 1 or 3");
  gen_cx->add_option("--out", gc.out, "output file");
  gen_cx->callback([&] {
    emit(dump_canonical(counterexample_to_json(build_counterexample(gc.n, gc.d))), gc.out);
  });

  struct {
    std::vector<int> arms{2, 3, 4};
    std::vector<int> cycles{3, 5, 7};
    std::uint64_t seed = 1;
    std::string out;
  } gwm;
  auto* gen_wm = gen->add_subcommand("windmill", "three-arm windmill, tips as terminals");
  gen_wm->add_option("--arms", gwm.arms, "arm edge counts a,b,c")->delimiter(',');
  gen_wm->add_option("--cycles", gwm.cycles, "odd cycle lengths x,y,z")->delimiter(',');
  gen_wm->add_option("--seed", gwm.seed, "generator seed")->envname("ZEROPATH_SEED");
  gen_wm->add_option("--out", gwm.out, "output file");
  gen_wm->callback([&] {
    GeneratedWindmill w = generate_windmill(gwm.seed, three(gwm.arms, "arm lengths"),
                                            three(gwm.cycles, "cycle lengths"));
    emit(dump_canonical(windmill_bundle_to_json(w.g, w.a, w.wm)), gwm.out);
  });

  struct {
    std::string kind;
    int size = 3;
    std::uint64_t seed = 1;
    std::string out;
  } gos;
  auto* gen_os = gen->add_subcommand("odd-structure", "odd wall, linkage, or clique model");
  gen_os->add_option("--kind", gos.kind, "structure kind")
      ->required()
      ->check(CLI::IsMember({"odd-brick-wall", "odd-linkage", "odd-clique-model"}));
  gen_os->add_option("--size", gos.size, "structure size")->check(CLI::PositiveNumber);
  gen_os->add_option("--seed", gos.seed, "generator seed")->envname("ZEROPATH_SEED");
  gen_os->add_option("--out", gos.out, "output file");
  gen_os->callback([&] {
    emit(dump_canonical(odd_structure_to_json(generate_odd_structures(gos.seed, gos.kind, gos.size))),
         gos.out);
  });

  struct {
    int vertices = 10;
    double edge_prob = 0.3;
    int terminals = 3;
    std::uint64_t seed = 1;
    std::string out;
  } gr;
  auto* gen_rand = gen->add_subcommand("random", "Erdos-Renyi instance with random terminals");
  gen_rand->add_option("--vertices", gr.vertices, "vertex count")->check(CLI::PositiveNumber);
  gen_rand->add_option("--edge-prob", gr.edge_prob, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_rand->add_option("--terminals", gr.terminals, "terminal count")
      ->check(CLI::NonNegativeNumber);
  gen_rand->add_option("--seed", gr.seed, "generator seed")->envname("ZEROPATH_SEED");
  gen_rand->add_option("--out", gr.out, "output file");
  gen_rand->callback([&] {
    auto [g, a] = generate_random_instance(gr.seed, gr.vertices, gr.edge_prob, gr.terminals);
    emit(dump_canonical(graph_to_json(g, a)), gr.out);
  });

  struct {
    int k = 1;
    int link_residue = 2;
    int linkage_residue = 3;
    std::string out;
  } ga;
  auto* gen_asm = gen->add_subcommand("assembly", "wall plus paths ready for zero-path assembly");
  gen_asm->add_option("--k", ga.k, "number of zero paths to support")->check(CLI::PositiveNumber);
  gen_asm->add_option("--link-residue", ga.link_residue, "linking path residue mod 4")
      ->check(CLI::Range(0, 3));
  gen_asm->add_option("--linkage-residue", ga.linkage_residue, "linkage path residue, 1 or 3")
      ->check(CLI::IsMember({1, 3}));
  gen_asm->add_option("--out", ga.out, "output file");
  gen_asm->callback([&] {
    emit(dump_canonical(assembly_to_json(
             generate_assembly_input(ga.k, ga.link_residue, ga.linkage_residue))),
         ga.out);
  });

  // ---- solve --------------------------------------------------------------
  struct {
    std::string graph;
    SpecFlags spec;
    long long cap = 1000000;
    bool pack = false;
    bool cover = false;
    bool report = false;
    std::string out;
  } so;
  auto* solve = app.add_subcommand("solve", "exact packing and covering numbers");
  solve->add_option("--graph", so.graph, "instance file, stdin when absent");
  add_spec_flags(solve, so.spec);
  solve->add_option("--cap", so.cap, "enumeration cap")->check(CLI::PositiveNumber);
  auto* fp = solve->add_flag("--pack", so.pack, "packing side only");
  auto* fc = solve->add_flag("--cover", so.cover, "covering side only");
  solve->add_flag("--report", so.report, "both sides plus the duality check")
      ->excludes(fp)
      ->excludes(fc);
  fp->excludes(fc);
  solve->add_option("--out", so.out, "output file");
  solve->callback([&] {
    GraphInstance gi = graph_from_json(load_json(so.graph));
    const ResidueSpec spec = so.spec.spec();
    Json j = spec_header(spec);
    if (so.pack) {
      auto [nu, fam] = max_packing(gi.g, gi.a, spec, so.cap);
      j["packing_number"] = nu;
      j["packing"] = paths_json(fam);
    } else if (so.cover) {
      auto [tau, x] = min_hitting_set(gi.g, gi.a, spec, so.cap);
      j["covering_number"] = tau;
      j["covering"] = set_json(x);
    } else {
      DualityReport r = duality_report(gi.g, gi.a, spec, so.cap);
      j["packing_number"] = r.packing_number;
      j["packing"] = paths_json(r.packing_witness);
      j["covering_number"] = r.covering_number;
      j["covering"] = set_json(r.covering_witness);
      j["path_family_size"] = r.path_family_size;
      j["exact"] = r.exact;
    }
    emit(dump_canonical(j), so.out);
  });

  // ---- paths --------------------------------------------------------------
  struct {
    std::string graph;
    SpecFlags spec;
    long long cap = 1000000;
    std::string out;
  } pa;
  auto* paths = app.add_subcommand("paths", "enumerate qualifying terminal paths");
  paths->add_option("--graph", pa.graph, "instance file, stdin when absent");
  add_spec_flags(paths, pa.spec);
  paths->add_option("--cap", pa.cap, "enumeration cap")->check(CLI::PositiveNumber);
  paths->add_option("--out", pa.out, "output file");
  paths->callback([&] {
    GraphInstance gi = graph_from_json(load_json(pa.graph));
    const ResidueSpec spec = pa.spec.spec();
    std::vector<Path> ps = enumerate_a_paths(gi.g, gi.a, spec, pa.cap);
    Json j = spec_header(spec);
    j["count"] = static_cast<long long>(ps.size());
    j["paths"] = paths_json(ps);
    emit(dump_canonical(j), pa.out);
  });

  // ---- reduce -------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "rewrite an instance, preserving zero paths");
  reduce->require_subcommand(1);

  struct {
    std::string graph;
    std::string out;
  } rs;
  auto* red_split = reduce->add_subcommand("bipartite-split", "split terminals by colour class");
  red_split->add_option("--graph", rs.graph, "instance file, stdin when absent");
  red_split->add_option("--out", rs.out, "output file");
  red_split->callback([&] {
    GraphInstance gi = graph_from_json(load_json(rs.graph));
    emit(dump_canonical(split_to_json(bipartite_split(gi.g, gi.a))), rs.out);
  });

  struct {
    std::string graph;
    std::vector<int> block;
    std::string out;
  } rg;
  auto* red_gadget = reduce->add_subcommand("gadget", "replace bridges by entry-length trees");
  red_gadget->add_option("--graph", rg.graph, "instance file, stdin when absent");
  red_gadget->add_option("--block", rg.block,
                         "block vertices v1,v2,...; largest bipartite block when absent")
      ->delimiter(',');
  red_gadget->add_option("--out", rg.out, "output file");
  red_gadget->callback([&] {
    GraphInstance gi = graph_from_json(load_json(rg.graph));
    const VertexSet block = rg.block.empty()
                                ? pick_gadget_block(gi.g, gi.a)
                                : VertexSet(rg.block.begin(), rg.block.end());
    emit(dump_canonical(gadget_to_json(block_gadget(gi.g, gi.a, block), gi.a)), rg.out);
  });

  struct {
    std::string graph;
    std::string out;
  } rd;
  auto* red_d2 = reduce->add_subcommand("d2", "shift residue 2 instances to residue 0");
  red_d2->add_option("--graph", rd.graph, "instance file, stdin when absent");
  red_d2->add_option("--out", rd.out, "output file");
  red_d2->callback([&] {
    GraphInstance gi = graph_from_json(load_json(rd.graph));
    emit(dump_canonical(d2_to_json(d2_reduction(gi.g, gi.a), gi.a)), rd.out);
  });

  // ---- surgery ------------------------------------------------------------
  auto* surgery = app.add_subcommand("surgery", "constructive path extraction");
  surgery->require_subcommand(1);

  struct {
    std::string input;
    std::string out;
  } sw;
  auto* surg_wm = surgery->add_subcommand("windmill", "tip-to-tip zero path from a windmill");
  surg_wm->add_option("--input", sw.input, "windmill bundle file, stdin when absent");
  surg_wm->add_option("--out", sw.out, "output file");
  surg_wm->callback([&] {
    WindmillBundle b = windmill_bundle_from_json(load_json(sw.input));
    validate_windmill(b.g, b.a, b.wm);
    const Path p = extract_zero_path_from_windmill(b.g, b.wm);
    Json j;
    j["path"] = path_to_json(p);
    j["length"] = p.length();
    emit(dump_canonical(j), sw.out);
  });

  struct {
    std::string input;
    std::string out;
  } sa;
  auto* surg_asm = surgery->add_subcommand("assemble", "weave k disjoint zero paths through a wall");
  surg_asm->add_option("--input", sa.input, "assembly bundle file, stdin when absent");
  surg_asm->add_option("--out", sa.out, "output file");
  surg_asm->callback([&] {
    AssemblyInput in = assembly_from_json(load_json(sa.input));
    const std::vector<Path> ps = assemble_zero_paths(
        in.g, in.wall, in.wall.top_row(), in.linkage_paths, in.linking_paths, in.k);
    Json j;
    j["count"] = static_cast<int>(ps.size());
    Json lens = Json::array();
    for (const Path& p : ps) lens.push_back(p.length());
    j["lengths"] = lens;
    j["paths"] = paths_json(ps);
    emit(dump_canonical(j), sa.out);
  });

  // ---- verify -------------------------------------------------------------
  struct {
    std::string suite = "all";
    int trials = 0;
    std::uint64_t seed = 1;
    std::string out;
  } ve;
  auto* verify = app.add_subcommand("verify", "run randomized property suites");
  std::vector<std::string> suite_choices{"all"};
  for (const std::string& s : suite_names()) suite_choices.push_back(s);
  verify->add_option("suite", ve.suite, "suite name, all when absent")
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--trials", ve.trials, "random trials per suite, 0 keeps the default")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", ve.seed, "base seed")->envname("ZEROPATH_SEED");
  verify->add_option("--out", ve.out, "output file");
  verify->callback([&] {
    const VerifyOptions opt{ve.trials, ve.seed};
    std::vector<SuiteResult> results;
    if (ve.suite == "all") {
      results = run_all_suites(opt);
    } else {
      results.push_back(run_suite(ve.suite, opt));
    }
    const Json j = suites_json(results);
    emit(dump_canonical(j), ve.out);
    if (!j.at("pass").get<bool>()) rc = 1;
  });

  // ---- export -------------------------------------------------------------
  struct {
    std::string graph;
    bool dot = false;
    std::string out;
  } ex;
  auto* expo = app.add_subcommand("export", "re-emit an instance canonically");
  expo->add_option("--graph", ex.graph, "instance file, stdin when absent");
  expo->add_flag("--dot", ex.dot, "emit DOT instead of JSON");
  expo->add_option("--out", ex.out, "output file");
  expo->callback([&] {
    GraphInstance gi = graph_from_json(load_json(ex.graph));
    if (ex.dot) {
      emit(to_dot(gi.g, gi.a), ex.out);
    } else {
      emit(dump_canonical(graph_to_json(gi.g, gi.a)), ex.out);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
