#include "twomega/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "twomega/classes.hpp"
#include "twomega/containment.hpp"
#include "twomega/generators.hpp"
#include "twomega/graph_io.hpp"
#include "twomega/harness.hpp"
#include "twomega/invariants.hpp"
#include "twomega/solvers.hpp"

namespace twomega {

namespace {

using nlohmann::json;

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_refused = 3;

/// Graph from text: graph6 when the first character is printable graph6,
/// the "n m u v ..." edge-list format when it is a digit.
graph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw argument_error("no graph on input");
  if (text[start] >= '0' && text[start] <= '9') return parse_edge_list(text);
  auto end = text.find('\n', start);
  return parse_graph6(std::string_view(text).substr(start, end == std::string::npos ? std::string::npos : end - start));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw argument_error("cannot open '" + path + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) lines.pop_back();
  return lines;
}

json set_json(const vertex_set& s) { return s.to_vector(); }

json decomposition_json(const tree_decomposition& td) {
  json bags = json::array(), edges = json::array();
  for (const auto& b : td.bags) bags.push_back(set_json(b));
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  return {{"bags", bags}, {"tree_edges", edges}, {"width", td.width()}};
}

json binding_json(const std::optional<binding_function>& f) {
  if (!f) return nullptr;
  return {{"kind", f->kind_name()}, {"formula", f->formula()}, {"explicit", f->explicit_value}};
}

json witness_json(const containment_result& r) {
  if (r.embedding) return {{"embedding", *r.embedding}};
  if (r.subdivision) return {{"branch", r.subdivision->branch}, {"paths", r.subdivision->paths}};
  if (r.model) {
    json bags = json::array();
    for (const auto& b : r.model->bags) bags.push_back(set_json(b));
    return {{"bags", bags}};
  }
  return nullptr;
}

int emit(std::ostream& out, const json& j, int code = 0) {
  out << j.dump() << '\n';
  return code;
}

graph generate(const std::string& family, const std::vector<int>& p, std::uint64_t seed, double prob) {
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw argument_error("gen " + family + " takes " + std::to_string(k) + " integer parameter(s)");
  };
  if (family == "complete") return need(1), complete(p[0]);
  if (family == "complete_bipartite") return need(2), complete_bipartite(p[0], p[1]);
  if (family == "cycle") return need(1), cycle(p[0]);
  if (family == "path") return need(1), path(p[0]);
  if (family == "star") return need(1), star(p[0]);
  if (family == "edgeless") return need(1), edgeless(p[0]);
  if (family == "complete_minus_edge") return need(1), complete_minus_edge(p[0]);
  if (family == "k2q_plus") return need(1), k2q_plus(p[0]);
  if (family == "wheel4") return need(0), wheel4();
  if (family == "subdivided_claw") return need(3), subdivided_claw(p[0], p[1], p[2]);
  if (family == "wall") {
    if (p.size() != 2 && p.size() != 3) throw argument_error("gen wall takes rows, columns and optional q");
    return q_subdivided_wall({p[0], p[1], p.size() == 3 ? p[2] : 0});
  }
  if (family == "line_wall") {
    if (p.size() != 2 && p.size() != 3) throw argument_error("gen line_wall takes rows, columns and optional q");
    return line_graph(q_subdivided_wall({p[0], p[1], p.size() == 3 ? p[2] : 0}));
  }
  if (family == "random") return need(1), random_graph(p[0], prob, seed);
  if (family == "random_chordal") return need(2), random_chordal(p[0], p[1], seed);
  if (family == "random_block_cactus") return need(2), random_block_cactus(p[0], p[1], seed);
  throw argument_error("unknown family '" + family + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Treewidth, clique number and graph containment toolkit", "twomega"};
  app.require_subcommand(1);
  std::int64_t budget = static_cast<std::int64_t>(default_node_limit());
  app.add_option("--budget", budget, "Node limit for exhaustive searches")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Emit graphs of a family as graph6 lines");
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 1;
  double prob = 0.5;
  int count = 1;
  bool connected = false;
  gen->add_option("family", family,
                  "complete, complete_bipartite, cycle, path, star, edgeless, complete_minus_edge, k2q_plus, "
                  "wheel4, subdivided_claw, wall, line_wall, random, random_chordal, random_block_cactus, all")
      ->required();
  gen->add_option("params", params, "Integer parameters of the family");
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--p", prob, "Edge probability for 'random'")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--count", count, "Number of random graphs (seeds seed, seed+1, ...)")->check(CLI::PositiveNumber);
  gen->add_flag("--connected", connected, "With 'all': connected graphs only");

  // invariant
  auto* inv = app.add_subcommand("invariant", "Compute an invariant of the graph on stdin");
  std::string inv_name;
  inv->add_option("name", inv_name,
                  "clique, independence, chromatic, treewidth, treewidth_bounds, degeneracy, hadwiger, "
                  "minimal_separators")
      ->required();

  // contains
  auto* cont = app.add_subcommand("contains", "Test whether a pattern is contained in a host");
  std::string rel_name, pattern_g6, host_g6;
  cont->add_option("--relation", rel_name, "Containment relation")->required();
  cont->add_option("--pattern", pattern_g6, "Pattern graph (graph6)")->required();
  cont->add_option("--host", host_g6, "Host graph (graph6); read from stdin when absent");

  // classify
  auto* cls = app.add_subcommand("classify", "Dichotomy verdict for excluding a pattern");
  std::vector<std::string> set_g6;
  auto* cls_rel = cls->add_option("--relation", rel_name, "Containment relation");
  auto* cls_pat = cls->add_option("--pattern", pattern_g6, "Pattern graph (graph6)");
  auto* cls_set = cls->add_option("--set", set_g6, "Finite set of induced-subgraph patterns (graph6)");
  cls_rel->needs(cls_pat);
  cls_pat->needs(cls_rel);
  cls_set->excludes(cls_rel)->excludes(cls_pat);

  // recognize
  auto* rec = app.add_subcommand("recognize", "Test class membership of the graph on stdin");
  std::string class_name;
  int q = 3;
  rec->add_option("class", class_name,
                  "chordal, block_cactus, S, subcubic, edgeless, planar, complete_bipartite, k1q_free")
      ->required();
  rec->add_option("--q", q, "q for k1q_free")->check(CLI::PositiveNumber);

  // solve
  auto* solve = app.add_subcommand("solve", "Run a solver on the graph on stdin");
  solve->require_subcommand(1);
  auto* mwis = solve->add_subcommand("mwis-k1q", "Maximum weight independent set, K1,q-induced-minor-free input");
  std::string weights_file;
  mwis->add_option("--q", q, "q >= 2")->required();
  mwis->add_option("--weights", weights_file, "One weight per line (decimal or p/q)");
  auto* brute = solve->add_subcommand("mwis-brute", "Maximum weight independent set by enumeration");
  brute->add_option("--weights", weights_file, "One weight per line (decimal or p/q)");
  auto* lc = solve->add_subcommand("list-color", "Robust list colouring");
  int k = 3;
  std::string lists_file, binding_name = "block_cactus";
  lc->add_option("--k", k, "Number of colours")->required()->check(CLI::Range(1, 31));
  lc->add_option("--lists", lists_file, "One line per vertex with allowed colours; all colours when absent");
  lc->add_option("--binding", binding_name, "Binding function name, e.g. block_cactus or max:-1:2");
  auto* ac = solve->add_subcommand("approx-clique", "Clique number lower bound from treewidth");
  double c = 1.0, eps = 0.5;
  int log_base = 0;
  ac->add_option("--c", c, "Degree of the polynomial binding");
  ac->add_option("--eps", eps, "Slack in the exponent");
  ac->add_option("--log-base", log_base, "Use the exponential-binding formula with this base");

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite or an experiment spec");
  std::string suite, spec_file, jsonl_file, csv_file;
  int jobs = 1;
  bool allow_refusals = false;
  auto* suite_opt = ver->add_option("--suite", suite, "Built-in suite name");
  auto* spec_opt = ver->add_option("--spec", spec_file, "JSON experiment spec");
  suite_opt->excludes(spec_opt);
  ver->add_option("--seed", seed, "Base seed");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--jsonl", jsonl_file, "Write per-instance rows here");
  ver->add_option("--csv", csv_file, "Write the summary table here");
  ver->add_flag("--allow-refusals", allow_refusals, "Do not fail on refusals");
  ver->add_flag("--list", "List the built-in suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests arrive as CallForHelp from the subcommand.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  const auto limit = static_cast<std::uint64_t>(budget);

  try {
    if (*gen) {
      if (family == "all") {
        if (params.size() != 1) throw argument_error("gen all takes the order n");
        enumerate_all_graphs(params[0], {connected, true}, [&](const graph& g) { out << emit_graph6(g) << '\n'; });
        return 0;
      }
      const bool random = family.rfind("random", 0) == 0;
      for (int i = 0; i < (random ? count : 1); ++i) out << emit_compact(generate(family, params, seed + i, prob)) << '\n';
      return 0;
    }

    if (*inv) {
      const graph g = read_graph(in);
      json j = {{"invariant", inv_name}};
      if (inv_name == "clique" || inv_name == "independence") {
        auto r = inv_name == "clique" ? clique_number(g, limit) : independence_number(g, limit);
        j["value"] = r.value;
        j["witness"] = set_json(r.witness);
      } else if (inv_name == "chromatic") {
        auto r = chromatic_number(g, limit);
        j["value"] = r.value;
        j["witness"] = r.colors;
      } else if (inv_name == "treewidth") {
        auto r = treewidth_exact(g, limit);
        j["value"] = r.value;
        j["witness"] = decomposition_json(r.decomposition);
        j["witness"]["elimination_order"] = r.elimination_order;
      } else if (inv_name == "treewidth_bounds") {
        auto r = treewidth_bounds(g);
        j["value"] = {{"lower", r.lower}, {"upper", r.upper}};
        j["witness"] = {{"elimination_order", r.upper_order}};
      } else if (inv_name == "degeneracy") {
        j["value"] = degeneracy(g);
        j["witness"] = nullptr;
      } else if (inv_name == "hadwiger") {
        j["value"] = hadwiger_number(g, limit);
        j["witness"] = nullptr;
      } else if (inv_name == "minimal_separators") {
        json seps = json::array();
        for (const auto& s : minimal_separators(g, limit)) {
          json comps = json::array();
          for (const auto& c : s.full_components) comps.push_back(set_json(c));
          seps.push_back({{"separator", set_json(s.separator)}, {"full_components", comps}});
        }
        j["value"] = seps.size();
        j["witness"] = seps;
      } else {
        throw argument_error("unknown invariant '" + inv_name + "'");
      }
      return emit(out, j);
    }

    if (*cont) {
      const relation rel = parse_relation(rel_name);
      const graph h = parse_graph6(pattern_g6);
      const graph g = host_g6.empty() ? read_graph(in) : parse_graph6(host_g6);
      const auto r = contains(h, g, rel, limit);
      json j = {{"relation", to_string(rel)}, {"result", to_string(r.result)}, {"witness", witness_json(r)}};
      if (r.result == outcome::refused) j["refusal"] = r.refusal;
      return emit(out, j, r.result == outcome::refused ? exit_refused : 0);
    }

    if (*cls) {
      if (!set_g6.empty()) {
        std::vector<graph> hs;
        for (const auto& s : set_g6) hs.push_back(parse_graph6(s));
        const auto v = finite_set_induced_subgraph_dichotomy(hs);
        auto idx = [](const std::optional<std::size_t>& i) -> json { return i ? json(*i) : json(nullptr); };
        return emit(out, {{"relation", "induced_subgraph"},
                          {"patterns", set_g6},
                          {"bounded", v.bounded},
                          {"complete_bipartite_member", idx(v.complete_bipartite_member)},
                          {"s_member", idx(v.s_member)},
                          {"line_graph_member", idx(v.line_graph_member)},
                          {"reason", v.reason}});
      }
      if (rel_name.empty()) throw argument_error("classify needs --relation and --pattern, or --set");
      const auto v = dichotomy(parse_graph6(pattern_g6), parse_relation(rel_name));
      return emit(out, {{"relation", to_string(v.rel)},
                        {"pattern", emit_graph6(v.pattern)},
                        {"bounded", v.bounded},
                        {"binding", binding_json(v.binding)},
                        {"reason", v.reason}});
    }

    if (*rec) {
      const graph g = read_graph(in);
      json j = {{"class", class_name}};
      if (class_name == "chordal") {
        auto r = is_chordal(g);
        j["member"] = r.chordal;
        j["witness"] = r.chordal ? json{{"elimination_order", r.elimination_order}} : json{{"hole", r.hole}};
      } else if (class_name == "block_cactus") {
        auto r = is_block_cactus(g);
        j["member"] = r.block_cactus;
        j["witness"] = r.offending_block ? json{{"offending_block", set_json(*r.offending_block)}} : json(nullptr);
      } else if (class_name == "S") {
        j["member"] = in_class_S(g);
      } else if (class_name == "subcubic") {
        j["member"] = is_subcubic(g);
      } else if (class_name == "edgeless") {
        j["member"] = is_edgeless(g);
      } else if (class_name == "planar") {
        j["member"] = is_planar(g);
      } else if (class_name == "complete_bipartite") {
        j["member"] = is_complete_bipartite(g);
      } else if (class_name == "k1q_free") {
        auto r = k1q_induced_minor_free(g, q, limit);
        j["q"] = q;
        j["member"] = r.free;
        if (r.witness)
          j["witness"] = {{"independent", set_json(r.witness->independent)}, {"component", set_json(r.witness->component)}};
      } else {
        throw argument_error("unknown class '" + class_name + "'");
      }
      return emit(out, j);
    }

    if (*solve) {
      const graph g = read_graph(in);
      auto weights = [&](std::int64_t& scale) {
        if (weights_file.empty()) {
          scale = 1;
          return std::vector<std::int64_t>(g.order(), 1);
        }
        auto w = parse_rational_weights(read_lines(weights_file), &scale);
        if (static_cast<int>(w.size()) != g.order())
          throw argument_error("weights file has " + std::to_string(w.size()) + " entries for " +
                               std::to_string(g.order()) + " vertices");
        return w;
      };
      if (*mwis || *brute) {
        std::int64_t scale = 1;
        const weighted_graph wg(g, weights(scale));
        json j;
        if (*mwis) {
          try {
            auto r = mwis_k1q(wg, q, {20, limit});
            j = {{"value", r.weight}, {"witness", set_json(r.set)}};
          } catch (const k1q_precondition_error& e) {
            return emit(out,
                        {{"error", e.what()},
                         {"witness",
                          {{"independent", set_json(e.witness().independent)},
                           {"component", set_json(e.witness().component)}}}},
                        exit_fail);
          }
        } else {
          auto r = mwis_brute(wg, limit);
          j = {{"value", r.weight}, {"witness", set_json(r.set)}};
        }
        j["scale"] = scale;
        j["value_unscaled"] = static_cast<double>(j["value"].get<std::int64_t>()) / static_cast<double>(scale);
        return emit(out, j);
      }
      if (*lc) {
        color_lists lists = color_lists::full(g.order(), k);
        if (!lists_file.empty()) {
          const auto lines = read_lines(lists_file);
          if (static_cast<int>(lines.size()) != g.order())
            throw argument_error("lists file has " + std::to_string(lines.size()) + " lines for " +
                                 std::to_string(g.order()) + " vertices");
          for (int v = 0; v < g.order(); ++v) {
            std::istringstream line(lines[v]);
            lists.lists[v] = 0;
            for (std::string tok; line >> tok;) {
              int col = 0;
              try {
                col = std::stoi(tok);
              } catch (const std::exception&) {
                throw argument_error("lists file: bad colour '" + tok + "'");
              }
              if (col < 1 || col > k) throw argument_error("lists file: colour " + tok + " outside 1.." + std::to_string(k));
              lists.lists[v] |= std::uint32_t{1} << (col - 1);
            }
          }
        }
        const auto r = robust_list_k_coloring(g, lists, k, parse_binding(binding_name), limit);
        json j = {{"outcome", to_string(r.result)}, {"c_k", r.ceiling}, {"detail", r.detail}};
        if (r.result == robust_outcome::kind::colored) j["coloring"] = r.coloring;
        if (r.clique) j["clique"] = set_json(*r.clique);
        return emit(out, j, r.result == robust_outcome::kind::refused ? exit_refused : 0);
      }
      if (*ac) {
        approx_clique_options o;
        o.c = c;
        o.eps = eps;
        o.node_limit = limit;
        if (log_base > 0) {
          o.shape = approx_clique_options::formula::logarithmic;
          o.base = log_base;
        }
        const auto r = approx_clique(g, o);
        return emit(out, {{"value", r.lower_bound},
                          {"treewidth", r.treewidth},
                          {"omega", r.omega},
                          {"ratio", r.ratio},
                          {"guarantee", r.guarantee}});
      }
    }

    if (*ver) {
      if (ver->count("--list")) {
        for (const auto& n : suite_names()) out << n << '\n';
        return 0;
      }
      harness_options opts{seed, jobs, limit};
      std::vector<experiment_report> reports;
      if (!spec_file.empty()) {
        std::ifstream f(spec_file);
        if (!f) throw argument_error("cannot open '" + spec_file + "'");
        json j;
        try {
          j = json::parse(f);
        } catch (const json::exception& e) {
          throw argument_error(std::string("spec is not valid JSON: ") + e.what());
        }
        reports.push_back(verify_binding(parse_experiment_spec(j), opts));
      } else if (!suite.empty()) {
        reports = run_suite(suite, opts);
      } else {
        throw argument_error("verify needs --suite or --spec");
      }
      bool ok = true;
      for (const auto& r : reports) {
        out << r.summary_json().dump() << '\n';
        ok = ok && r.passed(allow_refusals);
      }
      if (!jsonl_file.empty()) {
        std::ofstream f(jsonl_file);
        for (const auto& r : reports) write_jsonl(f, r);
      }
      if (!csv_file.empty()) {
        std::ofstream f(csv_file);
        write_csv_summary(f, reports);
      }
      return ok ? 0 : exit_fail;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const budget_exceeded& e) {
    emit(out, {{"result", "refused"}, {"refusal", e.what()}});
    return exit_refused;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

}  // namespace twomega
