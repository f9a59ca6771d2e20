#pragma once

// Command-line front end. Subcommands: describe, graph, toric-graph,
// hilbert, betti, invariants, check, toric-compare, oracle-compare.
// Exit codes: 0 success, 1 invalid input, 2 internal invariant failure,
// 3 verification-failure report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkm/input_spec.hpp"
#include "gkm/rook_oracle.hpp"

namespace gkm::cli {

namespace detail {

inline void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw input_error("cannot open output path '" + output_path + "'");
  f << text;
}

inline std::string render_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string s;
  for (const auto& [k, v] : rows) {
    s += k;
    s.append(width - k.size() + 2, ' ');
    s += v + "\n";
  }
  return s;
}

inline std::string join_ints(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string mode_name(ArithMode m) {
  return m == ArithMode::exact ? "exact" : "modular";
}

struct Census {
  int kind1 = 0, kind2 = 0, kind3 = 0, h_one = 0, h_two = 0;
};

inline Census census(const Pipeline& p) {
  Census c;
  for (const auto& e : p.x_graph.edges) {
    if (e.kind == 1) ++c.kind1;
    if (e.kind == 2) ++c.kind2;
    if (e.kind == 3) ++c.kind3;
  }
  for (const auto& e : p.es) {
    if (e.h_class == 1) ++c.h_one;
    if (e.h_class == 2) ++c.h_two;
  }
  return c;
}

inline ordered_json describe_json(const InputSpec& spec, const Pipeline& p) {
  Census c = census(p);
  ordered_json j;
  j["family"] = family_name(spec.family);
  j["rank"] = spec.rank;
  j["weyl_order"] = p.W.size();
  j["lambda1"] = ordered_json::array();
  auto lj = l_j_set(p.rs, p.W, p.vs, p.es, p.rd);
  for (int o = 0; o < p.vs.orbit_count(); ++o) {
    ordered_json jo;
    jo["orbit"] = o;
    jo["representative"] = p.vs.vertices[p.rd.rep_vertex[o]];
    jo["stabilizer_order"] = p.rd.cosets[o].stabilizer.size();
    jo["J"] = lj[o].J;
    jo["l_j_size"] = lj[o].edge_ids.size();
    j["lambda1"].push_back(std::move(jo));
  }
  j["e1"] = p.vs.count();
  j["e2"] = p.es.size();
  j["r1"] = p.rd.fp_count();
  j["curves"] = {{"kind1", c.kind1}, {"kind2", c.kind2}, {"kind3", c.kind3}};
  j["h_class"] = {{"one", c.h_one}, {"two", c.h_two}};
  j["rationally_smooth"] = p.x_graph.rationally_smooth;
  j["quasi_regular"] = p.x_graph.quasi_regular;
  j["dim"] = p.x_graph.dim;
  return j;
}

inline std::string describe_table(const InputSpec& spec, const Pipeline& p) {
  Census c = census(p);
  auto lj = l_j_set(p.rs, p.W, p.vs, p.es, p.rd);
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("family", spec.family == Family::G2
                                  ? family_name(spec.family)
                                  : family_name(spec.family) + std::to_string(spec.rank));
  rows.emplace_back("|W|", std::to_string(p.W.size()));
  rows.emplace_back("|Lambda_1|", std::to_string(p.vs.orbit_count()));
  for (int o = 0; o < p.vs.orbit_count(); ++o) {
    std::string jset;
    for (int i : lj[o].J) jset += (jset.empty() ? "s" : ",s") + std::to_string(i + 1);
    rows.emplace_back("J[" + std::to_string(o) + "]", "{" + jset + "}");
    rows.emplace_back("|L^J[" + std::to_string(o) + "]|",
                      std::to_string(lj[o].edge_ids.size()));
  }
  rows.emplace_back("|E_1|", std::to_string(p.vs.count()));
  rows.emplace_back("|E_2|", std::to_string(p.es.size()));
  rows.emplace_back("|R_1|", std::to_string(p.rd.fp_count()));
  rows.emplace_back("curves kind 1", std::to_string(c.kind1));
  rows.emplace_back("curves kind 2", std::to_string(c.kind2));
  rows.emplace_back("curves kind 3", std::to_string(c.kind3));
  rows.emplace_back("h-class one", std::to_string(c.h_one));
  rows.emplace_back("h-class two", std::to_string(c.h_two));
  rows.emplace_back("rationally_smooth", p.x_graph.rationally_smooth ? "true" : "false");
  rows.emplace_back("quasi_regular", p.x_graph.quasi_regular ? "true" : "false");
  rows.emplace_back("dim X", std::to_string(p.x_graph.dim));
  return render_table(rows);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact GKM data of projective group embeddings"};
  app.require_subcommand(1);

  std::string input_path, output_path, tuple_path, group = "wxw", which_graph = "x";
  std::string fmt_describe = "table", fmt_graph = "json", fmt_toric = "json";
  std::string fmt_hilbert = "table", fmt_betti = "table", fmt_inv = "table";
  std::string fmt_check = "table", fmt_tc = "table", fmt_oracle = "table";
  int max_degree = -1;
  int oracle_n = 2;
  std::string oracle_convention = "action";

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input", input_path, "input spec JSON file");
    if (needs_input) opt->required();
    sub->add_option("--output", output_path, "write output to this path instead of stdout");
    return sub;
  };

  CLI::App* describe = add_common(app.add_subcommand("describe", "summary census table"), true);
  describe->add_option("--format", fmt_describe, "table|json");
  CLI::App* graph = add_common(app.add_subcommand("graph", "export the X moment graph"), true);
  graph->add_option("--format", fmt_graph, "json|dot");
  CLI::App* toric_graph =
      add_common(app.add_subcommand("toric-graph", "export the toric moment graph"), true);
  toric_graph->add_option("--format", fmt_toric, "json|dot");
  CLI::App* hilbert =
      add_common(app.add_subcommand("hilbert", "graded dimensions of the PP ring"), true);
  hilbert->add_option("--max-degree", max_degree, "highest polynomial degree");
  hilbert->add_option("--format", fmt_hilbert, "table|json");
  CLI::App* betti = add_common(
      app.add_subcommand("betti", "Betti numbers via Hilbert deconvolution"), true);
  betti->add_option("--max-degree", max_degree, "highest polynomial degree");
  betti->add_option("--format", fmt_betti, "table|json");
  CLI::App* invariants =
      add_common(app.add_subcommand("invariants", "graded dimensions of invariant classes"), true);
  invariants->add_option("--group", group, "wxw|diag");
  invariants->add_option("--graph", which_graph, "x|toric");
  invariants->add_option("--max-degree", max_degree, "highest polynomial degree");
  invariants->add_option("--format", fmt_inv, "table|json");
  CLI::App* check = add_common(app.add_subcommand("check", "tuple membership in the PP ring"), true);
  check->add_option("--tuple", tuple_path, "tuple JSON file")->required();
  check->add_option("--format", fmt_check, "table|json");
  CLI::App* toric_cmp = add_common(
      app.add_subcommand("toric-compare", "restriction to the toric part, degree by degree"),
      true);
  toric_cmp->add_option("--max-degree", max_degree, "highest polynomial degree");
  toric_cmp->add_option("--format", fmt_tc, "table|json");
  CLI::App* oracle_cmp = add_common(
      app.add_subcommand("oracle-compare", "pipeline vs brute-force rook monoid"), false);
  oracle_cmp->add_option("--n", oracle_n, "rook monoid size (2..4)")->required();
  oracle_cmp->add_option("--convention", oracle_convention, "action|paper");
  oracle_cmp->add_option("--format", fmt_oracle, "table|json");

  std::vector<const char*> argv;
  argv.push_back("gkm");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(oracle_cmp)) {
      Convention conv = oracle_convention == "paper" ? Convention::paper : Convention::action;
      if (oracle_convention != "paper" && oracle_convention != "action")
        throw input_error("unknown convention '" + oracle_convention + "'");
      GKMGraph oracle = rook_oracle_gkm(oracle_n, conv);
      PipelineOptions opt;
      opt.convention = conv;
      Pipeline p = build_rook_pipeline(oracle_n, opt);
      OracleCompareReport rep = compare_with_oracle(oracle, p);
      if (fmt_oracle == "json") {
        ordered_json j;
        j["n"] = oracle_n;
        j["match"] = rep.match;
        j["discrepancies"] = rep.discrepancies;
        detail::emit(j.dump(2) + "\n", output_path, out);
      } else {
        std::string s = rep.match ? "match\n" : "mismatch\n";
        for (const std::string& d : rep.discrepancies) s += "  " + d + "\n";
        detail::emit(s, output_path, out);
      }
      return rep.match ? 0 : 3;
    }

    InputSpec spec = load_input_spec(input_path);
    Pipeline p = build_from_spec(spec);
    std::mt19937_64 rng(spec.seed);
    PPContext cx{p.x_graph, p.W, p.vs, p.rd};
    PPContext cy{p.y_graph, p.W, p.vs, p.rd};
    const int D = max_degree >= 0 ? max_degree : spec.max_degree;

    if (app.got_subcommand(describe)) {
      if (fmt_describe == "json")
        detail::emit(detail::describe_json(spec, p).dump(2) + "\n", output_path, out);
      else if (fmt_describe == "table")
        detail::emit(detail::describe_table(spec, p), output_path, out);
      else
        throw input_error("describe supports table|json");
      return 0;
    }
    if (app.got_subcommand(graph)) {
      detail::emit(export_graph(p.x_graph, fmt_graph), output_path, out);
      return 0;
    }
    if (app.got_subcommand(toric_graph)) {
      detail::emit(export_graph(p.y_graph, fmt_toric), output_path, out);
      return 0;
    }
    if (app.got_subcommand(hilbert)) {
      HilbertProfile hp = hilbert_profile(cx, D, spec.mode, rng);
      if (fmt_hilbert == "json") {
        ordered_json j;
        j["max_degree"] = D;
        j["mode"] = detail::mode_name(hp.mode);
        j["dims"] = hp.dims;
        detail::emit(j.dump(2) + "\n", output_path, out);
      } else {
        std::string s = "mode " + detail::mode_name(hp.mode) + "\n";
        for (size_t d = 0; d < hp.dims.size(); ++d)
          s += "degree " + std::to_string(d) + "  " + std::to_string(hp.dims[d]) + "\n";
        detail::emit(s, output_path, out);
      }
      return 0;
    }
    if (app.got_subcommand(betti)) {
      HilbertProfile hp = hilbert_profile(cx, D, spec.mode, rng);
      BettiResult br =
          hilbert_deconvolution(hp.dims, p.rs.ambient, p.x_graph.dim, p.rd.fp_count());
      if (fmt_betti == "json") {
        ordered_json j;
        j["mode"] = detail::mode_name(hp.mode);
        j["b"] = br.b;
        j["valid"] = br.valid;
        j["problems"] = br.problems;
        detail::emit(j.dump(2) + "\n", output_path, out);
      } else {
        std::string s = detail::join_ints(br.b) + "\n";
        for (const std::string& m : br.problems) s += "problem: " + m + "\n";
        detail::emit(s, output_path, out);
      }
      return br.valid ? 0 : 3;
    }
    if (app.got_subcommand(invariants)) {
      PPContext& ctx = which_graph == "toric" ? cy : cx;
      if (which_graph != "toric" && which_graph != "x")
        throw input_error("--graph must be x or toric");
      std::vector<std::pair<int, int>> gens;
      if (group == "wxw") {
        if (which_graph == "toric")
          throw input_error("the toric graph only carries the diagonal action");
        gens = wxw_generators(p.W);
      } else if (group == "diag") {
        gens = diag_generators(p.W);
      } else {
        throw input_error("--group must be wxw or diag");
      }
      std::vector<long long> dims;
      ArithMode reported = spec.mode;
      for (int d = 0; d <= D; ++d) {
        DimOutcome o = invariant_graded_dimension(ctx, gens, d, spec.mode, rng);
        if (o.mode == ArithMode::exact) reported = ArithMode::exact;
        dims.push_back(o.dim);
      }
      if (fmt_inv == "json") {
        ordered_json j;
        j["group"] = group;
        j["graph"] = which_graph;
        j["mode"] = detail::mode_name(reported);
        j["dims"] = dims;
        detail::emit(j.dump(2) + "\n", output_path, out);
      } else {
        std::string s = "group " + group + " on " + which_graph + "-graph, mode " +
                        detail::mode_name(reported) + "\n";
        for (size_t d = 0; d < dims.size(); ++d)
          s += "degree " + std::to_string(d) + "  " + std::to_string(dims[d]) + "\n";
        detail::emit(s, output_path, out);
      }
      return 0;
    }
    if (app.got_subcommand(check)) {
      std::ifstream tf(tuple_path);
      if (!tf) throw input_error("cannot open tuple file '" + tuple_path + "'");
      nlohmann::json tj;
      try {
        tf >> tj;
      } catch (const std::exception& e) {
        throw input_error(std::string("invalid tuple JSON: ") + e.what());
      }
      std::vector<Poly> tuple = parse_tuple_json(tj, p.x_graph);
      MembershipReport rep = check_membership(p.x_graph, tuple);
      if (fmt_check == "json") {
        ordered_json j;
        j["member"] = rep.ok;
        j["violations"] = rep.violations;
        detail::emit(j.dump(2) + "\n", output_path, out);
      } else {
        std::string s = rep.ok ? "member\n" : "not a member\n";
        for (int ei : rep.violations) {
          const GKMEdge& e = p.x_graph.edges[ei];
          s += "  violated edge " + std::to_string(ei) + " {" + std::to_string(e.a) + "," +
               std::to_string(e.b) + "} char " + ivec_to_string(e.chr) + "\n";
        }
        detail::emit(s, output_path, out);
      }
      return rep.ok ? 0 : 3;
    }
    if (app.got_subcommand(toric_cmp)) {
      ToricCompareReport rep = toric_compare(cx, cy, D, spec.mode, rng);
      if (fmt_tc == "json") {
        ordered_json j;
        j["mode"] = detail::mode_name(rep.mode);
        j["degrees"] = ordered_json::array();
        for (size_t d = 0; d < rep.dim_x.size(); ++d) {
          ordered_json jd;
          jd["degree"] = d;
          jd["dim_x_invariants"] = rep.dim_x[d];
          jd["dim_y_invariants"] = rep.dim_y[d];
          jd["kernel"] = rep.kernel[d];
          jd["injective"] = static_cast<bool>(rep.injective[d]);
          jd["isomorphism"] = static_cast<bool>(rep.isomorphism[d]);
          j["degrees"].push_back(std::move(jd));
        }
        detail::emit(j.dump(2) + "\n", output_path, out);
      } else {
        std::string s = "mode " + detail::mode_name(rep.mode) + "\n";
        for (size_t d = 0; d < rep.dim_x.size(); ++d)
          s += "degree " + std::to_string(d) + "  dim_x " + std::to_string(rep.dim_x[d]) +
               "  dim_y " + std::to_string(rep.dim_y[d]) + "  kernel " +
               std::to_string(rep.kernel[d]) + (rep.injective[d] ? "  injective" : "  KERNEL") +
               (rep.isomorphism[d] ? " isomorphism" : " not-isomorphism") + "\n";
        detail::emit(s, output_path, out);
      }
      return 0;
    }
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const invariant_error& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand executed\n";
  return 1;
}

}  // namespace gkm::cli
