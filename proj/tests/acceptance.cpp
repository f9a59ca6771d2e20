// Acceptance suite: one line per criterion, nonzero exit iff any failed.
// Every tolerance here is exact integer equality.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gkm/pipeline.hpp"
#include "gkm/ppring.hpp"
#include "gkm/rook_oracle.hpp"

using namespace gkm;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

PPContext cx(const Pipeline& p) { return PPContext{p.x_graph, p.W, p.vs, p.rd}; }
PPContext cy(const Pipeline& p) { return PPContext{p.y_graph, p.W, p.vs, p.rd}; }

// ---------------------------------------------------------------------------

void criterion1_oracle_equivalence() {
  bool ok = true;
  std::string detail;
  for (int n : {2, 3}) {
    auto t0 = std::chrono::steady_clock::now();
    OracleCompareReport rep = compare_with_oracle(rook_oracle_gkm(n), build_rook_pipeline(n));
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.match) {
      ok = false;
      detail += "n=" + std::to_string(n) + " mismatch; ";
      for (const auto& d : rep.discrepancies) detail += d + "; ";
    }
    if (dt > 1.0) {
      ok = false;
      detail += "n=" + std::to_string(n) + " took " + std::to_string(dt) + "s; ";
    }
  }
  report(1, "rook oracle equivalence (n=2,3)", ok, detail);
}

void criterion2_betti() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(2026);
  {
    Pipeline p = build_rook_pipeline(2);
    HilbertProfile hp = hilbert_profile(cx(p), 3, ArithMode::exact, rng);
    BettiResult br = hilbert_deconvolution(hp.dims, p.rs.ambient, p.x_graph.dim, p.rd.fp_count());
    if (!(br.valid && br.b == std::vector<long long>{1, 1, 1, 1})) {
      ok = false;
      detail += "rook2 betti wrong; ";
    }
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Pipeline p = build_rook_pipeline(3);
    HilbertProfile hp = hilbert_profile(cx(p), 8, ArithMode::modular, rng);
    BettiResult br = hilbert_deconvolution(hp.dims, p.rs.ambient, p.x_graph.dim, p.rd.fp_count());
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool nine_ones = br.b == std::vector<long long>(9, 1);
    long long sum = 0;
    for (long long b : br.b) sum += b;
    if (!(br.valid && nine_ones && sum == p.rd.fp_count())) {
      ok = false;
      detail += "rook3 betti wrong; ";
    }
    if (dt > 300.0) {
      ok = false;
      detail += "rook3 profile took " + std::to_string(dt) + "s > 5min; ";
    }
  }
  report(2, "projective-space Betti numbers (rook n=2,3)", ok, detail);
}

void criterion3_census() {
  bool ok = true;
  std::string detail;
  auto expect = [&](const char* name, const Pipeline& p, int fps, int curves) {
    if (p.rd.fp_count() != fps || static_cast<int>(p.x_graph.edges.size()) != curves) {
      ok = false;
      detail += std::string(name) + " census " + std::to_string(p.rd.fp_count()) + "/" +
                std::to_string(p.x_graph.edges.size()) + " expected " + std::to_string(fps) +
                "/" + std::to_string(curves) + "; ";
    }
    if (p.x_graph.rationally_smooth) {
      for (int d : p.x_graph.degrees())
        if (d != p.x_graph.dim) {
          ok = false;
          detail += std::string(name) + " degree " + std::to_string(d) +
                    " != " + std::to_string(p.x_graph.dim) + "; ";
          break;
        }
    }
  };
  expect("rook2", build_rook_pipeline(2), 4, 6);
  expect("rook3", build_rook_pipeline(3), 9, 36);
  expect("hexagon", build_pipeline(Family::A, 2, {IVec{2, 1, 0}}), 36, 144);
  report(3, "fixed-point and curve census with degree regularity", ok, detail);
}

void criterion4_quasi_regularity() {
  bool ok = true;
  std::string detail;
  // is_quasi_regular itself asserts that both criteria agree
  if (!build_rook_pipeline(2).x_graph.quasi_regular) {
    ok = false;
    detail += "rook2 should be quasi-regular; ";
  }
  if (!build_pipeline(Family::A, 2, {IVec{2, 1, 0}}).x_graph.quasi_regular) {
    ok = false;
    detail += "hexagon should be quasi-regular; ";
  }
  if (build_rook_pipeline(3).x_graph.quasi_regular) {
    ok = false;
    detail += "rook3 should not be quasi-regular; ";
  }
  Pipeline oct = build_pipeline(Family::A, 3, {IVec{1, 1, 0, 0}});
  if (oct.x_graph.rationally_smooth || oct.simp.is_simple) {
    ok = false;
    detail += "octahedron should be flagged not rationally smooth; ";
  }
  bool deg4 = true;
  for (int d : oct.simp.degree) deg4 = deg4 && d == 4;
  if (!deg4 || oct.simp.dim != 3) {
    ok = false;
    detail += "octahedron should have polytope degree 4 and dim 3; ";
  }
  report(4, "quasi-regularity dichotomy and octahedron flag", ok, detail);
}

void criterion5_toric_comparison() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(2027);
  auto t0 = std::chrono::steady_clock::now();
  auto run = [&](const char* name, const Pipeline& p, ArithMode mode, bool expect_iso) {
    ToricCompareReport rep = toric_compare(cx(p), cy(p), 3, mode, rng);
    bool all_inj = true, all_iso = true;
    for (size_t d = 0; d < rep.injective.size(); ++d) {
      all_inj = all_inj && rep.injective[d];
      all_iso = all_iso && rep.isomorphism[d];
    }
    if (!all_inj) {
      ok = false;
      detail += std::string(name) + " not injective; ";
    }
    if (all_iso != expect_iso) {
      ok = false;
      detail += std::string(name) + (expect_iso ? " should be" : " should not be") +
                " an isomorphism through degree 3; ";
    }
  };
  run("rook2", build_rook_pipeline(2), ArithMode::exact, true);
  run("rook3", build_rook_pipeline(3), ArithMode::modular, false);
  run("hexagon", build_pipeline(Family::A, 2, {IVec{2, 1, 0}}), ArithMode::modular, true);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > 60.0) {
    ok = false;
    detail += "took " + std::to_string(dt) + "s > 1min; ";
  }
  report(5, "toric comparison (injectivity; isomorphism iff quasi-regular)", ok, detail);
}

void criterion6_h_partner_law() {
  bool ok = true;
  std::string detail;
  PipelineOptions paper;
  paper.convention = Convention::paper;
  auto check_input = [&](const char* name, const Pipeline& p) {
    // index emitted curves by their fixed-point pair
    std::map<std::pair<int, int>, IVec> theta;
    for (const Curve3Record& c : p.curves) theta[{c.fp_a, c.fp_b}] = c.theta;
    long long checked = 0;
    for (size_t ei = 0; ei < p.es.size(); ++ei) {
      const PolyEdge& e = p.es[ei];
      if (e.h_class != 2) continue;
      int s = p.W.refl_of_posroot[e.swap_root];
      for (int u = 0; u < p.W.size(); ++u) {
        auto pair_of = [&](int uu) {
          int uinv = p.W.inv[uu];
          auto fp = [&](int v) {
            int o = p.vs.orbit_of[v];
            return p.rd.fp_id(o, p.rd.coset_of_vertex[v],
                              p.rd.coset_of_vertex[p.vs.action[uinv][v]]);
          };
          int a = fp(e.v1), b = fp(e.v2);
          return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        IVec tx = theta.at(pair_of(u));
        IVec ty = theta.at(pair_of(p.W.mul[s][u]));
        IVec expected = sign_normalize(bichar(bichar_left(tx), ivec_neg(bichar_right(tx))));
        if (ty != expected) {
          ok = false;
          detail += std::string(name) + " partner law fails at edge " + std::to_string(ei) +
                    " u=" + std::to_string(u) + "; ";
          return;
        }
        ++checked;
      }
    }
    if (checked == 0) {
      ok = false;
      detail += std::string(name) + " had no two-element H-class curves; ";
    }
  };
  check_input("rook3", build_rook_pipeline(3, paper));
  check_input("hexagon", build_pipeline(Family::A, 2, {IVec{2, 1, 0}}, paper));
  report(6, "H-class partner law, exhaustive in paper convention", ok, detail);
}

void criterion7_lj_census() {
  bool ok = true;
  std::string detail;
  {
    Pipeline p = build_pipeline(Family::A, 2, {IVec{2, 1, 0}});
    auto lj = l_j_set(p.rs, p.W, p.vs, p.es, p.rd);
    std::set<IVec> swaps;
    for (int ei : lj[0].edge_ids) swaps.insert(p.rs.positive_roots[p.es[ei].swap_root]);
    std::set<IVec> simples(p.rs.simple_roots.begin(), p.rs.simple_roots.end());
    if (lj[0].edge_ids.size() != 2 || swaps != simples) {
      ok = false;
      detail += "hexagon L^J census wrong; ";
    }
  }
  {
    Pipeline p = build_rook_pipeline(3);
    auto lj = l_j_set(p.rs, p.W, p.vs, p.es, p.rd);
    if (lj[0].edge_ids.size() != 2) {
      ok = false;
      detail += "rook3 |L^J| != 2; ";
    }
  }
  report(7, "L^J census (hexagon and rook n=3)", ok, detail);
}

void criterion8_property_suites() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(2028);

  std::vector<std::pair<std::string, Pipeline>> inputs;
  inputs.emplace_back("rook2", build_rook_pipeline(2));
  inputs.emplace_back("rook3", build_rook_pipeline(3));
  inputs.emplace_back("hexagon", build_pipeline(Family::A, 2, {IVec{2, 1, 0}}));
  inputs.emplace_back("octahedron", build_pipeline(Family::A, 3, {IVec{1, 1, 0, 0}}));

  // W x W automorphisms for all generators
  for (auto& [name, p] : inputs) {
    try {
      for (int s : p.W.simple) {
        apply_group_element(p.x_graph, p.W, p.vs, p.rd, s, p.W.id);
        apply_group_element(p.x_graph, p.W, p.vs, p.rd, p.W.id, s);
        apply_group_element(p.y_graph, p.W, p.vs, p.rd, s, s);
      }
    } catch (const std::exception& e) {
      ok = false;
      detail += name + " automorphism check: " + e.what() + "; ";
    }
  }

  // sign insensitivity of dimensions and membership
  {
    Pipeline& p = inputs[0].second;
    GKMGraph flipped = p.x_graph;
    for (size_t i = 0; i < flipped.edges.size(); ++i)
      if (i % 2 == 0) flipped.edges[i].chr = ivec_neg(flipped.edges[i].chr);
    PPContext a{p.x_graph, p.W, p.vs, p.rd};
    PPContext b{flipped, p.W, p.vs, p.rd};
    for (int d = 0; d <= 2; ++d)
      if (graded_dimension(a, d, ArithMode::exact, rng).dim !=
          graded_dimension(b, d, ArithMode::exact, rng).dim) {
        ok = false;
        detail += "sign sensitivity in dimensions at degree " + std::to_string(d) + "; ";
      }
  }

  // modular agrees with exact wherever exact runs
  for (auto& [name, p] : inputs) {
    if (name == "octahedron") continue;
    PPContext ctx{p.x_graph, p.W, p.vs, p.rd};
    for (int d = 0; d <= 2; ++d) {
      long long e = graded_dimension(ctx, d, ArithMode::exact, rng).dim;
      long long m = graded_dimension(ctx, d, ArithMode::modular, rng).dim;
      if (e != m) {
        ok = false;
        detail += name + " modular/exact disagree at degree " + std::to_string(d) + "; ";
      }
    }
  }

  // closed-orbit vs full-graph membership on 100 random tuples per input
  for (auto& [name, p] : inputs) {
    const int nv = 2 * p.x_graph.rank;
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> degd(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Poly> tuple;
      for (size_t v = 0; v < p.x_graph.verts.size(); ++v) {
        MonoTable t = monomial_table(nv, degd(rng));
        Poly q(nv);
        for (const Mono& m : t.list) q.add_term(m, Rational(coef(rng)));
        tuple.push_back(std::move(q));
      }
      MembershipReport full = check_membership(p.x_graph, tuple);
      MembershipReport closed = check_membership(p.x_graph, tuple, {1, 2});
      MembershipReport curves = check_membership(p.x_graph, tuple, {3});
      std::vector<int> merged = closed.violations;
      merged.insert(merged.end(), curves.violations.begin(), curves.violations.end());
      std::sort(merged.begin(), merged.end());
      if (full.ok != (closed.ok && curves.ok) || full.violations != merged) {
        ok = false;
        detail += name + " membership decomposition mismatch; ";
        break;
      }
    }
  }
  report(8, "property suites (signs, automorphisms, modular soundness, decomposition)", ok,
         detail);
}

}  // namespace

int main() {
  try {
    criterion1_oracle_equivalence();
    criterion2_betti();
    criterion3_census();
    criterion4_quasi_regularity();
    criterion5_toric_comparison();
    criterion6_h_partner_law();
    criterion7_lj_census();
    criterion8_property_suites();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance suite aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
