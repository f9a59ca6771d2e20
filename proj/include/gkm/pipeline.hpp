#pragma once

// End-to-end assembly: root datum + dominant weights -> polytope -> Renner
// combinatorics -> moment graphs. All stages validate their own invariants.

#include <string>
#include <vector>

#include "gkm/gkm_graph.hpp"

namespace gkm {

struct PipelineOptions {
  Chamber chamber = Chamber::dominant;
  Convention convention = Convention::action;
  bool allow_mixed_heights = false;
};

struct Pipeline {
  RootSystem rs;
  WeylGroup W;
  VertexSet vs;
  std::vector<PolyEdge> es;
  SimplicityReport simp;
  RennerData rd;
  std::vector<Curve3Record> curves;
  GKMGraph x_graph;
  GKMGraph y_graph;
};

inline std::string make_provenance(Family fam, int rank, const std::vector<IVec>& weights,
                                   const PipelineOptions& opt) {
  std::string s = family_name(fam) + std::to_string(rank) + ":";
  for (const IVec& w : weights) s += ivec_to_string(w);
  s += opt.chamber == Chamber::dominant ? ":dom" : ":antidom";
  s += opt.convention == Convention::action ? ":action" : ":paper";
  return s;
}

inline Pipeline build_pipeline(Family fam, int rank, const std::vector<IVec>& weights,
                               const PipelineOptions& opt = {}) {
  Pipeline p;
  p.rs = build_root_system(fam, rank);
  p.W = enumerate_weyl(p.rs);
  p.vs = orbit_polytope(p.rs, p.W, weights, opt.allow_mixed_heights);
  p.es = edges(p.vs);
  classify_h_classes(p.rs, p.W, p.vs, p.es);
  p.simp = simplicity_check(p.vs, p.es);
  p.rd = fixed_points(p.rs, p.W, p.vs, opt.chamber);
  p.curves = type3_curves(p.W, p.vs, p.es, p.rd, opt.convention);
  p.x_graph = build_gkm(p.rs, p.W, p.vs, p.rd, p.curves, p.simp);
  p.y_graph = build_toric_gkm(p.rs, p.vs, p.es, opt.convention);
  std::string prov = make_provenance(fam, rank, weights, opt);
  p.x_graph.provenance = prov;
  p.y_graph.provenance = prov;
  return p;
}

// The rook monoid of rank n enters the pipeline as type A_{n-1} in the
// GL-style lattice with highest weight e_1.
inline Pipeline build_rook_pipeline(int n, const PipelineOptions& opt = {}) {
  if (n < 2) throw input_error("rook pipeline needs n >= 2");
  IVec e1(n, 0);
  e1[0] = 1;
  return build_pipeline(Family::A, n - 1, {e1}, opt);
}

}  // namespace gkm
