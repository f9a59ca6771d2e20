#pragma once

// The labeled moment graph of the embedding X (kinds 1/2/3) and of its
// associated toric part Y, with the W x W action and JSON/DOT export.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkm/renner.hpp"

namespace gkm {

using ordered_json = nlohmann::ordered_json;

struct GKMEdge {
  int kind = 0;  // 1 left/closed-orbit, 2 right/closed-orbit, 3 toric-part
  int a = -1, b = -1;
  IVec chr;          // sign-normalized bi-character in Z^{2r}
  int h_class = 0;   // 1 or 2 on kind-3 edges, 0 otherwise
};

struct GKMVertex {
  int orbit = 0, left = 0, right = 0;
};

struct GKMGraph {
  int rank = 0;  // ambient lattice rank r; characters live in Z^{2r}
  bool toric = false;
  std::vector<GKMVertex> verts;
  std::vector<GKMEdge> edges;
  int lambda1_count = 0;
  bool quasi_regular = false;
  bool rationally_smooth = false;
  int dim = 0;  // dim G - 1 = r - 1 + |Phi|
  std::string provenance;

  std::vector<int> degrees() const {
    std::vector<int> deg(verts.size(), 0);
    for (const GKMEdge& e : edges) {
      ++deg[e.a];
      ++deg[e.b];
    }
    return deg;
  }

  int components() const {
    std::vector<int> parent(verts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const GKMEdge& e : edges) parent[find(e.a)] = find(e.b);
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
  }
};

namespace detail {

inline void add_dedup_edge(std::map<std::pair<int, int>, int>& seen, GKMGraph& g, GKMEdge e) {
  if (e.a > e.b) std::swap(e.a, e.b);
  auto key = std::make_pair(e.a, e.b);
  auto it = seen.find(key);
  if (it == seen.end()) {
    seen[key] = static_cast<int>(g.edges.size());
    g.edges.push_back(std::move(e));
    return;
  }
  const GKMEdge& prev = g.edges[it->second];
  if (prev.kind != e.kind || prev.chr != e.chr)
    throw invariant_error("duplicate edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                          "} generated with inconsistent label: kind " +
                          std::to_string(prev.kind) + " char " + ivec_to_string(prev.chr) +
                          " vs kind " + std::to_string(e.kind) + " char " + ivec_to_string(e.chr));
}

}  // namespace detail

// Moment graph of X. Kind-1 edges join (uC, vC) to (s_a uC, vC) with bare
// character (alpha, 0); kind-2 symmetrically on the right; kind-3 edges come
// from the rank-2 curve enumeration. Each closed-orbit edge is generated from
// both endpoints and deduplicated under a same-label assertion.
inline GKMGraph build_gkm(const RootSystem& rs, const WeylGroup& W, const VertexSet& vs,
                          const RennerData& rd, const std::vector<Curve3Record>& curves,
                          const SimplicityReport& simp) {
  GKMGraph g;
  g.rank = rs.ambient;
  g.toric = false;
  for (const FixedPoint& fp : rd.fixed_points) g.verts.push_back({fp.orbit, fp.left, fp.right});
  g.lambda1_count = vs.orbit_count();
  g.quasi_regular = is_quasi_regular(W, vs, rd);
  g.rationally_smooth = simp.is_simple;
  g.dim = rs.ambient - 1 + 2 * static_cast<int>(rs.positive_roots.size());

  // coset -> vertex id tables, one per orbit
  std::vector<std::vector<int>> coset_vertex(vs.orbit_count());
  for (int o = 0; o < vs.orbit_count(); ++o) coset_vertex[o].assign(rd.cosets[o].count(), -1);
  for (int v = 0; v < vs.count(); ++v) coset_vertex[vs.orbit_of[v]][rd.coset_of_vertex[v]] = v;

  std::map<std::pair<int, int>, int> seen;
  const IVec zero(rs.ambient, 0);
  for (int id = 0; id < rd.fp_count(); ++id) {
    const FixedPoint& fp = rd.fixed_points[id];
    for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
      int s = W.refl_of_posroot[k];
      int l2 = rd.coset_of_vertex[vs.action[s][coset_vertex[fp.orbit][fp.left]]];
      if (l2 != fp.left) {
        GKMEdge e;
        e.kind = 1;
        e.a = id;
        e.b = rd.fp_id(fp.orbit, l2, fp.right);
        e.chr = sign_normalize(bichar(rs.positive_roots[k], zero));
        detail::add_dedup_edge(seen, g, std::move(e));
      }
      int r2 = rd.coset_of_vertex[vs.action[s][coset_vertex[fp.orbit][fp.right]]];
      if (r2 != fp.right) {
        GKMEdge e;
        e.kind = 2;
        e.a = id;
        e.b = rd.fp_id(fp.orbit, fp.left, r2);
        e.chr = sign_normalize(bichar(zero, rs.positive_roots[k]));
        detail::add_dedup_edge(seen, g, std::move(e));
      }
    }
  }
  for (const Curve3Record& c : curves) {
    GKMEdge e;
    e.kind = 3;
    e.a = c.fp_a;
    e.b = c.fp_b;
    e.chr = c.theta;
    e.h_class = c.h_class;
    if (seen.count({e.a, e.b}))
      throw invariant_error("type-3 curve duplicates a closed-orbit edge");
    seen[{e.a, e.b}] = static_cast<int>(g.edges.size());
    g.edges.push_back(std::move(e));
  }

  for (const GKMEdge& e : g.edges)
    if (ivec_is_zero(e.chr)) throw invariant_error("zero edge character");

  // Degree regularity holds exactly on the rationally smooth full-height
  // inputs (the polytope spans the height-1 slice).
  if (g.rationally_smooth && vs.common_height && simp.dim == rs.ambient - 1) {
    for (int d : g.degrees())
      if (d != g.dim)
        throw invariant_error("rationally smooth input with vertex degree " + std::to_string(d) +
                              " != dim X = " + std::to_string(g.dim));
  }
  return g;
}

// Moment graph of the toric part Y: polytope vertices, one edge per
// polytope edge, bi-character (lambda_f, -lambda_f) in the action convention.
inline GKMGraph build_toric_gkm(const RootSystem& rs, const VertexSet& vs,
                                const std::vector<PolyEdge>& es,
                                Convention conv = Convention::action) {
  GKMGraph g;
  g.rank = rs.ambient;
  g.toric = true;
  for (int v = 0; v < vs.count(); ++v) g.verts.push_back({vs.orbit_of[v], v, v});
  g.lambda1_count = vs.orbit_count();
  g.dim = rs.ambient - 1;
  for (size_t ei = 0; ei < es.size(); ++ei) {
    const PolyEdge& pe = es[ei];
    GKMEdge e;
    e.kind = 3;
    e.a = pe.v1;
    e.b = pe.v2;
    IVec rho = conv == Convention::action ? ivec_neg(pe.direction) : pe.direction;
    e.chr = sign_normalize(bichar(pe.direction, rho));
    e.h_class = pe.h_class;
    g.edges.push_back(std::move(e));
  }
  return g;
}

// Induced permutation of (w1, w2) on the graph; asserts it is a label
// automorphism (characters map through the pair, up to sign).
inline std::vector<int> apply_group_element(const GKMGraph& g, const WeylGroup& W,
                                            const VertexSet& vs, const RennerData& rd, int w1,
                                            int w2) {
  std::vector<int> perm(g.verts.size(), -1);
  if (g.toric) {
    if (w1 != w2) throw input_error("the toric graph only carries the diagonal action");
    for (size_t v = 0; v < g.verts.size(); ++v) perm[v] = vs.action[w1][static_cast<int>(v)];
  } else {
    std::vector<std::vector<int>> coset_vertex(vs.orbit_count());
    for (int o = 0; o < vs.orbit_count(); ++o) coset_vertex[o].assign(rd.cosets[o].count(), -1);
    for (int v = 0; v < vs.count(); ++v) coset_vertex[vs.orbit_of[v]][rd.coset_of_vertex[v]] = v;
    for (size_t i = 0; i < g.verts.size(); ++i) {
      const GKMVertex& fp = g.verts[i];
      int l2 = rd.coset_of_vertex[vs.action[w1][coset_vertex[fp.orbit][fp.left]]];
      int r2 = rd.coset_of_vertex[vs.action[w2][coset_vertex[fp.orbit][fp.right]]];
      perm[i] = rd.fp_id(fp.orbit, l2, r2);
    }
  }

  std::map<std::pair<int, int>, const GKMEdge*> by_pair;
  for (const GKMEdge& e : g.edges) by_pair[{e.a, e.b}] = &e;
  for (const GKMEdge& e : g.edges) {
    int a = perm[e.a], b = perm[e.b];
    if (a > b) std::swap(a, b);
    auto it = by_pair.find({a, b});
    if (it == by_pair.end())
      throw invariant_error("group element does not permute the edge set");
    IVec mapped = sign_normalize(
        bichar(W.act(w1, bichar_left(e.chr)), W.act(w2, bichar_right(e.chr))));
    if (it->second->kind != e.kind || it->second->chr != mapped)
      throw invariant_error("group element fails to map edge labels: expected " +
                            ivec_to_string(mapped) + ", found " + ivec_to_string(it->second->chr));
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

inline ordered_json graph_to_json(const GKMGraph& g) {
  ordered_json j;
  j["rank"] = g.rank;
  j["vertices"] = ordered_json::array();
  for (size_t i = 0; i < g.verts.size(); ++i) {
    ordered_json v;
    v["id"] = i;
    v["orbit"] = g.verts[i].orbit;
    v["left"] = g.verts[i].left;
    v["right"] = g.verts[i].right;
    j["vertices"].push_back(std::move(v));
  }
  j["edges"] = ordered_json::array();
  for (const GKMEdge& e : g.edges) {
    ordered_json je;
    je["kind"] = e.kind;
    je["a"] = e.a;
    je["b"] = e.b;
    je["char"] = e.chr;
    if (e.kind == 3) je["h_class"] = e.h_class;
    j["edges"].push_back(std::move(je));
  }
  j["meta"] = {{"quasi_regular", g.quasi_regular},
               {"rationally_smooth", g.rationally_smooth},
               {"dim", g.dim}};
  return j;
}

inline std::string graph_to_dot(const GKMGraph& g) {
  std::string s = "graph gkm {\n";
  for (size_t i = 0; i < g.verts.size(); ++i)
    s += "  v" + std::to_string(i) + " [label=\"" + std::to_string(g.verts[i].orbit) + ":" +
         std::to_string(g.verts[i].left) + ":" + std::to_string(g.verts[i].right) + "\"];\n";
  for (const GKMEdge& e : g.edges) {
    std::string chr = ivec_to_string(e.chr);
    s += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + " [label=\"k" +
         std::to_string(e.kind) + " " + chr + "\"];\n";
  }
  s += "}\n";
  return s;
}

inline std::string export_graph(const GKMGraph& g, const std::string& format) {
  if (format == "json") return graph_to_json(g).dump(2) + "\n";
  if (format == "dot") return graph_to_dot(g);
  throw input_error("unknown graph format '" + format + "' (expected json or dot)");
}

}  // namespace gkm
