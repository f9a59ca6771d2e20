#pragma once

// Weyl-orbit polytopes in exact rational arithmetic. Vertices are the
// W-orbits of the input dominant weights; 1-faces are certified by the
// exact midpoint LP; simplicity of the vertex figure decides rational
// smoothness downstream.

#include <algorithm>
#include <set>
#include <vector>

#include "gkm/lp.hpp"
#include "gkm/root_system.hpp"

namespace gkm {

struct VertexSet {
  std::vector<IVec> vertices;
  std::vector<int> orbit_of;              // vertex -> orbit id
  std::vector<int> dominant_vertex;       // orbit id -> vertex id of dominant point
  std::vector<int> antidominant_vertex;   // orbit id -> vertex id of antidominant point
  std::vector<std::vector<int>> action;   // action[w][v] = index of act(w, vertex v)
  bool common_height = true;              // false only for opt-in exotic inputs
  long long height = 0;                   // shared central height when common_height

  int count() const { return static_cast<int>(vertices.size()); }
  int orbit_count() const { return static_cast<int>(dominant_vertex.size()); }
};

struct PolyEdge {
  int v1 = -1, v2 = -1;  // endpoint vertex ids, v1 < v2
  IVec direction;        // lambda_f = vertices[v1] - vertices[v2]
  int h_class = 0;       // 1 or 2, filled by the renner layer
  int swap_root = -1;    // positive-root index of alpha_f when h_class == 2
};

// Union of the W-orbits of the given dominant weights, with full validation:
// dominance, equal central heights (unless explicitly waived), and the hull
// vertex certificate for every orbit point.
inline VertexSet orbit_polytope(const RootSystem& rs, const WeylGroup& W,
                                const std::vector<IVec>& dominant_weights,
                                bool allow_mixed_heights = false) {
  if (dominant_weights.empty()) throw input_error("no weights given");
  VertexSet vs;
  for (const IVec& mu : dominant_weights) {
    if (static_cast<int>(mu.size()) != rs.ambient)
      throw input_error("weight " + ivec_to_string(mu) + " has wrong dimension (expected " +
                        std::to_string(rs.ambient) + ")");
    int bad = rs.violated_coroot(mu);
    if (bad >= 0)
      throw input_error("weight " + ivec_to_string(mu) +
                        " is not dominant: negative pairing against simple coroot #" +
                        std::to_string(bad));
  }
  vs.height = rs.height(dominant_weights.front());
  for (const IVec& mu : dominant_weights) {
    if (rs.height(mu) != vs.height) {
      if (!allow_mixed_heights)
        throw input_error("mixed central heights: " + ivec_to_string(mu) + " has height " +
                          std::to_string(rs.height(mu)) + ", expected " +
                          std::to_string(vs.height));
      vs.common_height = false;
    }
  }

  std::set<IVec> seen;
  for (const IVec& mu : dominant_weights) {
    if (seen.count(mu)) throw input_error("duplicate orbit: weight " + ivec_to_string(mu));
    int orbit = vs.orbit_count();
    CosetDecomposition cd = cosets_and_stabilizers(rs, W, mu);
    int dom = -1, antidom = -1;
    for (int c = 0; c < cd.count(); ++c) {
      const IVec& pt = cd.coset_image[c];
      if (seen.count(pt))
        throw input_error("orbits are not disjoint at point " + ivec_to_string(pt));
      seen.insert(pt);
      int vid = vs.count();
      vs.vertices.push_back(pt);
      vs.orbit_of.push_back(orbit);
      if (pt == mu) dom = vid;
      bool anti = true;
      for (const IVec& cv : rs.simple_coroots)
        if (rs.pairing(cv, pt) > 0) anti = false;
      if (anti) antidom = vid;
    }
    if (dom < 0 || antidom < 0) throw invariant_error("orbit lacks a (anti)dominant vertex");
    vs.dominant_vertex.push_back(dom);
    vs.antidominant_vertex.push_back(antidom);
  }

  // Hull certificate: every listed point must be a vertex of the hull.
  for (int v = 0; v < vs.count(); ++v) {
    std::vector<IVec> others;
    for (int u = 0; u < vs.count(); ++u)
      if (u != v) others.push_back(vs.vertices[u]);
    if (!others.empty() && in_convex_hull(others, vs.vertices[v]))
      throw input_error("orbit of weight " +
                        ivec_to_string(vs.vertices[vs.dominant_vertex[vs.orbit_of[v]]]) +
                        " is swallowed: point " + ivec_to_string(vs.vertices[v]) +
                        " is not a hull vertex");
  }

  // W-action table; W-stability of the list is enforced by construction.
  std::map<IVec, int> vid;
  for (int v = 0; v < vs.count(); ++v) vid[vs.vertices[v]] = v;
  vs.action.assign(W.size(), std::vector<int>(vs.count()));
  for (int w = 0; w < W.size(); ++w)
    for (int v = 0; v < vs.count(); ++v) {
      auto it = vid.find(W.act(w, vs.vertices[v]));
      if (it == vid.end()) throw invariant_error("vertex set is not W-stable");
      vs.action[w][v] = it->second;
    }
  return vs;
}

// Exact list of 1-faces via the midpoint LP certificate.
inline std::vector<PolyEdge> edges(const VertexSet& vs) {
  std::vector<PolyEdge> out;
  const int n = vs.count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!edge_certificate(vs.vertices, i, j)) continue;
      PolyEdge e;
      e.v1 = i;
      e.v2 = j;
      e.direction = ivec_sub(vs.vertices[i], vs.vertices[j]);
      if (ivec_is_zero(e.direction)) throw invariant_error("zero edge direction");
      out.push_back(std::move(e));
    }
  return out;
}

struct SimplicityReport {
  int dim = 0;                  // rank of the span of vertex differences
  std::vector<int> degree;      // polytope degree per vertex
  bool is_simple = false;
};

namespace detail {

// rank of an integer matrix by fraction-free forward elimination
inline int integer_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline SimplicityReport simplicity_check(const VertexSet& vs, const std::vector<PolyEdge>& es) {
  SimplicityReport rep;
  std::vector<std::vector<Rational>> diffs;
  for (int v = 1; v < vs.count(); ++v) {
    IVec d = ivec_sub(vs.vertices[v], vs.vertices[0]);
    std::vector<Rational> row(d.size());
    for (size_t i = 0; i < d.size(); ++i) row[i] = Rational(d[i]);
    diffs.push_back(std::move(row));
  }
  rep.dim = detail::integer_rank(std::move(diffs));
  rep.degree.assign(vs.count(), 0);
  for (const PolyEdge& e : es) {
    ++rep.degree[e.v1];
    ++rep.degree[e.v2];
  }
  rep.is_simple = true;
  for (int v = 0; v < vs.count(); ++v) {
    if (rep.degree[v] < rep.dim)
      throw invariant_error("vertex degree below polytope dimension at vertex " +
                            std::to_string(v));
    if (rep.degree[v] != rep.dim) rep.is_simple = false;
  }
  return rep;
}

}  // namespace gkm
