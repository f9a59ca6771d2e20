#pragma once

// Rank-1 and rank-2 Renner combinatorics over the polytope model: fixed
// points as coset pairs, the three curve types' bi-characters, H-classes,
// and quasi-regularity.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gkm/polytope.hpp"

namespace gkm {

enum class Chamber { dominant, antidominant };
enum class Convention { action, paper };

struct FixedPoint {
  int orbit = 0;
  int left = 0;   // coset index in W / C_W(e)
  int right = 0;  // coset index in W / C_W(e)
};

struct RennerData {
  Chamber chamber = Chamber::dominant;
  std::vector<int> rep_vertex;               // orbit -> chosen Lambda_1 representative vertex
  std::vector<CosetDecomposition> cosets;    // per orbit, w.r.t. the representative
  std::vector<int> coset_of_vertex;          // vertex id -> coset index within its orbit
  std::vector<FixedPoint> fixed_points;      // all of R_1, deterministic order
  std::vector<int> fp_offset;                // orbit -> first fixed point id

  int fp_id(int orbit, int left, int right) const {
    return fp_offset[orbit] + left * cosets[orbit].count() + right;
  }
  int fp_count() const { return static_cast<int>(fixed_points.size()); }
};

// Lambda_1 as the chosen chamber representative of each vertex orbit.
inline std::vector<int> lambda1(const VertexSet& vs, Chamber chamber = Chamber::dominant) {
  return chamber == Chamber::dominant ? vs.dominant_vertex : vs.antidominant_vertex;
}

// R_1 as the disjoint union over orbits of (W/C_W(e)) x (W/C_W(e)).
inline RennerData fixed_points(const RootSystem& rs, const WeylGroup& W, const VertexSet& vs,
                               Chamber chamber = Chamber::dominant) {
  RennerData rd;
  rd.chamber = chamber;
  rd.rep_vertex = lambda1(vs, chamber);
  rd.coset_of_vertex.assign(vs.count(), -1);
  long long e1 = 0;
  for (int o = 0; o < vs.orbit_count(); ++o) {
    CosetDecomposition cd = cosets_and_stabilizers(rs, W, vs.vertices[rd.rep_vertex[o]]);
    for (int v = 0; v < vs.count(); ++v) {
      if (vs.orbit_of[v] != o) continue;
      auto it = cd.image_index.find(vs.vertices[v]);
      if (it == cd.image_index.end()) throw invariant_error("vertex missing from its own orbit");
      rd.coset_of_vertex[v] = it->second;
    }
    e1 += cd.count();
    rd.fp_offset.push_back(static_cast<int>(rd.fixed_points.size()));
    for (int l = 0; l < cd.count(); ++l)
      for (int r = 0; r < cd.count(); ++r) rd.fixed_points.push_back(FixedPoint{o, l, r});
    rd.cosets.push_back(std::move(cd));
  }
  if (e1 != vs.count()) throw invariant_error("sum of orbit sizes != |E_1|");
  return rd;
}

// H-class of a rank-2 idempotent (polytope edge): two elements iff a root is
// proportional to the edge direction and its reflection swaps the endpoints.
// The dichotomy against orbit membership is asserted, not assumed.
inline void classify_h_class(const RootSystem& rs, const WeylGroup& W, const VertexSet& vs,
                             PolyEdge& e) {
  e.h_class = 1;
  e.swap_root = -1;
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    if (!ivec_proportional(rs.positive_roots[k], e.direction)) continue;
    int s = W.refl_of_posroot[k];
    if (vs.action[s][e.v1] == e.v2) {
      e.h_class = 2;
      e.swap_root = static_cast<int>(k);
      break;
    }
  }
  bool same_orbit = vs.orbit_of[e.v1] == vs.orbit_of[e.v2];
  if (same_orbit && e.h_class != 2)
    throw invariant_error("edge {" + ivec_to_string(vs.vertices[e.v1]) + "," +
                          ivec_to_string(vs.vertices[e.v2]) +
                          "} joins one W-orbit but admits no swapping root");
  if (!same_orbit && e.h_class == 2)
    throw invariant_error("swapping root across distinct W-orbits");
}

inline void classify_h_classes(const RootSystem& rs, const WeylGroup& W, const VertexSet& vs,
                               std::vector<PolyEdge>& es) {
  for (PolyEdge& e : es) classify_h_class(rs, W, vs, e);
}

struct Curve3Record {
  int fp_a = -1, fp_b = -1;  // fixed point ids, fp_a < fp_b
  IVec theta;                // sign-normalized bi-character in Z^{2r}
  int edge_id = -1;          // source polytope edge
  int u = -1;                // representative translation
  int h_class = 0;           // copied from the source edge
};

// One curve per rank-2 Renner element: enumerate (edge f, u in W), attach the
// fixed points (w_i C, u^{-1} w_i C), and deduplicate by the unordered pair.
// Collisions must agree on the bi-character up to overall sign.
inline std::vector<Curve3Record> type3_curves(const WeylGroup& W,
                                              const VertexSet& vs,
                                              const std::vector<PolyEdge>& es,
                                              const RennerData& rd,
                                              Convention conv = Convention::action) {
  std::vector<Curve3Record> out;
  std::map<std::pair<int, int>, int> by_pair;
  for (size_t ei = 0; ei < es.size(); ++ei) {
    const PolyEdge& e = es[ei];
    const IVec& lambda = e.direction;
    for (int u = 0; u < W.size(); ++u) {
      int uinv = W.inv[u];
      int fa, fb;
      {
        int v = e.v1;
        int o = vs.orbit_of[v];
        fa = rd.fp_id(o, rd.coset_of_vertex[v], rd.coset_of_vertex[vs.action[uinv][v]]);
      }
      {
        int v = e.v2;
        int o = vs.orbit_of[v];
        fb = rd.fp_id(o, rd.coset_of_vertex[v], rd.coset_of_vertex[vs.action[uinv][v]]);
      }
      if (fa == fb) throw invariant_error("type-3 curve with coincident fixed points");
      IVec rho = W.act(uinv, lambda);
      if (conv == Convention::action) rho = ivec_neg(rho);
      IVec theta = sign_normalize(bichar(lambda, rho));
      std::pair<int, int> key = fa < fb ? std::make_pair(fa, fb) : std::make_pair(fb, fa);
      auto it = by_pair.find(key);
      if (it == by_pair.end()) {
        by_pair[key] = static_cast<int>(out.size());
        Curve3Record c;
        c.fp_a = key.first;
        c.fp_b = key.second;
        c.theta = std::move(theta);
        c.edge_id = static_cast<int>(ei);
        c.u = u;
        c.h_class = e.h_class;
        out.push_back(std::move(c));
      } else if (out[it->second].theta != theta) {
        throw invariant_error(
            "duplicate type-3 pair with inconsistent characters: edge " + std::to_string(ei) +
            " u=" + std::to_string(u) + " theta=" + ivec_to_string(theta) + " vs " +
            ivec_to_string(out[it->second].theta));
      }
    }
  }
  return out;
}

// Both quasi-regularity criteria, with the agreement assertion.
inline bool is_quasi_regular(const WeylGroup& W, const VertexSet& vs, const RennerData& rd) {
  bool all_trivial = true;
  long long r1 = 0;
  for (const auto& cd : rd.cosets) {
    if (cd.stabilizer.size() != 1) all_trivial = false;
    r1 += static_cast<long long>(cd.count()) * cd.count();
  }
  bool counting = r1 == static_cast<long long>(vs.count()) * W.size();
  if (all_trivial != counting)
    throw invariant_error("quasi-regularity criteria disagree: stabilizers say " +
                          std::to_string(all_trivial) + ", counting says " +
                          std::to_string(counting));
  return counting;
}

// Right translation acts on the right character component through w^{-1};
// left translation acts on the left component through w.
enum class Side { left, right };

inline IVec translate_character(const WeylGroup& W, const IVec& theta, int w, Side side) {
  IVec l = bichar_left(theta), r = bichar_right(theta);
  if (side == Side::right)
    r = W.act(W.inv[w], r);
  else
    l = W.act(w, l);
  return bichar(l, r);
}

struct LJSet {
  int orbit = 0;
  std::vector<int> edge_ids;  // polytope edges through the representative vertex
  std::vector<int> J;         // simple reflections fixing the representative
};

// L^J per orbit: the edges through the chamber representative, together with
// the type J of the corresponding parabolic.
inline std::vector<LJSet> l_j_set(const RootSystem& rs, const WeylGroup& W, const VertexSet& vs,
                                  const std::vector<PolyEdge>& es, const RennerData& rd) {
  std::vector<LJSet> out;
  for (int o = 0; o < vs.orbit_count(); ++o) {
    LJSet lj;
    lj.orbit = o;
    int rep = rd.rep_vertex[o];
    for (size_t ei = 0; ei < es.size(); ++ei)
      if (es[ei].v1 == rep || es[ei].v2 == rep) lj.edge_ids.push_back(static_cast<int>(ei));
    for (size_t i = 0; i < rs.simple_roots.size(); ++i)
      if (vs.action[W.simple[i]][rep] == rep) lj.J.push_back(static_cast<int>(i));
    out.push_back(std::move(lj));
  }
  return out;
}

}  // namespace gkm
