#pragma once

// Brute-force GKM data of the rook monoid, built directly from partial
// permutation matrices. This module shares no code with the polytope
// pipeline: characters come from scaling coordinates of sums of elementary
// matrices, edges from row/column incidence. Its only job is to catch drift
// in the pipeline.

#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gkm/gkm_graph.hpp"
#include "gkm/pipeline.hpp"

namespace gkm {

// n x n 0/1 matrix with at most one 1 per row and column;
// cell[i] = column of the 1 in row i, or -1.
struct RookElement {
  int n = 0;
  std::vector<int> cell;

  int rank() const {
    int r = 0;
    for (int c : cell) r += c >= 0;
    return r;
  }

  RookElement times(const RookElement& o) const {
    RookElement out{n, std::vector<int>(n, -1)};
    for (int i = 0; i < n; ++i)
      if (cell[i] >= 0) out.cell[i] = o.cell[cell[i]];
    return out;
  }

  bool idempotent() const { return times(*this).cell == cell; }

  bool diagonal() const {
    for (int i = 0; i < n; ++i)
      if (cell[i] >= 0 && cell[i] != i) return false;
    return true;
  }
};

inline std::vector<RookElement> rook_monoid(int n) {
  if (n < 1 || n > 4) throw input_error("rook monoid enumeration supports 1 <= n <= 4");
  std::vector<RookElement> out;
  RookElement cur{n, std::vector<int>(n, -1)};
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int row) {
    if (row == n) {
      out.push_back(cur);
      return;
    }
    cur.cell[row] = -1;
    rec(row + 1);
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      cur.cell[row] = c;
      rec(row + 1);
      cur.cell[row] = -1;
      used[c] = 0;
    }
  };
  rec(0);
  return out;
}

// Moment graph of P(M_n) from first principles. Vertices are the rank-one
// matrices E_{ij}; the curve through {E_ij, E_kl} is the T x T orbit of
// E_ij + E_kl and its character is read off the coordinate scaling
// (s, t) . x = s x t^{-1}; the paper convention reads it off s x t instead.
inline GKMGraph rook_oracle_gkm(int n, Convention conv = Convention::action) {
  if (n < 1 || n > 4) throw input_error("rook oracle supports 1 <= n <= 4");
  GKMGraph g;
  g.rank = n;
  g.toric = false;
  g.lambda1_count = 1;
  g.quasi_regular = n <= 2;
  g.rationally_smooth = true;
  g.dim = n * n - 1;
  g.provenance = "rook-oracle-n" + std::to_string(n);
  auto vid = [n](int i, int j) { return i * n + j; };  // 0-based row, column
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.verts.push_back({0, i, j});

  auto basis = [n](int i) {
    IVec v(n, 0);
    v[i] = 1;
    return v;
  };
  const IVec zero(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = i; k < n; ++k)
        for (int l = (k == i ? j + 1 : 0); l < n; ++l) {
          GKMEdge e;
          e.a = vid(i, j);
          e.b = vid(k, l);
          if (i == k && j != l) {
            // same row: right multiplication moves the column
            e.kind = 2;
            e.chr = sign_normalize(bichar(zero, ivec_sub(basis(j), basis(l))));
          } else if (j == l && i != k) {
            // same column: left multiplication moves the row
            e.kind = 1;
            e.chr = sign_normalize(bichar(ivec_sub(basis(i), basis(k)), zero));
          } else if (i != k && j != l) {
            e.kind = 3;
            e.h_class = 2;
            IVec right = ivec_sub(basis(j), basis(l));
            if (conv == Convention::action) right = ivec_neg(right);
            e.chr = sign_normalize(bichar(ivec_sub(basis(i), basis(k)), right));
          } else {
            continue;
          }
          g.edges.push_back(std::move(e));
        }
  return g;
}

struct OracleCompareReport {
  bool match = true;
  std::vector<std::string> discrepancies;
};

// Match the pipeline graph for rook n against the oracle through the vertex
// bijection E_ij <-> (coset of e_i, coset of e_j). Discrepancies are data.
inline OracleCompareReport compare_with_oracle(const GKMGraph& oracle, const Pipeline& p) {
  OracleCompareReport rep;
  const int n = oracle.rank;
  if (p.rs.ambient != n || p.x_graph.verts.size() != oracle.verts.size()) {
    rep.match = false;
    rep.discrepancies.push_back("vertex count mismatch: oracle " +
                                std::to_string(oracle.verts.size()) + ", pipeline " +
                                std::to_string(p.x_graph.verts.size()));
    return rep;
  }
  // pipeline fixed point -> oracle vertex id
  std::vector<int> to_oracle(p.x_graph.verts.size(), -1);
  for (size_t v = 0; v < p.x_graph.verts.size(); ++v) {
    const GKMVertex& fp = p.x_graph.verts[v];
    const auto& cosets = p.rd.cosets[fp.orbit];
    auto coordinate = [&](const IVec& pt) {
      for (int i = 0; i < n; ++i)
        if (pt[i] == 1) return i;
      throw invariant_error("rook vertex is not a basis vector");
    };
    int i = coordinate(cosets.coset_image[fp.left]);
    int j = coordinate(cosets.coset_image[fp.right]);
    to_oracle[v] = i * n + j;
  }

  using Key = std::tuple<int, int, int, IVec, int>;
  auto edge_keys = [](const GKMGraph& g, const std::vector<int>* map) {
    std::set<Key> keys;
    for (const GKMEdge& e : g.edges) {
      int a = map ? (*map)[e.a] : e.a;
      int b = map ? (*map)[e.b] : e.b;
      if (a > b) std::swap(a, b);
      keys.insert({a, b, e.kind, e.chr, e.h_class});
    }
    return keys;
  };
  std::set<Key> ok = edge_keys(oracle, nullptr);
  std::set<Key> pk = edge_keys(p.x_graph, &to_oracle);
  for (const Key& k : ok)
    if (!pk.count(k))
      rep.discrepancies.push_back("oracle edge missing from pipeline: {" +
                                  std::to_string(std::get<0>(k)) + "," +
                                  std::to_string(std::get<1>(k)) + "} kind " +
                                  std::to_string(std::get<2>(k)) + " char " +
                                  ivec_to_string(std::get<3>(k)));
  for (const Key& k : pk)
    if (!ok.count(k))
      rep.discrepancies.push_back("pipeline edge absent from oracle: {" +
                                  std::to_string(std::get<0>(k)) + "," +
                                  std::to_string(std::get<1>(k)) + "} kind " +
                                  std::to_string(std::get<2>(k)) + " char " +
                                  ivec_to_string(std::get<3>(k)));
  if (oracle.quasi_regular != p.x_graph.quasi_regular)
    rep.discrepancies.push_back("quasi_regular flag mismatch");
  if (oracle.rationally_smooth != p.x_graph.rationally_smooth)
    rep.discrepancies.push_back("rationally_smooth flag mismatch");
  if (oracle.dim != p.x_graph.dim) rep.discrepancies.push_back("dim mismatch");
  rep.match = rep.discrepancies.empty();
  return rep;
}

}  // namespace gkm
