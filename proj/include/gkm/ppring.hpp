#pragma once

// The piecewise-polynomial model of equivariant cohomology: membership of
// tuples, graded dimensions of the congruence solution space (exact or
// two-prime modular), Hilbert-series deconvolution into Betti numbers,
// invariant subspaces, and the toric comparison.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gkm/gkm_graph.hpp"
#include "gkm/polynomial.hpp"
#include "gkm/sparse_linalg.hpp"

namespace gkm {

enum class ArithMode { exact, modular };

inline ArithMode arith_mode_from_string(const std::string& s) {
  if (s == "exact") return ArithMode::exact;
  if (s == "modular") return ArithMode::modular;
  throw input_error("unknown mode '" + s + "' (expected exact or modular)");
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

struct MembershipReport {
  bool ok = true;
  std::vector<int> violations;  // edge ids
};

// Tests every selected edge congruence f_a = f_b mod chi by divisibility of
// the difference by the linear form chi.
inline MembershipReport check_membership(const GKMGraph& g, const std::vector<Poly>& tuple,
                                         const std::set<int>& kinds = {1, 2, 3}) {
  if (tuple.size() != g.verts.size())
    throw input_error("tuple keys do not match the vertex set: expected " +
                      std::to_string(g.verts.size()) + " polynomials, got " +
                      std::to_string(tuple.size()));
  const int nv = 2 * g.rank;
  for (const Poly& p : tuple)
    if (p.nvars() != nv)
      throw input_error("tuple polynomial arity " + std::to_string(p.nvars()) +
                        " != " + std::to_string(nv));
  MembershipReport rep;
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    const GKMEdge& e = g.edges[ei];
    if (!kinds.count(e.kind)) continue;
    if (!linear_form_divides(e.chr, tuple[e.a] - tuple[e.b])) {
      rep.ok = false;
      rep.violations.push_back(static_cast<int>(ei));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Constraint assembly
// ---------------------------------------------------------------------------

// Everything the symmetry rows need to act on a graph.
struct PPContext {
  const GKMGraph& g;
  const WeylGroup& W;
  const VertexSet& vs;
  const RennerData& rd;
};

namespace detail {

inline long long multinomial(int k, const std::vector<int>& parts) {
  long long num = 1;
  int rem = k;
  for (int p : parts) {
    num *= binomial(rem, p);
    rem -= p;
  }
  return num;
}

inline long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw input_error("constraint coefficient overflow; weights or degree too large");
  return out;
}

// Expansion of the scaled substitution of x_pivot inside degree-d monomials:
// for each column monomial m, the list of (target monomial index, integer
// coefficient) of chi_p^d * subst(x^m) restricted to the hyperplane chi = 0.
inline std::vector<std::vector<std::pair<int, long long>>> substitution_expansion(
    const IVec& chi, const MonoTable& table) {
  const int nv = table.nvars;
  const int d = table.degree;
  int pivot = -1;
  for (int i = nv - 1; i >= 0; --i)
    if (chi[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw invariant_error("zero character in substitution");
  std::vector<int> support;
  for (int i = 0; i < nv; ++i)
    if (i != pivot && chi[i] != 0) support.push_back(i);

  std::vector<std::vector<std::pair<int, long long>>> out(table.count());
  for (int mi = 0; mi < table.count(); ++mi) {
    const Mono& m = table.list[mi];
    const int k = m[pivot];
    long long scale = 1;
    for (int t = 0; t < d - k; ++t) scale = checked_mul(scale, chi[pivot]);
    if (k % 2) scale = -scale;
    Mono base = m;
    base[pivot] = 0;
    // enumerate compositions of k over the support
    std::vector<int> comp(support.size(), 0);
    std::function<void(size_t, int)> walk = [&](size_t idx, int rem) {
      if (idx == support.size()) {
        if (rem != 0) return;
        long long coef = checked_mul(scale, multinomial(k, comp));
        Mono target = base;
        for (size_t s = 0; s < support.size(); ++s) {
          target[support[s]] += comp[s];
          for (int t = 0; t < comp[s]; ++t) coef = checked_mul(coef, chi[support[s]]);
        }
        out[mi].emplace_back(table.at(target), coef);
        return;
      }
      if (idx + 1 == support.size()) {
        comp[idx] = rem;
        walk(idx + 1, 0);
        comp[idx] = 0;
        return;
      }
      for (int e = 0; e <= rem; ++e) {
        comp[idx] = e;
        walk(idx + 1, rem - e);
      }
      comp[idx] = 0;
    };
    if (support.empty()) {
      if (k == 0) out[mi].emplace_back(mi, scale);
      // k > 0 with empty support: monomial restricts to zero
    } else {
      walk(0, k);
    }
  }
  return out;
}

// g acts on monomials through the 2r x 2r integer matrix A (characters of
// both torus factors): x^m -> prod_j (sum_i A[i][j] x_i)^{m_j}.
inline std::vector<std::vector<std::pair<int, long long>>> transform_expansion(
    const std::vector<long long>& A, const MonoTable& table) {
  const int nv = table.nvars;
  std::vector<std::vector<std::pair<int, long long>>> out(table.count());
  for (int mi = 0; mi < table.count(); ++mi) {
    const Mono& m = table.list[mi];
    std::map<Mono, long long> acc{{Mono(nv, 0), 1}};
    for (int j = 0; j < nv; ++j) {
      for (int rep = 0; rep < m[j]; ++rep) {
        std::map<Mono, long long> next;
        for (const auto& [mono, c] : acc) {
          for (int i = 0; i < nv; ++i) {
            if (A[i * nv + j] == 0) continue;
            Mono t = mono;
            ++t[i];
            next[t] += c * A[i * nv + j];
          }
        }
        acc = std::move(next);
      }
    }
    for (const auto& [mono, c] : acc)
      if (c != 0) out[mi].emplace_back(table.at(mono), c);
  }
  return out;
}

}  // namespace detail

// Edge congruence rows for homogeneous degree-d tuples, plus optional
// invariance rows (one block per generator pair) and vanishing rows.
inline IntRows assemble_system(const PPContext& ctx, const MonoTable& table,
                               const std::vector<std::pair<int, int>>& invariance_gens = {},
                               const std::vector<int>& vanish_vertices = {}) {
  const GKMGraph& g = ctx.g;
  const int M = table.count();
  IntRows sys;
  sys.ncols = static_cast<int>(g.verts.size()) * M;
  auto col = [&](int v, int mi) { return v * M + mi; };

  std::map<IVec, std::vector<std::vector<std::pair<int, long long>>>> cache;
  for (const GKMEdge& e : g.edges) {
    auto it = cache.find(e.chr);
    if (it == cache.end()) it = cache.emplace(e.chr, detail::substitution_expansion(e.chr, table)).first;
    const auto& expansion = it->second;
    std::vector<std::vector<std::pair<int, long long>>> rows(M);
    for (int mi = 0; mi < M; ++mi) {
      for (const auto& [ti, c] : expansion[mi]) {
        rows[ti].emplace_back(col(e.a, mi), c);
        rows[ti].emplace_back(col(e.b, mi), -c);
      }
    }
    for (auto& row : rows)
      if (!row.empty()) sys.add_row(std::move(row));
  }

  for (const auto& [w1, w2] : invariance_gens) {
    std::vector<int> perm = apply_group_element(g, ctx.W, ctx.vs, ctx.rd, w1, w2);
    const int r = g.rank;
    std::vector<long long> A(static_cast<size_t>(2 * r) * (2 * r), 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        A[i * 2 * r + j] = ctx.W.mats[w1][i * r + j];
        A[(r + i) * 2 * r + (r + j)] = ctx.W.mats[w2][i * r + j];
      }
    auto T = detail::transform_expansion(A, table);
    for (size_t x = 0; x < g.verts.size(); ++x) {
      // row block: F_{g x}[m] - (g . F_x)[m] = 0
      std::vector<std::vector<std::pair<int, long long>>> rows(M);
      for (int mi = 0; mi < M; ++mi) rows[mi].emplace_back(col(perm[x], mi), 1);
      for (int mi = 0; mi < M; ++mi)
        for (const auto& [ti, c] : T[mi]) rows[ti].emplace_back(col(static_cast<int>(x), mi), -c);
      for (auto& row : rows)
        if (row.size() > 1 || (row.size() == 1 && row[0].second != 0)) sys.add_row(std::move(row));
    }
  }

  for (int v : vanish_vertices)
    for (int mi = 0; mi < M; ++mi) sys.add_row({{col(v, mi), 1}});

  return sys;
}

// ---------------------------------------------------------------------------
// Dimension queries
// ---------------------------------------------------------------------------

struct DimOutcome {
  long long dim = 0;
  ArithMode mode = ArithMode::exact;
  std::vector<std::uint64_t> primes;  // the agreeing pair in modular mode
};

// Exact rational nullity, or nullity modulo two independent random 31-bit
// primes with mandatory agreement. Disagreement draws fresh primes; repeated
// disagreement escalates to exact arithmetic.
inline DimOutcome solve_dimension(const IntRows& sys, ArithMode mode, std::mt19937_64& rng,
                                  long long group_order = 1) {
  if (mode == ArithMode::exact) return {nullity_exact(sys), ArithMode::exact, {}};
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::uint64_t p1 = random_31bit_prime(rng);
    std::uint64_t p2 = random_31bit_prime(rng);
    while (p2 == p1) p2 = random_31bit_prime(rng);
    if (group_order % static_cast<long long>(p1) == 0 ||
        group_order % static_cast<long long>(p2) == 0)
      throw invariant_error("modular prime divides the group order");
    long long n1 = nullity_mod(sys, p1);
    long long n2 = nullity_mod(sys, p2);
    if (n1 == n2) return {n1, ArithMode::modular, {p1, p2}};
  }
  return {nullity_exact(sys), ArithMode::exact, {}};
}

inline DimOutcome graded_dimension(const PPContext& ctx, int degree, ArithMode mode,
                                   std::mt19937_64& rng) {
  if (degree < 0) throw input_error("degree must be >= 0");
  MonoTable table = monomial_table(2 * ctx.g.rank, degree);
  IntRows sys = assemble_system(ctx, table);
  long long go = static_cast<long long>(ctx.W.size()) * ctx.W.size();
  return solve_dimension(sys, mode, rng, go);
}

inline std::vector<std::pair<int, int>> wxw_generators(const WeylGroup& W) {
  std::vector<std::pair<int, int>> gens;
  for (int s : W.simple) {
    gens.emplace_back(s, W.id);
    gens.emplace_back(W.id, s);
  }
  return gens;
}

inline std::vector<std::pair<int, int>> diag_generators(const WeylGroup& W) {
  std::vector<std::pair<int, int>> gens;
  for (int s : W.simple) gens.emplace_back(s, s);
  return gens;
}

inline DimOutcome invariant_graded_dimension(const PPContext& ctx,
                                             const std::vector<std::pair<int, int>>& gens,
                                             int degree, ArithMode mode, std::mt19937_64& rng) {
  if (degree < 0) throw input_error("degree must be >= 0");
  MonoTable table = monomial_table(2 * ctx.g.rank, degree);
  IntRows sys = assemble_system(ctx, table, gens);
  long long go = static_cast<long long>(ctx.W.size()) * ctx.W.size();
  return solve_dimension(sys, mode, rng, go);
}

// ---------------------------------------------------------------------------
// Hilbert profiles and Betti deconvolution
// ---------------------------------------------------------------------------

struct HilbertProfile {
  std::vector<long long> dims;  // dims[d] for 0 <= d <= D
  ArithMode mode = ArithMode::exact;
};

inline HilbertProfile hilbert_profile(const PPContext& ctx, int max_degree, ArithMode mode,
                                      std::mt19937_64& rng) {
  HilbertProfile hp;
  hp.mode = mode;
  for (int d = 0; d <= max_degree; ++d) {
    DimOutcome out = graded_dimension(ctx, d, mode, rng);
    if (out.mode == ArithMode::exact && mode == ArithMode::modular) hp.mode = ArithMode::exact;
    hp.dims.push_back(out.dim);
  }
  if (hp.dims[0] != ctx.g.components())
    throw invariant_error("degree-0 dimension " + std::to_string(hp.dims[0]) +
                          " != number of graph components " +
                          std::to_string(ctx.g.components()));
  return hp;
}

struct BettiResult {
  std::vector<long long> b;
  bool valid = true;
  std::vector<std::string> problems;
};

// b(t) = dims(t) * (1-t)^{2r}, truncated at the profile length. When the
// profile reaches dim X the result must be a nonnegative palindromic integer
// vector summing to |R_1|; violations are reported, not asserted.
inline BettiResult hilbert_deconvolution(const std::vector<long long>& dims, int r, int dim_x = -1,
                                         long long expected_r1 = -1) {
  BettiResult res;
  const int D = static_cast<int>(dims.size()) - 1;
  for (int k = 0; k <= D; ++k) {
    long long bk = 0;
    for (int j = 0; j <= std::min(k, 2 * r); ++j) {
      long long c = binomial(2 * r, j);
      bk += (j % 2 ? -c : c) * dims[k - j];
    }
    res.b.push_back(bk);
  }
  for (int k = 0; k <= D; ++k)
    if (res.b[k] < 0) {
      res.valid = false;
      res.problems.push_back("negative coefficient b[" + std::to_string(k) +
                             "] = " + std::to_string(res.b[k]));
    }
  if (dim_x >= 0 && D >= dim_x) {
    long long sum = 0;
    for (int k = 0; k <= dim_x; ++k) sum += res.b[k];
    if (expected_r1 >= 0 && sum != expected_r1) {
      res.valid = false;
      res.problems.push_back("sum of Betti numbers " + std::to_string(sum) +
                             " != |R_1| = " + std::to_string(expected_r1));
    }
    for (int k = 0; k <= dim_x; ++k)
      if (res.b[k] != res.b[dim_x - k]) {
        res.valid = false;
        res.problems.push_back("Betti vector is not palindromic at k=" + std::to_string(k));
        break;
      }
    for (int k = dim_x + 1; k <= D; ++k)
      if (res.b[k] != 0) {
        res.valid = false;
        res.problems.push_back("nonzero coefficient beyond dim X at k=" + std::to_string(k));
        break;
      }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Toric comparison
// ---------------------------------------------------------------------------

struct ToricCompareReport {
  std::vector<long long> dim_x, dim_y, kernel;
  std::vector<bool> injective, isomorphism;
  ArithMode mode = ArithMode::exact;
};

// Realizes the restriction of W x W-invariant classes on X to the diagonal
// fixed points of the toric part, degree by degree: kernel dimension decides
// injectivity, dimension comparison against the diag(W)-invariants of the
// Y-graph decides isomorphism.
inline ToricCompareReport toric_compare(const PPContext& ctx_x, const PPContext& ctx_y,
                                        int max_degree, ArithMode mode, std::mt19937_64& rng) {
  if (ctx_x.g.provenance != ctx_y.g.provenance || ctx_x.g.toric || !ctx_y.g.toric)
    throw input_error("toric comparison requires the X and Y graphs of one input");
  ToricCompareReport rep;
  rep.mode = mode;
  std::vector<int> diag;
  for (int o = 0; o < ctx_x.vs.orbit_count(); ++o)
    for (int a = 0; a < ctx_x.rd.cosets[o].count(); ++a) diag.push_back(ctx_x.rd.fp_id(o, a, a));
  auto gens_x = wxw_generators(ctx_x.W);
  auto gens_y = diag_generators(ctx_y.W);
  long long go = static_cast<long long>(ctx_x.W.size()) * ctx_x.W.size();
  for (int d = 0; d <= max_degree; ++d) {
    MonoTable table = monomial_table(2 * ctx_x.g.rank, d);
    DimOutcome dx = solve_dimension(assemble_system(ctx_x, table, gens_x), mode, rng, go);
    DimOutcome dy = solve_dimension(assemble_system(ctx_y, table, gens_y), mode, rng, go);
    DimOutcome dk = solve_dimension(assemble_system(ctx_x, table, gens_x, diag), mode, rng, go);
    if (dx.mode == ArithMode::exact && mode == ArithMode::modular) rep.mode = ArithMode::exact;
    rep.dim_x.push_back(dx.dim);
    rep.dim_y.push_back(dy.dim);
    rep.kernel.push_back(dk.dim);
    rep.injective.push_back(dk.dim == 0);
    rep.isomorphism.push_back(dk.dim == 0 && dx.dim == dy.dim);
  }
  return rep;
}

}  // namespace gkm
