#pragma once

// Root systems of classical type (plus G2) with exact integer-matrix Weyl
// actions on the character lattice.
//
// Lattice conventions: type A lives in the GL-style lattice Z^{n+1}
// (roots e_i - e_j, central direction (1,...,1)); families B, C, D and G2
// live in Z^{n+1} with an explicit central last coordinate on which all of
// W acts trivially. G2 uses simple-root-basis coordinates, where all
// coroots stay integral. Coroots are stored as covectors; the pairing is
// the plain integer dot product of a coroot covector with a weight.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

enum class Family { A, B, C, D, G2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2") return Family::G2;
  throw input_error("unknown root system family '" + s + "'");
}

struct RootSystem {
  Family family;
  int rank = 0;     // Coxeter rank n
  int ambient = 0;  // ambient lattice rank r (weights live in Z^ambient)
  std::vector<IVec> simple_roots;
  std::vector<IVec> simple_coroots;  // covectors
  std::vector<IVec> positive_roots;
  std::vector<IVec> positive_coroots;  // covector of positive_roots[k]
  IVec central;                        // W-fixed height covector

  long long pairing(const IVec& coroot, const IVec& weight) const {
    if (coroot.size() != weight.size()) throw input_error("pairing dimension mismatch");
    return ivec_dot(coroot, weight);
  }

  long long height(const IVec& weight) const { return ivec_dot(central, weight); }

  bool is_dominant(const IVec& weight) const {
    for (const IVec& cv : simple_coroots)
      if (pairing(cv, weight) < 0) return false;
    return true;
  }

  // index of the simple coroot violated by a non-dominant weight, or -1
  int violated_coroot(const IVec& weight) const {
    for (size_t i = 0; i < simple_coroots.size(); ++i)
      if (pairing(simple_coroots[i], weight) < 0) return static_cast<int>(i);
    return -1;
  }

  // reflection matrix of the root/coroot pair, as r x r row-major integers
  std::vector<long long> reflection_matrix(const IVec& root, const IVec& coroot) const {
    const int r = ambient;
    std::vector<long long> m(static_cast<size_t>(r) * r, 0);
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) m[k * r + j] = (k == j ? 1 : 0) - coroot[j] * root[k];
    return m;
  }
};

namespace detail {

inline IVec padded(IVec v, int len) {
  v.resize(len, 0);
  return v;
}

inline IVec mat_apply(const std::vector<long long>& m, const IVec& v) {
  const int r = static_cast<int>(v.size());
  IVec out(r, 0);
  for (int i = 0; i < r; ++i) {
    long long s = 0;
    for (int j = 0; j < r; ++j) s += m[i * r + j] * v[j];
    out[i] = s;
  }
  return out;
}

inline IVec covec_apply(const IVec& cv, const std::vector<long long>& m) {
  const int r = static_cast<int>(cv.size());
  IVec out(r, 0);
  for (int j = 0; j < r; ++j) {
    long long s = 0;
    for (int i = 0; i < r; ++i) s += cv[i] * m[i * r + j];
    out[j] = s;
  }
  return out;
}

inline std::vector<long long> mat_mul(const std::vector<long long>& a,
                                      const std::vector<long long>& b, int r) {
  std::vector<long long> c(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long long aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
    }
  return c;
}

inline long long classical_root_count(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<long long>(n) * (n + 1);
    case Family::B:
    case Family::C: return 2ll * n * n;
    case Family::D: return 2ll * n * (n - 1);
    case Family::G2: return 12;
  }
  return 0;
}

inline long long classical_weyl_order(Family f, int n) {
  auto fact = [](int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (1ll << n) * fact(n);
    case Family::D: return (1ll << (n - 1)) * fact(n);
    case Family::G2: return 12;
  }
  return 0;
}

}  // namespace detail

inline RootSystem build_root_system(Family family, int rank) {
  if (rank < 1) throw input_error("rank must be >= 1");
  if (family == Family::D && rank < 3) throw input_error("family D requires rank >= 3");
  if (family == Family::G2 && rank != 2) throw input_error("family G2 has rank 2");

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  const int n = rank;
  auto e = [](int i, int len) {
    IVec v(len, 0);
    v[i] = 1;
    return v;
  };

  int base = 0;  // lattice rank before central extension
  std::vector<std::pair<IVec, IVec>> simples;  // (root, coroot)
  switch (family) {
    case Family::A: {
      base = n + 1;
      for (int i = 0; i < n; ++i) {
        IVec a = ivec_sub(e(i, base), e(i + 1, base));
        simples.emplace_back(a, a);
      }
      break;
    }
    case Family::B: {
      base = n;
      for (int i = 0; i + 1 < n; ++i) {
        IVec a = ivec_sub(e(i, base), e(i + 1, base));
        simples.emplace_back(a, a);
      }
      IVec shrt = e(n - 1, base);
      IVec co = shrt;
      co[n - 1] = 2;
      simples.emplace_back(shrt, co);
      break;
    }
    case Family::C: {
      base = n;
      for (int i = 0; i + 1 < n; ++i) {
        IVec a = ivec_sub(e(i, base), e(i + 1, base));
        simples.emplace_back(a, a);
      }
      IVec lng = e(n - 1, base);
      lng[n - 1] = 2;
      simples.emplace_back(lng, e(n - 1, base));
      break;
    }
    case Family::D: {
      base = n;
      for (int i = 0; i + 1 < n; ++i) {
        IVec a = ivec_sub(e(i, base), e(i + 1, base));
        simples.emplace_back(a, a);
      }
      IVec a = ivec_add(e(n - 2, base), e(n - 1, base));
      simples.emplace_back(a, a);
      break;
    }
    case Family::G2: {
      // simple-root basis: alpha_1 short, alpha_2 long
      base = 2;
      simples.emplace_back(IVec{1, 0}, IVec{2, -3});
      simples.emplace_back(IVec{0, 1}, IVec{-1, 2});
      break;
    }
  }

  const bool extend = family != Family::A;
  rs.ambient = extend ? base + 1 : base;
  for (auto& [root, coroot] : simples) {
    rs.simple_roots.push_back(detail::padded(root, rs.ambient));
    rs.simple_coroots.push_back(detail::padded(coroot, rs.ambient));
  }
  if (family == Family::A) {
    rs.central = IVec(rs.ambient, 1);
  } else {
    rs.central = IVec(rs.ambient, 0);
    rs.central[rs.ambient - 1] = 1;
  }

  // Close the simple roots (with their coroots) under the simple reflections.
  std::vector<std::vector<long long>> refl;
  for (size_t i = 0; i < rs.simple_roots.size(); ++i)
    refl.push_back(rs.reflection_matrix(rs.simple_roots[i], rs.simple_coroots[i]));
  std::map<IVec, IVec> roots;  // root -> coroot
  std::vector<IVec> queue;
  for (size_t i = 0; i < rs.simple_roots.size(); ++i) {
    roots[rs.simple_roots[i]] = rs.simple_coroots[i];
    queue.push_back(rs.simple_roots[i]);
  }
  while (!queue.empty()) {
    IVec g = queue.back();
    queue.pop_back();
    IVec cg = roots.at(g);
    for (const auto& m : refl) {
      IVec g2 = detail::mat_apply(m, g);
      if (!roots.count(g2)) {
        roots[g2] = detail::covec_apply(cg, m);
        queue.push_back(g2);
      }
    }
  }

  // Positivity via a covector strictly positive on the simple roots.
  IVec pos_probe(rs.ambient, 0);
  if (family == Family::G2) {
    pos_probe[0] = 1;
    pos_probe[1] = 1;
  } else {
    for (int i = 0; i < base; ++i) pos_probe[i] = base - i;
  }
  for (const IVec& a : rs.simple_roots) {
    if (ivec_dot(pos_probe, a) <= 0) throw invariant_error("positivity probe failed");
  }
  for (const auto& [root, coroot] : roots) {
    if (ivec_dot(pos_probe, root) > 0) {
      rs.positive_roots.push_back(root);
      rs.positive_coroots.push_back(coroot);
    }
  }

  if (2 * static_cast<long long>(rs.positive_roots.size()) !=
      detail::classical_root_count(family, n))
    throw invariant_error("root count does not match the classical count for " +
                          family_name(family) + std::to_string(n));
  return rs;
}

// ---------------------------------------------------------------------------
// Weyl group as a fully enumerated matrix group
// ---------------------------------------------------------------------------

struct WeylGroup {
  int r = 0;                                    // ambient lattice rank
  std::vector<std::vector<long long>> mats;     // element matrices, row-major
  std::vector<std::vector<int>> words;          // one reduced word per element
  std::vector<int> simple;                      // element index of each s_i
  std::vector<int> refl_of_posroot;             // element index of s_alpha
  std::vector<std::vector<int>> mul;            // multiplication table
  std::vector<int> inv;
  int id = -1;

  int size() const { return static_cast<int>(mats.size()); }
  int length(int w) const { return static_cast<int>(words[w].size()); }

  IVec act(int w, const IVec& chi) const {
    if (static_cast<int>(chi.size()) != r) throw input_error("act: dimension mismatch");
    return detail::mat_apply(mats[w], chi);
  }

  int element_of(const std::vector<long long>& mat) const {
    auto it = index_.find(mat);
    if (it == index_.end()) throw invariant_error("matrix is not a Weyl group element");
    return it->second;
  }

  // canonical order on elements: shortest word first, matrix-lex tie-break
  bool canon_less(int a, int b) const {
    if (length(a) != length(b)) return length(a) < length(b);
    return mats[a] < mats[b];
  }

  std::map<std::vector<long long>, int> index_;
};

// Breadth-first closure over the simple reflections; the resulting element
// list is sorted lexicographically on matrices, so downstream enumerations
// are reproducible.
inline WeylGroup enumerate_weyl(const RootSystem& rs) {
  WeylGroup W;
  W.r = rs.ambient;
  const int r = W.r;
  std::vector<long long> idmat(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) idmat[i * r + i] = 1;
  std::vector<std::vector<long long>> gens;
  for (size_t i = 0; i < rs.simple_roots.size(); ++i)
    gens.push_back(rs.reflection_matrix(rs.simple_roots[i], rs.simple_coroots[i]));

  std::map<std::vector<long long>, std::vector<int>> found;
  found[idmat] = {};
  std::vector<std::vector<long long>> frontier{idmat};
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& m : frontier) {
      const std::vector<int>& word = found.at(m);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        auto m2 = detail::mat_mul(m, gens[gi], r);
        if (!found.count(m2)) {
          std::vector<int> w2 = word;
          w2.push_back(static_cast<int>(gi));
          found[m2] = std::move(w2);
          next.push_back(std::move(m2));
        }
      }
    }
    frontier = std::move(next);
  }

  for (auto& [mat, word] : found) {
    W.index_[mat] = static_cast<int>(W.mats.size());
    W.mats.push_back(mat);
    W.words.push_back(word);
  }
  if (W.size() != detail::classical_weyl_order(rs.family, rs.rank))
    throw invariant_error("Weyl group order does not match the classical order");

  W.id = W.element_of(idmat);
  for (const auto& g : gens) W.simple.push_back(W.element_of(g));
  for (size_t k = 0; k < rs.positive_roots.size(); ++k)
    W.refl_of_posroot.push_back(
        W.element_of(rs.reflection_matrix(rs.positive_roots[k], rs.positive_coroots[k])));

  const int N = W.size();
  W.mul.assign(N, std::vector<int>(N));
  W.inv.assign(N, -1);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      int c = W.element_of(detail::mat_mul(W.mats[a], W.mats[b], r));
      W.mul[a][b] = c;
      if (c == W.id) W.inv[a] = b;
    }
  }
  return W;
}

// ---------------------------------------------------------------------------
// Orbits, stabilizers and canonical cosets
// ---------------------------------------------------------------------------

struct CosetDecomposition {
  std::vector<int> stabilizer;       // element indices, sorted
  std::vector<int> coset_rep;       // canonical representative per coset
  std::vector<IVec> coset_image;    // act(rep, mu), one point per coset
  std::map<IVec, int> image_index;  // orbit point -> coset id

  int count() const { return static_cast<int>(coset_rep.size()); }
};

// Cosets of W / Stab(mu) with canonical minimal-length representatives
// (shortest word, matrix-lex tie-break). Coset order follows the same rule.
inline CosetDecomposition cosets_and_stabilizers(const RootSystem& rs, const WeylGroup& W,
                                                 const IVec& mu) {
  if (static_cast<int>(mu.size()) != rs.ambient) throw input_error("weight dimension mismatch");
  CosetDecomposition cd;
  std::map<IVec, int> best;  // orbit point -> best element so far
  for (int w = 0; w < W.size(); ++w) {
    IVec img = W.act(w, mu);
    auto it = best.find(img);
    if (it == best.end() || W.canon_less(w, it->second)) best.insert_or_assign(img, w);
    if (img == mu) cd.stabilizer.push_back(w);
  }
  std::sort(cd.stabilizer.begin(), cd.stabilizer.end());
  std::vector<std::pair<int, IVec>> reps;
  reps.reserve(best.size());
  for (auto& [img, w] : best) reps.emplace_back(w, img);
  std::sort(reps.begin(), reps.end(),
            [&](const auto& a, const auto& b) { return W.canon_less(a.first, b.first); });
  for (auto& [w, img] : reps) {
    cd.image_index[img] = cd.count();
    cd.coset_rep.push_back(w);
    cd.coset_image.push_back(img);
  }
  if (static_cast<long long>(cd.count()) * static_cast<long long>(cd.stabilizer.size()) !=
      static_cast<long long>(W.size()))
    throw invariant_error("orbit-stabilizer count mismatch");
  return cd;
}

}  // namespace gkm
