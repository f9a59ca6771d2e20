#include <catch2/catch_amalgamated.hpp>

#include "gkm/polytope.hpp"

using namespace gkm;

namespace {

struct Setup {
  RootSystem rs;
  WeylGroup W;
  Setup(Family f, int n) : rs(build_root_system(f, n)), W(enumerate_weyl(rs)) {}
};

}  // namespace

TEST_CASE("LP convex hull membership on a square") {
  std::vector<IVec> sq = {{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  CHECK(in_convex_hull(sq, IVec{1, 1}));
  CHECK(in_convex_hull(sq, IVec{2, 2}));
  CHECK(!in_convex_hull(sq, IVec{3, 1}));
  CHECK(!in_convex_hull(sq, IVec{-1, 0}));
}

TEST_CASE("LP edge certificate on a square") {
  std::vector<IVec> sq = {{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  CHECK(edge_certificate(sq, 0, 1));
  CHECK(edge_certificate(sq, 0, 2));
  CHECK(!edge_certificate(sq, 0, 3));  // diagonal
  CHECK(!edge_certificate(sq, 1, 2));  // other diagonal
  // symmetry of the verdict in the endpoint order
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(edge_certificate(sq, i, j) == edge_certificate(sq, j, i));
}

TEST_CASE("rook segment: A1 orbit of e_1") {
  Setup s(Family::A, 1);
  VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{1, 0}});
  REQUIRE(vs.count() == 2);
  CHECK(vs.vertices[vs.dominant_vertex[0]] == IVec{1, 0});
  std::set<IVec> pts(vs.vertices.begin(), vs.vertices.end());
  CHECK(pts == std::set<IVec>{{1, 0}, {0, 1}});
  CHECK(edges(vs).size() == 1);
}

TEST_CASE("A2 simplex and hexagon") {
  Setup s(Family::A, 2);
  SECTION("simplex") {
    VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{1, 0, 0}});
    CHECK(vs.count() == 3);
    auto es = edges(vs);
    CHECK(es.size() == 3);
    auto rep = simplicity_check(vs, es);
    CHECK(rep.dim == 2);
    CHECK(rep.is_simple);
  }
  SECTION("hexagon") {
    VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{2, 1, 0}});
    CHECK(vs.count() == 6);
    auto es = edges(vs);
    CHECK(es.size() == 6);
    auto rep = simplicity_check(vs, es);
    CHECK(rep.dim == 2);
    CHECK(rep.is_simple);
    for (int d : rep.degree) CHECK(d == 2);
  }
}

TEST_CASE("octahedron: A3 orbit of (1,1,0,0) is not simple") {
  Setup s(Family::A, 3);
  VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{1, 1, 0, 0}});
  CHECK(vs.count() == 6);
  auto es = edges(vs);
  CHECK(es.size() == 12);
  auto rep = simplicity_check(vs, es);
  CHECK(rep.dim == 3);
  CHECK(!rep.is_simple);
  for (int d : rep.degree) CHECK(d == 4);
  // hypersimplex adjacency: edges are exactly the pairs at Hamming distance 2
  for (const PolyEdge& e : es) {
    int ham = 0;
    for (int i = 0; i < 4; ++i) ham += vs.vertices[e.v1][i] != vs.vertices[e.v2][i];
    CHECK(ham == 2);
  }
}

TEST_CASE("input validation") {
  Setup s(Family::A, 2);
  SECTION("non-dominant weight names the violated coroot") {
    CHECK_THROWS_WITH(orbit_polytope(s.rs, s.W, {IVec{0, 1, 0}}),
                      Catch::Matchers::ContainsSubstring("coroot #0"));
  }
  SECTION("mixed heights rejected by default") {
    CHECK_THROWS_AS(orbit_polytope(s.rs, s.W, {IVec{1, 0, 0}, IVec{2, 1, 1}}), input_error);
  }
  SECTION("swallowed orbit detected") {
    // (1,1,1) is the barycenter of the height-3 hexagon orbit of (2,1,0)
    CHECK_THROWS_WITH(orbit_polytope(s.rs, s.W, {IVec{2, 1, 0}, IVec{1, 1, 1}}),
                      Catch::Matchers::ContainsSubstring("swallowed"));
  }
  SECTION("duplicate weight rejected") {
    CHECK_THROWS_AS(orbit_polytope(s.rs, s.W, {IVec{1, 0, 0}, IVec{1, 0, 0}}), input_error);
  }
  SECTION("wrong dimension rejected") {
    CHECK_THROWS_AS(orbit_polytope(s.rs, s.W, {IVec{1, 0}}), input_error);
  }
}

TEST_CASE("two-orbit A1 input with explicit mixed-height opt-in") {
  Setup s(Family::A, 1);
  VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{1, 0}, IVec{2, 2}}, true);
  CHECK(vs.count() == 3);
  CHECK(vs.orbit_count() == 2);
  CHECK(!vs.common_height);
  auto es = edges(vs);
  CHECK(es.size() == 3);
}

TEST_CASE("B2 square orbit in the centrally extended lattice") {
  Setup s(Family::B, 2);
  VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{1, 0, 1}});
  CHECK(vs.count() == 4);
  auto es = edges(vs);
  CHECK(es.size() == 4);
  auto rep = simplicity_check(vs, es);
  CHECK(rep.dim == 2);
  CHECK(rep.is_simple);
}

TEST_CASE("W-equivariance of the edge set") {
  Setup s(Family::A, 2);
  VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{2, 1, 0}});
  auto es = edges(vs);
  std::set<std::pair<int, int>> edgeset;
  for (const PolyEdge& e : es) edgeset.insert({e.v1, e.v2});
  for (int w = 0; w < s.W.size(); ++w) {
    for (const PolyEdge& e : es) {
      int a = vs.action[w][e.v1], b = vs.action[w][e.v2];
      if (a > b) std::swap(a, b);
      CHECK(edgeset.count({a, b}) == 1);
      // mapped direction agrees up to sign
      IVec d = ivec_sub(vs.vertices[a], vs.vertices[b]);
      IVec wd = s.W.act(w, e.direction);
      CHECK((d == wd || d == ivec_neg(wd)));
    }
  }
}

TEST_CASE("single-vertex orbit (W-fixed weight)") {
  Setup s(Family::A, 1);
  VertexSet vs = orbit_polytope(s.rs, s.W, {IVec{1, 1}});
  CHECK(vs.count() == 1);
  CHECK(edges(vs).empty());
  auto rep = simplicity_check(vs, {});
  CHECK(rep.dim == 0);
  CHECK(rep.is_simple);
}
