#include <catch2/catch_amalgamated.hpp>

#include "gkm/root_system.hpp"

using namespace gkm;

TEST_CASE("root counts match the classical tables") {
  CHECK(build_root_system(Family::A, 1).positive_roots.size() == 1);
  CHECK(build_root_system(Family::A, 2).positive_roots.size() == 3);
  CHECK(build_root_system(Family::B, 2).positive_roots.size() == 4);
  CHECK(build_root_system(Family::C, 3).positive_roots.size() == 9);
  CHECK(build_root_system(Family::D, 3).positive_roots.size() == 6);
  CHECK(build_root_system(Family::G2, 2).positive_roots.size() == 6);
}

TEST_CASE("A1 roots are +-(1,-1) in the GL lattice") {
  RootSystem rs = build_root_system(Family::A, 1);
  REQUIRE(rs.ambient == 2);
  REQUIRE(rs.positive_roots.size() == 1);
  CHECK(rs.positive_roots[0] == IVec{1, -1});
}

TEST_CASE("invalid family/rank combinations are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), input_error);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), input_error);
  CHECK_THROWS_AS(build_root_system(Family::G2, 3), input_error);
}

TEST_CASE("pairing of simple coroots against simple roots is the Cartan matrix") {
  auto check_cartan = [](Family f, int n, const std::vector<std::vector<long long>>& expect) {
    RootSystem rs = build_root_system(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(rs.pairing(rs.simple_coroots[i], rs.simple_roots[j]) == expect[i][j]);
  };
  check_cartan(Family::A, 2, {{2, -1}, {-1, 2}});
  check_cartan(Family::B, 2, {{2, -1}, {-2, 2}});
  check_cartan(Family::C, 2, {{2, -2}, {-1, 2}});
  check_cartan(Family::G2, 2, {{2, -3}, {-1, 2}});
  check_cartan(Family::D, 3, {{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}});
}

TEST_CASE("reflections permute the root set") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}, {Family::G2, 2}}) {
    RootSystem rs = build_root_system(f, n);
    std::set<IVec> phi;
    for (const IVec& a : rs.positive_roots) {
      phi.insert(a);
      phi.insert(ivec_neg(a));
    }
    for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
      auto m = rs.reflection_matrix(rs.positive_roots[k], rs.positive_coroots[k]);
      for (const IVec& a : phi) CHECK(phi.count(detail::mat_apply(m, a)) == 1);
    }
  }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::D, 3}}) {
    RootSystem rs = build_root_system(f, n);
    std::set<IVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    for (size_t i = 0; i < rs.simple_roots.size(); ++i) {
      auto m = rs.reflection_matrix(rs.simple_roots[i], rs.simple_coroots[i]);
      for (const IVec& a : rs.positive_roots) {
        if (a == rs.simple_roots[i]) continue;
        CHECK(pos.count(detail::mat_apply(m, a)) == 1);
      }
    }
  }
}

TEST_CASE("Weyl group orders are classical") {
  auto order = [](Family f, int n) {
    RootSystem rs = build_root_system(f, n);
    return enumerate_weyl(rs).size();
  };
  CHECK(order(Family::A, 1) == 2);
  CHECK(order(Family::A, 2) == 6);
  CHECK(order(Family::B, 2) == 8);
  CHECK(order(Family::C, 3) == 48);
  CHECK(order(Family::D, 3) == 24);
  CHECK(order(Family::G2, 2) == 12);
}

TEST_CASE("act is a left action and fixes the pairing") {
  RootSystem rs = build_root_system(Family::B, 2);
  WeylGroup W = enumerate_weyl(rs);
  IVec chi{3, -1, 2};
  CHECK(W.act(W.id, chi) == chi);
  for (int a = 0; a < W.size(); ++a)
    for (int b = 0; b < W.size(); ++b)
      CHECK(W.act(W.mul[a][b], chi) == W.act(a, W.act(b, chi)));
  // reflections negate their root
  for (size_t k = 0; k < rs.positive_roots.size(); ++k)
    CHECK(W.act(W.refl_of_posroot[k], rs.positive_roots[k]) ==
          ivec_neg(rs.positive_roots[k]));
}

TEST_CASE("act is additive in the weight") {
  RootSystem rs = build_root_system(Family::A, 2);
  WeylGroup W = enumerate_weyl(rs);
  IVec a{1, 2, -1}, b{0, 3, 4};
  for (int w = 0; w < W.size(); ++w)
    CHECK(W.act(w, ivec_add(a, b)) == ivec_add(W.act(w, a), W.act(w, b)));
}

TEST_CASE("A2 simple reflection moves the first fundamental weight") {
  RootSystem rs = build_root_system(Family::A, 2);
  WeylGroup W = enumerate_weyl(rs);
  CHECK(W.act(W.simple[0], IVec{1, 0, 0}) == IVec{0, 1, 0});
}

TEST_CASE("cosets and stabilizers") {
  RootSystem rs = build_root_system(Family::A, 2);
  WeylGroup W = enumerate_weyl(rs);

  SECTION("orbit of e_1 under S_3") {
    CosetDecomposition cd = cosets_and_stabilizers(rs, W, IVec{1, 0, 0});
    CHECK(cd.count() == 3);
    CHECK(cd.stabilizer.size() == 2);
  }
  SECTION("zero weight is W-fixed") {
    CosetDecomposition cd = cosets_and_stabilizers(rs, W, IVec{0, 0, 0});
    CHECK(cd.count() == 1);
    CHECK(cd.stabilizer.size() == 6);
  }
  SECTION("regular weight has free orbit") {
    CosetDecomposition cd = cosets_and_stabilizers(rs, W, IVec{2, 1, 0});
    CHECK(cd.count() == 6);
    CHECK(cd.stabilizer.size() == 1);
  }
  SECTION("orbit-stabilizer identity on assorted weights") {
    for (IVec mu : {IVec{1, 1, 0}, IVec{5, 5, 5}, IVec{3, 1, 0}, IVec{2, 2, 1}}) {
      CosetDecomposition cd = cosets_and_stabilizers(rs, W, mu);
      CHECK(cd.count() * cd.stabilizer.size() == static_cast<size_t>(W.size()));
    }
  }
}

TEST_CASE("coset representatives are canonical and deterministic") {
  RootSystem rs = build_root_system(Family::B, 2);
  WeylGroup W = enumerate_weyl(rs);
  IVec mu{1, 0, 1};
  CosetDecomposition cd1 = cosets_and_stabilizers(rs, W, mu);
  CosetDecomposition cd2 = cosets_and_stabilizers(rs, W, mu);
  CHECK(cd1.coset_rep == cd2.coset_rep);
  // each representative has minimal length in its coset
  for (int c = 0; c < cd1.count(); ++c) {
    for (int w = 0; w < W.size(); ++w) {
      if (W.act(w, mu) == cd1.coset_image[c]) CHECK(!W.canon_less(w, cd1.coset_rep[c]));
    }
  }
}

TEST_CASE("act rejects dimension mismatches") {
  RootSystem rs = build_root_system(Family::A, 2);
  WeylGroup W = enumerate_weyl(rs);
  CHECK_THROWS_AS(W.act(W.id, IVec{1, 0}), input_error);
  CHECK_THROWS_AS(rs.pairing(IVec{1, 0}, IVec{1, 0, 0}), input_error);
}

TEST_CASE("sign normalization is idempotent") {
  for (IVec v : {IVec{0, -2, 1}, IVec{3, -1, 0}, IVec{0, 0, 0}, IVec{-1, -1, -1}}) {
    IVec once = sign_normalize(v);
    CHECK(sign_normalize(once) == once);
    if (!ivec_is_zero(v)) {
      bool positive_lead = false;
      for (long long x : once) {
        if (x != 0) {
          positive_lead = x > 0;
          break;
        }
      }
      CHECK(positive_lead);
    }
  }
}
