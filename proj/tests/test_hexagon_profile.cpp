// The deep hexagon run: Hilbert profile of the A_2 regular-orbit embedding
// through the full cohomological range, in two-prime modular arithmetic.
// Slow (about two minutes); kept in its own binary so ctest can overlap it.

#include <catch2/catch_amalgamated.hpp>

#include "gkm/pipeline.hpp"
#include "gkm/ppring.hpp"

using namespace gkm;

TEST_CASE("hexagon Hilbert profile to degree 8 deconvolves cleanly") {
  Pipeline p = build_pipeline(Family::A, 2, {IVec{2, 1, 0}});
  std::mt19937_64 rng(424242);
  PPContext ctx{p.x_graph, p.W, p.vs, p.rd};
  HilbertProfile hp = hilbert_profile(ctx, 8, ArithMode::modular, rng);
  REQUIRE(hp.dims.size() == 9);
  CHECK(hp.dims[0] == 1);

  BettiResult br = hilbert_deconvolution(hp.dims, p.rs.ambient, p.x_graph.dim, p.rd.fp_count());
  INFO("dims: " << [&] {
    std::string s;
    for (auto d : hp.dims) s += std::to_string(d) + " ";
    return s;
  }());
  INFO("betti: " << [&] {
    std::string s;
    for (auto b : br.b) s += std::to_string(b) + " ";
    return s;
  }());
  for (const auto& prob : br.problems) INFO(prob);
  CHECK(br.valid);
  long long sum = 0;
  for (long long b : br.b) sum += b;
  CHECK(sum == 36);
  // palindromy across dim X = 8 is part of br.valid; spot-check the ends
  CHECK(br.b.front() == 1);
  CHECK(br.b[8] == 1);
}
