#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scc/engine.hpp"

using namespace scc;

namespace {

std::vector<Curve> chain(const ChainSurface& s, int from, int len) {
  std::vector<Curve> out;
  for (int i = 0; i < len; ++i) out.push_back(Curve::chain_curve(s, from + i));
  return out;
}

Curve bdN1(const ChainSurface& s, const std::vector<Curve>& u) {
  auto b = neighborhood_boundary(s, u);
  REQUIRE(b.size() == 1);
  REQUIRE(!b[0].null_homotopic);
  return b[0].curve;
}

}  // namespace

TEST_CASE("chain pattern for g in 3..6") {
  for (int g = 3; g <= 6; ++g) {
    ChainSurface s(g);
    int n = 2 * g + 2;
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        int d = std::min((k - j + n) % n, (j - k + n) % n);
        int expect = d == 1 ? 1 : 0;
        CHECK(geometric_intersection(s, Curve::chain_curve(s, j),
                                     Curve::chain_curve(s, k)) == expect);
      }
  }
}

TEST_CASE("self copies and isotopy basics") {
  ChainSurface s(3);
  Curve c0 = Curve::chain_curve(s, 0);
  CHECK(geometric_intersection(s, c0, c0) == 0);
  CHECK(is_isotopic(s, c0, c0));
  CHECK(!is_isotopic(s, c0, Curve::chain_curve(s, 2)));
  CHECK(is_essential(s, c0));
  CHECK(!is_separating(s, c0));
}

TEST_CASE("cut along a nonseparating curve") {
  ChainSurface s(4);
  auto pieces = cut_along(s, {Curve::chain_curve(s, 0)});
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].genus == 3);
  CHECK(pieces[0].boundary_count == 2);
}

TEST_CASE("neighborhood boundary of a single curve") {
  ChainSurface s(3);
  Curve c0 = Curve::chain_curve(s, 0);
  auto b = neighborhood_boundary(s, {c0});
  REQUIRE(b.size() == 2);
  for (const auto& bc : b) {
    CHECK(!bc.null_homotopic);
    CHECK(is_isotopic(s, bc.curve, c0));
    CHECK(geometric_intersection(s, bc.curve, c0) == 0);
  }
}

TEST_CASE("2-chain boundary is a genus-1 separating curve") {
  for (int g : {3, 4}) {
    ChainSurface s(g);
    Curve sep = bdN1(s, chain(s, 0, 2));
    CHECK(is_separating(s, sep));
    auto [h1, h2] = separating_genus(s, sep);
    CHECK(h1 == 1);
    CHECK(h2 == g - 1);
    CHECK(geometric_intersection(s, sep, Curve::chain_curve(s, 0)) == 0);
    CHECK(geometric_intersection(s, sep, Curve::chain_curve(s, 1)) == 0);
    CHECK(geometric_intersection(s, sep, Curve::chain_curve(s, 2)) != 0);
  }
}

TEST_CASE("3-chain boundary is a bounding pair") {
  ChainSurface s(4);
  auto b = neighborhood_boundary(s, chain(s, 0, 3));
  REQUIRE(b.size() == 2);
  CHECK(!b[0].null_homotopic);
  CHECK(!b[1].null_homotopic);
  CHECK(geometric_intersection(s, b[0].curve, b[1].curve) == 0);
  CHECK(!is_isotopic(s, b[0].curve, b[1].curve));
  CHECK(!is_separating(s, b[0].curve));
  // the union separates: cutting along both gives two pieces
  auto pieces = cut_along(s, {b[0].curve, b[1].curve});
  CHECK(pieces.size() == 2);
}

TEST_CASE("even length 2g chain boundary is null-homotopic at genus g") {
  ChainSurface s(3);
  auto b = neighborhood_boundary(s, chain(s, 0, 6));
  REQUIRE(b.size() == 1);
  CHECK(b[0].null_homotopic);
}

TEST_CASE("the full closed chain fills") {
  for (int g : {3, 4}) {
    ChainSurface s(g);
    CHECK(fills(s, chain(s, 0, 2 * g + 2)));
    CHECK(!fills(s, {Curve::chain_curve(s, 0)}));
  }
}

TEST_CASE("even and odd subchains cut into two planar pieces") {
  for (int g : {3, 4, 5, 6}) {
    ChainSurface s(g);
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<Curve> sub;
      for (int k = parity; k < 2 * g + 2; k += 2)
        sub.push_back(Curve::chain_curve(s, k));
      auto pieces = cut_along(s, sub);
      REQUIRE(pieces.size() == 2);
      for (const auto& p : pieces) {
        CHECK(p.genus == 0);
        CHECK(p.boundary_count == g + 1);
      }
    }
  }
}

TEST_CASE("sides of a separating curve") {
  ChainSurface s(4);
  Curve sep = bdN1(s, chain(s, 0, 2));
  CHECK(same_side(s, sep, Curve::chain_curve(s, 0), Curve::chain_curve(s, 1)));
  CHECK(!same_side(s, sep, Curve::chain_curve(s, 0), Curve::chain_curve(s, 4)));
  CHECK_THROWS(same_side(s, sep, Curve::chain_curve(s, 2),
                         Curve::chain_curve(s, 4)));
}

TEST_CASE("sharing pair from a 3-chain spine") {
  ChainSurface s(4);
  Curve a = bdN1(s, chain(s, 0, 2));
  Curve b = bdN1(s, chain(s, 1, 2));
  CHECK(is_sharing_pair(s, a, b));
  Curve y = shared_curve(s, a, b);
  CHECK(is_isotopic(s, y, Curve::chain_curve(s, 1)));
  // two disjoint genus-1 curves are not a sharing pair
  Curve c = bdN1(s, chain(s, 4, 2));
  CHECK(geometric_intersection(s, a, c) == 0);
  CHECK(!is_sharing_pair(s, a, c));
  CHECK_THROWS(shared_curve(s, a, c));
}

TEST_CASE("intersection is symmetric and isotopy invariant here") {
  ChainSurface s(3);
  Curve a = bdN1(s, chain(s, 0, 2));
  Curve b = bdN1(s, chain(s, 1, 2));
  int ab = geometric_intersection(s, a, b);
  CHECK(ab == geometric_intersection(s, b, a));
  CHECK(ab > 0);
  // replace a by a parallel copy produced from its own neighborhood
  auto par = neighborhood_boundary(s, {a});
  REQUIRE(par.size() == 2);
  CHECK(geometric_intersection(s, par[0].curve, b) == ab);
}
