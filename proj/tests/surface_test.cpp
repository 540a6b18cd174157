#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scc/config.hpp"
#include "scc/curve.hpp"
#include "scc/surface.hpp"

using namespace scc;

TEST_CASE("cell model basics") {
  for (int g = 2; g <= 6; ++g) {
    ChainSurface s(g);
    CHECK(s.num_vertices() == 2 * g + 2);
    CHECK(s.num_arcs() == 4 * g + 4);
    CHECK(s.num_faces() == 4);
    CHECK(s.euler_characteristic() == 2 - 2 * g);
    // every arc side appears exactly once among the face walks
    int total = 0;
    for (FaceId f = 0; f < s.num_faces(); ++f)
      total += static_cast<int>(s.face_walk(f).size());
    CHECK(total == 2 * s.num_arcs());
  }
  CHECK_THROWS_AS(ChainSurface(1), std::invalid_argument);
}

TEST_CASE("two-cell side labels") {
  ChainSurface s(3);
  // each face lies on one side of the even subchain and one of the odd;
  // faces adjacent across an even arc differ in even side only
  for (ArcId a = 0; a < s.num_arcs(); ++a) {
    FaceId f0 = s.face_fwd(a), f1 = s.face_rev(a);
    if (s.arc_curve(a) % 2 == 0) {
      CHECK(s.even_side(f0) != s.even_side(f1));
      CHECK(s.odd_side(f0) == s.odd_side(f1));
    } else {
      CHECK(s.even_side(f0) == s.even_side(f1));
      CHECK(s.odd_side(f0) != s.odd_side(f1));
    }
  }
}

TEST_CASE("model is deterministic") {
  ChainSurface a(4), b(4);
  for (FaceId f = 0; f < 4; ++f) {
    REQUIRE(a.face_walk(f).size() == b.face_walk(f).size());
    for (size_t i = 0; i < a.face_walk(f).size(); ++i) {
      CHECK(a.face_walk(f)[i].arc == b.face_walk(f)[i].arc);
      CHECK(a.face_walk(f)[i].forward == b.face_walk(f)[i].forward);
    }
  }
}

TEST_CASE("cellular symmetries") {
  for (int g : {3, 4}) {
    ChainSurface s(g);
    CellMap r = symmetry_r(s);
    CellMap sm = symmetry_s(s);
    CellMap io = symmetry_iota(s);
    int n = s.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
      CHECK(r.vertex_image(v) == s.mod(v + 1));
      CHECK(sm.vertex_image(v) == s.mod(-v - 3));
      CHECK(io.vertex_image(v) == v);
    }
  }
}

TEST_CASE("canonical chain curves validate") {
  for (int g : {2, 3, 4, 5}) {
    ChainSurface s(g);
    for (int k = 0; k < s.num_vertices(); ++k) {
      Curve c = Curve::chain_curve(s, k);
      CHECK(c.size() == 2);
      CHECK(c.rep_key(s) == Curve::chain_curve(s, k).rep_key(s));
    }
  }
}

TEST_CASE("chain intersection pattern via reduction") {
  ChainSurface s(3);
  int n = s.num_vertices();
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      Config cfg(s);
      int a = cfg.add_curve(Curve::chain_curve(s, j));
      int b = cfg.add_curve(Curve::chain_curve(s, k));
      cfg.reduce();
      int d = std::min((k - j + n) % n, (j - k + n) % n);
      int expected = d == 1 ? 1 : 0;
      CHECK(cfg.crossings_between(a, b) == expected);
    }
}
