#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scc/families.hpp"

using namespace scc;

TEST_CASE("genus 3 vertex census") {
  Workspace ws(3, 2);
  const NamedCurveSet& xs = ws.set(SetKind::Xs);
  int n_sep = 0, n_u = 0;
  for (const CurveName& nm : xs.names) {
    if (nm.family == CurveName::Family::Sep) ++n_sep;
    if (nm.family == CurveName::Family::GenusOne) ++n_u;
  }
  CHECK(xs.size() == 24);
  CHECK(n_sep == 8);
  CHECK(n_u == 16);
  // every S class has the form s_{i,i+1}
  for (const CurveName& nm : xs.names)
    if (nm.family == CurveName::Family::Sep) CHECK(nm.J.len == 2);
}

TEST_CASE("genus 3 alias identities") {
  Workspace ws(3, 2);
  ws.set(SetKind::Xs);
  int n = ws.n();
  // s_[j,j+3] = s_{j+5,j+6}
  auto canon = [&](const CurveName& raw) -> CurveName {
    for (const auto& [from, to] : ws.aliases())
      if (from == raw) return to;
    return raw;
  };
  for (int j = 0; j < n; ++j) {
    CurveName raw = CurveName::sep({j, 4});
    CurveName expect = CurveName::sep({(j + 5) % n, 2});
    CHECK(canon(raw) == canon(expect));
  }
  // b_{i+1,i+2,i+3}^pm = b_{i-3,i-2,i-1}^pm with matching signs
  for (int i = 0; i < n; ++i)
    for (int sg : {+1, -1}) {
      CurveName a = CurveName::bp({(i + 1) % n, 3}, sg);
      CurveName b = CurveName::bp({(i + 5) % n, 3}, sg);
      CHECK(canon(a) == canon(b));
    }
}

TEST_CASE("chain family size") {
  Workspace ws(4, 2);
  const NamedCurveSet& y = ws.set(SetKind::Y);
  int n_chain = 0;
  for (const CurveName& nm : y.names)
    if (nm.family == CurveName::Family::Chain) ++n_chain;
  CHECK(n_chain == 10);
}
