#include "scc/engine.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>

namespace scc {

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

int geometric_intersection(const ChainSurface& s, const Curve& a, const Curve& b) {
  if (a.is_trivial() || b.is_trivial()) return 0;
  Config cfg(s);
  int ia = cfg.add_curve(a);
  int ib = cfg.add_curve(b);
  cfg.reduce();
  return cfg.crossings_between(ia, ib);
}

bool is_isotopic(const ChainSurface& s, const Curve& a, const Curve& b) {
  if (a.is_trivial() || b.is_trivial()) return a.is_trivial() && b.is_trivial();
  Config cfg(s);
  cfg.add_curve(a);
  cfg.add_curve(b);
  cfg.reduce();
  if (cfg.crossings_between(0, 1) != 0) return false;
  auto an = cfg.analyze({0, 1});
  for (const auto& p : an->pieces) {
    if (!p.annulus || p.sides.size() != 2) continue;
    if (p.sides[0].first == 0 && p.sides[1].first == 1) return true;
  }
  return false;
}

bool is_essential(const ChainSurface& s, const Curve& a) {
  if (a.is_trivial()) return false;
  Config cfg(s);
  cfg.add_curve(a);
  cfg.reduce();
  auto an = cfg.analyze({0});
  for (const auto& p : an->pieces)
    if (p.disk) return false;
  return true;
}

std::vector<CutPiece> cut_along(const ChainSurface& s,
                                const std::vector<Curve>& walls,
                                const std::vector<Curve>& passengers,
                                std::vector<int>* passenger_piece) {
  SCC_CHECK(!walls.empty(), "cut_along needs at least one curve");
  Config cfg(s);
  for (const Curve& w : walls) cfg.add_curve(w);
  for (const Curve& p : passengers) cfg.add_curve(p);
  cfg.reduce();
  int W = static_cast<int>(walls.size());
  for (int i = 0; i < W; ++i)
    for (int j = i + 1; j < W; ++j)
      if (cfg.crossings_between(i, j) != 0)
        throw std::invalid_argument("cut_along: curves are not pairwise disjoint");
  for (int i = 0; i < W; ++i)
    for (int j = W; j < cfg.num_curves(); ++j)
      if (cfg.crossings_between(i, j) != 0)
        throw std::invalid_argument("cut_along: passenger crosses a cut curve");
  auto an = cfg.analyze(iota_vec(W));
  std::vector<CutPiece> out;
  for (const auto& p : an->pieces) {
    CutPiece cp;
    cp.genus = p.genus;
    cp.boundary_count = p.n_cycles;
    cp.euler = p.euler;
    cp.disk = p.disk;
    cp.annulus = p.annulus;
    cp.boundary_sides = p.sides;
    out.push_back(std::move(cp));
  }
  if (passenger_piece) {
    passenger_piece->clear();
    for (int j = W; j < cfg.num_curves(); ++j)
      passenger_piece->push_back(an->piece_of_curve[j]);
  }
  return out;
}

bool is_separating(const ChainSurface& s, const Curve& a) {
  SCC_CHECK(is_essential(s, a), "is_separating: curve is not essential");
  return cut_along(s, {a}).size() == 2;
}

std::pair<int, int> separating_genus(const ChainSurface& s, const Curve& a) {
  SCC_CHECK(is_essential(s, a), "separating_genus: curve is not essential");
  auto pieces = cut_along(s, {a});
  SCC_CHECK(pieces.size() == 2, "separating_genus: curve does not separate");
  int h1 = pieces[0].genus, h2 = pieces[1].genus;
  if (h1 > h2) std::swap(h1, h2);
  SCC_CHECK(h1 + h2 == s.genus(), "separating genus sum");
  return {h1, h2};
}

int side_of(const ChainSurface& s, const Curve& sep, const Curve& a) {
  std::vector<int> loc;
  cut_along(s, {sep}, {a}, &loc);
  return loc[0];
}

bool same_side(const ChainSurface& s, const Curve& sep, const Curve& a,
               const Curve& b) {
  std::vector<int> loc;
  auto pieces = cut_along(s, {sep}, {a, b}, &loc);
  SCC_CHECK(pieces.size() == 2, "same_side: cut curve does not separate");
  return loc[0] == loc[1];
}

bool fills(const ChainSurface& s, const std::vector<Curve>& curves) {
  SCC_CHECK(!curves.empty(), "fills needs at least one curve");
  Config cfg(s);
  for (const Curve& c : curves) cfg.add_curve(c);
  cfg.reduce();
  auto an = cfg.analyze(iota_vec(cfg.num_curves()));
  for (const auto& p : an->pieces)
    if (!p.disk) return false;
  return true;
}

std::vector<BoundaryComponent> neighborhood_boundary(
    const ChainSurface& s, const std::vector<Curve>& curves) {
  SCC_CHECK(!curves.empty(), "neighborhood of an empty union");
  Config cfg(s);
  for (const Curve& c : curves) cfg.add_curve(c);
  cfg.reduce();

  int n = cfg.num_curves();
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cfg.crossings_between(i, j) > 0) comp[find(i)] = find(j);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0))
      throw std::invalid_argument("neighborhood_boundary: union is disconnected");

  auto an = cfg.analyze(iota_vec(n));
  std::vector<BoundaryComponent> out;
  for (int c = 0; c < static_cast<int>(an->cycles.size()); ++c) {
    BoundaryComponent bc;
    bc.curve = cfg.push_off(*an, c);
    bc.null_homotopic = an->pieces[an->cycles[c].piece].disk;
    out.push_back(std::move(bc));
  }
  return out;
}

namespace {

struct SharingData {
  bool ok = false;          // both separating genus 1
  bool sharing = false;
  int annulus_piece = -1;   // in the {a,b}-walls analysis
  std::shared_ptr<Config::Analysis> an_ab;
  std::unique_ptr<Config> cfg;
};

SharingData sharing_analysis(const ChainSurface& s, const Curve& a, const Curve& b) {
  SharingData out;
  SCC_CHECK(!a.is_trivial() && !b.is_trivial(), "sharing pair needs essential curves");
  out.cfg = std::make_unique<Config>(s);
  Config& cfg = *out.cfg;
  cfg.add_curve(a);
  cfg.add_curve(b);
  cfg.reduce();
  auto an_a = cfg.analyze({0});
  auto an_b = cfg.analyze({1});
  auto genus1_piece = [&](const Config::Analysis& an) {
    if (an.pieces.size() != 2) return -1;
    for (int p = 0; p < 2; ++p)
      if (an.pieces[p].genus == 1 && an.pieces[p].n_cycles == 1) return p;
    return -1;
  };
  int g1a = genus1_piece(*an_a), g1b = genus1_piece(*an_b);
  if (g1a < 0 || g1b < 0) return out;
  out.ok = true;

  out.an_ab = cfg.analyze({0, 1});
  const auto& ab = *out.an_ab;
  std::vector<int> inin, outout;
  for (int p = 0; p < static_cast<int>(ab.pieces.size()); ++p) {
    int sub = ab.rep_subface[p];
    bool in_a = an_a->piece_of_subface[sub] == g1a;
    bool in_b = an_b->piece_of_subface[sub] == g1b;
    if (in_a && in_b) inin.push_back(p);
    if (!in_a && !in_b) outout.push_back(p);
  }
  if (inin.size() == 1 && ab.pieces[inin[0]].annulus && outout.size() == 1) {
    out.sharing = true;
    out.annulus_piece = inin[0];
  }
  return out;
}

}  // namespace

bool is_sharing_pair(const ChainSurface& s, const Curve& a, const Curve& b) {
  return sharing_analysis(s, a, b).sharing;
}

Curve shared_curve(const ChainSurface& s, const Curve& a, const Curve& b) {
  SharingData sd = sharing_analysis(s, a, b);
  if (!sd.sharing)
    throw std::invalid_argument("shared_curve: not a sharing pair");
  for (int c = 0; c < static_cast<int>(sd.an_ab->cycles.size()); ++c)
    if (sd.an_ab->cycles[c].piece == sd.annulus_piece)
      return sd.cfg->push_off(*sd.an_ab, c);
  throw CheckError("annulus piece without cycle");
}

Curve transport(const CellMap& m, const Curve& c) {
  const ChainSurface& s = m.surface();
  if (c.is_trivial())
    return Curve::trivial_in_face(s, m.face_image(c.home_face()));
  std::vector<CurveStep> steps;
  steps.reserve(c.size());
  for (const CurveStep& st : c.steps())
    steps.push_back(CurveStep{m.arc_image(st.arc), m.face_image(st.into)});
  std::map<ArcId, std::vector<int>> slots;
  for (const auto& [arc, list] : c.slots()) {
    std::vector<int> img = list;
    if (!m.arc_keeps_direction(arc)) std::reverse(img.begin(), img.end());
    slots[m.arc_image(arc)] = std::move(img);
  }
  return Curve(s, std::move(steps), std::move(slots));
}

}  // namespace scc
