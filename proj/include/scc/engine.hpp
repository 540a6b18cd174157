#pragma once
// Exact curve operations: geometric intersection via bigon reduction,
// isotopy (annulus criterion), cuts and genus/side queries, fill tests,
// regular-neighborhood boundaries, and the definition-level sharing pair.

#include <optional>
#include <utility>
#include <vector>

#include "scc/config.hpp"
#include "scc/curve.hpp"
#include "scc/surface.hpp"

namespace scc {

struct CutPiece {
  int genus = 0;
  int boundary_count = 0;
  int euler = 0;
  bool disk = false;
  bool annulus = false;
  // (index into the wall list, side) for each boundary cycle class
  std::vector<std::pair<int, int>> boundary_sides;
};

int geometric_intersection(const ChainSurface& s, const Curve& a, const Curve& b);
bool is_isotopic(const ChainSurface& s, const Curve& a, const Curve& b);
bool is_essential(const ChainSurface& s, const Curve& a);

// Cuts along pairwise-disjoint walls; optional passengers (disjoint from all
// walls) are located: passenger_piece[i] = index into the returned pieces.
std::vector<CutPiece> cut_along(const ChainSurface& s,
                                const std::vector<Curve>& walls,
                                const std::vector<Curve>& passengers = {},
                                std::vector<int>* passenger_piece = nullptr);

bool is_separating(const ChainSurface& s, const Curve& a);
std::pair<int, int> separating_genus(const ChainSurface& s, const Curve& a);
int side_of(const ChainSurface& s, const Curve& sep, const Curve& a);
bool same_side(const ChainSurface& s, const Curve& sep, const Curve& a,
               const Curve& b);

bool fills(const ChainSurface& s, const std::vector<Curve>& curves);

struct BoundaryComponent {
  Curve curve;
  bool null_homotopic = false;
};
// Boundary of a regular neighborhood of a connected union of curves in
// minimal position.  Inessential components are flagged, not dropped.
std::vector<BoundaryComponent> neighborhood_boundary(
    const ChainSurface& s, const std::vector<Curve>& curves);

bool is_sharing_pair(const ChainSurface& s, const Curve& a, const Curve& b);
Curve shared_curve(const ChainSurface& s, const Curve& a, const Curve& b);

// Image of a curve under a cellular automorphism.
Curve transport(const CellMap& m, const Curve& c);

}  // namespace scc
