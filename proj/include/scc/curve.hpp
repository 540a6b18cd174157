#pragma once
// Transverse combinatorial representation of an embedded closed curve: the
// cyclic sequence of its crossings with the one-skeleton (one chord per
// visited face between consecutive crossings) plus, per arc, the order of its
// crossing slots along the arc.  Curves never meet zero-cells and cross each
// arc transversally.

#include <map>
#include <string>
#include <vector>

#include "scc/surface.hpp"

namespace scc {

struct CurveStep {
  ArcId arc = -1;
  FaceId into = -1;  // face entered after the crossing
  bool operator==(const CurveStep&) const = default;
};

class Curve {
 public:
  Curve() = default;

  // A curve crossing the skeleton; slot orders give each step's position
  // along its arc (start to end).
  Curve(const ChainSurface& s, std::vector<CurveStep> steps,
        std::map<ArcId, std::vector<int>> slots);

  // Degenerate curve contained in one face (null-homotopic).
  static Curve trivial_in_face(const ChainSurface& s, FaceId f);

  bool is_trivial() const { return steps_.empty(); }
  FaceId home_face() const { return home_face_; }
  int size() const { return static_cast<int>(steps_.size()); }
  const std::vector<CurveStep>& steps() const { return steps_; }
  const std::map<ArcId, std::vector<int>>& slots() const { return slots_; }
  FaceId face_before(int i) const;  // face the curve leaves when making step i

  // Removes trivial returns (chord returning across the same arc at adjacent
  // slots) until none remain.
  Curve normalized(const ChainSurface& s) const;

  // Representation key: minimal cyclic shift over both directions.  Equal
  // keys mean identical transverse representations (not isotopy classes).
  std::string rep_key(const ChainSurface& s) const;

  static Curve chain_curve(const ChainSurface& s, int k);

  void validate(const ChainSurface& s) const;

 private:
  std::vector<CurveStep> steps_;
  std::map<ArcId, std::vector<int>> slots_;
  FaceId home_face_ = -1;
};

}  // namespace scc
