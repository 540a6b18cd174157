#pragma once
// Overlay of several transverse curves on a chain surface.  Keeps merged slot
// orders per arc, computes chord crossings inside each face (straight chords
// between boundary points of the face polygon, exact integer predicates),
// reduces to minimal position by removing empty bigons and trivial returns,
// and traces the complement subdivision for cut/region/genus queries.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "scc/curve.hpp"
#include "scc/surface.hpp"

namespace scc {

struct SlotRef {
  int curve = -1;
  int step = -1;
  bool operator==(const SlotRef&) const = default;
};

class Config {
 public:
  explicit Config(const ChainSurface& s);
  ~Config();
  Config(Config&&) noexcept;

  // Appends the curve; its slots are placed after all existing slots on each
  // arc (canonical initial interleaving; reduction restores minimality).
  int add_curve(const Curve& c);

  int num_curves() const { return static_cast<int>(curves_.size()); }
  const ChainSurface& surface() const { return *s_; }

  // Iterated empty-bigon and trivial-return removal; afterwards every pair of
  // curves is in minimal position (bigon criterion).
  void reduce();

  // Number of reduction steps performed by the last reduce() and the sequence
  // of total crossing counts it went through (for monotonicity checks).
  const std::vector<int>& reduction_trace() const { return reduction_trace_; }

  int crossings_between(int p, int q);
  int total_crossings();

  Curve extract(int p) const;

  // Region analysis relative to a wall subset.  Pieces are the components of
  // the complement of the wall curves; non-wall curves ride inside pieces.
  struct Piece {
    int euler = 0;
    int n_cycles = 0;
    int genus = 0;
    bool disk = false;
    bool annulus = false;
    std::vector<std::pair<int, int>> sides;  // sorted (curve, side) on boundary
  };
  struct Analysis;
  std::shared_ptr<Analysis> analyze(const std::vector<int>& walls);

  // Push-off of one boundary cycle of an analysis into its piece; returns a
  // standalone normalized curve parallel to the cycle.
  Curve push_off(const Analysis& an, int cycle);

  struct Analysis {
    std::vector<Piece> pieces;
    std::vector<int> piece_of_curve;  // -1 for wall curves
    struct CycleStep {                // one wall chord-piece side along a cycle
      int curve;
      int step;        // chord index on that curve
      bool forward;    // traversed in the curve's own direction
      int seg;         // piece index along the chord
    };
    struct Cycle {
      int piece;
      std::vector<CycleStep> steps;
    };
    std::vector<Cycle> cycles;
    std::vector<char> is_wall;
    // global subface ids are stable across analyses of an unmodified config
    std::vector<int> piece_of_subface;
    std::vector<int> rep_subface;  // piece -> a representative subface
    std::vector<int> piece_of_vertex;  // zero-cells lie inside pieces
  };

 private:
  struct FaceData;

  const std::vector<CurveStep>& steps(int c) const { return curves_[c]; }
  FaceId face_before(int c, int i) const;
  int next_step(int c, int i) const { return (i + 1) % static_cast<int>(curves_[c].size()); }
  int prev_step(int c, int i) const {
    int m = static_cast<int>(curves_[c].size());
    return (i - 1 + m) % m;
  }
  int slot_pos(int c, int i) const;  // position in its arc's merged order

  FaceData& face_data(FaceId f);
  void dirty_all();
  void dirty_face(FaceId f);
  void dirty_steps(const std::vector<CurveStep>& steps);

  bool remove_one_trivial_return();
  bool remove_one_bigon();

  const ChainSurface* s_;
  std::vector<std::vector<CurveStep>> curves_;
  std::vector<std::vector<SlotRef>> arc_slots_;  // per arc, in arc order
  std::vector<std::unique_ptr<FaceData>> faces_;
  std::vector<int> reduction_trace_;

  friend struct ConfigTestAccess;
};

}  // namespace scc
