#pragma once
// Combinatorial cell model of the closed oriented genus-g surface carrying the
// closed chain c_0,...,c_{2g+1}.  The model is the branched double cover of the
// sphere over 2g+2 equatorial points: vertices are the chain crossings
// x_k = c_k . c_{k+1}, each chain curve contributes two arcs (the two lifts of
// an equatorial arc), and the four faces are the lifts of the two hemispheres.
// Face walks, side labels and corner tables are *traced* from the rotation
// system, never hard-coded; construction asserts the Euler characteristic.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scc {

using ArcId = int;
using VertexId = int;
using FaceId = int;

struct CheckError : std::logic_error {
  using std::logic_error::logic_error;
};

// Internal invariant check; throws instead of aborting so tests can observe.
#define SCC_CHECK(cond, msg)                                     \
  do {                                                           \
    if (!(cond)) throw ::scc::CheckError(std::string("check failed: ") + (msg)); \
  } while (0)

// Incidence of one arc end at a vertex.
struct DartRef {
  ArcId arc = -1;
  bool at_end = false;  // true: the arc's end vertex, false: its start vertex
  bool operator==(const DartRef&) const = default;
};

struct FaceStep {
  ArcId arc = -1;
  bool forward = true;  // walk traverses the arc start->end
};

class ChainSurface {
 public:
  explicit ChainSurface(int genus);

  int genus() const { return genus_; }
  int num_vertices() const { return n_; }           // 2g+2
  int num_arcs() const { return 2 * n_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int euler_characteristic() const { return n_ - 2 * n_ + num_faces(); }

  // Arc (k, lift): the lift-th copy of the arc of chain curve k running from
  // x_{k-1} to x_k.
  ArcId arc_id(int k, int lift) const { return 2 * mod(k) + lift; }
  int arc_curve(ArcId a) const { return a / 2; }     // chain index k
  int arc_lift(ArcId a) const { return a % 2; }
  VertexId arc_start(ArcId a) const { return mod(arc_curve(a) - 1); }
  VertexId arc_end(ArcId a) const { return arc_curve(a); }

  const std::array<DartRef, 4>& rotation(VertexId v) const { return rotation_[v]; }
  const std::vector<FaceStep>& face_walk(FaceId f) const { return faces_[f]; }

  // The two distinct faces flanking an arc: side 0 is the face whose walk
  // traverses the arc forward.
  FaceId face_fwd(ArcId a) const { return arc_face_[a][0]; }
  FaceId face_rev(ArcId a) const { return arc_face_[a][1]; }
  FaceId other_face(ArcId a, FaceId f) const {
    SCC_CHECK(f == arc_face_[a][0] || f == arc_face_[a][1], "face not on arc");
    return f == arc_face_[a][0] ? arc_face_[a][1] : arc_face_[a][0];
  }
  int arc_side_in(ArcId a, FaceId f) const {  // 0 = forward side
    SCC_CHECK(f == arc_face_[a][0] || f == arc_face_[a][1], "face not on arc");
    return f == arc_face_[a][0] ? 0 : 1;
  }

  // Position of the (unique) side of arc a inside face f's walk.
  int walk_index(FaceId f, ArcId a) const;
  bool walk_forward(FaceId f, ArcId a) const;

  // Face of the corner between rotation[v][i] (incoming) and rotation[v][i+1]
  // (outgoing) in the face tracing.
  FaceId corner_face(VertexId v, int gap) const { return corner_face_[v][gap]; }

  // Which side of the even (resp. odd) subchain complement a face lies in.
  int even_side(FaceId f) const { return even_side_[f]; }
  int odd_side(FaceId f) const { return odd_side_[f]; }

  int mod(int k) const { return ((k % n_) + n_) % n_; }

 private:
  void trace_faces();
  void label_sides();

  int genus_;
  int n_;  // 2g+2
  std::vector<std::array<DartRef, 4>> rotation_;
  std::vector<std::vector<FaceStep>> faces_;
  std::vector<std::array<FaceId, 2>> arc_face_;
  std::vector<std::array<FaceId, 4>> corner_face_;
  std::vector<std::vector<int>> walk_index_;    // [face][arc] -> position or -1
  std::vector<std::vector<char>> walk_fwd_;
  std::vector<int> even_side_, odd_side_;
};

// A cellular automorphism of the chain surface: vertex/arc/face permutation
// with per-arc direction flags.  Constructed from a seed dart image by
// propagating through the rotation system; construction verifies consistency.
class CellMap {
 public:
  // Seed: the image of the forward dart of arc 0 (= A_0^0 traversed
  // start->end), given as (arc, forward).  orientation=+1 propagates rotations
  // in the same cyclic direction.
  CellMap(const ChainSurface& s, ArcId seed_arc_image, bool seed_forward,
          int orientation);

  ArcId arc_image(ArcId a) const { return arc_img_[a]; }
  bool arc_keeps_direction(ArcId a) const { return arc_fwd_[a]; }
  VertexId vertex_image(VertexId v) const { return vert_img_[v]; }
  FaceId face_image(FaceId f) const { return face_img_[f]; }
  int orientation() const { return orient_; }
  const ChainSurface& surface() const { return *s_; }

 private:
  const ChainSurface* s_;
  int orient_;
  std::vector<ArcId> arc_img_;
  std::vector<char> arc_fwd_;
  std::vector<VertexId> vert_img_;
  std::vector<FaceId> face_img_;
};

// The three model symmetries acting on the chain: r(c_i) = c_{i+1},
// s(c_i) = c_{-i-2}, and the hyperelliptic involution fixing each c_i.
CellMap symmetry_r(const ChainSurface& s);
CellMap symmetry_s(const ChainSurface& s);
CellMap symmetry_iota(const ChainSurface& s);

}  // namespace scc
