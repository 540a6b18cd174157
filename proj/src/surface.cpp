#include "scc/surface.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace scc {

namespace {

// Directed arc encoding: 2*arc + (0 forward, 1 backward).
int dart(ArcId a, bool forward) { return 2 * a + (forward ? 0 : 1); }
ArcId dart_arc(int d) { return d / 2; }
bool dart_forward(int d) { return d % 2 == 0; }
int dart_reverse(int d) { return d ^ 1; }

}  // namespace

ChainSurface::ChainSurface(int genus) : genus_(genus), n_(2 * genus + 2) {
  if (genus < 2) throw std::invalid_argument("chain surface needs genus >= 2");

  // Rotation at x_k, counterclockwise: the strands of c_k and c_{k+1}
  // alternate (transverse crossing).  Lifts are labeled so the hemisphere
  // walks close up; this is validated below by the Euler characteristic.
  rotation_.resize(n_);
  for (int k = 0; k < n_; ++k) {
    rotation_[k] = {DartRef{arc_id(k, 0), true}, DartRef{arc_id(k + 1, 0), false},
                    DartRef{arc_id(k, 1), true}, DartRef{arc_id(k + 1, 1), false}};
  }
  trace_faces();
  SCC_CHECK(euler_characteristic() == 2 - 2 * genus_, "Euler characteristic");
  label_sides();
}

void ChainSurface::trace_faces() {
  const int darts = 4 * n_;  // directed arcs
  std::vector<int> face_of(darts, -1);
  arc_face_.assign(2 * n_, {-1, -1});
  corner_face_.assign(n_, {-1, -1, -1, -1});

  auto rotation_index = [&](VertexId v, const DartRef& d) {
    for (int i = 0; i < 4; ++i)
      if (rotation_[v][i] == d) return i;
    SCC_CHECK(false, "dart not in rotation");
    return -1;
  };

  for (int d0 = 0; d0 < darts; ++d0) {
    if (face_of[d0] != -1) continue;
    FaceId f = static_cast<FaceId>(faces_.size());
    faces_.emplace_back();
    int d = d0;
    do {
      SCC_CHECK(face_of[d] == -1, "face tracing revisits a directed arc");
      face_of[d] = f;
      ArcId a = dart_arc(d);
      bool fwd = dart_forward(d);
      faces_[f].push_back(FaceStep{a, fwd});
      arc_face_[a][fwd ? 0 : 1] = f;
      VertexId v = fwd ? arc_end(a) : arc_start(a);
      int i = rotation_index(v, DartRef{a, fwd});
      corner_face_[v][i] = f;
      DartRef out = rotation_[v][(i + 1) % 4];
      d = dart(out.arc, !out.at_end);
    } while (d != d0);
  }

  for (ArcId a = 0; a < 2 * n_; ++a) {
    SCC_CHECK(arc_face_[a][0] != -1 && arc_face_[a][1] != -1, "arc missing a side");
    SCC_CHECK(arc_face_[a][0] != arc_face_[a][1], "arc with equal sides");
  }

  walk_index_.assign(faces_.size(), std::vector<int>(2 * n_, -1));
  walk_fwd_.assign(faces_.size(), std::vector<char>(2 * n_, 0));
  for (FaceId f = 0; f < num_faces(); ++f) {
    for (int i = 0; i < static_cast<int>(faces_[f].size()); ++i) {
      ArcId a = faces_[f][i].arc;
      SCC_CHECK(walk_index_[f][a] == -1, "arc twice in one face walk");
      walk_index_[f][a] = i;
      walk_fwd_[f][a] = faces_[f][i].forward ? 1 : 0;
    }
  }
}

int ChainSurface::walk_index(FaceId f, ArcId a) const {
  int i = walk_index_[f][a];
  SCC_CHECK(i >= 0, "arc not in face walk");
  return i;
}

bool ChainSurface::walk_forward(FaceId f, ArcId a) const {
  SCC_CHECK(walk_index_[f][a] >= 0, "arc not in face walk");
  return walk_fwd_[f][a] != 0;
}

void ChainSurface::label_sides() {
  // Components of the face-adjacency graph gluing only across arcs of the
  // opposite-parity curves = sides of the even (resp. odd) subchain.
  auto components = [&](int glue_parity) {
    std::vector<int> comp(num_faces(), -1);
    int next = 0;
    for (FaceId f0 = 0; f0 < num_faces(); ++f0) {
      if (comp[f0] != -1) continue;
      std::vector<FaceId> stack{f0};
      comp[f0] = next;
      while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (const FaceStep& st : faces_[f]) {
          if (arc_curve(st.arc) % 2 != glue_parity) continue;
          FaceId g = other_face(st.arc, f);
          if (comp[g] == -1) {
            comp[g] = next;
            stack.push_back(g);
          }
        }
      }
      ++next;
    }
    SCC_CHECK(next == 2, "subchain cut must have two sides");
    return comp;
  };
  even_side_ = components(1);  // cut along even curves, glue across odd arcs
  odd_side_ = components(0);
}

// ---------------------------------------------------------------------------

CellMap::CellMap(const ChainSurface& s, ArcId seed_arc_image, bool seed_forward,
                 int orientation)
    : s_(&s), orient_(orientation) {
  const int n = s.num_vertices();
  const int darts = 4 * n;

  auto rotation_index = [&](VertexId v, const DartRef& d) {
    for (int i = 0; i < 4; ++i)
      if (s.rotation(v)[i] == d) return i;
    SCC_CHECK(false, "dart not in rotation");
    return -1;
  };
  // sigma: next directed arc out of the same tail vertex, counterclockwise.
  auto sigma = [&](int d, int dir) {
    ArcId a = dart_arc(d);
    bool fwd = dart_forward(d);
    VertexId tail = fwd ? s.arc_start(a) : s.arc_end(a);
    int i = rotation_index(tail, DartRef{a, !fwd});
    DartRef nx = s.rotation(tail)[(i + dir + 4) % 4];
    return dart(nx.arc, !nx.at_end);
  };

  std::vector<int> img(darts, -1);
  img[dart(0, true)] = dart(seed_arc_image, seed_forward);
  std::vector<int> stack{dart(0, true)};
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    int e = img[d];
    auto assign = [&](int from, int to) {
      if (img[from] == -1) {
        img[from] = to;
        stack.push_back(from);
      } else {
        SCC_CHECK(img[from] == to, "cell map propagation inconsistent");
      }
    };
    assign(dart_reverse(d), dart_reverse(e));
    assign(sigma(d, 1), sigma(e, orient_));
  }

  std::vector<int> seen(darts, 0);
  for (int d = 0; d < darts; ++d) {
    SCC_CHECK(img[d] != -1, "cell map propagation incomplete");
    SCC_CHECK(!seen[img[d]], "cell map not a bijection");
    seen[img[d]] = 1;
    SCC_CHECK(img[dart_reverse(d)] == dart_reverse(img[d]), "cell map vs reversal");
    SCC_CHECK(img[sigma(d, 1)] == sigma(img[d], orient_), "cell map vs rotation");
  }

  arc_img_.assign(2 * n, -1);
  arc_fwd_.assign(2 * n, 1);
  for (ArcId a = 0; a < 2 * n; ++a) {
    int e = img[dart(a, true)];
    arc_img_[a] = dart_arc(e);
    arc_fwd_[a] = dart_forward(e) ? 1 : 0;
  }
  vert_img_.assign(n, -1);
  for (ArcId a = 0; a < 2 * n; ++a) {
    VertexId u = s.arc_start(a);
    VertexId iu = arc_fwd_[a] ? s.arc_start(arc_img_[a]) : s.arc_end(arc_img_[a]);
    if (vert_img_[u] == -1) vert_img_[u] = iu;
    SCC_CHECK(vert_img_[u] == iu, "vertex image inconsistent");
  }
  face_img_.assign(s.num_faces(), -1);
  for (ArcId a = 0; a < 2 * n; ++a) {
    for (int side = 0; side < 2; ++side) {
      FaceId f = side == 0 ? s.face_fwd(a) : s.face_rev(a);
      bool fwd = (side == 0) == (arc_fwd_[a] != 0);
      FaceId g;
      if (orient_ == 1)
        g = fwd ? s.face_fwd(arc_img_[a]) : s.face_rev(arc_img_[a]);
      else
        g = fwd ? s.face_rev(arc_img_[a]) : s.face_fwd(arc_img_[a]);
      if (face_img_[f] == -1) face_img_[f] = g;
      SCC_CHECK(face_img_[f] == g, "face image inconsistent");
    }
  }
}

namespace {

std::optional<CellMap> try_cell_map(const ChainSurface& s, ArcId arc, bool fwd,
                                    int orient) {
  try {
    return CellMap(s, arc, fwd, orient);
  } catch (const CheckError&) {
    return std::nullopt;
  }
}

CellMap find_map(const ChainSurface& s, int target_curve_of_arc0, bool expect_forward,
                 const char* what) {
  for (int lift = 0; lift < 2; ++lift) {
    for (int orient : {1, -1}) {
      auto m = try_cell_map(s, s.arc_id(target_curve_of_arc0, lift), expect_forward,
                            orient);
      if (m) return *m;
    }
  }
  throw CheckError(std::string("no consistent cell map for ") + what);
}

}  // namespace

CellMap symmetry_r(const ChainSurface& s) {
  CellMap m = find_map(s, 1, true, "r");
  for (ArcId a = 0; a < s.num_arcs(); ++a)
    SCC_CHECK(s.arc_curve(m.arc_image(a)) == s.mod(s.arc_curve(a) + 1), "r action");
  return m;
}

CellMap symmetry_s(const ChainSurface& s) {
  // s(c_0) = c_{-2}; the image arc runs backward (s(x_{-1}) = x_{-2}).
  CellMap m = find_map(s, s.mod(-2), false, "s");
  for (ArcId a = 0; a < s.num_arcs(); ++a)
    SCC_CHECK(s.arc_curve(m.arc_image(a)) == s.mod(-s.arc_curve(a) - 2), "s action");
  return m;
}

CellMap symmetry_iota(const ChainSurface& s) {
  CellMap m(s, s.arc_id(0, 1), true, 1);
  for (ArcId a = 0; a < s.num_arcs(); ++a) {
    SCC_CHECK(s.arc_curve(m.arc_image(a)) == s.arc_curve(a), "iota fixes chain curves");
    SCC_CHECK(s.arc_lift(m.arc_image(a)) != s.arc_lift(a), "iota swaps lifts");
  }
  return m;
}

}  // namespace scc
