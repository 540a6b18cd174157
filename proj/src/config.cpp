#include "scc/config.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace scc {

namespace {

// ---------------------------------------------------------------------------
// Exact predicates for straight chords between boundary points of a face
// polygon.  Boundary points sit on a rational parametrization of a circle
// (t -> (1-t^2, 2t, 1+t^2) homogeneous), so no three are collinear and all
// crossing-order predicates reduce to integer signs.

struct DegenerateGeometry {};

struct Big {
  int sign = 0;
  std::array<uint64_t, 7> m{};

  static Big from_i64(long long v) {
    Big b;
    if (v == 0) return b;
    b.sign = v > 0 ? 1 : -1;
    unsigned long long a = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ULL - static_cast<unsigned long long>(v);
    b.m[0] = a;
    return b;
  }
  static int cmp_mag(const Big& a, const Big& b) {
    for (int i = 6; i >= 0; --i) {
      if (a.m[i] != b.m[i]) return a.m[i] < b.m[i] ? -1 : 1;
    }
    return 0;
  }
  static Big add_mag(const Big& a, const Big& b, int sign) {
    Big r;
    r.sign = sign;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 7; ++i) {
      unsigned __int128 s = (unsigned __int128)a.m[i] + b.m[i] + carry;
      r.m[i] = static_cast<uint64_t>(s);
      carry = s >> 64;
    }
    SCC_CHECK(carry == 0, "bigint overflow");
    return r;
  }
  static Big sub_mag(const Big& a, const Big& b, int sign) {  // |a| >= |b|
    Big r;
    r.sign = sign;
    unsigned __int128 borrow = 0;
    for (int i = 0; i < 7; ++i) {
      unsigned __int128 d = (unsigned __int128)a.m[i] - b.m[i] - borrow;
      r.m[i] = static_cast<uint64_t>(d);
      borrow = (d >> 64) ? 1 : 0;
    }
    bool zero = true;
    for (int i = 0; i < 7; ++i) zero = zero && r.m[i] == 0;
    if (zero) r.sign = 0;
    return r;
  }
  friend Big operator+(const Big& a, const Big& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.sign == b.sign) return add_mag(a, b, a.sign);
    int c = cmp_mag(a, b);
    if (c == 0) return Big{};
    return c > 0 ? sub_mag(a, b, a.sign) : sub_mag(b, a, b.sign);
  }
  friend Big operator-(const Big& a, const Big& b) {
    Big nb = b;
    nb.sign = -nb.sign;
    return a + nb;
  }
  friend Big operator*(const Big& a, const Big& b) {
    Big r;
    if (a.sign == 0 || b.sign == 0) return r;
    std::array<uint64_t, 8> out{};
    for (int i = 0; i < 7; ++i) {
      if (a.m[i] == 0) continue;
      unsigned __int128 carry = 0;
      for (int j = 0; j < 7; ++j) {
        if (i + j >= 8) {
          SCC_CHECK(b.m[j] == 0 && carry == 0, "bigint mul overflow");
          continue;
        }
        unsigned __int128 cur =
            (unsigned __int128)a.m[i] * b.m[j] + out[i + j] + carry;
        out[i + j] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
      }
      if (carry != 0) {
        SCC_CHECK(i + 7 < 8, "bigint mul overflow");
        unsigned __int128 cur = (unsigned __int128)out[i + 7] + carry;
        out[i + 7] = static_cast<uint64_t>(cur);
        SCC_CHECK((cur >> 64) == 0, "bigint mul overflow");
      }
    }
    SCC_CHECK(out[7] == 0, "bigint mul overflow");
    r.sign = a.sign * b.sign;
    bool zero = true;
    for (int i = 0; i < 7; ++i) {
      r.m[i] = out[i];
      zero = zero && out[i] == 0;
    }
    if (zero) r.sign = 0;
    return r;
  }
};

struct Big3 {
  Big x, y, z;
};

Big3 cross3(const Big3& a, const Big3& b) {
  return Big3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
              a.x * b.y - a.y * b.x};
}
Big dot3(const Big3& a, const Big3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

Big3 circle_point(int ordinal, int seed) {
  long long jit = static_cast<long long>(mix64(ordinal * 1315423911ULL + seed) & 63);
  long long t = static_cast<long long>(ordinal + 1) * 64 + jit;
  return Big3{Big::from_i64(1 - t * t), Big::from_i64(2 * t),
              Big::from_i64(1 + t * t)};
}

}  // namespace

// ---------------------------------------------------------------------------

struct Config::FaceData {
  FaceId f = -1;
  bool built = false;

  struct Feature {
    bool is_slot = false;
    VertexId corner = -1;  // for corner features
    SlotRef slot;          // for slot features
    ArcId arc = -1;        // arc carrying this feature's walk edge
  };
  std::vector<Feature> features;
  std::map<std::pair<int, int>, int> slot_feature;  // (curve,step) -> feature
  // walk edge -> (index of its corner feature, number of slot features)
  std::vector<std::pair<int, int>> walk_edge;

  struct Chord {
    int curve = -1, step = -1;
    int fs = -1, fe = -1;       // feature indices of endpoints
    std::vector<int> xs;        // crossing ids ordered from fs
  };
  std::vector<Chord> chords;
  std::map<std::pair<int, int>, int> chord_of;  // (curve, step) -> chord id

  struct Crossing {
    int ca = -1, cb = -1;   // chord ids
    int pa = -1, pb = -1;   // position within each chord's xs
  };
  std::vector<Crossing> crossings;

  // DCEL.  Boundary dart i runs feature i -> i+1; chord darts follow.
  int n_boundary = 0;
  struct CDart {
    int chord = -1, seg = -1;
    bool fwd = true;
  };
  std::vector<CDart> cdarts;             // indexed by dart - n_boundary
  std::vector<int> cdart_base;           // chord -> first dart id
  std::vector<int> dnext;
  std::vector<int> subface;
  int n_subfaces = 0;

  int num_darts() const { return n_boundary + static_cast<int>(cdarts.size()); }
  bool is_boundary_dart(int d) const { return d < n_boundary; }
  int cdart_id(int chord, int seg, bool fwd) const {
    return n_boundary + cdart_base[chord] + 2 * seg + (fwd ? 0 : 1);
  }
};

Config::Config(const ChainSurface& s) : s_(&s) {
  arc_slots_.resize(s.num_arcs());
  faces_.resize(s.num_faces());
}

Config::~Config() = default;
Config::Config(Config&&) noexcept = default;

FaceId Config::face_before(int c, int i) const {
  const CurveStep& st = curves_[c][i];
  return s_->other_face(st.arc, st.into);
}

int Config::slot_pos(int c, int i) const {
  const auto& v = arc_slots_[curves_[c][i].arc];
  for (int p = 0; p < static_cast<int>(v.size()); ++p)
    if (v[p].curve == c && v[p].step == i) return p;
  SCC_CHECK(false, "slot not found");
  return -1;
}

int Config::add_curve(const Curve& c) {
  SCC_CHECK(!c.is_trivial(), "cannot overlay a trivial curve");
  int id = num_curves();
  curves_.push_back(c.steps());
  for (const auto& [arc, list] : c.slots())
    for (int idx : list) arc_slots_[arc].push_back(SlotRef{id, idx});
  dirty_all();
  return id;
}

void Config::dirty_all() {
  for (auto& p : faces_)
    if (p) p->built = false;
}
void Config::dirty_face(FaceId f) {
  if (faces_[f]) faces_[f]->built = false;
}
void Config::dirty_steps(const std::vector<CurveStep>& steps) {
  // Any face whose walk carries one of these arcs caches (curve, step)
  // references that a renumbering invalidates.
  for (const CurveStep& st : steps) {
    dirty_face(s_->face_fwd(st.arc));
    dirty_face(s_->face_rev(st.arc));
  }
}

// ---------------------------------------------------------------------------
// Face build: features, chords, crossings, crossing orders, subface tracing.

Config::FaceData& Config::face_data(FaceId f) {
  if (!faces_[f]) faces_[f] = std::make_unique<FaceData>();
  FaceData& fd = *faces_[f];
  if (fd.built) return fd;

  fd = FaceData{};
  fd.f = f;
  const auto& walk = s_->face_walk(f);

  for (int w = 0; w < static_cast<int>(walk.size()); ++w) {
    ArcId a = walk[w].arc;
    bool fwd = walk[w].forward;
    FaceData::Feature corner;
    corner.is_slot = false;
    corner.corner = fwd ? s_->arc_start(a) : s_->arc_end(a);
    corner.arc = a;
    int base = static_cast<int>(fd.features.size());
    fd.features.push_back(corner);
    const auto& slots = arc_slots_[a];
    int m = static_cast<int>(slots.size());
    for (int j = 0; j < m; ++j) {
      const SlotRef& sr = slots[fwd ? j : m - 1 - j];
      FaceData::Feature sf;
      sf.is_slot = true;
      sf.slot = sr;
      sf.arc = a;
      fd.slot_feature[{sr.curve, sr.step}] = static_cast<int>(fd.features.size());
      fd.features.push_back(sf);
    }
    fd.walk_edge.push_back({base, m});
  }

  for (int c = 0; c < num_curves(); ++c) {
    int m = static_cast<int>(curves_[c].size());
    for (int i = 0; i < m; ++i) {
      if (curves_[c][i].into != f) continue;
      FaceData::Chord ch;
      ch.curve = c;
      ch.step = i;
      ch.fs = fd.slot_feature.at({c, i});
      ch.fe = fd.slot_feature.at({c, next_step(c, i)});
      fd.chord_of[{c, i}] = static_cast<int>(fd.chords.size());
      fd.chords.push_back(ch);
    }
  }

  // crossings = interleaved chord pairs
  const int F = static_cast<int>(fd.features.size());
  auto inside = [&](int x, int lo, int hi) {
    if (lo < hi) return lo < x && x < hi;
    return x > lo || x < hi;
  };
  for (int p = 0; p < static_cast<int>(fd.chords.size()); ++p)
    for (int q = p + 1; q < static_cast<int>(fd.chords.size()); ++q) {
      bool i1 = inside(fd.chords[q].fs, fd.chords[p].fs, fd.chords[p].fe);
      bool i2 = inside(fd.chords[q].fe, fd.chords[p].fs, fd.chords[p].fe);
      if (i1 != i2) {
        fd.crossings.push_back(FaceData::Crossing{p, q, -1, -1});
        fd.chords[p].xs.push_back(static_cast<int>(fd.crossings.size()) - 1);
        fd.chords[q].xs.push_back(static_cast<int>(fd.crossings.size()) - 1);
      }
    }

  // order crossings along each chord (exact geometry, jitter on degeneracy)
  for (int seed = 0;; ++seed) {
    SCC_CHECK(seed < 64, "persistent geometric degeneracy");
    try {
      std::vector<Big3> pt(F);
      for (int i = 0; i < F; ++i) pt[i] = circle_point(i, seed);
      std::vector<Big3> line(fd.chords.size());
      for (size_t i = 0; i < fd.chords.size(); ++i)
        line[i] = cross3(pt[fd.chords[i].fs], pt[fd.chords[i].fe]);
      std::vector<Big3> xpt(fd.crossings.size());
      for (size_t i = 0; i < fd.crossings.size(); ++i) {
        Big3 x = cross3(line[fd.crossings[i].ca], line[fd.crossings[i].cb]);
        SCC_CHECK(x.z.sign != 0, "crossing point at infinity");
        if (x.z.sign < 0) {
          x.x.sign = -x.x.sign;
          x.y.sign = -x.y.sign;
          x.z.sign = -x.z.sign;
        }
        xpt[i] = x;
      }
      auto side = [&](int chord, const Big3& p) {
        Big d = dot3(line[chord], p);
        if (d.sign == 0) throw DegenerateGeometry{};
        return d.sign;
      };
      for (int ci = 0; ci < static_cast<int>(fd.chords.size()); ++ci) {
        FaceData::Chord& ch = fd.chords[ci];
        std::sort(ch.xs.begin(), ch.xs.end(), [&](int xa, int xb) {
          const auto& B = fd.crossings[xb];
          int other_b = B.ca == ci ? B.cb : B.ca;
          return side(other_b, xpt[xa]) == side(other_b, pt[ch.fs]);
        });
      }
      break;
    } catch (const DegenerateGeometry&) {
      for (auto& ch : fd.chords) {
        // keep membership, retry ordering with fresh jitter
        std::sort(ch.xs.begin(), ch.xs.end());
      }
      continue;
    }
  }
  for (int ci = 0; ci < static_cast<int>(fd.chords.size()); ++ci)
    for (int p = 0; p < static_cast<int>(fd.chords[ci].xs.size()); ++p) {
      auto& x = fd.crossings[fd.chords[ci].xs[p]];
      (x.ca == ci ? x.pa : x.pb) = p;
    }

  // darts
  fd.n_boundary = F;
  fd.cdart_base.resize(fd.chords.size());
  for (size_t i = 0; i < fd.chords.size(); ++i) {
    fd.cdart_base[i] = static_cast<int>(fd.cdarts.size());
    int segs = static_cast<int>(fd.chords[i].xs.size()) + 1;
    for (int j = 0; j < segs; ++j) {
      fd.cdarts.push_back({static_cast<int>(i), j, true});
      fd.cdarts.push_back({static_cast<int>(i), j, false});
    }
  }

  // orbit successor
  auto chord_endnode = [&](int chord, int k) -> std::pair<bool, int> {
    // node k along chord: 0..segs; returns (is_feature, id)
    const auto& ch = fd.chords[chord];
    int segs = static_cast<int>(ch.xs.size()) + 1;
    if (k == 0) return {true, ch.fs};
    if (k == segs) return {true, ch.fe};
    return {false, ch.xs[k - 1]};
  };
  std::vector<int> chord_at_feature(F, -1);
  for (int ci = 0; ci < static_cast<int>(fd.chords.size()); ++ci) {
    chord_at_feature[fd.chords[ci].fs] = ci;
    chord_at_feature[fd.chords[ci].fe] = ci;
  }

  auto stub_order = [&](int xid) {
    // stubs at a crossing, CCW: sorted by endpoint feature index;
    // each stub = (chord, toward_end?)
    const auto& x = fd.crossings[xid];
    std::array<std::pair<int, std::pair<int, bool>>, 4> st{
        std::pair<int, std::pair<int, bool>>{fd.chords[x.ca].fs, {x.ca, false}},
        {fd.chords[x.ca].fe, {x.ca, true}},
        {fd.chords[x.cb].fs, {x.cb, false}},
        {fd.chords[x.cb].fe, {x.cb, true}}};
    std::sort(st.begin(), st.end());
    return st;
  };
  auto leave_crossing = [&](int xid, int chord, bool toward_end) {
    const auto& x = fd.crossings[xid];
    int p = chord == x.ca ? x.pa : x.pb;
    if (toward_end) return fd.cdart_id(chord, p + 1, true);
    return fd.cdart_id(chord, p, false);
  };

  fd.dnext.assign(fd.num_darts(), -1);
  for (int d = 0; d < fd.num_darts(); ++d) {
    if (fd.is_boundary_dart(d)) {
      int j = (d + 1) % F;
      if (!fd.features[j].is_slot)
        fd.dnext[d] = j;  // next boundary dart
      else {
        int ci = chord_at_feature[j];
        SCC_CHECK(ci >= 0, "slot feature without chord");
        if (fd.chords[ci].fs == j)
          fd.dnext[d] = fd.cdart_id(ci, 0, true);
        else
          fd.dnext[d] =
              fd.cdart_id(ci, static_cast<int>(fd.chords[ci].xs.size()), false);
      }
    } else {
      const auto& cd = fd.cdarts[d - fd.n_boundary];
      auto [is_feat, node] =
          chord_endnode(cd.chord, cd.fwd ? cd.seg + 1 : cd.seg);
      if (is_feat) {
        fd.dnext[d] = node;  // boundary dart leaving that feature
      } else {
        auto st = stub_order(node);
        // reverse stub: points back toward where we came from
        bool rev_toward_end = !cd.fwd;
        int pos = -1;
        for (int i = 0; i < 4; ++i)
          if (st[i].second == std::make_pair(cd.chord, rev_toward_end)) pos = i;
        SCC_CHECK(pos >= 0, "stub not found");
        auto out = st[(pos + 3) % 4].second;
        fd.dnext[d] = leave_crossing(node, out.first, out.second);
      }
    }
  }

  // orbits
  fd.subface.assign(fd.num_darts(), -1);
  for (int d0 = 0; d0 < fd.num_darts(); ++d0) {
    if (fd.subface[d0] != -1) continue;
    int id = fd.n_subfaces++;
    int d = d0;
    do {
      SCC_CHECK(fd.subface[d] == -1, "subface tracing collision");
      fd.subface[d] = id;
      d = fd.dnext[d];
    } while (d != d0);
  }

  SCC_CHECK(fd.n_subfaces == 1 + static_cast<int>(fd.chords.size()) +
                                  static_cast<int>(fd.crossings.size()),
            "face subdivision count");
  fd.built = true;
  return fd;
}

int Config::crossings_between(int p, int q) {
  int total = 0;
  for (FaceId f = 0; f < s_->num_faces(); ++f) {
    FaceData& fd = face_data(f);
    for (const auto& x : fd.crossings) {
      int c1 = fd.chords[x.ca].curve, c2 = fd.chords[x.cb].curve;
      if ((c1 == p && c2 == q) || (c1 == q && c2 == p)) ++total;
    }
  }
  return total;
}

int Config::total_crossings() {
  int total = 0;
  for (FaceId f = 0; f < s_->num_faces(); ++f) total += static_cast<int>(face_data(f).crossings.size());
  return total;
}

Curve Config::extract(int p) const {
  std::map<ArcId, std::vector<int>> slots;
  for (ArcId a = 0; a < s_->num_arcs(); ++a) {
    std::vector<int> mine;
    for (const SlotRef& sr : arc_slots_[a])
      if (sr.curve == p) mine.push_back(sr.step);
    if (!mine.empty()) slots[a] = std::move(mine);
  }
  return Curve(*s_, curves_[p], std::move(slots));
}


// ---------------------------------------------------------------------------
// Analysis: glue subfaces into pieces relative to a wall set; Euler counts,
// boundary cycles, containment.

std::shared_ptr<Config::Analysis> Config::analyze(const std::vector<int>& walls) {
  auto an = std::make_shared<Analysis>();
  an->is_wall.assign(num_curves(), 0);
  for (int w : walls) an->is_wall[w] = 1;

  // global subface ids
  std::vector<int> offset(s_->num_faces() + 1, 0);
  for (FaceId f = 0; f < s_->num_faces(); ++f)
    offset[f + 1] = offset[f] + face_data(f).n_subfaces;
  int total_sub = offset[s_->num_faces()];

  std::vector<int> uf(total_sub);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

  auto gsub = [&](FaceId f, int dart) {
    return offset[f] + faces_[f]->subface[dart];
  };

  // boundary dart of arc piece t (arc order) in face fc; also used for twins
  auto arc_piece_dart = [&](ArcId a, FaceId f, int t) {
    FaceData& fd = *faces_[f];
    int w = s_->walk_index(f, a);
    auto [base, m] = fd.walk_edge[w];
    int j = s_->walk_forward(f, a) ? t : m - t;
    return (base + j) % static_cast<int>(fd.features.size());
  };

  for (ArcId a = 0; a < s_->num_arcs(); ++a) {
    int m = static_cast<int>(arc_slots_[a].size());
    FaceId f0 = s_->face_fwd(a), f1 = s_->face_rev(a);
    for (int t = 0; t <= m; ++t)
      unite(gsub(f0, arc_piece_dart(a, f0, t)), gsub(f1, arc_piece_dart(a, f1, t)));
  }
  for (FaceId f = 0; f < s_->num_faces(); ++f) {
    FaceData& fd = *faces_[f];
    for (int ci = 0; ci < static_cast<int>(fd.chords.size()); ++ci) {
      if (an->is_wall[fd.chords[ci].curve]) continue;
      int segs = static_cast<int>(fd.chords[ci].xs.size()) + 1;
      for (int j = 0; j < segs; ++j)
        unite(gsub(f, fd.cdart_id(ci, j, true)), gsub(f, fd.cdart_id(ci, j, false)));
    }
  }

  // piece numbering
  std::map<int, int> piece_id;
  auto piece_of_sub = [&](int g) {
    int r = find(g);
    auto it = piece_id.find(r);
    if (it != piece_id.end()) return it->second;
    int id = static_cast<int>(piece_id.size());
    piece_id[r] = id;
    return id;
  };
  // deterministic numbering: scan subfaces in order
  an->piece_of_subface.resize(total_sub);
  for (int g = 0; g < total_sub; ++g) an->piece_of_subface[g] = piece_of_sub(g);
  int P = static_cast<int>(piece_id.size());
  an->pieces.assign(P, Piece{});
  an->rep_subface.assign(P, -1);
  for (int g = total_sub - 1; g >= 0; --g) an->rep_subface[an->piece_of_subface[g]] = g;

  std::vector<long long> V(P, 0), E(P, 0), Fc(P, 0);
  for (int g = 0; g < total_sub; ++g) ++Fc[piece_of_sub(g)];

  // edges: arc pieces (interior), non-wall chord segs (interior), wall chord
  // dart sides (boundary)
  for (ArcId a = 0; a < s_->num_arcs(); ++a) {
    int m = static_cast<int>(arc_slots_[a].size());
    FaceId f0 = s_->face_fwd(a);
    for (int t = 0; t <= m; ++t)
      ++E[piece_of_sub(gsub(f0, arc_piece_dart(a, f0, t)))];
  }
  for (FaceId f = 0; f < s_->num_faces(); ++f) {
    FaceData& fd = *faces_[f];
    for (int ci = 0; ci < static_cast<int>(fd.chords.size()); ++ci) {
      bool wall = an->is_wall[fd.chords[ci].curve];
      int segs = static_cast<int>(fd.chords[ci].xs.size()) + 1;
      for (int j = 0; j < segs; ++j) {
        if (wall) {
          ++E[piece_of_sub(gsub(f, fd.cdart_id(ci, j, true)))];
          ++E[piece_of_sub(gsub(f, fd.cdart_id(ci, j, false)))];
        } else {
          ++E[piece_of_sub(gsub(f, fd.cdart_id(ci, j, true)))];
        }
      }
    }
  }

  // vertices
  {
    // zero-cells: locate via the boundary dart leaving any corner feature
    an->piece_of_vertex.assign(s_->num_vertices(), -1);
    for (FaceId f = 0; f < s_->num_faces(); ++f) {
      FaceData& fd = *faces_[f];
      for (int i = 0; i < static_cast<int>(fd.features.size()); ++i) {
        if (fd.features[i].is_slot) continue;
        VertexId v = fd.features[i].corner;
        if (an->piece_of_vertex[v] != -1) continue;
        an->piece_of_vertex[v] = piece_of_sub(gsub(f, i));
        ++V[an->piece_of_vertex[v]];
      }
    }
    for (VertexId v = 0; v < s_->num_vertices(); ++v)
      SCC_CHECK(an->piece_of_vertex[v] >= 0, "zero-cell not seen");
  }
  for (int c = 0; c < num_curves(); ++c) {
    int m = static_cast<int>(curves_[c].size());
    for (int i = 0; i < m; ++i) {
      FaceId f = curves_[c][i].into;
      FaceData& fd = *faces_[f];
      int ci = fd.chord_of.at({c, i});
      int left = piece_of_sub(gsub(f, fd.cdart_id(ci, 0, true)));
      int right = piece_of_sub(gsub(f, fd.cdart_id(ci, 0, false)));
      if (an->is_wall[c]) {
        ++V[left];
        ++V[right];
      } else {
        SCC_CHECK(left == right, "interior slot with split sides");
        ++V[left];
      }
    }
  }
  for (FaceId f = 0; f < s_->num_faces(); ++f) {
    FaceData& fd = *faces_[f];
    for (int x = 0; x < static_cast<int>(fd.crossings.size()); ++x) {
      const auto& xr = fd.crossings[x];
      int c1 = fd.chords[xr.ca].curve, c2 = fd.chords[xr.cb].curve;
      bool w1 = an->is_wall[c1], w2 = an->is_wall[c2];
      // quadrants = left sides of the four darts pointing away from x
      int qa_fwd = piece_of_sub(gsub(f, fd.cdart_id(xr.ca, xr.pa + 1, true)));
      int qa_bwd = piece_of_sub(gsub(f, fd.cdart_id(xr.ca, xr.pa, false)));
      int qb_fwd = piece_of_sub(gsub(f, fd.cdart_id(xr.cb, xr.pb + 1, true)));
      int qb_bwd = piece_of_sub(gsub(f, fd.cdart_id(xr.cb, xr.pb, false)));
      if (w1 && w2) {
        ++V[qa_fwd];
        ++V[qa_bwd];
        ++V[qb_fwd];
        ++V[qb_bwd];
      } else if (w1) {
        ++V[qa_fwd];  // left of c1's chord
        ++V[qa_bwd];  // right of c1's chord
      } else if (w2) {
        ++V[qb_fwd];
        ++V[qb_bwd];
      } else {
        SCC_CHECK(qa_fwd == qa_bwd && qa_bwd == qb_fwd && qb_fwd == qb_bwd,
                  "interior crossing with split quadrants");
        ++V[qa_fwd];
      }
    }
  }

  for (int p = 0; p < P; ++p)
    an->pieces[p].euler = static_cast<int>(V[p] - E[p] + Fc[p]);
  {
    // chi(Sigma) = chi(wall graph) + sum of piece chis; the wall graph has
    // chi = -(number of wall-wall crossings)
    long long xww = 0;
    for (FaceId f = 0; f < s_->num_faces(); ++f) {
      FaceData& fd = *faces_[f];
      for (const auto& x : fd.crossings)
        if (an->is_wall[fd.chords[x.ca].curve] && an->is_wall[fd.chords[x.cb].curve])
          ++xww;
    }
    long long sum = 0;
    for (int p = 0; p < P; ++p) sum += an->pieces[p].euler;
    SCC_CHECK(sum == 2 - 2 * s_->genus() + xww, "Euler characteristic not additive");
  }

  // boundary cycles along wall-chord darts
  std::map<std::pair<FaceId, int>, int> visited;  // (face, dart) -> cycle
  auto is_wall_cdart = [&](FaceId f, int d) {
    FaceData& fd = *faces_[f];
    if (fd.is_boundary_dart(d)) return false;
    return an->is_wall[fd.chords[fd.cdarts[d - fd.n_boundary].chord].curve] != 0;
  };
  auto boundary_twin = [&](FaceId f, int d) -> std::pair<FaceId, int> {
    // boundary dart d in f lies on an arc piece; find the matching dart in
    // the other face of that arc.  Walk-edge dart ranges partition [0, Fn).
    FaceData& fd = *faces_[f];
    int Fn = static_cast<int>(fd.features.size());
    for (int w = 0; w < static_cast<int>(fd.walk_edge.size()); ++w) {
      auto [base, m] = fd.walk_edge[w];
      int rel = ((d - base) % Fn + Fn) % Fn;
      if (rel > m) continue;
      ArcId a = fd.features[base].arc;
      int t = s_->walk_forward(f, a) ? rel : m - rel;
      FaceId g = s_->other_face(a, f);
      FaceData& gd = *faces_[g];
      auto [gbase, gm] = gd.walk_edge[s_->walk_index(g, a)];
      SCC_CHECK(gm == m, "arc piece count mismatch across faces");
      int j = s_->walk_forward(g, a) ? t : m - t;
      return {g, (gbase + j) % static_cast<int>(gd.features.size())};
    }
    SCC_CHECK(false, "boundary dart not on any walk edge");
    return {-1, -1};
  };

  for (FaceId f0 = 0; f0 < s_->num_faces(); ++f0) {
    FaceData& fd0 = *faces_[f0];
    for (int d0 = fd0.n_boundary; d0 < fd0.num_darts(); ++d0) {
      if (!is_wall_cdart(f0, d0) || visited.count({f0, d0})) continue;
      int cyc = static_cast<int>(an->cycles.size());
      an->cycles.emplace_back();
      Analysis::Cycle& C = an->cycles.back();
      C.piece = piece_of_sub(gsub(f0, d0));
      FaceId f = f0;
      int d = d0;
      do {
        visited[{f, d}] = cyc;
        FaceData& fd = *faces_[f];
        const auto& cd = fd.cdarts[d - fd.n_boundary];
        C.steps.push_back(Analysis::CycleStep{fd.chords[cd.chord].curve,
                                              fd.chords[cd.chord].step, cd.fwd,
                                              cd.seg});
        // advance: orbit next, skipping through interior edges
        int e = fd.dnext[d];
        FaceId g = f;
        while (true) {
          FaceData& gd = *faces_[g];
          if (gd.is_boundary_dart(e)) {
            auto [g2, e2] = boundary_twin(g, e);
            g = g2;
            e = faces_[g]->dnext[e2];
          } else if (!is_wall_cdart(g, e)) {
            const auto& cd2 = gd.cdarts[e - gd.n_boundary];
            int tw = gd.cdart_id(cd2.chord, cd2.seg, !cd2.fwd);
            e = gd.dnext[tw];
          } else {
            break;
          }
        }
        f = g;
        d = e;
      } while (!(f == f0 && d == d0));
      ++an->pieces[C.piece].n_cycles;
      for (const auto& st : C.steps) {
        std::pair<int, int> side{st.curve, st.forward ? 0 : 1};
        auto& v = an->pieces[C.piece].sides;
        if (std::find(v.begin(), v.end(), side) == v.end()) v.push_back(side);
      }
    }
  }
  for (auto& p : an->pieces) {
    std::sort(p.sides.begin(), p.sides.end());
    int chi = p.euler, b = p.n_cycles;
    SCC_CHECK((2 - chi - b) % 2 == 0 && 2 - chi - b >= 0, "piece genus");
    p.genus = (2 - chi - b) / 2;
    p.disk = (chi == 1 && b == 1);
    p.annulus = (chi == 0 && b == 2);
  }

  an->piece_of_curve.assign(num_curves(), -1);
  for (int c = 0; c < num_curves(); ++c) {
    if (an->is_wall[c]) continue;
    FaceId f = curves_[c][0].into;
    FaceData& fd = *faces_[f];
    int ci = fd.chord_of.at({c, 0});
    an->piece_of_curve[c] = piece_of_sub(gsub(f, fd.cdart_id(ci, 0, true)));
  }
  return an;
}

// ---------------------------------------------------------------------------
// Reduction.

bool Config::remove_one_trivial_return() {
  for (int c = 0; c < num_curves(); ++c) {
    int m = static_cast<int>(curves_[c].size());
    for (int i = 0; i < m; ++i) {
      int j = next_step(c, i);
      if (curves_[c][i].arc != curves_[c][j].arc) continue;
      ArcId a = curves_[c][i].arc;
      int pi = slot_pos(c, i), pj = slot_pos(c, j);
      if (pi != pj + 1 && pj != pi + 1) continue;
      FaceId f = curves_[c][i].into;
      FaceData& fd = face_data(f);
      int ci = fd.chord_of.at({c, i});
      if (!fd.chords[ci].xs.empty()) continue;

      SCC_CHECK(m > 2, "essential curve degenerated to a trivial loop");
      // remove steps i and j
      std::vector<CurveStep> ns;
      std::vector<int> remap(m, -1);
      for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        remap[k] = static_cast<int>(ns.size());
        ns.push_back(curves_[c][k]);
      }
      auto& v = arc_slots_[a];
      v.erase(std::remove_if(v.begin(), v.end(),
                             [&](const SlotRef& sr) {
                               return sr.curve == c && (sr.step == i || sr.step == j);
                             }),
              v.end());
      for (auto& av : arc_slots_)
        for (auto& sr : av)
          if (sr.curve == c) sr.step = remap[sr.step];
      dirty_steps(curves_[c]);
      curves_[c] = std::move(ns);
      return true;
    }
  }
  return false;
}

bool Config::remove_one_bigon() {
  std::vector<int> all(num_curves());
  std::iota(all.begin(), all.end(), 0);
  auto an = analyze(all);

  for (const auto& cyc : an->cycles) {
    const Piece& pc = an->pieces[cyc.piece];
    if (!pc.disk) continue;
    // transitions between curves along the cycle
    int n = static_cast<int>(cyc.steps.size());
    std::vector<int> trans;
    for (int i = 0; i < n; ++i)
      if (cyc.steps[i].curve != cyc.steps[(i + 1) % n].curve) trans.push_back(i);
    if (trans.size() != 2) continue;
    int cu1 = cyc.steps[trans[0]].curve, cu2 = cyc.steps[(trans[0] + 1) % n].curve;
    if (cu1 == cu2) continue;
    // corners must be distinct crossings
    auto corner_key = [&](int i) {
      const auto& s1 = cyc.steps[i];
      const auto& s2 = cyc.steps[(i + 1) % n];
      std::pair<std::pair<int, int>, std::pair<int, int>> k{{s1.curve, s1.step},
                                                            {s2.curve, s2.step}};
      if (k.second < k.first) std::swap(k.first, k.second);
      return k;
    };
    if (corner_key(trans[0]) == corner_key(trans[1])) continue;

    // runs: rotate so the cycle is [P-run][Q-run] with P the rerouted curve
    int P = std::max(cu1, cu2);
    std::vector<Analysis::CycleStep> steps;
    steps.reserve(n);
    int start = (trans[0] + 1) % n;
    for (int i = 0; i < n; ++i) steps.push_back(cyc.steps[(start + i) % n]);
    if (steps[0].curve != P) {
      start = (trans[1] + 1) % n;
      steps.clear();
      for (int i = 0; i < n; ++i) steps.push_back(cyc.steps[(start + i) % n]);
    }
    SCC_CHECK(steps.front().curve == P, "bigon run extraction");
    int split = 0;
    while (split < n && steps[split].curve == P) ++split;
    std::vector<Analysis::CycleStep> runP(steps.begin(), steps.begin() + split);
    std::vector<Analysis::CycleStep> runQ(steps.begin() + split, steps.end());
    int Q = runQ.front().curve;
    for (const auto& st : runP) SCC_CHECK(st.curve == P && st.forward == runP[0].forward, "mixed P run");
    for (const auto& st : runQ) SCC_CHECK(st.curve == Q && st.forward == runQ[0].forward, "mixed Q run");
    bool fp = runP[0].forward, fq = runQ[0].forward;

    // slots passed along each run (between consecutive chords of the run)
    auto passed = [&](const std::vector<Analysis::CycleStep>& run) {
      std::vector<int> out;
      for (size_t i = 0; i + 1 < run.size(); ++i) {
        if (run[i].step == run[i + 1].step) continue;  // same chord: crossing pass
        out.push_back(run[i].forward ? next_step(run[i].curve, run[i].step)
                                     : run[i].step);
      }
      return out;
    };
    std::vector<int> removeP = passed(runP);   // in cycle order along P
    std::vector<int> slotsQ = passed(runQ);    // in cycle order along Q

    // Parallel path u->v in the cycle's P direction = reverse of the Q run.
    // Each new step crosses Q's slot arc on the side away from the bigon.
    struct Ins {
      ArcId arc;
      FaceId into;
      int q_slot;
    };
    std::vector<Ins> par;
    for (auto it = slotsQ.rbegin(); it != slotsQ.rend(); ++it) {
      int t = *it;
      ArcId a = curves_[Q][t].arc;
      bool move_along_q = !fq;  // reversed run direction vs Q's own
      FaceId into = move_along_q ? curves_[Q][t].into
                                 : s_->other_face(a, curves_[Q][t].into);
      par.push_back(Ins{a, into, t});
    }
    if (!fp) {  // orient along P's own direction
      std::reverse(par.begin(), par.end());
      for (auto& p : par) p.into = s_->other_face(p.arc, p.into);
      std::reverse(removeP.begin(), removeP.end());
    }

    // new step list for P: replace the removed block with the parallel steps
    int mP = static_cast<int>(curves_[P].size());
    std::vector<char> rm(mP, 0);
    for (int t : removeP) rm[t] = 1;
    // find block start in P direction: element of removeP whose predecessor
    // is kept (or the run is empty: insertion point after the chord at corner)
    std::vector<CurveStep> ns;
    std::vector<int> remap(mP, -1);
    std::vector<int> new_par_index;
    if (removeP.empty()) {
      // P-run passes no slots: a single chord of P is clipped at both
      // corners; the parallel is spliced into that chord, between the chord's
      // two slots (after step chord_index in P's order).
      int after = runP[0].step;
      for (int k = 0; k < mP; ++k) {
        remap[k] = static_cast<int>(ns.size());
        ns.push_back(curves_[P][k]);
        if (k == after)
          for (const auto& pi : par) {
            new_par_index.push_back(static_cast<int>(ns.size()));
            ns.push_back(CurveStep{pi.arc, pi.into});
          }
      }
    } else {
      int first = removeP.front();
      // walk P starting right after the removed block:
      // find block in cyclic order: start at 'first', the block is the rm set
      // (contiguous cyclically by construction).
      int k = first;
      std::vector<int> order;
      for (int cnt = 0; cnt < mP; ++cnt) {
        order.push_back(k);
        k = next_step(P, k);
      }
      // order = first..; removed block is a prefix of 'order'
      int bl = 0;
      while (bl < mP && rm[order[bl]]) ++bl;
      SCC_CHECK(bl == static_cast<int>(removeP.size()), "bigon block not contiguous");
      for (const auto& pi : par) {
        new_par_index.push_back(static_cast<int>(ns.size()));
        ns.push_back(CurveStep{pi.arc, pi.into});
      }
      for (int idx = bl; idx < mP; ++idx) {
        remap[order[idx]] = static_cast<int>(ns.size());
        ns.push_back(curves_[P][order[idx]]);
      }
    }

    // update arc slot tables: drop removed P slots, renumber survivors
    for (auto& av : arc_slots_) {
      av.erase(std::remove_if(av.begin(), av.end(),
                              [&](const SlotRef& sr) {
                                return sr.curve == P && rm[sr.step];
                              }),
               av.end());
      for (auto& sr : av)
        if (sr.curve == P) sr.step = remap[sr.step];
    }
    std::vector<CurveStep> oldP = curves_[P];
    curves_[P] = ns;
    // insert parallel slots next to Q's slots, on the side away from the bigon
    int side_region = fq ? 0 : 1;           // region side of Q (0 = left)
    int side_ins = 1 - side_region;         // away
    for (size_t ii = 0; ii < par.size(); ++ii) {
      const Ins& pi = par[ii];
      int qpos = slot_pos(Q, pi.q_slot);
      FaceId qf = curves_[Q][pi.q_slot].into;
      bool wf = s_->walk_forward(qf, pi.arc);
      bool before = (side_ins == 0) == wf;  // LEFT <-> before iff walk-forward
      int at = before ? qpos : qpos + 1;
      arc_slots_[pi.arc].insert(arc_slots_[pi.arc].begin() + at,
                                SlotRef{P, new_par_index[ii]});
    }

    dirty_steps(oldP);
    dirty_steps(curves_[P]);
    return true;
  }
  return false;
}

void Config::reduce() {
  reduction_trace_.clear();
  reduction_trace_.push_back(total_crossings());
  long long guard = 0;
  for (;;) {
    SCC_CHECK(++guard < 200000, "reduction did not terminate");
    if (remove_one_trivial_return()) continue;
    int before = reduction_trace_.back();
    if (!remove_one_bigon()) break;
    int after = total_crossings();
    SCC_CHECK(after < before, "bigon removal must reduce crossings");
    reduction_trace_.push_back(after);
  }
  int final_count = total_crossings();
  if (reduction_trace_.back() != final_count) reduction_trace_.push_back(final_count);
}

// ---------------------------------------------------------------------------
// Push-off of a boundary cycle into its piece.

Curve Config::push_off(const Analysis& an, int cycle) {
  const Analysis::Cycle& C = an.cycles[cycle];
  int n = static_cast<int>(C.steps.size());
  SCC_CHECK(n > 0, "empty cycle");

  struct Emit {
    ArcId arc;
    FaceId into;
    long long order_key;  // 2*base_pos +/- 1 within the arc
  };
  std::vector<Emit> emits;
  for (int i = 0; i < n; ++i) {
    const auto& s1 = C.steps[i];
    const auto& s2 = C.steps[(i + 1) % n];
    if (s1.curve != s2.curve) continue;          // corner at a crossing
    if (s1.step == s2.step) continue;            // pass through a crossing
    int c = s1.curve;
    int t = s1.forward ? next_step(c, s1.step) : s1.step;
    ArcId a = curves_[c][t].arc;
    FaceId into = s1.forward ? curves_[c][t].into
                             : s_->other_face(a, curves_[c][t].into);
    int side = s1.forward ? 0 : 1;  // region lies on this side of the curve
    FaceId f_start = curves_[c][t].into;
    bool wf = s_->walk_forward(f_start, a);
    bool before = (side == 0) == wf;
    long long key = 4LL * slot_pos(c, t) + (before ? -1 : +1);
    emits.push_back(Emit{a, into, key});
  }
  SCC_CHECK(!emits.empty(), "cycle crosses no arcs; push-off is trivial");

  std::vector<CurveStep> steps;
  steps.reserve(emits.size());
  for (const auto& e : emits) steps.push_back(CurveStep{e.arc, e.into});

  // per-arc order of the new slots
  std::map<ArcId, std::vector<std::pair<long long, int>>> per_arc;
  for (int i = 0; i < static_cast<int>(emits.size()); ++i)
    per_arc[emits[i].arc].push_back({emits[i].order_key, i});
  std::map<ArcId, std::vector<int>> slots;
  for (auto& [arc, v] : per_arc) {
    std::sort(v.begin(), v.end());
    for (size_t i = 1; i < v.size(); ++i)
      SCC_CHECK(v[i].first != v[i - 1].first, "push-off slot collision");
    for (auto& [k, idx] : v) slots[arc].push_back(idx);
  }
  Curve c(*s_, std::move(steps), std::move(slots));
  return c.normalized(*s_);
}

}  // namespace scc
