#include "scc/curve.hpp"

#include <algorithm>
#include <sstream>

namespace scc {

Curve::Curve(const ChainSurface& s, std::vector<CurveStep> steps,
             std::map<ArcId, std::vector<int>> slots)
    : steps_(std::move(steps)), slots_(std::move(slots)) {
  validate(s);
}

Curve Curve::trivial_in_face(const ChainSurface& s, FaceId f) {
  SCC_CHECK(f >= 0 && f < s.num_faces(), "bad face");
  Curve c;
  c.home_face_ = f;
  return c;
}

FaceId Curve::face_before(int i) const {
  SCC_CHECK(!steps_.empty(), "trivial curve has no steps");
  int m = size();
  return steps_[(i - 1 + m) % m].into;
}

void Curve::validate(const ChainSurface& s) const {
  if (steps_.empty()) {
    SCC_CHECK(home_face_ >= 0, "empty curve without home face");
    return;
  }
  const int m = size();
  SCC_CHECK(m >= 2, "a transverse curve crosses an even number >= 2 of slots");
  for (int i = 0; i < m; ++i) {
    const CurveStep& st = steps_[i];
    SCC_CHECK(st.arc >= 0 && st.arc < s.num_arcs(), "bad arc");
    SCC_CHECK(st.into == s.face_fwd(st.arc) || st.into == s.face_rev(st.arc),
              "step face not adjacent to arc");
    // continuity: we leave the face we were in
    FaceId before = s.other_face(st.arc, st.into);
    SCC_CHECK(before == steps_[(i - 1 + m) % m].into, "chord face mismatch");
  }
  // slot table covers each step exactly once
  std::vector<int> seen(m, 0);
  for (const auto& [arc, list] : slots_) {
    for (int idx : list) {
      SCC_CHECK(idx >= 0 && idx < m, "slot index out of range");
      SCC_CHECK(steps_[idx].arc == arc, "slot listed under wrong arc");
      SCC_CHECK(!seen[idx], "step listed twice");
      seen[idx] = 1;
    }
  }
  for (int i = 0; i < m; ++i) SCC_CHECK(seen[i], "step missing from slot table");

  // embeddedness: chords within each face pairwise non-interleaved
  std::map<FaceId, std::vector<std::pair<long long, long long>>> per_face;
  auto ordinal = [&](int step_idx, FaceId f) -> long long {
    ArcId a = steps_[step_idx].arc;
    const auto& list = slots_.at(a);
    int pos = static_cast<int>(std::find(list.begin(), list.end(), step_idx) -
                               list.begin());
    int rank = s.walk_forward(f, a) ? pos : static_cast<int>(list.size()) - 1 - pos;
    return static_cast<long long>(s.walk_index(f, a)) * (m + 1) + rank;
  };
  for (int i = 0; i < m; ++i) {
    FaceId f = steps_[i].into;
    per_face[f].push_back({ordinal(i, f), ordinal((i + 1) % m, f)});
  }
  for (auto& [f, chords] : per_face) {
    (void)f;
    auto between = [](long long x, long long lo, long long hi) {
      if (lo < hi) return lo < x && x < hi;
      return x > lo || x < hi;  // wrapped interval
    };
    for (size_t p = 0; p < chords.size(); ++p)
      for (size_t q = p + 1; q < chords.size(); ++q) {
        bool in1 = between(chords[q].first, chords[p].first, chords[p].second);
        bool in2 = between(chords[q].second, chords[p].first, chords[p].second);
        SCC_CHECK(in1 == in2, "curve chords interleave (self-crossing)");
      }
  }
}

Curve Curve::normalized(const ChainSurface& s) const {
  if (is_trivial()) return *this;
  std::vector<CurveStep> steps = steps_;
  std::map<ArcId, std::vector<int>> slots = slots_;

  auto find_return = [&]() -> int {
    int m = static_cast<int>(steps.size());
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      if (steps[i].arc != steps[j].arc) continue;
      const auto& list = slots[steps[i].arc];
      auto pi = std::find(list.begin(), list.end(), i) - list.begin();
      auto pj = std::find(list.begin(), list.end(), j) - list.begin();
      if (pi + 1 == pj || pj + 1 == pi) return i;
    }
    return -1;
  };

  int i;
  while ((i = find_return()) >= 0) {
    int m = static_cast<int>(steps.size());
    if (m == 2) return trivial_in_face(s, steps[i].into);
    int j = (i + 1) % m;
    std::vector<CurveStep> ns;
    std::map<ArcId, std::vector<int>> nslots;
    std::vector<int> remap(m, -1);
    for (int k = 0; k < m; ++k) {
      if (k == i || k == j) continue;
      remap[k] = static_cast<int>(ns.size());
      ns.push_back(steps[k]);
    }
    for (auto& [arc, list] : slots) {
      std::vector<int> nl;
      for (int idx : list)
        if (remap[idx] >= 0) nl.push_back(remap[idx]);
      if (!nl.empty()) nslots[arc] = std::move(nl);
    }
    steps = std::move(ns);
    slots = std::move(nslots);
  }
  Curve out;
  out.steps_ = std::move(steps);
  out.slots_ = std::move(slots);
  out.validate(s);
  return out;
}

std::string Curve::rep_key(const ChainSurface& s) const {
  if (is_trivial()) return "trivial:" + std::to_string(home_face_);
  const int m = size();
  auto encode = [&](bool rev) {
    // positions of each step along its arc
    std::vector<int> pos(m, 0);
    for (const auto& [arc, list] : slots_) {
      (void)arc;
      for (size_t p = 0; p < list.size(); ++p) pos[list[p]] = static_cast<int>(p);
    }
    std::string best;
    for (int start = 0; start < m; ++start) {
      std::ostringstream os;
      for (int t = 0; t < m; ++t) {
        int idx = rev ? (start - t % m + 2 * m) % m : (start + t) % m;
        FaceId into = rev ? s.other_face(steps_[idx].arc, steps_[idx].into)
                          : steps_[idx].into;
        os << steps_[idx].arc << ',' << into << ',' << pos[idx] << ';';
      }
      std::string k = os.str();
      if (best.empty() || k < best) best = k;
    }
    return best;
  };
  std::string a = encode(false), b = encode(true);
  return a < b ? a : b;
}

Curve Curve::chain_curve(const ChainSurface& s, int k) {
  k = s.mod(k);
  VertexId xk = k;
  VertexId xk1 = s.mod(k - 1);
  // Push-off of the core A_k^0 u A_k^1: crosses A_{k+1}^0 next to x_k and
  // A_{k-1}^0 next to x_{k-1}; chords run alongside the two lifts of c_k.
  CurveStep s0{s.arc_id(k + 1, 0), s.corner_face(xk, 1)};
  CurveStep s1{s.arc_id(k - 1, 0), s.corner_face(xk1, 0)};
  SCC_CHECK(s.corner_face(xk1, 3) == s0.into, "chain push-off face mismatch");
  SCC_CHECK(s.corner_face(xk, 0) == s1.into, "chain push-off face mismatch");
  std::map<ArcId, std::vector<int>> slots;
  slots[s0.arc] = {0};
  slots[s1.arc] = {1};
  return Curve(s, {s0, s1}, std::move(slots));
}

}  // namespace scc
