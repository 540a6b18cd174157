#include "scc/families.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace scc {

std::string CurveName::str(int n) const {
  auto iv = [&](const Interval& I) {
    if (I.empty()) return std::string("-");
    std::ostringstream os;
    os << I.start << "," << I.end(n);
    return os.str();
  };
  std::ostringstream os;
  switch (family) {
    case Family::Chain:
      os << "c" << index;
      break;
    case Family::Sep:
      os << "s[" << iv(J) << "]";
      break;
    case Family::BP:
      os << "b[" << iv(J) << "]" << (sign > 0 ? "+" : "-");
      break;
    case Family::GenusOne:
      os << "u" << attach << "[" << iv(J) << "]" << (sign > 0 ? "+" : "-");
      break;
    case Family::GenusTwo:
      os << "v[" << iv(pre) << "|" << iv(J) << "|" << iv(suc) << "]"
         << (sign > 0 ? "+" : "-");
      break;
  }
  return os.str();
}

SetKind parse_set_kind(const std::string& s) {
  if (s == "Y") return SetKind::Y;
  if (s == "Ys") return SetKind::Ys;
  if (s == "X") return SetKind::X;
  if (s == "Xs") return SetKind::Xs;
  throw std::invalid_argument("unknown set designator: " + s);
}

std::string set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::Y: return "Y";
    case SetKind::Ys: return "Ys";
    case SetKind::X: return "X";
    case SetKind::Xs: return "Xs";
  }
  return "?";
}

int NamedCurveSet::find(const CurveName& n) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == n) return i;
  return -1;
}

const Curve& NamedCurveSet::curve_of(const CurveName& n) const {
  int i = find(n);
  SCC_CHECK(i >= 0, "name not in set");
  return curves[i];
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------

struct Workspace::Impl {
  Workspace* ws = nullptr;
  const ChainSurface* s = nullptr;
  int n = 0;

  // curve-key interning and memoized pair caches
  std::map<std::string, int> key_id;
  std::vector<Curve> key_curve;
  std::map<std::pair<int, int>, int> icache;
  std::map<std::pair<int, int>, char> isocache;
  std::mutex mu;

  // fingerprint -> universe indices
  struct Fp {
    int sep = 0, h1 = 0, h2 = 0;
    std::vector<int> chain_i;
    auto operator<=>(const Fp&) const = default;
  };
  std::vector<CurveName> uni_names;
  std::vector<Curve> uni_curves;
  std::map<Fp, std::vector<int>> buckets;
  std::vector<std::pair<CurveName, CurveName>> aliases;
  std::vector<CurveName> rejected;
  bool universe_built = false;

  std::map<SetKind, NamedCurveSet> sets;
  std::map<SetKind, IncidenceTable> tables;
  std::map<int, CellMap> cmaps;

  std::vector<Curve> chain_reps;

  int intern(const Curve& c) {
    std::string k = c.rep_key(*s);
    std::lock_guard<std::mutex> lk(mu);
    auto it = key_id.find(k);
    if (it != key_id.end()) return it->second;
    int id = static_cast<int>(key_curve.size());
    key_id.emplace(std::move(k), id);
    key_curve.push_back(c);
    return id;
  }

  int isect(const Curve& a, const Curve& b) {
    int ia = intern(a), ib = intern(b);
    auto key = std::minmax(ia, ib);
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = icache.find(key);
      if (it != icache.end()) return it->second;
    }
    int v = geometric_intersection(*s, a, b);
    std::lock_guard<std::mutex> lk(mu);
    icache[key] = v;
    return v;
  }

  bool isotop(const Curve& a, const Curve& b) {
    int ia = intern(a), ib = intern(b);
    if (ia == ib) return true;
    auto key = std::minmax(ia, ib);
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = isocache.find(key);
      if (it != isocache.end()) return it->second != 0;
    }
    bool v = is_isotopic(*s, a, b);
    std::lock_guard<std::mutex> lk(mu);
    isocache[key] = v ? 1 : 0;
    return v;
  }

  Fp fingerprint(const Curve& c) {
    Fp fp;
    fp.chain_i.resize(n);
    for (int m = 0; m < n; ++m) fp.chain_i[m] = isect(c, chain_reps[m]);
    auto pieces = cut_along(*s, {c});
    if (pieces.size() == 2) {
      fp.sep = 1;
      fp.h1 = std::min(pieces[0].genus, pieces[1].genus);
      fp.h2 = std::max(pieces[0].genus, pieces[1].genus);
    } else {
      fp.sep = 0;
      fp.h1 = pieces[0].genus;
      fp.h2 = -1;
    }
    return fp;
  }

  Curve bd1(const std::vector<Curve>& u) {
    auto b = neighborhood_boundary(*s, u);
    SCC_CHECK(b.size() == 1, "expected a single boundary component");
    SCC_CHECK(!b[0].null_homotopic, "boundary unexpectedly null-homotopic");
    return b[0].curve;
  }

  // sign of a bounding-pair component: + means the component lies in the
  // same complement piece of the parity subchain as the crossing x_0
  int side_sign(const Curve& comp, int parity) {
    Config cfg(*s);
    std::vector<int> walls;
    for (int k = parity; k < n; k += 2) walls.push_back(cfg.add_curve(chain_reps[k]));
    int pid = cfg.add_curve(comp);
    cfg.reduce();
    for (int w : walls)
      SCC_CHECK(cfg.crossings_between(w, pid) == 0, "component crosses its subchain");
    auto an = cfg.analyze(walls);
    SCC_CHECK(an->pieces.size() == 2, "subchain cut must have two sides");
    return an->piece_of_curve[pid] == an->piece_of_vertex[0] ? +1 : -1;
  }

  // bounding-pair components for an odd interval, keyed by sign
  std::map<std::pair<Interval, int>, Curve> bp_cache;
  const Curve* bp(const Interval& J, int sign) {
    auto it = bp_cache.find({J, sign});
    if (it != bp_cache.end()) return &it->second;
    std::vector<Curve> u;
    for (int m : J.members(n)) u.push_back(chain_reps[m]);
    auto comps = neighborhood_boundary(*s, u);
    SCC_CHECK(comps.size() == 2, "odd chain boundary must be a pair");
    int parity = J.start % 2;
    int s0 = comps[0].null_homotopic ? 0 : side_sign(comps[0].curve, parity);
    int s1 = comps[1].null_homotopic ? 0 : side_sign(comps[1].curve, parity);
    SCC_CHECK(s0 != 0 && s1 != 0, "bounding pair component null-homotopic");
    SCC_CHECK(s0 == -s1, "bounding pair components on one side");
    bp_cache.emplace(std::make_pair(J, s0), comps[0].curve);
    bp_cache.emplace(std::make_pair(J, s1), comps[1].curve);
    return &bp_cache.at({J, sign});
  }

  // the defining chain of curves for a raw name; nullopt if the chain test
  // fails (recorded by the caller)
  std::optional<std::vector<Curve>> defining_chain(const CurveName& nm) {
    switch (nm.family) {
      case CurveName::Family::Chain:
        return std::vector<Curve>{chain_reps[nm.index]};
      case CurveName::Family::Sep: {
        std::vector<Curve> u;
        for (int m : nm.J.members(n)) u.push_back(chain_reps[m]);
        return u;
      }
      case CurveName::Family::BP:
        return std::vector<Curve>{*bp(nm.J, nm.sign)};
      case CurveName::Family::GenusOne:
        return std::vector<Curve>{chain_reps[nm.attach], *bp(nm.J, nm.sign)};
      case CurveName::Family::GenusTwo: {
        std::vector<Curve> u;
        // pre walks toward i-1, suc away from j+1
        std::vector<int> pm = nm.pre.members(n);
        int i = nm.J.start, j = nm.J.end(n);
        if (!nm.pre.empty() && nm.pre.end(n) != s->mod(i - 1))
          std::reverse(pm.begin(), pm.end());
        SCC_CHECK(nm.pre.empty() || pm.back() == s->mod(i - 1), "pre endpoint");
        std::vector<int> sm = nm.suc.members(n);
        if (!nm.suc.empty() && nm.suc.start != s->mod(j + 1))
          std::reverse(sm.begin(), sm.end());
        SCC_CHECK(nm.suc.empty() || sm.front() == s->mod(j + 1), "suc endpoint");
        for (int m : pm) u.push_back(chain_reps[m]);
        u.push_back(*bp(nm.J, nm.sign));
        for (int m : sm) u.push_back(chain_reps[m]);
        // chain test: consecutive intersect once, all other pairs disjoint
        for (size_t a = 0; a < u.size(); ++a)
          for (size_t b = a + 1; b < u.size(); ++b) {
            int expect = (b == a + 1) ? 1 : 0;
            if (isect(u[a], u[b]) != expect) return std::nullopt;
          }
        return u;
      }
    }
    return std::nullopt;
  }

  std::optional<Curve> build_raw(const CurveName& nm) {
    auto u = defining_chain(nm);
    if (!u) return std::nullopt;
    if (nm.family == CurveName::Family::Chain) return (*u)[0];
    if (nm.family == CurveName::Family::BP) return (*u)[0];
    if (nm.family == CurveName::Family::Sep) {
      auto b = neighborhood_boundary(*s, *u);
      SCC_CHECK(b.size() == 1, "even chain boundary must be one curve");
      if (b[0].null_homotopic) return std::nullopt;
      return b[0].curve;
    }
    return bd1(*u);
  }

  std::vector<CurveName> raw_names() {
    std::vector<CurveName> out;
    for (int i = 0; i < n; ++i) out.push_back(CurveName::chain(i));
    for (int len = 2; len <= 2 * ws->genus() - 2; len += 2)
      for (int st = 0; st < n; ++st) out.push_back(CurveName::sep({st, len}));
    for (int len = 3; len <= 2 * ws->genus() - 1; len += 2)
      for (int st = 0; st < n; ++st)
        for (int sg : {+1, -1}) {
          Interval J{st, len};
          out.push_back(CurveName::bp(J, sg));
          out.push_back(CurveName::genus1(s->mod(st - 1), J, sg));
          out.push_back(CurveName::genus1(s->mod(st + len), J, sg));
          int i = st, j = s->mod(st + len - 1);
          // predecessor/successor intervals with endpoint i-1 resp. j+1,
          // extending away from or into J
          auto pres = [&](int plen) {
            std::vector<Interval> v;
            if (plen == 0) {
              v.push_back({0, 0});
              return v;
            }
            v.push_back({s->mod(i - plen), plen});           // away
            if (plen > 1) v.push_back({s->mod(i - 1), plen});  // into J
            return v;
          };
          auto sucs = [&](int slen) {
            std::vector<Interval> v;
            if (slen == 0) {
              v.push_back({0, 0});
              return v;
            }
            v.push_back({s->mod(j + 1), slen});                    // away
            if (slen > 1) v.push_back({s->mod(j + 2 - slen), slen});  // into J
            return v;
          };
          for (int plen = 0; plen <= 3; ++plen)
            for (const Interval& pre : pres(plen))
              for (const Interval& suc : sucs(3 - plen))
                out.push_back(CurveName::genus2(pre, J, suc, sg));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void build_universe() {
    if (universe_built) return;
    for (const CurveName& nm : raw_names()) {
      auto c = build_raw(nm);
      if (!c) {
        rejected.push_back(nm);
        continue;
      }
      if (!is_essential(*s, *c)) {
        rejected.push_back(nm);
        continue;
      }
      Fp fp = fingerprint(*c);
      auto& bucket = buckets[fp];
      int found = -1;
      for (int idx : bucket)
        if (isotop(*c, uni_curves[idx])) {
          found = idx;
          break;
        }
      if (found >= 0) {
        aliases.push_back({nm, uni_names[found]});
      } else {
        int idx = static_cast<int>(uni_names.size());
        uni_names.push_back(nm);
        uni_curves.push_back(*c);
        bucket.push_back(idx);
      }
    }
    universe_built = true;
  }

  int universe_index_of(const Curve& c) {
    build_universe();
    Fp fp = fingerprint(c);
    auto it = buckets.find(fp);
    if (it == buckets.end()) return -1;
    for (int idx : it->second)
      if (isotop(c, uni_curves[idx])) return idx;
    return -1;
  }
};

Workspace::Workspace(int genus, int jobs)
    : genus_(genus), jobs_(jobs), surface_(std::make_unique<ChainSurface>(genus)) {
  if (genus < 3) throw std::invalid_argument("curve families need genus >= 3");
  impl_ = std::make_unique<Impl>();
  impl_->ws = this;
  impl_->s = surface_.get();
  impl_->n = n();
  for (int k = 0; k < n(); ++k)
    impl_->chain_reps.push_back(Curve::chain_curve(*surface_, k));
}

Workspace::~Workspace() = default;

std::optional<Curve> Workspace::build_raw(const CurveName& name) {
  return impl_->build_raw(name);
}

const std::vector<std::pair<CurveName, CurveName>>& Workspace::aliases() {
  impl_->build_universe();
  return impl_->aliases;
}

const std::vector<CurveName>& Workspace::rejected_names() {
  impl_->build_universe();
  return impl_->rejected;
}

const NamedCurveSet& Workspace::set(SetKind k) {
  auto it = impl_->sets.find(k);
  if (it != impl_->sets.end()) return it->second;
  impl_->build_universe();
  using F = CurveName::Family;
  auto member = [&](F f) {
    switch (k) {
      case SetKind::Y: return true;
      case SetKind::Ys: return f == F::Sep || f == F::GenusOne || f == F::GenusTwo;
      case SetKind::X: return f != F::GenusTwo;
      case SetKind::Xs: return f == F::Sep || f == F::GenusOne;
    }
    return false;
  };
  NamedCurveSet out;
  out.genus = genus_;
  out.kind = k;
  for (size_t i = 0; i < impl_->uni_names.size(); ++i) {
    if (!member(impl_->uni_names[i].family)) continue;
    out.index_of[impl_->uni_names[i].str(n())] = out.size();
    out.names.push_back(impl_->uni_names[i]);
    out.curves.push_back(impl_->uni_curves[i]);
  }
  return impl_->sets.emplace(k, std::move(out)).first->second;
}

const IncidenceTable& Workspace::table(SetKind k) {
  auto it = impl_->tables.find(k);
  if (it != impl_->tables.end()) return it->second;
  const NamedCurveSet& st = set(k);
  IncidenceTable t;
  for (const CurveName& nm : st.names) t.names.push_back(nm.str(n()));
  int m = st.size();
  t.value.assign(m, std::vector<int>(m, 0));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.push_back({i, j});
  parallel_for(static_cast<int>(pairs.size()), jobs_, [&](int p) {
    auto [i, j] = pairs[p];
    int v = impl_->isect(st.curves[i], st.curves[j]);
    t.value[i][j] = t.value[j][i] = v;
  });
  return impl_->tables.emplace(k, std::move(t)).first->second;
}

int Workspace::intersection(const Curve& a, const Curve& b) {
  return impl_->isect(a, b);
}
bool Workspace::isotopic(const Curve& a, const Curve& b) {
  return impl_->isotop(a, b);
}

const CellMap& Workspace::cell_map(Sym which) {
  int key = static_cast<int>(which);
  auto it = impl_->cmaps.find(key);
  if (it != impl_->cmaps.end()) return it->second;
  CellMap m = which == Sym::R   ? symmetry_r(*surface_)
              : which == Sym::S ? symmetry_s(*surface_)
                                : symmetry_iota(*surface_);
  return impl_->cmaps.emplace(key, std::move(m)).first->second;
}

std::vector<int> Workspace::symmetry(SetKind k, Sym which) {
  const NamedCurveSet& st = set(k);
  const CellMap& m = cell_map(which);
  std::vector<int> perm(st.size(), -1);
  for (int i = 0; i < st.size(); ++i) {
    Curve img = transport(m, st.curves[i]).normalized(*surface_);
    int uidx = impl_->universe_index_of(img);
    SCC_CHECK(uidx >= 0, "symmetry image matches no canonical name");
    int j = st.find(impl_->uni_names[uidx]);
    SCC_CHECK(j >= 0, "symmetry image left the set");
    perm[i] = j;
  }
  std::vector<char> seen(st.size(), 0);
  for (int v : perm) {
    SCC_CHECK(v >= 0 && !seen[v], "symmetry is not a permutation");
    seen[v] = 1;
  }
  return perm;
}

int Workspace::universe_index_of(const Curve& c) {
  return impl_->universe_index_of(c);
}
const CurveName& Workspace::universe_name(int idx) { return impl_->uni_names[idx]; }
const Curve& Workspace::universe_curve(int idx) { return impl_->uni_curves[idx]; }

}  // namespace scc
