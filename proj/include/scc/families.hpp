#pragma once
// The named curve families on the chain surface: chain curves C, separating
// curves S = {s_J}, bounding-pair curves B = {b_J^+-}, genus-1 curves U and
// genus-2 curves V, assembled into the sets Y, Y^s, X, X^s with isotopy-level
// deduplication, alias records and the symmetries r, s, iota.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scc/engine.hpp"

namespace scc {

// Cyclic interval [start, start+len-1] in Z/(2g+2).
struct Interval {
  int start = 0;
  int len = 0;
  bool empty() const { return len == 0; }
  int end(int n) const { return ((start + len - 1) % n + n) % n; }
  bool contains(int k, int n) const {
    if (len == 0) return false;
    int d = ((k - start) % n + n) % n;
    return d < len;
  }
  std::vector<int> members(int n) const {
    std::vector<int> out;
    for (int t = 0; t < len; ++t) out.push_back((start + t) % n);
    return out;
  }
  auto operator<=>(const Interval&) const = default;
};

struct CurveName {
  enum class Family { Chain = 0, Sep = 1, BP = 2, GenusOne = 3, GenusTwo = 4 };
  Family family = Family::Chain;
  int index = -1;     // Chain
  Interval J;         // Sep, BP, GenusOne, GenusTwo
  int sign = 0;       // BP/GenusOne/GenusTwo: +1 or -1
  int attach = -1;    // GenusOne: chain index glued to b_J
  Interval pre, suc;  // GenusTwo: intervals with endpoint i-1 resp. j+1

  auto key() const {
    return std::tuple(static_cast<int>(family), index, J, -sign, attach, pre, suc);
  }
  bool operator<(const CurveName& o) const { return key() < o.key(); }
  bool operator==(const CurveName& o) const { return key() == o.key(); }
  std::string str(int n) const;

  static CurveName chain(int i) {
    CurveName c;
    c.family = Family::Chain;
    c.index = i;
    return c;
  }
  static CurveName sep(Interval J) {
    CurveName c;
    c.family = Family::Sep;
    c.J = J;
    return c;
  }
  static CurveName bp(Interval J, int sign) {
    CurveName c;
    c.family = Family::BP;
    c.J = J;
    c.sign = sign;
    return c;
  }
  static CurveName genus1(int attach, Interval J, int sign) {
    CurveName c;
    c.family = Family::GenusOne;
    c.attach = attach;
    c.J = J;
    c.sign = sign;
    return c;
  }
  static CurveName genus2(Interval pre, Interval J, Interval suc, int sign) {
    CurveName c;
    c.family = Family::GenusTwo;
    c.pre = pre;
    c.J = J;
    c.suc = suc;
    c.sign = sign;
    return c;
  }
};

enum class SetKind { Y, Ys, X, Xs };
SetKind parse_set_kind(const std::string& s);
std::string set_kind_name(SetKind k);

struct NamedCurveSet {
  int genus = 0;
  SetKind kind = SetKind::Y;
  std::vector<CurveName> names;  // canonical, sorted
  std::vector<Curve> curves;     // parallel to names
  std::map<std::string, int> index_of;

  int size() const { return static_cast<int>(names.size()); }
  int find(const CurveName& n) const;  // -1 if absent
  const Curve& curve_of(const CurveName& n) const;
};

struct IncidenceTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> value;  // symmetric, zero diagonal
  bool disjoint(int a, int b) const { return value[a][b] == 0; }
};

// Per-genus workspace: builds the deduplicated universe of named curves once,
// derives the four sets, and caches curves, intersection numbers and tables.
class Workspace {
 public:
  explicit Workspace(int genus, int jobs = 1);
  ~Workspace();

  int genus() const { return genus_; }
  int n() const { return 2 * genus_ + 2; }
  const ChainSurface& surface() const { return *surface_; }
  int jobs() const { return jobs_; }

  const NamedCurveSet& set(SetKind k);
  const IncidenceTable& table(SetKind k);

  // raw name -> canonical name for every generated family name
  const std::vector<std::pair<CurveName, CurveName>>& aliases();
  // generated names whose defining tuple failed the chain test
  const std::vector<CurveName>& rejected_names();

  // Builds the curve a raw family name denotes (before dedup).  Returns
  // nullopt when the defining tuple fails its chain check.
  std::optional<Curve> build_raw(const CurveName& name);

  // The induced permutation of canonical names of `set` under a symmetry.
  enum class Sym { R, S, Iota };
  std::vector<int> symmetry(SetKind k, Sym which);

  // memoized engine wrappers
  int intersection(const Curve& a, const Curve& b);
  bool isotopic(const Curve& a, const Curve& b);
  const CellMap& cell_map(Sym which);

  // canonical name of an arbitrary curve within the universe; -1 if no match
  int universe_index_of(const Curve& c);
  const CurveName& universe_name(int idx);
  const Curve& universe_curve(int idx);

 private:
  struct Impl;
  int genus_;
  int jobs_;
  std::unique_ptr<ChainSurface> surface_;
  std::unique_ptr<Impl> impl_;
};

// Deterministic parallel map over [0, n): results collected by index.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace scc
