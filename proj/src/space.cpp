#include "hyperconv/space.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hyperconv {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::InconsistentSpec: return "InconsistentSpec";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::NotCentered: return "NotCentered";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DegenerateAlpha: return "DegenerateAlpha";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::EmptyKernel: return "EmptyKernel";
    case ErrorKind::NoSupremum: return "NoSupremum";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::NotIsotone: return "NotIsotone";
    case ErrorKind::EmptyBase: return "EmptyBase";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::NotSolid: return "NotSolid";
    case ErrorKind::NonPositiveSlope: return "NonPositiveSlope";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Error";
}

namespace {
constexpr int kMaxPoints = 20;

std::string set_to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}
}  // namespace

FiniteSpace FiniteSpace::from_opens(int points, std::vector<PointSet> opens) {
  if (points < 0 || points > kMaxPoints) fail(ErrorKind::SizeTooLarge, "point count " + std::to_string(points));
  const PointSet full = static_cast<PointSet>(full_mask(points));
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (PointSet u : opens)
    if (u & ~full) fail(ErrorKind::InconsistentSpec, "open set " + set_to_string(u) + " out of range");
  if (opens.empty() || opens.front() != 0)
    fail(ErrorKind::NotATopology, "empty set missing");
  if (opens.back() != full)
    fail(ErrorKind::NotATopology, "full set missing");
  auto is_member = [&](PointSet s) {
    return std::binary_search(opens.begin(), opens.end(), s);
  };
  for (size_t i = 0; i < opens.size(); ++i) {
    for (size_t j = i + 1; j < opens.size(); ++j) {
      if (!is_member(opens[i] | opens[j]))
        fail(ErrorKind::NotATopology,
             "union " + set_to_string(opens[i]) + " | " + set_to_string(opens[j]) + " escapes");
      if (!is_member(opens[i] & opens[j]))
        fail(ErrorKind::NotATopology,
             "intersection " + set_to_string(opens[i]) + " & " + set_to_string(opens[j]) + " escapes");
    }
  }
  FiniteSpace s;
  s.n_ = points;
  s.opens_ = std::move(opens);
  s.finish();
  return s;
}

FiniteSpace FiniteSpace::from_preorder(int points, const std::vector<std::pair<int, int>>& le_edges) {
  if (points < 0 || points > kMaxPoints) fail(ErrorKind::SizeTooLarge, "point count " + std::to_string(points));
  std::vector<PointSet> above(static_cast<size_t>(points), 0);
  for (int x = 0; x < points; ++x) above[static_cast<size_t>(x)] = PointSet{1} << x;
  for (auto [a, b] : le_edges) {
    if (a < 0 || a >= points || b < 0 || b >= points)
      fail(ErrorKind::InconsistentSpec, "edge endpoint out of range");
    above[static_cast<size_t>(a)] |= PointSet{1} << b;
  }
  // reflexive-transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < points; ++x) {
      PointSet acc = above[static_cast<size_t>(x)];
      for_each_bit(acc, [&](int y) { acc |= above[static_cast<size_t>(y)]; });
      if (acc != above[static_cast<size_t>(x)]) {
        above[static_cast<size_t>(x)] = acc;
        changed = true;
      }
    }
  }
  const PointSet full = static_cast<PointSet>(full_mask(points));
  std::vector<PointSet> opens;
  for (PointSet s = 0;; ++s) {
    bool up_closed = true;
    for_each_bit(s, [&](int x) {
      if (!subset(above[static_cast<size_t>(x)], s)) up_closed = false;
    });
    if (up_closed) opens.push_back(s);
    if (s == full) break;
  }
  FiniteSpace sp;
  sp.n_ = points;
  sp.opens_ = std::move(opens);
  sp.finish();
  return sp;
}

FiniteSpace FiniteSpace::sierpinski() { return from_opens(2, {0u, 2u, 3u}); }

FiniteSpace FiniteSpace::discrete(int n) { return from_preorder(n, {}); }

FiniteSpace FiniteSpace::indiscrete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, j);
  return from_preorder(n, edges);
}

FiniteSpace FiniteSpace::chain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i + 1, i);
  return from_preorder(n, edges);
}

void FiniteSpace::finish() {
  core_.assign(static_cast<size_t>(n_), all_points());
  for (int x = 0; x < n_; ++x) {
    for (PointSet u : opens_)
      if ((u >> x) & 1u) core_[static_cast<size_t>(x)] &= u;
  }
  comp_of_.assign(static_cast<size_t>(n_), -1);
  components_.clear();
  for (int x = 0; x < n_; ++x) {
    if (comp_of_[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(components_.size());
    PointSet block = 0;
    std::vector<int> stack = {x};
    comp_of_[static_cast<size_t>(x)] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      block |= PointSet{1} << y;
      for (int z = 0; z < n_; ++z) {
        if (comp_of_[static_cast<size_t>(z)] < 0 && (leq(y, z) || leq(z, y))) {
          comp_of_[static_cast<size_t>(z)] = id;
          stack.push_back(z);
        }
      }
    }
    components_.push_back(block);
  }
}

int FiniteSpace::open_index(PointSet s) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), s);
  if (it == opens_.end() || *it != s) return -1;
  return static_cast<int>(it - opens_.begin());
}

PointSet FiniteSpace::interior(PointSet s) const {
  PointSet out = 0;
  for (PointSet u : opens_)
    if (subset(u, s)) out |= u;
  return out;
}

PointSet FiniteSpace::closure(PointSet s) const {
  return all_points() & ~interior(all_points() & ~s);
}

PointSet FiniteSpace::up_closure(PointSet s) const {
  PointSet out = 0;
  for_each_bit(s, [&](int x) { out |= core_[static_cast<size_t>(x)]; });
  return out;
}

PointSet FiniteSpace::saturation(PointSet s) const {
  PointSet out = 0;
  for (PointSet block : components_)
    if (block & s) out |= block;
  return out;
}

SeparationProfile FiniteSpace::separation_profile() const {
  SeparationProfile p;
  p.t0 = true;
  p.t1 = true;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (x == y) continue;
      if (leq(x, y)) p.t1 = false;
      if (leq(x, y) && leq(y, x)) p.t0 = false;
    }
  }
  // Any open neighborhood of a set contains its up-closure, so disjoint
  // closed sets are separable iff their up-closures are disjoint.
  p.normal = true;
  for (PointSet u : opens_) {
    for (PointSet v : opens_) {
      PointSet c = all_points() & ~u;
      PointSet d = all_points() & ~v;
      if (c & d) continue;
      if (up_closure(c) & up_closure(d)) p.normal = false;
    }
  }
  return p;
}

bool FiniteSpace::regular() const {
  for (int x = 0; x < n_; ++x)
    if (closure(core(x)) != core(x)) return false;
  return true;
}

std::string FiniteSpace::describe() const {
  std::ostringstream os;
  os << "{n=" << n_ << "; opens=[";
  for (size_t i = 0; i < opens_.size(); ++i) {
    if (i) os << ",";
    os << set_to_string(opens_[i]);
  }
  os << "]}";
  return os.str();
}

PointSet ContinuousMap::preimage(PointSet target_set) const {
  PointSet out = 0;
  for (int x = 0; x < source->points(); ++x)
    if ((target_set >> table[static_cast<size_t>(x)]) & 1u) out |= PointSet{1} << x;
  return out;
}

PointSet ContinuousMap::image(PointSet source_set) const {
  PointSet out = 0;
  for_each_bit(source_set, [&](int x) { out |= PointSet{1} << table[static_cast<size_t>(x)]; });
  return out;
}

bool is_continuous(const FiniteSpace& X, const FiniteSpace& Z, const std::vector<std::uint8_t>& table) {
  ContinuousMap f{&X, &Z, table};
  for (PointSet v : Z.opens())
    if (!X.is_open(f.preimage(v))) return false;
  return true;
}

std::vector<ContinuousMap> continuous_maps(const FiniteSpace& X, const FiniteSpace& Z) {
  std::vector<ContinuousMap> out;
  if (Z.points() == 0) {
    if (X.points() == 0) out.push_back({&X, &Z, {}});
    return out;
  }
  double count = 1;
  for (int i = 0; i < X.points(); ++i) count *= Z.points();
  if (count > 2e6) fail(ErrorKind::SizeTooLarge, "function carrier too large");
  std::vector<std::uint8_t> table(static_cast<size_t>(X.points()), 0);
  while (true) {
    if (is_continuous(X, Z, table)) out.push_back({&X, &Z, table});
    int i = 0;
    for (; i < X.points(); ++i) {
      if (++table[static_cast<size_t>(i)] < Z.points()) break;
      table[static_cast<size_t>(i)] = 0;
    }
    if (i == X.points()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  std::vector<std::uint8_t> table(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) table[i] = g.table[f.table[i]];
  return {f.source, g.target, std::move(table)};
}

FiniteSpace product(const FiniteSpace& X, const FiniteSpace& Y) {
  int nx = X.points(), ny = Y.points();
  if (nx * ny > 16) fail(ErrorKind::SizeTooLarge, "product too large");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < nx; ++x)
    for (int x2 = 0; x2 < nx; ++x2)
      for (int y = 0; y < ny; ++y)
        for (int y2 = 0; y2 < ny; ++y2)
          if (X.leq(x, x2) && Y.leq(y, y2)) edges.emplace_back(x * ny + y, x2 * ny + y2);
  return FiniteSpace::from_preorder(nx * ny, edges);
}

FiniteSpace space_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::BadInput, e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_number_integer())
    fail(ErrorKind::BadInput, "expected {\"points\": n, \"opens\"|\"le\": [...]}");
  int n = j["points"].get<int>();
  if (n < 0 || n > kMaxPoints) fail(ErrorKind::SizeTooLarge, "points " + std::to_string(n));
  if (j.contains("opens")) {
    std::vector<PointSet> opens;
    for (const auto& arr : j["opens"]) {
      PointSet s = 0;
      for (const auto& v : arr) {
        int p = v.get<int>();
        if (p < 0 || p >= n) fail(ErrorKind::BadInput, "point id " + std::to_string(p) + " out of range");
        s |= PointSet{1} << p;
      }
      opens.push_back(s);
    }
    return FiniteSpace::from_opens(n, std::move(opens));
  }
  if (j.contains("le")) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["le"]) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::BadInput, "le entries must be pairs");
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorKind::BadInput, "point id out of range in le");
      edges.emplace_back(a, b);
    }
    return FiniteSpace::from_preorder(n, edges);
  }
  fail(ErrorKind::BadInput, "need \"opens\" or \"le\"");
}

std::string space_to_json(const FiniteSpace& space) {
  nlohmann::json j;
  j["points"] = space.points();
  auto& arr = j["opens"] = nlohmann::json::array();
  for (PointSet u : space.opens()) {
    nlohmann::json a = nlohmann::json::array();
    for_each_bit(u, [&](int i) { a.push_back(i); });
    arr.push_back(a);
  }
  return j.dump();
}

}  // namespace hyperconv
