#include "hyperconv/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hyperconv {

OpensLattice::OpensLattice(const FiniteSpace& space) : space_(&space) {
  int k = space.open_count();
  if (k > 64) fail(ErrorKind::CarrierTooLarge, "more than 64 opens");
  sup_.assign(static_cast<size_t>(k), 0);
  sub_.assign(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (subset(space.open_at(i), space.open_at(j))) {
        sup_[static_cast<size_t>(i)] |= bit(j);
        sub_[static_cast<size_t>(j)] |= bit(i);
      }
    }
  }
}

Mask64 OpensLattice::opens_containing(PointSet s) const {
  Mask64 out = 0;
  for (int i = 0; i < size(); ++i)
    if (subset(s, space_->open_at(i))) out |= bit(i);
  return out;
}

Mask64 OpensLattice::up_close(Mask64 family) const {
  Mask64 out = 0;
  for_each_bit(family, [&](int i) { out |= sup_[static_cast<size_t>(i)]; });
  return out;
}

Mask64 OpensLattice::down_close(Mask64 family) const {
  Mask64 out = 0;
  for_each_bit(family, [&](int i) { out |= sub_[static_cast<size_t>(i)]; });
  return out;
}

PointSet OpensLattice::union_of(Mask64 family) const {
  PointSet out = 0;
  for_each_bit(family, [&](int i) { out |= space_->open_at(i); });
  return out;
}

PointSet OpensLattice::intersection_of(Mask64 family) const {
  PointSet out = space_->all_points();
  for_each_bit(family, [&](int i) { out &= space_->open_at(i); });
  return out;
}

IsotoneFamily IsotoneFamily::from_minimals(const FiniteSpace& space, std::vector<PointSet> minimals) {
  if (space.open_count() == 0) fail(ErrorKind::EmptySpace, "space has no opens");
  for (PointSet m : minimals)
    if (!space.is_open(m)) fail(ErrorKind::NotIsotone, "minimal element is not open");
  // antichain reduction
  std::sort(minimals.begin(), minimals.end());
  minimals.erase(std::unique(minimals.begin(), minimals.end()), minimals.end());
  std::vector<PointSet> reduced;
  for (size_t i = 0; i < minimals.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < minimals.size(); ++j)
      if (i != j && subset(minimals[j], minimals[i]) && minimals[j] != minimals[i]) dominated = true;
    if (!dominated) reduced.push_back(minimals[i]);
  }
  IsotoneFamily f;
  f.space_ = &space;
  f.minimals_ = std::move(reduced);
  return f;
}

IsotoneFamily IsotoneFamily::from_generators(const FiniteSpace& space, std::span<const PointSet> generators) {
  std::vector<PointSet> mins;
  mins.reserve(generators.size());
  for (PointSet d : generators) mins.push_back(space.up_closure(d));
  return from_minimals(space, std::move(mins));
}

IsotoneFamily IsotoneFamily::from_members(const OpensLattice& lat, Mask64 members) {
  if (!lat.is_up_closed(members)) fail(ErrorKind::NotIsotone, "member set is not up-closed");
  std::vector<PointSet> mins;
  for_each_bit(members, [&](int i) {
    if ((lat.subsets(i) & members) == bit(i)) mins.push_back(lat.space().open_at(i));
  });
  return from_minimals(lat.space(), std::move(mins));
}

bool IsotoneFamily::contains(PointSet open) const {
  for (PointSet m : minimals_)
    if (subset(m, open)) return true;
  return false;
}

Mask64 IsotoneFamily::members(const OpensLattice& lat) const {
  Mask64 out = 0;
  for (PointSet m : minimals_) out |= lat.supersets(lat.space().open_index(m));
  return out;
}

IsotoneFamily IsotoneFamily::intersect(const IsotoneFamily& other) const {
  OpensLattice lat(*space_);
  return from_members(lat, members(lat) & other.members(lat));
}

std::string IsotoneFamily::describe() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < minimals_.size(); ++i) {
    if (i) os << ",";
    os << "{";
    bool first = true;
    for_each_bit(minimals_[i], [&](int p) {
      if (!first) os << ",";
      os << p;
      first = false;
    });
    os << "}";
  }
  os << ">";
  return os.str();
}

namespace {
void antichain_rec(const OpensLattice& lat, int idx, Mask64 chosen, std::vector<Mask64>& out) {
  if (idx == lat.size()) {
    out.push_back(chosen);
    return;
  }
  antichain_rec(lat, idx + 1, chosen, out);
  if ((chosen & (lat.supersets(idx) | lat.subsets(idx))) == 0)
    antichain_rec(lat, idx + 1, chosen | bit(idx), out);
}
}  // namespace

std::vector<Mask64> all_antichain_masks(const OpensLattice& lat) {
  std::vector<Mask64> out;
  antichain_rec(lat, 0, 0, out);
  return out;
}

std::vector<Mask64> all_up_sets(const OpensLattice& lat) {
  std::vector<Mask64> out;
  for (Mask64 a : all_antichain_masks(lat)) out.push_back(lat.up_close(a));
  return out;
}

bool is_compact_family(const IsotoneFamily& family) {
  OpensLattice lat(family.space());
  for (Mask64 b : all_antichain_masks(lat)) {
    if (!family.contains(lat.union_of(b))) continue;
    bool has_finite = false;
    Mask64 s = 0;
    while (true) {  // all submasks of b
      if (family.contains(lat.union_of(s))) {
        has_finite = true;
        break;
      }
      if (s == b) break;
      s = (s - b) & b;
    }
    if (!has_finite) return false;
  }
  return true;
}

bool AlphaCollection::non_degenerate() const {
  for (const auto& f : families)
    if (!f.is_empty()) return true;
  return false;
}

bool AlphaCollection::contains(const IsotoneFamily& f) const {
  return std::binary_search(families.begin(), families.end(), f);
}

AlphaCollection make_alpha(const FiniteSpace& space, std::vector<IsotoneFamily> families, std::string label) {
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  return AlphaCollection{&space, std::move(families), std::move(label)};
}

bool is_compact_subset(const FiniteSpace& space, PointSet s) {
  OpensLattice lat(space);
  // a cover with no finite subcover would still lack one after dropping
  // non-maximal members, so antichain covers decide
  for (Mask64 cover : all_antichain_masks(lat)) {
    if (!subset(s, lat.union_of(cover))) continue;
    bool has_finite = false;
    Mask64 sub = cover;
    while (true) {
      if (subset(s, lat.union_of(sub))) {
        has_finite = true;
        break;
      }
      if (sub == 0) break;
      sub = (sub - 1) & cover;
    }
    if (!has_finite) return false;
  }
  return true;
}

namespace {

// Families generated by sets of subsets drawn from `pool`: for each
// subfamily F of pool, the union of O_X(F) over F.
std::vector<IsotoneFamily> generated_families(const FiniteSpace& space, const std::vector<PointSet>& pool) {
  if (pool.size() > 20) fail(ErrorKind::SizeTooLarge, "generator pool too large");
  OpensLattice lat(space);
  std::vector<Mask64> member_of_gen;
  member_of_gen.reserve(pool.size());
  for (PointSet d : pool) member_of_gen.push_back(lat.opens_containing(d));
  std::set<Mask64> seen;
  for (Mask64 f = 0; f < (Mask64{1} << pool.size()); ++f) {
    Mask64 members = 0;
    for_each_bit(f, [&](int i) { members |= member_of_gen[static_cast<size_t>(i)]; });
    seen.insert(members);
  }
  std::vector<IsotoneFamily> out;
  for (Mask64 m : seen) out.push_back(IsotoneFamily::from_members(lat, m));
  return out;
}

}  // namespace

StandardAlphas standard_alphas(const FiniteSpace& space) {
  if (space.points() > 4) fail(ErrorKind::SizeTooLarge, "standard collections computed for <= 4 points");
  std::vector<PointSet> all_subsets;
  for (PointSet s = 0; s <= space.all_points(); ++s) all_subsets.push_back(s);

  StandardAlphas out;
  out.p = make_alpha(space, generated_families(space, all_subsets), "p");

  std::vector<PointSet> compacts;
  for (PointSet s : all_subsets)
    if (is_compact_subset(space, s)) compacts.push_back(s);
  out.k = make_alpha(space, generated_families(space, compacts), "k");

  OpensLattice lat(space);
  std::vector<IsotoneFamily> kappa;
  for (Mask64 m : all_up_sets(lat)) {
    IsotoneFamily f = IsotoneFamily::from_members(lat, m);
    if (is_compact_family(f)) kappa.push_back(f);
  }
  out.kappa = make_alpha(space, std::move(kappa), "kappa");

  std::vector<IsotoneFamily> s_families;
  for (int x = 0; x < space.points(); ++x)
    s_families.push_back(IsotoneFamily::from_generators(space, std::vector<PointSet>{PointSet{1} << x}));
  std::sort(s_families.begin(), s_families.end());
  out.s = AlphaCollection{&space, std::move(s_families), "s"};  // one per point, not deduplicated
  return out;
}

AlphaCollection intersection_closure(const AlphaCollection& alpha) {
  std::vector<IsotoneFamily> fams = alpha.families;
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = fams.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        IsotoneFamily inter = fams[i].intersect(fams[j]);
        if (!std::binary_search(fams.begin(), fams.end(), inter)) {
          fams.push_back(inter);
          std::sort(fams.begin(), fams.end());
          changed = true;
        }
      }
    }
  }
  return AlphaCollection{alpha.space, std::move(fams), alpha.label + "^cap"};
}

bool collections_equal_as_sets(const AlphaCollection& a, const AlphaCollection& b) {
  auto fa = a.families, fb = b.families;
  std::sort(fa.begin(), fa.end());
  fa.erase(std::unique(fa.begin(), fa.end()), fa.end());
  std::sort(fb.begin(), fb.end());
  fb.erase(std::unique(fb.begin(), fb.end()), fb.end());
  return fa == fb;
}

HyperFilter make_hyperfilter(const FiniteSpace& space, Mask64 kernel) {
  if (kernel == 0) fail(ErrorKind::EmptyKernel, "hyperfilter kernel must be nonempty");
  if (kernel & ~full_mask(space.open_count())) fail(ErrorKind::BadInput, "kernel indexes missing opens");
  return HyperFilter{&space, kernel};
}

bool filter_leq(const HyperFilter& f, const HyperFilter& g) { return subset(g.kernel, f.kernel); }

HyperFilter filter_sup(const HyperFilter& f, const HyperFilter& g) {
  Mask64 k = f.kernel & g.kernel;
  if (k == 0) fail(ErrorKind::NoSupremum, "kernels are disjoint");
  return HyperFilter{f.space, k};
}

HyperFilter filter_inf(const HyperFilter& f, const HyperFilter& g) {
  return HyperFilter{f.space, f.kernel | g.kernel};
}

HyperFilter regularize(const OpensLattice& lat, const HyperFilter& f) {
  return HyperFilter{f.space, lat.up_close(f.kernel)};
}

bool mesh(std::span<const PointSet> a, std::span<const PointSet> b) {
  for (PointSet x : a)
    for (PointSet y : b)
      if (!(x & y)) return false;
  return true;
}

bool mesh(PointSet a, std::span<const PointSet> b) {
  PointSet one[] = {a};
  return mesh(std::span<const PointSet>(one), b);
}

bool mesh_hyper(Mask64 r, std::span<const Mask64> collection) {
  for (Mask64 c : collection)
    if (!(r & c)) return false;
  return true;
}

bool mesh_hyper(const HyperFilter& f, const HyperFilter& g) { return (f.kernel & g.kernel) != 0; }

bool refines(const OpensLattice& lat, Mask64 p, Mask64 r) {
  bool ok = true;
  for_each_bit(p, [&](int i) {
    if (!(lat.supersets(i) & r)) ok = false;
  });
  return ok;
}

IdealOps ideal_ops(const OpensLattice& lat, Mask64 p) {
  IdealOps out;
  if (p == 0) return out;  // no member dominates the empty union
  const FiniteSpace& X = lat.space();
  auto dominated = [&](PointSet u) {
    bool found = false;
    for_each_bit(p, [&](int i) {
      if (subset(u, X.open_at(i))) found = true;
    });
    return found;
  };
  // pairwise domination extends to all finite subfamilies
  out.is_ideal_subbase = true;
  for_each_bit(p, [&](int i) {
    for_each_bit(p, [&](int j) {
      if (!dominated(X.open_at(i) | X.open_at(j))) out.is_ideal_subbase = false;
    });
  });
  Mask64 closure = p;
  bool changed = true;
  while (changed) {
    changed = false;
    Mask64 next = closure;
    for_each_bit(closure, [&](int i) {
      for_each_bit(closure, [&](int j) {
        int u = X.open_index(X.open_at(i) | X.open_at(j));
        next |= bit(u);
      });
    });
    if (next != closure) {
      closure = next;
      changed = true;
    }
  }
  out.ideal_closure = closure;
  return out;
}

Mask64 reduced_ideal(const OpensLattice& lat, const HyperFilter& f) {
  const FiniteSpace& X = lat.space();
  PointSet base = lat.intersection_of(f.kernel);
  // intersections over supersets of the kernel; members of the kernel never
  // cut below base, so closing the whole opens family under intersection
  // and meeting it with base covers every superset choice
  std::set<PointSet> inters = {X.all_points()};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PointSet> cur(inters.begin(), inters.end());
    for (PointSet a : cur)
      for (PointSet u : X.opens())
        if (inters.insert(a & u).second) changed = true;
  }
  Mask64 out = 0;
  for (PointSet a : inters) out |= bit(X.open_index(base & a));
  out |= bit(X.open_index(base));
  return out;
}

FunctionalSeparation is_functionally_separated(const IsotoneFamily& family) {
  const FiniteSpace& X = family.space();
  FunctionalSeparation out;
  out.separated = true;
  // Larger members only relax the requirement, so minimal members decide.
  for (PointSet o : family.minimals()) {
    bool found = false;
    for (PointSet a : family.minimals()) {
      if (subset(X.saturation(a), o)) {
        SeparationWitness w;
        w.member = o;
        w.inner = a;
        PointSet sat = X.saturation(a);
        for (PointSet block : X.components()) w.h.push_back(subset(block, sat) ? 0 : 1);
        out.witnesses.push_back(std::move(w));
        found = true;
        break;
      }
    }
    if (!found) {
      out.separated = false;
      out.witnesses.clear();
      return out;
    }
  }
  return out;
}

}  // namespace hyperconv
