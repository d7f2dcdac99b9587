#include "hyperconv/region.hpp"

#include <algorithm>
#include <sstream>

#include "hyperconv/bits.hpp"

namespace hyperconv {

bool Cylinder::is_empty() const {
  for (const auto& c : comps)
    if (c.is_empty()) return true;
  return false;
}

bool Cylinder::contains(const std::vector<Rat>& v) const {
  for (size_t i = 0; i < comps.size(); ++i)
    if (!comps[i].contains(v[i])) return false;
  return true;
}

bool Cylinder::subset_of(const Cylinder& o) const {
  for (size_t i = 0; i < comps.size(); ++i)
    if (!comps[i].subset_of(o.comps[i])) return false;
  return true;
}

Region::Region(int dim, std::vector<Cylinder> cylinders) : dim_(dim), cylinders_(std::move(cylinders)) {
  for (const auto& c : cylinders_)
    if (c.dim() != dim_) fail(ErrorKind::ArityMismatch, "cylinder dimension mismatch");
  canonicalize();
}

void Region::canonicalize() {
  cylinders_.erase(
      std::remove_if(cylinders_.begin(), cylinders_.end(), [](const Cylinder& c) { return c.is_empty(); }),
      cylinders_.end());
  bool changed = true;
  while (changed) {
    changed = false;
    // merge cylinders that differ in at most one component
    for (size_t i = 0; i < cylinders_.size() && !changed; ++i) {
      for (size_t j = i + 1; j < cylinders_.size() && !changed; ++j) {
        int diff = -1;
        bool mergeable = true;
        for (int d = 0; d < dim_; ++d) {
          if (cylinders_[i].comps[static_cast<size_t>(d)] == cylinders_[j].comps[static_cast<size_t>(d)])
            continue;
          if (diff >= 0) {
            mergeable = false;
            break;
          }
          diff = d;
        }
        if (!mergeable) continue;
        if (diff < 0) {
          cylinders_.erase(cylinders_.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          cylinders_[i].comps[static_cast<size_t>(diff)] =
              cylinders_[i].comps[static_cast<size_t>(diff)].unite(
                  cylinders_[j].comps[static_cast<size_t>(diff)]);
          cylinders_.erase(cylinders_.begin() + static_cast<std::ptrdiff_t>(j));
        }
        changed = true;
      }
    }
    // drop cylinders absorbed by a single other cylinder
    for (size_t i = 0; i < cylinders_.size() && !changed; ++i) {
      for (size_t j = 0; j < cylinders_.size() && !changed; ++j) {
        if (i == j) continue;
        if (cylinders_[i].subset_of(cylinders_[j])) {
          cylinders_.erase(cylinders_.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      }
    }
  }
}

bool Region::contains(const std::vector<Rat>& v) const {
  for (const auto& c : cylinders_)
    if (c.contains(v)) return true;
  return false;
}

Region Region::unite(const Region& o) const {
  if (dim_ != o.dim_) fail(ErrorKind::ArityMismatch, "region dimension mismatch");
  std::vector<Cylinder> all = cylinders_;
  all.insert(all.end(), o.cylinders_.begin(), o.cylinders_.end());
  return Region(dim_, std::move(all));
}

Region Region::intersect(const Region& o) const {
  if (dim_ != o.dim_) fail(ErrorKind::ArityMismatch, "region dimension mismatch");
  std::vector<Cylinder> out;
  for (const auto& a : cylinders_) {
    for (const auto& b : o.cylinders_) {
      Cylinder c;
      c.comps.reserve(static_cast<size_t>(dim_));
      for (int d = 0; d < dim_; ++d)
        c.comps.push_back(a.comps[static_cast<size_t>(d)].intersect(b.comps[static_cast<size_t>(d)]));
      out.push_back(std::move(c));
    }
  }
  return Region(dim_, std::move(out));
}

std::string Region::describe() const {
  if (cylinders_.empty()) return "empty";
  std::ostringstream os;
  for (size_t i = 0; i < cylinders_.size(); ++i) {
    if (i) os << " | ";
    os << "(";
    for (int d = 0; d < dim_; ++d) {
      if (d) os << " x ";
      os << cylinders_[i].comps[static_cast<size_t>(d)].describe();
    }
    os << ")";
  }
  return os.str();
}

namespace {

// Atoms of the refinement grid on one axis: gaps and endpoint singletons of
// the union of both regions' endpoints. Membership of an interval set is
// constant on each atom, so one representative decides it.
std::vector<Rat> axis_representatives(const Region& a, const Region& b, int d) {
  std::vector<Rat> ends;
  auto collect = [&](const Region& r) {
    for (const auto& c : r.cylinders()) {
      auto e = c.comps[static_cast<size_t>(d)].endpoints();
      ends.insert(ends.end(), e.begin(), e.end());
    }
  };
  collect(a);
  collect(b);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Rat> reps;
  if (ends.empty()) {
    reps.push_back(0);
    return reps;
  }
  reps.push_back(ends.front() - 1);
  for (size_t i = 0; i < ends.size(); ++i) {
    reps.push_back(ends[i]);
    if (i + 1 < ends.size()) reps.push_back((ends[i] + ends[i + 1]) / 2);
  }
  reps.push_back(ends.back() + 1);
  return reps;
}

// Per axis and grid atom, the set of cylinders whose constraint holds there.
// Membership is constant on atoms, so the rational tests happen once; the
// tuple sweep is pure bit work.
std::vector<std::vector<Mask64>> cylinder_atom_masks(const Region& r,
                                                     const std::vector<std::vector<Rat>>& reps) {
  int dim = r.dim();
  std::vector<std::vector<Mask64>> out(static_cast<size_t>(dim));
  for (int d = 0; d < dim; ++d) {
    out[static_cast<size_t>(d)].assign(reps[static_cast<size_t>(d)].size(), 0);
    for (size_t c = 0; c < r.cylinders().size(); ++c) {
      const IntervalSet& cs = r.cylinders()[c].comps[static_cast<size_t>(d)];
      for (size_t k = 0; k < reps[static_cast<size_t>(d)].size(); ++k)
        if (cs.contains(reps[static_cast<size_t>(d)][k]))
          out[static_cast<size_t>(d)][k] |= Mask64{1} << c;
    }
  }
  return out;
}

bool subset_by_grid(const Region& a, const Region& b) {
  int dim = a.dim();
  if (dim == 0) return a.is_empty() || !b.is_empty();
  if (a.cylinders().size() > 64 || b.cylinders().size() > 64)
    fail(ErrorKind::SizeTooLarge, "region comparison capped at 64 cylinders");
  std::vector<std::vector<Rat>> reps;
  for (int d = 0; d < dim; ++d) reps.push_back(axis_representatives(a, b, d));
  auto am = cylinder_atom_masks(a, reps);
  auto bm = cylinder_atom_masks(b, reps);
  std::vector<size_t> idx(static_cast<size_t>(dim), 0);
  while (true) {
    Mask64 in_a = ~Mask64{0}, in_b = ~Mask64{0};
    for (int d = 0; d < dim; ++d) {
      in_a &= am[static_cast<size_t>(d)][idx[static_cast<size_t>(d)]];
      in_b &= bm[static_cast<size_t>(d)][idx[static_cast<size_t>(d)]];
    }
    if (a.cylinders().empty()) in_a = 0;
    if (b.cylinders().empty()) in_b = 0;
    in_a &= full_mask(static_cast<int>(a.cylinders().size()));
    in_b &= full_mask(static_cast<int>(b.cylinders().size()));
    if (in_a && !in_b) return false;
    int d = 0;
    for (; d < dim; ++d) {
      if (++idx[static_cast<size_t>(d)] < reps[static_cast<size_t>(d)].size()) break;
      idx[static_cast<size_t>(d)] = 0;
    }
    if (d == dim) break;
  }
  return true;
}

}  // namespace

bool region_subset(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::ArityMismatch, "region dimension mismatch");
  return subset_by_grid(a, b);
}

bool region_equal(const Region& a, const Region& b) { return region_subset(a, b) && region_subset(b, a); }

Region region_affine(const Region& r, const Rat& scale, const Rat& shift) {
  std::vector<Cylinder> out;
  for (const auto& c : r.cylinders()) {
    Cylinder n;
    for (const auto& comp : c.comps) n.comps.push_back(comp.affine(scale, shift));
    out.push_back(std::move(n));
  }
  return Region(r.dim(), std::move(out));
}

}  // namespace hyperconv
