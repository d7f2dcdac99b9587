#include "hyperconv/convergence.hpp"

#include <algorithm>
#include <memory>

namespace hyperconv {

namespace {
void check_enumerable(int m, const char* what) {
  if (m > kKernelEnumCap)
    fail(ErrorKind::CarrierTooLarge, std::string(what) + " needs kernel enumeration; carrier has " +
                                         std::to_string(m) + " elements");
}

std::string mask_str(Mask64 k) {
  std::string s = "{";
  bool first = true;
  for_each_bit(k, [&](int i) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}
}  // namespace

Convergence::Convergence(int carrier_size, Rule rule) : m_(carrier_size), rule_(std::move(rule)) {
  if (carrier_size < 0 || carrier_size > 64)
    fail(ErrorKind::CarrierTooLarge, "carrier size " + std::to_string(carrier_size));
}

Convergence Convergence::from_table(int carrier_size, std::vector<Mask64> lim_by_kernel) {
  if (carrier_size > kKernelEnumCap) fail(ErrorKind::CarrierTooLarge, "tabulated carrier too large");
  size_t need = size_t{1} << carrier_size;
  if (lim_by_kernel.size() != need) fail(ErrorKind::BadInput, "table must cover every kernel");
  auto table = std::make_shared<std::vector<Mask64>>(std::move(lim_by_kernel));
  Convergence c(carrier_size, [table](Mask64 k) { return (*table)[static_cast<size_t>(k)]; });
  c.validate();
  return c;
}

Convergence Convergence::chaotic(int carrier_size) {
  Mask64 all = full_mask(carrier_size);
  return Convergence(carrier_size, [all](Mask64) { return all; });
}

Mask64 Convergence::lim(Mask64 kernel) const {
  if (kernel == 0) fail(ErrorKind::EmptyKernel, "lim of the degenerate filter");
  if (kernel & ~carrier_mask()) fail(ErrorKind::BadInput, "kernel outside carrier");
  return rule_(kernel) & carrier_mask();
}

void Convergence::validate() const {
  check_enumerable(m_, "validate");
  for (int x = 0; x < m_; ++x)
    if (!(lim(bit(x)) & bit(x)))
      fail(ErrorKind::NotCentered, "x=" + std::to_string(x));
  Mask64 all = carrier_mask();
  for (Mask64 k = 1; k <= all; ++k) {
    Mask64 lk = lim(k);
    for (int e = 0; e < m_; ++e) {
      if (k & bit(e)) continue;
      if (!subset(lim(k | bit(e)), lk))
        fail(ErrorKind::NotMonotone, "K=" + mask_str(k) + " K'=" + mask_str(k | bit(e)));
    }
  }
}

Convergence make_convergence(int carrier_size, const std::vector<std::pair<Mask64, Mask64>>& entries) {
  if (carrier_size > kKernelEnumCap) fail(ErrorKind::CarrierTooLarge, "explicit table too large");
  std::vector<Mask64> table(size_t{1} << carrier_size, 0);
  std::vector<bool> seen(table.size(), false);
  for (auto [k, l] : entries) {
    if (k == 0 || (k & ~full_mask(carrier_size))) fail(ErrorKind::BadInput, "bad kernel in table");
    table[static_cast<size_t>(k)] = l;
    seen[static_cast<size_t>(k)] = true;
  }
  for (Mask64 k = 1; k < table.size(); ++k)
    if (!seen[static_cast<size_t>(k)])
      fail(ErrorKind::BadInput, "table misses kernel " + mask_str(k));
  return Convergence::from_table(carrier_size, std::move(table));
}

Mask64 find_leq_violation(const Convergence& finer, const Convergence& coarser) {
  if (finer.size() != coarser.size()) fail(ErrorKind::ArityMismatch, "carrier sizes differ");
  check_enumerable(finer.size(), "convergence comparison");
  Mask64 all = finer.carrier_mask();
  for (Mask64 k = 1; k <= all; ++k)
    if (!subset(finer.lim(k), coarser.lim(k))) return k;
  return 0;
}

Mask64 find_equal_violation(const Convergence& a, const Convergence& b) {
  if (a.size() != b.size()) fail(ErrorKind::ArityMismatch, "carrier sizes differ");
  check_enumerable(a.size(), "convergence comparison");
  Mask64 all = a.carrier_mask();
  for (Mask64 k = 1; k <= all; ++k)
    if (a.lim(k) != b.lim(k)) return k;
  return 0;
}

bool convergence_leq(const Convergence& finer, const Convergence& coarser) {
  return find_leq_violation(finer, coarser) == 0;
}

bool convergence_equal(const Convergence& a, const Convergence& b) {
  return find_equal_violation(a, b) == 0;
}

AdherenceTable::AdherenceTable(const Convergence& conv) {
  check_enumerable(conv.size(), "adherence");
  per_element_.assign(static_cast<size_t>(conv.size()), 0);
  Mask64 all = conv.carrier_mask();
  for (Mask64 k = 1; k <= all; ++k) {
    Mask64 l = conv.lim(k);
    for_each_bit(k, [&](int e) { per_element_[static_cast<size_t>(e)] |= l; });
  }
}

Mask64 AdherenceTable::adherence(Mask64 s) const {
  Mask64 out = 0;
  for_each_bit(s, [&](int e) { out |= per_element_[static_cast<size_t>(e)]; });
  return out;
}

Mask64 adherence(const Convergence& conv, Mask64 s) { return AdherenceTable(conv).adherence(s); }

ConvergenceClass classify(const Convergence& conv) {
  check_enumerable(conv.size(), "classify");
  int m = conv.size();
  Mask64 all = conv.carrier_mask();
  std::vector<Mask64> point_lim(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) point_lim[static_cast<size_t>(x)] = conv.lim_point(x);

  ConvergenceClass out;
  out.pseudotopology = true;
  for (Mask64 k = 1; k <= all && out.pseudotopology; ++k) {
    Mask64 inter = all;
    for_each_bit(k, [&](int x) { inter &= point_lim[static_cast<size_t>(x)]; });
    if (conv.lim(k) != inter) out.pseudotopology = false;
  }

  Convergence p = reflect(conv, Reflection::P);
  out.pretopology = convergence_equal(conv, p);
  Convergence t = reflect(conv, Reflection::T);
  out.topology = convergence_equal(conv, t);
  return out;
}

Convergence reflect(const Convergence& conv, Reflection level) {
  int m = conv.size();
  Mask64 all = conv.carrier_mask();
  if (level == Reflection::P) {
    check_enumerable(m, "pretopological reflection");
    auto vicinity = std::make_shared<std::vector<Mask64>>(static_cast<size_t>(m), 0);
    for (Mask64 k = 1; k <= all; ++k) {
      Mask64 l = conv.lim(k);
      for_each_bit(l, [&](int x) { (*vicinity)[static_cast<size_t>(x)] |= k; });
    }
    return Convergence(m, [vicinity, all](Mask64 k) {
      Mask64 out = 0;
      for (size_t x = 0; x < vicinity->size(); ++x)
        if (subset(k, (*vicinity)[x])) out |= bit(static_cast<int>(x));
      return out & all;
    });
  }
  std::vector<Mask64> point_lims(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) point_lims[static_cast<size_t>(x)] = conv.lim_point(x);
  return topology_from_neighborhoods(t_reflection_neighborhoods(m, point_lims));
}

std::vector<Mask64> t_reflection_neighborhoods(int carrier_size, const std::vector<Mask64>& point_lims) {
  // opens of the reflection are the up-closed sets of x -> lim({x}); the
  // smallest one around x is the transitive closure of that relation
  int m = carrier_size;
  std::vector<Mask64> reach(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) reach[static_cast<size_t>(x)] = bit(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      Mask64 cur = reach[static_cast<size_t>(x)];
      Mask64 next = cur;
      for (int f = 0; f < m; ++f)
        if (point_lims[static_cast<size_t>(f)] & cur) next |= bit(f);
      if (next != cur) {
        reach[static_cast<size_t>(x)] = next;
        changed = true;
      }
    }
  }
  return reach;
}

Convergence topology_from_neighborhoods(std::vector<Mask64> neighborhoods) {
  int m = static_cast<int>(neighborhoods.size());
  auto nbhd = std::make_shared<std::vector<Mask64>>(std::move(neighborhoods));
  Mask64 all = full_mask(m);
  return Convergence(m, [nbhd, all](Mask64 k) {
    Mask64 out = 0;
    for (size_t x = 0; x < nbhd->size(); ++x)
      if (subset(k, (*nbhd)[x])) out |= bit(static_cast<int>(x));
    return out & all;
  });
}

Convergence initial(int carrier_size, const std::vector<std::vector<int>>& maps,
                    const std::vector<const Convergence*>& targets) {
  if (maps.size() != targets.size()) fail(ErrorKind::ArityMismatch, "one target per map");
  for (const auto& mp : maps)
    if (static_cast<int>(mp.size()) != carrier_size)
      fail(ErrorKind::ArityMismatch, "map not total on carrier");
  auto maps_p = std::make_shared<std::vector<std::vector<int>>>(maps);
  auto targets_p = std::make_shared<std::vector<const Convergence*>>(targets);
  return Convergence(carrier_size, [carrier_size, maps_p, targets_p](Mask64 k) {
    Mask64 out = full_mask(carrier_size);
    for (size_t i = 0; i < maps_p->size(); ++i) {
      const auto& mp = (*maps_p)[i];
      Mask64 image = 0;
      for_each_bit(k, [&](int e) { image |= bit(mp[static_cast<size_t>(e)]); });
      Mask64 tl = (*targets_p)[i]->lim(image);
      Mask64 keep = 0;
      for (int x = 0; x < carrier_size; ++x)
        if (tl & bit(mp[static_cast<size_t>(x)])) keep |= bit(x);
      out &= keep;
    }
    return out;
  });
}

int tightness_at(const Convergence& conv, int x) {
  if (conv.size() > 16) fail(ErrorKind::CarrierTooLarge, "tightness brute force capped at 16");
  AdherenceTable adh(conv);
  Mask64 all = conv.carrier_mask();
  for (int bound = 0; bound <= conv.size(); ++bound) {
    bool ok = true;
    for (Mask64 s = 1; s <= all && ok; ++s) {
      if (!(adh.adherence(s) & bit(x))) continue;
      bool witness = false;
      for (Mask64 sub = s; !witness; sub = (sub - 1) & s) {
        if (popcount(sub) <= bound && (adh.adherence(sub) & bit(x))) witness = true;
        if (sub == 0) break;
      }
      if (!witness) ok = false;
    }
    if (ok) return bound;
  }
  return conv.size();
}

}  // namespace hyperconv
