#include "hyperconv/hyperspace.hpp"

#include <algorithm>
#include <memory>

namespace hyperconv {

HyperConvergence scott_convergence(const FiniteSpace& X) {
  auto lat = std::make_shared<OpensLattice>(X);
  Convergence conv(lat->size(), [lat](Mask64 k) {
    PointSet inter = lat->space().interior(lat->intersection_of(k));
    return lat->down_close(bit(lat->space().open_index(inter)));
  });
  return HyperConvergence{&X, std::move(conv), "scott"};
}

Mask64 scott_lim_full_union(const OpensLattice& lat, Mask64 kernel) {
  const FiniteSpace& X = lat.space();
  Mask64 rest = lat.all() & ~kernel;
  PointSet covered = 0;
  for_each_submask(rest, [&](Mask64 extra) {
    covered |= X.interior(lat.intersection_of(kernel | extra));
  });
  Mask64 out = 0;
  for (int i = 0; i < lat.size(); ++i)
    if (subset(X.open_at(i), covered)) out |= bit(i);
  return out;
}

HyperConvergence hyper_topology(const AlphaCollection& alpha) {
  if (!alpha.non_degenerate()) fail(ErrorKind::DegenerateAlpha, "no nonempty family in the collection");
  const FiniteSpace& X = *alpha.space;
  auto lat = std::make_shared<OpensLattice>(X);
  // smallest subbase-generated neighborhood per carrier point
  auto nbhd = std::make_shared<std::vector<Mask64>>(static_cast<size_t>(lat->size()), lat->all());
  for (const auto& fam : alpha.families) {
    Mask64 members = fam.members(*lat);
    for (int i = 0; i < lat->size(); ++i)
      if (members & bit(i)) (*nbhd)[static_cast<size_t>(i)] &= members;
  }
  Convergence conv(lat->size(), [lat, nbhd](Mask64 k) {
    Mask64 out = 0;
    for (size_t i = 0; i < nbhd->size(); ++i)
      if (subset(k, (*nbhd)[i])) out |= bit(static_cast<int>(i));
    return out;
  });
  return HyperConvergence{&X, std::move(conv), "alpha:" + alpha.label};
}

SolidityReport solidity_check(const HyperConvergence& tau) {
  const FiniteSpace& X = *tau.space;
  OpensLattice lat(X);
  int m = lat.size();
  if (m > 16) fail(ErrorKind::CarrierTooLarge, "solidity check capped at 16 opens");
  Mask64 all = full_mask(m);
  std::vector<Mask64> limt(size_t{1} << m, 0);
  for (Mask64 k = 1; k <= all; ++k) limt[static_cast<size_t>(k)] = tau.conv.lim(k);

  SolidityReport r;
  r.lower = true;
  r.upper_regular = true;
  r.pseudotopology = true;
  for (Mask64 k = 1; k <= all; ++k) {
    Mask64 l = limt[static_cast<size_t>(k)];
    if (!subset(lat.down_close(l), l)) r.lower = false;
    if (!subset(l, limt[static_cast<size_t>(lat.up_close(k))])) r.upper_regular = false;
    Mask64 inter = all;
    for_each_bit(k, [&](int x) { inter &= limt[static_cast<size_t>(bit(x))]; });
    if (l != inter) r.pseudotopology = false;
  }
  r.compact = true;
  for (int x = 0; x < m; ++x)
    if (limt[static_cast<size_t>(bit(x))] == 0) r.compact = false;

  // Directed pairs {(K1,B1),(K2,B2)} with K1 inside K2 and comparable limits;
  // the only condition not granted by the data is max(B1,B2) in lim(K1).
  r.directed_sups = true;
  for (Mask64 k1 = 1; k1 <= all && r.directed_sups; ++k1) {
    Mask64 l1 = limt[static_cast<size_t>(k1)];
    Mask64 reachable = lat.up_close(l1) & ~l1;  // opens above a limit yet not limits
    if (!reachable) continue;
    Mask64 rest = all & ~k1;
    for_each_submask(rest, [&](Mask64 extra) {
      if (limt[static_cast<size_t>(k1 | extra)] & reachable) r.directed_sups = false;
    });
  }
  r.solid = r.lower && r.upper_regular && r.compact && r.directed_sups && r.pseudotopology;
  return r;
}

CoverFlags cover_predicates(const OpensLattice& lat, Mask64 p, const AlphaCollection* alpha, PointSet u) {
  CoverFlags f;
  f.is_cover = subset(u, lat.union_of(p));
  f.is_alpha_cover = true;
  if (alpha) {
    for (const auto& fam : alpha->families) {
      if (fam.is_empty()) continue;
      if (!(fam.members(lat) & p)) f.is_alpha_cover = false;
    }
  }
  return f;
}

bool is_alpha_cover_of(const OpensLattice& lat, Mask64 p, const AlphaCollection& alpha, PointSet u) {
  int u_idx = lat.space().open_index(u);
  for (const auto& fam : alpha.families) {
    if (fam.is_empty()) continue;
    Mask64 members = fam.members(lat);
    if (!(members & bit(u_idx))) continue;
    if (!(members & p)) return false;
  }
  return true;
}

CoverNumbers cover_numbers(const AlphaCollection& alpha, PointSet u) {
  const FiniteSpace& X = *alpha.space;
  OpensLattice lat(X);
  int m = lat.size();
  if (m > 16) fail(ErrorKind::CarrierTooLarge, "cover numbers capped at 16 opens");
  Mask64 all = full_mask(m);

  CoverNumbers out;
  out.lindelof = 0;
  for (Mask64 p = 0; p <= all; ++p) {
    if (!is_alpha_cover_of(lat, p, alpha, u)) continue;
    int best = popcount(p);
    Mask64 sub = p;
    while (true) {
      if (is_alpha_cover_of(lat, sub, alpha, u)) best = std::min(best, popcount(sub));
      if (sub == 0) break;
      sub = (sub - 1) & p;
    }
    out.lindelof = std::max(out.lindelof, best);
    if (p == all) break;
  }

  // gamma must reach below every member; the minimal members already do and
  // no smaller subset can serve them
  std::vector<Mask64> members;
  for (const auto& fam : alpha.families) members.push_back(fam.members(lat));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int minimal = 0;
  for (size_t i = 0; i < members.size(); ++i) {
    bool has_below = false;
    for (size_t j = 0; j < members.size(); ++j)
      if (i != j && subset(members[j], members[i])) has_below = true;
    if (!has_below) ++minimal;
  }
  out.arens = minimal;
  return out;
}

namespace {
bool hurewicz_rec(const OpensLattice& lat, const AlphaCollection& alpha, PointSet u,
                  const std::vector<Mask64>& covers, size_t idx, int bound, Mask64 acc,
                  std::vector<Mask64>& picks) {
  if (idx == covers.size()) return is_alpha_cover_of(lat, acc, alpha, u);
  bool found = false;
  for_each_submask(covers[idx], [&](Mask64 pick) {
    if (found || popcount(pick) > bound) return;
    picks[idx] = pick;
    if (hurewicz_rec(lat, alpha, u, covers, idx + 1, bound, acc | pick, picks)) found = true;
  });
  return found;
}
}  // namespace

SelectionResult selection(const AlphaCollection& alpha, const std::vector<Mask64>& covers,
                          SelectionMode mode, PointSet u) {
  const FiniteSpace& X = *alpha.space;
  OpensLattice lat(X);
  for (size_t i = 0; i < covers.size(); ++i)
    if (!is_alpha_cover_of(lat, covers[i], alpha, u))
      fail(ErrorKind::NotACover, "listed family " + std::to_string(i) + " is not an alpha-cover");

  SelectionResult res;
  if (covers.empty()) {
    res.possible = is_alpha_cover_of(lat, 0, alpha, u);
    res.diagnostic = res.possible ? "empty selection suffices (degenerate collection)"
                                  : "empty cover list cannot meet the collection";
    return res;
  }
  if (mode == SelectionMode::Rothberger) {
    std::vector<int> choice(covers.size(), 0);
    std::vector<std::vector<int>> elems;
    for (Mask64 c : covers) elems.push_back(bit_indices(c));
    while (true) {
      Mask64 acc = 0;
      for (size_t i = 0; i < covers.size(); ++i)
        acc |= bit(elems[i][static_cast<size_t>(choice[i])]);
      if (is_alpha_cover_of(lat, acc, alpha, u)) {
        res.possible = true;
        res.max_pick = 1;
        for (size_t i = 0; i < covers.size(); ++i)
          res.picks.push_back(bit(elems[i][static_cast<size_t>(choice[i])]));
        return res;
      }
      size_t i = 0;
      for (; i < covers.size(); ++i) {
        if (++choice[i] < static_cast<int>(elems[i].size())) break;
        choice[i] = 0;
      }
      if (i == covers.size()) break;
    }
    res.diagnostic = "no single-element selection forms an alpha-cover";
    return res;
  }
  int largest = 0;
  for (Mask64 c : covers) largest = std::max(largest, popcount(c));
  for (int bound = 0; bound <= largest; ++bound) {
    std::vector<Mask64> picks(covers.size(), 0);
    if (hurewicz_rec(lat, alpha, u, covers, 0, bound, 0, picks)) {
      res.possible = true;
      res.picks = picks;
      res.max_pick = bound;
      return res;
    }
  }
  res.diagnostic = "no bounded selection forms an alpha-cover";
  return res;
}

std::vector<PointSet> closed_sets(const FiniteSpace& X) {
  std::vector<PointSet> out;
  for (PointSet u : X.opens()) out.push_back(X.all_points() & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

Convergence upper_kuratowski_view(const FiniteSpace& X) {
  auto closed = std::make_shared<std::vector<PointSet>>(closed_sets(X));
  const FiniteSpace* xp = &X;
  return Convergence(static_cast<int>(closed->size()), [closed, xp](Mask64 k) {
    PointSet uni = 0;
    for_each_bit(k, [&](int i) { uni |= (*closed)[static_cast<size_t>(i)]; });
    PointSet cl = xp->closure(uni);
    Mask64 out = 0;
    for (size_t i = 0; i < closed->size(); ++i)
      if (subset(cl, (*closed)[i])) out |= bit(static_cast<int>(i));
    return out;
  });
}

std::vector<TauInstance> standard_hyperconvergences(const FiniteSpace& X, const StandardAlphas& alphas) {
  std::vector<TauInstance> out;
  out.push_back({scott_convergence(X), true});
  out.push_back({hyper_topology(alphas.p), true});
  out.push_back({hyper_topology(alphas.k), true});
  out.push_back({hyper_topology(alphas.kappa), true});
  out.push_back({hyper_topology(alphas.s), true});
  AlphaCollection indiscrete = make_alpha(X, {IsotoneFamily::from_minimals(X, {0})}, "indiscrete");
  out.push_back({hyper_topology(indiscrete), false});
  return out;
}

}  // namespace hyperconv
