#include "law_checks.hpp"

namespace hyperconv::lawdetail {

bool SpaceCtx::is_ideal_subbase(Mask64 p) const {
  if (p == 0) return false;
  int m = lat->size();
  bool ok = true;
  for_each_bit(p, [&](int a) {
    if (!ok) return;
    for_each_bit(p, [&](int b) {
      if (ok && !(dom_point[static_cast<size_t>(a * m + b)] & p)) ok = false;
    });
  });
  return ok;
}

bool SpaceCtx::is_ideal_base(Mask64 p) const {
  if (p == 0) return false;
  int m = lat->size();
  bool ok = true;
  for_each_bit(p, [&](int a) {
    if (!ok) return;
    for_each_bit(p, [&](int b) {
      if (ok && !(p & bit(join_idx[static_cast<size_t>(a * m + b)]))) ok = false;
    });
  });
  return ok;
}

Mask64 SpaceCtx::union_closure(Mask64 p) const {
  int m = lat->size();
  Mask64 cur = p;
  bool changed = true;
  while (changed) {
    changed = false;
    Mask64 next = cur;
    for_each_bit(cur, [&](int a) {
      for_each_bit(cur, [&](int b) { next |= bit(join_idx[static_cast<size_t>(a * m + b)]); });
    });
    if (next != cur) {
      cur = next;
      changed = true;
    }
  }
  return cur;
}

Mask64 SpaceCtx::reduced_ideal_fast(Mask64 kernel) const {
  PointSet base = lat->intersection_of(kernel);
  Mask64 out = bit(space->open_index(base));
  for (PointSet i : inters) out |= bit(space->open_index(base & i));
  return out;
}

namespace {
SpaceCtx make_ctx(FiniteSpace s, std::string key, bool with_alphas) {
  SpaceCtx ctx;
  ctx.space = std::make_unique<FiniteSpace>(std::move(s));
  ctx.lat = std::make_unique<OpensLattice>(*ctx.space);
  if (with_alphas) ctx.alphas = std::make_unique<StandardAlphas>(standard_alphas(*ctx.space));
  ctx.key = std::move(key);
  const FiniteSpace& X = *ctx.space;
  int m = ctx.lat->size();
  if (m <= 16) {
    ctx.join_idx.resize(static_cast<size_t>(m * m));
    ctx.dom_point.resize(static_cast<size_t>(m * m));
    ctx.dom_mask.resize(static_cast<size_t>(m * m));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        PointSet u = X.open_at(a) | X.open_at(b);
        ctx.join_idx[static_cast<size_t>(a * m + b)] = X.open_index(u);
        Mask64 dp = 0, dm = 0;
        Mask64 both = ctx.lat->supersets(a) & ctx.lat->supersets(b);
        for (int c = 0; c < m; ++c) {
          if (subset(u, X.open_at(c))) dp |= bit(c);
          if (subset(ctx.lat->supersets(c), both)) dm |= bit(c);
        }
        ctx.dom_point[static_cast<size_t>(a * m + b)] = dp;
        ctx.dom_mask[static_cast<size_t>(a * m + b)] = dm;
      }
    }
    ctx.subbase_flag.resize(size_t{1} << m);
    ctx.base_flag.resize(size_t{1} << m);
    for (Mask64 p = 0; p < (Mask64{1} << m); ++p) {
      ctx.subbase_flag[static_cast<size_t>(p)] = ctx.is_ideal_subbase(p);
      ctx.base_flag[static_cast<size_t>(p)] = p != 0 && ctx.union_closure(p) == p;
    }
    std::set<PointSet> inters = {X.all_points()};
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<PointSet> cur(inters.begin(), inters.end());
      for (PointSet a : cur)
        for (PointSet u : X.opens())
          if (inters.insert(a & u).second) changed = true;
    }
    ctx.inters.assign(inters.begin(), inters.end());
  }
  return ctx;
}
}  // namespace

const std::vector<SpaceCtx>& t0_grid(int max_points) {
  static std::mutex mu;
  static std::map<int, std::vector<SpaceCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_points);
  if (it == cache.end()) {
    std::vector<SpaceCtx> grid;
    for (int n = 1; n <= max_points; ++n)
      for (FiniteSpace& s : enumerate_spaces(n, true)) {
        std::string key = "n" + std::to_string(n) + ":" + s.describe();
        grid.push_back(make_ctx(std::move(s), std::move(key), true));
      }
    it = cache.emplace(max_points, std::move(grid)).first;
  }
  return it->second;
}

const std::vector<ZCtx>& z_triple() {
  static std::vector<ZCtx> zs = [] {
    std::vector<ZCtx> out;
    auto add = [&](FiniteSpace s, std::string name) {
      ZCtx z;
      z.space = std::make_unique<FiniteSpace>(std::move(s));
      z.name = std::move(name);
      out.push_back(std::move(z));
    };
    add(FiniteSpace::sierpinski(), "sierpinski");
    add(FiniteSpace::discrete(2), "discrete2");
    add(FiniteSpace::chain(3), "chain3");
    return out;
  }();
  return zs;
}

std::vector<SpaceCtx> transfer_grid(const ScopeConfig& cfg) {
  std::vector<SpaceCtx> out;
  out.push_back(make_ctx(FiniteSpace::discrete(2), "discrete2", false));
  out.push_back(make_ctx(FiniteSpace::discrete(3), "discrete3", false));
  out.push_back(make_ctx(FiniteSpace::sierpinski(), "sierpinski", false));
  out.push_back(make_ctx(FiniteSpace::from_preorder(3, {{0, 1}}), "sierpinski+point", false));
  out.push_back(make_ctx(FiniteSpace::chain(3), "chain3", false));
  out.push_back(make_ctx(FiniteSpace::chain(4), "chain4", false));
  out.push_back(make_ctx(FiniteSpace::indiscrete(2), "indiscrete2", false));
  std::vector<FiniteSpace> posets4 = enumerate_spaces(4, true);
  std::mt19937_64 rng(cfg.seed * 7919 + 11);
  for (int i = 0; i < cfg.sampled_posets; ++i) {
    size_t pick = static_cast<size_t>(rng() % posets4.size());
    out.push_back(make_ctx(posets4[pick], "poset4#" + std::to_string(pick), false));
  }
  return out;
}

std::vector<std::pair<std::string, Mask64>> transfer_kernels(const SpaceCtx& ctx, const ScopeConfig& cfg) {
  const FiniteSpace& X = *ctx.space;
  const OpensLattice& lat = *ctx.lat;
  std::vector<std::pair<std::string, Mask64>> out;
  for (PointSet s = 1; s <= X.all_points(); ++s)
    out.push_back({"O(" + std::to_string(s) + ")", lat.opens_containing(s)});
  out.push_back({"top", bit(X.open_index(X.all_points()))});
  out.push_back({"all-opens", lat.all()});
  std::mt19937_64 rng(cfg.seed * 104729 + X.opens().size());
  for (int i = 0; i < 3; ++i) {
    Mask64 k = rng() & lat.all();
    if (k == 0) k = bit(X.open_index(X.all_points()));
    out.push_back({"seed" + std::to_string(i) + "(" + std::to_string(k) + ")", k});
  }
  return out;
}

std::vector<TauCtx> tau_suite(const SpaceCtx& ctx) {
  std::vector<TauCtx> out;
  out.push_back({scott_convergence(*ctx.space), true, "scott"});
  std::vector<std::pair<const AlphaCollection*, const char*>> tops = {
      {&ctx.alphas->p, "p"}, {&ctx.alphas->k, "k"}, {&ctx.alphas->kappa, "kappa"}, {&ctx.alphas->s, "s"}};
  std::vector<std::vector<Mask64>> seen;
  for (auto [alpha, name] : tops) {
    HyperConvergence h = hyper_topology(*alpha);
    std::vector<Mask64> sig;
    for (int i = 0; i < h.conv.size(); ++i) sig.push_back(h.conv.lim_point(i));
    bool dup = false;
    for (auto& s : seen)
      if (s == sig) dup = true;
    if (dup) continue;
    seen.push_back(std::move(sig));
    out.push_back({std::move(h), true, std::string("alpha:") + name});
  }
  AlphaCollection ind = make_alpha(*ctx.space, {IsotoneFamily::whole(*ctx.space)}, "indiscrete");
  out.push_back({hyper_topology(ind), false, "indiscrete"});
  return out;
}

json space_json(const FiniteSpace& s) {
  json j;
  j["points"] = s.points();
  json arr = json::array();
  for (PointSet u : s.opens()) {
    json a = json::array();
    for_each_bit(u, [&](int i) { a.push_back(i); });
    arr.push_back(a);
  }
  j["opens"] = arr;
  return j;
}

std::string mask_detail(const char* name, Mask64 m) {
  json j;
  j[name] = json::array();
  for_each_bit(m, [&](int i) { j[name].push_back(i); });
  return j.dump();
}

json family_json(const IsotoneFamily& f) {
  json arr = json::array();
  for (PointSet m : f.minimals()) {
    json a = json::array();
    for_each_bit(m, [&](int i) { a.push_back(i); });
    arr.push_back(a);
  }
  return arr;
}

// ---------------------------------------------------------------------------
// section 2

void check_preimagewise_def(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(3)) {
    for (const ZCtx& zc : z_triple()) {
      FunctionCarrier carrier = make_function_carrier(*xc.space, *zc.space);
      if (carrier.size() > 14) continue;  // covered incrementally by the identity laws
      for (const TauCtx& tc : tau_suite(xc)) {
        std::string key = xc.key + " Z=" + zc.name + " tau=" + tc.name;
        if (!ctx.accepts(key)) continue;
        FunctionConvergence via_initial = preimage_lift(carrier, tc.tau);
        FunctionConvergence via_formula = preimage_lift_direct(carrier, tc.tau);
        Mask64 bad = find_equal_violation(via_initial.conv, via_formula.conv);
        bool ok = bad == 0;
        // reflective classes carry over to the lift
        ConvergenceClass base = classify(tc.tau.conv);
        ConvergenceClass lifted = classify(via_initial.conv);
        bool classes = (!base.topology || lifted.topology) && (!base.pretopology || lifted.pretopology) &&
                       (!base.pseudotopology || lifted.pseudotopology);
        ctx.record(key, ok && classes, ok ? "class preservation" : mask_detail("kernel", bad));
      }
    }
  }
}

void check_prop_idealbasis(LawContext& ctx) {
  auto open_basis = [](const FiniteSpace& z) {
    std::vector<PointSet> basis;
    for (PointSet u : z.opens())
      if (u != 0) basis.push_back(u);  // union-closed, generates the topology
    return basis;
  };
  auto closed_basis = [](const FiniteSpace& z) {
    std::vector<PointSet> basis;
    for (PointSet c : closed_sets(z))
      if (c != z.all_points()) basis.push_back(c);  // intersection-closed
    return basis;
  };
  for (const SpaceCtx& xc : t0_grid(3)) {
    for (const ZCtx& zc : z_triple()) {
      FunctionCarrier carrier = make_function_carrier(*xc.space, *zc.space);
      if (carrier.size() > 14) continue;
      for (const TauCtx& tc : tau_suite(xc)) {
        if (!solidity_check(tc.tau).solid) continue;  // hypothesis
        std::string key = xc.key + " Z=" + zc.name + " tau=" + tc.name;
        if (!ctx.accepts(key)) continue;
        FunctionConvergence full = preimage_lift_direct(carrier, tc.tau);
        FunctionConvergence over_basis = preimage_lift_over(carrier, tc.tau, open_basis(*zc.space));
        FunctionConvergence over_closed =
            preimage_lift_closed_over(carrier, tc.tau, closed_basis(*zc.space));
        Mask64 bad1 = find_equal_violation(full.conv, over_basis.conv);
        Mask64 bad2 = find_equal_violation(full.conv, over_closed.conv);
        ctx.record(key, bad1 == 0 && bad2 == 0,
                   bad1 ? mask_detail("open_basis_kernel", bad1) : mask_detail("closed_basis_kernel", bad2));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// section 3

void check_bracket_sets(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(3)) {
    for (const ZCtx& zc : z_triple()) {
      FunctionCarrier carrier = make_function_carrier(*xc.space, *zc.space);
      std::string key = xc.key + " Z=" + zc.name;
      if (!ctx.accepts(key)) continue;
      bool ok = true;
      std::string detail;
      for (PointSet d = 0; d <= xc.space->all_points() && ok; ++d) {
        IsotoneFamily od = IsotoneFamily::from_generators(*xc.space, std::vector<PointSet>{d});
        for (PointSet u : zc.space->opens()) {
          if (bracket(carrier, od, u) != bracket(carrier, d, u)) {
            ok = false;
            detail = json{{"d", d}, {"u", u}}.dump();
            break;
          }
        }
      }
      const auto& fams = xc.alphas->kappa.families;
      for (size_t i = 0; i < fams.size() && ok; ++i) {
        for (size_t j = i; j < fams.size() && ok; ++j) {
          IsotoneFamily meet = fams[i].intersect(fams[j]);
          for (PointSet u : zc.space->opens()) {
            if ((bracket(carrier, fams[i], u) & bracket(carrier, fams[j], u)) != bracket(carrier, meet, u)) {
              ok = false;
              detail = json{{"i", i}, {"j", j}, {"u", u}}.dump();
              break;
            }
          }
        }
      }
      for (const IsotoneFamily& f : fams) {
        if (!f.contains(xc.space->all_points())) continue;
        if (bracket(carrier, f, zc.space->all_points()) != full_mask(carrier.size())) {
          ok = false;
          detail = "bracket with full target misses maps";
        }
      }
      ctx.record(key, ok, detail);
    }
  }
}

void check_standard_collections(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    const StandardAlphas& a = *xc.alphas;
    bool collapse = collections_equal_as_sets(a.p, a.k) && collections_equal_as_sets(a.k, a.kappa);
    bool compact_all = true;
    for (const IsotoneFamily& f : a.kappa.families)
      if (!is_compact_family(f)) compact_all = false;
    bool kappa_complete = all_up_sets(*xc.lat).size() == a.kappa.families.size();
    bool s_count = static_cast<int>(a.s.families.size()) == xc.space->points();
    bool s_gives_p = true;
    {
      HyperConvergence sp = hyper_topology(a.s);
      HyperConvergence pp = hyper_topology(a.p);
      for (int i = 0; i < sp.conv.size(); ++i)
        if (sp.conv.lim_point(i) != pp.conv.lim_point(i)) s_gives_p = false;
    }
    bool nondeg = a.p.non_degenerate() && a.kappa.non_degenerate() && a.s.non_degenerate();
    ctx.record(xc.key, collapse && compact_all && kappa_complete && s_count && s_gives_p && nondeg,
               json{{"collapse", collapse},
                    {"compact_all", compact_all},
                    {"kappa_complete", kappa_complete},
                    {"s_count", s_count},
                    {"s_gives_p", s_gives_p}}
                   .dump());
  }
}

void check_scott_criterion(LawContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed * 31337 + 5);
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    HyperConvergence scott = scott_convergence(*xc.space);
    int m = xc.lat->size();
    bool ok = true;
    Mask64 witness = 0;
    auto check_kernel = [&](Mask64 k) {
      if (scott_lim_full_union(*xc.lat, k) != scott.conv.lim(k)) {
        ok = false;
        witness = k;
      }
    };
    if (m <= 10) {
      for (Mask64 k = 1; k < (Mask64{1} << m) && ok; ++k) check_kernel(k);
    } else {
      for (int i = 0; i < ctx.config().sample_size && ok; ++i) {
        Mask64 k = rng() & full_mask(m);
        while (m - popcount(k) > 12) k |= rng() & full_mask(m);  // keep the superset sweep affordable
        if (k == 0) k = 1;
        check_kernel(k);
      }
    }
    ctx.record(xc.key, ok, ok ? "" : mask_detail("kernel", witness));
  }
  if (ctx.accepts("pinned-examples")) {
    FiniteSpace sp = FiniteSpace::sierpinski();
    OpensLattice lat(sp);
    HyperConvergence scott = scott_convergence(sp);
    int i_empty = sp.open_index(0), i_one = sp.open_index(2), i_full = sp.open_index(3);
    bool ex1 = scott.conv.lim(bit(i_one) | bit(i_full)) == (bit(i_empty) | bit(i_one));
    bool ex2 = scott.conv.lim(bit(i_full)) == lat.all();
    FiniteSpace d2 = FiniteSpace::discrete(2);
    HyperConvergence scott2 = scott_convergence(d2);
    bool ex3 = scott2.conv.lim(bit(d2.open_index(1)) | bit(d2.open_index(2))) == bit(d2.open_index(0));
    ctx.record("pinned-examples", ex1 && ex2 && ex3);
  }
}

void check_alpha_lift_identity(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(3)) {
    for (const ZCtx& zc : z_triple()) {
      FunctionCarrier carrier = make_function_carrier(*xc.space, *zc.space);
      std::vector<std::pair<const AlphaCollection*, const char*>> labels = {
          {&xc.alphas->p, "p"}, {&xc.alphas->k, "k"}, {&xc.alphas->kappa, "kappa"}, {&xc.alphas->s, "s"}};
      // equal neighborhood structures need only one expensive walk
      std::vector<std::vector<Mask64>> seen_nbhds;
      std::vector<bool> seen_ok;
      for (auto [alpha, label] : labels) {
        std::string key = xc.key + " Z=" + zc.name + " alpha=" + label;
        if (!ctx.accepts(key)) continue;
        std::vector<Mask64> nbhd = alpha_topology_neighborhoods(carrier, *alpha);
        HyperConvergence hyper = hyper_topology(*alpha);
        bool ok = false;
        Mask64 witness = 0;
        int cached = -1;
        for (size_t i = 0; i < seen_nbhds.size(); ++i)
          if (seen_nbhds[i] == nbhd) cached = static_cast<int>(i);
        if (cached >= 0) {
          ok = seen_ok[static_cast<size_t>(cached)];
        } else if (carrier.size() <= 16) {
          FunctionConvergence lhs = alpha_function_topology(carrier, *alpha);
          FunctionConvergence rhs = preimage_lift(carrier, hyper);
          witness = find_equal_violation(lhs.conv, rhs.conv);
          ok = witness == 0;
        } else {
          TopoLim lhs(carrier.size(), nbhd);
          LiftLim rhs(carrier, hyper);
          witness = incremental_compare(carrier.size(), lhs, rhs, KernelRel::Equal);
          ok = witness == 0;
        }
        if (cached < 0) {
          seen_nbhds.push_back(std::move(nbhd));
          seen_ok.push_back(ok);
        }
        ctx.record(key, ok, ok ? "" : mask_detail("kernel", witness));
      }
    }
  }
}

void check_natural_lift_identity(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(3)) {
    for (const ZCtx& zc : z_triple()) {
      FunctionCarrier carrier = make_function_carrier(*xc.space, *zc.space);
      std::string key = xc.key + " Z=" + zc.name;
      if (!ctx.accepts(key)) continue;
      HyperConvergence scott = scott_convergence(*xc.space);
      bool ok = false;
      Mask64 witness = 0;
      if (carrier.size() <= 16) {
        FunctionConvergence lhs = natural_convergence(carrier);
        FunctionConvergence rhs = preimage_lift(carrier, scott);
        witness = find_equal_violation(lhs.conv, rhs.conv);
        ok = witness == 0;
      } else {
        NaturalLim lhs(carrier);
        LiftLim rhs(carrier, scott);
        witness = incremental_compare(carrier.size(), lhs, rhs, KernelRel::Equal);
        ok = witness == 0;
      }
      ctx.record(key, ok, ok ? "" : mask_detail("kernel", witness));
    }
  }
}

void check_upper_kuratowski(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    const FiniteSpace& X = *xc.space;
    Convergence uk = upper_kuratowski_view(X);
    HyperConvergence scott = scott_convergence(X);
    std::vector<PointSet> closed = closed_sets(X);
    std::vector<int> open_of_closed(closed.size());
    for (size_t i = 0; i < closed.size(); ++i)
      open_of_closed[i] = X.open_index(X.all_points() & ~closed[i]);
    int m = static_cast<int>(closed.size());
    bool ok = true;
    Mask64 witness = 0;
    for (Mask64 kc = 1; kc <= full_mask(m) && ok; ++kc) {
      Mask64 k_open = 0;
      for_each_bit(kc, [&](int i) { k_open |= bit(open_of_closed[static_cast<size_t>(i)]); });
      Mask64 scott_lim = scott.conv.lim(k_open);
      Mask64 expect = 0;
      for (int i = 0; i < m; ++i)
        if (scott_lim & bit(open_of_closed[static_cast<size_t>(i)])) expect |= bit(i);
      if (uk.lim(kc) != expect) {
        ok = false;
        witness = kc;
      }
    }
    ctx.record(xc.key, ok, ok ? "" : mask_detail("closed_kernel", witness));
  }
}

// ---------------------------------------------------------------------------
// section 4

void check_solid_axioms(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    for (const TauCtx& tc : tau_suite(xc)) {
      std::string key = xc.key + " tau=" + tc.name;
      if (!ctx.accepts(key)) continue;
      SolidityReport r = solidity_check(tc.tau);
      ctx.record(key, r.solid,
                 json{{"lower", r.lower},
                      {"upper_regular", r.upper_regular},
                      {"compact", r.compact},
                      {"directed_sups", r.directed_sups},
                      {"pseudotopology", r.pseudotopology}}
                     .dump());
    }
    if (ctx.accepts(xc.key + " discrete-hyper")) {
      std::vector<Mask64> nbhd;
      for (int i = 0; i < xc.lat->size(); ++i) nbhd.push_back(bit(i));
      HyperConvergence disc{xc.space.get(), topology_from_neighborhoods(nbhd), "discrete-hyper"};
      SolidityReport r = solidity_check(disc);
      bool expect_lower = xc.lat->size() == 1;  // a single open leaves nothing below
      ctx.record(xc.key + " discrete-hyper", r.lower == expect_lower, "lower axiom discriminates");
    }
  }
}

void check_up_regular(LawContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed * 271 + 9);
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    std::vector<std::pair<std::string, HyperConvergence>> lower_tops;
    for (const TauCtx& tc : tau_suite(xc))
      if (tc.name != "scott") lower_tops.push_back({tc.name, tc.tau});
    const auto& fams = xc.alphas->kappa.families;
    for (int i = 0; i < 4 && !fams.empty(); ++i) {
      const IsotoneFamily& f = fams[static_cast<size_t>(rng() % fams.size())];
      if (f.is_empty()) continue;
      AlphaCollection single = make_alpha(*xc.space, {f}, "single" + std::to_string(i));
      lower_tops.push_back({single.label, hyper_topology(single)});
    }
    for (auto& [name, tau] : lower_tops) {
      std::string key = xc.key + " " + name;
      if (!ctx.accepts(key)) continue;
      SolidityReport r = solidity_check(tau);
      ctx.record(key, r.lower && r.upper_regular,
                 json{{"lower", r.lower}, {"upper_regular", r.upper_regular}}.dump());
    }
  }
}

void check_lemma_closure(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    for (const TauCtx& tc : tau_suite(xc)) {
      if (!tc.between) continue;
      std::string key = xc.key + " tau=" + tc.name;
      if (!ctx.accepts(key)) continue;
      AdherenceTable adh(tc.tau.conv);
      bool ok = true;
      int witness = -1;
      for (int a = 0; a < xc.lat->size(); ++a) {
        if (adh.single(a) != xc.lat->subsets(a)) {
          ok = false;
          witness = a;
          break;
        }
      }
      ctx.record(key, ok, ok ? "" : json{{"open_index", witness}}.dump());
    }
  }
}

void check_t0_not_t1(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    for (const TauCtx& tc : tau_suite(xc)) {
      if (!tc.between) continue;
      std::string key = xc.key + " tau=" + tc.name;
      if (!ctx.accepts(key)) continue;
      AdherenceTable adh(tc.tau.conv);
      bool t0 = true;
      for (int a = 0; a < xc.lat->size() && t0; ++a)
        for (int b = 0; b < xc.lat->size() && t0; ++b) {
          if (a == b) continue;
          bool separated = ((adh.single(a) & bit(b)) == 0) || ((adh.single(b) & bit(a)) == 0);
          if (!separated) t0 = false;
        }
      int i_empty = xc.space->open_index(0);
      int i_full = xc.space->open_index(xc.space->all_points());
      bool not_t1 = (adh.single(i_full) & bit(i_empty)) != 0;
      ctx.record(key, t0 && not_t1, json{{"t0", t0}, {"not_t1", not_t1}}.dump());
    }
  }
}

// ---------------------------------------------------------------------------
// section 5

void check_prop_refine(LawContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed * 997 + 3);
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    const OpensLattice& lat = *xc.lat;
    int m = lat.size();
    bool ok = true;
    Mask64 bad_r = 0;
    // For fixed R each clause admits the same set of single members; set
    // equality decides every P at once.
    for (Mask64 r = 0; r <= full_mask(m) && ok; ++r) {
      Mask64 good1 = 0, good2 = 0, good3 = 0;
      for (int p = 0; p < m; ++p) {
        if (lat.supersets(p) & r) good1 |= bit(p);  // R meshes O(P)
        bool dominated = false;
        for_each_bit(r, [&](int ri) {
          if (subset(xc.space->open_at(p), xc.space->open_at(ri))) dominated = true;
        });
        if (dominated) good2 |= bit(p);  // refinement, by point inclusion
        bool below = false;
        for_each_bit(r, [&](int ri) {
          if (subset(lat.supersets(ri), lat.supersets(p))) below = true;
        });
        if (below) good3 |= bit(p);  // O(P) <= O(R) member-wise
      }
      if (good1 != good2 || good2 != good3) {
        ok = false;
        bad_r = r;
      }
    }
    for (int i = 0; i < 200 && ok; ++i) {  // sampled pairs through the public functions
      Mask64 p = rng() & full_mask(m);
      Mask64 r = rng() & full_mask(m);
      std::vector<Mask64> ohat_p;
      for_each_bit(p, [&](int pi) { ohat_p.push_back(lat.supersets(pi)); });
      bool c1 = mesh_hyper(r, ohat_p);
      bool c2 = refines(lat, p, r);
      if (c1 != c2) {
        ok = false;
        bad_r = r;
      }
    }
    ctx.record(xc.key, ok, ok ? "" : mask_detail("r", bad_r));
  }
}

void check_ideal_subbase(LawContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed * 131 + 29);
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    const OpensLattice& lat = *xc.lat;
    int m = lat.size();
    bool ok = true;
    Mask64 witness = 0;
    // pairwise domination routes agree everywhere (this decides all P)
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b)
        if (xc.dom_point[static_cast<size_t>(a * m + b)] != xc.dom_mask[static_cast<size_t>(a * m + b)]) {
          ok = false;
          witness = bit(a) | bit(b);
        }
    // sampled families through both public routes
    for (int i = 0; i < ctx.config().sample_size && ok; ++i) {
      Mask64 p = rng() & full_mask(m);
      if (!p) continue;
      bool via_ops = ideal_ops(lat, p).is_ideal_subbase;
      bool via_masks = true;  // literal filter-base test on the hyperset collection
      for_each_bit(p, [&](int a) {
        for_each_bit(p, [&](int b) {
          Mask64 inter = lat.supersets(a) & lat.supersets(b);
          bool dominated = false;
          for_each_bit(p, [&](int c) {
            if (subset(lat.supersets(c), inter)) dominated = true;
          });
          if (!dominated) via_masks = false;
        });
      });
      if (via_ops != via_masks || via_ops != xc.subbase_flag[static_cast<size_t>(p)]) {
        ok = false;
        witness = p;
      }
      if (ok && !subset(p, ideal_ops(lat, p).ideal_closure)) {
        ok = false;
        witness = p;
      }
    }
    ctx.record(xc.key, ok, ok ? "" : mask_detail("p", witness));
  }
  if (ctx.accepts("pinned-examples")) {
    FiniteSpace d3 = FiniteSpace::discrete(3);
    OpensLattice lat(d3);
    Mask64 singles = 0;
    for (int x = 0; x < 3; ++x) singles |= bit(d3.open_index(PointSet{1} << x));
    IdealOps ops = ideal_ops(lat, singles);
    bool ex = !ops.is_ideal_subbase && popcount(ops.ideal_closure) == 7 &&
              !(ops.ideal_closure & bit(d3.open_index(0)));
    FiniteSpace c3 = FiniteSpace::chain(3);
    OpensLattice lc(c3);
    IdealOps chain_ops = ideal_ops(lc, full_mask(lc.size()));
    bool ex2 = chain_ops.is_ideal_subbase && chain_ops.ideal_closure == full_mask(lc.size());
    IdealOps empty_only = ideal_ops(lat, bit(d3.open_index(0)));
    bool ex3 = empty_only.is_ideal_subbase && empty_only.ideal_closure == bit(d3.open_index(0));
    ctx.record("pinned-examples", ex && ex2 && ex3);
  }
}

void check_reduced_ideal(LawContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed * 523 + 41);
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    const OpensLattice& lat = *xc.lat;
    int m = lat.size();
    bool ok = true;
    Mask64 witness = 0;
    auto check_kernel = [&](Mask64 k) {
      HyperFilter f = make_hyperfilter(*xc.space, k);
      Mask64 reduced = reduced_ideal(lat, f);
      Mask64 oracle = 0;
      Mask64 rest = full_mask(m) & ~k;
      for_each_submask(rest, [&](Mask64 extra) {
        oracle |= bit(xc.space->open_index(lat.intersection_of(k | extra)));
      });
      if (reduced != oracle || reduced != xc.reduced_ideal_fast(k) || !xc.is_ideal_subbase(reduced)) {
        ok = false;
        witness = k;
      }
    };
    if (m <= 10) {
      for (Mask64 k = 1; k <= full_mask(m) && ok; ++k) check_kernel(k);
    } else {
      for (int i = 0; i < ctx.config().sample_size && ok; ++i) {
        Mask64 k = rng() & full_mask(m);
        while (m - popcount(k) > 12) k |= rng() & full_mask(m);
        if (k) check_kernel(k);
      }
    }
    ctx.record(xc.key, ok, ok ? "" : mask_detail("kernel", witness));
  }
  if (ctx.accepts("pinned-examples")) {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    OpensLattice lat(d2);
    Mask64 k = bit(d2.open_index(1)) | bit(d2.open_index(3));
    Mask64 red = reduced_ideal(lat, make_hyperfilter(d2, k));
    bool ex1 = red == (bit(d2.open_index(0)) | bit(d2.open_index(1)));
    Mask64 red2 = reduced_ideal(lat, make_hyperfilter(d2, bit(d2.open_index(3))));
    bool ex2 = (red2 & bit(d2.open_index(3))) != 0;
    Mask64 red3 = reduced_ideal(lat, make_hyperfilter(d2, lat.all()));
    bool ex3 = (red3 & bit(d2.open_index(0))) != 0;
    ctx.record("pinned-examples", ex1 && ex2 && ex3);
  }
}

void check_prop_base(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    if (!ctx.accepts(xc.key)) continue;
    const OpensLattice& lat = *xc.lat;
    const FiniteSpace& X = *xc.space;
    HyperConvergence scott = scott_convergence(X);
    int m = lat.size();
    bool ok = true;
    std::string detail;
    for (Mask64 k = 1; k <= full_mask(m) && ok; ++k) {
      Mask64 lim = scott.conv.lim(k);
      if (!lim) continue;
      Mask64 reduced = xc.reduced_ideal_fast(k);
      Mask64 p = 0;
      for_each_bit(reduced, [&](int i) { p |= bit(X.open_index(X.interior(X.open_at(i)))); });
      if (!xc.is_ideal_subbase(p)) {
        ok = false;
        detail = mask_detail("kernel", k);
        break;
      }
      PointSet pmax = 0;
      for_each_bit(p, [&](int i) { pmax |= X.open_at(i); });
      Mask64 base_kernel = lat.opens_containing(pmax);
      bool coarser = subset(k, base_kernel);
      Mask64 base_lim = scott.conv.lim(base_kernel);
      if (!coarser || !subset(lim, base_lim)) {
        ok = false;
        detail = mask_detail("kernel", k);
      }
    }
    ctx.record(xc.key, ok, detail);
  }
}

void check_prop_adh_lim(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    const OpensLattice& lat = *xc.lat;
    int m = lat.size();
    for (const TauCtx& tc : tau_suite(xc)) {
      if (!solidity_check(tc.tau).upper_regular) continue;  // hypothesis
      std::string key = xc.key + " tau=" + tc.name;
      if (!ctx.accepts(key)) continue;
      AdherenceTable adh(tc.tau.conv);
      bool ok = true;
      Mask64 witness = 0;
      for (Mask64 p = 1; p <= full_mask(m) && ok; ++p) {
        if (!xc.subbase_flag[static_cast<size_t>(p)]) continue;
        PointSet pmax = 0;
        for_each_bit(p, [&](int i) { pmax |= xc.space->open_at(i); });
        Mask64 kernel = lat.opens_containing(pmax);
        if (adh.adherence(p) != tc.tau.conv.lim(kernel)) {
          ok = false;
          witness = p;
        }
      }
      ctx.record(key, ok, ok ? "" : mask_detail("p", witness));
    }
  }
}

void check_cover_proposition(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    const OpensLattice& lat = *xc.lat;
    int m = lat.size();
    for (const TauCtx& tc : tau_suite(xc)) {
      if (!tc.between) continue;
      if (!solidity_check(tc.tau).solid) continue;
      std::string key = xc.key + " tau=" + tc.name;
      if (!ctx.accepts(key)) continue;
      AdherenceTable adh(tc.tau.conv);
      bool ok = true;
      Mask64 witness = 0;
      for (Mask64 p = 1; p <= full_mask(m) && ok; ++p) {
        Mask64 closure = xc.union_closure(p);
        Mask64 adh_mask = adh.adherence(closure);
        Mask64 covered = 0;
        for (int u = 0; u < m; ++u)
          if (subset(xc.space->open_at(u), lat.union_of(p))) covered |= bit(u);
        if (adh_mask != covered) {
          ok = false;
          witness = p;
        }
      }
      ctx.record(key, ok, ok ? "" : mask_detail("p", witness));
    }
  }
}

void check_cor_idealcover(LawContext& ctx) {
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    const OpensLattice& lat = *xc.lat;
    const FiniteSpace& X = *xc.space;
    int m = lat.size();
    HyperConvergence scott = scott_convergence(X);
    AdherenceTable scott_adh(scott.conv);
    for (const TauCtx& tc : tau_suite(xc)) {
      if (!tc.between) continue;
      if (!solidity_check(tc.tau).solid) continue;
      std::string key = xc.key + " tau=" + tc.name;
      if (!ctx.accepts(key)) continue;
      AdherenceTable adh(tc.tau.conv);
      bool ok = true;
      Mask64 witness = 0;
      for (Mask64 p = 1; p <= full_mask(m) && ok; ++p) {
        if (!xc.base_flag[static_cast<size_t>(p)]) continue;
        PointSet pmax = 0;
        for_each_bit(p, [&](int i) { pmax |= X.open_at(i); });
        Mask64 kernel = lat.opens_containing(pmax);
        Mask64 a1 = adh.adherence(p);
        Mask64 a2 = tc.tau.conv.lim(kernel);
        Mask64 a3 = scott.conv.lim(kernel);
        Mask64 a4 = scott_adh.adherence(p);
        Mask64 covered = 0;
        for (int u = 0; u < m; ++u)
          if (subset(X.open_at(u), lat.union_of(p))) covered |= bit(u);
        if (a1 != a2 || a2 != a3 || a3 != a4 || a4 != covered) {
          ok = false;
          witness = p;
        }
      }
      ctx.record(key, ok, ok ? "" : mask_detail("p", witness));
    }
  }
}

void check_discrete_example(LawContext& ctx) {
  for (int n = 2; n <= 4; ++n) {
    std::string key = "discrete" + std::to_string(n);
    if (!ctx.accepts(key)) continue;
    FiniteSpace X = FiniteSpace::discrete(n);
    OpensLattice lat(X);
    StandardAlphas alphas = standard_alphas(X);
    HyperConvergence ptop = hyper_topology(alphas.p);
    AdherenceTable adh(ptop.conv);
    Mask64 singles = 0;
    for (int x = 0; x < n; ++x) singles |= bit(X.open_index(PointSet{1} << x));
    IdealOps ops = ideal_ops(lat, singles);
    int x_idx = X.open_index(X.all_points());
    Mask64 adh_singles = adh.adherence(singles);
    bool not_in = (adh_singles & bit(x_idx)) == 0;
    bool in_closure = (adh.adherence(ops.ideal_closure) & bit(x_idx)) != 0;
    bool exact = adh_singles == (singles | bit(X.open_index(0)));
    ctx.record(key, not_in && in_closure && exact,
               json{{"not_in", not_in}, {"in_closure", in_closure}, {"exact", exact}}.dump());
  }
}

void check_prop_adhalpha(LawContext& ctx) {
  std::mt19937_64 rng(ctx.config().seed * 61 + 17);
  for (const SpaceCtx& xc : t0_grid(ctx.config().max_points)) {
    const OpensLattice& lat = *xc.lat;
    int m = lat.size();
    std::vector<std::pair<const AlphaCollection*, const char*>> labels = {
        {&xc.alphas->p, "p"}, {&xc.alphas->k, "k"}, {&xc.alphas->kappa, "kappa"}};
    for (auto [alpha, label] : labels) {
      std::string key = xc.key + " alpha=" + label;
      if (!ctx.accepts(key)) continue;
      HyperConvergence atop = hyper_topology(*alpha);
      AdherenceTable adh(atop.conv);
      bool ok = true;
      std::string detail;
      std::vector<Mask64> members;
      for (const IsotoneFamily& f : alpha->families) members.push_back(f.members(lat));
      // the minimal neighborhood of U is itself a member; together with the
      // double route below this discharges the quantifier over P
      for (int u = 0; u < m && ok; ++u) {
        Mask64 inter = full_mask(m);
        bool is_member = false;
        for (Mask64 mm : members)
          if (mm & bit(u)) inter &= mm;
        for (Mask64 mm : members)
          if (mm == inter) is_member = true;
        if (!is_member && inter != full_mask(m)) {
          ok = false;
          detail = json{{"u", u}, {"reason", "intersection-closedness"}}.dump();
        }
      }
      auto check_p = [&](Mask64 p) {
        for (int u = 0; u < m && ok; ++u) {
          bool via_adh = (adh.adherence(p) & bit(u)) != 0;
          bool via_cover = is_alpha_cover_of(lat, p, *alpha, xc.space->open_at(u)) && p != 0;
          if (via_adh != via_cover) {
            ok = false;
            detail = json{{"p", p}, {"u", u}}.dump();
          }
        }
      };
      if (m <= 10) {
        for (Mask64 p = 1; p <= full_mask(m) && ok; ++p) check_p(p);
      } else {
        for (int i = 0; i < ctx.config().sample_size && ok; ++i) {
          Mask64 p = rng() & full_mask(m);
          if (p) check_p(p);
        }
      }
      ctx.record(key, ok, detail);
    }
  }
}

}  // namespace hyperconv::lawdetail
