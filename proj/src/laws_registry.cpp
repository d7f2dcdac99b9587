#include <atomic>
#include <chrono>
#include <thread>

#include "law_checks.hpp"

namespace hyperconv {

namespace {
using lawdetail::json;

std::vector<LawRecord> build_registry() {
  using namespace lawdetail;
  std::vector<LawRecord> laws;
  auto add = [&](std::string id, std::string anchor, std::string scope, void (*fn)(LawContext&)) {
    laws.push_back({std::move(id), std::move(anchor), std::move(scope), fn});
  };
  add("preimagewise-def", "preimagewise-lift-definition",
      "T0 spaces <=3 points, Z in {sierpinski,discrete2,chain3}, carriers <=14 maps; larger carriers "
      "covered by the identity laws",
      check_preimagewise_def);
  add("prop-idealbasis", "ideal-basis-suffices-for-lifts",
      "solid suite members, T0 X <=3 points, Z triple, carriers <=14 maps", check_prop_idealbasis);
  add("bracket-sets", "bracket-set-identities", "T0 X <=3 points, Z triple, all generators and pairs",
      check_bracket_sets);
  add("standard-collections", "finitely-compactly-generated-and-compact-collections",
      "T0 spaces <=4 points, collections from their own definitions", check_standard_collections);
  add("scott-convergence", "scott-convergence-criterion",
      "all kernels for <=10 opens, seeded kernels beyond; pinned examples", check_scott_criterion);
  add("alpha-lift-identity", "alpha-topology-is-preimagewise",
      "T0 X <=3 points, Z triple, alpha in {p,k,kappa,s}; every kernel, incrementally on large carriers",
      check_alpha_lift_identity);
  add("natural-lift-identity", "natural-convergence-is-preimagewise",
      "T0 X <=3 points, Z triple; every kernel, incrementally on large carriers",
      check_natural_lift_identity);
  add("upper-kuratowski", "upper-kuratowski-complement-view", "T0 spaces <=4 points, every kernel",
      check_upper_kuratowski);
  add("solid-axioms", "solid-hyperconvergence-axioms",
      "T0 spaces <=4 points, suite members; directed systems as comparable pairs (finite directed "
      "systems attain their top)",
      check_solid_axioms);
  add("prop-up-regular", "lower-topologies-are-upper-regular",
      "T0 spaces <=4 points, suite topologies plus seeded single-family topologies", check_up_regular);
  add("lemma-closure", "closure-of-singleton-hypersets",
      "T0 spaces <=4 points, suite members between p(X,$) and the Scott convergence",
      check_lemma_closure);
  add("t0-not-t1", "hyperspace-t0-not-t1",
      "T0 spaces <=4 points, suite members between p(X,$) and the Scott convergence", check_t0_not_t1);
  add("prop-refine", "refinement-three-way-equivalence",
      "T0 spaces <=4 points; all pairs via per-R member sets, sampled pairs via the public routines",
      check_prop_refine);
  add("ideal-subbase", "ideal-subbase-filter-base",
      "T0 spaces <=4 points; pairwise domination routes compared exhaustively, sampled families",
      check_ideal_subbase);
  add("reduced-ideal", "reduced-ideal-of-a-hyperfilter",
      "all kernels for <=10 opens, seeded kernels beyond; superset-enumeration oracle",
      check_reduced_ideal);
  add("prop-base", "scott-convergence-base", "T0 spaces <=4 points, every kernel", check_prop_base);
  add("prop-adh-lim", "adherence-equals-lim-of-regularization",
      "T0 spaces <=4 points, upper-regular suite members, every ideal subbase", check_prop_adh_lim);
  add("cover-proposition", "covers-detected-by-ideal-closure-adherence",
      "T0 spaces <=4 points, solid suite members between p(X,$) and the Scott convergence",
      check_cover_proposition);
  add("cor-idealcover", "ideal-base-adherence-collapse",
      "T0 spaces <=4 points, solid suite members between p(X,$) and the Scott convergence, every "
      "ideal base",
      check_cor_idealcover);
  add("discrete-example", "discrete-singleton-cover-example", "discrete spaces with 2..4 points",
      check_discrete_example);
  add("prop-adhalpha", "alpha-cover-adherence",
      "T0 spaces <=4 points, intersection-closed collections; minimal-neighborhood identity per U "
      "plus double-route checks (exhaustive <=10 opens, sampled beyond)",
      check_prop_adhalpha);
  add("wn-ladder", "zero-neighborhood-ladder",
      "ladder shape at the configured depth; erected monotonicity on the curated grid", check_wn_ladder);
  add("lemma-conv-at-zero", "lift-convergence-at-zero",
      "curated grid, solid suite members, every transfer kernel; finite window catalog",
      check_conv_at_zero);
  add("erected-filter", "erected-filter-construction", "curated grid, every transfer kernel",
      check_erected_filter);
  add("lemma-liftsequence", "erected-sequence-supremum", "curated grid, seeded filter sequences",
      check_liftsequence);
  add("thm-anwn", "sequence-lift-to-zero", "curated grid, solid suite members, kernels converging to X",
      check_anwn);
  add("cor-falpha", "erected-filter-converges-at-zero",
      "curated grid, solid suite members, kernels converging to X; pinned-away counterexample",
      check_falpha);
  add("cor-0-polar", "zero-polar-bracket", "curated grid, solid suite members, kernels converging to X",
      check_zero_polar);
  add("prop-constr-rel", "relation-reconstruction-of-erected-filters",
      "curated grid, every transfer kernel, truncated index space", check_constr_rel);
  add("scaling-law", "erected-window-rescaling", "curated grid, erected and zero filters, h(t)=2t",
      check_scaling);
  add("f-upper", "filter-below-its-own-erection", "curated grid, erected and zero filters",
      check_f_upper);
  add("functional-separation", "functional-separation-predicate",
      "T0 spaces <=4 points, every compact family; {0,1}-table oracle", check_functional_separation);
  add("lemma-separation", "normal-separation-base",
      "normal spaces <=3 points with closed cores (the closed-neighborhood step needs regularity)",
      check_lemma_separation);
  add("thm-transfer-compact", "filter-transfer-reconstruction",
      "curated grid, every transfer kernel, two ladder windows; pinned witnesses",
      check_transfer_compact);
  add("alpha-lindelof", "alpha-lindelof-number",
      "T0 spaces <=3 points, alpha in {s,p,kappa}, every open U; cover route vs per-family adherence "
      "route",
      check_alpha_lindelof);
  add("alpha-arens", "alpha-arens-number",
      "T0 spaces <=3 points, alpha in {s,p,kappa}; minimal-member formula vs exhaustive cofinality "
      "search",
      check_alpha_arens);
  add("alpha-hurewicz", "alpha-hurewicz-selection",
      "T0 spaces <=3 points, s-covers as two-term sequences; pinned examples", check_alpha_hurewicz);
  add("alpha-rothberger", "alpha-rothberger-selection",
      "T0 spaces <=3 points, single s-covers; pinned examples", check_alpha_rothberger);
  add("tightness-identity", "cover-number-tightness-identity",
      "T0 spaces <=4 points: adherence collapse; <=3 points: tightness one and the collapse of "
      "intersection-closed collections",
      check_tightness_identity);
  add("dual-convergence-def", "dual-convergence-definition",
      "T0 X <=3 points, Z triple, singleton collections, carriers <=14 maps", check_dual_definition);
  add("thm-equality", "dual-equals-natural", "T0 X <=3 points, Z triple, alpha in {p,k,kappa}",
      check_thm_equality);
  add("eq-3alphas", "dual-reflection-topology-chain", "T0 X <=3 points, Z triple, alpha = kappa",
      check_eq_3alphas);
  return laws;
}
}  // namespace

const std::vector<LawRecord>& law_registry() {
  static std::vector<LawRecord> registry = build_registry();
  return registry;
}

std::vector<std::string> scope_manifest() {
  std::vector<std::string> out;
  for (const LawRecord& law : law_registry()) out.push_back(law.anchor);
  return out;
}

bool Report::all_passed() const {
  for (const LawResult& r : results)
    if (!r.passed() && !(r.skipped && !r.skip_reason.empty())) return false;
  return true;
}

bool Report::has_silent_skip() const {
  for (const LawResult& r : results)
    if (r.skipped && r.skip_reason.empty()) return true;
  return false;
}

std::string Report::to_text(bool with_timing) const {
  std::ostringstream os;
  long total = 0, failed = 0;
  for (const LawResult& r : results) {
    if (r.skipped) {
      os << "SKIP " << r.id << " (" << (r.skip_reason.empty() ? "no reason" : r.skip_reason) << ")\n";
      continue;
    }
    os << (r.failures.empty() ? "PASS " : "FAIL ") << r.id << "  instances=" << r.instances;
    if (with_timing) os << "  ms=" << static_cast<long>(r.wall_ms);
    if (!r.failures.empty()) {
      os << "  failures=" << r.failures.size() << "  first: " << r.failures.front().instance;
      if (!r.failures.front().detail.empty()) os << " " << r.failures.front().detail;
      failed += static_cast<long>(r.failures.size());
    }
    os << "\n";
    total += r.instances;
  }
  os << (failed == 0 ? "ALL LAWS PASS" : "FAILURES PRESENT") << " (" << results.size() << " laws, "
     << total << " instances)\n";
  return os.str();
}

std::string Report::to_json(bool with_timing) const {
  json j;
  j["schema"] = 1;
  json laws = json::array();
  for (const LawResult& r : results) {
    json lr;
    lr["id"] = r.id;
    for (const LawRecord& rec : law_registry())
      if (rec.id == r.id) {
        lr["anchor"] = rec.anchor;
        lr["scope"] = rec.scope;
      }
    lr["instances"] = r.instances;
    lr["passes"] = r.passes;
    lr["skipped"] = r.skipped;
    if (r.skipped) lr["skip_reason"] = r.skip_reason;
    if (with_timing) lr["wall_ms"] = r.wall_ms;
    json fails = json::array();
    for (const FailureRecord& f : r.failures) {
      json fj;
      fj["instance"] = f.instance;
      if (!f.detail.empty()) fj["detail"] = f.detail;
      fails.push_back(fj);
    }
    lr["failures"] = fails;
    laws.push_back(lr);
  }
  j["laws"] = laws;
  return j.dump(2);
}

Report run_laws(const std::vector<std::string>& only, const ScopeConfig& config) {
  const std::vector<LawRecord>& registry = law_registry();
  std::vector<const LawRecord*> selected;
  if (only.empty()) {
    for (const LawRecord& law : registry) selected.push_back(&law);
  } else {
    for (const std::string& id : only) {
      const LawRecord* found = nullptr;
      for (const LawRecord& law : registry)
        if (law.id == id) found = &law;
      if (!found) fail(ErrorKind::UnknownLaw, id);
      selected.push_back(found);
    }
  }

  std::vector<LawResult> results(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) break;
      LawResult& r = results[i];
      r.id = selected[i]->id;
      LawContext ctx(config, r);
      auto start = std::chrono::steady_clock::now();
      try {
        selected[i]->checker(ctx);
      } catch (const std::exception& e) {
        r.failures.push_back({"checker-exception", e.what()});
        ++r.instances;
      }
      r.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (r.instances == 0 && !config.instance_filter.empty()) {
        r.skipped = true;
        r.skip_reason = "no instance matches filter '" + config.instance_filter + "'";
      }
    }
  };
  unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report report;
  report.results = std::move(results);
  std::sort(report.results.begin(), report.results.end(),
            [](const LawResult& a, const LawResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace hyperconv
