// Internal machinery shared by the law checkers. Not installed.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>

#include "hyperconv/enumerate.hpp"
#include "hyperconv/funcspace.hpp"
#include "hyperconv/laws.hpp"
#include "hyperconv/transfer.hpp"
#include "json.hpp"

namespace hyperconv::lawdetail {

using nlohmann::json;

struct SpaceCtx {
  std::unique_ptr<FiniteSpace> space;
  std::unique_ptr<OpensLattice> lat;
  std::unique_ptr<StandardAlphas> alphas;
  std::string key;

  // pairwise helpers over opens indices (m = open count, m <= 16):
  // join_idx[a*m+b]      index of the union
  // dom_point[a*m+b]     opens containing the union, by point inclusion
  // dom_mask[a*m+b]      opens whose superset-mask sits inside both masks
  std::vector<int> join_idx;
  std::vector<Mask64> dom_point, dom_mask;
  std::vector<bool> subbase_flag, base_flag;  // per family mask
  std::vector<PointSet> inters;               // all intersections of opens

  bool is_ideal_subbase(Mask64 p) const;
  bool is_ideal_base(Mask64 p) const;
  Mask64 union_closure(Mask64 p) const;
  Mask64 reduced_ideal_fast(Mask64 kernel) const;
};

const std::vector<SpaceCtx>& t0_grid(int max_points);

struct ZCtx {
  std::unique_ptr<FiniteSpace> space;
  std::string name;
};

const std::vector<ZCtx>& z_triple();

std::vector<SpaceCtx> transfer_grid(const ScopeConfig& cfg);
std::vector<std::pair<std::string, Mask64>> transfer_kernels(const SpaceCtx& ctx, const ScopeConfig& cfg);

struct TauCtx {
  HyperConvergence tau;
  bool between = false;  // p(X,$) <= tau <= [X,$]
  std::string name;
};

std::vector<TauCtx> tau_suite(const SpaceCtx& ctx);

json space_json(const FiniteSpace& s);
std::string mask_detail(const char* name, Mask64 m);
json family_json(const IsotoneFamily& f);

// section 2
void check_preimagewise_def(LawContext& ctx);
void check_prop_idealbasis(LawContext& ctx);
// section 3
void check_bracket_sets(LawContext& ctx);
void check_standard_collections(LawContext& ctx);
void check_scott_criterion(LawContext& ctx);
void check_alpha_lift_identity(LawContext& ctx);
void check_natural_lift_identity(LawContext& ctx);
void check_upper_kuratowski(LawContext& ctx);
// section 4
void check_solid_axioms(LawContext& ctx);
void check_up_regular(LawContext& ctx);
void check_lemma_closure(LawContext& ctx);
void check_t0_not_t1(LawContext& ctx);
// section 5
void check_prop_refine(LawContext& ctx);
void check_ideal_subbase(LawContext& ctx);
void check_reduced_ideal(LawContext& ctx);
void check_prop_base(LawContext& ctx);
void check_prop_adh_lim(LawContext& ctx);
void check_cover_proposition(LawContext& ctx);
void check_cor_idealcover(LawContext& ctx);
void check_discrete_example(LawContext& ctx);
void check_prop_adhalpha(LawContext& ctx);
// section 6
void check_wn_ladder(LawContext& ctx);
void check_conv_at_zero(LawContext& ctx);
void check_erected_filter(LawContext& ctx);
void check_liftsequence(LawContext& ctx);
void check_anwn(LawContext& ctx);
void check_falpha(LawContext& ctx);
void check_zero_polar(LawContext& ctx);
// section 8
void check_constr_rel(LawContext& ctx);
void check_scaling(LawContext& ctx);
void check_f_upper(LawContext& ctx);
void check_functional_separation(LawContext& ctx);
void check_lemma_separation(LawContext& ctx);
void check_transfer_compact(LawContext& ctx);
// sections 9 and 10
void check_alpha_lindelof(LawContext& ctx);
void check_alpha_arens(LawContext& ctx);
void check_alpha_hurewicz(LawContext& ctx);
void check_alpha_rothberger(LawContext& ctx);
void check_tightness_identity(LawContext& ctx);
// section 12
void check_dual_definition(LawContext& ctx);
void check_thm_equality(LawContext& ctx);
void check_eq_3alphas(LawContext& ctx);

}  // namespace hyperconv::lawdetail
