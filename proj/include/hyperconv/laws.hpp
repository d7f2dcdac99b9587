#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperconv/error.hpp"

namespace hyperconv {

struct ScopeConfig {
  int max_points = 4;           // grid cap for hyperspace laws (function-space laws cap at 3)
  int depth = 8;                // ladder truncation
  std::uint64_t seed = 1;       // sampling seed
  int sampled_posets = 4;       // 4-point posets added to the transfer grid
  int sample_size = 500;        // size of seeded samples where laws sample
  int jobs = 0;                 // 0 = hardware concurrency
  std::string instance_filter;  // run only instances whose key contains this
};

struct FailureRecord {
  std::string instance;  // deterministic instance key
  std::string detail;    // serialized counterexample data
};

struct LawResult {
  std::string id;
  long instances = 0;
  long passes = 0;
  std::vector<FailureRecord> failures;
  bool skipped = false;       // law did not run at this config
  std::string skip_reason;    // must be nonempty when skipped
  double wall_ms = 0;

  bool passed() const { return !skipped && failures.empty(); }
};

/// Collects per-instance outcomes for one law run.
class LawContext {
 public:
  LawContext(const ScopeConfig& config, LawResult& result) : config_(config), result_(&result) {}

  const ScopeConfig& config() const { return config_; }
  bool accepts(const std::string& instance_key) const {
    return config_.instance_filter.empty() ||
           instance_key.find(config_.instance_filter) != std::string::npos;
  }
  void record(const std::string& instance_key, bool pass, const std::string& detail = "") {
    ++result_->instances;
    if (pass)
      ++result_->passes;
    else
      result_->failures.push_back({instance_key, detail});
  }

 private:
  ScopeConfig config_;
  LawResult* result_;
};

struct LawRecord {
  std::string id;
  std::string anchor;  // one entry of the scope manifest
  std::string scope;   // human-readable quantification bounds
  std::function<void(LawContext&)> checker;
};

const std::vector<LawRecord>& law_registry();

/// The scope manifest: one anchor per in-scope statement. The registry is
/// checked against this list one-to-one.
std::vector<std::string> scope_manifest();

struct Report {
  std::vector<LawResult> results;  // sorted by law id

  bool all_passed() const;
  bool has_silent_skip() const;
  std::string to_text(bool with_timing) const;
  std::string to_json(bool with_timing) const;  // schema 1
};

/// Runs the selected laws (all when `only` is empty) instance-parallel.
/// Unknown ids throw UnknownLaw. Deterministic up to wall times.
Report run_laws(const std::vector<std::string>& only, const ScopeConfig& config);

}  // namespace hyperconv
