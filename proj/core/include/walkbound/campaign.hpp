#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkbound/bounds.hpp"
#include "walkbound/generate.hpp"
#include "walkbound/simulate.hpp"

namespace walkbound {

// Consistency checks run per instance beyond the bound audit. `ok` stays
// true for checks that do not apply (non-trees, floating mode).
struct CrossCheck {
  std::string name;
  bool applicable = false;
  bool ok = true;
  std::string detail;
};

struct InstanceRecord {
  int index = 0;
  std::string name;
  std::string family;
  int n = 0;
  int m = 0;
  Scalar tau;
  bool simple = false;
  bool tree = false;
  BoundReport bounds;
  std::vector<CrossCheck> checks;
  std::optional<EstimateSummary> spot_check;
  bool spot_check_ok = true;
  std::vector<std::string> errors;  // solve/setup failures, verbatim
  bool pass = false;
};

struct Report {
  std::string version;
  CampaignConfig config;
  std::vector<InstanceRecord> instances;
  struct Summary {
    int instances = 0;
    long long records = 0;
    long long bound_violations = 0;
    long long check_failures = 0;
    long long solver_failures = 0;
    double max_residual = 0.0;
    bool pass = false;
  } summary;
};

// Generates config.count instances, audits every applicable bound on every
// ordered pair, and runs the cross-check battery:
//   - fixture profiles reproduce exactly,
//   - tree closed forms match the dense solver (hitting and visit counts),
//   - neighbor hitting sum at the target is 2m - deg(a) (simple walks),
//   - commute time factors as total conductance times effective resistance,
//   - edge traversal counts match the indicator-cost solve,
//   - optional Monte Carlo spot check of one hitting time (3 halfwidths).
// Instances run in parallel; records assemble in index order, so reports are
// deterministic for a fixed config. Failures are recorded, never fatal.
Report run_campaign(const CampaignConfig& config);

}  // namespace walkbound
