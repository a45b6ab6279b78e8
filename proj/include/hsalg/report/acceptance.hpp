#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsalg/exactcore/gauss_rational.hpp"
#include "hsalg/report/check.hpp"

namespace hsalg {

enum class Profile { Quick, Full };

Profile parse_profile(const std::string& name);
std::string profile_name(Profile p);

/// Deliberate corruptions used to confirm that the suite can fail.
struct FaultInjection {
  /// Adds J[1,2] to [J[0,0'], J[0,1]] in o(3,2) before the Jacobi sweep.
  bool corrupt_structure_constant = false;
};

struct AcceptanceOptions {
  Profile profile = Profile::Full;
  std::uint64_t seed = 1;
  FaultInjection faults;
};

constexpr int kCriterionCount = 13;

/// Short title of criterion id (1..13).
std::string criterion_title(int id);

/// Runs one acceptance criterion; all comparisons are exact.
CheckReport run_criterion(int id, const AcceptanceOptions& options);

struct CriterionOutcome {
  int id;
  CheckReport report;
  double seconds;
};

/// Runs every criterion in order.
std::vector<CriterionOutcome> run_acceptance(const AcceptanceOptions& options);

/// Wall-clock budget of a criterion under the full profile, in seconds (0 = none).
double criterion_budget(int id);

}  // namespace hsalg
