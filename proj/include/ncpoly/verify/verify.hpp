#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncpoly/nestedsets.hpp"
#include "ncpoly/verify/cache.hpp"

namespace ncpoly::verify {

enum class Status { kPass, kFail, kEvidence };
std::string status_name(Status s);  // "pass", "fail", "evidence-only"

struct Report {
  std::string id;      // "AC01" .. "AC12"
  std::string anchor;  // the result being checked
  Status status = Status::kFail;
  nlohmann::json values;
  double elapsed_seconds = 0;
};

// Keys are sorted; elapsed_seconds is the only timing field.
nlohmann::json to_json(const Report& r);

enum class Suite { kStar, kPair, kPath, kAll };
std::optional<Suite> parse_suite(const std::string& s);
std::string suite_name(Suite s);

// Largest n per family: star 5, pair 4, path 6 (path counts Σ l_i).
inline constexpr int kStarGuard = 5;
inline constexpr int kPairGuard = 4;
inline constexpr int kPathGuard = 6;

// Per-family ceilings; 0 leaves the family out.
struct Scope {
  int star = 0;
  int pair = 0;
  int path = 0;
};

struct SuiteOptions {
  Suite suite = Suite::kAll;
  std::optional<int> n_max;  // default: star 5, pair 4, path 5
  int jobs = 1;
  const Cache* cache = nullptr;
};

struct SuiteResult {
  std::vector<Report> reports;   // sorted by id
  std::optional<std::string> refusal;  // guard violation; no checks ran
  // 0 all pass, 1 a pass/fail check failed, 2 refusal
  int exit_code() const;
};

// For `all`, n_max caps every family at min(n_max, its guard); a single
// family refuses an n_max above its guard.
std::optional<Scope> scope_for(Suite suite, std::optional<int> n_max, std::string* why);

SuiteResult run_suite(const SuiteOptions& opts);

// `run` fills status and values of a report that already carries id and anchor.
struct Check {
  std::string id;
  std::string anchor;
  std::function<void(Report&, const Scope&, const Cache*)> run;
  // families the check belongs to
  bool star = false, pair = false, path = false;
};
const std::vector<Check>& all_checks();

// P(ℓ) for ℓ = (l, 0, …, 0) ∈ ℕ^n: UGB, state polytope by fibers, f-vector,
// then the observational report with that n. Zero entries add only free
// variables, so the polytope is computed for ℓ = (l).
struct ConjectureRun {
  int l = 0;
  int n = 0;
  std::size_t ugb_size = 0;
  std::size_t vertices = 0;
  nested::ConjectureReport report;
};
ConjectureRun conjecture_pipeline(int l, int n, const Cache* cache);
nlohmann::json to_json(const ConjectureRun& r);

}  // namespace ncpoly::verify
