#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mtt/derivative.hpp"
#include "mtt/matrix.hpp"

namespace mtt {

// Insertion-ordered so reports serialize with stable key order.
using Json = nlohmann::ordered_json;

// Deliberate faults, injected at the suite level. Each one must make
// at least one suite fail with a reported witness; the sensitivity
// tests pin that down.
enum class Mutation {
  kNone,
  kFlipCofactorSign,     // negate every cofactor the suites compute
  kSkipContractRelabel,  // contract trees without the label shift
};

std::string to_string(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string detail;          // one-line parameter summary
  std::vector<Json> failures;  // first few witnesses, full payloads

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

Json to_json(const SuiteResult& s);
Json to_json(const IdentityReport& r);

struct VerifyConfig {
  std::uint64_t seed = 12345;
  Index n_min = 2;
  Index n_max = 7;
  long long instances = 100;
  Index symbolic_n_max = 5;
  bool numeric = false;
  bool symbolic = false;
  bool derivatives = false;
  bool nonsymmetric = false;
  Mutation mutation = Mutation::kNone;
  std::size_t max_witnesses = 5;

  // Canonical one-line rendering; its digest identifies the run input.
  std::string describe() const;
};

// Aggregated outcome of one CLI command. Timing is deliberately not a
// field: reports must be byte-identical across runs for a fixed seed,
// so the CLI prints elapsed time on the human channel only.
struct RunReport {
  std::string command;
  std::string input_digest;
  Json results;
  bool all_passed = true;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

// 64-bit FNV-1a, rendered "fnv1a:<16 hex digits>".
std::string fnv1a_digest(std::string_view text);

// --- individual suites (the acceptance harness calls these directly
// with each criterion's exact parameters) ---

// C(L) = (-1)^{n+1} T(L) on random symmetric zero-row-sum matrices.
SuiteResult numeric_identity_suite(std::uint64_t seed, Index n_min,
                                   Index n_max, long long instances,
                                   Mutation mutation = Mutation::kNone,
                                   std::size_t max_witnesses = 5);

// All n^2 cofactors agree on random symmetric zero-row-sum matrices.
SuiteResult cofactor_equality_suite(std::uint64_t seed, Index n_min,
                                    Index n_max, long long instances,
                                    std::size_t max_witnesses = 5);

// C(0) = T(0) = 0.
SuiteResult base_case_suite(Index n_min, Index n_max);

// Expanded-polynomial identity for n = 1..n_max.
SuiteResult symbolic_suite(Index n_max, std::size_t max_witnesses = 5);

// Both contraction identities, every pair (i,j), random matrices.
SuiteResult derivative_identity_suite(std::uint64_t seed, Index n_min,
                                      Index n_max, long long instances,
                                      std::size_t max_witnesses = 5);

// Exhaustive fiber checks: the fiber-sum identity for every
// (t', i, j), fiber sizes 2^deg, and agreement with brute-force
// bucketing of all n-vertex trees by their contraction.
SuiteResult fiber_suite(std::uint64_t seed, Index n_min, Index n_max,
                        Mutation mutation = Mutation::kNone,
                        std::size_t max_witnesses = 5);

// Cofactor contraction identity on random non-symmetric doubly
// balanced matrices (symmetry is forced at n = 2, so non-symmetric
// instances start at n = 3).
SuiteResult nonsymmetric_suite(std::uint64_t seed, Index n_min, Index n_max,
                               long long instances,
                               std::size_t max_witnesses = 5);

// Runs the suite groups selected by the config flags. Deterministic:
// a fixed config yields a byte-identical serialized report.
RunReport run_verification_suite(const VerifyConfig& config);

std::string render_human(const RunReport& report);

}  // namespace mtt
