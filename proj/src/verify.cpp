#include "mtt/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "mtt/errors.hpp"
#include "mtt/random_gen.hpp"
#include "mtt/symbolic.hpp"
#include "mtt/trees.hpp"

namespace mtt {
namespace {

Index enumeration_cap(Index n) { return std::max(n, kDefaultEnumerationCap); }

// (-1)^{n+1}: +1 for odd n, -1 for even n.
Rational parity_sign(Index n) { return Rational(n % 2 == 1 ? 1 : -1); }

void record_failure(SuiteResult& s, std::size_t max_witnesses, Json witness) {
  s.passed = false;
  if (s.failures.size() < max_witnesses) {
    s.failures.push_back(std::move(witness));
  }
}

void record_report(SuiteResult& s, std::size_t max_witnesses,
                   const IdentityReport& r) {
  ++s.checks;
  if (!r.equal) record_failure(s, max_witnesses, to_json(r));
}

std::string range_text(Index n_min, Index n_max) {
  return "n in [" + std::to_string(n_min) + "," + std::to_string(n_max) + "]";
}

}  // namespace

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::kNone:
      return "none";
    case Mutation::kFlipCofactorSign:
      return "flip-cofactor-sign";
    case Mutation::kSkipContractRelabel:
      return "skip-contract-relabel";
  }
  return "none";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  if (name == "none") return Mutation::kNone;
  if (name == "flip-cofactor-sign") return Mutation::kFlipCofactorSign;
  if (name == "skip-contract-relabel") return Mutation::kSkipContractRelabel;
  return std::nullopt;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["instance"] = r.instance;
  j["left"] = r.left.to_string();
  j["right"] = r.right.to_string();
  j["equal"] = r.equal;
  return j;
}

Json to_json(const SuiteResult& s) {
  Json j;
  j["name"] = s.name;
  j["passed"] = s.passed;
  j["checks"] = s.checks;
  j["detail"] = s.detail;
  j["failures"] = s.failures;
  return j;
}

std::string VerifyConfig::describe() const {
  std::ostringstream out;
  out << "seed=" << seed << " n=[" << n_min << "," << n_max
      << "] instances=" << instances << " symbolic_n_max=" << symbolic_n_max
      << " groups=";
  bool first = true;
  const auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!first) out << ',';
    out << name;
    first = false;
  };
  add(numeric, "numeric");
  add(symbolic, "symbolic");
  add(derivatives, "derivatives");
  add(nonsymmetric, "nonsymmetric");
  if (first) out << "none";
  out << " mutation=" << to_string(mutation);
  return out.str();
}

Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["results"] = r.results;
  j["all_passed"] = r.all_passed;
  return j;
}

RunReport run_report_from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  r.results = j.at("results");
  r.all_passed = j.at("all_passed").get<bool>();
  return r;
}

std::string fnv1a_digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << h;
  return out.str();
}

SuiteResult numeric_identity_suite(std::uint64_t seed, Index n_min,
                                   Index n_max, long long instances,
                                   Mutation mutation,
                                   std::size_t max_witnesses) {
  SuiteResult s;
  s.name = "identity_numeric";
  s.detail = range_text(n_min, n_max) + ", " + std::to_string(instances) +
             " instances per n, exact equality";
  Rng rng(seed);
  for (Index n = n_min; n <= n_max; ++n) {
    const auto trees = all_trees(n, enumeration_cap(n));
    for (long long k = 1; k <= instances; ++k) {
      const LaplaceLikeMatrix L = random_laplace_like(rng, n);
      Rational c = common_cofactor(L, CofactorCheck::kSingle);
      if (mutation == Mutation::kFlipCofactorSign) c = -c;
      const Rational t = tree_sum(L.matrix(), std::span(trees));
      const Rational rhs = parity_sign(n) * t;
      ++s.checks;
      if (c != rhs) {
        std::ostringstream instance;
        instance << "n=" << n << " instance=" << k
                 << " L=" << format_matrix_inline(L.matrix());
        record_failure(
            s, max_witnesses,
            to_json(IdentityReport{"identity_numeric", instance.str(), c, rhs,
                                   false}));
      }
    }
  }
  return s;
}

SuiteResult cofactor_equality_suite(std::uint64_t seed, Index n_min,
                                    Index n_max, long long instances,
                                    std::size_t max_witnesses) {
  SuiteResult s;
  s.name = "cofactor_equality";
  s.detail = range_text(n_min, n_max) + ", " + std::to_string(instances) +
             " instances per n, all n^2 cofactors compared";
  Rng rng(seed);
  for (Index n = n_min; n <= n_max; ++n) {
    for (long long k = 1; k <= instances; ++k) {
      const LaplaceLikeMatrix L = random_laplace_like(rng, n);
      ++s.checks;
      try {
        common_cofactor(L, CofactorCheck::kAll);
      } catch (const InvariantViolation& e) {
        Json witness;
        witness["identity"] = "cofactor_equality";
        witness["instance"] = "n=" + std::to_string(n) +
                              " instance=" + std::to_string(k) +
                              " L=" + format_matrix_inline(L.matrix());
        witness["error"] = e.what();
        record_failure(s, max_witnesses, std::move(witness));
      }
    }
  }
  return s;
}

SuiteResult base_case_suite(Index n_min, Index n_max) {
  SuiteResult s;
  s.name = "base_case";
  s.detail = "zero matrix, " + range_text(n_min, n_max) +
             ", cofactor and tree sum both vanish";
  for (Index n = n_min; n <= n_max; ++n) {
    MatrixQ zero(n, n);
    zero.setZero();
    const Rational c =
        common_cofactor(LaplaceLikeMatrix(zero), CofactorCheck::kSingle);
    const Rational t = tree_sum(zero, enumeration_cap(n));
    record_report(s, 5,
                  IdentityReport{"base_case_cofactor",
                                 "n=" + std::to_string(n), c, Rational(0),
                                 c.is_zero()});
    record_report(s, 5,
                  IdentityReport{"base_case_tree_sum",
                                 "n=" + std::to_string(n), t, Rational(0),
                                 t.is_zero()});
  }
  return s;
}

SuiteResult symbolic_suite(Index n_max, std::size_t max_witnesses) {
  SuiteResult s;
  s.name = "identity_symbolic";
  s.detail = "n in [1," + std::to_string(n_max) +
             "], expanded polynomials, term counts checked against n^{n-2}";
  const Index cap = std::max(n_max, kDefaultSymbolicCap);
  for (Index n = 1; n <= n_max; ++n) {
    const SymbolicIdentityReport rep = verify_symbolic_identity(n, cap);
    const std::uint64_t expected_terms = labeled_tree_count(n);
    ++s.checks;
    if (!rep.equal) {
      Json witness;
      witness["identity"] = "identity_symbolic";
      witness["instance"] = "n=" + std::to_string(n);
      witness["witness"] = rep.witness;
      record_failure(s, max_witnesses, std::move(witness));
    }
    ++s.checks;
    if (rep.cofactor_terms != expected_terms ||
        rep.tree_sum_terms != expected_terms) {
      Json witness;
      witness["identity"] = "identity_symbolic_term_count";
      witness["instance"] = "n=" + std::to_string(n);
      witness["cofactor_terms"] = rep.cofactor_terms;
      witness["tree_sum_terms"] = rep.tree_sum_terms;
      witness["expected_terms"] = expected_terms;
      record_failure(s, max_witnesses, std::move(witness));
    }
  }
  return s;
}

SuiteResult derivative_identity_suite(std::uint64_t seed, Index n_min,
                                      Index n_max, long long instances,
                                      std::size_t max_witnesses) {
  SuiteResult s;
  s.name = "derivative_identities";
  s.detail = range_text(n_min, n_max) + ", " + std::to_string(instances) +
             " instances per n, all pairs (i,j), both contraction identities";
  Rng rng(seed);
  for (Index n = n_min; n <= n_max; ++n) {
    const auto trees_n = all_trees(n, enumeration_cap(n));
    const auto trees_c = all_trees(n - 1, enumeration_cap(n - 1));
    for (long long k = 1; k <= instances; ++k) {
      const LaplaceLikeMatrix L = random_laplace_like(rng, n);
      for (Index i = 1; i <= n; ++i) {
        for (Index j = i + 1; j <= n; ++j) {
          record_report(s, max_witnesses,
                        verify_tree_sum_identity(L, i, j, trees_n, trees_c));
          record_report(s, max_witnesses, verify_cofactor_identity(L, i, j));
        }
      }
    }
  }
  return s;
}

SuiteResult fiber_suite(std::uint64_t seed, Index n_min, Index n_max,
                        Mutation mutation, std::size_t max_witnesses) {
  SuiteResult s;
  s.name = "contraction_fibers";
  s.detail = range_text(n_min, n_max) +
             ", exhaustive over (t', i, j): fiber-sum identity, sizes 2^deg, "
             "brute-force agreement, partition";
  if (n_min < 3) {
    throw std::invalid_argument("fiber_suite: n_min must be >= 3");
  }
  const bool relabel = mutation != Mutation::kSkipContractRelabel;
  Rng rng(seed);
  for (Index n = n_min; n <= n_max; ++n) {
    const auto trees_n = all_trees(n, enumeration_cap(n));
    const auto trees_c = all_trees(n - 1, enumeration_cap(n - 1));
    const LaplaceLikeMatrix L = random_laplace_like(rng, n);
    for (Index i = 1; i <= n; ++i) {
      for (Index j = i + 1; j <= n; ++j) {
        std::map<std::vector<LabeledTree::Edge>,
                 std::vector<const LabeledTree*>>
            buckets;
        std::uint64_t with_edge = 0;
        for (const auto& t : trees_n) {
          if (!t.has_edge(i, j)) continue;
          ++with_edge;
          buckets[contract_tree_edges(t, i, j, relabel)].push_back(&t);
        }
        std::uint64_t fiber_total = 0;
        for (const auto& tp : trees_c) {
          const auto fiber = contraction_fiber(tp, i, j, n);
          fiber_total += fiber.size();
          const std::string instance = "n=" + std::to_string(n) + " (i,j)=(" +
                                       std::to_string(i) + "," +
                                       std::to_string(j) + ") t'=[" +
                                       tp.to_string() + "]";

          const auto expected_size = std::uint64_t{1} << tp.degree(i);
          ++s.checks;
          if (fiber.size() != expected_size) {
            Json witness;
            witness["identity"] = "fiber_size";
            witness["instance"] = instance;
            witness["fiber_size"] = fiber.size();
            witness["expected"] = expected_size;
            record_failure(s, max_witnesses, std::move(witness));
          }

          std::vector<LabeledTree> brute;
          if (const auto it = buckets.find(tp.edges());
              it != buckets.end()) {
            for (const auto* t : it->second) brute.push_back(*t);
          }
          std::vector<LabeledTree> direct = fiber;
          std::sort(direct.begin(), direct.end());
          std::sort(brute.begin(), brute.end());
          ++s.checks;
          if (direct != brute) {
            Json witness;
            witness["identity"] = "fiber_bruteforce";
            witness["instance"] = instance;
            witness["fiber_size"] = direct.size();
            witness["bruteforce_size"] = brute.size();
            record_failure(s, max_witnesses, std::move(witness));
          }

          record_report(s, max_witnesses, check_fiber_sum(tp, L, i, j));
        }
        ++s.checks;
        if (fiber_total != with_edge) {
          Json witness;
          witness["identity"] = "fiber_partition";
          witness["instance"] = "n=" + std::to_string(n) + " (i,j)=(" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")";
          witness["fiber_total"] = fiber_total;
          witness["trees_with_edge"] = with_edge;
          record_failure(s, max_witnesses, std::move(witness));
        }
      }
    }
  }
  return s;
}

SuiteResult nonsymmetric_suite(std::uint64_t seed, Index n_min, Index n_max,
                               long long instances,
                               std::size_t max_witnesses) {
  SuiteResult s;
  s.name = "nonsymmetric_balanced";
  s.detail = range_text(n_min, n_max) + ", " + std::to_string(instances) +
             " doubly balanced instances per n, non-symmetric for n >= 3 "
             "(n = 2 is forced symmetric), all pairs (i,j)";
  Rng rng(seed);
  for (Index n = n_min; n <= n_max; ++n) {
    for (long long k = 1; k <= instances; ++k) {
      const DoublyBalancedMatrix D =
          random_doubly_balanced(rng, n, /*require_nonsymmetric=*/n >= 3);
      for (Index i = 1; i <= n; ++i) {
        for (Index j = i + 1; j <= n; ++j) {
          record_report(s, max_witnesses, verify_cofactor_identity(D, i, j));
        }
      }
    }
  }
  return s;
}

RunReport run_verification_suite(const VerifyConfig& config) {
  std::vector<std::string> groups;
  if (config.numeric) groups.push_back("numeric");
  if (config.symbolic) groups.push_back("symbolic");
  if (config.derivatives) groups.push_back("derivatives");
  if (config.nonsymmetric) groups.push_back("nonsymmetric");

  RunReport report;
  report.command = "verify";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    report.command += (g == 0 ? " " : "+") + groups[g];
  }
  report.input_digest = fnv1a_digest(config.describe());

  std::vector<SuiteResult> suites;
  if (config.numeric) {
    suites.push_back(numeric_identity_suite(config.seed, config.n_min,
                                            config.n_max, config.instances,
                                            config.mutation,
                                            config.max_witnesses));
    suites.push_back(cofactor_equality_suite(config.seed, config.n_min,
                                             config.n_max, config.instances,
                                             config.max_witnesses));
    suites.push_back(base_case_suite(config.n_min, config.n_max));
  }
  if (config.symbolic) {
    suites.push_back(symbolic_suite(config.symbolic_n_max,
                                    config.max_witnesses));
  }
  if (config.derivatives) {
    suites.push_back(derivative_identity_suite(
        config.seed, config.n_min, config.n_max, config.instances,
        config.max_witnesses));
    if (config.n_max >= 3) {
      suites.push_back(fiber_suite(config.seed, std::max<Index>(3,
                                                                config.n_min),
                                   config.n_max, config.mutation,
                                   config.max_witnesses));
    }
  }
  if (config.nonsymmetric) {
    suites.push_back(nonsymmetric_suite(config.seed, config.n_min,
                                        config.n_max, config.instances,
                                        config.max_witnesses));
  }

  Json suites_json = Json::array();
  for (const auto& suite : suites) {
    suites_json.push_back(to_json(suite));
    report.all_passed = report.all_passed && suite.passed;
  }
  report.results = Json::object();
  report.results["config"] = config.describe();
  report.results["suites"] = std::move(suites_json);
  return report;
}

std::string render_human(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  out << "input:   " << report.input_digest << '\n';
  if (report.results.contains("suites")) {
    for (const auto& suite : report.results["suites"]) {
      out << "  " << std::left << std::setw(24)
          << suite["name"].get<std::string>()
          << (suite["passed"].get<bool>() ? "PASS" : "FAIL") << "  "
          << std::setw(8) << suite["checks"].get<std::uint64_t>()
          << " checks  " << suite["detail"].get<std::string>() << '\n';
      for (const auto& witness : suite["failures"]) {
        out << "    witness: " << witness.dump() << '\n';
      }
    }
  }
  out << "overall: " << (report.all_passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace mtt
