#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mtt/graph.hpp"
#include "mtt/random_gen.hpp"
#include "mtt/symbolic.hpp"
#include "mtt/trees.hpp"
#include "mtt/verify.hpp"

namespace {

using mtt::Index;
using mtt::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const mtt::RunReport& report, bool json_out,
          const std::string& human) {
  if (json_out) {
    std::cout << mtt::to_json(report).dump(2) << '\n';
  } else {
    std::cout << human;
  }
}

int run_count(const std::string& path, bool json_out) {
  const std::string text = read_file(path);
  const mtt::WeightedGraph g = mtt::parse_graph(text);
  const mtt::SpanningTreeCount result = mtt::count_spanning_trees(g);

  mtt::RunReport report;
  report.command = "count";
  report.input_digest = mtt::fnv1a_digest(text);
  report.results["n"] = g.vertex_count();
  report.results["edges"] = g.edges().size();
  report.results["cofactor"] = result.cofactor.to_string();
  report.results["tree_count"] = result.tree_count.to_string();
  report.results["disconnected"] = result.disconnected;

  std::ostringstream human;
  human << "vertices: " << g.vertex_count() << '\n'
        << "edges: " << g.edges().size() << '\n'
        << "cofactor: " << result.cofactor << '\n'
        << "spanning trees (weighted): " << result.tree_count << '\n';
  if (result.disconnected) {
    human << "warning: graph is disconnected; the count is 0\n";
  }
  emit(report, json_out, human.str());
  return 0;
}

int run_enumerate(Index n, Index cap, bool json_out) {
  const auto trees = mtt::all_trees(n, cap);

  mtt::RunReport report;
  report.command = "enumerate";
  report.input_digest = mtt::fnv1a_digest(
      "n=" + std::to_string(n) + " cap=" + std::to_string(cap));
  report.results["n"] = n;
  report.results["count"] = trees.size();
  Json list = Json::array();
  for (const auto& t : trees) list.push_back(t.to_string());
  report.results["trees"] = std::move(list);

  std::ostringstream human;
  human << trees.size() << " labeled trees on " << n << " vertices\n";
  for (const auto& t : trees) human << t.to_string() << '\n';
  emit(report, json_out, human.str());
  return 0;
}

int run_tree_sum(const std::string& path, Index cap, bool json_out) {
  const std::string text = read_file(path);
  const mtt::MatrixQ m = mtt::parse_square_matrix(text);
  const mtt::Rational t = mtt::tree_sum(m, cap);

  mtt::RunReport report;
  report.command = "tree-sum";
  report.input_digest = mtt::fnv1a_digest(text);
  report.results["n"] = m.rows();
  report.results["tree_sum"] = t.to_string();

  std::ostringstream human;
  human << "tree sum over " << mtt::labeled_tree_count(m.rows())
        << " trees: " << t << '\n';
  emit(report, json_out, human.str());
  return 0;
}

int run_cofactor(const std::string& path, bool json_out) {
  const std::string text = read_file(path);
  const mtt::MatrixQ m = mtt::parse_square_matrix(text);

  std::string kind;
  mtt::Rational c;
  if (mtt::is_symmetric(m) && mtt::has_zero_row_sums(m)) {
    kind = "laplace-like";
    c = mtt::common_cofactor(mtt::LaplaceLikeMatrix(m),
                             mtt::CofactorCheck::kAll);
  } else if (mtt::has_zero_row_sums(m) && mtt::has_zero_column_sums(m)) {
    kind = "doubly-balanced";
    c = mtt::common_cofactor(mtt::DoublyBalancedMatrix(m),
                             mtt::CofactorCheck::kAll);
  } else {
    throw std::invalid_argument(
        "matrix is neither symmetric zero-row-sum nor doubly balanced; "
        "its cofactors need not agree");
  }

  mtt::RunReport report;
  report.command = "cofactor";
  report.input_digest = mtt::fnv1a_digest(text);
  report.results["n"] = m.rows();
  report.results["kind"] = kind;
  report.results["cofactor"] = c.to_string();

  std::ostringstream human;
  human << "kind: " << kind << '\n' << "common cofactor: " << c << '\n';
  emit(report, json_out, human.str());
  return 0;
}

int run_contract(const std::string& path, Index i, Index j, bool json_out) {
  const std::string text = read_file(path);
  const mtt::MatrixQ m = mtt::parse_square_matrix(text);
  const mtt::MatrixQ result = mtt::contract_matrix(m, i, j);

  mtt::RunReport report;
  report.command = "contract";
  report.input_digest = mtt::fnv1a_digest(text);
  report.results["n"] = m.rows();
  report.results["i"] = i;
  report.results["j"] = j;
  report.results["result"] = mtt::format_matrix(result);

  emit(report, json_out, mtt::format_matrix(result));
  return 0;
}

int run_verify(const mtt::VerifyConfig& config, bool json_out) {
  const auto start = std::chrono::steady_clock::now();
  const mtt::RunReport report = mtt::run_verification_suite(config);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  std::ostringstream human;
  human << mtt::render_human(report);
  human << "elapsed: " << elapsed.count() << " s\n";
  emit(report, json_out, human.str());
  return report.all_passed ? 0 : 1;
}

void add_sweep_options(CLI::App* cmd, mtt::VerifyConfig& cfg,
                       std::string& mutation_name, bool with_mutation) {
  cmd->add_option("--seed", cfg.seed, "random seed");
  cmd->add_option("--n-min", cfg.n_min, "smallest dimension");
  cmd->add_option("--n-max", cfg.n_max, "largest dimension");
  cmd->add_option("--instances", cfg.instances,
                  "random instances per dimension");
  cmd->add_option("--witnesses", cfg.max_witnesses,
                  "failure witnesses kept per suite");
  if (with_mutation) {
    cmd->add_option("--mutation", mutation_name,
                    "inject a deliberate fault (sensitivity testing)")
        ->check(CLI::IsMember(
            {"none", "flip-cofactor-sign", "skip-contract-relabel"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact spanning-tree counting and machine verification of the "
      "matrix-tree cofactor identity"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_out = false;
  app.add_flag("--json", json_out, "emit a machine-readable JSON report");

  std::string count_path;
  auto* count_cmd =
      app.add_subcommand("count", "count spanning trees of a graph file");
  count_cmd->add_option("file", count_path, "graph file")->required();

  Index enum_n = 0;
  Index enum_cap = mtt::kDefaultEnumerationCap;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list all labeled trees on n vertices");
  enum_cmd->add_option("n", enum_n, "vertex count")->required();
  enum_cmd->add_option("--cap", enum_cap, "refuse enumeration above this n");

  std::string tree_sum_path;
  Index tree_sum_cap = mtt::kDefaultEnumerationCap;
  auto* tree_sum_cmd = app.add_subcommand(
      "tree-sum", "sum of tree amplitudes of a square matrix");
  tree_sum_cmd->add_option("file", tree_sum_path, "matrix file")->required();
  tree_sum_cmd->add_option("--cap", tree_sum_cap,
                           "refuse enumeration above this n");

  std::string cofactor_path;
  auto* cofactor_cmd = app.add_subcommand(
      "cofactor", "common cofactor of a balanced square matrix");
  cofactor_cmd->add_option("file", cofactor_path, "matrix file")->required();

  std::string contract_path;
  Index contract_i = 0;
  Index contract_j = 0;
  auto* contract_cmd = app.add_subcommand(
      "contract", "merge index j into index i and drop row/column j");
  contract_cmd->add_option("file", contract_path, "matrix file")->required();
  contract_cmd->add_option("i", contract_i, "surviving index")->required();
  contract_cmd->add_option("j", contract_j, "merged index")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run a machine-verification suite");
  verify_cmd->require_subcommand(1);

  mtt::VerifyConfig numeric_cfg;
  numeric_cfg.numeric = true;
  numeric_cfg.n_min = 2;
  numeric_cfg.n_max = 7;
  std::string numeric_mutation = "none";
  auto* numeric_cmd = verify_cmd->add_subcommand(
      "numeric", "cofactor = signed tree sum on random matrices");
  add_sweep_options(numeric_cmd, numeric_cfg, numeric_mutation, true);

  mtt::VerifyConfig symbolic_cfg;
  symbolic_cfg.symbolic = true;
  std::string symbolic_mutation = "none";
  auto* symbolic_cmd = verify_cmd->add_subcommand(
      "symbolic", "expanded-polynomial identity for small n");
  symbolic_cmd->add_option("--n-max", symbolic_cfg.symbolic_n_max,
                           "largest dimension to expand");

  mtt::VerifyConfig derivatives_cfg;
  derivatives_cfg.derivatives = true;
  derivatives_cfg.n_min = 2;
  derivatives_cfg.n_max = 6;
  std::string derivatives_mutation = "none";
  auto* derivatives_cmd = verify_cmd->add_subcommand(
      "derivatives", "contraction identities and fiber checks");
  add_sweep_options(derivatives_cmd, derivatives_cfg, derivatives_mutation,
                    true);

  mtt::VerifyConfig nonsymmetric_cfg;
  nonsymmetric_cfg.nonsymmetric = true;
  nonsymmetric_cfg.n_min = 2;
  nonsymmetric_cfg.n_max = 6;
  std::string nonsymmetric_mutation = "none";
  auto* nonsymmetric_cmd = verify_cmd->add_subcommand(
      "nonsymmetric", "cofactor identity on non-symmetric balanced matrices");
  add_sweep_options(nonsymmetric_cmd, nonsymmetric_cfg, nonsymmetric_mutation,
                    false);

  try {
    app.parse(argc, argv);

    if (count_cmd->parsed()) return run_count(count_path, json_out);
    if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_cap, json_out);
    if (tree_sum_cmd->parsed()) {
      return run_tree_sum(tree_sum_path, tree_sum_cap, json_out);
    }
    if (cofactor_cmd->parsed()) return run_cofactor(cofactor_path, json_out);
    if (contract_cmd->parsed()) {
      return run_contract(contract_path, contract_i, contract_j, json_out);
    }
    if (verify_cmd->parsed()) {
      mtt::VerifyConfig* cfg = nullptr;
      std::string* mutation_name = nullptr;
      if (numeric_cmd->parsed()) {
        cfg = &numeric_cfg;
        mutation_name = &numeric_mutation;
      } else if (symbolic_cmd->parsed()) {
        cfg = &symbolic_cfg;
        mutation_name = &symbolic_mutation;
      } else if (derivatives_cmd->parsed()) {
        cfg = &derivatives_cfg;
        mutation_name = &derivatives_mutation;
      } else {
        cfg = &nonsymmetric_cfg;
        mutation_name = &nonsymmetric_mutation;
      }
      cfg->mutation = mtt::parse_mutation(*mutation_name)
                          .value_or(mtt::Mutation::kNone);
      return run_verify(*cfg, json_out);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
