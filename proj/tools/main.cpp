#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace latentid;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const cli::Report& report) {
  std::cout << report.document.dump(2) << '\n';
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local identifiability of discrete undirected graphical models with one binary hidden node"};
  app.require_subcommand(1);

  std::string file;
  cli::NumericFlags flags;
  std::string beta_file;

  auto* classify_cmd = app.add_subcommand("classify", "Structural verdict and singular system");
  classify_cmd->add_option("file", file, "Model file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the verdict with the numeric rank oracle");
  verify_cmd->add_option("file", file, "Model file")->required();
  verify_cmd->add_option("--trials", flags.trials, "Random parameter draws")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", flags.seed, "Base seed");
  verify_cmd->add_option("--tol", flags.tolerance, "Relative singular-value tolerance (default: auto)");

  auto* rank_cmd = app.add_subcommand("rank", "Singular values and rank of D(beta) at one point");
  rank_cmd->add_option("file", file, "Model file")->required();
  auto* beta_opt = rank_cmd->add_option("--beta", beta_file, "File with one value per parameter");
  rank_cmd->add_option("--seed", flags.seed, "Seed for a random point")->excludes(beta_opt);
  rank_cmd->add_option("--tol", flags.tolerance, "Relative singular-value tolerance (default: auto)");

  auto* locus_cmd = app.add_subcommand("locus", "Print the singular-subspace equations");
  locus_cmd->add_option("file", file, "Model file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const LatentModel model = load_model(file);
    if (*classify_cmd) return emit(cli::cmd_classify(model, file));
    if (*verify_cmd) return emit(cli::cmd_verify(model, file, flags));
    if (*rank_cmd) {
      std::optional<BetaVector> beta;
      if (!beta_file.empty()) beta = cli::read_beta(slurp(beta_file), build_param_index(model).size());
      return emit(cli::cmd_rank(model, file, beta, flags));
    }
    const cli::LocusOutput out = cli::cmd_locus(model);
    std::cout << out.text;
    if (!out.note.empty()) std::cerr << out.note << '\n';
    return out.exit_code;
  } catch (const LatentIsolated& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << file << ": parse error, " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return cli::kExitError;
}
