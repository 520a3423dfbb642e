// Command-line front end: single-instance analysis, Kostant-set listings,
// sweep campaigns and re-rendering of saved sweep reports.
//
// Exit codes: 0 ok, 2 usage / parse / validation error, 3 a discrepancy
// (or failed consistency check) was found.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "eisencoh/config.hpp"
#include "eisencoh/eisencoh.hpp"

namespace {

using namespace eisencoh;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFinding = 3;

bool writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int runAnalyze(const std::string& lambdaToken, const std::string& lambdaPrimeToken, const std::string& format) {
  LemmaInstance inst;
  try {
    inst = LemmaInstance::make(parseWeight(lambdaToken), parseWeight(lambdaPrimeToken));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " (arguments '" << lambdaToken << "' '" << lambdaPrimeToken << "')\n";
    return kExitUsage;
  }
  const auto report = verifyInstance(inst);
  const Json j = toJson(report);
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << renderInstanceText(j);
  return report.verdict == Verdict::Discrepancy ? kExitFinding : kExitOk;
}

int runKostant(std::int64_t n, std::int64_t nPrime, std::optional<std::int64_t> length) {
  BlockPair block;
  try {
    block = BlockPair::make(n, nPrime);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto reps = kostantReps(block);
  std::cout << "W^P for " << block.str() << " (N = " << block.N() << ", dim U_P = " << block.dimUnipotent() << ")\n";
  std::size_t rows = 0;
  for (const auto& w : reps) {
    if (length && static_cast<std::int64_t>(w.length()) != *length) continue;
    std::cout << "  " << w.str() << "  length " << w.length() << "\n";
    ++rows;
  }
  const auto poly = lengthPolynomial(reps);
  const auto expected = gaussianBinomial(block.N(), block.n);
  std::cout << "rows " << rows << "\n";
  std::cout << "length polynomial  " << formatPolynomial(poly) << "\n";
  std::cout << "gaussian binomial  [" << block.N() << " choose " << block.n << "]_q = " << formatPolynomial(expected)
            << "  " << (poly == expected ? "match" : "MISMATCH") << "\n";
  return poly == expected ? kExitOk : kExitFinding;
}

struct SweepFlags {
  std::string configPath;
  std::string blocks;
  std::int64_t bound = 0;
  std::string twists;
  std::string format;
  std::string output;
  std::string verbosity;
  unsigned threads = 1;
  std::string counterexamples;
};

int runSweep(const SweepFlags& flags, const CLI::App& cmd) {
  SweepConfig config;
  try {
    if (!flags.configPath.empty()) config = loadConfigFile(flags.configPath);
    if (cmd.count("--blocks")) config.block_pairs = parseBlocks(flags.blocks);
    if (cmd.count("--bound")) config.entry_bound = flags.bound;
    if (cmd.count("--twists")) config.twist_range = parseTwistRange(flags.twists);
    if (cmd.count("--format")) config.format = parseFormat(flags.format);
    if (cmd.count("--output")) config.output_path = flags.output;
    if (cmd.count("--verbosity")) config.verbosity = parseVerbosity(flags.verbosity);
    if (cmd.count("--threads")) config.threads = flags.threads;
    validateConfig(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto report = sweep(config);
  for (const auto& block : config.block_pairs) {
    const auto it = report.counts_by_block.find(block.str());
    const VerdictCounts c = it == report.counts_by_block.end() ? VerdictCounts{} : it->second;
    std::cout << block.str() << ": instances " << c.total() << "  agree_true " << c.agree_true << "  agree_false "
              << c.agree_false << "  discrepancy " << c.discrepancy << "  hypothesis_fail " << c.hypothesis_fail
              << "\n";
  }

  // CSV rows come from the per-instance records.
  SweepReport renderable = report;
  if (config.format == ReportFormat::Csv) renderable.config.verbosity = Verbosity::Full;
  const std::string text = render(toJson(renderable), config.format);
  if (config.output_path) {
    if (!writeText(*config.output_path, text)) {
      std::cerr << "error: cannot write " << *config.output_path << "\n";
      return kExitUsage;
    }
  } else {
    std::cout << text;
  }

  if (report.counts.discrepancy > 0) {
    std::string dumpPath = flags.counterexamples;
    if (dumpPath.empty() && config.output_path) dumpPath = *config.output_path + ".counterexamples.json";
    if (!dumpPath.empty()) {
      writeText(dumpPath, counterexamplesJson(report).dump(2) + "\n");
      std::cerr << report.counts.discrepancy << " discrepancies written to " << dumpPath << "\n";
    } else {
      std::cerr << report.counts.discrepancy << " discrepancies (listed in the report)\n";
    }
  }
  if (!report.checks.clean()) std::cerr << "consistency checks failed, see report.checks\n";
  return report.hasFindings() ? kExitFinding : kExitOk;
}

int runReport(const std::string& path, const std::string& format, const std::string& output) {
  Json j;
  std::string text;
  try {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    text = render(j, parseFormat(format));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed report: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!output.empty()) {
    if (!writeText(output, text)) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
  } else {
    std::cout << text;
  }
  return j["discrepancies"].empty() ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-one Eisenstein cohomology combinatorics for GL_N (N = n + n', n even, n' odd)"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Verify one instance mu = lambda + lambda'");
  std::string lambdaToken, lambdaPrimeToken, analyzeFormat = "text";
  analyze->add_option("lambda", lambdaToken, "GL_n weight, e.g. [1,0]")->required();
  analyze->add_option("lambda_prime", lambdaPrimeToken, "GL_n' weight, e.g. [2]")->required();
  analyze->add_option("--format", analyzeFormat, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* kostant = app.add_subcommand("kostant", "List Kostant representatives W^P for the block pair n x n'");
  std::int64_t kn = 0, knp = 0, klength = 0;
  kostant->add_option("n", kn)->required();
  kostant->add_option("n_prime", knp)->required();
  auto* lengthOpt = kostant->add_option("--length", klength, "only representatives of this length");

  auto* sweepCmd = app.add_subcommand("sweep", "Exhaustive campaign over canonical weights and det-twists");
  SweepFlags flags;
  sweepCmd->add_option("--config", flags.configPath, "key = value file (blocks, bound, twists, ...)");
  sweepCmd->add_option("--blocks", flags.blocks, "comma-separated block pairs, e.g. 2x1,4x3");
  sweepCmd->add_option("--bound", flags.bound, "entry bound for canonical shapes (lambda_n = 0)");
  sweepCmd->add_option("--twists", flags.twists, "auto, auto:MARGIN or LO:HI");
  sweepCmd->add_option("--format", flags.format, "json, csv or text");
  sweepCmd->add_option("--output", flags.output, "report path (default: stdout)");
  sweepCmd->add_option("--verbosity", flags.verbosity, "summary or full");
  sweepCmd->add_option("--threads", flags.threads, "worker threads (report is independent of this)");
  sweepCmd->add_option("--counterexamples", flags.counterexamples, "where to dump discrepancies");

  auto* reportCmd = app.add_subcommand("report", "Re-render a saved JSON sweep report");
  std::string reportPath, reportFormat = "text", reportOutput;
  reportCmd->add_option("file", reportPath)->required();
  reportCmd->add_option("--format", reportFormat, "text, csv or json");
  reportCmd->add_option("--output", reportOutput);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (analyze->parsed()) return runAnalyze(lambdaToken, lambdaPrimeToken, analyzeFormat);
  if (kostant->parsed())
    return runKostant(kn, knp, lengthOpt->count() ? std::optional<std::int64_t>(klength) : std::nullopt);
  if (sweepCmd->parsed()) return runSweep(flags, *sweepCmd);
  if (reportCmd->parsed()) return runReport(reportPath, reportFormat, reportOutput);
  return kExitUsage;
}
