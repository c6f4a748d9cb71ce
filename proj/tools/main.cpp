#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "valueset/errors.hpp"

namespace {

using valueset::cli::RunConfig;

void add_common(CLI::App& sub, RunConfig& c, std::string& modulus, std::string& primes, std::string& offsets,
                std::string& format) {
  sub.add_option("--poly", c.poly, "integer polynomial in x, e.g. x^4-2x^2");
  sub.add_option("--modulus", modulus, "square-free modulus q");
  sub.add_option("--primes,--prime", primes, "comma-separated primes");
  sub.add_option("--k", c.k, "correlation level");
  sub.add_option("--offsets", offsets, "comma-separated offsets h_1,...,h_{k-1}");
  sub.add_option("--window", c.window, "box a:b[,a:b...] in units of s_q");
  sub.add_option("--bins", c.bins, "histogram bins on [0, 6)");
  sub.add_option("--cap-bits", c.cap_bits, "enumeration size and lattice point cap");
  sub.add_option("--threshold", c.threshold, "anomaly threshold c");
  sub.add_option("--workers", c.workers, "worker threads (0: all cores)");
  sub.add_option("--seed", c.seed, "seed for sampled primes and offsets");
  sub.add_option("--out", c.out, "write the spacings CSV here");
  sub.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = valueset::cli;
  CLI::App app{"value sets of integer polynomials modulo square-free q"};
  app.set_version_flag("--version", cli::version());
  app.require_subcommand(1);

  RunConfig config;
  std::string modulus, primes, offsets, format = "json";
  for (const char* name : cli::kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(*sub, config, modulus, primes, offsets, format);
    if (std::string(name) == "verify") {
      sub->add_option("suite", config.suite, "identities|wan|multiplicativity|davenport|anomaly|poisson|correlation|c0")
          ->required();
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInvalid;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? cli::Format::csv : cli::Format::json;
  cli::Outcome outcome;
  try {
    if (!modulus.empty()) config.modulus = modulus;
    if (!primes.empty()) config.primes = cli::parse_u64_list(primes);
    if (!offsets.empty()) config.offsets = cli::parse_i64_list(offsets);
    outcome = cli::run(config);
  } catch (const valueset::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInvalid;
  }

  if (!outcome.summary.empty()) std::cerr << outcome.summary << '\n';
  if (config.out && !outcome.csv.empty()) {
    std::ofstream file(*config.out);
    if (!file) {
      std::cerr << "error: cannot write " << *config.out << '\n';
      return cli::kInvalid;
    }
    file << outcome.csv;
  }
  if (config.format == cli::Format::csv && outcome.exit_code != cli::kInvalid && outcome.exit_code != cli::kCap) {
    std::cout << outcome.csv;
  } else {
    std::cout << outcome.report.dump(2) << '\n';
  }
  return outcome.exit_code;
}
