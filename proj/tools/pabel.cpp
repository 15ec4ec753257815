#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pabel/report/commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitClaim = 2;

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : pabel::report::command_table()) names.push_back(k);
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  pabel::report::RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string primes;

  CLI::App app{"Partial abelianizations of k^3 * k^3: dimension bounds, classification, representations"};
  app.add_option("command", cfg.command, "one of: dims verify42 bound scan classify sigma conics detcurve rep wedderburn theorem zcentral")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--point", cfg.point, "projective point x11:x12:x21:x22 with rational entries");
  app.add_option("--chart", cfg.chart, "chart point y1,y2,y3, i.e. x = (1:y1:y2:y3)");
  app.add_option("--mode", cfg.mode, "scalar mode: rational, prime, symbolic, extension (per command)");
  app.add_option("--primes", primes, "comma-separated primes for modular runs");
  app.add_option("--seed", seed, "64-bit seed (default 20240611, or PABEL_SEED)");
  app.add_option("--nmax", cfg.nmax, "degree cutoff")->capture_default_str();
  app.add_option("--slack", cfg.slack, "extra formal degree in the ideal span")->capture_default_str()->check(CLI::Range(1, 16));
  app.add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
  app.add_option("--out", cfg.out, "write the JSON report here (default: JSON on stdout, summary on stderr)");
  app.add_option("--workers", cfg.workers, "worker threads for independent points")->capture_default_str();
  app.add_option("--count", cfg.count, "theorem: number of random points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.seed = pabel::report::resolve_seed(seed);
    std::size_t pos = 0;
    while (pos < primes.size()) {
      const std::size_t end = primes.find(',', pos);
      cfg.primes.push_back(std::stoull(primes.substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
      if (end == std::string::npos) break;
      pos = end + 1;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto out = pabel::report::run_command(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = out.report.dump(2) + "\n";
    std::ostream& human = cfg.out.empty() ? std::cerr : std::cout;
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw pabel::UsageError("cannot write " + cfg.out);
      f << text;
    }
    human << out.summary << "time " << secs << " s\n";
    return out.success ? kExitOk : kExitClaim;
  } catch (const pabel::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
