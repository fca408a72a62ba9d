#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "g2skein/driver/driver.hpp"

namespace {

constexpr int kUsageError = 2;

int run_verify(g2skein::driver::RunConfig config, const std::string& out_dir) {
  const auto report = g2skein::driver::cmd_verify(config);
  const std::string text = g2skein::driver::emit_report(report, config.output);
  if (out_dir.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) /
                      (config.output == g2skein::driver::Format::json ? "report.json" : "report.txt");
    std::ofstream(path, std::ios::binary) << text;
    const auto s = report.summary();
    std::cout << path.string() << ": " << s.pass << " pass, " << s.fail << " fail, " << s.skip << " skip\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-two skein module and Askey-Wilson operator calculus"};
  app.require_subcommand(1);

  g2skein::driver::RunConfig config;
  std::string mode = "exact";
  std::string output = "text";
  std::uint64_t prime = 0;
  std::string out_dir;
  if (const char* env = std::getenv("G2SKEIN_OUTPUT_DIR")) out_dir = env;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--max-n", config.max_n, "Largest polynomial degree index")->capture_default_str();
  verify->add_option("--triple-bound", config.triple_bound, "Largest i+j+k in the skein sweep")->capture_default_str();
  verify->add_option("--mode", mode, "exact or random")->check(CLI::IsMember({"exact", "random"}))->capture_default_str();
  auto* prime_opt = verify->add_option("--prime", prime, "Modulus for random mode (prime, 1 mod 4)");
  verify->add_option("--seed", config.seed, "Seed for random mode")->capture_default_str();
  verify->add_option("--suites", config.suites, "Suites to run (default: all; 'none' selects nothing)")
      ->delimiter(',')
      ->check(CLI::Validator(
          [](std::string& name) -> std::string {
            const auto& all = g2skein::driver::all_suites();
            if (name.empty() || name == "none" || std::find(all.begin(), all.end(), name) != all.end()) return {};
            return "unknown suite '" + name + "'";
          },
          "SUITE"));
  verify->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--out-dir", out_dir, "Write the report here instead of stdout (env G2SKEIN_OUTPUT_DIR)");
  verify->add_option("--jobs", config.jobs, "Worker threads (0: all cores)")->capture_default_str();
  verify->add_flag("--timings", config.timings, "Record elapsed_ms per check");
  verify->add_flag("--inject-failure", config.inject_failure, "Add a relation that is known to fail");

  int aw_n = 0;
  std::string aw_params;
  bool aw_star = false;
  auto* aw = app.add_subcommand("aw", "Print an Askey-Wilson polynomial");
  aw->add_option("n", aw_n, "Degree")->required();
  aw->add_flag("--star", aw_star, "Parameters t_star (default)");
  aw->add_option("--params", aw_params, "'symbolic' or four expressions a,b,c,d");

  int act_curve = 0;
  std::optional<int> act_n;
  std::string act_mode = "corollary";
  auto* act = app.add_subcommand("act", "Print the curve action on reduced polynomials");
  act->add_option("curve", act_curve, "Curve 1..6")->required()->check(CLI::Range(1, 6));
  act->add_option("--n", act_n, "Concrete index (default: formal n)");
  act->add_option("--mode", act_mode, "prop or corollary")->check(CLI::IsMember({"prop", "corollary"}))->capture_default_str();

  int sk_curve = 0;
  int sk_i = 0;
  int sk_j = 0;
  int sk_k = 0;
  auto* sk = app.add_subcommand("skein", "Print the curve action on a theta-link");
  sk->add_option("curve", sk_curve, "Curve 1..6")->required()->check(CLI::Range(1, 6));
  sk->add_option("i", sk_i)->required();
  sk->add_option("j", sk_j)->required();
  sk->add_option("k", sk_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) {
      config.mode = mode == "random" ? g2skein::driver::Mode::random : g2skein::driver::Mode::exact;
      config.output = output == "json" ? g2skein::driver::Format::json : g2skein::driver::Format::text;
      if (prime_opt->count() > 0) config.prime = prime;
      std::erase_if(config.suites, [](const std::string& n) { return n.empty() || n == "none"; });
      config.validate();
      return run_verify(config, out_dir);
    }
    if (*aw) {
      if (aw_star && !aw_params.empty()) throw std::invalid_argument("--star and --params are exclusive");
      std::cout << g2skein::driver::cmd_aw(aw_n, aw_params);
    } else if (*act) {
      std::cout << g2skein::driver::cmd_act(act_curve, act_n, act_mode);
    } else if (*sk) {
      std::cout << g2skein::driver::cmd_skein(sk_curve, sk_i, sk_j, sk_k);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
