#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2skein/check/check.hpp"

namespace g2skein::driver {

enum class Mode { exact, random };
enum class Format { text, json };

/// Every suite name accepted by `verify`, in report order.
const std::vector<std::string>& all_suites();

struct RunConfig {
  int max_n = 6;
  int triple_bound = 10;
  Mode mode = Mode::exact;
  std::optional<std::uint64_t> prime;  // random mode; defaults to a fixed 62-bit prime
  std::uint64_t seed = 0;
  std::vector<std::string> suites = all_suites();
  Format output = Format::text;
  int jobs = 0;             // 0: hardware concurrency
  bool timings = false;     // record elapsed_ms (reports stop being byte-stable)
  bool inject_failure = false;  // adds the perturbed-T0 Hecke relation

  /// Throws std::invalid_argument with a usage message.
  void validate() const;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

struct Report {
  RunConfig config;
  std::vector<check::CheckRecord> records;

  Summary summary() const;
  int exit_code() const { return summary().fail == 0 ? 0 : 1; }
};

Report cmd_verify(const RunConfig& config);
std::string emit_report(const Report& report, Format format);

/// aw_star(n) when `params` is empty; otherwise "symbolic" or four
/// comma-separated expressions a,b,c,d.
std::string cmd_aw(int n, const std::string& params = {});
/// Term list of A(k_curve) on Pbar_n; formal index when n is empty.
std::string cmd_act(int curve, std::optional<int> n, const std::string& mode);
std::string cmd_skein(int curve, int i, int j, int k);

}  // namespace g2skein::driver
