#include "g2skein/driver/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "g2skein/askey_wilson/verify.hpp"
#include "g2skein/exact/modular.hpp"
#include "g2skein/exact/parse.hpp"
#include "g2skein/qops/verify.hpp"
#include "g2skein/skein/skein.hpp"
#include "json.hpp"

namespace g2skein::driver {

using check::CheckRecord;
using check::Comparator;
using Records = std::vector<CheckRecord>;

namespace {

struct Task {
  std::string id;
  std::function<Records(Comparator&)> run;
};

Records one(CheckRecord r) { return {std::move(r)}; }

std::vector<Task> build_tasks(const std::string& suite, const RunConfig& c) {
  namespace aw = askey_wilson;
  std::vector<Task> t;
  auto add = [&](std::string id, std::function<Records(Comparator&)> f) { t.push_back({std::move(id), std::move(f)}); };
  const int N = c.max_n;
  if (suite == "hecke") {
    add("hecke", [](Comparator& cmp) { return qops::verify_hecke_relations(cmp); });
  } else if (suite == "factorize") {
    add("factorize", [](Comparator& cmp) { return qops::verify_dhat_factorizations(cmp); });
    add("k6", [](Comparator& cmp) { return one(qops::verify_k6_reconstruction(cmp)); });
  } else if (suite == "eigen") {
    for (int n = 0; n <= N; ++n) add("eigen" + std::to_string(n), [n](Comparator& cmp) { return one(aw::verify_eigen(n, cmp)); });
  } else if (suite == "recurrence") {
    for (int n = 0; n <= N; ++n) {
      add("star" + std::to_string(n), [n](Comparator& cmp) { return one(aw::verify_star_vs_general(n, cmp)); });
      add("three" + std::to_string(n), [n](Comparator& cmp) { return one(aw::verify_three_term(n, cmp)); });
    }
  } else if (suite == "connection") {
    for (int n = 1; n <= N; ++n) add("conn" + std::to_string(n), [n](Comparator& cmp) { return aw::verify_connection(n, cmp); });
  } else if (suite == "blg") {
    add("formal", [](Comparator& cmp) { return aw::verify_beta_lambda_gamma(std::nullopt, cmp); });
    for (int n = 1; n < N; ++n) add("blg" + std::to_string(n), [n](Comparator& cmp) { return aw::verify_beta_lambda_gamma(n, cmp); });
  } else if (suite == "kalnins") {
    for (int n = 0; n < N; ++n) add("kal" + std::to_string(n), [n](Comparator& cmp) { return aw::verify_kalnins_actions(n, cmp); });
  } else if (suite == "dhat") {
    for (int n = 0; n + 1 < N; ++n) add("dhat" + std::to_string(n), [n](Comparator& cmp) { return aw::verify_dhat_on_aw(n, cmp); });
  } else if (suite == "prop") {
    for (int k = 1; k <= 6; ++k) {
      add("pc" + std::to_string(k), [k](Comparator& cmp) { return one(aw::verify_prop_vs_corollary(k, cmp)); });
      for (int n = 0; n + 1 < N; ++n) {
        add("prop" + std::to_string(k) + "-" + std::to_string(n),
            [k, n](Comparator& cmp) { return one(aw::verify_prop_action(k, n, cmp)); });
      }
    }
  } else if (suite == "sym") {
    for (int a = 1; a <= 6; ++a) {
      add("mult" + std::to_string(a),
          [a](Comparator& cmp) { return qops::verify_mult_compatibility(a, qops::default_test_functions(), cmp); });
    }
    for (int a : {3, 6}) add("pres" + std::to_string(a), [a](Comparator& cmp) { return qops::verify_symmetric_preservation(a, 4, cmp); });
  } else if (suite == "correspondence") {
    add("k3-exponent", [](Comparator&) { return one(skein::verify_k3_exponent_identity()); });
    for (const skein::Triple& s : skein::enumerate_admissible(c.triple_bound)) {
      for (int k = 1; k <= 6; ++k) {
        add("corr" + std::to_string(k) + s.to_string(),
            [k, s](Comparator& cmp) { return one(skein::to_record(skein::correspondence_check(k, s, cmp))); });
      }
    }
  }
  return t;
}

Comparator base_comparator(const RunConfig& c) {
  if (c.mode == Mode::exact) return Comparator::exact();
  return Comparator::random(c.prime.value_or(exact::modular::default_prime()), c.seed);
}

std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "random"; }

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"hecke", "factorize", "eigen", "recurrence", "connection", "blg",
                                              "kalnins", "dhat", "prop", "sym", "correspondence"};
  return names;
}

void RunConfig::validate() const {
  if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
  if (triple_bound < 0) throw std::invalid_argument("--triple-bound must be nonnegative");
  if (jobs < 0) throw std::invalid_argument("--jobs must be nonnegative");
  for (const auto& s : suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  if (mode == Mode::random) {
    const std::uint64_t p = prime.value_or(exact::modular::default_prime());
    if (!exact::modular::is_prime(p) || p % 4 != 1) throw std::invalid_argument("--prime must be a prime = 1 (mod 4)");
  } else if (prime) {
    throw std::invalid_argument("--prime only applies to --mode random");
  }
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case check::Status::pass: ++s.pass; break;
      case check::Status::fail: ++s.fail; break;
      case check::Status::skip: ++s.skip; break;
    }
  }
  return s;
}

Report cmd_verify(const RunConfig& config) {
  config.validate();
  // Suites run in canonical order regardless of how they were listed.
  std::vector<Task> tasks;
  for (const auto& name : all_suites()) {
    if (std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end()) continue;
    auto more = build_tasks(name, config);
    for (auto& t : more) t.id = name + "/" + t.id;
    std::move(more.begin(), more.end(), std::back_inserter(tasks));
  }
  if (config.inject_failure) {
    tasks.push_back({"injected", [](Comparator& cmp) { return one(qops::hecke_negative_control(cmp)); }});
  }
  const Comparator base = base_comparator(config);
  std::vector<Records> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Comparator cmp = base.fork(tasks[i].id);
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = tasks[i].run(cmp);
      } catch (const std::exception& e) {
        CheckRecord r;
        r.suite = tasks[i].id.substr(0, tasks[i].id.find('/'));
        r.case_id = tasks[i].id;
        r.status = check::Status::fail;
        r.detail = std::string("exception: ") + e.what();
        results[i] = {std::move(r)};
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      for (auto& r : results[i]) r.elapsed_ms = config.timings ? ms / static_cast<double>(results[i].size()) : 0.0;
    }
  };
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min<std::size_t>(config.jobs > 0 ? config.jobs : hw, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Report report{config, {}};
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(report.records));
  return report;
}

std::string emit_report(const Report& report, Format format) {
  const Summary sum = report.summary();
  const RunConfig& c = report.config;
  if (format == Format::json) {
    using nlohmann::ordered_json;
    ordered_json cfg{{"max_n", c.max_n}, {"triple_bound", c.triple_bound}, {"mode", mode_name(c.mode)}};
    if (c.mode == Mode::random) cfg["prime"] = c.prime.value_or(exact::modular::default_prime());
    else cfg["prime"] = nullptr;
    cfg["seed"] = c.seed;
    ordered_json suites = ordered_json::array();
    for (const auto& s : all_suites()) {
      if (std::find(c.suites.begin(), c.suites.end(), s) != c.suites.end()) suites.push_back(s);
    }
    cfg["suites"] = suites;
    cfg["output"] = c.output == Format::json ? "json" : "text";
    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      records.push_back({{"suite", r.suite},
                         {"case", r.case_id},
                         {"params", params},
                         {"status", check::status_name(r.status)},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"elapsed_ms", r.elapsed_ms}});
    }
    ordered_json doc{{"config", cfg},
                     {"records", records},
                     {"summary", {{"pass", sum.pass}, {"fail", sum.fail}, {"skip", sum.skip}}}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& r : report.records) width = std::max(width, r.case_id.size());
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("status", 8) << pad("suite", 16) << pad("case", width + 2);
  if (c.timings) out << "ms";
  out << "\n";
  for (const auto& r : report.records) {
    out << pad(std::string(check::status_name(r.status)), 8) << pad(r.suite, 16) << pad(r.case_id, width + 2);
    if (c.timings) out << static_cast<long>(r.elapsed_ms);
    out << "\n";
    if (r.status == check::Status::fail) {
      if (!r.detail.empty()) out << "    detail: " << r.detail << "\n";
      if (!r.lhs.empty()) out << "    lhs: " << r.lhs << "\n";
      if (!r.rhs.empty()) out << "    rhs: " << r.rhs << "\n";
    }
  }
  out << "summary: " << sum.pass << " pass, " << sum.fail << " fail, " << sum.skip << " skip\n";
  return out.str();
}

std::string cmd_aw(int n, const std::string& params) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (params.empty()) return askey_wilson::aw_star(n).poly.to_string() + "\n";
  askey_wilson::AWParams p;
  if (params == "symbolic") {
    p = askey_wilson::AWParams::symbolic();
  } else {
    std::vector<std::string> parts;
    std::stringstream ss(params);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 4) throw std::invalid_argument("--params needs four comma-separated values a,b,c,d");
    try {
      p = {exact::parse_expr(parts[0]), exact::parse_expr(parts[1]), exact::parse_expr(parts[2]),
           exact::parse_expr(parts[3])};
    } catch (const exact::ParseError& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return askey_wilson::aw_general(n, p).poly.to_string() + "\n";
}

std::string cmd_act(int curve, std::optional<int> n, const std::string& mode) {
  if (curve < 1 || curve > 6) throw std::invalid_argument("curve must be in 1..6");
  if (n && *n < 0) throw std::invalid_argument("n must be nonnegative");
  askey_wilson::ActionMode m;
  if (mode == "prop") m = askey_wilson::ActionMode::prop;
  else if (mode == "corollary") m = askey_wilson::ActionMode::corollary;
  else throw std::invalid_argument("mode must be prop or corollary");
  const auto N = n ? askey_wilson::NIndex::at(*n) : askey_wilson::NIndex::formal();
  return askey_wilson::pbar_action(curve, m, N).to_string();
}

std::string cmd_skein(int curve, int i, int j, int k) {
  if (curve < 1 || curve > 6) throw std::invalid_argument("curve must be in 1..6");
  const skein::Triple t{i, j, k};
  if (auto why = skein::admissibility_violation(t); !why.empty()) {
    throw std::invalid_argument(t.to_string() + " is not admissible: " + why);
  }
  return skein::curve_action_skein(curve, skein::SkeinVector::basis(t)).to_string();
}

}  // namespace g2skein::driver
