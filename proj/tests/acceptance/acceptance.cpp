// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "g2skein/askey_wilson/verify.hpp"
#include "g2skein/qops/verify.hpp"
#include "g2skein/skein/skein.hpp"

namespace {

using namespace g2skein;
using check::CheckRecord;
using check::Comparator;
using Records = std::vector<CheckRecord>;

void append(Records& to, Records more) { to.insert(to.end(), more.begin(), more.end()); }

struct Outcome {
  bool ok = true;
  std::string summary;
};

// All records pass; summary "k/k checks".
Outcome all_pass(const Records& rs) {
  int good = 0;
  std::string first_bad;
  for (const auto& r : rs) {
    if (r.status == check::Status::pass) ++good;
    else if (first_bad.empty()) first_bad = r.suite + "/" + r.case_id + (r.detail.empty() ? "" : " (" + r.detail + ")");
  }
  Outcome o{good == static_cast<int>(rs.size()) && !rs.empty(),
            std::to_string(good) + "/" + std::to_string(rs.size()) + " checks"};
  if (!first_bad.empty()) o.summary += ", first failure " + first_bad;
  return o;
}

struct Command {
  int exit_code = -1;
  std::string out;
};

Command run(const std::string& cmd) {
  Command c;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) c.out.append(buf, n);
  const int status = pclose(p);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

struct Criterion {
  int id;
  std::string name;
  double target_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  namespace aw = askey_wilson;
  std::vector<Criterion> criteria{
      {1, "Hecke quadratic relations", 30,
       [] {
         Comparator cmp = Comparator::exact();
         return all_pass(qops::verify_hecke_relations(cmp));
       }},
      {2, "d_{a,b} factorizations", 30,
       [] {
         Comparator cmp = Comparator::exact();
         return all_pass(qops::verify_dhat_factorizations(cmp));
       }},
      {3, "eigenvalue equation, n = 0..6", 120,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs;
         for (int n = 0; n <= 6; ++n) rs.push_back(aw::verify_eigen(n, cmp));
         return all_pass(rs);
       }},
      {4, "three-term recurrence and connection, n = 1..6", 120,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs;
         for (int n = 0; n <= 6; ++n) rs.push_back(aw::verify_star_vs_general(n, cmp));
         for (int n = 1; n <= 6; ++n) {
           rs.push_back(aw::verify_three_term(n, cmp));
           append(rs, aw::verify_connection(n, cmp));
         }
         return all_pass(rs);
       }},
      {5, "beta/lambda/gamma identity, formal n and n = 1..5", 10,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs = aw::verify_beta_lambda_gamma(std::nullopt, cmp);
         for (int n = 1; n <= 5; ++n) append(rs, aw::verify_beta_lambda_gamma(n, cmp));
         return all_pass(rs);
       }},
      {6, "parameter-shift actions, symbolic a,b,c,d, n = 0..5", 120,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs;
         for (int n = 0; n <= 5; ++n) append(rs, aw::verify_kalnins_actions(n, cmp));
         return all_pass(rs);
       }},
      {7, "d_{a,b} on shifted polynomials, n = 0..4", 120,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs;
         for (int n = 0; n <= 4; ++n) append(rs, aw::verify_dhat_on_aw(n, cmp));
         return all_pass(rs);
       }},
      {8, "curve actions on reduced polynomials, 6 curves, n = 0..4", 300,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs;
         for (int k = 1; k <= 6; ++k) {
           rs.push_back(aw::verify_prop_vs_corollary(k, cmp));
           for (int n = 0; n <= 4; ++n) rs.push_back(aw::verify_prop_action(k, n, cmp));
         }
         return all_pass(rs);
       }},
      {9, "skein correspondence, 6 curves, i+j+k <= 10", 600,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs{skein::verify_k3_exponent_identity()};
         for (const auto& t : skein::enumerate_admissible(10)) {
           for (int k = 1; k <= 6; ++k) rs.push_back(skein::to_record(skein::correspondence_check(k, t, cmp)));
         }
         return all_pass(rs);
       }},
      {10, "negative controls fail", 60,
       [] {
         Comparator cmp = Comparator::exact();
         const bool source_fails =
             !skein::correspondence_check(2, {1, 1, 2}, cmp, skein::Convention::source).pass;
         const bool hecke_fails = qops::hecke_negative_control(cmp).status == check::Status::fail;
         return Outcome{source_fails && hecke_fails,
                        std::string("source convention ") + (source_fails ? "fails" : "PASSES") +
                            ", perturbed T0 " + (hecke_fails ? "fails" : "PASSES")};
       }},
      {11, "A(k3), A(k6) keep ch(x^m), m <= 4, symmetric and pole-free", 120,
       [] {
         Comparator cmp = Comparator::exact();
         Records rs = qops::verify_symmetric_preservation(3, 4, cmp);
         append(rs, qops::verify_symmetric_preservation(6, 4, cmp));
         return all_pass(rs);
       }},
      {12, "CLI determinism and exit codes", 120,
       [] {
         const std::string cli = G2SKEIN_CLI_PATH;
         const std::string args =
             " verify --suites hecke,blg,correspondence --max-n 3 --triple-bound 6 --mode random --seed 5 --output json";
         const Command a = run(cli + args + " --jobs 1");
         const Command b = run(cli + args + " --jobs 3");
         const Command inj = run(cli + " verify --suites hecke --inject-failure");
         const Command usage = run(cli + " verify --suites nope 2>/dev/null");
         const bool same = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
         return Outcome{same && inj.exit_code == 1 && usage.exit_code != 0 && usage.exit_code != 1,
                        std::string("reports ") + (same ? "byte-identical" : "DIFFER") + ", injected failure exit " +
                            std::to_string(inj.exit_code) + ", usage error exit " + std::to_string(usage.exit_code)};
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s < c.target_s;
    const bool ok = o.ok && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f s, target < %.0f s", s, c.target_s);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << " -- " << o.summary
              << " (" << timing << (in_time ? "" : ", OVER TARGET") << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
