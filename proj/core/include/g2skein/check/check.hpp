#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2skein/exact/rational_expr.hpp"

namespace g2skein::check {

enum class Status { pass, fail, skip };

std::string_view status_name(Status s);

struct CheckRecord {
  std::string suite;
  std::string case_id;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::pass;
  std::string lhs;  // populated on failure
  std::string rhs;
  std::string detail;
  double elapsed_ms = 0;
};

/// Equality oracle for rational expressions: exact cross multiplication, or
/// Schwartz-Zippel evaluation over Z/p with I mapped to a square root of -1.
class Comparator {
 public:
  static Comparator exact();
  /// p must be a prime with p = 1 (mod 4).
  static Comparator random(std::uint64_t prime, std::uint64_t seed);

  bool is_random() const noexcept { return random_; }
  std::uint64_t prime() const noexcept { return prime_; }

  /// A comparator with an independent, deterministic stream for one task.
  Comparator fork(std::string_view task_id) const;

  bool equal(const exact::RationalExpr& f, const exact::RationalExpr& g);
  bool is_zero(const exact::RationalExpr& f) { return equal(f, exact::RationalExpr()); }

  /// Evaluation points used per random comparison (for reports).
  int last_repetitions() const noexcept { return last_reps_; }

 private:
  bool random_ = false;
  std::uint64_t prime_ = 0;
  std::uint64_t sqrt_m1_ = 0;
  std::uint64_t seed_ = 0;
  std::mt19937_64 rng_;
  int last_reps_ = 0;
};

/// Text of a possibly huge expression, cut to a readable length.
std::string clip(const std::string& text, std::size_t limit = 2000);

/// Record helper: pass/fail from `ok`; lhs/rhs text only on failure.
CheckRecord make_record(std::string suite, std::string case_id,
                        std::vector<std::pair<std::string, std::string>> params, bool ok,
                        const exact::RationalExpr* lhs = nullptr, const exact::RationalExpr* rhs = nullptr);

}  // namespace g2skein::check
