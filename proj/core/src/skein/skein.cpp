#include "g2skein/skein/skein.hpp"

#include <numeric>

#include "g2skein/askey_wilson/action.hpp"
#include "g2skein/exact/errors.hpp"

namespace g2skein::skein {

using exact::Var;

namespace {

const RationalExpr kOne(1);
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
// q^(m/2)
RationalExpr qh(int m) { return qq(2 * m); }
RationalExpr qpow(int m) { return qq(4 * m); }

std::string str(int v) { return std::to_string(v); }

std::string q_exponent(int quarters) {
  if (quarters == 4) return "q";
  if (quarters % 4 == 0) return "q^" + str(quarters / 4);
  const int g = std::gcd(quarters < 0 ? -quarters : quarters, 4);
  return "q^{" + str(quarters / g) + "/" + str(4 / g) + "}";
}

std::string q_poly(const exact::LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < exact::kNumVars; ++v) {
      if (v != exact::index(Var::s) && t.m[v] != 0) throw std::invalid_argument("q_text: expression is not in q alone");
    }
    const int e = t.m[Var::s];
    std::string mono = e == 0 ? "" : q_exponent(e);
    std::string coeff;
    bool negative = false;
    if (t.c.is_real()) {
      negative = sgn(t.c.re()) < 0;
      const mpq_class mag = abs(t.c.re());
      if (!(mag == 1) || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + t.c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
    first = false;
  }
  return out;
}

// (a, b) of the D display producing `target` from `source`, with the
// argument order used by that curve.
struct DPick {
  int a, b;
  int x, y, z;
};

std::optional<DPick> d_pick(int curve, const Triple& s, const Triple& t) {
  switch (curve) {
    case 2: return DPick{t.i - s.i, t.j - s.j, s.i, s.j, s.k};
    case 4: return DPick{t.j - s.j, t.k - s.k, s.j, s.k, s.i};
    case 6: return DPick{t.i - s.i, t.k - s.k, s.i, s.k, s.j};
    default: return std::nullopt;
  }
}

// Source offsets of the four D summands, per curve.
Triple d_target(int curve, const Triple& s, int a, int b) {
  switch (curve) {
    case 2: return {s.i + a, s.j + b, s.k};
    case 4: return {s.i, s.j + a, s.k + b};
    default: return {s.i + a, s.j, s.k + b};
  }
}

}  // namespace

std::string Triple::to_string() const { return "n(" + str(i) + "," + str(j) + "," + str(k) + ")"; }

bool is_admissible(int i, int j, int k) { return admissibility_violation({i, j, k}).empty(); }

std::string admissibility_violation(const Triple& t) {
  if (t.i < 0 || t.j < 0 || t.k < 0) return "components must be nonnegative";
  if ((t.i + t.j + t.k) % 2 != 0) return "i+j+k must be even";
  if (t.k < std::abs(t.i - t.j)) return "k must be at least |i-j|";
  if (t.k > t.i + t.j) return "k must be at most i+j";
  return {};
}

bool d_degenerate(int a, int b, int i, int j) {
  auto vanishes = [](int m) { return m == 0 || m + 1 == 0; };  // (1-q^m)(1-q^(m+1))
  return (a == -1 && vanishes(i)) || (b == -1 && vanishes(j));
}

RationalExpr d_coeff(int a, int b, int i, int j, int k) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw std::invalid_argument("d_coeff: a, b must be +-1");
  if (d_degenerate(a, b, i, j)) throw BoundaryCoefficient();
  // Divide one factor at a time so that shared factors cancel.
  auto over_i = [&](RationalExpr f) { return f / (kOne - qpow(i)) / (kOne - qpow(i + 1)); };
  auto over_j = [&](RationalExpr f) { return f / (kOne - qpow(j)) / (kOne - qpow(j + 1)); };
  if (a == 1 && b == 1) return kOne;
  if (a == 1) return over_j(-qh(i + j - k + 1) * (kOne - qh(-i + j + k)).pow(2));
  if (b == 1) return over_i(-qh(i + j - k + 1) * (kOne - qh(i - j + k)).pow(2));
  return over_j(over_i((kOne - qh(i + j + k + 2)).pow(2) * (kOne - qh(i + j - k)).pow(2)));
}

SkeinVector SkeinVector::basis(const Triple& t) {
  SkeinVector v;
  v.add(t, kOne);
  return v;
}

void SkeinVector::add(const Triple& t, const RationalExpr& c) {
  if (!is_admissible(t)) throw std::invalid_argument("SkeinVector: " + t.to_string() + " is not admissible");
  RationalExpr& slot = terms_[t];
  slot += c;
  if (slot.is_zero()) terms_.erase(t);
}

RationalExpr SkeinVector::coefficient(const Triple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? RationalExpr() : it->second;
}

std::string SkeinVector::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [t, c] : terms_) out += t.to_string() + " : " + q_text(c) + "\n";
  return out;
}

SkeinVector curve_action_skein(int curve, const SkeinVector& v) {
  if (curve < 1 || curve > 6) throw std::invalid_argument("curve must be in 1..6");
  SkeinVector out;
  for (const auto& [t, c] : v.terms()) {
    if (curve % 2 == 1) {
      const int m = curve == 1 ? t.i : curve == 3 ? t.j : t.k;
      out.add(t, -exact::ch(qh(m + 1)) * c);
      continue;
    }
    for (int a : {1, -1}) {
      for (int b : {1, -1}) {
        const Triple target = d_target(curve, t, a, b);
        if (!is_admissible(target)) continue;
        const DPick p = *d_pick(curve, t, target);
        out.add(target, d_coeff(a, b, p.x, p.y, p.z) * c);
      }
    }
  }
  return out;
}

std::string q_text(const RationalExpr& f) {
  if (f.is_polynomial()) return q_poly(f.num());
  return "(" + q_poly(f.num()) + ")/(" + q_poly(f.den()) + ")";
}

exact::Assignment triple_specialization(const Triple& t) {
  return {{Var::x0, -qh(t.i + 1)}, {Var::x1, -qh(t.k + 1)}, {Var::u, qh(t.i - t.j + t.k)}};
}

Triple map_target(const Triple& s, int dn, int e0, int e1) {
  const int n = (s.i - s.j + s.k) / 2;
  const int i = s.i - e0;
  const int k = s.k - e1;
  return {i, i + k - 2 * (n + dn), k};
}

CorrespondenceReport correspondence_check(int curve, const Triple& source, check::Comparator& cmp,
                                          Convention convention) {
  if (!is_admissible(source)) throw std::invalid_argument("source " + source.to_string() + " is not admissible");
  CorrespondenceReport rep;
  rep.curve = curve;
  rep.source = source;
  const SkeinVector image = curve_action_skein(curve, SkeinVector::basis(source));
  const auto list = askey_wilson::pbar_action(curve, askey_wilson::ActionMode::corollary,
                                              askey_wilson::NIndex::formal());
  std::map<Triple, RationalExpr> daha;
  std::vector<TargetRecord> boundary;
  std::string detail;
  const exact::Assignment at_source = triple_specialization(source);
  for (const auto& e : list.entries) {
    const Triple target = map_target(source, e.dn, e.e0, e.e1);
    exact::Assignment at = convention == Convention::target ? triple_specialization(target) : at_source;
    at[Var::u] = at_source.at(Var::u);
    if (is_admissible(target)) {
      try {
        daha[target] += e.coeff.substitute(at);
      } catch (const exact::DegenerateSubstitution& err) {
        if (detail.empty()) detail = "DAHA coefficient for " + target.to_string() + " is 0/0: " + err.factor();
        daha[target];
      }
      continue;
    }
    // Non-admissible: must vanish, and be 0/0 exactly where the D display is.
    const auto [top, bottom] = e.coeff.substitute_parts(at);
    const auto pick = d_pick(curve, source, target);
    const bool skein_degenerate =
        pick && std::abs(pick->a) == 1 && std::abs(pick->b) == 1 && d_degenerate(pick->a, pick->b, pick->x, pick->y);
    TargetRecord r;
    r.target = target;
    r.daha = RationalExpr(top);
    r.equal = top.is_zero() && bottom.is_zero() == skein_degenerate;
    r.note = "non-admissible";
    if (!top.is_zero()) r.note += ", numerator does not vanish";
    if (bottom.is_zero() != skein_degenerate) r.note += ", 0/0 pattern differs from the D display";
    if (!r.equal && detail.empty()) detail = target.to_string() + ": " + r.note;
    boundary.push_back(std::move(r));
  }
  std::map<Triple, bool> keys;
  for (const auto& [t, c] : image.terms()) keys[t] = true;
  for (const auto& [t, c] : daha) keys[t] = true;
  for (const auto& [t, unused] : keys) {
    TargetRecord r;
    r.target = t;
    r.skein = image.coefficient(t);
    auto it = daha.find(t);
    if (it != daha.end()) r.daha = it->second;
    r.equal = cmp.equal(r.skein, r.daha);
    if (it == daha.end()) r.note = "absent on the DAHA side";
    if (!image.terms().contains(t) && !r.daha.is_zero()) r.note = "absent on the skein side";
    if (!r.equal && detail.empty()) detail = t.to_string() + ": coefficients differ";
    rep.targets.push_back(std::move(r));
  }
  for (auto& r : boundary) rep.targets.push_back(std::move(r));
  rep.pass = detail.empty();
  rep.detail = detail;
  return rep;
}

check::CheckRecord to_record(const CorrespondenceReport& rep) {
  const Triple& s = rep.source;
  check::CheckRecord r = check::make_record(
      "correspondence", "k" + str(rep.curve) + "-" + s.to_string(),
      {{"curve", str(rep.curve)}, {"i", str(s.i)}, {"j", str(s.j)}, {"k", str(s.k)}}, rep.pass);
  if (!rep.pass) {
    for (const auto& t : rep.targets) {
      if (t.equal) continue;
      r.lhs = check::clip(t.target.to_string() + " : " + t.skein.to_string());
      r.rhs = check::clip(t.target.to_string() + " : " + t.daha.to_string());
      break;
    }
    r.detail = rep.detail;
  }
  return r;
}

std::vector<Triple> enumerate_admissible(int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  std::vector<Triple> out;
  for (int sum = 0; sum <= bound; ++sum) {
    for (int i = 0; i <= sum; ++i) {
      for (int j = 0; i + j <= sum; ++j) {
        if (is_admissible(i, j, sum - i - j)) out.push_back({i, j, sum - i - j});
      }
    }
  }
  return out;
}

check::CheckRecord verify_k3_exponent_identity() {
  // i, j, k stand in as the free symbols a, b, c.
  const RationalExpr i = RationalExpr::var(Var::a);
  const RationalExpr j = RationalExpr::var(Var::b);
  const RationalExpr k = RationalExpr::var(Var::c);
  const RationalExpr half(exact::Scalar::rational(1, 2));
  const RationalExpr n = (i - j + k) * half;
  const RationalExpr lhs = -n - half + (i + kOne) * half + (k + kOne) * half;
  const RationalExpr rhs = (j + kOne) * half;
  const bool ok = exact::equal(lhs, rhs);
  return check::make_record("correspondence", "k3-exponent-identity", {{"n", "(i-j+k)/2"}}, ok, &lhs, &rhs);
}

}  // namespace g2skein::skein
