#include "plusforms/congruence.hpp"

#include <numeric>
#include <vector>

#include "plusforms/class_numbers.hpp"
#include "plusforms/cohen_eisenstein.hpp"
#include "plusforms/errors.hpp"
#include "plusforms/operators.hpp"

namespace plusforms {

namespace {

struct Plan {
  WeightEqualizer equalizer;
  int twice_weight;
  std::int64_t level;
  bool theta_needed;
};

// Weight and level arithmetic shared by the bound and the equalization.
Plan plan(const NamedForm& lhs, const NamedForm& rhs) {
  const int tl = lhs.meta.twice_weight;
  const int tr = rhs.meta.twice_weight;
  if ((tl - tr) % 2 != 0) throw IncompatibleWeights("weights differ by a half-integer");
  if (tl < tr) throw IncompatibleWeights("lhs weight is below rhs weight");
  Plan p{};
  p.equalizer.t = (tl - tr) / 2;
  p.equalizer.side = WeightEqualizer::Side::Rhs;
  p.equalizer.weight_one = p.equalizer.t % 2 != 0;
  p.level = std::lcm(lhs.trace.level_bound_out, rhs.trace.level_bound_out);
  const int even_t = p.equalizer.weight_one ? p.equalizer.t - 1 : p.equalizer.t;
  if (even_t > 0) p.level = std::lcm(p.level, std::int64_t{even_t == 2 ? 8 : 4});
  if (p.equalizer.weight_one) p.level = std::lcm(p.level, std::int64_t{3});
  p.theta_needed = tl % 2 != 0;
  if (p.theta_needed) p.level = std::lcm(p.level, std::int64_t{4});
  p.twice_weight = p.theta_needed ? tl + 1 : tl;
  return p;
}

bool is_one(const QSeries& s) { return s == QSeries::one(s.ring(), s.precision()); }

std::int64_t to_int(const Rational& r) { return r.get_num().get_si(); }

}  // namespace

std::int64_t index_gamma0(std::int64_t n) {
  if (n < 1) throw PreconditionViolation("index_gamma0: N must be positive");
  std::int64_t index = n;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    index = index / p * (p + 1);
  }
  if (rest > 1) index = index / rest * (rest + 1);
  return index;
}

std::int64_t sturm_bound(int twice_weight, std::int64_t level) {
  if (twice_weight % 2 != 0) throw HalfIntegralWeight();
  if (twice_weight <= 0) throw PreconditionViolation("sturm_bound: weight must be positive");
  const std::int64_t num = static_cast<std::int64_t>(twice_weight / 2) * index_gamma0(level);
  return (num + 11) / 12 + 1;
}

Form weight_one_eisenstein(std::size_t precision) {
  std::vector<Rational> v(precision);
  if (precision > 0) v[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) {
    std::int64_t s = 0;
    for (std::size_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      s += kronecker(-3, static_cast<std::int64_t>(d));
      if (d * d != n) s += kronecker(-3, static_cast<std::int64_t>(n / d));
    }
    v[n] = 6 * s;
  }
  return {QSeries(Ring::rational(), std::move(v)), FormMeta{2, 3, Character::kronecker(-3)}};
}

Equalized equalize_and_integralize(const NamedForm& lhs, const NamedForm& rhs, std::int64_t m) {
  const Plan p = plan(lhs, rhs);
  const std::size_t n = std::min(lhs.series.precision(), rhs.series.precision());
  QSeries l = reduce_mod(truncate(lhs.series, n), m);
  QSeries r = reduce_mod(truncate(rhs.series, n), m);
  const int even_t = p.equalizer.weight_one ? p.equalizer.t - 1 : p.equalizer.t;
  if (even_t > 0) {
    const QSeries rt = reduce_mod(r_t(even_t, n).series, m);
    if (!is_one(rt)) throw IncompatibleWeights("R_t is not 1 modulo " + std::to_string(m));
    r = mul(r, rt);
  }
  if (p.equalizer.weight_one) {
    const QSeries e1 = reduce_mod(weight_one_eisenstein(n).series, m);
    if (!is_one(e1)) throw IncompatibleWeights("odd weight gap needs E_{1,chi_-3} == 1 modulo " + std::to_string(m));
    r = mul(r, e1);
  }
  if (p.theta_needed) {
    const QSeries th = reduce_mod(theta(n).series, m);
    l = mul(l, th);
    r = mul(r, th);
  }
  return {l, r, p.twice_weight, p.level, p.equalizer};
}

std::int64_t congruence_bound(const NamedForm& lhs, const NamedForm& rhs) {
  const bool swap = lhs.meta.twice_weight < rhs.meta.twice_weight;
  const Plan p = swap ? plan(rhs, lhs) : plan(lhs, rhs);
  return sturm_bound(p.twice_weight, p.level);
}

CongruenceReport verify_congruence(const NamedForm& lhs, const NamedForm& rhs, std::int64_t m, bool unit_search) {
  return verify_congruence(lhs, rhs, m, unit_search ? std::nullopt : std::optional<std::int64_t>(1));
}

CongruenceReport verify_congruence(const NamedForm& lhs, const NamedForm& rhs, std::int64_t m,
                                   std::optional<std::int64_t> unit) {
  CongruenceReport rep;
  rep.lhs_name = lhs.name.to_string();
  rep.rhs_name = rhs.name.to_string();
  rep.modulus = m;

  // R_t goes on the lighter side.
  const bool swap = lhs.meta.twice_weight < rhs.meta.twice_weight;
  const Plan p = swap ? plan(rhs, lhs) : plan(lhs, rhs);
  rep.bound_used = sturm_bound(p.twice_weight, p.level);
  rep.twice_weight = p.twice_weight;
  rep.level = p.level;
  WeightEqualizer eq = p.equalizer;
  eq.side = swap ? WeightEqualizer::Side::Lhs : WeightEqualizer::Side::Rhs;
  rep.weight_equalizer = eq;

  const auto available = static_cast<std::int64_t>(std::min(lhs.series.precision(), rhs.series.precision()));
  if (available < rep.bound_used) {
    rep.status = CongruenceReport::Status::InsufficientPrecision;
    rep.required = rep.bound_used;
    rep.available = available;
    return rep;
  }

  Equalized e = swap ? equalize_and_integralize(rhs, lhs, m) : equalize_and_integralize(lhs, rhs, m);
  if (swap) std::swap(e.lhs, e.rhs);
  const std::size_t n = std::min(e.lhs.precision(), e.rhs.precision());
  rep.compared = static_cast<std::int64_t>(n);

  std::vector<std::int64_t> units;
  if (unit) {
    units.push_back(*unit);
  } else {
    for (std::int64_t u = 1; u < m; ++u) {
      if (std::gcd(u, m) == 1) units.push_back(u);
    }
  }

  std::int64_t best_first = -1;
  for (const std::int64_t u : units) {
    const QSeries scaled = scale(e.rhs, u);
    std::int64_t first = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (e.lhs[i] != scaled[i]) {
        first = static_cast<std::int64_t>(i);
        break;
      }
    }
    if (first < 0) {
      rep.status = CongruenceReport::Status::Verified;
      rep.unit = u;
      return rep;
    }
    if (first > best_first) {
      best_first = first;
      rep.unit = u;
      rep.first_n = first;
      rep.lhs_val = e.lhs[static_cast<std::size_t>(first)];
      rep.rhs_val = scaled[static_cast<std::size_t>(first)];
    }
  }
  rep.status = CongruenceReport::Status::Mismatch;
  return rep;
}

std::string to_string(CongruenceReport::Status s) {
  switch (s) {
    case CongruenceReport::Status::Verified:
      return "Verified";
    case CongruenceReport::Status::Mismatch:
      return "Mismatch";
    case CongruenceReport::Status::InsufficientPrecision:
      break;
  }
  return "InsufficientPrecision";
}

nlohmann::json to_json(const CongruenceReport& r) {
  nlohmann::json j;
  j["lhs"] = r.lhs_name;
  j["rhs"] = r.rhs_name;
  j["modulus"] = r.modulus;
  j["bound"] = r.bound_used;
  if (r.weight_equalizer) {
    j["equalizer_t"] = r.weight_equalizer->t;
    j["equalizer_side"] = r.weight_equalizer->side == WeightEqualizer::Side::Lhs ? "lhs" : "rhs";
    j["equalizer_weight_one"] = r.weight_equalizer->weight_one;
  } else {
    j["equalizer_t"] = nullptr;
  }
  j["twice_weight"] = r.twice_weight;
  j["level"] = r.level;
  j["status"] = to_string(r.status);
  if (r.status == CongruenceReport::Status::Mismatch) {
    j["first_mismatch"] = {{"n", r.first_n}, {"lhs", to_int(r.lhs_val)}, {"rhs", to_int(r.rhs_val)}};
  }
  if (r.status == CongruenceReport::Status::InsufficientPrecision) {
    j["required"] = r.required;
    j["available"] = r.available;
  }
  j["unit"] = r.unit;
  j["compared"] = r.compared;
  return j;
}

}  // namespace plusforms
