#include "plusforms/census.hpp"

#include <algorithm>
#include <future>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "plusforms/class_numbers.hpp"
#include "plusforms/errors.hpp"

namespace plusforms {

namespace {

std::vector<bool> squarefree_flags(std::int64_t limit) {
  std::vector<bool> sf(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0)), true);
  if (!sf.empty()) sf[0] = false;
  for (std::int64_t p = 2; p * p < limit; ++p) {
    for (std::int64_t j = p * p; j < limit; j += p * p) sf[static_cast<std::size_t>(j)] = false;
  }
  return sf;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<CensusRow> census_chunk(std::int64_t lo, std::int64_t hi, const std::vector<bool>& fundamental) {
  std::vector<CensusRow> rows;
  for (std::int64_t d = lo; d < hi; ++d) {
    if (d % 3 != 1 || !fundamental[static_cast<std::size_t>(d)]) continue;
    const std::int64_t disc = field_discriminant(-d);
    rows.push_back({d, disc, class_number(disc)});
  }
  return rows;
}

}  // namespace

bool starstar_ok(std::int64_t m, std::int64_t n) {
  const std::int64_t g = std::gcd(m, n);
  std::vector<std::int64_t> odd_primes;
  std::int64_t rest = g;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (p != 2) odd_primes.push_back(p);
  }
  if (rest > 2) odd_primes.push_back(rest);
  for (const std::int64_t p : odd_primes) {
    if (n % p != 0 || m % (p * p) == 0) return false;
  }
  if (n % 2 == 0) {
    const bool case_i = n % 4 == 0 && mod_pos(m, 4) == 1;
    const bool case_ii = n % 16 == 0 && (mod_pos(m, 16) == 8 || mod_pos(m, 16) == 12);
    return case_i || case_ii;
  }
  return true;
}

std::vector<bool> fundamental_flags(std::int64_t x, int sign) {
  const auto sf = squarefree_flags(x);
  std::vector<bool> out(sf.size(), false);
  for (std::int64_t d = 1; d < x; ++d) {
    const std::int64_t v = sign * d;
    bool f = false;
    if (mod_pos(v, 4) == 1) {
      f = sf[static_cast<std::size_t>(d)];
    } else if (d % 4 == 0) {
      const std::int64_t r = mod_pos(v / 4, 4);
      f = (r == 2 || r == 3) && sf[static_cast<std::size_t>(d / 4)];
    }
    out[static_cast<std::size_t>(d)] = f;
  }
  return out;
}

std::int64_t n2minus(std::int64_t x, std::int64_t m, std::int64_t n) {
  if (n < 1) throw PreconditionViolation("n2minus: modulus must be positive");
  const auto flags = fundamental_flags(x, -1);
  std::int64_t count = 0;
  for (std::int64_t d = 1; d < x; ++d) {
    if (flags[static_cast<std::size_t>(d)] && mod_pos(-d - m, n) == 0) ++count;
  }
  return count;
}

CensusReport nonvanishing_census(std::int64_t x, unsigned workers) {
  if (x < 1) throw PreconditionViolation("census: x must be positive");
  workers = std::max(1u, workers);
  const auto fundamental = fundamental_flags(x, 1);

  std::vector<std::future<std::vector<CensusRow>>> parts;
  const std::int64_t span = (x + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(w) * span);
    const std::int64_t hi = std::min<std::int64_t>(x, (static_cast<std::int64_t>(w) + 1) * span);
    if (lo >= hi) continue;
    parts.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, census_chunk, lo, hi,
                               std::cref(fundamental)));
  }

  CensusReport r;
  r.x = x;
  for (auto& part : parts) {
    auto rows = part.get();
    r.rows.insert(r.rows.end(), rows.begin(), rows.end());
  }
  r.progression_count = static_cast<std::int64_t>(r.rows.size());
  r.nonvanishing_count = std::count_if(r.rows.begin(), r.rows.end(), [](const CensusRow& row) { return row.h % 3 != 0; });
  r.n2minus_count = n2minus(x, 1, 3);
  r.n2minus_density = Rational(r.n2minus_count, x);
  r.progression_density = Rational(r.progression_count, x);
  r.nonvanishing_density = Rational(r.nonvanishing_count, x);
  r.ratio_to_n2minus = r.n2minus_count == 0 ? Rational(0) : Rational(r.nonvanishing_count, r.n2minus_count);
  r.n2minus_density.canonicalize();
  r.progression_density.canonicalize();
  r.nonvanishing_density.canonicalize();
  r.ratio_to_n2minus.canonicalize();
  return r;
}

std::int64_t beta_census_crosscheck(std::int64_t x, const NamedForm& phi9) {
  if (phi9.name.kind != FormName::Kind::Phi || phi9.name.k != 9) {
    throw PreconditionViolation("beta_census_crosscheck: expected phi:9");
  }
  if (static_cast<std::int64_t>(phi9.series.precision()) < x) {
    throw PreconditionViolation("beta_census_crosscheck: phi:9 precision below x");
  }
  const QSeries beta = reduce_mod(truncate(phi9.series, static_cast<std::size_t>(x)), 3);
  std::int64_t checked = 0;
  for (std::int64_t d = 2; d < x; ++d) {
    if (d % 3 != 1 || (d % 4 != 0 && d % 4 != 3) || !is_fundamental(-d)) continue;
    const bool beta_unit = beta[static_cast<std::size_t>(d)] != 0;
    const bool h_unit = class_number(-d) % 3 != 0;
    if (beta_unit != h_unit) throw BridgeViolation(d);
    ++checked;
  }
  return checked;
}

std::int64_t beta_census_crosscheck(std::int64_t x) {
  return beta_census_crosscheck(x, phi(9, static_cast<std::size_t>(std::max<std::int64_t>(x, 1))));
}

std::string decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = r.get_num() * scale;
  Integer q = scaled / r.get_den();
  const Integer rem = scaled % r.get_den();
  if (2 * abs(rem) >= r.get_den()) q += (r >= 0 ? 1 : -1);
  std::string s = Integer(abs(q)).get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (q < 0 ? "-" : "") + s;
}

nlohmann::json to_json(const CensusReport& r) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  auto fixed = [](double v) {
    std::ostringstream os;
    os.precision(5);
    os << std::fixed << v;
    return os.str();
  };
  return {
      {"x", r.x},
      {"n2minus_count", r.n2minus_count},
      {"n2minus_density", format_rational(r.n2minus_density)},
      {"n2minus_density_decimal", decimal(r.n2minus_density, 6)},
      {"progression_count", r.progression_count},
      {"progression_density", format_rational(r.progression_density)},
      {"nonvanishing_count", r.nonvanishing_count},
      {"nonvanishing_density", format_rational(r.nonvanishing_density)},
      {"nonvanishing_density_decimal", decimal(r.nonvanishing_density, 6)},
      {"ratio_to_n2minus", format_rational(r.ratio_to_n2minus)},
      {"ratio_to_n2minus_decimal", decimal(r.ratio_to_n2minus, 6)},
      {"reference_densities", {{"nine_over_8pi2", fixed(9.0 / (8.0 * pi2))}, {"nine_over_16pi2", fixed(9.0 / (16.0 * pi2))}}},
  };
}

void write_csv(std::ostream& out, const CensusReport& r) {
  out << "D,field_discriminant,h,h_mod_3\n";
  for (const auto& row : r.rows) out << row.d << ',' << row.field_discriminant << ',' << row.h << ',' << row.h % 3 << '\n';
}

}  // namespace plusforms
