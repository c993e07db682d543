#include "plusforms/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "plusforms/census.hpp"
#include "plusforms/class_numbers.hpp"
#include "plusforms/cohen_eisenstein.hpp"
#include "plusforms/congruence.hpp"
#include "plusforms/constructions.hpp"
#include "plusforms/errors.hpp"
#include "plusforms/level_one.hpp"
#include "plusforms/operators.hpp"

namespace plusforms::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FormSpec {
  std::string kind;
  int param = 0;
};

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": " + s);
  }
}

FormSpec parse_form(const std::string& text) {
  const auto colon = text.find(':');
  FormSpec f{text.substr(0, colon), 0};
  const bool has_param = colon != std::string::npos;
  if (has_param) f.param = parse_int(text.substr(colon + 1), "form parameter");
  if (f.kind == "phi") {
    if (!has_param || f.param < 9 || f.param % 2 == 0) throw UsageError("phi:k needs odd k >= 9");
  } else if (f.kind == "psi") {
    if (!has_param || f.param <= 10 || f.param % 2 != 0) throw UsageError("psi:k needs even k > 10");
  } else if (f.kind == "cohen") {
    if (!has_param || f.param < 2) throw UsageError("cohen:r needs r >= 2");
  } else if (f.kind == "psi10" || f.kind == "f" || f.kind == "g31" || f.kind == "e4" || f.kind == "e6" ||
             f.kind == "delta" || f.kind == "theta") {
    if (has_param) throw UsageError("form " + f.kind + " takes no parameter");
  } else {
    throw UsageError("unknown form: " + text);
  }
  return f;
}

QSeries build_form(const FormSpec& f, std::size_t precision) {
  if (f.kind == "phi") return phi(f.param, precision).series;
  if (f.kind == "psi") return psi(f.param, precision).series;
  if (f.kind == "psi10") return psi10(precision).series;
  if (f.kind == "f") return f_form(precision).series;
  if (f.kind == "g31") return g31(precision).series;
  if (f.kind == "e4") return eisenstein(4, precision).series;
  if (f.kind == "e6") return eisenstein(6, precision).series;
  if (f.kind == "delta") return delta(precision).series;
  if (f.kind == "theta") return theta(precision).series;
  return cohen_series(f.param, precision).series;
}

std::optional<std::size_t> precision_cap() {
  const char* cap = std::getenv("PLUSFORMS_PREC_CAP");
  if (cap == nullptr || *cap == '\0') return std::nullopt;
  const int v = parse_int(cap, "PLUSFORMS_PREC_CAP");
  if (v < 1) throw UsageError("PLUSFORMS_PREC_CAP must be positive");
  return static_cast<std::size_t>(v);
}

std::size_t capped(std::size_t precision) {
  const auto cap = precision_cap();
  return cap ? std::min(precision, *cap) : precision;
}

std::size_t default_precision(std::int64_t bound) {
  return static_cast<std::size_t>(std::ceil(1.2 * static_cast<double>(bound)));
}

void write_json(const nlohmann::json& j, std::ostream& out, const std::string& path) {
  out << j.dump(2) << '\n';
  if (!path.empty()) {
    std::ofstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    file << j.dump(2) << '\n';
  }
}

int exit_for(const CongruenceReport& r) {
  switch (r.status) {
    case CongruenceReport::Status::Verified:
      return kVerified;
    case CongruenceReport::Status::Mismatch:
      return kMismatch;
    case CongruenceReport::Status::InsufficientPrecision:
      break;
  }
  return kInsufficientPrecision;
}

void summarize(const CongruenceReport& r, std::ostream& err) {
  err << std::left << std::setw(10) << "lhs" << r.lhs_name << '\n'
      << std::setw(10) << "rhs" << r.rhs_name << '\n'
      << std::setw(10) << "modulus" << r.modulus << '\n'
      << std::setw(10) << "weight" << r.twice_weight / 2 << " (level bound " << r.level << ")\n"
      << std::setw(10) << "bound" << r.bound_used << '\n'
      << std::setw(10) << "unit" << r.unit << '\n'
      << std::setw(10) << "status" << to_string(r.status);
  if (r.status == CongruenceReport::Status::Mismatch) err << " at n = " << r.first_n;
  if (r.status == CongruenceReport::Status::InsufficientPrecision) {
    err << " (need " << r.required << ", have " << r.available << ")";
  }
  err << '\n';
}

using Builder = std::function<NamedForm(std::size_t)>;

int verify_pair(const Builder& lhs, const Builder& rhs, std::optional<std::size_t> prec,
                std::optional<std::int64_t> unit, std::ostream& out, std::ostream& err, const std::string& json_path) {
  const std::int64_t bound = congruence_bound(lhs(1), rhs(1));
  const std::size_t p = capped(prec.value_or(default_precision(bound)));
  const auto report = verify_congruence(lhs(p), rhs(p), 3, unit);
  write_json(to_json(report), out, json_path);
  summarize(report, err);
  return exit_for(report);
}

// g|U_l == g^l | T(l^2, lk + (l-1)/2) mod l on primitive integral g.
int verify_ut(std::int64_t l, std::size_t prec, std::ostream& out, std::ostream& err, const std::string& json_path) {
  const std::size_t big = prec * static_cast<std::size_t>(l * l);
  struct Item {
    std::string name;
    QSeries g;
    int k;
  };
  const std::vector<Item> items = {
      {"theta", theta(big).series, 0},
      {"cohen:2", primitive_integral(cohen_series(2, big).series), 2},
      {"cohen:3", primitive_integral(cohen_series(3, big).series), 3},
  };
  nlohmann::json checks = nlohmann::json::array();
  bool ok = true;
  for (const auto& item : items) {
    const QSeries g = reduce_mod(item.g, l);
    const int k_out = static_cast<int>(l) * item.k + static_cast<int>((l - 1) / 2);
    const QSeries lhs = truncate(u_op(g, static_cast<std::size_t>(l)), prec);
    const QSeries rhs = truncate(hecke_t(pow(g, static_cast<unsigned>(l)), l, k_out), prec);
    std::int64_t first = -1;
    for (std::size_t n = 0; n < prec; ++n) {
      if (lhs[n] != rhs[n]) {
        first = static_cast<std::int64_t>(n);
        break;
      }
    }
    ok = ok && first < 0;
    nlohmann::json c = {{"form", item.name}, {"status", first < 0 ? "Verified" : "Mismatch"}};
    if (first >= 0) c["first_mismatch"] = first;
    checks.push_back(c);
    err << std::left << std::setw(10) << item.name << (first < 0 ? "Verified" : "Mismatch") << '\n';
  }
  write_json({{"target", "ut:" + std::to_string(l)}, {"modulus", l}, {"precision", prec}, {"checks", checks},
              {"status", ok ? "Verified" : "Mismatch"}},
             out, json_path);
  return ok ? kVerified : kMismatch;
}

int verify_rt(std::size_t prec, std::ostream& out, std::ostream& err, const std::string& json_path) {
  nlohmann::json failures = nlohmann::json::array();
  for (int t = 0; t <= 40; t += 2) {
    const QSeries r = reduce_mod(r_t(t, prec).series, 3);
    if (r != QSeries::one(r.ring(), prec)) failures.push_back(t);
  }
  const bool ok = failures.empty();
  err << "R_t == 1 mod 3 for even t <= 40: " << (ok ? "Verified" : "Mismatch") << '\n';
  write_json({{"target", "rt"}, {"modulus", 3}, {"precision", prec}, {"failures", failures},
              {"status", ok ? "Verified" : "Mismatch"}},
             out, json_path);
  return ok ? kVerified : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Half-integral weight plus-space forms and their mod-3 congruences", "plusforms"};
  app.require_subcommand(1);

  std::string form_text;
  int prec = 0;
  int modulus = 0;
  std::string out_path;
  std::string json_path;
  std::string target;
  std::string unit_text = "auto";
  long long census_x = 100000;
  int workers = 1;
  std::string csv_path;
  long long class_d = 0;
  int twice_weight = 0;
  long long level = 1;

  auto* expand = app.add_subcommand("expand", "print a q-expansion");
  expand->add_option("--form", form_text, "phi:k, psi:k, psi10, f, g31, e4, e6, delta, theta, cohen:r")->required();
  expand->add_option("--prec", prec, "number of coefficients")->check(CLI::PositiveNumber);
  expand->add_option("--mod", modulus, "reduce coefficients modulo m")->check(CLI::Range(2, 1 << 30));
  expand->add_option("--out", out_path, "write here instead of stdout");
  expand->add_flag("--json", "emit JSON instead of n<TAB>c lines");

  auto* verify = app.add_subcommand("verify", "verify a congruence up to the Sturm bound");
  verify->add_option("target", target, "cong, psi:k, remark3, ut:l, rt")->required();
  verify->add_option("--prec", prec, "precision override")->check(CLI::PositiveNumber);
  verify->add_option("--unit", unit_text, "auto, 1 or 2")->check(CLI::IsMember({"auto", "1", "2"}));
  verify->add_option("--json", json_path, "also write the report here");

  auto* census = app.add_subcommand("census", "count 3-indivisible class numbers");
  census->add_option("--x", census_x, "upper bound on D")->check(CLI::PositiveNumber);
  census->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
  census->add_option("--csv", csv_path, "per-discriminant rows");
  census->add_option("--json", json_path, "also write the report here");

  auto* classnum = app.add_subcommand("classnum", "class number of Q(sqrt(D)), D < 0");
  classnum->add_option("--d", class_d, "negative integer")->required();

  auto* sturm = app.add_subcommand("sturm", "Sturm bound for integral weight on Gamma0(N)");
  sturm->add_option("--twice-weight", twice_weight, "2 * weight (even)")->required();
  sturm->add_option("--level", level, "level N")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*expand) {
      const FormSpec spec = parse_form(form_text);
      const std::size_t p = capped(prec > 0 ? static_cast<std::size_t>(prec) : 100);
      QSeries s = build_form(spec, p);
      if (modulus > 0) s = reduce_mod(s, modulus);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot open " + out_path);
      }
      std::ostream& dest = out_path.empty() ? out : file;
      if (expand->count("--json") > 0) {
        nlohmann::json j = to_json(s);
        j["form"] = form_text;
        dest << j.dump() << '\n';
      } else {
        dest << render_text(s);
      }
      return 0;
    }

    if (*verify) {
      const std::optional<std::size_t> p = prec > 0 ? std::optional<std::size_t>(prec) : std::nullopt;
      const std::optional<std::int64_t> unit =
          unit_text == "auto" ? std::nullopt : std::optional<std::int64_t>(std::stoi(unit_text));
      if (target == "cong") return verify_pair(f_form, g31, p, unit, out, err, json_path);
      if (target == "remark3") {
        return verify_pair([](std::size_t n) { return plus_cusp_line(6, n); }, theta_prime_to_3, p, unit, out, err,
                           json_path);
      }
      if (target.rfind("psi:", 0) == 0) {
        const int k = parse_int(target.substr(4), "psi weight");
        if (k < 10 || k % 2 != 0) throw UsageError("psi:k needs even k >= 10");
        return verify_pair([k](std::size_t n) { return psi_projected(k, n); }, hurwitz_3n, p, unit, out, err,
                           json_path);
      }
      if (target.rfind("ut:", 0) == 0) {
        const int l = parse_int(target.substr(3), "prime");
        if (l == 2 || !is_prime(l)) throw UsageError("ut:l needs an odd prime");
        return verify_ut(l, capped(p.value_or(100)), out, err, json_path);
      }
      if (target == "rt") return verify_rt(capped(p.value_or(200)), out, err, json_path);
      throw UsageError("unknown verify target: " + target);
    }

    if (*census) {
      if (census_x < 12) err << "note: x < 12 gives degenerate counts\n";
      const auto report = nonvanishing_census(census_x, static_cast<unsigned>(workers));
      write_json(to_json(report), out, json_path);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw UsageError("cannot open " + csv_path);
        write_csv(csv, report);
      }
      err << "N2-(x,1,3)            " << report.n2minus_count << "  density " << decimal(report.n2minus_density, 6)
          << '\n'
          << "D == 1 mod 3, 3 !| h  " << report.nonvanishing_count << "  density "
          << decimal(report.nonvanishing_density, 6) << '\n';
      return 0;
    }

    if (*classnum) {
      if (class_d >= 0) throw UsageError("--d must be negative");
      const std::int64_t disc = field_discriminant(class_d);
      nlohmann::json j = {{"D", class_d}, {"field_discriminant", disc}, {"h", class_number(disc)}};
      if (disc < -4) j["minus_gen_bernoulli"] = format_rational(-gen_bernoulli(1, disc));
      j["hurwitz"] = format_rational(hurwitz(static_cast<std::uint64_t>(-class_d)));
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*sturm) {
      if (twice_weight <= 0 || twice_weight % 2 != 0) throw UsageError("--twice-weight must be even and positive");
      out << nlohmann::json{{"twice_weight", twice_weight},
                            {"level", level},
                            {"index", index_gamma0(level)},
                            {"bound", sturm_bound(twice_weight, level)}}
                 .dump(2)
          << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const NonIntegralCoefficient& e) {
    err << e.what() << '\n';
    return kNonIntegral;
  } catch (const PreconditionViolation& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace plusforms::cli
