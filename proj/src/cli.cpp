#include "trigprod/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "trigprod/asymptotics.hpp"
#include "trigprod/cache.hpp"
#include "trigprod/coeffs.hpp"
#include "trigprod/constants.hpp"
#include "trigprod/errors.hpp"
#include "trigprod/figures.hpp"
#include "trigprod/norms.hpp"
#include "trigprod/quadrature.hpp"

namespace trigprod::cli {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ProductKind parse_kind(const std::string& s) {
  if (s == "P") return ProductKind::P;
  if (s == "Q") return ProductKind::Q;
  throw std::invalid_argument("kind must be P or Q, got \"" + s + "\"");
}

bool parse_int64(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

// Decimal string to an exact rational num/den (den a power of ten).
bool parse_decimal_rational(const std::string& s, std::int64_t& num, std::int64_t& den) {
  const std::size_t dot = s.find('.');
  if (dot == std::string::npos) {
    den = 1;
    return parse_int64(s, num);
  }
  const std::string whole = s.substr(0, dot);
  const std::string frac = s.substr(dot + 1);
  if (frac.empty() || frac.size() > 15) return false;
  for (char c : frac) {
    if (c < '0' || c > '9') return false;
  }
  std::int64_t w = 0;
  if (!(whole.empty() || whole == "-" || whole == "+") && !parse_int64(whole, w)) return false;
  const bool negative = !whole.empty() && whole[0] == '-';
  den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t f = 0;
  if (!parse_int64(frac, f)) return false;
  num = w * den + (negative ? -f : f);
  return true;
}

}  // namespace

std::variant<double, PiRational> parse_theta(const std::string& text) {
  const std::size_t pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse theta \"" + text + "\"");
    }
    if (pos != text.size()) throw std::invalid_argument("cannot parse theta \"" + text + "\"");
    return value;
  }

  const std::string prefix = text.substr(0, pi_pos);
  const std::string suffix = text.substr(pi_pos + 2);
  std::int64_t num = 1, den = 1;
  if (!suffix.empty()) {
    // <int>pi/<int>
    if (suffix[0] != '/') throw std::invalid_argument("cannot parse theta \"" + text + "\"");
    if (!parse_int64(suffix.substr(1), den) || den <= 0) {
      throw std::invalid_argument("theta denominator must be a positive integer in \"" + text + "\"");
    }
    if (prefix.empty() || prefix == "+") {
      num = 1;
    } else if (prefix == "-") {
      num = -1;
    } else if (!parse_int64(prefix, num)) {
      throw std::invalid_argument("cannot parse theta \"" + text + "\"");
    }
    return PiRational{num, den};
  }
  // <decimal>pi
  if (prefix.empty() || prefix == "+") return PiRational{1, 1};
  if (prefix == "-") return PiRational{-1, 1};
  if (!parse_decimal_rational(prefix, num, den)) {
    throw std::invalid_argument("cannot parse theta \"" + text + "\"");
  }
  return PiRational{num, den};
}

namespace {

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv("TRIGPROD_CACHE_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

int run_coeffs(const std::string& kind_text, int n, const std::string& cache_flag,
               std::ostream& out) {
  const ProductKind kind = parse_kind(kind_text);
  const CoefficientTable table =
      kind == ProductKind::P ? pn_coefficients(n) : qn_coefficients(n);
  if (const auto dir = resolve_cache_dir(cache_flag)) {
    const std::filesystem::path file = cache_write(table, *dir);
    json summary = {{"kind", std::string(1, kind_letter(kind))},
                    {"n", n},
                    {"degree", table.degree()},
                    {"file", file.string()}};
    out << summary.dump() << "\n";
    return 0;
  }
  out << "k,coefficient\n";
  for (std::int64_t k = 0; k <= table.degree(); ++k) {
    out << k << "," << table.coeffs[static_cast<std::size_t>(k)] << "\n";
  }
  return 0;
}

int run_eval(const std::string& kind_text, int n, const std::string& theta_text,
             std::ostream& out) {
  const ProductKind kind = parse_kind(kind_text);
  const auto theta = parse_theta(theta_text);
  ScaledMagnitude mag;
  bool rational = false;
  if (std::holds_alternative<PiRational>(theta)) {
    rational = true;
    const PiRational r = std::get<PiRational>(theta);
    mag = kind == ProductKind::P ? log_abs_pn(n, r) : log_abs_qn(n, r);
  } else {
    const double t = std::get<double>(theta);
    mag = kind == ProductKind::P ? log_abs_pn(n, t) : log_abs_qn(n, t);
  }
  json result = {{"kind", std::string(1, kind_letter(kind))},
                 {"n", n},
                 {"theta", theta_text},
                 {"theta_is_pi_rational", rational},
                 {"zero", mag.is_zero()}};
  if (mag.is_zero()) {
    result["log_magnitude"] = nullptr;
    result["magnitude"] = 0.0;
  } else {
    result["log_magnitude"] = mag.log_value();
    const double value = mag.value();
    if (std::isfinite(value)) {
      result["magnitude"] = value;
    } else {
      result["magnitude"] = nullptr;  // beyond double range; log_magnitude is exact
    }
  }
  out << result.dump() << "\n";
  return 0;
}

json constant_entry(const std::string& name, const ValueWithError& v, const char* paper) {
  json entry = {{"name", name}, {"value", v.value}, {"error", v.error}};
  if (paper != nullptr) {
    entry["paper"] = paper;
  } else {
    entry["paper"] = nullptr;
  }
  return entry;
}

int run_constants(double tol, std::ostream& out) {
  const ConstantsSet set = compute_constants(tol);
  json list = json::array();
  list.push_back(constant_entry("w0", set.w0, "0.7912265710"));
  list.push_back(constant_entry("K", set.K, "0.1986176152"));
  list.push_back(constant_entry("eK", set.e_K, "1.219715476"));
  list.push_back(constant_entry("B", set.B, "2.740222990"));
  list.push_back(constant_entry("C", set.C, "1.606193491"));
  list.push_back(constant_entry("G", set.G, "0.9159655942"));
  list.push_back(constant_entry("A", set.A, nullptr));
  list.push_back(constant_entry("eA", set.e_A, "1.214550362"));
  list.push_back(constant_entry("l2PrefactorP", set.l2_prefactor_p, "1.551046691"));
  list.push_back(constant_entry("linfPrefactorP", set.linf_prefactor_p, nullptr));
  list.push_back(constant_entry("qL1Prefactor", set.q_l1_prefactor, nullptr));
  out << list.dump(2) << "\n";
  return 0;
}

int run_norms(const std::string& kind_text, int n, const std::string& p_text, double tol,
              std::ostream& out) {
  const ProductKind kind = parse_kind(kind_text);
  NormResult result;
  std::string p_label = p_text;
  if (p_text == "inf") {
    if (kind != ProductKind::P) {
      throw std::invalid_argument("sup-norm scan is only provided for P (||Q_n||_inf = 2^n)");
    }
    result = linf_norm_pn(n);
  } else {
    double p = 0.0;
    std::size_t pos = 0;
    try {
      p = std::stod(p_text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse p \"" + p_text + "\"");
    }
    if (pos != p_text.size()) throw std::invalid_argument("cannot parse p \"" + p_text + "\"");
    result = kind == ProductKind::P ? lp_norm_pn(n, p, tol) : lp_norm_qn(n, p, tol);
    p_label = fmt17(p);
  }
  out << "n,p,value_log,method,error\n";
  out << n << "," << p_label << "," << fmt17(result.value.log_value()) << ","
      << to_string(result.method) << "," << fmt17(result.error_estimate) << "\n";
  return 0;
}

json report_to_json(const VerificationReport& report) {
  json j = {{"theorem", to_string(report.tag)}, {"ns", report.ns},
            {"observed", report.observed},     {"target", report.target},
            {"tolerance", report.tolerance},   {"pass", report.pass}};
  for (const auto& [key, value] : report.extras) j["extras"][key] = value;
  return j;
}

int run_verify(const std::string& theorem, bool all, int n_max, std::ostream& out) {
  const ConstantsSet consts = compute_constants(1e-12);
  std::vector<VerificationReport> reports;
  if (all) {
    reports = verify_all(n_max, consts);
  } else {
    reports = verify_theorem(theorem_tag_from_string(theorem), n_max, consts);
  }
  json list = json::array();
  for (const auto& report : reports) list.push_back(report_to_json(report));
  out << list.dump(2) << "\n";
  return 0;
}

int run_figure(int id, int n_max, const std::string& out_path, std::ostream& out) {
  ConstantsSet consts;
  if (id != 1 && id != 4) consts = compute_constants(1e-12);
  emit_figure({id, n_max, out_path}, consts);
  json summary = {{"figure", id}, {"out", out_path}};
  out << summary.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact coefficients, pointwise values, constants and norms of the "
               "partial products of (1 - e^{ik theta}) and (1 + e^{ik theta})"};
  app.require_subcommand(1);

  std::string kind_text;
  int n = 1;
  std::string cache_flag;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "print or cache a coefficient table");
  coeffs_cmd->add_option("kind", kind_text, "P or Q")->required();
  coeffs_cmd->add_option("--n", n, "number of factors")->required();
  coeffs_cmd->add_option("--cache", cache_flag, "cache directory (default: $TRIGPROD_CACHE_DIR)");

  std::string eval_kind, theta_text;
  int eval_n = 1;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate |P_n| or |Q_n| at theta");
  eval_cmd->add_option("kind", eval_kind, "P or Q")->required();
  eval_cmd->add_option("--n", eval_n, "number of factors")->required();
  eval_cmd->add_option("--theta", theta_text, "angle: <int>pi/<int>, <decimal>pi, or <decimal>")
      ->required();

  double tol = 1e-12;
  auto* constants_cmd = app.add_subcommand("constants", "compute the analytic constants");
  constants_cmd->add_option("--tol", tol, "quadrature/series tolerance");

  std::string norm_kind, p_text = "2";
  int norm_n = 1;
  double norm_tol = 1e-10;
  auto* norms_cmd = app.add_subcommand("norms", "L^p norm by quadrature (or sup-norm scan)");
  norms_cmd->add_option("kind", norm_kind, "P or Q")->required();
  norms_cmd->add_option("--n", norm_n, "number of factors")->required();
  norms_cmd->add_option("--p", p_text, "exponent >= 1, or inf")->required();
  norms_cmd->add_option("--tol", norm_tol, "relative tolerance");

  std::string theorem;
  bool verify_everything = false;
  int n_max = 100;
  auto* verify_cmd = app.add_subcommand("verify", "verify a theorem or the full suite");
  verify_cmd->add_option("--theorem", theorem,
                         "T1..T7, bigpoint, bigsmall, littlewood, wallis, wright-coeff, pentagonal");
  verify_cmd->add_flag("--all", verify_everything, "run every theorem");
  verify_cmd->add_option("--n-max", n_max, "range cap");

  int figure_id = 1;
  int figure_n_max = 0;
  std::string figure_out;
  auto* figure_cmd = app.add_subcommand("figure", "emit a figure dataset as CSV");
  figure_cmd->add_option("--id", figure_id, "figure id 1..6")->required();
  figure_cmd->add_option("--out", figure_out, "output CSV path")->required();
  figure_cmd->add_option("--n-max", figure_n_max, "override the captioned range");

  std::vector<const char*> argv;
  argv.push_back("trigprod");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (coeffs_cmd->parsed()) return run_coeffs(kind_text, n, cache_flag, out);
    if (eval_cmd->parsed()) return run_eval(eval_kind, eval_n, theta_text, out);
    if (constants_cmd->parsed()) return run_constants(tol, out);
    if (norms_cmd->parsed()) return run_norms(norm_kind, norm_n, p_text, norm_tol, out);
    if (verify_cmd->parsed()) {
      if (!verify_everything && theorem.empty()) {
        throw std::invalid_argument("verify needs --theorem <tag> or --all");
      }
      return run_verify(theorem, verify_everything, n_max, out);
    }
    if (figure_cmd->parsed()) return run_figure(figure_id, figure_n_max, figure_out, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const accuracy_error& e) {
    err << "accuracy failure: " << e.what() << "\n";
    return 1;
  } catch (const integrity_error& e) {
    err << "integrity error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace trigprod::cli
