#include "monoball/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monoball/bounds.hpp"
#include "monoball/fourier.hpp"
#include "monoball/json_io.hpp"
#include "monoball/verify.hpp"

namespace monoball {

using nlohmann::json;

namespace {

constexpr int kMaxDegreeLimit = 16;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Basis: return "basis";
    case Command::Norms: return "norms";
    case Command::Verify: return "verify";
    case Command::Decompose: return "decompose";
    case Command::Bound: return "bound";
  }
  return "?";
}

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v))
    throw ConfigError("invalid " + what + ": '" + s + "'");
  return v;
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = command_name(c.command);
  j["max_degree"] = c.max_degree;
  j["format"] = c.format == OutputFormat::Json ? "json" : "csv";
  switch (c.command) {
    case Command::Verify:
      j["seed"] = c.seed;
      break;
    case Command::Decompose:
      j["input"] = c.input;
      break;
    case Command::Bound:
      j["seed"] = c.seed;
      j["trials"] = c.trials;
      j["r_grid"] = c.r_grid;
      j["tol"] = c.tol;
      j["zero_f0"] = c.zero_f0;
      if (c.quadrature) j["quadrature"] = {c.quadrature->first, c.quadrature->second};
      break;
    default:
      break;
  }
  return j;
}

json envelope(const RunConfig& c) {
  return {{"tool", "monoball"}, {"version", kVersion}, {"config", config_json(c)}};
}

json index_json(const BasisIndex& idx) { return {{"n", idx.n}, {"m", idx.m}, {"kind", to_string(idx.kind)}}; }

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file: " + config.out);
  file << text;
  file.close();
  if (!file) throw IoError("failed writing output file: " + config.out);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int run_basis(const RunConfig& config, std::ostream& out) {
  const auto basis = normalize_basis(config.max_degree);
  std::ostringstream csv;
  json elements = json::array();
  if (config.format == OutputFormat::Csv) csv << "n,m,kind,norm_sq_num,norm_sq_den,component,e0,e1,e2,num,den\n";
  for (int n = 0; n <= config.max_degree; ++n) {
    const auto& b = basis.block(n);
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      const auto& e = b.elements[k];
      if (config.format == OutputFormat::Json) {
        json item = index_json(e.index());
        item["norm_sq"] = exact_to_json(b.norm_sq[k].coeff, 1);
        item["polynomial"] = to_json(e.solid());
        elements.push_back(std::move(item));
        continue;
      }
      for (int c = 0; c < 4; ++c)
        for (const auto& [exps, coeff] : e.solid().component(c).terms())
          csv << n << ',' << e.order() << ',' << to_string(e.kind()) << ',' << b.norm_sq[k].coeff.get_num().get_str()
              << ',' << b.norm_sq[k].coeff.get_den().get_str() << ',' << c << ',' << exps[0] << ',' << exps[1] << ','
              << exps[2] << ',' << coeff.get_num().get_str() << ',' << coeff.get_den().get_str() << '\n';
    }
  }
  if (config.format == OutputFormat::Csv) {
    emit(config, csv.str(), out);
  } else {
    json j = envelope(config);
    j["elements"] = std::move(elements);
    emit(config, dump(j), out);
  }
  return exit_code::kOk;
}

int run_norms(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto basis = normalize_basis(config.max_degree);
  bool all_match = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,m,kind,norm_sq,norm_sq_closed,re_norm_sq,re_norm_sq_closed,re_e1_norm_sq,re_e1_norm_sq_closed,match\n";
  for (int n = 0; n <= config.max_degree; ++n) {
    const auto& b = basis.block(n);
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      const auto& idx = b.elements[k].index();
      const auto norm_closed = closed_form_norm_sq(idx);
      const auto re_closed = closed_form_re_norm_sq(idx);
      bool match = b.norm_sq[k] == norm_closed && b.re_norm_sq[k] == re_closed;
      // the e1-twisted closed form is stated for the f2 elements of degree >= 1
      std::optional<ExactSphereValue> e1_closed;
      if (b.is_f2(k) && n >= 1) {
        e1_closed = closed_form_re_e1_norm_sq(n);
        match = match && b.re_e1_norm_sq[k] == *e1_closed;
      }
      all_match = all_match && match;

      json row = index_json(idx);
      row["norm_sq"] = exact_to_json(b.norm_sq[k].coeff, 1);
      row["norm_sq_closed"] = exact_to_json(norm_closed.coeff, 1);
      row["re_norm_sq"] = exact_to_json(b.re_norm_sq[k].coeff, 1);
      row["re_norm_sq_closed"] = exact_to_json(re_closed.coeff, 1);
      row["re_e1_norm_sq"] = exact_to_json(b.re_e1_norm_sq[k].coeff, 1);
      row["re_e1_norm_sq_closed"] = e1_closed ? exact_to_json(e1_closed->coeff, 1) : json(nullptr);
      row["match"] = match;
      rows.push_back(std::move(row));

      csv << n << ',' << idx.m << ',' << to_string(idx.kind) << ',' << to_string(b.norm_sq[k].coeff) << ','
          << to_string(norm_closed.coeff) << ',' << to_string(b.re_norm_sq[k].coeff) << ','
          << to_string(re_closed.coeff) << ',' << to_string(b.re_e1_norm_sq[k].coeff) << ','
          << (e1_closed ? to_string(e1_closed->coeff) : std::string()) << ',' << (match ? "true" : "false") << '\n';
    }
  }
  if (config.format == OutputFormat::Csv) {
    emit(config, csv.str(), out);
  } else {
    json j = envelope(config);
    j["unit"] = "pi";
    j["rows"] = std::move(rows);
    j["all_match"] = all_match;
    emit(config, dump(j), out);
  }
  if (!all_match) err << "norms: measured norms differ from the closed forms\n";
  return all_match ? exit_code::kOk : exit_code::kVerificationFailure;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto basis = normalize_basis(config.max_degree);
  const auto results = run_verification(basis, config.max_degree, config.seed);
  bool passed = true;
  json checks = json::array();
  std::ostringstream csv;
  csv << "check,passed,cases,detail\n";
  err << std::left << std::setw(34) << "check" << std::setw(8) << "status" << std::setw(8) << "cases" << "detail\n";
  for (const auto& r : results) {
    passed = passed && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    csv << csv_escape(r.name) << ',' << (r.passed ? "true" : "false") << ',' << r.cases << ','
        << csv_escape(r.detail) << '\n';
    err << std::setw(34) << r.name << std::setw(8) << (r.passed ? "ok" : "FAIL") << std::setw(8) << r.cases
        << r.detail << '\n';
  }
  err << (passed ? "all checks passed" : "verification FAILED") << " (max degree " << config.max_degree << ")\n";
  if (config.format == OutputFormat::Csv) {
    emit(config, csv.str(), out);
  } else {
    json j = envelope(config);
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    emit(config, dump(j), out);
  }
  return passed ? exit_code::kOk : exit_code::kVerificationFailure;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw ConfigError(std::string("input: missing array '") + key + "'");
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ConfigError(std::string("input: non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

int run_decompose(const RunConfig& config, std::ostream& out) {
  const json input = read_json_file(config.input);
  if (!input.is_object() || !input.contains("rule") || !input["rule"].is_object())
    throw ConfigError("input: missing object 'rule'");
  const auto& r = input["rule"];
  if (!r.contains("n_theta") || !r.contains("n_phi") || !r["n_theta"].is_number_integer() ||
      !r["n_phi"].is_number_integer())
    throw ConfigError("input: rule needs integer n_theta and n_phi");
  const int n_theta = r["n_theta"].get<int>();
  const int n_phi = r["n_phi"].get<int>();
  if (n_theta < 1 || n_phi < 1) throw ConfigError("input: rule sizes must be positive");
  const QuadratureRule rule(n_theta, n_phi);

  SphereSamples re_f{number_array(input, "re_f"), config.max_degree};
  SphereSamples re_fe1{number_array(input, "re_fe1"), config.max_degree};
  if (re_f.values.size() != rule.size() || re_fe1.values.size() != rule.size())
    throw ConfigError("input: sample arrays must have n_theta * n_phi = " + std::to_string(rule.size()) + " entries");
  double f0_e2 = 0.0;
  if (input.contains("f0_e2")) {
    if (!input["f0_e2"].is_number()) throw ConfigError("input: f0_e2 must be a number");
    f0_e2 = input["f0_e2"].get<double>();
  }
  try {
    rule.require_exact(2 * config.max_degree);
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("input rule too coarse for --max-degree: ") + e.what());
  }

  const auto basis = normalize_basis(config.max_degree);
  const auto coeffs = coeffs_from_real_part(re_f, re_fe1, basis, rule, f0_e2);

  if (config.format == OutputFormat::Csv) {
    std::ostringstream csv;
    csv << "n,m,kind,value\n";
    csv << "0,0,f0_scalar," << fmt(coeffs.f0.x0) << "\n0,0,f0_e1," << fmt(coeffs.f0.x1) << "\n0,0,f0_e2,"
        << fmt(coeffs.f0.x2) << '\n';
    for (int n = 1; n <= coeffs.max_degree; ++n) {
      const auto idx = family_indices(n);
      for (std::size_t k = 0; k < idx.size(); ++k)
        csv << n << ',' << idx[k].m << ',' << to_string(idx[k].kind) << ','
            << fmt(coeffs.values[static_cast<std::size_t>(n)][k]) << '\n';
    }
    emit(config, csv.str(), out);
    return exit_code::kOk;
  }
  json j = envelope(config);
  j["f0"] = {coeffs.f0.x0, coeffs.f0.x1, coeffs.f0.x2};
  json list = json::array();
  for (int n = 1; n <= coeffs.max_degree; ++n) {
    const auto idx = family_indices(n);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      json item = index_json(idx[k]);
      item["value"] = coeffs.values[static_cast<std::size_t>(n)][k];
      list.push_back(std::move(item));
    }
  }
  j["coeffs"] = std::move(list);
  emit(config, dump(j), out);
  return exit_code::kOk;
}

json report_json(int trial, const BoundReport& r) {
  return {{"trial", trial},
          {"r", r.r},
          {"max_f", r.max_f},
          {"f0_abs", r.f0_abs},
          {"re_norm", r.re_norm},
          {"re_e1_norm", r.re_e1_norm},
          {"rhs_series", r.rhs_series},
          {"rhs_closed", r.rhs_closed},
          {"a1", r.a1},
          {"a2", r.a2},
          {"pass_series", r.pass_series},
          {"pass_closed", r.pass_closed},
          {"schwarz_hypothesis", r.schwarz_hypothesis},
          {"schwarz_counterexample", r.schwarz_counterexample},
          {"schwarz_alt_hypothesis", r.schwarz_alt_hypothesis},
          {"schwarz_alt_counterexample", r.schwarz_alt_counterexample}};
}

int run_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto radii = parse_r_grid(config.r_grid);
  const QuadratureRule rule = config.quadrature ? QuadratureRule(config.quadrature->first, config.quadrature->second)
                                                : QuadratureRule::for_degree(config.max_degree);
  try {
    rule.require_exact(2 * config.max_degree);
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("--quadrature too coarse for --max-degree: ") + e.what());
  }
  const auto basis = normalize_basis(config.max_degree);
  UniformSource rng(config.seed);
  RandomMonogenicOptions gen;
  gen.max_degree = config.max_degree;
  gen.zero_f0 = config.zero_f0;
  CertifyOptions opts;
  opts.series_tol = config.tol;

  json reports = json::array();
  std::ostringstream csv;
  csv << "trial,r,max_f,f0_abs,re_norm,re_e1_norm,rhs_series,rhs_closed,a1,a2,pass_series,pass_closed,"
         "schwarz_hypothesis,schwarz_counterexample,schwarz_alt_hypothesis,schwarz_alt_counterexample\n";
  std::size_t series_failures = 0, closed_failures = 0, hypothesis = 0, counterexamples = 0, alt_hypothesis = 0,
              alt_counterexamples = 0;
  for (int t = 0; t < config.trials; ++t) {
    const auto f = synthesize(random_coefficients(rng, gen), basis);
    for (const auto& r : certify(f, radii, rule, opts)) {
      series_failures += !r.pass_series;
      closed_failures += !r.pass_closed;
      hypothesis += r.schwarz_hypothesis;
      counterexamples += r.schwarz_counterexample;
      alt_hypothesis += r.schwarz_alt_hypothesis;
      alt_counterexamples += r.schwarz_alt_counterexample;
      reports.push_back(report_json(t, r));
      auto b = [](bool v) { return v ? "true" : "false"; };
      csv << t << ',' << fmt(r.r) << ',' << fmt(r.max_f) << ',' << fmt(r.f0_abs) << ',' << fmt(r.re_norm) << ','
          << fmt(r.re_e1_norm) << ',' << fmt(r.rhs_series) << ',' << fmt(r.rhs_closed) << ',' << fmt(r.a1) << ','
          << fmt(r.a2) << ',' << b(r.pass_series) << ',' << b(r.pass_closed) << ',' << b(r.schwarz_hypothesis)
          << ',' << b(r.schwarz_counterexample) << ',' << b(r.schwarz_alt_hypothesis) << ','
          << b(r.schwarz_alt_counterexample) << '\n';
    }
  }

  json ratios = json::array();
  for (double r : radii)
    if (r > 0.0) ratios.push_back({{"r", r}, {"closed_over_series_part1", a1_closed_to_series_ratio(r, config.tol)}});

  const bool ok = series_failures == 0 && counterexamples == 0;
  err << "bound: " << config.trials * radii.size() << " cases, series failures " << series_failures
      << ", closed-form failures " << closed_failures << ", schwarz hypothesis met " << hypothesis
      << " (counterexamples " << counterexamples << ")\n";

  if (config.format == OutputFormat::Csv) {
    emit(config, csv.str(), out);
  } else {
    json j = envelope(config);
    j["generator"] = {{"seed", config.seed},
                      {"degree", config.max_degree},
                      {"coefficient_range", {gen.lo, gen.hi}},
                      {"zero_f0", gen.zero_f0},
                      {"trials", config.trials}};
    j["r_values"] = radii;
    j["quadrature"] = {rule.n_theta(), rule.n_phi()};
    j["max_estimate"] = {{"n_theta", opts.max_estimate.n_theta},
                         {"n_phi", opts.max_estimate.n_phi},
                         {"refine_rounds", opts.max_estimate.refine_rounds},
                         {"refine_points", opts.max_estimate.refine_points}};
    j["reports"] = std::move(reports);
    j["a1_ratio"] = std::move(ratios);
    j["summary"] = {{"cases", config.trials * radii.size()},
                    {"series_failures", series_failures},
                    {"closed_failures", closed_failures},
                    {"schwarz_hypothesis_met", hypothesis},
                    {"schwarz_counterexamples", counterexamples},
                    {"schwarz_alt_hypothesis_met", alt_hypothesis},
                    {"schwarz_alt_counterexamples", alt_counterexamples},
                    {"passed", ok}};
    emit(config, dump(j), out);
  }
  return ok ? exit_code::kOk : exit_code::kVerificationFailure;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<double> parse_r_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3 || spec.back() == ':') throw ConfigError("--r-grid must be start:stop:step, got '" + spec + "'");
  const double start = parse_number(parts[0], "r-grid start");
  const double stop = parse_number(parts[1], "r-grid stop");
  const double step = parse_number(parts[2], "r-grid step");
  if (step <= 0.0) throw ConfigError("--r-grid step must be positive");
  if (stop < start) throw ConfigError("--r-grid stop must not be below start");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    if (v > stop + step * 1e-9) break;
    if (!(v >= 0.0 && v < 0.5)) throw ConfigError("--r-grid values must lie in [0, 0.5), got " + fmt(v));
    out.push_back(v);
    if (out.size() > 100000) throw ConfigError("--r-grid has too many points");
  }
  return out;
}

std::pair<int, int> parse_quadrature(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw ConfigError("--quadrature must be n_theta,n_phi");
  const double a = parse_number(spec.substr(0, comma), "quadrature n_theta");
  const double b = parse_number(spec.substr(comma + 1), "quadrature n_phi");
  if (a != std::floor(a) || b != std::floor(b) || a < 1 || b < 1 || a > 1e5 || b > 1e5)
    throw ConfigError("--quadrature sizes must be positive integers");
  return {static_cast<int>(a), static_cast<int>(b)};
}

void validate(const RunConfig& c) {
  if (c.max_degree < 0 || c.max_degree > kMaxDegreeLimit)
    throw ConfigError("--max-degree must lie in [0, " + std::to_string(kMaxDegreeLimit) + "]");
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.command == Command::Bound) {
    if (c.trials < 1) throw ConfigError("--trials must be at least 1");
    parse_r_grid(c.r_grid);
  }
  if (c.command == Command::Decompose && c.input.empty()) throw ConfigError("decompose needs --input");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::Basis: return run_basis(config, out);
      case Command::Norms: return run_norms(config, out, err);
      case Command::Verify: return run_verify(config, out, err);
      case Command::Decompose: return run_decompose(config, out);
      case Command::Bound: return run_bound(config, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kConfigError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kIoError;
  }
  return exit_code::kConfigError;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monogenic polynomials on the unit ball: bases, identities, decomposition and growth bounds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string quadrature;
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", config.max_degree, "Highest degree n")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", config.out, "Output file (default: standard output)");
  };

  auto* basis = app.add_subcommand("basis", "Emit the spherical monogenics as exact polynomials");
  common(basis);
  auto* norms = app.add_subcommand("norms", "Tabulate exact norms against their closed forms");
  common(norms);
  auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
  common(verify);
  verify->add_option("--seed", config.seed, "Seed for random test polynomials")->capture_default_str();
  auto* decompose = app.add_subcommand("decompose", "Recover coefficients from Re f and Re(f e1) samples");
  common(decompose);
  decompose->add_option("--input", config.input, "Samples JSON file")->required();
  auto* bound = app.add_subcommand("bound", "Check the growth bound on random monogenic polynomials");
  common(bound);
  bound->add_option("--seed", config.seed, "Generator seed")->capture_default_str();
  bound->add_option("--trials", config.trials, "Number of random polynomials")->capture_default_str();
  bound->add_option("--r-grid", config.r_grid, "Radii as start:stop:step")->capture_default_str();
  bound->add_option("--tol", config.tol, "Series truncation tolerance")->capture_default_str();
  bound->add_option("--quadrature", quadrature, "Sphere rule n_theta,n_phi for the boundary norms");
  bound->add_flag("--zero-f0", config.zero_f0, "Draw polynomials with f(0) = 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // also reached for --help and --version, which exit with code 0
    std::ostringstream o, es;
    const int code = app.exit(e, o, es);
    out << o.str();
    err << es.str();
    return code == 0 ? exit_code::kOk : exit_code::kConfigError;
  }

  if (*basis) config.command = Command::Basis;
  if (*norms) config.command = Command::Norms;
  if (*verify) config.command = Command::Verify;
  if (*decompose) config.command = Command::Decompose;
  if (*bound) config.command = Command::Bound;
  config.format = formats.at(format);
  try {
    if (!quadrature.empty()) config.quadrature = parse_quadrature(quadrature);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kConfigError;
  }
  return run(config, out, err);
}

}  // namespace monoball
