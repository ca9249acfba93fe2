#include "pasfrac_tools/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "pasfrac/pasfrac.hpp"
#include "pasfrac_tools/suite.hpp"

namespace pasfrac::tools {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::uint32_t p = 2;
  std::string form = "xy";
  unsigned precision = kDefaultPrecisionBits;
  std::string format = "text";
  int digits = 0;  // 0: derived from the precision
  double tolerance = 1e-6;
};

// One output record: {op, inputs, value, method, paper_ref} plus extras.
struct Record {
  std::string op;
  Json inputs = Json::object();
  Json value;
  std::string method;
  std::string ref;
  Json extra = Json::object();
};

int effective_digits(const Config& c) {
  if (c.digits > 0) return c.digits;
  return std::max(6, static_cast<int>(c.precision * 0.30103) - 3);
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

// Reals carry their digit count and working precision with them.
Json real_json(const Real& v, const Config& c) {
  return Json{{"decimal", format_real(v, effective_digits(c))},
              {"digits", effective_digits(c)},
              {"precision_bits", working_precision_bits()}};
}

std::string text_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("decimal")) {
    return v["decimal"].get<std::string>() + " (" + std::to_string(v["digits"].get<int>()) + " digits, " +
           std::to_string(v["precision_bits"].get<unsigned>()) + "-bit)";
  }
  if (v.is_object() && v.contains("re")) return text_of(v["re"]) + " + i*" + text_of(v["im"]);
  return v.dump();
}

std::string csv_of(const Json& v) {
  std::string s = v.is_object() && v.contains("decimal") ? v["decimal"].get<std::string>()
                  : v.is_string()                         ? v.get<std::string>()
                                                          : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (const char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return s;
}

Json record_json(const Record& r) {
  Json j{{"op", r.op}, {"inputs", r.inputs}, {"value", r.value}, {"method", r.method}, {"paper_ref", r.ref}};
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

void emit(const std::vector<Record>& records, const Config& c, std::ostream& out) {
  if (c.format == "json") {
    if (records.size() == 1) {
      out << record_json(records.front()).dump(2) << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& r : records) arr.push_back(record_json(r));
      out << arr.dump(2) << "\n";
    }
    return;
  }
  if (c.format == "csv") {
    // Columns: union of flattened keys in order of first appearance.
    std::vector<std::string> columns;
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    auto add = [&](auto& row, const std::string& key, const std::string& value) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
      row.emplace_back(key, value);
    };
    for (const auto& r : records) {
      std::vector<std::pair<std::string, std::string>> row;
      add(row, "op", r.op);
      for (const auto& [k, v] : r.inputs.items()) add(row, k, csv_of(v));
      add(row, "value", csv_of(r.value));
      add(row, "method", r.method);
      add(row, "paper_ref", csv_of(Json(r.ref)));
      for (const auto& [k, v] : r.extra.items()) {
        if (!v.is_array()) add(row, k, csv_of(v));
      }
      rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return kv.first == columns[i]; });
        out << (i ? "," : "") << (it == row.end() ? "" : it->second);
      }
      out << "\n";
    }
    return;
  }
  for (const auto& r : records) {
    out << r.op;
    for (const auto& [k, v] : r.inputs.items()) out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    out << " -> " << text_of(r.value);
    if (!r.method.empty()) out << " [" << r.method << "]";
    out << "\n";
    for (const auto& [k, v] : r.extra.items()) {
      if (v.is_array()) continue;
      out << "  " << k << ": " << text_of(v) << "\n";
    }
  }
}

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw CLI::ValidationError(what, "not an integer: " + text);
  return v;
}

Json base_inputs(const Config& c, const FormSpec& form) { return Json{{"p", c.p}, {"form", form.name()}}; }

std::vector<Record> cmd_phi(const Config& c, const std::vector<std::string>& qs, const std::optional<std::string>& from,
                            const std::optional<std::string>& to, const std::string& method) {
  const Prime p(c.p);
  const FormSpec form = FormSpec::parse(c.form);
  std::vector<Integer> args;
  for (const auto& q : qs) args.push_back(parse_integer(q, "-q"));
  if (from || to) {
    if (!from || !to) throw DomainError("--from and --to go together");
    const Integer lo = parse_integer(*from, "--from");
    const Integer hi = parse_integer(*to, "--to");
    if (hi - lo > 1000000) throw DomainError("range too long (at most 10^6 values)");
    for (Integer q = lo; q < hi; ++q) args.push_back(q);
  }
  if (args.empty()) throw DomainError("give -q or --from/--to");

  std::vector<Record> out;
  for (const auto& q : args) {
    Counted counted{0, Method::BruteForce};
    if (method == "auto") {
      counted = evaluate_phi(p, form, q);
    } else if (method == "brute") {
      counted = {phi_bruteforce(p, form, q), Method::BruteForce};
    } else if (method == "dp") {
      const auto lc = form.linear_coeffs(p);
      if (!lc) throw UnsupportedError("the dp route needs a linear form");
      counted = {phi_linear_dp(p, lc->a, lc->b, q), Method::DigitDp};
    } else if (method == "recurrence") {
      if (form.kind() == FormKind::Diagonal) {
        counted = {phi_diagonal(p, q), Method::Recurrence};
      } else if (form.kind() == FormKind::Skew) {
        counted = {phi_skew(p, q), Method::Recurrence};
      } else {
        throw UnsupportedError("the recurrence route exists only for xy and xpy");
      }
    }
    Record r{"phi", base_inputs(c, form), integer_json(counted.value), std::string(method_name(counted.method)),
             "level count phi(q) on Pas(p)"};
    r.inputs["q"] = integer_json(q);
    out.push_back(std::move(r));
  }
  return out;
}

Integer scaled_argument(const Integer& u, Prime p, unsigned k) {
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  return pk * u;
}

std::vector<Record> cmd_sum(const Config& c, const std::string& u_text, std::optional<unsigned> scaled, bool coeff) {
  const Prime p(c.p);
  const FormSpec form = FormSpec::parse(c.form);
  const Integer u = parse_integer(u_text, "-u");
  if (u < 1) throw DomainError("u must be at least 1");
  Counted s{0, Method::PrefixSum};
  Integer argument = u;
  if (scaled) {
    if (form.kind() != FormKind::Diagonal && form.kind() != FormKind::Skew) {
      throw UnsupportedError("--scaled needs xy or xpy");
    }
    s = {summatory_scaled(p, form.kind(), u, *scaled), Method::Scaled};
    argument = scaled_argument(u, p, *scaled);
  } else {
    s = evaluate_summatory(p, form, u);
  }
  Record r;
  r.inputs = base_inputs(c, form);
  r.inputs["u"] = integer_json(argument);
  if (scaled) r.inputs["scaled"] = *scaled;
  r.method = std::string(method_name(s.method));
  if (coeff) {
    r.op = "coeff";
    r.value = real_json(coefficient_from(p, s.value, argument, form.degree()), c);
    r.ref = "normalized coefficient C(u) = S(u) / u^(theta/d)";
    r.extra["summatory"] = integer_json(s.value);
  } else {
    r.op = "sum";
    r.value = integer_json(s.value);
    r.ref = "summatory S(u) = #{P(m,n) < u}";
  }
  return {r};
}

std::vector<Record> cmd_accum(const Config& c, const std::string& u_text, std::optional<unsigned> k,
                              std::optional<std::string> expected) {
  const Prime p(c.p);
  const FormSpec form = FormSpec::parse(c.form);
  const Integer u = parse_integer(u_text, "-u");
  const AccumulationReport a = accumulation(p, form.kind(), u);
  Record r{"accum", base_inputs(c, form), real_json(a.limit, c), "closed-form", "accumulation point A(u) = lim C(p^k u)"};
  r.inputs["u"] = integer_json(u);
  r.extra["coefficient"] = real_json(a.coefficient, c);
  r.extra["correction"] = real_json(a.correction, c);
  r.extra["bound_ratio"] = real_json(a.bound_ratio, c);
  r.extra["steps_for_tolerance"] = a.steps_for(Real(c.tolerance));
  if (k) {
    r.inputs["k"] = *k;
    r.extra["error_bound"] = real_json(a.error_bound(*k), c);
  }
  if (expected) {
    const Real want(*expected);
    const Real gap = boost::multiprecision::abs(a.limit - want);
    r.extra["expected"] = *expected;
    r.extra["gap"] = real_json(gap, c);
    r.extra["matches"] = gap < Real(c.tolerance);
  }
  return {r};
}

std::vector<Record> cmd_zeta(const Config& c, const std::string& sigma, const std::string& t, std::uint64_t U) {
  const Prime p(c.p);
  const FormSpec form = FormSpec::parse(c.form);
  const Complex s{Real(sigma), Real(t)};
  const ZetaPartialSum z = zeta_partial_sum(p, form, s, U);
  Record r{"zeta", base_inputs(c, form), Json{{"re", real_json(z.value.re, c)}, {"im", real_json(z.value.im, c)}},
           "level-sum", "truncated zeta series sum_{q<U} phi(q) q^(-s/d)"};
  r.inputs["sigma"] = sigma;
  r.inputs["t"] = t;
  r.inputs["U"] = U;
  r.extra["tail_bound"] = real_json(z.tail_bound, c);
  r.extra["c_sup"] = real_json(z.c_sup, c);
  r.extra["tail_bound_heuristic"] = z.tail_bound_heuristic;
  return {r};
}

std::vector<Record> cmd_render(const Config& c, std::uint64_t rows, const std::string& output, unsigned cell) {
  const Prime p(c.p);
  const TriangleImage image = build_image(p, rows);
  const bool svg = output.size() >= 4 && output.substr(output.size() - 4) == ".svg";
  if (svg) {
    write_svg(image, output, cell);
  } else {
    write_pbm(image, output);
  }
  Record r{"render", Json{{"p", c.p}, {"rows", rows}, {"output", output}}, popcount(image), svg ? "svg" : "pbm",
           "image of Pas(p) in T_N"};
  r.extra["popcount"] = popcount(image);
  return {r};
}

std::vector<Record> cmd_scan(const Config& c, std::uint64_t u_max) {
  const Prime p(c.p);
  const FormSpec form = FormSpec::parse(c.form);
  const ExtremaScan scan = scan_extrema(p, form, u_max);
  const auto table = summatory_table(p, form, u_max + 1);
  std::vector<Record> out;
  for (std::uint64_t u = 1; u <= u_max; ++u) {
    Record row{"scan-row", base_inputs(c, form), real_json(coefficient_from(p, table[u], Integer(u), form.degree()), c),
               "prefix-sum", "coefficient C(u) and accumulation point A(u)"};
    row.inputs["u"] = u;
    row.extra["summatory"] = integer_json(table[u]);
    if (!scan.limits.empty()) row.extra["limit"] = real_json(scan.limits[u - 1], c);
    out.push_back(std::move(row));
  }
  Record summary{"scan", base_inputs(c, form), real_json(scan.coefficient_max, c), "extrema",
                 "extrema of C(u) and A(u) over 1 <= u <= u_max"};
  summary.inputs["u_max"] = u_max;
  summary.extra["coefficient_min"] = real_json(scan.coefficient_min, c);
  summary.extra["coefficient_argmin"] = Json(scan.coefficient_argmin).dump();
  summary.extra["coefficient_argmax"] = Json(scan.coefficient_argmax).dump();
  if (scan.limit_min) {
    summary.extra["limit_min"] = real_json(*scan.limit_min, c);
    summary.extra["limit_argmin"] = Json(scan.limit_argmin).dump();
    summary.extra["limit_max"] = real_json(*scan.limit_max, c);
    summary.extra["limit_argmax"] = Json(scan.limit_argmax).dump();
  }
  out.push_back(std::move(summary));
  return out;
}

std::vector<Record> cmd_ellip(const Config& c) {
  const Prime p(c.p);
  const FormSpec form = FormSpec::parse(c.form);
  const EllipticityCertificate cert = check_t_elliptic(form, p);
  Record r{"ellip", base_inputs(c, form), std::string(verdict_name(cert.elliptic)), "dyadic-lipschitz",
           "T-ellipticity of the top-degree part"};
  r.extra["positive"] = std::string(verdict_name(cert.positive));
  if (cert.bounds) {
    r.extra["c1"] = static_cast<double>(cert.bounds->c1);
    r.extra["c2"] = static_cast<double>(cert.bounds->c2);
    r.extra["R"] = static_cast<double>(cert.bounds->R);
    r.extra["min_angle"] = static_cast<double>(cert.min_location);
  }
  if (cert.witness) r.extra["witness"] = Json::array({static_cast<double>(cert.witness->x), static_cast<double>(cert.witness->y)});
  return {r};
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Integer v = parse_integer(item, "--primes");
    if (v < 2 || !v.fits_uint_p() || !is_prime(v.get_ui())) throw DomainError("not a prime: " + item);
    out.push_back(static_cast<std::uint32_t>(v.get_ui()));
  }
  if (out.empty()) throw DomainError("--primes is empty");
  return out;
}

int cmd_verify(const Config& c, SuiteOptions options, const std::string& report_path, std::ostream& out) {
  Json checks = Json::array();
  auto results = run_suite(options, [&](const CheckResult& r) {
    if (c.format == "text") {
      out << (r.passed ? "PASS " : "FAIL ") << r.key << "  (" << r.seconds << " s)  " << r.detail << "\n";
      out.flush();
    }
  });
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& r : results) {
    checks.push_back(Json{{"id", r.id},
                          {"check", r.key},
                          {"title", r.title},
                          {"paper_ref", r.ref},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
  }
  const bool ok = all_passed(results);
  std::vector<std::string> failed;
  for (const auto& r : results) {
    if (!r.passed) failed.push_back(r.key);
  }
  Json inputs{{"recurrence_q_max", options.recurrence_q_max},
              {"oracle_q_max", options.oracle_q_max},
              {"stolarsky_u_max", options.stolarsky_u_max},
              {"primes", options.primes},
              {"precision_bits", working_precision_bits()}};
  if (!options.inject_fault.empty()) inputs["inject_fault"] = options.inject_fault;
  const Json report{{"op", "verify"},          {"inputs", inputs},  {"value", ok ? "PASS" : "FAIL"},
                    {"method", "suite"},       {"paper_ref", "identity and property suite"},
                    {"failed", failed},        {"checks", checks}};
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) throw IoError("cannot write report " + report_path);
    file << report.dump(2) << "\n";
  }
  if (c.format == "json") {
    out << report.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "id,check,passed,seconds\n";
    for (const auto& r : results) out << r.id << "," << r.key << "," << (r.passed ? "true" : "false") << "," << r.seconds << "\n";
  } else {
    out << (ok ? "verify: PASS" : "verify: FAIL");
    for (const auto& f : failed) out << " " << f;
    out << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Level counts, self-similar coefficients and zeta sums over Pascal's triangle mod p", "pasfrac"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; command-line flags win");

  Config c;
  app.add_option("-p,--prime", c.p, "prime modulus")->check(CLI::PositiveNumber);
  app.add_option("--form", c.form, "x | xy | xpy | linear:a,b | poly:<expr>");
  app.add_option("--precision", c.precision, "working precision in bits (>= 64)")
      ->envname("PASCAL_FRACTAL_PRECISION")
      ->check(CLI::Range(kMinPrecisionBits, 1U << 20));
  app.add_option("--format", c.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", c.digits, "significant digits printed for reals")->check(CLI::Range(1, 100000));
  app.add_option("--tol", c.tolerance, "tolerance for comparisons")->check(CLI::PositiveNumber);

  auto* phi = app.add_subcommand("phi", "level count phi(q)");
  std::vector<std::string> qs;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::string method = "auto";
  phi->add_option("-q", qs, "level(s); negative levels count nothing")->allow_extra_args(false);
  phi->add_option("--from", from, "first level of a range");
  phi->add_option("--to", to, "end of the range (exclusive)");
  phi->add_option("--method", method, "auto | brute | dp | recurrence")
      ->check(CLI::IsMember({"auto", "brute", "dp", "recurrence"}));

  std::string u_text;
  std::optional<unsigned> scaled;
  auto* sum = app.add_subcommand("sum", "summatory S(u)");
  sum->add_option("-u", u_text, "argument u >= 1")->required();
  sum->add_option("--scaled", scaled, "evaluate S(p^k u) by the scaling law");
  auto* coeff = app.add_subcommand("coeff", "normalized coefficient C(u)");
  coeff->add_option("-u", u_text, "argument u >= 1")->required();
  coeff->add_option("--scaled", scaled, "evaluate at p^k u by the scaling law");

  std::optional<unsigned> k;
  std::optional<std::string> expected;
  auto* accum = app.add_subcommand("accum", "accumulation point A(u)");
  accum->add_option("-u", u_text, "argument u >= 1")->required();
  accum->add_option("-k", k, "report the error bound after k scalings");
  accum->add_option("--expect", expected, "compare against this constant at --tol");

  std::string sigma = "2";
  std::string t = "0";
  std::uint64_t U = 4096;
  auto* zeta = app.add_subcommand("zeta", "truncated zeta partial sum");
  zeta->add_option("--sigma", sigma, "real part of s");
  zeta->add_option("--t", t, "imaginary part of s");
  zeta->add_option("-U", U, "truncation: levels q < U");

  std::uint64_t rows = 16;
  std::string output;
  unsigned cell = 8;
  auto* render = app.add_subcommand("render", "write a PBM or SVG image of Pas(p)");
  render->add_option("--rows", rows, "rows m < rows")->check(CLI::PositiveNumber);
  render->add_option("-o,--output", output, "output path; .svg selects SVG")->required();
  render->add_option("--cell", cell, "SVG cell size in pixels");

  std::uint64_t u_max = 64;
  auto* scan = app.add_subcommand("scan", "table of C(u) and A(u) with extrema");
  scan->add_option("--umax", u_max, "largest u")->check(CLI::PositiveNumber);

  app.add_subcommand("ellip", "T-ellipticity certificate of the form");

  SuiteOptions suite;
  std::string primes_text;
  std::optional<std::uint64_t> verify_umax;
  std::string report_path;
  std::string golden;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "run the identity and property suite");
  verify->add_option("--umax", verify_umax, "range of the exhaustive recurrence and oracle checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--primes", primes_text, "comma-separated primes for the exhaustive checks");
  verify->add_option("--stolarsky-max", suite.stolarsky_u_max, "range of the Stolarsky scan")->check(CLI::Range(2, 100000000));
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--golden-dir", golden, "directory with golden PBM files");
  verify->add_flag("--serial", serial, "run checks one at a time");
  verify->add_option("--inject-fault", suite.inject_fault, "corrupt the expected value of one check (test hook)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const PrecisionScope precision(c.precision);
    std::vector<Record> records;
    if (*phi) {
      records = cmd_phi(c, qs, from, to, method);
    } else if (*sum) {
      records = cmd_sum(c, u_text, scaled, false);
    } else if (*coeff) {
      records = cmd_sum(c, u_text, scaled, true);
    } else if (*accum) {
      records = cmd_accum(c, u_text, k, expected);
    } else if (*zeta) {
      records = cmd_zeta(c, sigma, t, U);
    } else if (*render) {
      records = cmd_render(c, rows, output, cell);
    } else if (*scan) {
      records = cmd_scan(c, u_max);
    } else if (app.got_subcommand("ellip")) {
      records = cmd_ellip(c);
    } else if (*verify) {
      if (verify_umax) suite.recurrence_q_max = suite.oracle_q_max = *verify_umax;
      if (!primes_text.empty()) suite.primes = parse_primes(primes_text);
      if (!golden.empty()) suite.golden_dir = golden;
      if (!suite.inject_fault.empty()) {
        const auto& specs = suite_checks();
        if (std::none_of(specs.begin(), specs.end(), [&](const auto& s) { return s.key == suite.inject_fault; })) {
          throw DomainError("unknown check: " + suite.inject_fault);
        }
      }
      suite.parallel = !serial;
      return cmd_verify(c, suite, report_path, out);
    }
    emit(records, c, out);
    return kExitOk;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace pasfrac::tools
