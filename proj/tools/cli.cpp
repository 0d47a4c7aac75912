#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "trigrat/angle.hpp"
#include "trigrat/certifier.hpp"
#include "trigrat/classifier.hpp"
#include "trigrat/highprec.hpp"
#include "trigrat/polynomial.hpp"

namespace trigrat::cli {

namespace {

struct Config {
  std::string command;
  std::string operand;
  std::string function = "tan2";
  bool function_given = false;
  bool json = false;
  unsigned bits = 128;
  unsigned long max_den = 0;
  unsigned jobs = 1;
  bool verify = false;
  bool crosscheck = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_angle(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("bad angle '" + text + "': " + e.what());
  }
}

TrigFunction parse_function(const std::string& text) {
  const auto f = parse_trig_function(text);
  if (!f) throw UsageError("unknown function '" + text + "' (expected tan2, tan, cos2 or cos)");
  return *f;
}

std::string describe_reduction(const Rational& r, TrigFunction f) {
  const bool tan_like = f == TrigFunction::Tan2 || f == TrigFunction::Tan;
  const ReducedAngle a = tan_like ? reduce_for_tan(r) : reduce_for_cos(r);
  std::string out = a.fraction().str();
  if (f == TrigFunction::Tan && a.sign < 0) out += " sign -1";
  return out;
}

int do_classify(const Config& cfg, std::ostream& out) {
  const Rational r = parse_angle(cfg.operand);
  const TrigFunction f = parse_function(cfg.function);
  const TrigVerdict v = classify(r, f);
  if (cfg.json) {
    nlohmann::json j = {{"input", r.str()},
                        {"function", std::string(to_string(f))},
                        {"reduced", describe_reduction(r, f)},
                        {"verdict", {{"kind", std::string(to_string(v.kind))}}}};
    if (v.value) j["verdict"]["value"] = v.value->str();
    out << j.dump() << '\n';
  } else {
    out << to_string(f) << '(' << r.str() << ") reduced " << describe_reduction(r, f) << ": "
        << v.str() << '\n';
  }
  return kOk;
}

int do_certify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Rational r = parse_angle(cfg.operand);
  const TrigFunction f = parse_function(cfg.function);
  if (cfg.bits < kMinBits || cfg.bits > kMaxSeparationBits) throw UsageError("--bits must be in [8, 4096]");
  const Certificate cert = certify(r, f, cfg.bits);
  if (cfg.verify) {
    if (const VerificationResult res = verify_certificate(cert); !res) {
      err << "certificate failed verification: " << res.reason << '\n';
      return kCheckFailed;
    }
  }
  out << to_json(cert) << '\n';
  return kOk;
}

int do_verify(const Config& cfg, std::ostream& out, std::istream& in) {
  std::string text;
  if (cfg.operand.empty() || cfg.operand == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(cfg.operand, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + cfg.operand + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const VerificationResult res = verify_certificate_json(text);
  if (res) {
    out << "pass\n";
    return kOk;
  }
  out << "fail: " << res.reason << '\n';
  return kCheckFailed;
}

int do_poly(const Config& cfg, std::ostream& out) {
  Integer n;
  try {
    n = parse_integer(cfg.operand);
  } catch (const std::exception&) {
    throw UsageError("poly expects an odd integer n >= 3");
  }
  if (n < 3 || mpz_even_p(n.get_mpz_t())) throw UsageError("poly expects an odd integer n >= 3");
  if (n > 1000000) throw UsageError("poly: n too large");
  out << build_Q(n).str() << '\n';
  return kOk;
}

constexpr std::size_t kFunctionCount = 4;
constexpr TrigFunction kAllFunctions[kFunctionCount] = {TrigFunction::Tan2, TrigFunction::Tan,
                                                        TrigFunction::Cos2, TrigFunction::Cos};

struct FunctionTally {
  unsigned long exact = 0;
  unsigned long pole = 0;
  unsigned long irrational = 0;
};

struct DenominatorReport {
  std::vector<FunctionTally> tallies = std::vector<FunctionTally>(kFunctionCount);
  std::vector<std::string> failures;
};

DenominatorReport scan_denominator(unsigned long n, const std::vector<TrigFunction>& functions,
                                   const Config& cfg) {
  DenominatorReport report;
  for (unsigned long d : sweep_numerators(n)) {
    const Rational r{Integer(d), Integer(n)};
    for (std::size_t i = 0; i < functions.size(); ++i) {
      const TrigFunction f = functions[i];
      const std::string where = std::string(to_string(f)) + " " + r.str();
      try {
        const TrigVerdict v = classify(r, f);
        FunctionTally& t = report.tallies[i];
        (v.kind == VerdictKind::Exact ? t.exact : v.kind == VerdictKind::Pole ? t.pole : t.irrational)++;
        const Certificate cert = certify(r, f, cfg.bits);
        if (!(cert.verdict == v)) report.failures.push_back("FAIL " + where + ": certificate verdict differs");
        if (const auto res = verify_certificate(cert); !res) {
          report.failures.push_back("FAIL " + where + ": " + res.reason);
        }
        if (cfg.crosscheck && !trigrat::crosscheck(r, f, v, cfg.bits)) {
          report.failures.push_back("FAIL " + where + ": numeric cross-check (" + v.str() + ")");
        }
      } catch (const std::exception& e) {
        report.failures.push_back("FAIL " + where + ": " + e.what());
      }
    }
  }
  return report;
}

int do_scan(const Config& cfg, std::ostream& out) {
  if (cfg.max_den == 0) throw UsageError("scan requires --max-den N with N >= 1");
  if (cfg.jobs == 0) throw UsageError("--jobs must be positive");
  if (cfg.bits < kMinBits || cfg.bits > kMaxSeparationBits) throw UsageError("--bits must be in [8, 4096]");
  std::vector<TrigFunction> functions(std::begin(kAllFunctions), std::end(kAllFunctions));
  if (cfg.function_given) functions = {parse_function(cfg.function)};

  // Denominators are handed out dynamically; reports land in per-n slots and
  // are emitted in ascending order afterwards.
  std::vector<DenominatorReport> reports(cfg.max_den);
  std::atomic<unsigned long> next{1};
  auto worker = [&] {
    for (unsigned long n = next++; n <= cfg.max_den; n = next++) {
      reports[n - 1] = scan_denominator(n, functions, cfg);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < cfg.jobs; ++k) pool.emplace_back(worker);
    worker();
  }

  unsigned long angles = 0;
  for (unsigned long n = 1; n <= cfg.max_den; ++n) angles += sweep_numerators(n).size();
  std::vector<FunctionTally> totals(functions.size());
  std::size_t failures = 0;
  for (const DenominatorReport& rep : reports) {
    for (const std::string& line : rep.failures) out << line << '\n';
    failures += rep.failures.size();
    for (std::size_t i = 0; i < functions.size(); ++i) {
      totals[i].exact += rep.tallies[i].exact;
      totals[i].pole += rep.tallies[i].pole;
      totals[i].irrational += rep.tallies[i].irrational;
    }
  }
  out << "scan max-den=" << cfg.max_den << " angles=" << angles
      << " crosscheck=" << (cfg.crosscheck ? "on" : "off") << " bits=" << cfg.bits << '\n';
  for (std::size_t i = 0; i < functions.size(); ++i) {
    out << to_string(functions[i]) << ": exact=" << totals[i].exact << " pole=" << totals[i].pole
        << " irrational=" << totals[i].irrational << '\n';
  }
  out << "failures=" << failures << '\n';
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Config cfg;
  CLI::App app{"Exact rationality verdicts and certificates for tan^2, tan, cos^2 and cos at rational multiples of pi",
               "trig-rational"};
  app.require_subcommand(1);

  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--function", cfg.function, "tan2 | tan | cos2 | cos (default tan2)")
        ->each([&](const std::string&) { cfg.function_given = true; });
  };
  auto add_bits = [&](CLI::App* sub, const char* help) { sub->add_option("--bits", cfg.bits, help); };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify f(r pi) as exact, pole or irrational");
  classify_cmd->add_option("ANGLE", cfg.operand, "rational r as d/n")->required();
  add_function(classify_cmd);
  classify_cmd->add_flag("--json", cfg.json, "emit JSON");

  CLI::App* certify_cmd = app.add_subcommand("certify", "Emit a JSON certificate for the verdict");
  certify_cmd->add_option("ANGLE", cfg.operand, "rational r as d/n")->required();
  add_function(certify_cmd);
  add_bits(certify_cmd, "starting precision for separation exclusions (default 128)");
  certify_cmd->add_flag("--verify", cfg.verify, "verify before printing");
  certify_cmd->add_flag("--json", cfg.json, "accepted for symmetry; output is always JSON");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a certificate from FILE or standard input");
  verify_cmd->add_option("FILE", cfg.operand, "certificate path, '-' or omitted for stdin");

  CLI::App* scan_cmd = app.add_subcommand("scan", "Classify, certify and verify every reduced d/n up to a bound");
  scan_cmd->add_option("--max-den", cfg.max_den, "largest denominator")->required();
  scan_cmd->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
  scan_cmd->add_flag("--crosscheck", cfg.crosscheck, "also check verdicts against certified enclosures");
  add_bits(scan_cmd, "enclosure precision (default 128)");
  add_function(scan_cmd);
  scan_cmd->add_flag("--verify", cfg.verify, "accepted for symmetry; scan always verifies");

  CLI::App* poly_cmd = app.add_subcommand("poly", "Print the coefficients of Q_n, ascending");
  poly_cmd->add_option("N", cfg.operand, "odd n >= 3")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*classify_cmd) return do_classify(cfg, out);
    if (*certify_cmd) return do_certify(cfg, out, err);
    if (*verify_cmd) return do_verify(cfg, out, in);
    if (*scan_cmd) return do_scan(cfg, out);
    if (*poly_cmd) return do_poly(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace trigrat::cli
