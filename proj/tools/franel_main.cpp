#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "franel/cache.hpp"
#include "franel/report.hpp"
#include "franel/sequences.hpp"
#include "franel/suites.hpp"

namespace {

// Exit-code contract: 0 all hold, 1 counterexample or failed check,
// 2 usage/budget, 3 internal or I/O error.
constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return kInternal;
  }
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "write to " << out_path << " failed\n";
    return kInternal;
  }
  return kOk;
}

struct SeqArgs {
  std::string family;
  long r = 0;
  long m = 0;
  long count = 10;
  std::string modulus;
  bool r_set = false;
  bool m_set = false;
};

std::string render_seq(const franel::SequenceTable& result, franel::ReportFormat format,
                       const SeqArgs& args) {
  using franel::Integer;
  if (format == franel::ReportFormat::plain) {
    std::string out;
    for (const Integer& value : result.values) {
      if (!out.empty()) {
        out += ' ';
      }
      out += value.str();
    }
    return out + "\n";
  }
  if (format == franel::ReportFormat::csv) {
    std::string out = "index,value\n";
    for (std::size_t i = 0; i < result.values.size(); ++i) {
      out += std::to_string(i) + "," + result.values[i].str() + "\n";
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["family"] = args.family;
  if (args.m_set) {
    j["m"] = args.m;
  }
  if (args.r_set) {
    j["r"] = args.r;
  }
  j["count"] = args.count;
  if (result.request.modulus) {
    j["modulus"] = result.request.modulus->value().str();
  }
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const Integer& value : result.values) {
    values.push_back(value.str());
  }
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

int run_seq(const SeqArgs& args, franel::ReportFormat format, const std::string& out_path) {
  auto family = franel::family_from_name(args.family);
  if (!family) {
    std::cerr << "unknown family '" << args.family
              << "' (expected franel, powersum, multinomial, or a002893)\n";
    return kUsage;
  }
  franel::SequenceRequest request;
  request.family = *family;
  request.count = args.count;
  if (args.r_set) {
    request.r = args.r;
  }
  if (args.m_set) {
    request.m = args.m;
  }
  if (!args.modulus.empty()) {
    try {
      request.modulus = franel::Modulus(franel::Integer(args.modulus));
    } catch (const std::runtime_error&) {
      std::cerr << "--mod expects a decimal integer, got '" << args.modulus << "'\n";
      return kUsage;
    }
  }
  franel::SequenceTable result = franel::table(request);
  return write_output(render_seq(result, format, args), out_path);
}

int run_report_command(franel::ScanReport report, franel::ReportFormat format, bool stable,
                       const std::string& out_path, const std::string& cache_path) {
  if (!cache_path.empty()) {
    std::string error;
    if (!franel::cache_save(cache_path, error)) {
      std::cerr << error << "\n";
      return kInternal;
    }
  }
  int io = write_output(franel::render_report(report, format, stable), out_path);
  if (io != kOk) {
    return io;
  }
  return franel::report_exit_code(report) == 0 ? kOk : kCounterexample;
}

void load_cache_if_present(const std::string& cache_path) {
  if (cache_path.empty() || !std::filesystem::exists(cache_path)) {
    return;
  }
  std::vector<std::string> warnings;
  franel::cache_load(cache_path, warnings);
  for (const std::string& warning : warnings) {
    std::cerr << warning << "\n";
  }
}

int run_oracle(long m, long n, long r, long budget) {
  franel::Integer recurrence = franel::multi_power_sum(m, n, r);
  franel::Integer enumerated = franel::multi_power_sum_oracle(m, n, r, budget);
  if (recurrence == enumerated) {
    std::cout << recurrence << " == " << enumerated << " OK\n";
    return kOk;
  }
  std::cout << recurrence << " != " << enumerated << " MISMATCH\n";
  return kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for Franel numbers and binomial power-sum congruences"};
  app.set_version_flag("--version", franel::kToolVersion);
  app.require_subcommand(1);

  std::string seq_format = "plain";
  std::string report_format = "json";
  std::string out_path;
  std::string cache_path;
  bool stable = false;

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "print a sequence prefix");
  seq->add_option("--family", seq_args.family, "franel | powersum | multinomial | a002893")
      ->required();
  auto* seq_r = seq->add_option("--r", seq_args.r, "power (powersum, multinomial)");
  auto* seq_m = seq->add_option("--m", seq_args.m, "parts (multinomial)");
  seq->add_option("--count", seq_args.count, "number of values, from index 0")
      ->default_val(10);
  seq->add_option("--mod", seq_args.modulus, "reduce printed values by this modulus");
  seq->add_option("--format", seq_format, "plain | json | csv (default plain)");
  seq->add_option("--out", out_path, "write to file instead of stdout");

  franel::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run an identity/congruence suite");
  verify->add_option("--suite", verify_options.suite, "identities | theorems | lemmas | all")
      ->default_val("all");
  verify->add_option("--nmax", verify_options.nmax, "index sweep bound (default per suite)");
  verify->add_option("--pmax", verify_options.pmax, "prime sweep bound (default 150)");
  verify->add_option("--format", report_format, "plain | json | csv (default json)");
  verify->add_option("--out", out_path, "write report to file instead of stdout");
  verify->add_flag("--stable", stable, "omit the timestamp so reports can be diffed");
  verify->add_option("--cache", cache_path, "advisory sequence cache file (read and rewritten)");

  franel::ScanOptions scan_options;
  auto* scan = app.add_subcommand("scan", "sweep a conjecture grid for counterexamples");
  scan->add_option("--conjecture", scan_options.conjecture,
                   "conj1 | conj1-odd | conj1-even | conj2")
      ->required();
  scan->add_option("--nmax", scan_options.nmax, "index sweep bound (default 150; conj2 80)");
  scan->add_option("--rmax", scan_options.rmax, "power sweep bound (default per conjecture)");
  scan->add_option("--mmax", scan_options.mmax, "parts sweep bound (conj2 only, default 5)");
  scan->add_option("--jobs", scan_options.jobs, "worker threads")->default_val(1);
  scan->add_option("--format", report_format, "plain | json | csv (default json)");
  scan->add_option("--out", out_path, "write report to file instead of stdout");
  scan->add_flag("--stable", stable, "omit the timestamp so reports can be diffed");
  scan->add_option("--cache", cache_path, "advisory sequence cache file (read and rewritten)");

  long oracle_m = 0, oracle_n = 0, oracle_r = 0, oracle_budget = 1'000'000;
  auto* oracle = app.add_subcommand("oracle",
                                    "cross-check multinomial recurrence against enumeration");
  oracle->add_option("--m", oracle_m, "parts")->required();
  oracle->add_option("--n", oracle_n, "index")->required();
  oracle->add_option("--r", oracle_r, "power")->required();
  oracle->add_option("--budget", oracle_budget, "largest composition count to enumerate")
      ->default_val(1'000'000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  seq_args.r_set = seq_r->count() > 0;
  seq_args.m_set = seq_m->count() > 0;

  try {
    const std::string& format_name = seq->parsed() ? seq_format : report_format;
    auto format = franel::report_format_from_name(format_name);
    if (!format) {
      std::cerr << "unknown format '" << format_name << "' (expected plain, json, or csv)\n";
      return kUsage;
    }
    if (seq->parsed()) {
      return run_seq(seq_args, *format, out_path);
    }
    if (verify->parsed()) {
      load_cache_if_present(cache_path);
      return run_report_command(franel::run_verify(verify_options), *format, stable, out_path,
                                cache_path);
    }
    if (scan->parsed()) {
      load_cache_if_present(cache_path);
      return run_report_command(franel::run_scan(scan_options), *format, stable, out_path,
                                cache_path);
    }
    if (oracle->parsed()) {
      return run_oracle(oracle_m, oracle_n, oracle_r, oracle_budget);
    }
  } catch (const franel::BudgetError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
