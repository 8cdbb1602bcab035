#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "ellcarm/classify.hpp"
#include "ellcarm/experiments.hpp"
#include "ellcarm/lseries.hpp"

namespace ellcarm::cli {

namespace {

using ojson = nlohmann::ordered_json;

template <class T>
const T& require(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw ParseError(command + " needs --" + flag);
  return *v;
}

std::string fraction(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string flag_text(const Flag& f) {
  if (!f.value) return "n/a";
  return *f.value ? "true" : "false";
}

CommandOutput classify(const JobSpec& spec) {
  const WeierstrassCurve E = parse_curve(require(spec.curve, "curve", spec.command));
  const ClassificationReport r =
      classify_report(require(spec.N, "n", spec.command), E, spec.point, spec.d);
  if (spec.format == OutputFormat::json) return {kOk, to_json_line(r) + "\n"};
  std::ostringstream os;
  os << "N,curve,a_N,elliptic_pp,gordon_pp,euler_pp,strong_pp,elliptic_carmichael,"
        "euler_carmichael,strong_carmichael,korselt_type1,korselt_type2\n";
  os << r.N.get_str() << ",\"" << r.curve.to_string() << "\"," << r.a_N.get_str();
  for (const Flag* f : {&r.elliptic_pp, &r.gordon_pp, &r.euler_pp, &r.strong_pp,
                        &r.elliptic_carmichael, &r.euler_carmichael, &r.strong_carmichael,
                        &r.korselt_type1, &r.korselt_type2})
    os << "," << flag_text(*f);
  os << "\n";
  return {kOk, os.str()};
}

CommandOutput verify_examples(const JobSpec& spec) {
  const std::vector<GoldenCheck> checks = golden_checks();
  std::ostringstream os;
  std::size_t failed = 0;
  if (spec.format == OutputFormat::csv) os << "status,check,detail\n";
  for (const auto& c : checks) {
    const char* status = !c.passed() ? "FAIL" : c.expect_claim_false ? "EXPECTED-FAIL" : "PASS";
    if (!c.passed()) ++failed;
    if (spec.format == OutputFormat::json) {
      ojson j;
      j["check"] = c.name;
      j["status"] = status;
      j["detail"] = c.detail;
      os << j.dump() << "\n";
    } else if (spec.format == OutputFormat::csv) {
      os << status << "," << c.name << ",\"" << c.detail << "\"\n";
    } else {
      char line[96];
      std::snprintf(line, sizeof line, "%-14s %-48s ", status, c.name.c_str());
      os << line << c.detail << "\n";
    }
  }
  if (spec.format == OutputFormat::text)
    os << checks.size() << " checks, " << failed << " failed\n";
  return {failed ? kCheckFailed : kOk, os.str()};
}

CommandOutput anomalous(const JobSpec& spec) {
  const WeierstrassCurve E = parse_curve(require(spec.curve, "curve", spec.command));
  const std::uint64_t max = require(spec.max, "max", spec.command);
  std::ostringstream os;
  if (!spec.products) {
    const auto primes = find_anomalous(E, 2, max);
    if (spec.format == OutputFormat::csv) os << "p\n";
    for (std::uint64_t p : primes) {
      if (spec.format == OutputFormat::csv)
        os << p << "\n";
      else
        os << ojson{{"p", std::to_string(p)}, {"a_p", "1"}}.dump() << "\n";
    }
    return {kOk, os.str()};
  }
  const TrichotomyReport r = verify_anomalous_trichotomy(E, max);
  if (spec.format == OutputFormat::csv) os << "N,p,q,a_p,a_q,branch\n";
  for (const auto& c : r.products) {
    const char* branch = c.small_p ? "small_p" : c.anomalous ? "anomalous" : c.large_p ? "large_p" : "none";
    const std::string N = mpz_class(mpz_class(static_cast<unsigned long>(c.p)) * c.q).get_str();
    if (spec.format == OutputFormat::csv) {
      os << N << "," << c.p << "," << c.q << "," << c.a_p << "," << c.a_q << "," << branch << "\n";
    } else {
      ojson j;
      j["N"] = N;
      j["p"] = std::to_string(c.p);
      j["q"] = std::to_string(c.q);
      j["a_p"] = std::to_string(c.a_p);
      j["a_q"] = std::to_string(c.a_q);
      j["branch"] = branch;
      os << j.dump() << "\n";
    }
  }
  return {r.ok() ? kOk : kCheckFailed, os.str()};
}

CommandOutput density(const JobSpec& spec) {
  const std::uint64_t M = require(spec.m, "m", spec.command);
  const std::uint64_t trials = spec.trials.value_or(10000);
  const DensityEstimate d = sample_density(M, trials, spec.seed);
  std::ostringstream os;
  if (spec.format == OutputFormat::csv) {
    os << "M,trials,accepted,anomalous_fraction\n";
    os << d.M << "," << d.trials << "," << d.accepted << "," << fraction(d.anomalous_fraction)
       << "\n";
  } else {
    ojson j;
    j["M"] = std::to_string(d.M);
    j["trials"] = std::to_string(d.trials);
    j["seed"] = std::to_string(d.seed);
    j["accepted"] = std::to_string(d.accepted);
    j["anomalous"] = std::to_string(d.anomalous);
    j["anomalous_fraction"] = d.anomalous_fraction;
    j["order_checks"] = std::to_string(d.order_checks);
    j["order_mismatches"] = std::to_string(d.order_mismatches);
    os << j.dump() << "\n";
  }
  return {d.order_mismatches ? kCheckFailed : kOk, os.str()};
}

CommandOutput census(const JobSpec& spec) {
  std::vector<std::uint64_t> primes;
  if (spec.p) {
    if (!is_probable_prime(mpz_class(static_cast<unsigned long>(*spec.p))))
      throw InvalidInput("census: p = " + std::to_string(*spec.p) + " is not prime");
    primes.push_back(*spec.p);
  } else {
    primes = primes_between(5, require(spec.max, "max", spec.command));
  }
  std::ostringstream os;
  if (spec.format == OutputFormat::csv) os << "p,t,class_count,hurwitz_value\n";
  int code = kOk;
  for (std::uint64_t p : primes) {
    const TraceCensus c = trace_census(p);
    for (const auto& [t, row] : c.counts) {
      const mpq_class h = hurwitz_class_number(t * t - 4 * static_cast<long>(p));
      if (h != row.weighted) code = kCheckFailed;
      if (spec.format == OutputFormat::csv) {
        os << p << "," << t << "," << row.weighted.get_str() << "," << h.get_str() << "\n";
      } else {
        ojson j;
        j["p"] = std::to_string(p);
        j["t"] = std::to_string(t);
        j["class_count"] = row.weighted.get_str();
        j["hurwitz_value"] = h.get_str();
        j["classes"] = std::to_string(row.classes);
        j["curves"] = std::to_string(row.curves);
        os << j.dump() << "\n";
      }
    }
  }
  return {code, os.str()};
}

CommandOutput lemmas(const JobSpec& spec) {
  const LemmaScanReport r = verify_divisibility_lemmas(spec.max.value_or(300));
  std::ostringstream os;
  if (spec.format == OutputFormat::csv) {
    os << "q_max,tuples,hypothesis_hits,both_divisible,parametrized_pairs,counterexamples\n"
       << r.q_max << "," << r.tuples << "," << r.hypothesis_hits << "," << r.both_divisible
       << "," << r.parametrized_pairs << "," << r.counterexamples.size() << "\n";
  } else {
    ojson j;
    j["q_max"] = std::to_string(r.q_max);
    j["tuples"] = std::to_string(r.tuples);
    j["hypothesis_hits"] = std::to_string(r.hypothesis_hits);
    j["both_divisible"] = std::to_string(r.both_divisible);
    j["parametrized_pairs"] = std::to_string(r.parametrized_pairs);
    j["counterexamples"] = r.counterexamples;
    os << j.dump() << "\n";
  }
  return {r.ok() ? kOk : kCheckFailed, os.str()};
}

CommandOutput trichotomy(const JobSpec& spec) {
  const WeierstrassCurve E = parse_curve(require(spec.curve, "curve", spec.command));
  const TrichotomyReport r = verify_anomalous_trichotomy(E, spec.max.value_or(2000));
  std::ostringstream os;
  if (spec.format == OutputFormat::csv) {
    os << "M,pairs,products,counterexamples\n"
       << r.M << "," << r.pairs << "," << r.products.size() << "," << r.counterexamples.size()
       << "\n";
  } else {
    ojson j;
    j["M"] = std::to_string(r.M);
    j["pairs"] = std::to_string(r.pairs);
    j["products"] = std::to_string(r.products.size());
    j["counterexamples"] = r.counterexamples;
    os << j.dump() << "\n";
  }
  return {r.ok() ? kOk : kCheckFailed, os.str()};
}

}  // namespace

CommandOutput run_command(const JobSpec& spec) {
  if (spec.command == "classify") return classify(spec);
  if (spec.command == "verify-examples") return verify_examples(spec);
  if (spec.command == "anomalous") return anomalous(spec);
  if (spec.command == "density") return density(spec);
  if (spec.command == "census") return census(spec);
  if (spec.command == "lemmas") return lemmas(spec);
  if (spec.command == "trichotomy") return trichotomy(spec);
  throw ParseError("unknown command '" + spec.command + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return kIoError;
  if (dynamic_cast<const BadReduction*>(&e)) return kBadReduction;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidInput*>(&e) ||
      dynamic_cast<const std::invalid_argument*>(&e))
    return kParseError;
  if (dynamic_cast<const Unsupported*>(&e) || dynamic_cast<const UndefinedPredicate*>(&e) ||
      dynamic_cast<const NotComposite*>(&e) ||
      dynamic_cast<const FactorizationBudgetExceeded*>(&e))
    return kUnsupported;
  return kCheckFailed;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f << text;
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into " + path.string() + ": " + ec.message());
  }
}

int execute(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const CommandOutput r = run_command(spec);
    if (spec.out)
      write_atomically(*spec.out, r.text);
    else
      out << r.text << std::flush;
    return r.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int execute_batch(const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) {
    err << "error: cannot read batch file " << file.string() << "\n";
    return kIoError;
  }
  int worst = kOk;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int code;
    try {
      code = execute(parse_job_spec(line), out, err);
    } catch (const std::exception& e) {
      err << "error: line " << lineno << ": " << e.what() << "\n";
      code = exit_code_for(e);
    }
    if (code != kOk) err << "line " << lineno << ": exit " << code << "\n";
    worst = std::max(worst, code);
  }
  if (in.bad()) {
    err << "error: reading " << file.string() << " failed\n";
    return kIoError;
  }
  return worst;
}

}  // namespace ellcarm::cli
