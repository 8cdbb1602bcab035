#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace ellcarm;
using namespace ellcarm::cli;

namespace {

struct RawFlags {
  std::string curve, n, point, out, format = "json";
  long d = 0;
  std::uint64_t p = 0, max = 0, m = 0, trials = 0, seed = 1;
  bool products = false;
};

void add_output(CLI::App* sub, RawFlags& f) {
  sub->add_option("--out", f.out, "Write output to this file (atomically)");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

JobSpec to_spec(const std::string& command, const CLI::App& sub, const RawFlags& f) {
  JobSpec s;
  s.command = command;
  auto given = [&](const char* name) {
    return sub.get_option_no_throw(name) && sub.get_option(name)->count() > 0;
  };
  if (given("--curve")) {
    s.curve = f.curve;
    parse_curve(f.curve);
  }
  if (given("--n")) s.N = parse_integer(f.n);
  if (given("--point")) s.point = parse_point(f.point);
  if (given("--d")) s.d = f.d;
  if (given("--p")) s.p = f.p;
  if (given("--max")) s.max = f.max;
  if (given("--m")) s.m = f.m;
  if (given("--trials")) s.trials = f.trials;
  if (given("--seed")) s.seed = f.seed;
  if (given("--out")) s.out = f.out;
  s.products = f.products;
  if (given("--format"))
    s.format = parse_format(f.format);
  else if (command == "verify-examples")
    s.format = OutputFormat::text;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic pseudoprimes, Carmichael and Korselt numbers"};
  app.require_subcommand(1);
  RawFlags f;
  std::string batch_file;

  auto* classify = app.add_subcommand("classify", "Classify (N, E, P) against every predicate");
  classify->add_option("--curve", f.curve, "[A,B] or [a1,a2,a3,a4,a6]")->required();
  classify->add_option("--n", f.n, "Modulus N")->required();
  classify->add_option("--point", f.point, "Point x,y");
  classify->add_option("--d", f.d, "CM field Q(sqrt(-d)) for the Gordon test")
      ->check(CLI::PositiveNumber);
  add_output(classify, f);

  auto* verify = app.add_subcommand("verify-examples", "Recheck every worked example");
  add_output(verify, f);

  auto* anomalous = app.add_subcommand("anomalous", "Anomalous primes of E, or Type I products");
  anomalous->add_option("--curve", f.curve)->required();
  anomalous->add_option("--max", f.max, "Upper bound on primes")->required();
  anomalous->add_flag("--products", f.products, "Emit Korselt Type I products pq with p < q <= max");
  add_output(anomalous, f);

  auto* density = app.add_subcommand("density", "Monte Carlo density of anomalous products");
  density->add_option("--m", f.m, "Prime bound M")->required();
  density->add_option("--trials", f.trials, "Number of draws");
  density->add_option("--seed", f.seed, "RNG seed");
  add_output(density, f);

  auto* census = app.add_subcommand("census", "Trace census against Hurwitz class numbers");
  census->add_option("--p", f.p, "Single prime");
  census->add_option("--max", f.max, "All primes 5..max");
  add_output(census, f);

  auto* lemmas = app.add_subcommand("lemmas", "Exhaustive divisibility lemma scan");
  lemmas->add_option("--max", f.max, "q_max (<= 500)");
  add_output(lemmas, f);

  auto* trichotomy = app.add_subcommand("trichotomy", "Check the Type I product trichotomy");
  trichotomy->add_option("--curve", f.curve)->required();
  trichotomy->add_option("--max", f.max, "Prime bound M (<= 10000)");
  add_output(trichotomy, f);

  auto* batch = app.add_subcommand("batch", "Run one JSON job spec per line");
  batch->add_option("file", batch_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  if (batch->parsed()) return execute_batch(batch_file, std::cout, std::cerr);

  for (CLI::App* sub : app.get_subcommands()) {
    try {
      const JobSpec spec = to_spec(sub->get_name(), *sub, f);
      return execute(spec, std::cout, std::cerr);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code_for(e);
    }
  }
  return kParseError;
}
