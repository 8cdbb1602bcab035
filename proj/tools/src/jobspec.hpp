#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "ellcarm/ecpoint.hpp"

namespace ellcarm::cli {

// text is the human-readable table used by verify-examples.
enum class OutputFormat { json, csv, text };

// One unit of CLI work; a batch file holds one of these per line as JSON.
struct JobSpec {
  std::string command;
  std::optional<std::string> curve;
  std::optional<mpz_class> N;
  std::optional<AffinePoint> point;
  std::optional<long> d;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> max;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  bool products = false;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::json;

  bool operator==(const JobSpec&) const = default;
};

// Throws ParseError naming the offending field.
JobSpec parse_job_spec(const std::string& json_line);
std::string to_json(const JobSpec& spec);

OutputFormat parse_format(const std::string& text);
const char* to_string(OutputFormat f);

}  // namespace ellcarm::cli
