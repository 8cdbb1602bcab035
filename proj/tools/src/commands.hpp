#pragma once

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ellcarm/errors.hpp"
#include "jobspec.hpp"

namespace ellcarm::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kBadReduction = 3,
  kUnsupported = 4,
  kIoError = 5,
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct CommandOutput {
  int exit_code = kOk;
  std::string text;
};

// Runs one job and returns its rendered output; library errors propagate.
CommandOutput run_command(const JobSpec& spec);

int exit_code_for(const std::exception& e);

// Writes to a sibling temp file, then renames over the target. Throws IoError.
void write_atomically(const std::filesystem::path& path, const std::string& text);

// Runs the job, routes output to spec.out or `out`, reports errors on `err`.
int execute(const JobSpec& spec, std::ostream& out, std::ostream& err);

// One JobSpec JSON per line; blank lines are skipped. Returns the largest exit code seen.
int execute_batch(const std::filesystem::path& file, std::ostream& out, std::ostream& err);

struct GoldenCheck {
  std::string name;
  bool expect_claim_false = false;  // the statement is a known misprint and must not hold
  bool claim_holds = false;
  std::string detail;

  bool passed() const { return claim_holds != expect_claim_false; }
};

std::vector<GoldenCheck> golden_checks();

}  // namespace ellcarm::cli
