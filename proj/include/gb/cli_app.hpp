#ifndef GB_CLI_APP_HPP
#define GB_CLI_APP_HPP

#include <functional>
#include <string>
#include <vector>

#include "gb/oracle.hpp"
#include "gb/presets.hpp"

namespace gb {

/// Outcome of one CLI invocation; main() just prints and forwards the code.
/// Exit codes: 0 success, 1 verification mismatch, 2 bad input.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

/// Classifier-versus-oracle comparison behind the `verify` subcommand. The
/// tamper hook mutates the classifier output before the comparison; it exists
/// for negative-control tests and is never wired to the CLI.
struct VerifyOutcome {
  bool agree = false;
  size_t classifier_count = 0;
  size_t oracle_count = 0;
  std::string report;
};

VerifyOutcome run_verify(
    const GradingBundle& bundle, unsigned k, Execution exec,
    const std::function<void(std::vector<Antichain>&)>& tamper = nullptr);

/// JSON emitted by `classify`; parse helper provided so round trips can be
/// checked without string comparisons.
std::string classify_output_json(const GradingBundle& bundle, unsigned k,
                                 const std::vector<Antichain>& antichains);
struct ParsedClassifyOutput {
  unsigned k = 0;
  size_t count = 0;
  std::vector<GradedWeight> sigma_plus;
  std::vector<std::vector<GradedWeight>> antichains;
};
ParsedClassifyOutput parse_classify_output(const std::string& json_text);

}  // namespace gb

#endif
