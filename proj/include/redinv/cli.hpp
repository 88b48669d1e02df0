#ifndef REDINV_CLI_HPP
#define REDINV_CLI_HPP

#include <string>
#include <vector>

namespace redinv {

/// The `redinv` command: parses `args` (program name excluded), runs one
/// subcommand, writes the report to standard output, and returns the
/// process exit status:
///
///   0  success / verdict pass (and --help)
///   1  verdict fail (a checked identity failed, or cm-check said not_cm)
///   2  usage, ring-file, or expression error
///   3  computational error (caps exceeded, unsupported input, cm-check
///      inconclusive)
///
/// Subcommands: length, invariants, reduce, verify serre|vv|theorem1|koszul,
/// example huckaba, scan question, cm-check. Common flags: --ring, --ideal,
/// --samples, --seed, --rcap, --ncap, --json.
int run_command(const std::vector<std::string>& args);

}  // namespace redinv

#endif
