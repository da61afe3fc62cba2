#ifndef DEFBOSE_CLI_HPP
#define DEFBOSE_CLI_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "defbose/exact/rational.hpp"
#include "defbose/structfn.hpp"
#include "defbose/thermo.hpp"

namespace defbose::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBackend = 3;

enum class OutputFormat { Csv, Json, Pretty };

OutputFormat parse_format(std::string_view text);

// --sweep <param>=<start>:<stop>:<step>, all rationals, stop inclusive.
struct SweepRange {
  std::string param;  // mu | q | t
  Rational start;
  Rational stop;
  Rational step;

  static SweepRange parse(std::string_view text);
  std::vector<Rational> values() const;
};

struct JobSpec {
  std::string subcommand;
  std::optional<std::string> sf;
  int order = 8;
  Backend backend;
  OutputFormat format = OutputFormat::Csv;
  std::vector<SweepRange> sweeps;
  std::optional<std::string> out;
  std::string which = "all";  // series: particle | pressure | fugacity | all
  int mu_order = 1;           // hamiltonian: mu order of the two-parameter split
  unsigned threads = 0;       // sweep workers; 0 = hardware concurrency
};

// Replaces the swept parameters of `base` (or builds the matching variant
// when there is no base descriptor).
StructureFunction with_parameters(const std::optional<StructureFunction>& base,
                                  const std::map<std::string, Rational>& params);

// Subcommand bodies; each writes its whole output to `out`.
void cmd_virial(const JobSpec& job, std::ostream& out);
void cmd_series(const JobSpec& job, std::ostream& out);
void cmd_eps_expand(const JobSpec& job, std::ostream& out);
void cmd_hamiltonian(const JobSpec& job, std::ostream& out);
void cmd_sweep(const JobSpec& job, std::ostream& out);

enum class CheckStatus { Pass, Discrepancy, Fail };

struct CheckResult {
  std::string name;
  bool expect_discrepancy;  // a catalogued misprint
  CheckStatus status;
  std::string detail;
};

std::vector<CheckResult> run_published_checks();
// Writes one line per check plus a summary; returns the process exit code.
int cmd_check_paper(const JobSpec& job, std::ostream& out);

// Full command-line entry point (argv[0] excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace defbose::cli

#endif  // DEFBOSE_CLI_HPP
