#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "symapprox/pseudo_boolean.hpp"
#include "symapprox/weights.hpp"

namespace symapprox::cli {

/// Exit statuses.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kDomain = 2,
  kDegenerate = 3,
  kCheckFailed = 4,
};

/// Malformed command line or input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_request for --help; what() is the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kApproximate, kInfluence, kMoebius, kGame, kSignature, kReliability, kCheck };
enum class Format { kJson, kCsv };

/// A fully parsed invocation. Every referenced document has been read and
/// parsed by the time a request exists.
struct CommandRequest {
  Command command = Command::kApproximate;
  std::optional<nlohmann::json> input;
  nlohmann::json weights = {{"kind", "uniform"}};
  bool weights_given = false;
  std::optional<std::string> system;
  std::optional<std::string> output_path;
  std::optional<Format> format;
  double tol = kDefaultSymmetryTolerance;
  bool no_meta = false;

  std::optional<int> k;
  std::optional<int> degree;
  bool verify_kernel = false;
  std::optional<std::uint64_t> monte_carlo_trials;
  std::uint64_t seed = 0;
  std::string lifetimes = "exp:1";
  std::vector<double> t_grid{0.0, 0.5, 1.0, 1.5, 2.0};
};

/// Reads inline JSON (text starting with '{') or the file it names.
nlohmann::json load_document(const std::string& text_or_path);

/// Accepts {"n","values"}, {"n","sets"} or {"n","levels"} documents.
PseudoBooleanFunction function_from_json(const nlohmann::json& doc);
/// Accepts {"kind":"uniform"}, {"kind":"product","p":[...]},
/// {"kind":"explicit","raw":[...]}.
WeightDistribution weights_from_json(const nlohmann::json& doc, int n);

/// Throws InputError (or CLI11's own parse exceptions) on bad arguments.
CommandRequest parse_request(const std::vector<std::string>& args);

/// Executes a request, writing the report to `out` (or the output file) and
/// diagnostics to `err`. Returns one of ExitCode.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_request + run with error-to-exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symapprox::cli
