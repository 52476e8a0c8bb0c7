#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qentropy/cli/report.hpp"
#include "qentropy/entropies.hpp"
#include "qentropy/funceq.hpp"

namespace qentropy::cli {

/// Deformation parameters as given on the command line; which ones are
/// required depends on the command.
struct ParamFlags {
  std::optional<double> q;
  std::optional<double> alpha;
  std::optional<double> beta;
};

struct EntropyOptions {
  std::filesystem::path file;
  std::string family = "shannon";
  ParamFlags params;
  double tol = 1e-12;  // relative gap between the three Tsallis forms
};

enum class Candidate { closed_form, zero, one_minus_x, x_one_minus_x, x_squared };

Candidate parse_candidate(const std::string& name);
std::string to_string(Candidate candidate);

struct VerifyOptions {
  std::string equation = "thm2";
  ParamFlags params;
  double c = 1.0;
  GridSpec grid;
  double tol = 1e-11;
  Candidate candidate = Candidate::closed_form;
  double perturb = 0.0;  // adds perturb * (1 - x) to the candidate
};

struct CharacterizeOptions {
  ParamFlags params;
  double c = 1.0;
  GridSpec grid{0.01, 1.0, 256, GridSpacing::geometric};
  double tol = 1e-6;
};

struct IdentitiesOptions {
  std::optional<std::filesystem::path> file_p;
  std::optional<std::filesystem::path> file_q;
  std::vector<double> qs{0.5, 2.0};
  std::uint64_t seed = 0;
  std::size_t pairs = 0;  // > 0 selects a random corpus instead of files
  double tol = 1e-10;
};

// Each command catches its own failures and records them in the report,
// so a report is always produced.
RunReport cmd_entropy(const EntropyOptions& opts);
RunReport cmd_verify(const VerifyOptions& opts);
RunReport cmd_characterize(const CharacterizeOptions& opts);
RunReport cmd_identities(const IdentitiesOptions& opts);

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qentropy::cli
