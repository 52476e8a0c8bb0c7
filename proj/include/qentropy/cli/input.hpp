#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qentropy/cli/report.hpp"
#include "qentropy/distributions.hpp"

namespace qentropy::cli {

class InputError : public std::runtime_error {
public:
  InputError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Either one probability per line ('#' starts a comment line) or a JSON
/// object {"probs": [...]}; a leading '{' selects JSON.
/// Throws InputError with kind parse_error or validation_error.
ProbabilityDistribution parse_distribution(std::string_view text);

/// Throws InputError(file_not_found) if the file cannot be opened.
ProbabilityDistribution load_distribution(const std::filesystem::path& path);

}  // namespace qentropy::cli
