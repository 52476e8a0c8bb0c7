#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qentropy::cli {

enum class ExitStatus : int {
  pass = 0,
  verification_failure = 1,
  input_error = 2,
  numerical_failure = 3,
};

enum class ErrorKind { file_not_found, parse_error, validation_error, numerical_failure };

std::string to_string(ErrorKind kind);

/// One named number in a report. Entries with a tolerance are checks;
/// the rest are informational.
struct ResultEntry {
  std::string name;
  double value = 0.0;
  std::optional<double> tolerance;
  std::vector<double> location;  // e.g. the (x, y) attaining a sup

  bool within() const;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ResultEntry> results;
  std::vector<std::pair<std::string, double>> tolerances;
  std::optional<ErrorKind> error;
  std::string error_message;
  bool pass = false;

  void add_input(std::string key, std::string value);
  void add_value(std::string name, double value);
  void add_check(std::string name, double value, double tolerance, std::vector<double> location = {});
  void set_tolerance(const std::string& name, double value);

  /// pass = no error and every check within tolerance.
  void finalize();
  ExitStatus exit_status() const;
};

enum class ReportFormat { text, structured };

/// Fixed field order and 17-significant-digit numbers, so equal reports
/// render to equal bytes.
std::string render(const RunReport& report, ReportFormat format);

/// Column-aligned summary for a terminal.
std::string render_table(const RunReport& report);

/// "%.17g", with nan/inf spelled out.
std::string format_number(double v);

}  // namespace qentropy::cli
