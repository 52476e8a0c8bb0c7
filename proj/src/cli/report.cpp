#include "qentropy/cli/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace qentropy::cli {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::file_not_found:
      return "file_not_found";
    case ErrorKind::parse_error:
      return "parse_error";
    case ErrorKind::validation_error:
      return "validation_error";
    case ErrorKind::numerical_failure:
      return "numerical_failure";
  }
  return "unknown";
}

bool ResultEntry::within() const {
  return !tolerance || (std::isfinite(value) && std::abs(value) <= *tolerance);
}

void RunReport::add_input(std::string key, std::string value) {
  inputs.emplace_back(std::move(key), std::move(value));
}

void RunReport::add_value(std::string name, double value) {
  results.push_back({std::move(name), value, std::nullopt, {}});
}

void RunReport::add_check(std::string name, double value, double tolerance,
                          std::vector<double> location) {
  results.push_back({std::move(name), value, tolerance, std::move(location)});
}

void RunReport::set_tolerance(const std::string& name, double value) {
  auto it = std::find_if(tolerances.begin(), tolerances.end(),
                         [&](const auto& t) { return t.first == name; });
  if (it == tolerances.end()) {
    tolerances.emplace_back(name, value);
  } else {
    it->second = value;
  }
}

void RunReport::finalize() {
  pass = !error && std::all_of(results.begin(), results.end(),
                               [](const ResultEntry& r) { return r.within(); });
}

ExitStatus RunReport::exit_status() const {
  if (error) {
    return *error == ErrorKind::numerical_failure ? ExitStatus::numerical_failure
                                                  : ExitStatus::input_error;
  }
  return pass ? ExitStatus::pass : ExitStatus::verification_failure;
}

std::string format_number(double v) {
  if (v == 0.0) {
    return "0";
  }
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  return fmt::format("{:.17g}", v);
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(ch));
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

// JSON has no nan/inf; those become strings.
std::string json_number(double v) {
  return std::isfinite(v) ? format_number(v) : json_string(format_number(v));
}

std::string render_structured(const RunReport& r) {
  std::string out = "{\n";
  out += "  \"command\": " + json_string(r.command) + ",\n";
  out += "  \"inputs\": {";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    out += (i == 0 ? "\n" : ",\n");
    out += "    " + json_string(r.inputs[i].first) + ": " + json_string(r.inputs[i].second);
  }
  out += r.inputs.empty() ? "},\n" : "\n  },\n";
  out += "  \"results\": [";
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& e = r.results[i];
    out += (i == 0 ? "\n" : ",\n");
    out += "    {\"name\": " + json_string(e.name) + ", \"value\": " + json_number(e.value);
    if (e.tolerance) {
      out += ", \"tolerance\": " + json_number(*e.tolerance);
      out += std::string(", \"within\": ") + (e.within() ? "true" : "false");
    }
    if (!e.location.empty()) {
      out += ", \"location\": [";
      for (std::size_t k = 0; k < e.location.size(); ++k) {
        out += (k == 0 ? "" : ", ") + json_number(e.location[k]);
      }
      out += "]";
    }
    out += "}";
  }
  out += r.results.empty() ? "],\n" : "\n  ],\n";
  out += "  \"tolerances\": {";
  for (std::size_t i = 0; i < r.tolerances.size(); ++i) {
    out += (i == 0 ? "\n" : ",\n");
    out += "    " + json_string(r.tolerances[i].first) + ": " + json_number(r.tolerances[i].second);
  }
  out += r.tolerances.empty() ? "},\n" : "\n  },\n";
  if (r.error) {
    out += "  \"error\": {\"kind\": " + json_string(to_string(*r.error)) +
           ", \"message\": " + json_string(r.error_message) + "},\n";
  }
  out += std::string("  \"pass\": ") + (r.pass ? "true" : "false") + "\n}\n";
  return out;
}

std::string render_text(const RunReport& r) {
  std::string out = "command: " + r.command + "\n";
  out += "inputs:\n";
  for (const auto& [k, v] : r.inputs) {
    out += "  " + k + ": " + v + "\n";
  }
  out += "results:\n";
  for (const auto& e : r.results) {
    out += "  - name: " + e.name + "\n";
    out += "    value: " + format_number(e.value) + "\n";
    if (e.tolerance) {
      out += "    tolerance: " + format_number(*e.tolerance) + "\n";
      out += std::string("    within: ") + (e.within() ? "true" : "false") + "\n";
    }
    if (!e.location.empty()) {
      out += "    location: [";
      for (std::size_t k = 0; k < e.location.size(); ++k) {
        out += (k == 0 ? "" : ", ") + format_number(e.location[k]);
      }
      out += "]\n";
    }
  }
  out += "tolerances:\n";
  for (const auto& [k, v] : r.tolerances) {
    out += "  " + k + ": " + format_number(v) + "\n";
  }
  if (r.error) {
    out += "error:\n  kind: " + to_string(*r.error) + "\n  message: " + r.error_message + "\n";
  }
  out += std::string("pass: ") + (r.pass ? "true" : "false") + "\n";
  return out;
}

}  // namespace

std::string render(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::structured ? render_structured(report) : render_text(report);
}

std::string render_table(const RunReport& r) {
  std::size_t width = 4;
  for (const auto& e : r.results) {
    width = std::max(width, e.name.size());
  }
  std::string out = fmt::format("{} ({})\n", r.command, r.pass ? "PASS" : "FAIL");
  for (const auto& e : r.results) {
    out += fmt::format("  {:<{}}  {:>24}", e.name, width, format_number(e.value));
    if (e.tolerance) {
      out += fmt::format("  <= {:<10}  {}", format_number(*e.tolerance), e.within() ? "ok" : "FAIL");
    }
    out += "\n";
  }
  if (r.error) {
    out += "  error (" + to_string(*r.error) + "): " + r.error_message + "\n";
  }
  return out;
}

}  // namespace qentropy::cli
