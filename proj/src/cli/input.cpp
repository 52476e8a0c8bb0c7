#include "qentropy/cli/input.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "qentropy/errors.hpp"

namespace qentropy::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_lines(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    // from_chars rejects a leading '+'
    if (line.front() == '+') {
      line.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw InputError(ErrorKind::parse_error,
                       "line " + std::to_string(line_no) + ": not a number: '" + std::string(line) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(ErrorKind::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("probs") || !doc["probs"].is_array()) {
    throw InputError(ErrorKind::parse_error, "expected an object with a \"probs\" array");
  }
  std::vector<double> out;
  for (const auto& item : doc["probs"]) {
    if (!item.is_number()) {
      throw InputError(ErrorKind::parse_error, "\"probs\" entries must be numbers");
    }
    out.push_back(item.get<double>());
  }
  return out;
}

}  // namespace

ProbabilityDistribution parse_distribution(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = first != std::string_view::npos && text[first] == '{';
  const std::vector<double> raw = json ? parse_json(text) : parse_lines(text);
  try {
    return make_distribution(raw);
  } catch (const ValidationError& e) {
    throw InputError(ErrorKind::validation_error, e.what());
  } catch (const DomainError& e) {
    throw InputError(ErrorKind::validation_error, e.what());
  }
}

ProbabilityDistribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(ErrorKind::file_not_found, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_distribution(buf.str());
}

}  // namespace qentropy::cli
