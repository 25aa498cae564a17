#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace divcon::cli {

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> verbs{"classify", "enumerate", "member", "normalize",
                                              "blowup",   "count",     "witness"};
  return verbs;
}

struct Request {
  std::string command;
  std::string polynomial_text;
  std::optional<std::string> weights_text;
  // Flags without the leading dashes: jet-order, max-a, param, vars, smooth.
  std::map<std::string, std::string> options;
};

enum ExitCode { kSuccess = 0, kFailure = 1, kRejected = 2 };

struct Response {
  nlohmann::ordered_json document;
  std::string text;
  int exit_code = kSuccess;
};

// Document fields: command, input, result, witnesses, errors.
Response run(const Request& request);

}  // namespace divcon::cli
