#include <iostream>
#include <string>

#include "divcon/cli/args.hpp"

namespace {

using divcon::cli::Invocation;

int emit(const Invocation& inv, bool json) {
  const divcon::cli::Response r = divcon::cli::run(inv.request);
  if (json || inv.json) {
    std::cout << r.document.dump(json && !inv.json ? -1 : 2) << "\n";
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

int batch(bool json) {
  int worst = divcon::cli::kSuccess;
  std::string line;
  int number = 0;
  while (std::getline(std::cin, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
      continue;
    }
    Invocation inv;
    CLI::App app{"divcon request"};
    divcon::cli::add_verbs(app, inv);
    int code = divcon::cli::kSuccess;
    try {
      app.parse(line, false);
      code = emit(inv, json);
    } catch (const CLI::ParseError& e) {
      nlohmann::ordered_json doc;
      doc["command"] = nullptr;
      doc["input"] = line;
      doc["result"] = nullptr;
      doc["witnesses"] = nlohmann::ordered_json::array();
      doc["errors"] = {{{"code", "syntax"}, {"message", e.what()}, {"line", number}}};
      if (json) {
        std::cout << doc.dump() << "\n";
      } else {
        std::cout << "error [syntax]: line " << number << ": " << e.what() << "\n";
      }
      code = divcon::cli::kFailure;
    }
    if (code == divcon::cli::kFailure || worst == divcon::cli::kSuccess) worst = code;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisorial contractions to 3-fold singularities"};
  Invocation inv;
  divcon::cli::add_verbs(app, inv);
  bool batch_json = false;
  CLI::App* b = app.add_subcommand("batch", "read one request per line from standard input");
  b->add_flag("--json", batch_json, "one compact document per line");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : divcon::cli::kFailure;
  }
  if (b->parsed()) return batch(batch_json);
  return emit(inv, false);
}
