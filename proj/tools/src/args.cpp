#include "divcon/cli/args.hpp"

#include <utility>

namespace divcon::cli {

namespace {

const char* describe(const std::string& verb) {
  if (verb == "classify") return "ADE type, Milnor number and compound A index";
  if (verb == "enumerate") return "divisorial contractions to the germ";
  if (verb == "member") return "whether a weighted blowup is one of the classified contractions";
  if (verb == "normalize") return "weighted or simple normal form with its witness";
  if (verb == "blowup") return "charts, strict transforms and discrepancy";
  if (verb == "count") return "number of contractions up to equivalence";
  return "automorphism fixing a class representative";
}

}  // namespace

void add_verbs(CLI::App& app, Invocation& out) {
  app.require_subcommand(1);
  for (const auto& verb : commands()) {
    CLI::App* sub = app.add_subcommand(verb, describe(verb));
    sub->add_option("polynomial", out.request.polynomial_text, "germ, e.g. \"x*y + z^2 + t^3\"");
    sub->add_option_function<std::string>(
        "-w,--weights", [&out](const std::string& v) { out.request.weights_text = v; },
        "comma-separated weights matched to the variables");
    sub->add_flag("--json", out.json, "print the structured document");
    const std::pair<const char*, const char*> extras[] = {
        {"jet-order", "truncation degree for normal forms"},
        {"max-a", "largest a searched by enumerate and count"},
        {"param", "comma-separated family parameters for witness"},
        {"vars", "comma-separated variable names"},
    };
    for (const auto& [flag, help] : extras) {
      const std::string name = flag;
      sub->add_option_function<std::string>(
          "--" + name, [&out, name](const std::string& v) { out.request.options[name] = v; }, help);
    }
    sub->add_flag_callback("--smooth", [&out] { out.request.options["smooth"] = ""; },
                           "the smooth germ (A^3, 0) instead of a polynomial");
    sub->callback([&out, verb] { out.request.command = verb; });
  }
}

}  // namespace divcon::cli
