#pragma once

#include <CLI11.hpp>

#include "divcon/cli/run.hpp"

namespace divcon::cli {

struct Invocation {
  Request request;
  bool json = false;
};

// Adds one subcommand per verb; after parsing, `out` holds the selected request.
void add_verbs(CLI::App& app, Invocation& out);

}  // namespace divcon::cli
