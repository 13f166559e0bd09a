#pragma once

#include <functional>
#include <memory>

#include "CLI11.hpp"
#include "io.hpp"

namespace dlab::cli {

// The command selected on the command line; set by the parse callbacks.
using Action = std::function<void()>;

// Adds --format, --out and, when wanted, --depth and --seed to a leaf command.
void add_common(CLI::App* sub, Common& c, bool depth, bool seed = false);

void add_spongy(CLI::App& app, Action& action);
void add_density(CLI::App& app, Action& action);
void add_embed(CLI::App& app, Action& action);
void add_reduce(CLI::App& app, Action& action);
void add_cantor(CLI::App& app, Action& action);
void add_check(CLI::App& app, Action& action, int& status);

}  // namespace dlab::cli
