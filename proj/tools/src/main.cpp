#include <iostream>

#include "commands.hpp"
#include "densitylab/core/errors.hpp"

namespace {

int report(const char* kind, const std::string& message, int code) {
  dlab::cli::Json j{{"error", kind}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dlab::cli;
  CLI::App app{"Exact experiments with density points, cylinder sets and measure algebras"};
  app.name("density-lab");
  app.require_subcommand(1);
  Action action;
  int status = 0;
  add_spongy(app, action);
  add_density(app, action);
  add_embed(app, action);
  add_reduce(app, action);
  add_cantor(app, action);
  add_check(app, action, status);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report("parse", e.what(), 2);
  }
  try {
    if (action) action();
  } catch (const dlab::ParseError& e) {
    return report("parse", e.what(), 2);
  } catch (const dlab::PreconditionError& e) {
    return report("precondition", e.what(), 1);
  } catch (const dlab::CertificationError& e) {
    return report("certification", e.what(), 1);
  }
  return status;
}
