#include <algorithm>
#include <chrono>

#include "checks.hpp"
#include "commands.hpp"
#include "densitylab/core/errors.hpp"

namespace dlab::cli {

namespace {

struct CheckOpts {
  Common common;
  std::vector<int> only;
};

int run_all(const CheckOpts& o) {
  if (o.common.format != "json") throw PreconditionError("check all emits JSON only");
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : checks::criteria()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), c.id) == o.only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    checks::Result r = c.run(o.common.seed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = r.pass && secs < c.budget_seconds;
    all = all && pass;
    rows.push_back({{"id", c.id}, {"name", c.name}, {"status", pass ? "pass" : "fail"}, {"detail", r.detail}});
  }
  emit_json(o.common, {{"seed", o.common.seed}, {"checks", rows}, {"status", all ? "pass" : "fail"}});
  return all ? 0 : 3;
}

}  // namespace

void add_check(CLI::App& app, Action& action, int& status) {
  auto* grp = app.add_subcommand("check", "Invariant suites");
  grp->require_subcommand(1);
  auto o = std::make_shared<CheckOpts>();
  auto* a = grp->add_subcommand("all", "Run every invariant check; exit status 3 if one fails");
  a->add_option("--only", o->only, "Restrict to these check ids");
  add_common(a, o->common, false, true);
  a->callback([o, &action, &status] { action = [o, &status] { status = run_all(*o); }; });
}

}  // namespace dlab::cli
