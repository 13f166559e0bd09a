#include "commands.hpp"
#include "densitylab/core/errors.hpp"
#include "densitylab/spongy/spongy.hpp"

namespace dlab::cli {

void add_common(CLI::App* sub, Common& c, bool depth, bool seed) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "Write to this file instead of stdout");
  if (depth) sub->add_option("--depth", c.depth, "Depth")->capture_default_str();
  if (seed) sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

namespace {

struct SpongyOpts {
  Common common;
  std::string M = "2/1";
  std::string eps = "1/12";
  std::string x = "0/1";
  std::size_t cap = 48;

  TriadicConfig config() const {
    TriadicConfig cfg{parse_rational("--M", M), parse_rational("--eps", eps)};
    cfg.validate();
    return cfg;
  }
};

void add_params(CLI::App* sub, SpongyOpts& o) {
  sub->add_option("--M", o.M, "Spacing parameter M > 1")->capture_default_str();
  sub->add_option("--eps", o.eps, "Scale parameter eps")->capture_default_str();
}

void build(const SpongyOpts& o) {
  check_depth(o.common.depth);
  TriadicConfig cfg = o.config();
  auto nodes = build_level(cfg, o.common.depth);
  if (o.common.format == "csv") {
    Csv csv({"word", "a", "b", "measure"}, {"a", "b", "measure"});
    for (const auto& n : nodes) csv.row({n.s.str(), n.a.str(), n.b.str(), spongy_measure(cfg, n.s).str()});
    emit(o.common, csv.str());
    return;
  }
  Json arr = Json::array();
  for (const auto& n : nodes)
    arr.push_back({{"word", n.s.str()}, {"a", n.a.str()}, {"b", n.b.str()}, {"measure", spongy_measure(cfg, n.s).str()}});
  emit_json(o.common, {{"M", cfg.M.str()},
                       {"eps", cfg.eps.str()},
                       {"depth", o.common.depth},
                       {"measure", spongy_measure(cfg, Word(Alphabet::Triadic)).str()},
                       {"nodes", arr}});
}

void scan(const SpongyOpts& o) {
  check_depth(o.common.depth);
  TriadicConfig cfg = o.config();
  Rational x = parse_rational("--x", o.x);
  Csv csv({"scale", "lo", "hi", "side"}, {"scale", "lo", "hi"});
  Json arr = Json::array();
  Rational r = cfg.eps;
  for (std::size_t n = 1; n <= o.common.depth; ++n, r *= cfg.eps) {
    MeasureBounds m = spongy_window(cfg, x - r, x + r, o.cap).scale(Rational(1) / (Rational(2) * r));
    csv.row({r.str(), m.lo().str(), m.hi().str(), "both"});
    arr.push_back({{"scale", r.str()}, {"lo", m.lo().str()}, {"hi", m.hi().str()}, {"side", "both"}});
  }
  if (o.common.format == "csv")
    emit(o.common, csv.str());
  else
    emit_json(o.common, {{"M", cfg.M.str()}, {"eps", cfg.eps.str()}, {"x", x.str()}, {"windows", arr}});
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

void verify(const SpongyOpts& o) {
  check_depth(o.common.depth);
  TriadicConfig cfg = o.config();
  Rational f = spongy_f(cfg);
  Rational half_inv = Rational(1) / (Rational(2) * cfg.M);
  GChain top = g_values(cfg, Word(Alphabet::Triadic));
  std::size_t nodes = 0;
  std::string first_bad;
  for (std::size_t n = 0; n <= o.common.depth; ++n)
    for (const auto& node : build_level(cfg, n)) {
      ++nodes;
      GChain g = g_values(cfg, node.s);
      if (!g.holds && first_bad.empty()) first_bad = node.s.str();
    }
  auto flank = disjointness_failure(cfg, o.common.depth);
  Json checks = Json::array();
  auto add = [&checks](const std::string& name, bool ok) { checks.push_back({{"name", name}, {"status", verdict(ok)}}); };
  add("f > 1/(2M)", f > half_inv);
  add("g_bs > 1/(M(M+1))", top.g_bs > top.inv_mm1);
  add("g_as1_upper < (M-1)/(2M^3+3M^2-2M-1)", top.g_as1_upper < top.bound);
  add("(M-1)/(2M^3+3M^2-2M-1) < 1/(M(M+1))", top.bound < top.inv_mm1);
  add("chain at every node", first_bad.empty());
  add("flanks clear of the stage", !flank.has_value());
  bool all = true;
  for (const auto& c : checks) all = all && c["status"] == "pass";
  Json out{{"M", cfg.M.str()},
           {"eps", cfg.eps.str()},
           {"depth", o.common.depth},
           {"nodes", nodes},
           {"f", f.str()},
           {"one_over_2M", half_inv.str()},
           {"g_bs", top.g_bs.str()},
           {"g_as1_upper", top.g_as1_upper.str()},
           {"bound", top.bound.str()},
           {"one_over_M_M1", top.inv_mm1.str()},
           {"checks", checks},
           {"status", verdict(all)}};
  if (!first_bad.empty()) out["first_failing_node"] = first_bad;
  if (flank) out["first_flank_failure"] = flank->str();
  emit_json(o.common, out);
}

}  // namespace

void add_spongy(CLI::App& app, Action& action) {
  auto* grp = app.add_subcommand("spongy", "Triadic spongy sets in [0, 1]");
  grp->require_subcommand(1);
  auto o = std::make_shared<SpongyOpts>();

  auto* b = grp->add_subcommand("build", "Intervals K_s of one level with lambda(K in K_s)");
  o->common.depth = 3;
  add_params(b, *o);
  add_common(b, o->common, true);
  b->callback([o, &action] { action = [o] { build(*o); }; });

  auto* s = grp->add_subcommand("scan", "Window density enclosures at x for radii eps^n");
  add_params(s, *o);
  s->add_option("--x", o->x, "Centre")->capture_default_str();
  s->add_option("--cap", o->cap, "Recursion level cap for window enclosures")->capture_default_str();
  add_common(s, o->common, true);
  s->callback([o, &action] { action = [o] { scan(*o); }; });

  auto* v = grp->add_subcommand("verify", "Check the oscillation inequality chain at every node");
  add_params(v, *o);
  add_common(v, o->common, true);
  v->callback([o, &action] {
    action = [o] {
      if (o->common.format != "json") throw PreconditionError("spongy verify emits JSON only");
      verify(*o);
    };
  });
}

}  // namespace dlab::cli
