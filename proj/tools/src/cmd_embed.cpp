#include "commands.hpp"
#include "densitylab/core/errors.hpp"
#include "densitylab/embedding/embed.hpp"

namespace dlab::cli {

namespace {

struct EmbedOpts {
  Common common;
  std::size_t stages = 2;
  std::size_t h = 0;
  std::size_t phi_limit = 4096;
  std::size_t sample = 1024;
};

struct Built {
  RandomTree target;
  TreeMeasure u = cantor_measure();
  StagePlan plan;
};

Built build(const EmbedOpts& o) {
  if (o.stages > 4) throw PreconditionError("--stages is limited to 4; level sizes grow quadratically");
  Built b{random_target_tree(o.common.seed)};
  b.plan = embed_init(b.u, b.target.w);
  for (std::size_t k = 0; k < o.stages; ++k) embed_stage(b.u, b.target.tree, b.target.w, b.plan);
  return b;
}

Json plan_json(const Built& b, std::uint64_t seed, std::size_t phi_limit) {
  const StagePlan& p = b.plan;
  Json L = Json::array(), M = Json::array(), delta = Json::array(), phi = Json::array(), omitted = Json::array();
  for (std::size_t k = 0; k < p.stages(); ++k) {
    L.push_back(p.L[k]);
    M.push_back(p.M[k]);
    delta.push_back(p.delta[k].str());
    Json map = Json::object();
    if (p.phi[k].size() <= phi_limit) {
      for (const auto& [s, t] : p.phi[k]) map[s.str()] = t.str();
    } else {
      omitted.push_back(k);
    }
    phi.push_back(map);
  }
  Json ledger = Json::array();
  for (std::size_t k = 0; k < p.stages(); ++k) {
    InvariantCheck inv = check_invariant(p, b.u, b.target.w, k);
    Json row{{"stage", k}, {"invariant", inv.ok ? "pass" : "fail"}};
    if (!inv.ok) row["at"] = inv.at.str();
    ledger.push_back(row);
  }
  return {{"seed", seed},
          {"target_root", b.target.w.root().str()},
          {"L", L},
          {"M", M},
          {"delta", delta},
          {"phi", phi},
          {"phi_omitted", omitted},
          {"ledger", ledger},
          {"monotone", check_monotone(p)}};
}

void stage(const EmbedOpts& o) {
  Built b = build(o);
  emit_json(o.common, plan_json(b, o.common.seed, o.phi_limit));
}

void verify(const EmbedOpts& o) {
  Built b = build(o);
  if (o.h + 1 >= b.plan.stages()) throw PreconditionError("--level must be below --stages - 1");
  Json rows = Json::array();
  bool all = true;
  for (std::size_t k = 0; k <= o.h; ++k) {
    std::vector<Word> words = binary_level(b.plan.L[k]);
    std::size_t checked = 0, held = 0;
    Rational width = Rational::pow2(static_cast<long>(b.plan.L[o.h]) + 1) * b.plan.delta[o.h + 1];
    bool widths = true;
    Json first_fail;
    for (const Word& s : words) {
      if (checked == o.sample) break;
      Sandwich sw = embed_verify(b.plan, b.u, b.target.w, s, o.h);
      ++checked;
      if (sw.holds) ++held;
      else if (first_fail.is_null())
        first_fail = {{"word", s.str()}, {"nu", sw.nu.str()}, {"mass", sw.mass.str()}, {"upper", sw.upper.str()}};
      widths = widths && sw.upper - sw.nu == width;
    }
    all = all && held == checked && widths;
    Json row{{"level", b.plan.L[k]}, {"checked", checked}, {"held", held}, {"width", width.str()}, {"width_exact", widths}};
    if (!first_fail.is_null()) row["first_failure"] = first_fail;
    rows.push_back(row);
  }
  bool invariant = true;
  for (std::size_t k = 0; k < b.plan.stages(); ++k) invariant = invariant && check_invariant(b.plan, b.u, b.target.w, k).ok;
  emit_json(o.common, {{"seed", o.common.seed},
                       {"h", o.h},
                       {"L", b.plan.L},
                       {"invariant", invariant ? "pass" : "fail"},
                       {"monotone", check_monotone(b.plan) ? "pass" : "fail"},
                       {"sandwich", rows},
                       {"status", all && invariant && check_monotone(b.plan) ? "pass" : "fail"}});
}

}  // namespace

void add_embed(CLI::App& app, Action& action) {
  auto* grp = app.add_subcommand("embed", "Measure-preserving embeddings of 2^omega into random target trees");
  grp->require_subcommand(1);
  auto o = std::make_shared<EmbedOpts>();

  auto* s = grp->add_subcommand("stage", "Build stages and print the plan with its invariant ledger");
  s->add_option("--stages", o->stages, "Number of stages after the initial one")->capture_default_str();
  s->add_option("--phi-limit", o->phi_limit, "Largest stage map printed in full")->capture_default_str();
  add_common(s, o->common, false, true);
  s->callback([o, &action] {
    action = [o] {
      if (o->common.format != "json") throw PreconditionError("embed stage emits JSON only");
      stage(*o);
    };
  });

  auto* v = grp->add_subcommand("verify", "Check the measure sandwich at the source levels up to h");
  v->add_option("--stages", o->stages, "Number of stages after the initial one")->capture_default_str();
  v->add_option("--level", o->h, "Transition whose blocks are used")->capture_default_str();
  v->add_option("--sample", o->sample, "Words checked per level")->capture_default_str();
  add_common(v, o->common, false, true);
  v->callback([o, &action] {
    action = [o] {
      if (o->common.format != "json") throw PreconditionError("embed verify emits JSON only");
      verify(*o);
    };
  });
}

}  // namespace dlab::cli
