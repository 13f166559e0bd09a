#include "commands.hpp"
#include "densitylab/cantor/density.hpp"
#include "densitylab/cantor/thin.hpp"
#include "densitylab/core/errors.hpp"
#include "densitylab/realline/examples.hpp"

namespace dlab::cli {

namespace {

struct CantorOpts {
  Common common;
  std::size_t stages = 6;
  std::string t;
  std::string eps;
  std::string eps0 = "1/2";
  std::string rho = "1/4";
};

Json bounds_json(const MeasureBounds& m) { return {{"lo", m.lo().str()}, {"hi", m.hi().str()}}; }

void thick(const CantorOpts& o) {
  check_depth(o.common.depth);
  check_depth(o.stages, "--stages");
  if (o.common.format != "json") throw PreconditionError("cantor thick emits JSON only");
  ThickCothick tc = thick_cothick_sigma(cantor_measure(), o.stages);
  ThicknessCertificate cert = thickness_certificate(tc.set, CylinderSet::full(), o.common.depth);
  Json pieces = Json::array();
  for (const auto& p : tc.pieces)
    pieces.push_back({{"basis", p.basis.str()}, {"tilde", p.tilde.str()}, {"home", p.home.str()}, {"eps", p.eps.str()}});
  Json out{{"stages", o.stages},
           {"depth", o.common.depth},
           {"thick", to_string(cert.thick)},
           {"cothick", to_string(cert.cothick)},
           {"checked", cert.checked},
           {"measure", bounds_json(tc.set.measure_bounds(o.common.depth))},
           {"pieces", pieces}};
  if (!cert.thick_failures.empty()) out["first_thick_failure"] = cert.thick_failures.front().str();
  if (!cert.cothick_failures.empty()) out["first_cothick_failure"] = cert.cothick_failures.front().str();
  emit_json(o.common, out);
}

void compact_thin_cmd(const CantorOpts& o) {
  check_depth(o.common.depth);
  if (o.common.format != "json") throw PreconditionError("cantor compact-thin emits JSON only");
  Word t = Word::parse(Alphabet::Binary, o.t);
  Rational eps = parse_rational("--eps", o.eps);
  ApproxSet k = compact_thin(t, eps);
  Json stage = cylinder_to_json(k.stage(o.common.depth));
  stage["tail_bound"] = k.tail(o.common.depth).str();
  emit_json(o.common, {{"t", t.str()},
                       {"eps", eps.str()},
                       {"depth", o.common.depth},
                       {"stage", stage},
                       {"measure", bounds_json(k.measure_bounds(o.common.depth))}});
}

void fat(const CantorOpts& o) {
  check_depth(o.common.depth);
  FatCantorSchedule sched{parse_rational("--eps0", o.eps0), parse_rational("--rho", o.rho)};
  FatCantor fc = fat_cantor(sched, o.common.depth);
  std::vector<Word> words = binary_words_upto(o.common.depth);
  if (o.common.format == "csv") {
    Csv csv({"word", "lo", "hi", "measure"}, {"lo", "hi", "measure"});
    for (const Word& s : words) {
      const Interval& u = fc.nodes.at(s);
      csv.row({s.str(), u.lo.str(), u.hi.str(), fat_cantor_measure_in(sched, s).str()});
    }
    emit(o.common, csv.str());
    return;
  }
  Json nodes = Json::array();
  for (const Word& s : words) {
    const Interval& u = fc.nodes.at(s);
    nodes.push_back({{"word", s.str()}, {"lo", u.lo.str()}, {"hi", u.hi.str()}, {"measure", fat_cantor_measure_in(sched, s).str()}});
  }
  emit_json(o.common, {{"eps0", sched.eps0.str()},
                       {"rho", sched.rho.str()},
                       {"depth", o.common.depth},
                       {"stage", interval_set_to_json(fc.stage)},
                       {"nodes", nodes}});
}

}  // namespace

void add_cantor(CLI::App& app, Action& action) {
  auto* grp = app.add_subcommand("cantor", "Thin compacts, thick sets and fat Cantor sets");
  grp->require_subcommand(1);

  auto o = std::make_shared<CantorOpts>();
  o->common.depth = 6;
  auto* t = grp->add_subcommand("thick", "A union of thin compacts certified thick and co-thick everywhere");
  t->add_option("--stages", o->stages, "Basic open sets served (lengths up to this)")->capture_default_str();
  add_common(t, o->common, true);
  t->callback([o, &action] { action = [o] { thick(*o); }; });

  o = std::make_shared<CantorOpts>();
  o->common.depth = 6;
  auto* c = grp->add_subcommand("compact-thin", "A compact set with empty interior inside N_t");
  c->add_option("--t", o->t, "Binary word t")->required();
  c->add_option("--eps", o->eps, "Measure defect, 0 < eps < 2^-|t|")->required();
  add_common(c, o->common, true);
  c->callback([o, &action] { action = [o] { compact_thin_cmd(*o); }; });

  o = std::make_shared<CantorOpts>();
  o->common.depth = 4;
  o->common.format = "csv";
  auto* f = grp->add_subcommand("fat-cantor", "Nodes U_s of a fat Cantor set with lambda(K in U_s)");
  f->add_option("--eps0", o->eps0, "First removal length")->capture_default_str();
  f->add_option("--rho", o->rho, "Ratio of successive removal lengths")->capture_default_str();
  add_common(f, o->common, true);
  f->callback([o, &action] { action = [o] { fat(*o); }; });
}

}  // namespace dlab::cli
