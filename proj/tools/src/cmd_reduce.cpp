#include "commands.hpp"
#include "densitylab/core/errors.hpp"
#include "densitylab/reductions/compact.hpp"
#include "densitylab/reductions/sharp.hpp"

namespace dlab::cli {

namespace {

struct ReduceOpts {
  Common common;
  std::string r = "3/8";
  std::string matrix;
  std::size_t enclosure = 2;
  std::size_t max_pieces = 256;
};

void sharp(const ReduceOpts& o) {
  check_depth(o.common.depth);
  check_depth(o.enclosure, "--enclosure");
  if (o.common.depth < 1) throw PreconditionError("--depth must be at least 1");
  SharpK k(parse_rational("--r", o.r));
  MatrixCode z = matrix_from_arg(o.matrix);
  auto rows = sharp_trajectory(k, z, o.common.depth, o.enclosure);
  if (o.common.format == "csv") {
    Csv csv({"stage", "tilde_length", "rho", "lo", "hi", "certified"}, {"lo", "hi"});
    for (const auto& row : rows) {
      const SharpPath& p = row.path;
      csv.row({std::to_string(row.stage), std::to_string(p.node.tilde.size()), p.point.rho.str(), p.point.bounds.lo().str(),
               p.point.bounds.hi().str(), p.certified ? "yes" : "no"});
    }
    emit(o.common, csv.str());
    return;
  }
  Json arr = Json::array();
  for (const auto& row : rows) {
    const SharpPath& p = row.path;
    arr.push_back({{"stage", row.stage},
                   {"sigma", p.node.str()},
                   {"tilde_length", p.node.tilde.size()},
                   {"gamma", p.gamma},
                   {"rho", p.point.rho.str()},
                   {"lo", p.point.bounds.lo().str()},
                   {"hi", p.point.bounds.hi().str()},
                   {"intermediate_nodes", p.steps.size()},
                   {"certified", p.certified}});
  }
  emit_json(o.common, {{"r", k.r().str()}, {"p3", p3_membership(z)}, {"trajectory", arr}});
}

void compact(const ReduceOpts& o) {
  check_depth(o.common.depth);
  if (o.common.format != "json") throw PreconditionError("reduce compact emits JSON only");
  MatrixCode z = matrix_from_arg(o.matrix);
  CompactReduction red = compactness_reduction(z, o.common.depth);
  Json measures = Json::array();
  for (std::size_t d = 0; d < red.stage_measures.size(); ++d)
    measures.push_back({{"depth", d}, {"lo", red.stage_measures[d].lo().str()}, {"hi", red.stage_measures[d].hi().str()}});
  Json inc = Json::array();
  for (std::size_t n = 0; n < red.increments.size(); ++n) {
    Rational bound = Rational::pow2(-static_cast<long>(n) - 2);
    inc.push_back({{"step", n}, {"measure", red.increments[n].str()}, {"bound", bound.str()}, {"ok", red.increments[n] <= bound}});
  }
  Json pieces = Json::array();
  for (std::size_t i = 0; i < red.pieces.size() && i < o.max_pieces; ++i) {
    const auto& p = red.pieces[i];
    pieces.push_back({{"step", p.step}, {"row", p.row}, {"basis", p.basis.str()}, {"home", p.home.str()}, {"eps", p.eps.str()}});
  }
  Json stage = cylinder_to_json(red.set.stage(red.depth));
  stage["tail_bound"] = red.set.tail(red.depth).str();
  Json out{{"depth", red.depth},
           {"columns", red.steps},
           {"p3", red.p3},
           {"stage_measures", measures},
           {"increments", inc},
           {"piece_count", red.pieces.size()},
           {"pieces", pieces},
           {"stage", stage}};
  if (red.p3) {
    Json rows = Json::array();
    for (const auto& s : red.stabilization) rows.push_back({{"row", s.row}, {"bound", s.bound}, {"pieces", s.pieces}});
    out["stabilization"] = rows;
  } else {
    const auto& c = *red.certificate;
    out["certificate"] = {{"row", *red.witness_row},
                          {"open", Word::zeros(*red.witness_row).child(1).str()},
                          {"thick", to_string(c.thick)},
                          {"cothick", to_string(c.cothick)},
                          {"checked", c.checked},
                          {"stage", c.stage}};
  }
  emit_json(o.common, out);
}

void blur_transform(const ReduceOpts& o) {
  check_depth(o.common.depth);
  if (o.common.format != "json") throw PreconditionError("reduce blur-transform emits JSON only");
  MatrixCode z = matrix_from_arg(o.matrix);
  MatrixCode t = doubling_transform(z);
  Json periodic = Json::object();
  for (const auto& [row, pattern] : t.periodic()) {
    std::string s;
    for (auto b : pattern) s.push_back(static_cast<char>('0' + b));
    periodic[std::to_string(row)] = s;
  }
  Json rho = Json::array();
  if (o.common.depth >= 1) {
    SharpK k(parse_rational("--r", o.r));
    for (const auto& row : sharp_trajectory(k, t, o.common.depth, o.enclosure)) rho.push_back(row.path.point.rho.str());
  }
  emit_json(o.common, {{"p3", p3_membership(z)},
                       {"transformed_p3", p3_membership(t)},
                       {"window", bits_to_json(z.restrict(o.common.depth))},
                       {"transformed_window", bits_to_json(t.restrict(2 * o.common.depth))},
                       {"transformed_periodic", periodic},
                       {"transformed_rho", rho}});
}

}  // namespace

void add_reduce(CLI::App& app, Action& action) {
  auto* grp = app.add_subcommand("reduce", "Reductions from coded points of 2^(omega x omega)");
  grp->require_subcommand(1);
  auto o = std::make_shared<ReduceOpts>();
  o->common.depth = 4;
  o->common.format = "csv";

  auto* s = grp->add_subcommand("sharp", "Trajectory of the sharp-point reduction over stages n < depth");
  s->add_option("--r", o->r, "Dyadic target density in (0, 1)")->capture_default_str();
  s->add_option("--matrix", o->matrix, "allzero:N, rowones:J:N or a matrix JSON file")->required();
  s->add_option("--enclosure", o->enclosure, "Levels unfolded in each measure enclosure")->capture_default_str();
  add_common(s, o->common, true);
  s->callback([o, &action] { action = [o] { sharp(*o); }; });

  o = std::make_shared<ReduceOpts>();
  o->common.depth = 4;
  auto* c = grp->add_subcommand("compact", "Stages and certificates of the compact-class reduction");
  c->add_option("--code,--matrix", o->matrix, "allzero:N, rowones:J:N or a matrix JSON file")->required();
  c->add_option("--max-pieces", o->max_pieces, "Pieces listed in the output")->capture_default_str();
  add_common(c, o->common, true);
  c->callback([o, &action] { action = [o] { compact(*o); }; });

  o = std::make_shared<ReduceOpts>();
  o->common.depth = 4;
  auto* b = grp->add_subcommand("blur-transform", "Doubling transform of a code, with its sharp-point trajectory");
  b->add_option("--matrix,--code", o->matrix, "allzero:N, rowones:J:N or a matrix JSON file")->required();
  b->add_option("--r", o->r, "Dyadic target density in (0, 1)")->capture_default_str();
  b->add_option("--enclosure", o->enclosure, "Levels unfolded in each measure enclosure")->capture_default_str();
  add_common(b, o->common, true);
  b->callback([o, &action] { action = [o] { blur_transform(*o); }; });
}

}  // namespace dlab::cli
