#include "commands.hpp"
#include "densitylab/cantor/density.hpp"
#include "densitylab/core/errors.hpp"

namespace dlab::cli {

namespace {

struct DensityOpts {
  Common common;
  std::string set;
  std::string z;
  std::string x = "0/1";
  std::string scales = "dyadic:10";
  std::string sides = "both";
  std::string measure = "cantor";
};

TreeMeasure measure_from_arg(const std::string& arg) {
  if (arg == "cantor") return cantor_measure();
  if (arg.rfind("bernoulli:", 0) == 0) return bernoulli_measure(parse_rational("--measure", arg.substr(10)));
  throw ParseError("--measure must be cantor or bernoulli:p; got '" + arg + "'");
}

std::vector<Rational> scales_from_arg(const std::string& arg) {
  std::vector<Rational> out;
  if (arg.rfind("dyadic:", 0) == 0) {
    std::string n = arg.substr(7);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--scales dyadic:N needs a natural N; got '" + arg + "'");
    std::size_t count = std::stoul(n);
    check_depth(count, "--scales");
    for (std::size_t k = 1; k <= count; ++k) out.push_back(Rational::pow2(-static_cast<long>(k)));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    std::size_t comma = arg.find(',', pos);
    out.push_back(parse_rational("--scales", arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void profile(const DensityOpts& o) {
  CylinderSet a = cylinder_from_json(read_json_file(o.set));
  Word z = Word::parse(Alphabet::Binary, o.z);
  check_depth(z.size(), "--z length");
  TreeMeasure w = measure_from_arg(o.measure);
  auto ratios = density_profile(a, z, w);
  if (o.common.format == "csv") {
    Csv csv({"level", "ratio"}, {"ratio"});
    for (std::size_t n = 0; n < ratios.size(); ++n) csv.row({std::to_string(n), ratios[n].str()});
    emit(o.common, csv.str());
    return;
  }
  Json arr = Json::array();
  for (const auto& r : ratios) arr.push_back(r.str());
  emit_json(o.common, {{"z", z.str()}, {"measure", w.name()}, {"ratios", arr}});
}

void window(const DensityOpts& o) {
  IntervalSet a = interval_set_from_json(read_json_file(o.set));
  Rational x = parse_rational("--x", o.x);
  if (o.sides != "both" && o.sides != "all") throw PreconditionError("--sides must be both or all");
  Csv csv({"scale", "ratio", "side"}, {"scale", "ratio"});
  Json arr = Json::array();
  auto add = [&](const Rational& eps, const Rational& r, const char* side) {
    csv.row({eps.str(), r.str(), side});
    arr.push_back({{"scale", eps.str()}, {"ratio", r.str()}, {"side", side}});
  };
  for (const Rational& eps : scales_from_arg(o.scales)) {
    add(eps, window_ratio(a, x, eps), "both");
    if (o.sides == "all") {
      add(eps, one_sided_ratio(a, x, eps, Side::Left), "left");
      add(eps, one_sided_ratio(a, x, eps, Side::Right), "right");
    }
  }
  if (o.common.format == "csv")
    emit(o.common, csv.str());
  else
    emit_json(o.common, {{"x", x.str()}, {"ratios", arr}});
}

}  // namespace

void add_density(CLI::App& app, Action& action) {
  auto* grp = app.add_subcommand("density", "Density ratios of cylinder sets and interval sets");
  grp->require_subcommand(1);
  auto o = std::make_shared<DensityOpts>();
  o->common.format = "csv";

  auto* p = grp->add_subcommand("profile", "w(A in N_{z|n}) / w(z|n) for a cylinder set A");
  p->add_option("--set", o->set, "CylinderSet JSON file")->required();
  p->add_option("--z", o->z, "Binary word")->required();
  p->add_option("--measure", o->measure, "cantor or bernoulli:p")->capture_default_str();
  add_common(p, o->common, false);
  p->callback([o, &action] { action = [o] { profile(*o); }; });

  auto* w = grp->add_subcommand("window", "lambda(A in (x - r, x + r)) / 2r for an interval set A");
  w->add_option("--set", o->set, "IntervalSet JSON file")->required();
  w->add_option("--x", o->x, "Centre")->capture_default_str();
  w->add_option("--scales", o->scales, "dyadic:N or a comma separated list of radii")->capture_default_str();
  w->add_option("--sides", o->sides, "both, or all for the one-sided ratios too")->capture_default_str();
  add_common(w, o->common, false);
  w->callback([o, &action] { action = [o] { window(*o); }; });
}

}  // namespace dlab::cli
