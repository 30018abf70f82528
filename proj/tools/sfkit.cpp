#include <CLI11.hpp>
#include <iostream>

#include "sfkit/cli.hpp"

int main(int argc, char** argv) {
  using sfkit::cli::Request;
  CLI::App app{"sfkit: non-properness sets, uniruledness certificates and G_a fixed points"};
  app.require_subcommand(1);
  Request req;
  app.add_flag("--json", req.json, "print a JSON report");

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", req.json, "print a JSON report");
    return sub;
  };
  auto file = [&](CLI::App* sub) { sub->add_option("file", req.files, "problem file")->required()->expected(1); };

  file(add("sf", "non-properness set and its classification"));
  file(add("image", "Zariski closure of the image"));
  file(add("finite", "is the map finite"));
  auto* mult = add("mult", "generic fiber cardinality");
  file(mult);
  mult->add_option("--trials", req.trials, "random fibers to sample")->capture_default_str();
  file(add("bound", "check deg S_f <= (prod deg f_i - mu) / min deg f_i"));
  add("compose", "check S_g inside S_{g o f}")->add_option("files", req.files, "f.prob g.prob")->required()->expected(2);
  file(add("fix", "fixed-point ideal of the action"));
  file(add("effective", "is the action effective"));
  auto* orbit = add("orbit", "non-properness set of the orbit map through a curve");
  file(orbit);
  orbit->add_option("--curve", req.curve, "curve components in s, e.g. \"s, 0\"")->required();
  auto* curve = add("curve", "is there a curve of degree <= d through a point");
  file(curve);
  curve->add_option("--point", req.point, "coordinates, e.g. 0,0");
  curve->add_option("--degree", req.degree, "degree bound")->required();
  curve->add_option("--fp", req.fp, "prime for an explicit witness");
  auto* line = add("line", "a line through a point of a hypersurface");
  file(line);
  line->add_option("--point", req.point, "coordinates, e.g. 0,0,0,0");
  line->add_option("--fp", req.fp, "prime to search over")->required();
  auto* cert = add("certify", "uniruledness certificate at sample points");
  file(cert);
  cert->add_option("--degree", req.degree, "degree bound")->required();
  cert->add_option("--samples", req.samples, "file with one point per line");
  cert->add_option("--fp", req.fp, "prime for explicit witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sfkit::cli::kInputError;
  }
  req.command = app.get_subcommands().front()->get_name();
  return sfkit::cli::run(req, std::cout, std::cerr);
}
