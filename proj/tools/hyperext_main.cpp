#include <CLI11.hpp>

#include <iostream>

#include "hyperext/cli/commands.hpp"

namespace cli = hyperext::cli;

int main(int argc, char** argv) {
  CLI::App app{"Extensions of rational maps to hyperbolic 3-space and spatial filled Julia sets"};
  app.require_subcommand(1);

  cli::RenderOptions render;
  auto* r = app.add_subcommand("render", "Escape-time render of K(Q^_c) on a slice y = y0 or a volume");
  r->add_option("--c", render.c, "Parameter c as a complex literal, e.g. -0.75 or 0.3+0.5i");
  r->add_option("--map", render.map, "Map specification (quad:c=...)");
  r->add_option("--window", render.window, "xmin,xmax,tmin,tmax")->capture_default_str();
  r->add_option("--yrange", render.yrange, "ymin,ymax for volumes (defaults to the x range)");
  r->add_option("--plane", render.plane, "Slice plane y=<value>")->capture_default_str();
  r->add_option("--size", render.size, "WxH for a slice, WxHxD for a volume")->capture_default_str();
  r->add_option("--max-iter", render.max_iter, "Iteration cap")->capture_default_str();
  r->add_option("--escape-radius", render.escape_radius, "Escape radius, at least max(2, |c|)");
  r->add_option("--out", render.out, "Output path")->required();
  r->add_option("--format", render.format, "pgm or csv")->capture_default_str();
  r->add_option("--threads", render.threads, "Worker threads (0 = all cores)")->capture_default_str();

  cli::EvalOptions eval;
  auto* e = app.add_subcommand("eval", "Evaluate an extension at one point");
  e->add_option("--method", eval.method, "product, radial, open-book, star-square, visual, conformal-natural, vertical")
      ->required();
  e->add_option("--map", eval.map, "Map specification")->required();
  e->add_option("point,--point", eval.point, "x,y,t (or ball coordinates with --ball, or inf)")->required();
  e->add_flag("--ball", eval.ball, "Use ball-model coordinates");
  e->add_option("--lambda", eval.lambda, "Height factor of the vertical extension")->capture_default_str();
  e->add_option("--nodes", eval.nodes, "Quadrature nodes for barycentric methods")->capture_default_str();
  e->add_option("--seed", eval.quadrature_seed, "Quadrature seed")->capture_default_str();
  e->add_option("--pairing", eval.pairing, "Zero/pole pairing for the product method, e.g. 1,0");

  cli::CompareOptions compare;
  auto* c = app.add_subcommand("compare", "Hyperbolic distance between two extensions over sampled points");
  c->add_option("--method", compare.methods, "Two methods, comma-separated")->required();
  c->add_option("--map", compare.map, "Map specification")->required();
  c->add_option("--samples", compare.samples, "Number of sample points")->capture_default_str();
  c->add_option("--seed", compare.seed, "Sampling seed")->capture_default_str();
  c->add_option("--lambda", compare.lambda, "Height factor of the vertical extension")->capture_default_str();
  c->add_option("--nodes", compare.nodes, "Quadrature nodes for barycentric methods")->capture_default_str();

  cli::FactorOptions factor;
  auto* f = app.add_subcommand("factor", "Factor a rational map into Mobius maps");
  f->add_option("--map", factor.map, "Map specification")->required();
  f->add_option("--pairing", factor.pairing, "Zero/pole pairing, e.g. 1,0");
  f->add_option("--enumerate", factor.enumerate, "List up to K distinct pairings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*r) return cli::cmd_render(render, std::cout);
    if (*e) return cli::cmd_eval(eval, std::cout);
    if (*c) return cli::cmd_compare(compare, std::cout);
    if (*f) return cli::cmd_factor(factor, std::cout);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 1;
}
