#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "chromfold/error.hpp"
#include "commands.hpp"

using namespace chromfold::cli;

namespace {

void add_out(CLI::App* cmd, Output& out) { cmd->add_option("--out", out.path, "Output file (default: stdout)"); }

void add_placement(CLI::App* cmd, double& mu) {
  cmd->add_option("--mu", mu, "Placement parameter in (0, 1]")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic subdivisions, folding maps, jiggling and collapse certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::size_t limit = 0;
  app.add_option("--size-limit", limit, "Cell budget per construction (overrides CHROMFOLD_SIZE_LIMIT)");

  std::function<int()> action;

  SubdivideArgs subdivide;
  auto* c_sub = app.add_subcommand("subdivide", "Iterated chromatic subdivision of Δ^n or of an input complex");
  c_sub->add_option("--n", subdivide.n, "Simplex dimension")->capture_default_str()->check(CLI::Range(0, 30));
  c_sub->add_option("--r", subdivide.r, "Number of subdivisions")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_placement(c_sub, subdivide.mu);
  c_sub->add_option("--in", subdivide.in, "Base complex JSON (properly colored)");
  add_out(c_sub, subdivide.out);
  c_sub->callback([&] { action = [&] { return run_subdivide(subdivide); }; });

  OracleArgs oracle;
  auto* c_or = app.add_subcommand("oracle", "Immediate-snapshot executions versus χ(Δ^n)");
  c_or->add_option("--n", oracle.n, "Number of processes minus one")->capture_default_str()->check(CLI::Range(0, 8));
  c_or->add_flag("--list", oracle.list, "Include every execution and its cell");
  add_out(c_or, oracle.out);
  c_or->callback([&] { action = [&] { return run_oracle(oracle); }; });

  FoldArgs fold;
  auto* c_fold = app.add_subcommand("fold", "Composite folding map of χ^r(Δ^n)");
  auto* c_unfold = app.add_subcommand("unfold", "Unfolding homotopy H_t(x) = (1 - t) ŝ(x) + t x");
  for (auto* cmd : {c_fold, c_unfold}) {
    cmd->add_option("--n", fold.n, "Simplex dimension")->capture_default_str()->check(CLI::Range(0, 30));
    cmd->add_option("--r", fold.r, "Order")->capture_default_str()->check(CLI::NonNegativeNumber);
    add_placement(cmd, fold.mu);
    cmd->add_option("--point", fold.point, "Barycentric point b0,...,bn");
    add_out(cmd, fold.out);
  }
  c_unfold->add_option("--t", fold.t, "Homotopy time in [0, 1]")->capture_default_str();
  c_fold->callback([&] { action = [&] { return run_fold(fold); }; });
  c_unfold->callback([&] { action = [&] { return run_unfold(fold); }; });

  JiggleArgs jiggle;
  auto* c_jig = app.add_subcommand("jiggle", "Jiggled section of the flat torus and its certificates");
  auto* c_min = app.add_subcommand("minimal-r", "Smallest order quasi-transverse to the given fields");
  for (auto* cmd : {c_jig, c_min}) {
    cmd->add_option("--n", jiggle.n, "Torus dimension")->capture_default_str()->check(CLI::Range(1, 30));
    cmd->add_option("--L", jiggle.period, "Period, a multiple of n + 1")->capture_default_str();
    add_placement(cmd, jiggle.mu);
    cmd->add_option("--field", jiggle.fields, "Plane field matrix a11,a12,...,ann (default -I)");
    cmd->add_flag("--pencil-to-exp", jiggle.pencil_to_exp, "Also certify the pencil from -I to each field");
    add_out(cmd, jiggle.out);
  }
  c_jig->add_option("--r", jiggle.r, "Order")->capture_default_str()->check(CLI::NonNegativeNumber);
  c_jig->add_option("--export", jiggle.export_format, "Export the section graph (off)");
  c_jig->add_option("--export-path", jiggle.export_path, "Path for --export");
  c_min->add_option("--r-max", jiggle.r_max, "Largest order to try")->capture_default_str()->check(CLI::NonNegativeNumber);
  c_jig->callback([&] { action = [&] { return run_jiggle(jiggle); }; });
  c_min->callback([&] { action = [&] { return run_minimal_r(jiggle); }; });

  PencilArgs pencil;
  auto* c_pen = app.add_subcommand("pencil", "Root of det(D - I - A_t) on [0, 1] for one affine piece");
  c_pen->add_option("--D", pencil.derivative, "Derivative d11,...,dnn")->required();
  c_pen->add_option("--from", pencil.from, "A_0 entries")->required();
  c_pen->add_option("--to", pencil.to, "A_1 entries")->required();
  add_out(c_pen, pencil.out);
  c_pen->callback([&] { action = [&] { return run_pencil(pencil); }; });

  CollapseArgs collapse;
  auto* c_col = app.add_subcommand("collapse", "Greedy elementary collapses");
  auto* c_pri = app.add_subcommand("prism", "Whitney triangulation of complex x [0, 1]");
  for (auto* cmd : {c_col, c_pri}) {
    cmd->add_option("--in", collapse.in, "Complex JSON");
    cmd->add_option("--n", collapse.n, "Use Δ^n instead of --in")->check(CLI::Range(0, 12));
    add_out(cmd, collapse.out);
  }
  c_col->add_option("--target", collapse.target, "bottom: prism onto its bottom copy; vertex: input onto a vertex")
      ->capture_default_str();
  c_col->callback([&] { action = [&] { return run_collapse(collapse); }; });
  c_pri->callback([&] { action = [&] { return run_prism(collapse); }; });

  CurveArgs curves;
  auto* c_turn = app.add_subcommand("turning", "Turning number of a closed curve");
  c_turn->add_option("curve", curves.inputs, "Curve JSON")->required()->expected(1);
  add_out(c_turn, curves.out);
  c_turn->callback([&] { action = [&] { return run_turning(curves); }; });
  auto* c_wg = app.add_subcommand("wg", "Regular homotopy between curves of equal turning number");
  c_wg->add_option("curves", curves.inputs, "Two curve JSON files")->required()->expected(2);
  c_wg->add_option("--steps", curves.steps, "Interpolation steps")->capture_default_str()->check(CLI::PositiveNumber);
  add_out(c_wg, curves.out);
  c_wg->callback([&] { action = [&] { return run_wg(curves); }; });

  EversionArgs eversion;
  auto* c_ev = app.add_subcommand("eversion-check", "Formal eversion certificate on a sphere grid");
  c_ev->add_option("--grid", eversion.grid, "polar x azimuthal x times")->capture_default_str();
  add_out(c_ev, eversion.out);
  c_ev->callback([&] { action = [&] { return run_eversion_check(eversion); }; });

  ExportArgs exporter;
  auto* c_off = app.add_subcommand("export-off", "OFF mesh of a realized complex (dim <= 3)");
  c_off->add_option("--in", exporter.in, "Complex JSON with positions")->required();
  c_off->add_flag("--colored", exporter.colored, "Emit COFF with one color per vertex color");
  add_out(c_off, exporter.out);
  c_off->callback([&] { action = [&] { return run_export_off(exporter); }; });

  FiguresArgs figures;
  auto* c_fig = app.add_subcommand("figures", "Write fig4.json, fig5.off and fig6.json");
  c_fig->add_option("--dir", figures.dir, "Output directory")->capture_default_str();
  c_fig->callback([&] { action = [&] { return run_figures(figures); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (limit > 0) setenv("CHROMFOLD_SIZE_LIMIT", std::to_string(limit).c_str(), 1);

  try {
    return action();
  } catch (const chromfold::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
