#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "glc/io.hpp"

namespace {

struct Flags {
  std::string input;
  std::string report;
  std::size_t window = 0;
  std::uint32_t characteristic = 0;
  std::size_t max_resolution = 0;
  std::size_t oracle_tmax = 0;
  bool window_set = false;
  bool char_set = false;
  bool maxres_set = false;
  bool tmax_set = false;
};

void add_common(CLI::App* sub, Flags& fl) {
  sub->add_option("input", fl.input, "instance file")->required();
  auto* w = sub->add_option("--window", fl.window, "degree window radius");
  auto* c = sub->add_option("--char", fl.characteristic, "field characteristic override");
  auto* m = sub->add_option("--max-resolution", fl.max_resolution, "resolution probe bound");
  auto* t = sub->add_option("--oracle-tmax", fl.oracle_tmax, "direct-limit oracle iteration cap");
  sub->add_option("--report", fl.report, "also write the machine-readable report here");
  sub->callback([&fl, w, c, m, t]() {
    fl.window_set = w->count() > 0;
    fl.char_set = c->count() > 0;
    fl.maxres_set = m->count() > 0;
    fl.tmax_set = t->count() > 0;
  });
}

glc::Instance load(const Flags& fl) {
  glc::Instance inst = glc::parse_instance_file(fl.input);
  if (fl.window_set) inst.window = fl.window;
  if (fl.char_set) inst.characteristic = fl.characteristic;
  if (fl.maxres_set) inst.max_resolution = fl.max_resolution;
  if (fl.tmax_set) inst.oracle_tmax = fl.oracle_tmax;
  return inst;
}

void write_report(const Flags& fl, const std::string& body) {
  if (fl.report.empty()) return;
  std::ofstream out(fl.report);
  if (!out) throw glc::Error("cannot write " + fl.report);
  out << body;
}

glc::GlcOptions options_of(const glc::Instance& inst) {
  glc::GlcOptions opt;
  opt.max_resolution = inst.max_resolution;
  opt.trunc_extra = inst.trunc_extra;
  return opt;
}

int run_sharp(const Flags& fl) {
  glc::Instance inst = load(fl);
  std::string body = glc::sharp_report_text(inst.grading);
  std::cout << body;
  write_report(fl, body);
  return glc::is_sharp(inst.grading) ? 0 : 3;
}

int run_resolve(const Flags& fl) {
  glc::Instance inst = load(fl);
  glc::QuotientContext ctx = inst.context();
  glc::Resolution res = glc::resolve(ctx, inst.mod_m, inst.max_resolution);
  glc::minimize(ctx, res);
  std::string body = "module M minimal resolution";
  body += res.complete ? " (complete)" : " (truncated at " + std::to_string(res.length()) + ")";
  body += ":\n" + glc::betti_table_text(res);
  std::cout << body;
  write_report(fl, body);
  return 0;
}

int run_cohomology(const Flags& fl) {
  glc::Instance inst = load(fl);
  glc::QuotientContext ctx = inst.context();
  glc::GlcSetup setup =
      glc::prepare_glc(ctx, inst.mod_m, inst.mod_n, glc::BlockSel::P, options_of(inst));
  const std::size_t top = ctx.ring.m() + ctx.ring.n();
  std::string tsv = "i\tgamma\tdim\n";
  bool oracle_ok = true;
  std::string oracle_lines;
  for (std::size_t i = 0; i <= top; ++i) {
    for (const auto& gamma : glc::degree_window(ctx.ring.r(), inst.window)) {
      std::size_t dim = glc::glc_dim(ctx, setup, i, gamma);
      tsv += std::to_string(i) + "\t" + gamma.str() + "\t" + std::to_string(dim) + "\n";
      if (fl.tmax_set) {
        glc::ExtLimit lim = glc::ext_limit_oracle(ctx, inst.mod_m, inst.mod_n, glc::BlockSel::P,
                                                  i, gamma, inst.oracle_tmax);
        if (lim.stabilized && lim.dims.back() != dim) {
          oracle_ok = false;
          oracle_lines += "oracle mismatch at i=" + std::to_string(i) +
                          " gamma=" + gamma.str() + ": pipeline " + std::to_string(dim) +
                          ", limit " + std::to_string(lim.dims.back()) + "\n";
        }
      }
    }
  }
  std::cout << "H^i_p(M, N) graded dimensions, window radius " << inst.window << "\n" << tsv;
  if (fl.tmax_set)
    std::cout << (oracle_ok ? "oracle agreement: all stabilized cells match\n" : oracle_lines);
  write_report(fl, tsv);
  return oracle_ok ? 0 : 3;
}

int run_duality(const Flags& fl, bool as_scenario) {
  glc::Instance inst = load(fl);
  glc::QuotientContext ctx = inst.context();
  glc::DualityReport rep;
  std::string head;
  if (as_scenario) {
    if (!inst.scenario)
      throw glc::ParseError(1, "scenario command needs `scenario = <name>` under [params]");
    auto name = glc::scenario_from_name(*inst.scenario);
    if (!name) throw glc::ParseError(1, "unknown scenario '" + *inst.scenario + "'");
    head = "scenario: " + std::string(glc::scenario_name(*name)) + "\n";
    rep = glc::run_scenario(ctx, *name, inst.mod_m, inst.mod_n, inst.window, options_of(inst));
  } else {
    rep = glc::verify_duality(ctx, inst.mod_m, inst.mod_n, inst.window, options_of(inst));
  }
  std::cout << head << glc::duality_report_text(rep);
  write_report(fl, glc::duality_report_tsv(rep));
  return rep.all_match() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded pieces of generalized local cohomology, with duality checks"};
  app.require_subcommand(1);
  Flags fl;
  CLI::App* sharp = app.add_subcommand("sharp", "decide sharpness of the grading");
  CLI::App* resolve = app.add_subcommand("resolve", "minimal free resolution of module M");
  CLI::App* cohomology =
      app.add_subcommand("cohomology", "graded dimensions of H^i_p(M, N) over the window");
  CLI::App* duality = app.add_subcommand("duality", "verify the duality table cell by cell");
  CLI::App* scenario =
      app.add_subcommand("scenario", "run a named classical-corollary scenario");
  for (CLI::App* sub : {sharp, resolve, cohomology, duality, scenario}) add_common(sub, fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sharp->parsed()) return run_sharp(fl);
    if (resolve->parsed()) return run_resolve(fl);
    if (cohomology->parsed()) return run_cohomology(fl);
    if (duality->parsed()) return run_duality(fl, false);
    if (scenario->parsed()) return run_duality(fl, true);
  } catch (const glc::HypothesisViolation& e) {
    std::cout << "hypothesis violation: " << e.what() << "\n";
    return 2;
  } catch (const glc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const glc::WrongShape& e) {
    std::cerr << "input does not fit the command: " << e.what() << "\n";
    return 1;
  } catch (const glc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
