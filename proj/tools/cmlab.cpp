// cmlab: command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmlab/acceptance.hpp"
#include "cmlab/bilinear.hpp"
#include "cmlab/carleson.hpp"
#include "cmlab/config.hpp"
#include "cmlab/error.hpp"
#include "cmlab/families.hpp"
#include "cmlab/field_io.hpp"
#include "cmlab/harness.hpp"
#include "cmlab/paraproducts.hpp"
#include "cmlab/report.hpp"
#include "cmlab/spaces.hpp"

using namespace cmlab;
using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write '" + path + "'");
  out << text;
}

// "log:1", "loglog:1,2", "const", or a JSON object.
WeightSpec weight_arg(const std::string& s) {
  if (!s.empty() && s.front() == '{') return parse_weight_spec(s);
  WeightSpec w;
  const auto colon = s.find(':');
  w.kind = s.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string rest = s.substr(colon + 1);
    const auto comma = rest.find(',');
    if (w.kind == "loglog") {
      w.b1 = std::stod(rest.substr(0, comma));
      w.b2 = comma == std::string::npos ? 0.0 : std::stod(rest.substr(comma + 1));
    } else {
      w.b = std::stod(rest);
    }
  }
  w.build();
  return w;
}

double number_after(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) throw Error(ErrorKind::Format, "missing parameter in '" + s + "'");
  const std::string v = s.substr(pos);
  if (v == "inf") return kInfinity;
  return std::stod(v);
}

NormSpace target_space(const std::string& s) {
  if (s.rfind("lp:", 0) == 0) return NormSpace::lebesgue(number_after(s, 3));
  if (s == "H1") return NormSpace::hardy();
  if (s == "BMO") return NormSpace::bmo();
  throw Error(ErrorKind::Format, "jw target must be lp:p, H1 or BMO, got '" + s + "'");
}

double compute_norm(const std::string& space, const WeightSpec& ws, const SampledField& f,
                    int q) {
  const auto tg = TimeGrid::covering(f.grid, q);
  if (space.rfind("lp:", 0) == 0) return lp_norm(f, number_after(space, 3));
  if (space == "h1") return h1_norm(f, tg);
  if (space == "H1") return H1_norm(f, tg);
  if (space == "bmo") return bmo_norm(f);
  if (space == "BMO") return BMO_norm(f);
  if (space == "xw") return xw_norm(f, regularize(ws.build()), LPFamily(), tg);
  if (space.rfind("jw:", 0) == 0) {
    return jw_norm(f, regularize(ws.build()), target_space(space.substr(3)), &tg);
  }
  if (space.rfind("fpw:", 0) == 0) {
    return triebel_norm(f, regularize(ws.build()), number_after(space, 4));
  }
  if (space.rfind("hphi:", 0) == 0) return refined_sobolev_norm(f, number_after(space, 5));
  throw Error(ErrorKind::Format, "unknown space '" + space + "'");
}

json cube_json(const Cube& c) {
  return {{"side_cells", c.side_cells}, {"x0", c.x0}, {"y0", c.y0}, {"side", c.side}};
}

std::vector<int> parse_resolutions(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmlab: bilinear multipliers, paraproducts and Carleson measures on the torus"};
  app.require_subcommand(1);

  // norm
  auto* norm = app.add_subcommand("norm", "Norm of a field");
  std::string space = "lp:2", weight = "log:1", in_path;
  int q = 8;
  norm->add_option("--space", space,
                   "lp:p | h1 | H1 | bmo | BMO | xw | jw:{lp:p|H1|BMO} | fpw:p | hphi:b")
      ->capture_default_str();
  norm->add_option("--weight", weight, "log:b | loglog:b1,b2 | const | JSON")->capture_default_str();
  norm->add_option("--in", in_path, "Field JSON")->required();
  norm->add_option("--q", q, "Time-grid points per octave")->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "Write a test-family field");
  std::string family = "band_gauss", gen_out;
  int gen_n = 1, gen_N = 256;
  double gen_L = 16.0, gen_param = 0.0;
  bool gen_mean_zero = false;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", family, "band_gauss | bmo_log_spike | dyadic_atom | smoothed_step | bounded_trig")
      ->capture_default_str();
  gen->add_option("--n", gen_n, "Dimension")->capture_default_str();
  gen->add_option("--N", gen_N, "Points per axis")->capture_default_str();
  gen->add_option("--L", gen_L, "Box side")->capture_default_str();
  gen->add_option("--param", gen_param, "Family parameter, 0 for the default");
  gen->add_flag("--mean-zero", gen_mean_zero);
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--out", gen_out, "Output path, stdout if omitted");

  // symbol-check
  auto* sym = app.add_subcommand("symbol-check", "Coifman-Meyer constants of a builtin symbol");
  std::string sym_name = "one";
  int sym_n = 1, sym_order = -1;
  sym->add_option("--symbol", sym_name, "one | riesz-ratio | kato-ponce-b1 | degree-one")
      ->capture_default_str();
  sym->add_option("--n", sym_n)->check(CLI::IsMember({1, 2}))->capture_default_str();
  sym->add_option("--order", sym_order, "Highest order, default 4n+1");

  // paraproduct
  auto* para = app.add_subcommand("paraproduct", "Evaluate a paraproduct or product part");
  std::string para_spec, para_f, para_g, para_out = "pi", para_dest;
  para->add_option("--spec", para_spec, "JSON with lpfamily_q and modulation");
  para->add_option("--f", para_f)->required();
  para->add_option("--g", para_g)->required();
  para->add_option("--out", para_out, "pi | pi1 | pi2 | product-b1 | product-b2")
      ->check(CLI::IsMember({"pi", "pi1", "pi2", "product-b1", "product-b2"}))
      ->capture_default_str();
  para->add_option("--dest", para_dest, "Output field path, stdout if omitted");

  // carleson
  auto* carl = app.add_subcommand("carleson", "Carleson-measure checks");
  std::string carl_check = "bmo", carl_in, carl_g, carl_weight = "log:1";
  double carl_p = 2.0;
  int carl_q = 8;
  carl->add_option("--check", carl_check, "bmo | weighted | embedding")
      ->check(CLI::IsMember({"bmo", "weighted", "embedding"}))
      ->capture_default_str();
  carl->add_option("--in", carl_in, "Field JSON (g, h, or the F source for embedding)")->required();
  carl->add_option("--g", carl_g, "Field for the measure in the embedding check");
  carl->add_option("--weight", carl_weight)->capture_default_str();
  carl->add_option("--p", carl_p)->capture_default_str();
  carl->add_option("--q", carl_q)->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "Ratio estimation, sweeps and the acceptance suite");
  std::string ver_id, ver_Ns = "256", ver_out, ver_config;
  int ver_trials = 200;
  std::uint64_t ver_seed = 1;
  bool ver_all = false;
  ver->add_option("--id", ver_id, "Inequality id");
  ver->add_option("--trials", ver_trials)->capture_default_str();
  ver->add_option("--N", ver_Ns, "Comma-separated resolutions")->capture_default_str();
  ver->add_option("--seed", ver_seed)->capture_default_str();
  ver->add_option("--out", ver_out, "Report path (.json or .csv), stdout if omitted");
  ver->add_option("--config", ver_config, "Config JSON");
  ver->add_flag("--all", ver_all, "Run the acceptance suite");
  ver->add_flag_callback("--list", [] {
    for (const auto& id : inequality_ids()) std::cout << id << '\n';
    std::exit(0);
  }, "List inequality ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norm) {
      const auto f = read_field(in_path);
      const double v = compute_norm(space, weight_arg(weight), f, q);
      std::cout << json{{"norm", v}}.dump() << '\n';
    } else if (*gen) {
      FamilySpec s{family_kind_from_string(family), gen_param, gen_mean_zero};
      spit(gen_out, serialize_field(generate(s, Grid(gen_n, gen_N, gen_L), gen_seed)));
    } else if (*sym) {
      CMOptions o;
      o.max_order = sym_order;
      const auto r = cm_constant(builtin_symbol(sym_name), sym_n, o);
      const auto v = cm_scaling_test(builtin_symbol(sym_name), sym_n);
      std::cout << json{{"symbol", sym_name},
                        {"n", r.dimension},
                        {"max_order", r.max_order},
                        {"levels", r.level},
                        {"constant", r.constant},
                        {"scaling_growth", v.growth},
                        {"coifman_meyer", v.coifman_meyer}}
                       .dump(2)
                << '\n';
    } else if (*para) {
      const HarnessConfig cfg = para_spec.empty() ? HarnessConfig{} : read_config(para_spec);
      const auto f = read_field(para_f);
      const auto g = read_field(para_g);
      const ParaproductSpec spec{LPFamily(), TimeGrid::covering(f.grid, cfg.lpfamily_q),
                                 cfg.modulation};
      SampledField h(f.grid);
      if (para_out == "pi") h = pi(spec, f, g);
      if (para_out == "pi1") h = pi1(spec, f, g);
      if (para_out == "pi2") h = pi2(spec, f, g);
      if (para_out == "product-b1") h = product_decompose(spec, f, g).b1;
      if (para_out == "product-b2") h = product_decompose(spec, f, g).b2;
      spit(para_dest, serialize_field(h));
    } else if (*carl) {
      const auto f = read_field(carl_in);
      const auto tg = TimeGrid::covering(f.grid, carl_q);
      const LPFamily fam;
      json out;
      if (carl_check == "bmo") {
        const auto res = carleson_norm(
            tent_from_multiplier(f, [&](double r) { return fam.psi1(r); }, tg));
        out = {{"constant", res.norm / std::pow(BMO_norm(f), 2)},
               {"carleson_norm", res.norm},
               {"witness", cube_json(res.witness)}};
      } else if (carl_check == "weighted") {
        const auto rw = regularize(weight_arg(carl_weight).build());
        const auto rep = weighted_band_carleson(f, rw, fam, tg, {f});
        out = {{"constant", rep.carleson_ratio},
               {"quadratic_constant", rep.quadratic_constant},
               {"constant_residual", rep.constant_residual},
               {"witness", nullptr}};
      } else {
        if (carl_g.empty()) throw Error(ErrorKind::Precondition, "embedding needs --g");
        const auto g = read_field(carl_g);
        const auto F = tent_from_multiplier(f, [](double r) { return mollifier_hat(r); }, tg);
        const auto G = tent_from_multiplier(g, [&](double r) { return fam.psi(r); }, tg);
        out = {{"constant", carleson_embedding_ratio(F, G, carl_p)},
               {"witness", cube_json(carleson_norm(G).witness)}};
      }
      std::cout << out.dump(2) << '\n';
    } else if (*ver) {
      if (ver_all) {
        AcceptanceOptions opts;
        bool ok = true;
        run_acceptance(opts, [&](const CriterionResult& r) {
          std::cout << summary_line(r) << '\n';
          for (const auto& d : r.details) std::cout << "    " << d << '\n';
          std::cout.flush();
          ok = ok && r.passed;
        });
        return ok ? 0 : 1;
      }
      if (ver_id.empty()) throw Error(ErrorKind::Precondition, "verify needs --id or --all");
      const HarnessConfig cfg = ver_config.empty() ? HarnessConfig{} : read_config(ver_config);
      const auto report =
          resolution_sweep(ver_id, parse_resolutions(ver_Ns), ver_trials, ver_seed, cfg);
      spit(ver_out, ends_with(ver_out, ".csv") ? to_csv(report) : to_json(report));
      for (const auto& e : report.resolutions) {
        std::fprintf(stderr, "%s N=%d max=%.6g median=%.6g skipped=%d\n", ver_id.c_str(), e.N,
                     e.max, e.median, e.skipped);
      }
    }
  } catch (const Error& e) {
    std::cerr << "cmlab: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cmlab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
