// prabhakar_cli run --mode {example1,example2,custom,verify} [options]
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prab/csv.hpp"
#include "prab/error.hpp"
#include "prab/examples.hpp"
#include "prab/expr.hpp"
#include "prab/invariants.hpp"
#include "prab/oracle.hpp"
#include "prab/solver.hpp"

namespace {

using prab::Error;
using prab::ErrorKind;

struct Options {
  std::string mode = "example1";
  std::vector<double> betas;
  std::optional<double> alpha, gamma, delta, a, T;
  int nt = 41;
  int nx = 21;
  std::string method = "greens";
  std::string out = ".";
  std::string config;
  double verify_tol = 1.0;
  std::string tau = "0", phi0 = "0", phi1 = "0", f = "0";
  int n_images = 8;
  int panels = 64;
};

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double d = 0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw Error(ErrorKind::InvalidConfig, key + ": not a number: '" + v + "'");
  return d;
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != std::floor(d)) throw Error(ErrorKind::InvalidConfig, key + ": not an integer: '" + v + "'");
  return static_cast<int>(d);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Flat key=value lines; '#' starts a comment. Values only fill options not given as flags.
void apply_config(const std::string& path, Options& o, CLI::App& run) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read config " + path);
  std::map<std::string, std::function<void(const std::string&)>> set = {
      {"mode", [&](const std::string& v) { o.mode = v; }},
      {"alpha", [&](const std::string& v) { o.alpha = to_double("alpha", v); }},
      {"gamma", [&](const std::string& v) { o.gamma = to_double("gamma", v); }},
      {"delta", [&](const std::string& v) { o.delta = to_double("delta", v); }},
      {"a", [&](const std::string& v) { o.a = to_double("a", v); }},
      {"T", [&](const std::string& v) { o.T = to_double("T", v); }},
      {"nt", [&](const std::string& v) { o.nt = to_int("nt", v); }},
      {"nx", [&](const std::string& v) { o.nx = to_int("nx", v); }},
      {"method", [&](const std::string& v) { o.method = v; }},
      {"out", [&](const std::string& v) { o.out = v; }},
      {"verify-tol", [&](const std::string& v) { o.verify_tol = to_double("verify-tol", v); }},
      {"tau", [&](const std::string& v) { o.tau = v; }},
      {"phi0", [&](const std::string& v) { o.phi0 = v; }},
      {"phi1", [&](const std::string& v) { o.phi1 = v; }},
      {"f", [&](const std::string& v) { o.f = v; }},
      {"n-images", [&](const std::string& v) { o.n_images = to_int("n-images", v); }},
      {"panels", [&](const std::string& v) { o.panels = to_int("panels", v); }},
      {"beta",
       [&](const std::string& v) {
         std::string s = v;
         for (char& c : s)
           if (c == ',') c = ' ';
         std::istringstream is(s);
         std::string tok;
         while (is >> tok) o.betas.push_back(to_double("beta", tok));
       }},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidConfig, path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    auto it = set.find(key);
    if (it == set.end())
      throw Error(ErrorKind::InvalidConfig, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (run.get_option("--" + key)->count() > 0) continue;
    it->second(val);
  }
}

std::string beta_tag(double b) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", b);
  return buf;
}

prab::SolutionField oracle_on(const prab::ProblemSpec& ps, const std::vector<double>& tn,
                              const std::vector<double>& xn, int nt, int nx, const prab::SeriesControl& ctl) {
  // refine so every output node is an FD node
  const int rt = std::max(1, (128 + nt - 1) / nt);
  const int rx = std::max(1, (64 + nx - 2) / (nx - 1));
  const prab::FdGrid g = prab::FdGrid::make(nt * rt, (nx - 1) * rx - 1, ps.domain);
  const prab::SolutionField fd = prab::fd_solve(ps, g, ctl);
  prab::SolutionField out;
  out.t_nodes = tn;
  out.x_nodes = xn;
  out.method = prab::Method::Oracle;
  out.params = ps.params;
  out.domain = ps.domain;
  out.flagged = fd.flagged;
  out.note = fd.note;
  out.values.resize(tn.size() * xn.size());
  for (std::size_t i = 0; i < tn.size(); ++i)
    for (std::size_t j = 0; j < xn.size(); ++j) out.at(i, j) = fd.at((i + 1) * rt - 1, j * rx);
  return out;
}

int run_verify(const Options& o, const prab::SeriesControl& ctl, const prab::QuadratureSpec& q) {
  prab::VerifyOptions vo;
  vo.tol_scale = o.verify_tol;
  if (!o.betas.empty()) vo.betas = o.betas;
  vo.series = ctl;
  vo.quadrature = q;
  vo.on_result = [](const prab::CheckResult& r) {
    std::printf("%-4s  %-9s  %-62s  %s\n", r.passed ? "PASS" : "FAIL", r.module.c_str(), r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
  };
  const auto results = prab::run_invariants(vo);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  for (const auto& r : results)
    if (!r.passed) std::fprintf(stderr, "failed invariant: %s / %s\n", r.module.c_str(), r.name.c_str());
  return failed ? 1 : 0;
}

int run(const Options& o) {
  const std::vector<std::string> modes{"example1", "example2", "custom", "verify"};
  if (std::find(modes.begin(), modes.end(), o.mode) == modes.end())
    throw Error(ErrorKind::InvalidConfig, "unknown mode '" + o.mode + "'");
  if (o.method != "greens" && o.method != "oracle" && o.method != "both")
    throw Error(ErrorKind::InvalidConfig, "unknown method '" + o.method + "'");
  if (o.nt < 1 || o.nx < 2) throw Error(ErrorKind::InvalidConfig, "need nt >= 1 and nx >= 2");
  if (!(o.verify_tol > 0)) throw Error(ErrorKind::InvalidConfig, "verify-tol must be positive");

  prab::SeriesControl ctl;
  ctl.n_images = o.n_images;
  ctl.validate();
  prab::QuadratureSpec q;
  q.n_panels = o.panels;
  q.validate();

  if (o.mode == "verify") return run_verify(o, ctl, q);

  prab::DomainSpec dom = prab::DomainSpec::make(o.a.value_or(std::numbers::pi), o.T.value_or(2.0));
  std::vector<double> betas = o.betas;
  if (betas.empty()) betas = o.mode == "custom" ? std::vector<double>{0.5} : std::vector<double>{0.1, 0.5, 0.9};

  std::optional<prab::Expr> tau, phi0, phi1, f;
  if (o.mode == "custom") {
    tau = prab::Expr::parse(o.tau);
    phi0 = prab::Expr::parse(o.phi0);
    phi1 = prab::Expr::parse(o.phi1);
    f = prab::Expr::parse(o.f);
  }

  std::vector<double> tn(o.nt), xn(o.nx);
  for (int i = 0; i < o.nt; ++i) tn[i] = dom.T * (i + 1) / o.nt;
  for (int j = 0; j < o.nx; ++j) xn[j] = dom.a * j / (o.nx - 1);
  xn.back() = dom.a;

  std::filesystem::create_directories(o.out);
  for (double beta : betas) {
    prab::ProblemSpec ps;
    if (o.mode == "example1") ps = prab::example1(beta);
    if (o.mode == "example2") ps = prab::example2(beta);
    ps.domain = dom;
    ps.params = prab::FracParams::make(o.alpha.value_or(0.8), beta, o.gamma.value_or(0.3), o.delta.value_or(0.5));
    if (o.mode == "custom") {
      if (!tau->is_zero()) ps.tau = [e = *tau](double x) { return e(0, x); };
      if (!phi0->is_zero()) ps.phi0 = [e = *phi0](double t) { return e(t, 0); };
      if (!phi1->is_zero()) ps.phi1 = [e = *phi1, a = dom.a](double t) { return e(t, a); };
      if (!f->is_zero()) ps.f = [e = *f](double t, double x) { return e(t, x); };
    }
    ps.validate();

    const std::string stem = o.out + "/" + o.mode + "_beta" + beta_tag(beta) + "_";
    std::optional<prab::SolutionField> g, fd;
    if (o.method != "oracle") {
      g = prab::solve_u(ps, tn, xn, q, ctl);
      prab::emit_csv(*g, stem + "greens.csv");
    }
    if (o.method != "greens") {
      fd = oracle_on(ps, tn, xn, o.nt, o.nx, ctl);
      if (fd->flagged) std::fprintf(stderr, "warning: %s\n", fd->note.c_str());
      prab::emit_csv(*fd, stem + "oracle.csv");
    }
    if (g && fd) {
      double dmax = 0;
      for (std::size_t k = 0; k < g->values.size(); ++k) dmax = std::max(dmax, std::abs(g->values[k] - fd->values[k]));
      const double rel = prab::max_relative_difference(*g, *fd);
      std::ofstream s(stem + "diff.txt");
      char buf[160];
      std::snprintf(buf, sizeof buf, "max_abs_diff=%.6e\nmax_rel_diff=%.6e\n", dmax, rel);
      s << buf;
      if (!s) throw Error(ErrorKind::IoError, "cannot write " + stem + "diff.txt");
      std::printf("beta=%s max abs diff %.3e, max rel diff %.3e\n", beta_tag(beta).c_str(), dmax, rel);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prabhakar-type time-fractional diffusion on an interval"};
  app.require_subcommand(1);
  Options o;
  CLI::App* run_cmd = app.add_subcommand("run", "solve example or custom problems, or run the checks");
  run_cmd->add_option("--mode", o.mode, "example1, example2, custom or verify");
  run_cmd->add_option("--alpha", o.alpha);
  run_cmd->add_option("--beta", o.betas, "repeat for a sweep");
  run_cmd->add_option("--gamma", o.gamma);
  run_cmd->add_option("--delta", o.delta);
  run_cmd->add_option("--a", o.a, "interval length");
  run_cmd->add_option("--T", o.T, "final time");
  run_cmd->add_option("--nt", o.nt, "output time levels t_i = i T/nt");
  run_cmd->add_option("--nx", o.nx, "output nodes x_j = j a/(nx-1)");
  run_cmd->add_option("--method", o.method, "greens, oracle or both");
  run_cmd->add_option("--out", o.out, "output directory");
  run_cmd->add_option("--config", o.config, "key=value file; flags take precedence");
  run_cmd->add_option("--verify-tol", o.verify_tol, "multiplier on every verify tolerance");
  run_cmd->add_option("--tau", o.tau, "custom mode: u(0, x)");
  run_cmd->add_option("--phi0", o.phi0, "custom mode: u(t, 0)");
  run_cmd->add_option("--phi1", o.phi1, "custom mode: u(t, a)");
  run_cmd->add_option("--f", o.f, "custom mode: f(t, x)");
  run_cmd->add_option("--n-images", o.n_images);
  run_cmd->add_option("--panels", o.panels, "quadrature panels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!o.config.empty()) apply_config(o.config, o, *run_cmd);
    return run(o);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    const bool config = e.kind() == ErrorKind::InvalidConfig || e.kind() == ErrorKind::InvalidParameters;
    return config ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
