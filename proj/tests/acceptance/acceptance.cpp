// One PASS/FAIL line per acceptance criterion; exit status 1 if any line fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "prab/csv.hpp"
#include "prab/error.hpp"
#include "prab/examples.hpp"
#include "prab/invariants.hpp"
#include "prab/oracle.hpp"
#include "prab/solver.hpp"

using namespace prab;

namespace {

constexpr double pi = std::numbers::pi;
const SeriesControl ctl;
const QuadratureSpec quad;
int failures = 0;

struct Line {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + note);
  }
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

template <class Fn>
void criterion(const char* name, Fn fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Line l;
  try {
    fn(l);
  } catch (const std::exception& e) {
    l.require(false, std::string("error: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %s  (%.1f s)\n", l.pass ? "PASS" : "FAIL", name, s);
  for (const auto& n : l.notes) std::printf("        %s\n", n.c_str());
  std::fflush(stdout);
  failures += !l.pass;
}

void from_checks(Line& l, const std::vector<CheckResult>& rs, const std::vector<std::string>& names) {
  for (const auto& want : names) {
    bool found = false;
    for (const auto& r : rs)
      if (r.name == want) {
        l.require(r.passed, r.name + ": " + r.detail);
        found = true;
      }
    if (!found) l.require(false, "missing check " + want);
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  VerifyOptions vo;

  criterion("special-function identities", [&](Line& l) {
    from_checks(l, specfun_checks(vo),
                {"gamma=0 Prabhakar reduction", "E^1_{1,1} = exp for |z| <= 5", "Wright-type beta=0 reduction",
                 "Vandermonde identity for Pochhammer", "Cauchy-product regrouping of Prabhakar series"});
  });

  criterion("operator suite", [&](Line& l) {
    from_checks(l, operator_checks(vo),
                {"Caputo/RL relation residual on {s, s^2, sin s, s+2}",
                 "gamma=0 Caputo matches classical power-function formula",
                 "vanishing integral: decay exponent 1 - beta"});
  });

  criterion("kernel suite", [&](Line& l) {
    from_checks(l, greens_checks(vo),
                {"G vanishes at both walls", "G symmetric in (x, xi)", "G depends on t - eta only",
                 "G-tilde closed form vs quadrature on 5x5x5 samples", "image sums unchanged when n_images doubles"});
  });

  criterion("manufactured solution", [&](Line& l) {
    const ProblemSpec ps = manufactured(example_params(0.5), ctl);
    std::vector<double> tn, xn;
    for (int i = 1; i <= 11; ++i) tn.push_back(2.0 * i / 11);
    for (int j = 0; j <= 10; ++j) xn.push_back(pi * j / 10);
    const SolutionField f = solve_u(ps, tn, xn, quad, ctl);
    double e = 0;
    for (std::size_t i = 0; i < tn.size(); ++i)
      for (std::size_t j = 0; j < xn.size(); ++j)
        e = std::max(e, std::abs(f.at(i, j) - manufactured_exact(tn[i], xn[j])) / 3);
    l.require(e <= 1e-2, fmt("Green's 11x11 max rel error %.3g <= 1e-2", e));
    double fe[2];
    const int sz[2][2] = {{64, 32}, {128, 65}};
    for (int k = 0; k < 2; ++k) {
      const SolutionField g = fd_solve(ps, FdGrid::make(sz[k][0], sz[k][1], ps.domain), ctl);
      fe[k] = 0;
      for (std::size_t i = 0; i < g.t_nodes.size(); ++i)
        for (std::size_t j = 0; j < g.x_nodes.size(); ++j)
          fe[k] = std::max(fe[k], std::abs(g.at(i, j) - manufactured_exact(g.t_nodes[i], g.x_nodes[j])) / 3);
    }
    l.require(fe[0] <= 2e-2, fmt("FD 64x32 max rel error %.3g <= 2e-2", fe[0]));
    l.require(fe[0] / fe[1] >= 1.5, fmt("FD error ratio under refinement %.2f >= 1.5", fe[0] / fe[1]));
  });

  criterion("cross-method equivalence", [&](Line& l) {
    for (int ex = 1; ex <= 2; ++ex)
      for (double beta : {0.1, 0.5, 0.9}) {
        const ProblemSpec ps = ex == 1 ? example1(beta) : example2(beta);
        const CrossMethod m = compare_with_oracle(ps, 64, 32, 8, 4, quad, ctl);
        l.require(m.rel_coarse <= 5e-2 && m.rel_fine < m.rel_coarse && m.seconds <= 60,
                  fmt("example %.0f beta=%.1f: rel diff %.3g -> %.3g", ex, beta, m.rel_coarse, m.rel_fine) +
                      fmt(" (%.1f s)", m.seconds));
      }
  });

  criterion("boundary and initial attainment", [&](Line& l) {
    for (double beta : {0.1, 0.5, 0.9}) {
      for (int ex = 1; ex <= 2; ++ex) {
        const ProblemSpec ps = ex == 1 ? example1(beta) : example2(beta);
        const SolutionField f = solve_u(ps, {0.5, 2.0}, {0.0, 1.0, 2.0, pi}, quad, ctl);
        const double be = verify_solution(ps, f, quad, ctl).boundary_error;
        l.require(be <= 1e-8, fmt("example %.0f beta=%.1f boundary error %.3g <= 1e-8", ex, beta, be));
      }
      const ProblemSpec ps = example1(beta);
      std::vector<double> xn;
      for (int j = 0; j <= 40; ++j) xn.push_back(pi * j / 40);
      double e[3];
      const double ts[3] = {1e-1, 1e-2, 1e-3};
      for (int k = 0; k < 3; ++k) e[k] = verify_solution(ps, solve_u(ps, {ts[k]}, xn, quad, ctl), quad, ctl).initial_error;
      l.require(e[2] <= 2e-2 && e[1] < e[0] && e[2] < e[1],
                fmt("beta=%.1f initial error %.3g, %.3g, %.3g at t = 1e-1, 1e-2, 1e-3", beta, e[0], e[1], e[2]));
    }
  });

  criterion("beta trends at (2, pi/2)", [&](Line& l) {
    double u1[3], u2[3];
    const double betas[3] = {0.1, 0.5, 0.9};
    for (int k = 0; k < 3; ++k) {
      u1[k] = solve_z(example1(betas[k]), 2.0, pi / 2, ctl);
      u2[k] = solve_y(example2(betas[k]), 2.0, pi / 2, quad, ctl);
    }
    l.require(u1[0] > u1[1] && u1[1] > u1[2], fmt("example 1 decreasing: %.6f %.6f %.6f", u1[0], u1[1], u1[2]));
    l.require(u2[0] < u2[1] && u2[1] < u2[2], fmt("example 2 increasing: %.6f %.6f %.6f", u2[0], u2[1], u2[2]));
  });

  criterion("CLI determinism and CSV round trip", [&](Line& l) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "prab_acceptance";
    fs::remove_all(dir);
    bool same = true;
    for (const char* sub : {"a", "b"}) {
      const std::string cmd = std::string(PRAB_CLI) + " run --mode example1 --beta 0.5 --method both --out " +
                              (dir / sub).string() + " > /dev/null 2>&1";
      const int st = std::system(cmd.c_str());
      l.require(WIFEXITED(st) && WEXITSTATUS(st) == 0, std::string("CLI run ") + sub + " exits 0");
    }
    for (const char* f : {"example1_beta0.5_greens.csv", "example1_beta0.5_oracle.csv", "example1_beta0.5_diff.txt"})
      same = same && slurp(dir / "a" / f) == slurp(dir / "b" / f) && !slurp(dir / "a" / f).empty();
    l.require(same, "two identical runs give byte-identical files");
    const std::string text = slurp(dir / "a" / "example1_beta0.5_greens.csv");
    l.require(format_csv(parse_csv_text(text)) == text, "parse then format reproduces the CSV bytes");
    fs::remove_all(dir);
  });

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
