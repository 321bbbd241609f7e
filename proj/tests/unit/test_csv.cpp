#include <cstring>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "prab/csv.hpp"
#include "prab/error.hpp"

using namespace prab;

namespace {

SolutionField grid(std::size_t nt, std::size_t nx) {
  SolutionField f;
  for (std::size_t i = 0; i < nt; ++i) f.t_nodes.push_back(2.0 * (i + 1) / nt);
  for (std::size_t j = 0; j < nx; ++j) f.x_nodes.push_back(3.141592653589793 * j / (nx > 1 ? nx - 1 : 1));
  f.values.assign(nt * nx, 0.0);
  return f;
}

}  // namespace

TEST_CASE("1x1 zero field is a header and one row") {
  SolutionField f = grid(1, 1);
  f.t_nodes[0] = 0.5;
  CHECK(format_csv(f) == "t,x,u\n0.5,0,0\n");
}

TEST_CASE("round trip is bitwise") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1, 1);
  SolutionField f = grid(7, 5);
  for (auto& v : f.values) v = U(rng) * std::pow(10.0, 40 * U(rng));
  f.values[3] = 5e-324;
  f.values[4] = -0.0;
  f.values[5] = 1.0 / 3.0;
  const SolutionField g = parse_csv_text(format_csv(f));
  REQUIRE(g.values.size() == f.values.size());
  CHECK(std::memcmp(g.values.data(), f.values.data(), f.values.size() * sizeof(double)) == 0);
  CHECK(g.t_nodes == f.t_nodes);
  CHECK(g.x_nodes == f.x_nodes);
  CHECK(format_csv(g) == format_csv(f));
}

TEST_CASE("21x21 grid gives 442 lines") {
  const std::string s = format_csv(grid(21, 21));
  CHECK(std::count(s.begin(), s.end(), '\n') == 442);
  CHECK(s.find('\r') == std::string::npos);
}

TEST_CASE("file round trip and io errors") {
  const auto dir = std::filesystem::temp_directory_path() / "prab_csv_test";
  std::filesystem::create_directories(dir);
  SolutionField f = grid(3, 4);
  f.values[7] = 0.1;
  const std::string path = (dir / "f.csv").string();
  emit_csv(f, path);
  CHECK(parse_csv(path).values == f.values);
  CHECK_THROWS_AS(emit_csv(f, (dir / "missing" / "f.csv").string()), Error);
  CHECK_THROWS_AS(parse_csv((dir / "nope.csv").string()), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_csv_text("a,b,c\n"), Error);
  CHECK_THROWS_AS(parse_csv_text("t,x,u\n1,2\n"), Error);
  CHECK_THROWS_AS(parse_csv_text("t,x,u\n1,2,x\n"), Error);
  SolutionField bad = grid(1, 2);
  bad.values[1] = std::nan("");
  CHECK_THROWS_AS(format_csv(bad), Error);
}
