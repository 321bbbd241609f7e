#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "prab/error.hpp"
#include "prab/simd/kernels.hpp"

using namespace prab::simd;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (isa_supported(isa)) out.push_back(isa);
  return out;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar horner matches the textbook loop") {
  const std::vector<double> c{1.0, -2.0, 0.5, 0.25};
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0, 10.0};
  std::vector<double> out(x.size());
  kernels(Isa::Scalar).horner_batch(c.data(), c.size(), x.data(), x.size(), 3.0, out.data());
  CHECK(out[0] == 1.0);
  CHECK(out[1] == doctest::Approx(-0.25));
  CHECK(out[2] == doctest::Approx(1.0 - 4.0 + 2.0 + 2.0));
  CHECK(out[3] == doctest::Approx(1.0 - 6.0 + 4.5 + 6.75));
  CHECK(out[4] == 0.0);  // beyond the cutoff
}

TEST_CASE("vector variants are bitwise equal to scalar") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1, 1);
  for (Isa isa : available()) {
    CAPTURE(isa_name(isa));
    const Dispatch& v = kernels(isa);
    const Dispatch& s = kernels(Isa::Scalar);
    for (std::size_t n_x : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 100u}) {
      std::vector<double> c(57), x(n_x), o1(n_x), o2(n_x);
      for (auto& e : c) e = U(rng) / 3;
      for (auto& e : x) e = 3 * std::abs(U(rng));
      if (n_x > 2) x[1] = std::nan("");
      s.horner_batch(c.data(), c.size(), x.data(), n_x, 2.5, o1.data());
      v.horner_batch(c.data(), c.size(), x.data(), n_x, 2.5, o2.data());
      CHECK(same_bits(o1, o2));

      const std::size_t rows = 13, stride = n_x + 5;
      std::vector<double> m(rows * stride), w(rows), a1(n_x, 0.5), a2(n_x, 0.5);
      for (auto& e : m) e = U(rng);
      for (auto& e : w) e = U(rng);
      s.weighted_row_sum(m.data(), rows, stride, w.data(), a1.data(), n_x);
      v.weighted_row_sum(m.data(), rows, stride, w.data(), a2.data(), n_x);
      CHECK(same_bits(a1, a2));
    }
  }
}

TEST_CASE("nan inputs map to zero past the cutoff test") {
  const std::vector<double> c{1.0, 1.0};
  const std::vector<double> x{std::nan("")};
  std::vector<double> out(1, 7.0);
  kernels(Isa::Scalar).horner_batch(c.data(), c.size(), x.data(), 1, 1.0, out.data());
  CHECK(out[0] == 0.0);
}

TEST_CASE("runtime dispatch returns a supported variant") {
  CHECK(isa_supported(kernels().isa));
  CHECK(isa_supported(Isa::Scalar));
}

TEST_CASE("requesting an unsupported variant throws") {
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (!isa_supported(isa)) CHECK_THROWS_AS(kernels(isa), prab::Error);
}
