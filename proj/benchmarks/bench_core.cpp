#include <benchmark/benchmark.h>

#include "rrkit/bpoly.hpp"
#include "rrkit/factor.hpp"
#include "rrkit/hyperelliptic.hpp"
#include "rrkit/riemann_roch_p1.hpp"

using namespace rrkit;

namespace {

const UPoly z = UPoly::variable();

UPoly dense(int degree, int seed) {
  std::vector<Rat> c;
  for (int k = 0; k <= degree; ++k) c.push_back(Rat((seed * 7919 + k * 104729) % 19 - 9, 1 + k % 3));
  c.back() = Rat(1);
  return UPoly(c);
}

void BM_Gcd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UPoly g = dense(n / 2, 1);
  const UPoly a = g * dense(n / 2, 2), b = g * dense(n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Arg(8)->Arg(16)->Arg(32);

void BM_Factor(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const UPoly f = z.pow(n) - UPoly(1);
  for (auto _ : state) benchmark::DoNotOptimize(factor(f));
}
BENCHMARK(BM_Factor)->Arg(6)->Arg(12)->Arg(24);

void BM_Swinnerton(benchmark::State& state) {
  // Irreducible, but splits into linear and quadratic factors modulo every prime.
  const UPoly f = z.pow(8) - UPoly(40) * z.pow(6) + UPoly(352) * z.pow(4) - UPoly(960) * z.pow(2) + UPoly(576);
  for (auto _ : state) benchmark::DoNotOptimize(factor(f));
}
BENCHMARK(BM_Swinnerton);

void BM_Discriminant(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<UPoly> coeffs;
  for (int i = 0; i < m; ++i) coeffs.push_back(dense(2 * (m - i), i + 5));
  coeffs.push_back(UPoly(1));
  const BPoly f = BPoly::from_w_coefficients(coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_w(f));
}
BENCHMARK(BM_Discriminant)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_WronskianOrder(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  UPoly p(1);
  for (int r = 0; r <= 2 * g; ++r) p = p * UPoly::linear_root(Rat(r));
  const HypCurve c(p);
  const CurvePlace inf = CurvePlace::at_infinity(c);
  for (auto _ : state) benchmark::DoNotOptimize(wronskian_order_at(c, inf));
}
BENCHMARK(BM_WronskianOrder)->Arg(2)->Arg(3)->Arg(4);

void BM_LSpace(benchmark::State& state) {
  Divisor d;
  d.add(Place::finite(z.pow(2) + UPoly(1)), 3);
  d.add(Place::finite(z.pow(3) - UPoly(2)), -1);
  d.add(Place::infinity(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(riemann_roch_verify_p1(d));
}
BENCHMARK(BM_LSpace)->Arg(4)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
