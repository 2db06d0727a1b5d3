#include <benchmark/benchmark.h>

#include <arithdeg/arith_degree.hpp>
#include <arithdeg/hilbert.hpp>
#include <arithdeg/parse.hpp>
#include <arithdeg/random.hpp>
#include <arithdeg/resolution.hpp>
#include <arithdeg/theorems.hpp>

using namespace arithdeg;

namespace {

Ideal from_text(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> out;
  for (const char* g : gens) out.push_back(parse_poly(g, r));
  return Ideal(r, out);
}

// Homogenised cyclic 4-roots.
Ideal cyclic4(Field field) {
  const RingPtr r = PolyRing::make(field, {"a", "b", "c", "d", "h"});
  return from_text(r, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                       "a*b*c*d - h^4"});
}

void BM_GroebnerCyclic4(benchmark::State& state) {
  const Field field = state.range(0) ? Field::prime(32003) : Field::rationals();
  for (auto _ : state) {
    const Ideal i = cyclic4(field);
    benchmark::DoNotOptimize(i.groebner_basis().size());
  }
}
BENCHMARK(BM_GroebnerCyclic4)->Arg(0)->Arg(1);

void BM_HilbertNumerator(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const MonomialIdeal m = random_monomial_ideal({n, 3 * n, 6}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(m).numerator.degree());
}
BENCHMARK(BM_HilbertNumerator)->Arg(4)->Arg(8)->Arg(12);

void BM_ResolutionTwistedCubic(benchmark::State& state) {
  const RingPtr r = PolyRing::standard(4);
  for (auto _ : state) {
    const Ideal i = from_text(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    benchmark::DoNotOptimize(free_resolution(i).betti.regularity());
  }
}
BENCHMARK(BM_ResolutionTwistedCubic);

void BM_ResolutionMonomial(benchmark::State& state) {
  Rng rng(2);
  const RingPtr r = PolyRing::standard(5);
  const MonomialIdeal m = random_monomial_ideal({5, 8, 4}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(Ideal::from_monomials(r, m)).length());
}
BENCHMARK(BM_ResolutionMonomial);

void BM_ArithProfileGeneral(benchmark::State& state) {
  const RingPtr r = PolyRing::standard(4);
  for (auto _ : state) {
    const Ideal i = from_text(r, {"x0^2 + 2*x0*x1 + x1^2", "x0*x1 - x0*x2 + x1^2 - x1*x2", "x3^3"});
    benchmark::DoNotOptimize(arith_profile(i).entries.size());
  }
}
BENCHMARK(BM_ArithProfileGeneral);

void BM_ExampleOne(benchmark::State& state) {
  const int padding = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_example1(padding).verdict);
}
BENCHMARK(BM_ExampleOne)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
