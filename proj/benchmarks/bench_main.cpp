#include <benchmark/benchmark.h>

#include "resalg/algebra.hpp"
#include "resalg/constructions.hpp"
#include "resalg/enumeration.hpp"
#include "resalg/morphisms.hpp"
#include "resalg/structure.hpp"

using namespace resalg;

static void ValidateAxioms(benchmark::State& state) {
  const FiniteAlgebra a = boolean_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = validate_axioms(a);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(ValidateAxioms)->Arg(2)->Arg(3);

static void Endomorphisms(benchmark::State& state) {
  const FiniteAlgebra a = godel_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = homomorphisms(a, a);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(Endomorphisms)->DenseRange(4, 8);

static void EmbeddingSearch(benchmark::State& state) {
  const FiniteAlgebra small = catalog_get("I4");
  const FiniteAlgebra big = nm_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = embeddings(small, big);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(EmbeddingSearch)->Arg(6)->Arg(8);

static void FilterEnumeration(benchmark::State& state) {
  const FiniteAlgebra a = boolean_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto filters = all_filters(a);
    benchmark::DoNotOptimize(filters);
  }
}
BENCHMARK(FilterEnumeration)->Arg(2)->Arg(3);

static void CanonicalLabeling(benchmark::State& state) {
  const FiniteAlgebra a = ordinal_wnm(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cf = canonical_form(a);
    benchmark::DoNotOptimize(cf);
  }
}
BENCHMARK(CanonicalLabeling)->DenseRange(5, 8);

static void EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto algebras = enumerate_algebras(n);
    benchmark::DoNotOptimize(algebras);
  }
  state.SetComplexityN(n);
}
BENCHMARK(EnumerateClasses)->DenseRange(3, 6);

static void DiamondExtension(benchmark::State& state) {
  const FiniteAlgebra a = godel_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = diamond(a);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(DiamondExtension)->Arg(4)->Arg(6)->Arg(8);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
