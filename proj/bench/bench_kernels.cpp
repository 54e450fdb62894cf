#include <benchmark/benchmark.h>

#include "hopfkit/examples.hpp"
#include "hopfkit/kernels.hpp"

using namespace hopfkit;

namespace {

// (μ⊗id⊗id) and (id⊗c⊗id) for ℚ[C_n]: the four-factor composites the truss compatibility law builds.
struct Operands {
  kernels::CscMatrix lhs;
  kernels::CscMatrix rhs;
};

Operands operands(std::size_t order) {
  auto h = group_algebra(cyclic_group(order), FieldSpec::rationals());
  auto id = h.obj.id();
  auto lhs = tensor(h.mu, id, id);
  auto rhs = tensor(id, h.obj.c(), id);
  return {lhs.csc(), rhs.csc()};
}

template <auto Kernel>
void bm_multiply(benchmark::State& state) {
  auto ops = operands(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ops.lhs, ops.rhs, FieldSpec::rationals()));
}

template <auto Kernel>
void bm_kronecker(benchmark::State& state) {
  auto h = group_algebra(cyclic_group(static_cast<std::size_t>(state.range(0))), FieldSpec::rationals());
  auto a = tensor(h.mu, h.obj.id()).csc();
  auto b = h.delta.csc();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

}  // namespace

BENCHMARK(bm_multiply<&kernels::serial::multiply>)->Name("multiply/serial")->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_multiply<&kernels::parallel::multiply>)->Name("multiply/parallel")->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_kronecker<&kernels::serial::kronecker>)->Name("kronecker/serial")->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_kronecker<&kernels::parallel::kronecker>)->Name("kronecker/parallel")->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
