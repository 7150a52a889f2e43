#include <benchmark/benchmark.h>

#include "qalg/bracket_kernels.hpp"
#include "qalg/dense.hpp"
#include "qalg/generator_sets.hpp"
#include "qalg/lie_engine.hpp"

namespace {

using namespace qalg;

struct BasisFixture {
  std::vector<lie::kernels::SparseVector> vecs;
  std::vector<lie::kernels::BracketTask> tasks;
  std::vector<DenseMatrix> dense;
  std::vector<lie::kernels::BracketTask> dense_tasks;
};

const BasisFixture& fixture() {
  static const BasisFixture f = [] {
    BasisFixture out;
    auto basis = lie::close(lie::sets::preset("u2n", 3));
    for (const auto& b : basis.basis) out.vecs.push_back(lie::kernels::from_operator(b));
    for (uint32_t i = 0; i < out.vecs.size(); ++i) {
      for (uint32_t j = i + 1; j < out.vecs.size(); ++j) out.tasks.push_back({i, j});
    }
    for (size_t k = 0; k < 24 && k < basis.basis.size(); ++k) out.dense.push_back(realize(basis.basis[k]));
    for (uint32_t i = 0; i < out.dense.size(); ++i) {
      for (uint32_t j = i + 1; j < out.dense.size(); ++j) out.dense_tasks.push_back({i, j});
    }
    return out;
  }();
  return f;
}

void BM_BracketBatchSerial(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(lie::kernels::bracket_batch_serial(f.vecs, f.tasks));
  st.SetItemsProcessed(st.iterations() * f.tasks.size());
}

void BM_BracketBatchParallel(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(lie::kernels::bracket_batch_parallel(f.vecs, f.tasks));
  st.SetItemsProcessed(st.iterations() * f.tasks.size());
}

void BM_DenseBracketSerial(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(lie::kernels::dense_bracket_batch_serial(f.dense, f.dense_tasks));
}

void BM_DenseBracketParallel(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(lie::kernels::dense_bracket_batch_parallel(f.dense, f.dense_tasks));
}

OperatorSum realize_input(int n) {
  OperatorSum op(n);
  for (int i = 0; i + 1 < n; ++i) {
    op += OperatorSum::pauli(n, i, 'X') * OperatorSum::pauli(n, i + 1, 'X');
    op += OperatorSum::pauli(n, i, 'Y') * OperatorSum::pauli(n, i + 1, 'Y');
    op += OperatorSum::pauli(n, i, 'Z');
  }
  return op;
}

void BM_RealizeSerial(benchmark::State& st) {
  const OperatorSum op = realize_input(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::realize_serial(op));
}

void BM_RealizeParallel(benchmark::State& st) {
  const OperatorSum op = realize_input(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::realize_parallel(op));
}

}  // namespace

BENCHMARK(BM_BracketBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketBatchParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseBracketSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseBracketParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizeSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizeParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
