#include <benchmark/benchmark.h>

#include <vector>

#include "qlie/bialgebra.hpp"
#include "qlie/drinfeld_double.hpp"
#include "qlie/pbw.hpp"
#include "qlie/quantize.hpp"
#include "qlie/scalar.hpp"

namespace {

// Full deformation of the rotation bialgebra by target order.
void BM_quantize_rotation(benchmark::State& state) {
    const qlie::LieBialgebra b = qlie::builtin_su2();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qlie::quantize(b, order));
}
BENCHMARK(BM_quantize_rotation)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

// First deformation order of the triangular-family doubles by size.
void BM_quantize_triangular_double(benchmark::State& state) {
    const qlie::LieBialgebra b = qlie::gl_tn_double_mixed(static_cast<int>(state.range(0))).algebra;
    for (auto _ : state) benchmark::DoNotOptimize(qlie::quantize(b, 1));
}
BENCHMARK(BM_quantize_triangular_double)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

// Double construction plus its validity checks by family size.
void BM_build_and_check_double(benchmark::State& state) {
    const qlie::LieBialgebra half = qlie::gl_tn_half(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const qlie::DoubleAlgebra d = qlie::build_double(half);
        benchmark::DoNotOptimize(qlie::run_bialgebra_checks(d.algebra).all_ok());
        benchmark::DoNotOptimize(qlie::check_pairing_invariance(d));
    }
}
BENCHMARK(BM_build_and_check_double)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

// Normal ordering of a fully reversed word in the deformed algebra.
void BM_normal_order_deformed(benchmark::State& state) {
    const qlie::QuantizationResult r = qlie::quantize(qlie::builtin_su2(), 4);
    const int len = static_cast<int>(state.range(0));
    std::vector<int> word;
    for (int i = 0; i < len; ++i) word.push_back(2 - (i % 3)); // descending generator cycle
    for (auto _ : state)
        benchmark::DoNotOptimize(
            r.algebra.normal_order_word(word, 0, qlie::Scalar::one(), r.algebra.zcap()));
}
BENCHMARK(BM_normal_order_deformed)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

// Coproduct of a high power of a ladder generator under the deformed product.
void BM_coproduct_power(benchmark::State& state) {
    const qlie::QuantizationResult r = qlie::quantize(qlie::builtin_su2(), 4);
    const int n = r.algebra.num_gens();
    qlie::Monomial m = qlie::Monomial::unit(n);
    for (int i = 0; i < state.range(0); ++i) m = m.times(1);
    for (auto _ : state) {
        r.coproduct.invalidate_cache();
        benchmark::DoNotOptimize(r.coproduct.apply_monomial(r.algebra, m, r.algebra.zcap()));
    }
}
BENCHMARK(BM_coproduct_power)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

// Exact field arithmetic on small extension-field values.
void BM_scalar_field_ops(benchmark::State& state) {
    const qlie::Scalar a = qlie::Scalar::of_fraction(3, 7) + qlie::Scalar::sqrt2();
    const qlie::Scalar b = qlie::Scalar::i() * qlie::Scalar::of_fraction(-5, 11) +
                           qlie::Scalar::of_fraction(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
        benchmark::DoNotOptimize((a + b).inverse());
    }
}
BENCHMARK(BM_scalar_field_ops);

} // namespace

BENCHMARK_MAIN();
