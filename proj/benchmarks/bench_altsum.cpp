#include "altsum/discover.hpp"
#include "altsum/family.hpp"
#include "altsum/power_sum.hpp"
#include "altsum/search.hpp"

#include <benchmark/benchmark.h>

using namespace altsum;

namespace {

void BM_alt_sum_naive(benchmark::State& state) {
    // x = (5^k - 3)/2: the family arguments, hundreds of digits at k = 200.
    const long k = state.range(0);
    HalfInt x = HalfInt::from_twice(ExactInt::pow(ExactInt(5), static_cast<unsigned long>(k)) -
                                    ExactInt(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(alt_sum_naive(x, 5));
    }
}
BENCHMARK(BM_alt_sum_naive)->Arg(10)->Arg(50)->Arg(200);

void BM_to_u_form(benchmark::State& state) {
    const unsigned d = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_u_form(d));
    }
}
BENCHMARK(BM_to_u_form)->Arg(8)->Arg(16)->Arg(64);

void BM_verify_range(benchmark::State& state) {
    const FamilySpec& f = *find_builtin("thm1-corrected");
    const long k_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_range(f, k_max));
    }
}
BENCHMARK(BM_verify_range)->Arg(50)->Arg(200);

void BM_invert_on_odd(benchmark::State& state) {
    UForm g = to_u_form(5);
    // Invert the value at u = 5^k: the deepest probes the searches make.
    ExactInt u = ExactInt::pow(ExactInt(5), static_cast<unsigned long>(state.range(0)));
    ExactInt value = poly_eval(g.poly, Ratio(u)).as_integer();
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_on_odd(g, value, Parity::OddOnly));
    }
}
BENCHMARK(BM_invert_on_odd)->Arg(4)->Arg(16)->Arg(64);

void BM_search_structured(benchmark::State& state) {
    SearchLimits limits{static_cast<long>(state.range(0)), ExactInt(1000000), Parity::OddOnly};
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_structured(5, ExactInt(5), RhsForm::two_powers(), limits));
    }
}
BENCHMARK(BM_search_structured)->Arg(16)->Arg(64);

void BM_brute_force_search(benchmark::State& state) {
    SearchLimits limits{40, ExactInt(state.range(0)), Parity::OddOnly};
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_search(5, ExactInt(5), RhsForm::two_powers(), limits));
    }
}
BENCHMARK(BM_brute_force_search)->Arg(10000)->Arg(100000);

void BM_discover(benchmark::State& state) {
    const unsigned d_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(discover_families(3, d_max, 2, 12, true));
    }
}
BENCHMARK(BM_discover)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
