#include "icis/family.hpp"
#include "icis/ideal.hpp"
#include "icis/problem.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace icis;

PolynomialMatrix dense_jacobian() {
    const RingPtr ring = make_ring({"a", "b", "c", "d", "e", "g"});
    std::vector<Polynomial> maps;
    for (const char* text : {"a^3 + b*c*d - e^2*g", "a*b^2 + c^3 - d*e*g + g^4", "a*c*e + b^2*d^2 - g^3 + a^2*b",
                             "d^3 + e^3 + a*b*c*g"}) {
        maps.push_back(parse_polynomial(text, ring));
    }
    return jacobian_matrix(maps, ring->names());
}

void BM_MaximalMinorsSerial(benchmark::State& state) {
    const PolynomialMatrix m = dense_jacobian();
    for (auto _ : state) benchmark::DoNotOptimize(maximal_minors_serial(m));
}

void BM_MaximalMinorsParallel(benchmark::State& state) {
    const PolynomialMatrix m = dense_jacobian();
    for (auto _ : state) benchmark::DoNotOptimize(maximal_minors(m));
}

DeformationFamily cusp_family() {
    const RingPtr ring = make_ring({"t", "x", "y"});
    return DeformationFamily::function_deformation({parse_polynomial("x^3 - y^5", ring)},
                                                   parse_polynomial("x + t*y", ring), "t");
}

const std::vector<Rational> kSamples{Rational(1), Rational(1, 2), Rational(1, 3), Rational(2, 3)};

void BM_CriticalReportsSerial(benchmark::State& state) {
    const DeformationFamily fam = cusp_family();
    for (auto _ : state) benchmark::DoNotOptimize(critical_locus_reports_serial(fam, kSamples));
}

void BM_CriticalReportsParallel(benchmark::State& state) {
    const DeformationFamily fam = cusp_family();
    for (auto _ : state) benchmark::DoNotOptimize(critical_locus_reports(fam, kSamples));
}

}  // namespace

BENCHMARK(BM_MaximalMinorsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalMinorsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriticalReportsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriticalReportsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
