#include "dc1lab/chain_graph.hpp"
#include "dc1lab/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace dc1lab;

namespace {

const SymbolSeq& seq_a() {
    static const SymbolSeq s = make_periodic(Word(4000, 0), Word{0, 1, 1, 0, 1});
    return s;
}
const SymbolSeq& seq_b() {
    static const SymbolSeq s = make_periodic(Word{1, 0}, Word{0, 1, 1, 0, 1, 1, 0});
    return s;
}

std::vector<std::uint16_t> block_entries(std::size_t n) {
    std::vector<std::uint16_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>((i / 4096) % 2);
    return e;
}

const std::vector<SymbolSeq> palette{parse_symbol_seq("(0)"), parse_symbol_seq("(1)")};

template <bool Parallel>
void pair_exponents(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) {
        auto e = Parallel ? kernels::parallel::pair_exponents(seq_a(), seq_b(), n)
                          : kernels::serial::pair_exponents(seq_a(), seq_b(), n);
        benchmark::DoNotOptimize(e.data());
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void tracking_exponents(benchmark::State& st) {
    const auto entries = block_entries(static_cast<std::size_t>(st.range(0)));
    const SymbolSeq y = parse_symbol_seq("(01)");
    for (auto _ : st) {
        auto e = Parallel ? kernels::parallel::tracking_exponents(y, entries, palette)
                          : kernels::serial::tracking_exponents(y, entries, palette);
        benchmark::DoNotOptimize(e.data());
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void histograms(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const auto e = kernels::serial::pair_exponents(seq_a(), seq_b(), n);
    const std::vector<std::size_t> cps{n / 4, n / 2, n};
    for (auto _ : st) {
        auto h = Parallel ? kernels::parallel::histograms_at(e, cps) : kernels::serial::histograms_at(e, cps);
        benchmark::DoNotOptimize(h.data());
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void longest_run(benchmark::State& st) {
    std::vector<char> bits(static_cast<std::size_t>(st.range(0)));
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (i * 2654435761u) % 97 != 0;
    for (auto _ : st) {
        auto r = Parallel ? kernels::parallel::longest_run(bits) : kernels::serial::longest_run(bits);
        benchmark::DoNotOptimize(r);
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void discretize_boxes(benchmark::State& st) {
    const auto spec = tent_map();
    const auto n = static_cast<std::size_t>(st.range(0));
    const Rational delta(1, static_cast<long long>(n));
    for (auto _ : st) {
        auto g = Parallel ? discretize(spec, n, delta) : discretize_serial(spec, n, delta);
        benchmark::DoNotOptimize(g.size());
    }
}

}  // namespace

BENCHMARK(pair_exponents<false>)->Name("pair_exponents/serial")->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(pair_exponents<true>)->Name("pair_exponents/parallel")->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(tracking_exponents<false>)->Name("tracking_exponents/serial")->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(tracking_exponents<true>)->Name("tracking_exponents/parallel")->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(histograms<false>)->Name("histograms_at/serial")->Arg(1 << 22);
BENCHMARK(histograms<true>)->Name("histograms_at/parallel")->Arg(1 << 22);
BENCHMARK(longest_run<false>)->Name("longest_run/serial")->Arg(1 << 24);
BENCHMARK(longest_run<true>)->Name("longest_run/parallel")->Arg(1 << 24);
BENCHMARK(discretize_boxes<false>)->Name("discretize/serial")->Arg(256)->Arg(1024);
BENCHMARK(discretize_boxes<true>)->Name("discretize/parallel")->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
