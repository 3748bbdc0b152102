#include <benchmark/benchmark.h>

#include <random>

#include "jtau/formal.hpp"
#include "jtau/sampler.hpp"

using namespace jtau;

namespace {

AlphabetPtr ab() {
	static AlphabetPtr a = Alphabet::make_unweighted({"a", "b"});
	return a;
}

ReducedWord deep_word() {
	ReducedWord a = ReducedWord::gen(ab(), 0), b = ReducedWord::gen(ab(), 1);
	return commutator(commutator(a, b), commutator(b, a.inverse())) * a * b.pow(-3);
}

void BM_MagnusExpand(benchmark::State& state) {
	ReducedWord w = deep_word();
	int cap = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(magnus_expand(w, Ring::integers(), cap));
}
BENCHMARK(BM_MagnusExpand)->Arg(4)->Arg(6)->Arg(8);

void BM_SeriesMultiply(benchmark::State& state) {
	int cap = static_cast<int>(state.range(0));
	TruncatedSeries u = magnus_expand(deep_word(), Ring::rationals(), cap);
	TruncatedSeries v = magnus_expand(deep_word().inverse() * deep_word(), Ring::rationals(),
	                                  cap);
	for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_SeriesMultiply)->Arg(6)->Arg(8);

void BM_LyndonBracketings(benchmark::State& state) {
	// the word table itself is memoized per weight profile, so measure the
	// uncached part: factoring every basis word and building its group word
	int degree = static_cast<int>(state.range(0));
	AlphabetPtr alpha = ab();
	lyndon_words(alpha, degree);
	for (auto _ : state) {
		long total = 0;
		for (const Mono& w : lyndon_words(alpha, degree))
			total += bracketing_to_group_word(alpha, w).length();
		benchmark::DoNotOptimize(total);
	}
}
BENCHMARK(BM_LyndonBracketings)->Arg(8)->Arg(10)->Arg(12);

void BM_TensorToLie(benchmark::State& state) {
	int degree = static_cast<int>(state.range(0));
	std::mt19937_64 rng(1);
	LieElement x = random_lie(rng, ab(), Ring::rationals(), degree);
	TruncatedSeries s = lie_to_tensor(x, degree);
	for (auto _ : state) benchmark::DoNotOptimize(tensor_to_lie(s));
}
BENCHMARK(BM_TensorToLie)->Arg(5)->Arg(7);

void BM_FiltrationDegreeAndTau(benchmark::State& state) {
	SeriesSpec spec = SeriesSpec::lower_central(ab());
	ReducedWord a = ReducedWord::gen(ab(), 0), b = ReducedWord::gen(ab(), 1);
	GroupMap f = GroupMap::inner(commutator(a, b));
	int cap = static_cast<int>(state.range(0));
	for (auto _ : state) {
		FilteredAut fa = make_filtered(f, spec, cap);
		benchmark::DoNotOptimize(tau(fa));
	}
}
BENCHMARK(BM_FiltrationDegreeAndTau)->Arg(5)->Arg(6);

void BM_BchProduct(benchmark::State& state) {
	int cap = static_cast<int>(state.range(0));
	Expansion th = Expansion::standard(ab(), cap);
	ReducedWord a = ReducedWord::gen(ab(), 0), b = ReducedWord::gen(ab(), 1);
	DerivationTail s = operator_log(conjugated_endo(th, GroupMap::inner(a)), 1);
	DerivationTail t = operator_log(conjugated_endo(th, GroupMap::inner(b)), 1);
	for (auto _ : state) benchmark::DoNotOptimize(bch_product(s, t));
}
BENCHMARK(BM_BchProduct)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
