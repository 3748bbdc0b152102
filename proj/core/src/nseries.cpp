#include "jtau/nseries.hpp"

#include <random>

namespace jtau {

namespace {

AlphabetPtr flatten_weights(const AlphabetPtr& alpha) {
	if (!alpha->has_weights()) return alpha;
	std::vector<std::pair<std::string, int>> gens;
	for (const auto& [name, weight] : alpha->generators()) gens.emplace_back(name, 1);
	return Alphabet::make(std::move(gens));
}

/* Same word over the grading alphabet (identical names and indices). */
ReducedWord regrade(const ReducedWord& w, const AlphabetPtr& target) {
	if (w.alphabet() == target) return w;
	ReducedWord out = ReducedWord::identity(target);
	for (const auto& s : w.syllables()) out = out * ReducedWord::gen(target, s.gen, s.exp);
	return out;
}

}  // namespace

SeriesSpec::SeriesSpec(Variant v, AlphabetPtr alpha, long p)
    : variant_(v), alpha_(std::move(alpha)), ring_(Ring::integers()), p_(p) {
	require(alpha_ != nullptr, "AlphabetMismatch", "null alphabet");
	switch (variant_) {
	case Variant::LowerCentral:
		graded_ = flatten_weights(alpha_);
		ring_ = Ring::integers();
		break;
	case Variant::Zassenhaus:
		graded_ = flatten_weights(alpha_);
		ring_ = Ring::prime_field(p_);
		break;
	case Variant::Weight: {
		bool weight_one = false;
		for (int i = 0; i < alpha_->size(); ++i) weight_one |= alpha_->weight(i) == 1;
		require(weight_one, "StructureMismatch",
		        "weight filtration needs at least one weight-1 generator");
		graded_ = alpha_;
		ring_ = Ring::rationals();
		break;
	}
	}
}

SeriesSpec SeriesSpec::lower_central(AlphabetPtr alpha) {
	return SeriesSpec(Variant::LowerCentral, std::move(alpha), 0);
}

SeriesSpec SeriesSpec::zassenhaus(AlphabetPtr alpha, long p) {
	return SeriesSpec(Variant::Zassenhaus, std::move(alpha), p);
}

SeriesSpec SeriesSpec::weight(AlphabetPtr alpha) {
	return SeriesSpec(Variant::Weight, std::move(alpha), 0);
}

SeriesSpec SeriesSpec::parse(const std::string& text, AlphabetPtr alpha) {
	if (text == "lcs") return lower_central(std::move(alpha));
	if (text == "weight") return weight(std::move(alpha));
	if (text.rfind("zassenhaus:", 0) == 0) {
		const std::string ptext = text.substr(11);
		require(!ptext.empty() && ptext.find_first_not_of("0123456789") == std::string::npos,
		        "SyntaxError", "expected zassenhaus:P with a numeric prime P");
		return zassenhaus(std::move(alpha), std::stol(ptext));
	}
	fail("SyntaxError", "unknown series \"" + text + "\" (lcs, zassenhaus:P, weight)");
}

std::string SeriesSpec::name() const {
	switch (variant_) {
	case Variant::LowerCentral: return "lcs";
	case Variant::Zassenhaus: return "zassenhaus:" + std::to_string(p_);
	case Variant::Weight: return "weight";
	}
	return "";
}

Degree series_degree(const ReducedWord& w, const SeriesSpec& spec, int cap) {
	require(cap >= 1, "CapTooSmall", "series degree needs cap >= 1");
	check_same_alphabet(w.alphabet(), spec.alphabet(), "series_degree");
	if (w.is_identity()) return Degree::infinity();
	TruncatedSeries s = magnus_expand(regrade(w, spec.graded_alphabet()), spec.ring(), cap);
	return s.valuation(true);
}

LieElement gr_class(const ReducedWord& w, const SeriesSpec& spec, int m) {
	require(m >= 1, "DegreeTooLow", "gr-classes start at degree 1");
	check_same_alphabet(w.alphabet(), spec.alphabet(), "gr_class");
	const AlphabetPtr& graded = spec.graded_alphabet();
	if (w.is_identity()) return LieElement::zero(graded, spec.ring());
	TruncatedSeries s = magnus_expand(regrade(w, graded), spec.ring(), m);
	Degree d = s.valuation(true);
	if (d.is_above_cap()) return LieElement::zero(graded, spec.ring());
	require(d.finite_value() >= m, "DegreeTooLow",
	        word_to_string(w) + " has degree " + d.to_string() + " < " + std::to_string(m));
	return tensor_to_lie(s.homogeneous_part(m));
}

namespace {

/* Lower bound usable in cap-aware comparisons: a finite answer is itself,
   AboveCap(N) gives N+1, the identity passes every check. */
long long degree_floor(const Degree& d) { return d.lower_bound(); }

std::vector<ReducedWord> sample_pool(const SeriesSpec& spec, std::uint64_t seed, int samples) {
	const AlphabetPtr& alpha = spec.alphabet();
	std::vector<ReducedWord> pool;
	for (int i = 0; i < alpha->size(); ++i) pool.push_back(ReducedWord::gen(alpha, i));
	/* deterministic commutator words push the pool into degrees 2 and 3 */
	for (int i = 0; i < alpha->size(); ++i)
		for (int j = 0; j < alpha->size(); ++j) {
			if (i == j) continue;
			ReducedWord c = commutator(ReducedWord::gen(alpha, i), ReducedWord::gen(alpha, j));
			pool.push_back(c);
			pool.push_back(commutator(c, ReducedWord::gen(alpha, i)));
		}
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> gen(0, alpha->size() - 1), sign(0, 1), len(1, 5);
	while (static_cast<int>(pool.size()) < samples) {
		ReducedWord w = ReducedWord::identity(alpha);
		int n = len(rng);
		for (int k = 0; k < n; ++k) w = w * ReducedWord::gen(alpha, gen(rng), sign(rng) ? 1 : -1);
		if (!w.is_identity()) pool.push_back(w);
	}
	return pool;
}

}  // namespace

CheckReport check_axioms(const SeriesSpec& spec, int cap, std::uint64_t seed, int samples,
                         const DegreeFn& degree_override) {
	DegreeFn deg = degree_override;
	if (!deg)
		deg = [](const ReducedWord& w, const SeriesSpec& sp, int N) {
			return series_degree(w, sp, N);
		};
	CheckReport rep;
	std::vector<ReducedWord> pool = sample_pool(spec, seed, samples);

	std::vector<long long> floors;
	floors.reserve(pool.size());
	for (const auto& w : pool) floors.push_back(degree_floor(deg(w, spec, cap)));

	std::mt19937_64 rng(seed + 1);
	std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
	std::vector<std::pair<size_t, size_t>> pairs;
	for (size_t i = 0; i < pool.size() && i < 8; ++i)
		for (size_t j = 0; j < pool.size() && j < 8; ++j) pairs.emplace_back(i, j);
	for (int k = 0; k < samples; ++k) pairs.emplace_back(pick(rng), pick(rng));

	for (auto [i, j] : pairs) {
		long long need = std::min<long long>(floors[i] + floors[j], cap + 1);
		Degree d = deg(commutator(pool[i], pool[j]), spec, cap);
		if (degree_floor(d) < need)
			rep.violations.push_back("deg([" + word_to_string(pool[i]) + ", " +
			                         word_to_string(pool[j]) + "]) = " + d.to_string() +
			                         " < " + std::to_string(need));
	}

	if (spec.variant() == SeriesSpec::Variant::Zassenhaus) {
		for (size_t i = 0; i < pool.size(); ++i) {
			long long need = std::min<long long>(floors[i] * spec.prime(), cap + 1);
			Degree d = deg(pool[i].pow(spec.prime()), spec, cap);
			if (degree_floor(d) < need)
				rep.violations.push_back("deg((" + word_to_string(pool[i]) + ")^" +
				                         std::to_string(spec.prime()) + ") = " +
				                         d.to_string() + " < " + std::to_string(need));
		}
	}

	if (spec.variant() == SeriesSpec::Variant::Weight) {
		const AlphabetPtr& alpha = spec.alphabet();
		const size_t layer_cap = 48;
		std::vector<std::vector<ReducedWord>> layer(std::max(3, std::min(cap, 6) + 1));
		for (int i = 0; i < alpha->size(); ++i)
			layer[1].push_back(ReducedWord::gen(alpha, i));
		for (int i = 0; i < alpha->size(); ++i)
			if (alpha->weight(i) == 2) layer[2].push_back(ReducedWord::gen(alpha, i));
		for (const auto& u : layer[1])
			for (const auto& v : layer[1]) {
				ReducedWord c = commutator(u, v);
				if (!c.is_identity() && layer[2].size() < layer_cap) layer[2].push_back(c);
			}
		for (int m = 3; m <= std::min(cap, 6); ++m) {
			auto extend = [&](const std::vector<ReducedWord>& a,
			                  const std::vector<ReducedWord>& b) {
				for (const auto& u : a)
					for (const auto& v : b) {
						if (layer[m].size() >= layer_cap) return;
						ReducedWord c = commutator(u, v);
						if (!c.is_identity()) layer[m].push_back(c);
					}
			};
			extend(layer[m - 1], layer[1]);
			extend(layer[m - 2], layer[2]);
		}
		for (int m = 1; m <= std::min(cap, 6); ++m)
			for (const auto& w : layer[m]) {
				Degree d = deg(w, spec, cap);
				if (degree_floor(d) < std::min(m, cap + 1))
					rep.violations.push_back("layer-" + std::to_string(m) + " word " +
					                         word_to_string(w) + " has degree " +
					                         d.to_string());
			}
	}

	return rep;
}

}  // namespace jtau
