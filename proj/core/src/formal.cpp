#include "jtau/formal.hpp"

#include <random>

namespace jtau {

namespace {

TruncatedSeries series_pow(const TruncatedSeries& s, long long e) {
	TruncatedSeries acc = TruncatedSeries::one(s.alphabet(), s.ring(), s.cap());
	TruncatedSeries base = s;
	while (e > 0) {
		if (e & 1) acc = acc * base;
		e >>= 1;
		if (e > 0) base = base * base;
	}
	return acc;
}

}  // namespace

Expansion::Expansion(AlphabetPtr alpha, int cap, std::vector<LieElement> tails)
    : alpha_(std::move(alpha)), cap_(cap), tails_(std::move(tails)) {
	require(cap_ >= 1, "CapTooSmall", "expansion needs cap >= 1");
	require(tails_.size() == static_cast<size_t>(alpha_->size()), "StructureMismatch",
	        "expansion needs one tail per generator");
	for (int i = 0; i < alpha_->size(); ++i) {
		const LieElement& t = tails_[i];
		check_same_alphabet(t.alphabet(), alpha_, "expansion tail");
		require(t.ring() == Ring::rationals(), "RingNotRational",
		        "expansion tails are rational");
		int wt = alpha_->weight(i);
		require(!t.is_zero() && t.min_degree() == wt &&
		            t.homogeneous_part(wt) ==
		                LieElement::generator(alpha_, Ring::rationals(), i),
		        "StructureMismatch",
		        "tail of " + alpha_->name(i) + " must start with the generator class");
		require(t.max_degree() <= cap_, "CapMismatch",
		        "tail of " + alpha_->name(i) + " exceeds the cap");
	}
	for (int i = 0; i < alpha_->size(); ++i) {
		theta_.push_back(series_exp(lie_to_tensor(tails_[i], cap_)));
		theta_inv_.push_back(series_exp(lie_to_tensor(-tails_[i], cap_)));
	}
}

Expansion Expansion::standard(AlphabetPtr alpha, int cap) {
	std::vector<LieElement> tails;
	for (int i = 0; i < alpha->size(); ++i)
		tails.push_back(LieElement::generator(alpha, Ring::rationals(), i));
	return Expansion(std::move(alpha), cap, std::move(tails));
}

TruncatedSeries expand_word(const Expansion& th, const ReducedWord& w) {
	check_same_alphabet(w.alphabet(), th.alphabet(), "expand_word");
	TruncatedSeries acc = TruncatedSeries::one(th.alphabet(), Ring::rationals(), th.cap());
	for (const auto& s : w.syllables()) {
		const TruncatedSeries& base = s.exp > 0 ? th.theta(s.gen) : th.theta_inverse(s.gen);
		acc = acc * series_pow(base, s.exp > 0 ? s.exp : -s.exp);
	}
	return acc;
}

OperatorEndo endo_identity(const AlphabetPtr& alpha, int cap) {
	OperatorEndo r{alpha, cap, {}};
	for (int i = 0; i < alpha->size(); ++i)
		r.images.push_back(TruncatedSeries::generator(alpha, Ring::rationals(), cap, i));
	return r;
}

TruncatedSeries endo_apply(const OperatorEndo& r, const TruncatedSeries& s) {
	check_same_alphabet(s.alphabet(), r.alpha, "endo_apply");
	require(s.cap() == r.cap, "CapMismatch", "operand cap differs from the operator cap");
	return substitute(s, r.images);
}

OperatorEndo endo_compose(const OperatorEndo& r, const OperatorEndo& s) {
	check_same_alphabet(r.alpha, s.alpha, "endo_compose");
	require(r.cap == s.cap, "CapMismatch", "operator caps differ");
	OperatorEndo out{r.alpha, r.cap, {}};
	for (const auto& img : s.images) out.images.push_back(endo_apply(r, img));
	return out;
}

bool endo_equal(const OperatorEndo& a, const OperatorEndo& b) {
	check_same_alphabet(a.alpha, b.alpha, "endo_equal");
	require(a.cap == b.cap, "CapMismatch", "operator caps differ");
	return a.images == b.images;
}

OperatorEndo conjugated_endo(const Expansion& th, const GroupMap& f) {
	check_same_alphabet(f.alpha, th.alphabet(), "conjugated_endo");
	require(verify_automorphism(f), "NotAnAutomorphism",
	        "map and witness do not invert each other");
	const AlphabetPtr& alpha = th.alphabet();
	const int cap = th.cap();
	std::vector<TruncatedSeries> logs, targets;
	for (int j = 0; j < alpha->size(); ++j) {
		logs.push_back(lie_to_tensor(th.tail(j), cap));
		targets.push_back(series_log(expand_word(th, f.images[j])));
	}
	OperatorEndo out{alpha, cap, {}};
	for (int i = 0; i < alpha->size(); ++i) {
		/* solve substitute(q, logs) = X_i degree by degree */
		TruncatedSeries xi = TruncatedSeries::generator(alpha, Ring::rationals(), cap, i);
		TruncatedSeries q = xi;
		TruncatedSeries err = xi - substitute(q, logs);
		for (int iter = 0; iter < cap && !err.is_zero(); ++iter) {
			q = q + err;
			err = xi - substitute(q, logs);
		}
		require(err.is_zero(), "InversionFailure",
		        "expansion logs do not generate; corrupt expansion");
		out.images.push_back(substitute(q, targets));
	}
	return out;
}

DerivationTail zero_tail(const EgLiePtr& eg, int cap) { return {eg, cap, {}}; }

bool tail_equal(const DerivationTail& a, const DerivationTail& b) {
	check_same_eglie(a.eg, b.eg, "tail_equal");
	require(a.cap == b.cap, "CapMismatch", "tail caps differ");
	if (a.parts.size() != b.parts.size()) return false;
	for (auto ia = a.parts.begin(), ib = b.parts.begin(); ia != a.parts.end(); ++ia, ++ib)
		if (ia->first != ib->first || !der_equal(ia->second, ib->second)) return false;
	return true;
}

DerivationTail tail_add(const DerivationTail& a, const DerivationTail& b) {
	check_same_eglie(a.eg, b.eg, "tail_add");
	require(a.cap == b.cap, "CapMismatch", "tail caps differ");
	DerivationTail out = a;
	for (const auto& [d, comp] : b.parts) {
		auto it = out.parts.find(d);
		if (it == out.parts.end()) {
			out.parts.emplace(d, comp);
		} else {
			it->second = der_add(it->second, comp);
			if (der_is_zero(it->second)) out.parts.erase(it);
		}
	}
	return out;
}

DerivationTail operator_log(const OperatorEndo& r, int m_hint) {
	require(m_hint >= 1, "NotUnipotent", "operator_log needs a degree gain of at least 1");
	const AlphabetPtr& alpha = r.alpha;
	const int cap = r.cap;
	require(r.images.size() == static_cast<size_t>(alpha->size()), "StructureMismatch",
	        "operator needs one image per generator");
	std::vector<TruncatedSeries> logs;
	for (int i = 0; i < alpha->size(); ++i) {
		TruncatedSeries xi = TruncatedSeries::generator(alpha, Ring::rationals(), cap, i);
		TruncatedSeries diff = r.images[i] - xi;
		require(diff.valuation().lower_bound() >= alpha->weight(i) + m_hint, "NotUnipotent",
		        "image of " + alpha->name(i) + " does not gain degree " +
		            std::to_string(m_hint));
		TruncatedSeries u = xi;
		TruncatedSeries acc(alpha, Ring::rationals(), cap);
		for (int k = 1; k <= cap + 1; ++k) {
			u = endo_apply(r, u) - u;
			if (u.is_zero()) break;
			mpq_class c(1, k);
			if (k % 2 == 0) c = -c;
			acc = acc + u.scale(c);
		}
		logs.push_back(std::move(acc));
	}
	EgLiePtr eg = EgLie::make(alpha, Ring::rationals());
	DerivationTail t = zero_tail(eg, cap);
	for (int d = 1; d <= cap; ++d) {
		Derivation comp = zero_derivation(eg, d);
		bool nonzero = false;
		for (int i = 0; i < alpha->size(); ++i) {
			TruncatedSeries part = logs[i].homogeneous_part(alpha->weight(i) + d);
			if (part.is_zero()) continue;
			comp.values[i] = tensor_to_lie(part);
			nonzero = true;
		}
		if (nonzero) t.parts.emplace(d, comp);
	}
	return t;
}

OperatorEndo exp_operator(const DerivationTail& t) {
	const AlphabetPtr& alpha = t.eg->pos();
	const int cap = t.cap;
	if (t.is_zero()) return endo_identity(alpha, cap);
	std::vector<TruncatedSeries> d_images;
	for (int i = 0; i < alpha->size(); ++i) {
		TruncatedSeries sum(alpha, Ring::rationals(), cap);
		for (const auto& [deg, comp] : t.parts)
			if (!comp.values[i].is_zero()) sum = sum + lie_to_tensor(comp.values[i], cap);
		d_images.push_back(std::move(sum));
	}
	OperatorEndo out{alpha, cap, {}};
	for (int i = 0; i < alpha->size(); ++i) {
		TruncatedSeries u = TruncatedSeries::generator(alpha, Ring::rationals(), cap, i);
		TruncatedSeries acc = u;
		mpq_class inv_fact = 1;
		for (int k = 1; k <= cap + 1; ++k) {
			u = derive(u, d_images);
			if (u.is_zero()) break;
			inv_fact /= k;
			acc = acc + u.scale(inv_fact);
		}
		out.images.push_back(std::move(acc));
	}
	return out;
}

DerivationTail bch_product(const DerivationTail& s, const DerivationTail& t) {
	check_same_eglie(s.eg, t.eg, "bch_product");
	require(s.cap == t.cap, "CapMismatch", "tail caps differ");
	if (s.is_zero()) return t;
	if (t.is_zero()) return s;
	int m = std::min(s.leading_degree(), t.leading_degree());
	return operator_log(endo_compose(exp_operator(s), exp_operator(t)), m);
}

Degree jfiltration_degree(const GroupRingElem& u, const Expansion& th) {
	TruncatedSeries acc(th.alphabet(), Ring::rationals(), th.cap());
	for (const auto& [c, w] : u) acc = acc + expand_word(th, w).scale(c);
	return acc.valuation();
}

namespace {

std::vector<ReducedWord> upsilon_pool(const AlphabetPtr& alpha, std::uint64_t seed) {
	std::vector<ReducedWord> pool;
	for (int i = 0; i < alpha->size(); ++i) pool.push_back(ReducedWord::gen(alpha, i));
	for (int i = 0; i < alpha->size(); ++i)
		for (int j = 0; j < alpha->size(); ++j) {
			if (i == j) continue;
			ReducedWord c = commutator(ReducedWord::gen(alpha, i), ReducedWord::gen(alpha, j));
			pool.push_back(c);
			pool.push_back(commutator(c, ReducedWord::gen(alpha, i)));
		}
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> gen(0, alpha->size() - 1), sign(0, 1), len(1, 4);
	for (int k = 0; k < 24; ++k) {
		ReducedWord w = ReducedWord::identity(alpha);
		int n = len(rng);
		for (int s = 0; s < n; ++s)
			w = w * ReducedWord::gen(alpha, gen(rng), sign(rng) ? 1 : -1);
		if (!w.is_identity()) pool.push_back(w);
	}
	return pool;
}

int rank_over_q(std::vector<std::vector<mpq_class>>& rows) {
	int rank = 0;
	size_t cols = rows.empty() ? 0 : rows[0].size();
	for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
		size_t pivot = rank;
		while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
		if (pivot == rows.size()) continue;
		std::swap(rows[rank], rows[pivot]);
		for (size_t r = rank + 1; r < rows.size(); ++r) {
			if (rows[r][c] == 0) continue;
			mpq_class factor = rows[r][c] / rows[rank][c];
			for (size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
		}
		++rank;
	}
	return rank;
}

}  // namespace

CheckReport upsilon_checks(const SeriesSpec& spec, const Expansion& th, int max_degree,
                           std::uint64_t seed, int samples) {
	require(spec.variant() == SeriesSpec::Variant::LowerCentral, "StructureMismatch",
	        "the group-ring harness runs on the lower central series");
	check_same_alphabet(spec.alphabet(), th.alphabet(), "upsilon_checks");
	const AlphabetPtr& alpha = th.alphabet();
	const int cap = th.cap();
	CheckReport rep;

	std::vector<ReducedWord> pool = upsilon_pool(alpha, seed);
	std::vector<long long> deg;
	for (const auto& w : pool) deg.push_back(series_degree(w, spec, cap).lower_bound());
	std::mt19937_64 rng(seed + 1);
	std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
	int done = 0;
	for (int tries = 0; tries < samples * 20 && done < samples; ++tries) {
		size_t i = pick(rng), j = pick(rng);
		if (deg[i] + deg[j] + 1 > cap) continue;
		const ReducedWord &x = pool[i], &y = pool[j];
		GroupRingElem u{{1, x * y},
		                {-1, y * x},
		                {-1, commutator(x, y)},
		                {1, ReducedWord::identity(alpha)}};
		Degree d = jfiltration_degree(u, th);
		if (d.lower_bound() < deg[i] + deg[j] + 1)
			rep.violations.push_back(
			    "product defect of (" + word_to_string(x) + ", " + word_to_string(y) +
			    ") has degree " + d.to_string() + " < " +
			    std::to_string(deg[i] + deg[j] + 1));
		++done;
	}

	const int r = alpha->size();
	for (int m = 1; m <= max_degree; ++m) {
		require(m <= cap, "CapTooSmall", "independence check needs cap >= degree");
		long long count = 1;
		for (int k = 0; k < m; ++k) {
			count *= r;
			require(count <= 256, "TooLarge", "degree-m layer exceeds 256 monomials");
		}
		/* row for the tuple (i_1..i_m): degree-m part of prod (theta(i_k) - 1) */
		std::vector<std::vector<mpq_class>> rows;
		TruncatedSeries one = TruncatedSeries::one(alpha, Ring::rationals(), m);
		std::vector<TruncatedSeries> factors;
		for (int i = 0; i < r; ++i) factors.push_back(th.theta(i).truncated(m) - one);
		for (long long tuple = 0; tuple < count; ++tuple) {
			TruncatedSeries p = one;
			long long rest = tuple;
			for (int k = 0; k < m; ++k) {
				p = p * factors[rest % r];
				rest /= r;
			}
			TruncatedSeries lead = p.homogeneous_part(m);
			std::vector<mpq_class> row(count, mpq_class(0));
			for (const auto& [key, c] : lead.terms()) {
				long long col = 0;
				for (unsigned char letter : key.second) col = col * r + letter;
				row[col] = c;
			}
			rows.push_back(std::move(row));
		}
		int rank = rank_over_q(rows);
		if (rank != count)
			rep.violations.push_back("degree-" + std::to_string(m) + " products span rank " +
			                         std::to_string(rank) + " of " + std::to_string(count));
	}

	return rep;
}

}  // namespace jtau
