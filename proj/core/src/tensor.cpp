#include "jtau/tensor.hpp"

#include <unordered_map>

namespace jtau {

int mono_degree(const Alphabet& alpha, const Mono& m) {
	int d = 0;
	for (unsigned char c : m) d += alpha.weight(c);
	return d;
}

Mono mono_of_letters(const std::vector<int>& letters) {
	Mono m;
	m.reserve(letters.size());
	for (int l : letters) m.push_back(static_cast<char>(l));
	return m;
}

std::string mono_to_string(const Alphabet& alpha, const Mono& m) {
	if (m.empty()) return "1";
	std::string out;
	for (unsigned char c : m) {
		if (!out.empty()) out += ' ';
		out += alpha.name(c);
	}
	return out;
}

TruncatedSeries::TruncatedSeries(AlphabetPtr alpha, Ring ring, int cap)
    : alpha_(std::move(alpha)), ring_(ring), cap_(cap) {
	require(cap_ >= 0, "BadCap", "cap must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(AlphabetPtr alpha, Ring ring, int cap,
                                          const mpq_class& c) {
	TruncatedSeries s(std::move(alpha), ring, cap);
	s.add_term(Mono(), c);
	return s;
}

TruncatedSeries TruncatedSeries::one(AlphabetPtr alpha, Ring ring, int cap) {
	return constant(std::move(alpha), ring, cap, 1);
}

TruncatedSeries TruncatedSeries::generator(AlphabetPtr alpha, Ring ring, int cap, int i) {
	TruncatedSeries s(alpha, ring, cap);
	require(i >= 0 && i < alpha->size(), "UnknownGenerator", "generator index out of range");
	s.add_term(Mono(1, static_cast<char>(i)), 1);
	return s;
}

mpq_class TruncatedSeries::coeff(const Mono& m) const {
	auto it = terms_.find({mono_degree(*alpha_, m), m});
	return it == terms_.end() ? mpq_class(0) : it->second;
}

void TruncatedSeries::add_term(const Mono& m, const mpq_class& c) {
	int d = mono_degree(*alpha_, m);
	if (d > cap_) return;
	Key k{d, m};
	auto it = terms_.find(k);
	if (it == terms_.end()) {
		mpq_class r = ring_.reduce(c);
		if (sgn(r) != 0) terms_.emplace(std::move(k), std::move(r));
	} else {
		it->second = ring_.add(it->second, c);
		if (sgn(it->second) == 0) terms_.erase(it);
	}
}

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b, const char* where) {
	check_same_alphabet(a.alphabet(), b.alphabet(), where);
	check_same_ring(a.ring(), b.ring(), where);
	if (a.cap() != b.cap())
		fail("CapMismatch", std::string(where) + ": caps " + std::to_string(a.cap()) +
		                        " vs " + std::to_string(b.cap()));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
	check_compatible(*this, o, "series sum");
	TruncatedSeries r = *this;
	for (const auto& [k, c] : o.terms_) r.add_term(k.second, c);
	return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
	check_compatible(*this, o, "series difference");
	TruncatedSeries r = *this;
	for (const auto& [k, c] : o.terms_) r.add_term(k.second, -c);
	return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
	TruncatedSeries r(alpha_, ring_, cap_);
	for (const auto& [k, c] : terms_) r.terms_.emplace(k, ring_.neg(c));
	return r;
}

TruncatedSeries TruncatedSeries::scale(const mpq_class& c) const {
	TruncatedSeries r(alpha_, ring_, cap_);
	if (ring_.is_zero(ring_.reduce(c))) return r;
	for (const auto& [k, v] : terms_) {
		mpq_class w = ring_.mul(v, c);
		if (sgn(w) != 0) r.terms_.emplace(k, std::move(w));
	}
	return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
	check_compatible(*this, o, "series product");
	TruncatedSeries r(alpha_, ring_, cap_);
	for (const auto& [ka, ca] : terms_) {
		if (ka.first > cap_) break;
		for (const auto& [kb, cb] : o.terms_) {
			if (ka.first + kb.first > cap_) break;  // o.terms_ is degree-sorted
			r.add_term(ka.second + kb.second, ca * cb);
		}
	}
	return r;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int d) const {
	TruncatedSeries r(alpha_, ring_, cap_);
	for (auto it = terms_.lower_bound({d, Mono()}); it != terms_.end() && it->first.first == d;
	     ++it)
		r.terms_.emplace(it->first, it->second);
	return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_cap) const {
	require(new_cap <= cap_, "CapMismatch", "cannot raise the cap of a truncated series");
	TruncatedSeries r(alpha_, ring_, new_cap);
	for (const auto& [k, c] : terms_) {
		if (k.first > new_cap) break;
		r.terms_.emplace(k, c);
	}
	return r;
}

TruncatedSeries TruncatedSeries::in_ring(const Ring& r) const {
	TruncatedSeries out(alpha_, r, cap_);
	for (const auto& [k, c] : terms_) out.add_term(k.second, c);
	return out;
}

Degree TruncatedSeries::valuation(bool ignore_constant) const {
	for (const auto& [k, c] : terms_) {
		if (ignore_constant && k.first == 0) continue;
		return Degree::finite(k.first);
	}
	return Degree::above_cap(cap_);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
	check_compatible(*this, o, "series comparison");
	return terms_ == o.terms_;
}

// ---------------------------------------------------------------- magnus

namespace {

/* sum_{k<=K} binom(e,k) X_i^k; exact for any integer e via the generalized
   binomial, which expands both positive powers and inverses. */
TruncatedSeries syllable_series(const AlphabetPtr& alpha, const Ring& ring, int cap,
                                const Syllable& s) {
	TruncatedSeries out(alpha, ring, cap);
	int w = alpha->weight(s.gen);
	mpz_class e(static_cast<long>(s.exp));
	mpz_class binom = 1;
	for (int k = 0; k * w <= cap; ++k) {
		if (k > 0) {
			binom *= e - (k - 1);
			mpz_class kk(k);
			mpz_divexact(binom.get_mpz_t(), binom.get_mpz_t(), kk.get_mpz_t());
		}
		out.add_term(Mono(static_cast<size_t>(k), static_cast<char>(s.gen)), mpq_class(binom));
	}
	return out;
}

}  // namespace

TruncatedSeries magnus_expand(const ReducedWord& w, const Ring& ring, int cap) {
	TruncatedSeries acc = TruncatedSeries::one(w.alphabet(), ring, cap);
	for (const auto& s : w.syllables())
		acc = acc * syllable_series(w.alphabet(), ring, cap, s);
	return acc;
}

// --------------------------------------------------------------- exp, log

TruncatedSeries series_exp(const TruncatedSeries& s) {
	require(s.ring().kind == Ring::Kind::Rationals, "RingNotRational",
	        "series_exp needs rational coefficients");
	require(sgn(s.constant_term()) == 0, "BadConstantTerm",
	        "series_exp needs zero constant term");
	TruncatedSeries acc = TruncatedSeries::one(s.alphabet(), s.ring(), s.cap());
	TruncatedSeries term = acc;
	for (int k = 1; k <= s.cap(); ++k) {
		term = (term * s).scale(mpq_class(1, k));
		if (term.is_zero()) break;
		acc = acc + term;
	}
	return acc;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
	require(s.ring().kind == Ring::Kind::Rationals, "RingNotRational",
	        "series_log needs rational coefficients");
	require(s.constant_term() == 1, "BadConstantTerm", "series_log needs constant term 1");
	TruncatedSeries u = s - TruncatedSeries::one(s.alphabet(), s.ring(), s.cap());
	TruncatedSeries acc(s.alphabet(), s.ring(), s.cap());
	TruncatedSeries pw = TruncatedSeries::one(s.alphabet(), s.ring(), s.cap());
	for (int k = 1; k <= s.cap(); ++k) {
		pw = pw * u;
		if (pw.is_zero()) break;
		acc = acc + pw.scale(mpq_class(k % 2 ? 1 : -1, k));
	}
	return acc;
}

// ------------------------------------------------- substitution, derivation

static void check_images(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images,
                         const char* where) {
	require(static_cast<int>(images.size()) == s.alphabet()->size(), "StructureMismatch",
	        std::string(where) + ": one image per generator required");
	for (int i = 0; i < s.alphabet()->size(); ++i) {
		check_compatible(s, images[i], where);
		require(images[i].valuation().lower_bound() >= s.alphabet()->weight(i),
		        "StructureMismatch",
		        std::string(where) + ": image of generator " + s.alphabet()->name(i) +
		            " has valuation below its weight");
	}
}

TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images) {
	check_images(s, images, "substitute");
	TruncatedSeries out(s.alphabet(), s.ring(), s.cap());
	/* monomials arrive in sorted order, so prefix products repeat a lot */
	std::unordered_map<Mono, TruncatedSeries> cache;
	cache.emplace(Mono(), TruncatedSeries::one(s.alphabet(), s.ring(), s.cap()));
	for (const auto& [k, c] : s.terms()) {
		const Mono& m = k.second;
		Mono pref = m;
		while (!pref.empty() && !cache.count(pref)) pref.pop_back();
		TruncatedSeries acc = cache.at(pref);
		for (size_t i = pref.size(); i < m.size(); ++i) {
			acc = acc * images[static_cast<unsigned char>(m[i])];
			cache.emplace(m.substr(0, i + 1), acc);
		}
		out = out + acc.scale(c);
	}
	return out;
}

TruncatedSeries derive(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images) {
	check_images(s, images, "derive");
	TruncatedSeries out(s.alphabet(), s.ring(), s.cap());
	for (const auto& [k, c] : s.terms()) {
		const Mono& m = k.second;
		for (size_t j = 0; j < m.size(); ++j) {
			Mono pre = m.substr(0, j), post = m.substr(j + 1);
			int dpre = mono_degree(*s.alphabet(), pre);
			int dpost = mono_degree(*s.alphabet(), post);
			for (const auto& [ik, ic] : images[static_cast<unsigned char>(m[j])].terms()) {
				if (dpre + ik.first + dpost > s.cap()) break;
				out.add_term(pre + ik.second + post, c * ic);
			}
		}
	}
	return out;
}

// ------------------------------------------------------------- coproduct

SplitSeries::SplitSeries(AlphabetPtr alpha, Ring ring, int cap)
    : alpha_(std::move(alpha)), ring_(ring), cap_(cap) {}

void SplitSeries::add_term(const Mono& left, const Mono& right, const mpq_class& c) {
	int dl = mono_degree(*alpha_, left), dr = mono_degree(*alpha_, right);
	if (dl + dr > cap_) return;
	Key k{{dl, left}, {dr, right}};
	auto it = terms_.find(k);
	if (it == terms_.end()) {
		mpq_class r = ring_.reduce(c);
		if (sgn(r) != 0) terms_.emplace(std::move(k), std::move(r));
	} else {
		it->second = ring_.add(it->second, c);
		if (sgn(it->second) == 0) terms_.erase(it);
	}
}

static void check_split_compatible(const SplitSeries& a, const SplitSeries& b,
                                   const char* where) {
	check_same_alphabet(a.alphabet(), b.alphabet(), where);
	check_same_ring(a.ring(), b.ring(), where);
	require(a.cap() == b.cap(), "CapMismatch", where);
}

SplitSeries SplitSeries::operator+(const SplitSeries& o) const {
	check_split_compatible(*this, o, "split sum");
	SplitSeries r = *this;
	for (const auto& [k, c] : o.terms_) r.add_term(k.first.second, k.second.second, c);
	return r;
}

SplitSeries SplitSeries::operator-(const SplitSeries& o) const {
	check_split_compatible(*this, o, "split difference");
	SplitSeries r = *this;
	for (const auto& [k, c] : o.terms_) r.add_term(k.first.second, k.second.second, -c);
	return r;
}

SplitSeries SplitSeries::operator*(const SplitSeries& o) const {
	check_split_compatible(*this, o, "split product");
	SplitSeries r(alpha_, ring_, cap_);
	for (const auto& [ka, ca] : terms_)
		for (const auto& [kb, cb] : o.terms_) {
			if (ka.first.first + ka.second.first + kb.first.first + kb.second.first > cap_)
				continue;
			r.add_term(ka.first.second + kb.first.second, ka.second.second + kb.second.second,
			           ca * cb);
		}
	return r;
}

bool SplitSeries::operator==(const SplitSeries& o) const {
	check_split_compatible(*this, o, "split comparison");
	return terms_ == o.terms_;
}

SplitSeries coproduct_split(const TruncatedSeries& s) {
	SplitSeries out(s.alphabet(), s.ring(), s.cap());
	for (const auto& [k, c] : s.terms()) {
		const Mono& m = k.second;
		size_t n = m.size();
		require(n <= 20, "MonomialTooLong", "coproduct on monomials longer than 20");
		for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
			Mono l, r;
			for (size_t i = 0; i < n; ++i) (mask >> i & 1 ? l : r).push_back(m[i]);
			out.add_term(l, r, c);
		}
	}
	return out;
}

SplitSeries split_outer(const TruncatedSeries& a, const TruncatedSeries& b) {
	check_compatible(a, b, "split_outer");
	SplitSeries out(a.alphabet(), a.ring(), a.cap());
	for (const auto& [ka, ca] : a.terms())
		for (const auto& [kb, cb] : b.terms()) {
			if (ka.first + kb.first > a.cap()) break;
			out.add_term(ka.second, kb.second, ca * cb);
		}
	return out;
}

HopfFlags hopf_check(const TruncatedSeries& s) {
	SplitSeries delta = coproduct_split(s);
	TruncatedSeries one = TruncatedSeries::one(s.alphabet(), s.ring(), s.cap());
	bool primitive = delta == split_outer(s, one) + split_outer(one, s);
	bool grouplike = s.constant_term() == 1 && delta == split_outer(s, s);
	return {primitive, grouplike};
}

}  // namespace jtau
