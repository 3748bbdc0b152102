#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jtau/alphabet.hpp"
#include "jtau/degree.hpp"
#include "jtau/ring.hpp"
#include "jtau/word.hpp"

namespace jtau {

/* Monomial in the tensor algebra: one byte per letter, value = generator
   index. Lexicographic string order is the monomial order within a degree. */
using Mono = std::string;

int mono_degree(const Alphabet& alpha, const Mono& m);
Mono mono_of_letters(const std::vector<int>& letters);
/* Space-joined generator names; "1" for the empty monomial. */
std::string mono_to_string(const Alphabet& alpha, const Mono& m);

/* Element of the tensor algebra on the alphabet, truncated above `cap` in
   weighted degree. Terms sit in a map keyed by (degree, monomial), so
   iteration is by degree and then lexicographic; zero coefficients are never
   stored. Every product prunes terms above the cap. */
class TruncatedSeries {
public:
	using Key = std::pair<int, Mono>;

	TruncatedSeries(AlphabetPtr alpha, Ring ring, int cap);

	static TruncatedSeries constant(AlphabetPtr alpha, Ring ring, int cap, const mpq_class& c);
	static TruncatedSeries one(AlphabetPtr alpha, Ring ring, int cap);
	static TruncatedSeries generator(AlphabetPtr alpha, Ring ring, int cap, int i);

	const AlphabetPtr& alphabet() const { return alpha_; }
	const Ring& ring() const { return ring_; }
	int cap() const { return cap_; }
	const std::map<Key, mpq_class>& terms() const { return terms_; }

	mpq_class coeff(const Mono& m) const;
	/* Adds c * m, reducing in the ring and dropping the term if it cancels
	   or its degree exceeds the cap. */
	void add_term(const Mono& m, const mpq_class& c);

	bool is_zero() const { return terms_.empty(); }
	mpq_class constant_term() const { return coeff(Mono()); }

	TruncatedSeries operator+(const TruncatedSeries& o) const;
	TruncatedSeries operator-(const TruncatedSeries& o) const;
	TruncatedSeries operator-() const;
	TruncatedSeries operator*(const TruncatedSeries& o) const;
	TruncatedSeries scale(const mpq_class& c) const;

	TruncatedSeries homogeneous_part(int d) const;
	/* Re-truncates to a lower (or equal) cap. */
	TruncatedSeries truncated(int new_cap) const;
	/* Same terms reinterpreted in another ring (coefficients reduced). */
	TruncatedSeries in_ring(const Ring& r) const;

	/* Least degree with a nonzero term, AboveCap(cap) if there is none.
	   With ignore_constant the degree-0 term is skipped. */
	Degree valuation(bool ignore_constant = false) const;

	bool operator==(const TruncatedSeries& o) const;
	bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
	AlphabetPtr alpha_;
	Ring ring_;
	int cap_;
	std::map<Key, mpq_class> terms_;
};

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b, const char* where);

/* Magnus expansion x_i -> 1 + X_i, extended multiplicatively; a syllable
   x_i^e contributes sum_k binom(e, k) X_i^k, which also covers negative e. */
TruncatedSeries magnus_expand(const ReducedWord& w, const Ring& ring, int cap);

/* exp/log of exact rational series; exp needs zero constant term, log needs
   constant term 1. RingNotRational otherwise. */
TruncatedSeries series_exp(const TruncatedSeries& s);
TruncatedSeries series_log(const TruncatedSeries& s);

/* Algebra endomorphism determined by generator images: X_i -> images[i].
   Each image must have valuation >= weight(i) so truncation is respected. */
TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images);
/* Derivation extension of X_i -> images[i] by the Leibniz rule. */
TruncatedSeries derive(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images);

/* Image of s under the coproduct X -> X(x)1 + 1(x)X, kept as a formal sum of
   monomial pairs with total degree <= cap: a monomial splits over all ways to
   pull a subset of its positions to the left leg. */
class SplitSeries {
public:
	using Key = std::pair<TruncatedSeries::Key, TruncatedSeries::Key>;

	SplitSeries(AlphabetPtr alpha, Ring ring, int cap);

	const std::map<Key, mpq_class>& terms() const { return terms_; }
	void add_term(const Mono& left, const Mono& right, const mpq_class& c);

	SplitSeries operator+(const SplitSeries& o) const;
	SplitSeries operator-(const SplitSeries& o) const;
	/* Componentwise product (a(x)b)(c(x)d) = ac (x) bd. */
	SplitSeries operator*(const SplitSeries& o) const;

	bool is_zero() const { return terms_.empty(); }
	bool operator==(const SplitSeries& o) const;
	bool operator!=(const SplitSeries& o) const { return !(*this == o); }

	const AlphabetPtr& alphabet() const { return alpha_; }
	const Ring& ring() const { return ring_; }
	int cap() const { return cap_; }

private:
	AlphabetPtr alpha_;
	Ring ring_;
	int cap_;
	std::map<Key, mpq_class> terms_;
};

SplitSeries coproduct_split(const TruncatedSeries& s);
/* a (x) b as a SplitSeries with the same total-degree cap. */
SplitSeries split_outer(const TruncatedSeries& a, const TruncatedSeries& b);

struct HopfFlags {
	bool primitive;
	bool grouplike;
};
HopfFlags hopf_check(const TruncatedSeries& s);

}  // namespace jtau
