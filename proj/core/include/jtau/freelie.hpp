#pragma once
#include <map>
#include <string>
#include <vector>

#include "jtau/tensor.hpp"

namespace jtau {

/* Lyndon words of the given weighted degree, in lexicographic order of
   generator indices. The table is cached per weight profile and guarded for
   concurrent use. */
const std::vector<Mono>& lyndon_words(const AlphabetPtr& alpha, int degree);
int lyndon_dim(const AlphabetPtr& alpha, int degree);

/* Standard factorization w = u v with v the lexicographically least proper
   suffix; both halves are Lyndon. */
std::pair<Mono, Mono> standard_factorization(const Mono& w);

/* "[a,[a,b]]" style rendering of the standard bracketing. */
std::string bracketing_to_string(const AlphabetPtr& alpha, const Mono& w);
/* The same bracketing instantiated with group commutators. */
ReducedWord bracketing_to_group_word(const AlphabetPtr& alpha, const Mono& w);

/* Free Lie algebra element in Lyndon coordinates: (degree, basis index) ->
   coefficient. Mixed degrees are allowed; zero coefficients are not stored. */
class LieElement {
public:
	using Key = std::pair<int, int>;

	LieElement(AlphabetPtr alpha, Ring ring);

	static LieElement zero(AlphabetPtr alpha, Ring ring) { return {std::move(alpha), ring}; }
	/* Degree-weight(i) class of generator i. */
	static LieElement generator(AlphabetPtr alpha, Ring ring, int i);
	static LieElement basis_element(AlphabetPtr alpha, Ring ring, int degree, int index);

	const AlphabetPtr& alphabet() const { return alpha_; }
	const Ring& ring() const { return ring_; }
	const std::map<Key, mpq_class>& coords() const { return coords_; }

	void add_coord(int degree, int index, const mpq_class& c);
	mpq_class coord(int degree, int index) const;

	bool is_zero() const { return coords_.empty(); }
	/* 0 for the zero element. */
	int max_degree() const;
	int min_degree() const;
	bool is_homogeneous() const;
	LieElement homogeneous_part(int d) const;
	LieElement in_ring(const Ring& r) const;

	LieElement operator+(const LieElement& o) const;
	LieElement operator-(const LieElement& o) const;
	LieElement operator-() const;
	LieElement scale(const mpq_class& c) const;

	bool operator==(const LieElement& o) const;
	bool operator!=(const LieElement& o) const { return !(*this == o); }

private:
	AlphabetPtr alpha_;
	Ring ring_;
	std::map<Key, mpq_class> coords_;
};

void check_lie_compatible(const LieElement& a, const LieElement& b, const char* where);

/* Expansion into the tensor algebra; terms above the cap are dropped. */
TruncatedSeries lie_to_tensor(const LieElement& x, int cap);

/* Inverse of lie_to_tensor on the Lie subspace. Works degree by degree: the
   expansion of a Lyndon bracketing is its own word plus lexicographically
   larger ones with the same content, and the leading coefficient is 1, so
   back-substitution needs no division and is exact over Z, Q and F_p.
   NotALieElement (reporting the offending term) if s is not in the span. */
LieElement tensor_to_lie(const TruncatedSeries& s);

LieElement lie_bracket(const LieElement& a, const LieElement& b);

}  // namespace jtau
