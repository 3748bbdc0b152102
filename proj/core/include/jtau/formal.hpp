#pragma once
#include "jtau/johnson.hpp"

namespace jtau {

/* Exponential expansion of the free group into the truncated tensor algebra
   over Q. Each generator carries a primitive rational tail: a Lie element
   whose lowest part is the generator class itself at the generator's weight.
   The expansion sends the generator to exp of that tail, so every image is
   group-like by construction. */
class Expansion {
public:
	Expansion(AlphabetPtr alpha, int cap, std::vector<LieElement> tails);

	/* Tails are exactly the generator classes. */
	static Expansion standard(AlphabetPtr alpha, int cap);

	const AlphabetPtr& alphabet() const { return alpha_; }
	int cap() const { return cap_; }
	const LieElement& tail(int i) const { return tails_[i]; }
	const TruncatedSeries& theta(int i) const { return theta_[i]; }
	const TruncatedSeries& theta_inverse(int i) const { return theta_inv_[i]; }

private:
	AlphabetPtr alpha_;
	int cap_;
	std::vector<LieElement> tails_;
	std::vector<TruncatedSeries> theta_, theta_inv_;
};

/* Multiplicative image of a word; group-like, with valuation of image - 1
   equal to the word's lower-central degree for weight-1 alphabets. */
TruncatedSeries expand_word(const Expansion& th, const ReducedWord& w);

/* Algebra endomorphism of the truncated tensor algebra, stored by generator
   images. Every image must have valuation at least the generator's weight;
   unipotence (image = generator + higher) is not required here, it is the
   precondition of operator_log. */
struct OperatorEndo {
	AlphabetPtr alpha;
	int cap;
	std::vector<TruncatedSeries> images;
};

OperatorEndo endo_identity(const AlphabetPtr& alpha, int cap);
TruncatedSeries endo_apply(const OperatorEndo& r, const TruncatedSeries& s);
OperatorEndo endo_compose(const OperatorEndo& r, const OperatorEndo& s);
bool endo_equal(const OperatorEndo& a, const OperatorEndo& b);

/* The expansion-conjugated action of an automorphism f on the tensor
   algebra: writes each tensor generator as a series in the logs of the
   expanded generators (triangular inversion), then substitutes the logs of
   the expanded images f(x_j). For the standard expansion this collapses to
   X_i -> log expand_word(th, f(x_i)).
   Errors: NotAnAutomorphism, MissingWitness; InversionFailure signals a
   corrupt expansion and cannot fire for Expansion-validated input. */
OperatorEndo conjugated_endo(const Expansion& th, const GroupMap& f);

/* Sum of homogeneous derivations of degrees m..cap over the rationals with
   trivial degree-0 part; the value of log of a unipotent operator. parts
   holds only nonzero components, keyed by degree. */
struct DerivationTail {
	EgLiePtr eg;
	int cap;
	std::map<int, Derivation> parts;

	bool is_zero() const { return parts.empty(); }
	/* 0 for the zero tail. */
	int leading_degree() const { return parts.empty() ? 0 : parts.begin()->first; }
};

DerivationTail zero_tail(const EgLiePtr& eg, int cap);
bool tail_equal(const DerivationTail& a, const DerivationTail& b);
DerivationTail tail_add(const DerivationTail& a, const DerivationTail& b);

/* log r = sum ((-1)^(k+1)/k)(r - id)^k evaluated on the generators and split
   into homogeneous derivation components. Requires r - id to raise degree by
   at least m_hint >= 1 on every generator (NotUnipotent otherwise); the
   series then terminates under the cap. NotALieElement propagates when some
   homogeneous component is not a derivation value, which signals an operator
   that does not respect the group-like structure. */
DerivationTail operator_log(const OperatorEndo& r, int m_hint = 1);

/* exp of the tail as an algebra endomorphism, inverse to operator_log. */
OperatorEndo exp_operator(const DerivationTail& t);

/* Baker-Campbell-Hausdorff product computed structurally:
   log(exp s . exp t). No coefficient tables; the classical 1/2 and 1/12
   terms are properties of the output, asserted in tests. */
DerivationTail bch_product(const DerivationTail& s, const DerivationTail& t);

/* Exact linear combination of group elements. */
using GroupRingElem = std::vector<std::pair<mpq_class, ReducedWord>>;

/* Valuation of the expanded combination: the augmentation-power degree of
   the element for the standard expansion over a weight-1 alphabet. */
Degree jfiltration_degree(const GroupRingElem& u, const Expansion& th);

/* Evidence harness for the graded group-ring map:
   (i)  for sampled words x, y of series degrees i, j the combination
        x y - y x - [x,y] + 1 has j-degree >= i + j + 1;
   (ii) for each m <= max_degree the products (x_{i1}-1)...(x_{im}-1) have
        linearly independent leading degree-m terms spanning the whole
        degree-m layer (rank r^m over Q). */
CheckReport upsilon_checks(const SeriesSpec& spec, const Expansion& th, int max_degree,
                           std::uint64_t seed = 0, int samples = 50);

}  // namespace jtau
