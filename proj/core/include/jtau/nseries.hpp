#pragma once
#include <cstdint>
#include <functional>

#include "jtau/freelie.hpp"

namespace jtau {

/* Which descending filtration of the free group the degree oracle measures.
   All three are detected through the expansion x_i -> 1 + X_i:

     LowerCentral  coefficients in Z, every generator in degree 1
     Zassenhaus    coefficients in F_p, every generator in degree 1
     Weight        coefficients in Q, generators keep their declared weights

   The degree of a word is the valuation of its expansion minus one. */
class SeriesSpec {
public:
	enum class Variant { LowerCentral, Zassenhaus, Weight };

	static SeriesSpec lower_central(AlphabetPtr alpha);
	static SeriesSpec zassenhaus(AlphabetPtr alpha, long p);
	static SeriesSpec weight(AlphabetPtr alpha);
	/* "lcs" | "zassenhaus:P" | "weight" */
	static SeriesSpec parse(const std::string& text, AlphabetPtr alpha);

	Variant variant() const { return variant_; }
	long prime() const { return p_; }
	const Ring& ring() const { return ring_; }
	std::string name() const;

	/* The alphabet as the caller declared it. */
	const AlphabetPtr& alphabet() const { return alpha_; }
	/* The alphabet the oracle grades by: equal to alphabet() for Weight,
	   weights flattened to 1 otherwise. gr-classes live over this one. */
	const AlphabetPtr& graded_alphabet() const { return graded_; }

private:
	SeriesSpec(Variant v, AlphabetPtr alpha, long p);

	Variant variant_;
	AlphabetPtr alpha_, graded_;
	Ring ring_;
	long p_ = 0;
};

/* Index of the deepest filtration term containing w, computed exactly up to
   the cap: Finite(d) with d <= cap, AboveCap(cap), or Infinity for w = 1. */
Degree series_degree(const ReducedWord& w, const SeriesSpec& spec, int cap);

/* Class of w in the degree-m layer of the associated graded Lie algebra.
   Zero when the degree of w exceeds m; DegreeTooLow when it is below m.
   NotALieElement propagates from tensor_to_lie when the leading term is not
   a plain Lie element (this happens for genuine Zassenhaus classes that are
   p-th powers, such as a^2 at p = 2). */
LieElement gr_class(const ReducedWord& w, const SeriesSpec& spec, int m);

/* Degree oracle hook for check_axioms. The default is series_degree; tests
   inject corrupted oracles to prove the harness catches violations. */
using DegreeFn = std::function<Degree(const ReducedWord&, const SeriesSpec&, int)>;

/* Property harness for the filtration axioms, cap-aware: a check involving
   degrees beyond the cap passes only when the oracle reports AboveCap.
     - deg([u,v]) >= deg(u) + deg(v) on generator pairs plus sampled pairs
     - Zassenhaus: deg(u^p) >= p deg(u)
     - Weight: words built by the layer recursion
           gens(1) = generators
           gens(2) = weight-2 generators and [gens(1), gens(1)]
           gens(m) = [gens(m-1), gens(1)] and [gens(m-2), gens(2)]
       have degree >= m, for m up to min(cap, 6). */
CheckReport check_axioms(const SeriesSpec& spec, int cap, std::uint64_t seed = 0,
                         int samples = 64, const DegreeFn& degree_override = {});

}  // namespace jtau
