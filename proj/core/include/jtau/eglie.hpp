#pragma once
#include <cstdint>
#include <memory>
#include <vector>

#include "jtau/freelie.hpp"

namespace jtau {

class EgLie;
using EgLiePtr = std::shared_ptr<const EgLie>;

/* Graded automorphism of the free Lie algebra on the positive generators,
   stored by generator images together with the images of the inverse. Both
   lists are homogeneous of the generator's weight. */
struct PosAut {
	std::vector<LieElement> img, inv;
};

/* Group-graded Lie algebra L_0 (+) L_1 (+) L_2 (+) ...: a group L_0 given by
   generators and free-reduction relations acting on a free Lie algebra L_+
   whose generators carry weight 1 (the B part) or weight 2 (the A part).
   A null l0 alphabet means the trivial group. */
class EgLie {
public:
	EgLie(AlphabetPtr pos, Ring ring);  // trivial L_0
	EgLie(AlphabetPtr pos, Ring ring, AlphabetPtr l0, std::vector<ReducedWord> l0_relations,
	      std::vector<PosAut> action);

	static EgLiePtr make(AlphabetPtr pos, Ring ring) {
		return std::make_shared<EgLie>(std::move(pos), ring);
	}
	static EgLiePtr make(AlphabetPtr pos, Ring ring, AlphabetPtr l0,
	                     std::vector<ReducedWord> l0_relations, std::vector<PosAut> action) {
		return std::make_shared<EgLie>(std::move(pos), ring, std::move(l0),
		                               std::move(l0_relations), std::move(action));
	}

	const AlphabetPtr& pos() const { return pos_; }
	const Ring& ring() const { return ring_; }
	bool has_l0() const { return l0_ != nullptr; }
	const AlphabetPtr& l0() const { return l0_; }
	const std::vector<ReducedWord>& l0_relations() const { return rels_; }
	/* Action of the i-th L_0 generator on L_+. */
	const PosAut& action(int i) const { return action_[i]; }

	LieElement zero() const { return LieElement::zero(pos_, ring_); }
	LieElement gen_class(int i) const { return LieElement::generator(pos_, ring_, i); }

private:
	AlphabetPtr pos_;
	Ring ring_;
	AlphabetPtr l0_;
	std::vector<ReducedWord> rels_;
	std::vector<PosAut> action_;
};

void check_same_eglie(const EgLiePtr& a, const EgLiePtr& b, const char* where);

LieElement apply_pos(const EgLie& eg, const PosAut& f, const LieElement& x);
PosAut pos_identity(const EgLie& eg);
PosAut compose_pos(const EgLie& eg, const PosAut& f, const PosAut& g);
PosAut inverse_pos(const PosAut& f);
/* PosAut from generator images plus inverse images, validated: images are
   homogeneous of the right weight and the two lists invert each other. */
PosAut make_pos_aut(const EgLie& eg, std::vector<LieElement> img, std::vector<LieElement> inv);
/* Action of an arbitrary L_0 word. */
PosAut l0_action(const EgLie& eg, const ReducedWord& w);

/* 1-cocycle L_0 -> L_m, stored by values on the L_0 generators and extended
   by d(ab) = d(a) + a.d(b). */
struct Cocycle {
	int degree;
	std::vector<LieElement> values;
};
LieElement eval_cocycle(const EgLie& eg, const Cocycle& c, const ReducedWord& w);

/* Degree-m derivation, stored by its values on the positive generators (the
   image under the truncation map) plus the cocycle on L_0. values[i] is
   homogeneous of degree m + weight(i), so weight-2 generators carry the
   degree-(m+2) part of the data. */
struct Derivation {
	EgLiePtr eg;
	int degree;
	Cocycle d0;
	std::vector<LieElement> values;
};

Derivation zero_derivation(const EgLiePtr& eg, int degree);
Derivation make_derivation(const EgLiePtr& eg, int degree, Cocycle d0,
                           std::vector<LieElement> values);
bool der_equal(const Derivation& a, const Derivation& b);
Derivation der_add(const Derivation& a, const Derivation& b);
Derivation der_scale(const Derivation& a, const mpq_class& c);
bool der_is_zero(const Derivation& a);

/* Extends the generator values by the Leibniz rule. */
LieElement eval_derivation(const Derivation& d, const LieElement& x);

/* Verifies: homogeneity of the stored values, the Leibniz rule on sampled
   pairs, vanishing of the cocycle on the L_0 relations, and the mixed rule
   d(a.b) = [d0(a), a.b] + a.d(b) on generator pairs and sampled pairs. */
CheckReport check_derivation(const Derivation& d, std::uint64_t seed = 1, int samples = 8);

/* Bracket of derivations: positive part d.e - e.d; cocycle part
   a -> d(e0(a)) - e(d0(a)) - [d0(a), e0(a)]. */
Derivation der_bracket(const Derivation& d, const Derivation& e);

/* Degree-0 automorphism of the whole structure: a graded automorphism of L_+
   plus an automorphism of L_0 (by images and witness), compatible with the
   action. For a trivial L_0 the word parts are empty. */
struct Aut0 {
	EgLiePtr eg;
	PosAut pos;
	std::vector<ReducedWord> l0_img, l0_inv;
};

Aut0 make_aut0(const EgLiePtr& eg, PosAut pos, std::vector<ReducedWord> l0_img = {},
               std::vector<ReducedWord> l0_inv = {});
Aut0 aut0_identity(const EgLiePtr& eg);
Aut0 aut0_inverse(const Aut0& f);

/* f.d: degree part x -> f(d(f^-1 x)), cocycle part a -> f(d0(f0^-1 a)). */
Derivation der_action(const Aut0& f, const Derivation& d);

/* ad(x) for homogeneous positive x: b -> [x, b] on generators and
   g -> x - g.x on L_0. */
Derivation adjoint(const EgLiePtr& eg, const LieElement& x);

/* Truncation keeps exactly the generator-value data. */
struct DerivationSeed {
	int degree;
	Cocycle d0;
	std::vector<LieElement> values;
};
DerivationSeed truncate_derivation(const Derivation& d);
/* Validates the seed (homogeneity plus the generator-level mixed rule) and
   produces the derivation; IncompatiblePair when the seed cannot extend. */
Derivation extend_derivation(const EgLiePtr& eg, const DerivationSeed& seed);

}  // namespace jtau
