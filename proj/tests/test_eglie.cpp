#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jtau/eglie.hpp"
#include "jtau/sampler.hpp"

using namespace jtau;

namespace {

AlphabetPtr ab() {
	static AlphabetPtr a = Alphabet::make_unweighted({"a", "b"});
	return a;
}

EgLiePtr plain() {
	static EgLiePtr eg = EgLie::make(ab(), Ring::rationals());
	return eg;
}

LieElement gen(int i) { return plain()->gen_class(i); }

/* L_0 = <t> acting by the swap of the two positive generators. */
EgLiePtr swap_eg() {
	static EgLiePtr eg = [] {
		PosAut swap{{LieElement::generator(ab(), Ring::rationals(), 1),
		             LieElement::generator(ab(), Ring::rationals(), 0)},
		            {LieElement::generator(ab(), Ring::rationals(), 1),
		             LieElement::generator(ab(), Ring::rationals(), 0)}};
		return EgLie::make(ab(), Ring::rationals(), Alphabet::make_unweighted({"t"}), {},
		                   {swap});
	}();
	return eg;
}

Derivation random_derivation(std::mt19937_64& rng, const EgLiePtr& eg, int degree) {
	std::vector<LieElement> values;
	for (int i = 0; i < eg->pos()->size(); ++i)
		values.push_back(
		    random_lie(rng, eg->pos(), eg->ring(), degree + eg->pos()->weight(i)));
	return make_derivation(eg, degree, Cocycle{degree, {}}, std::move(values));
}

}  // namespace

TEST_CASE("derivations extend generator values by the Leibniz rule") {
	EgLiePtr eg = plain();
	Derivation d = make_derivation(eg, 1, Cocycle{1, {}},
	                               {eg->zero(), lie_bracket(gen(0), gen(1))});

	CHECK(eval_derivation(d, gen(0)).is_zero());
	CHECK(eval_derivation(d, gen(1)) == lie_bracket(gen(0), gen(1)));
	// d[a,b] = [da,b] + [a,db] = [a,[a,b]]
	CHECK(eval_derivation(d, lie_bracket(gen(0), gen(1))) ==
	      lie_bracket(gen(0), lie_bracket(gen(0), gen(1))));
	CHECK(eval_derivation(d, gen(0).scale(3) + gen(1)) ==
	      lie_bracket(gen(0), gen(1)).scale(1));
	CHECK(check_derivation(d).ok());

	std::mt19937_64 rng(51);
	for (int i = 0; i < 40; ++i) {
		Derivation r = random_derivation(rng, eg, 1 + (i % 3));
		LieElement x = random_lie(rng, ab(), Ring::rationals(), 1 + (i % 2));
		LieElement y = random_lie(rng, ab(), Ring::rationals(), 1 + ((i + 1) % 2));
		CHECK(eval_derivation(r, lie_bracket(x, y)) ==
		      lie_bracket(eval_derivation(r, x), y) +
		          lie_bracket(x, eval_derivation(r, y)));
		CHECK(check_derivation(r, 7, 4).ok());
	}
}

TEST_CASE("derivation bracket reproduces the worked example") {
	EgLiePtr eg = plain();
	Derivation d = make_derivation(eg, 1, Cocycle{1, {}},
	                               {eg->zero(), lie_bracket(gen(0), gen(1))});
	Derivation e = make_derivation(eg, 1, Cocycle{1, {}},
	                               {lie_bracket(gen(0), gen(1)), eg->zero()});

	Derivation de = der_bracket(d, e);
	CHECK(de.degree == 2);
	CHECK(de.values[0] == lie_bracket(gen(0), lie_bracket(gen(0), gen(1))));
	CHECK(de.values[1] == -lie_bracket(lie_bracket(gen(0), gen(1)), gen(1)));
	CHECK(check_derivation(de).ok());

	CHECK(der_is_zero(der_bracket(d, d)));
	CHECK(der_equal(der_bracket(e, d), der_scale(de, -1)));
}

TEST_CASE("derivation bracket satisfies Jacobi") {
	EgLiePtr eg = plain();
	std::mt19937_64 rng(52);
	for (int i = 0; i < 25; ++i) {
		Derivation x = random_derivation(rng, eg, 1 + (i % 2));
		Derivation y = random_derivation(rng, eg, 1);
		Derivation z = random_derivation(rng, eg, 1 + ((i + 1) % 2));
		Derivation j = der_add(
		    der_add(der_bracket(x, der_bracket(y, z)), der_bracket(y, der_bracket(z, x))),
		    der_bracket(z, der_bracket(x, y)));
		CHECK(der_is_zero(j));
		CHECK(der_equal(der_bracket(x, y), der_scale(der_bracket(y, x), -1)));
		CHECK(der_equal(der_bracket(der_add(x, der_scale(x, 2)), y),
		                der_scale(der_bracket(x, y), 3)));
	}
}

TEST_CASE("adjoint derivations bracket like their elements") {
	EgLiePtr eg = plain();
	std::mt19937_64 rng(53);
	for (int i = 0; i < 30; ++i) {
		LieElement x = random_lie(rng, ab(), Ring::rationals(), 1 + (i % 3));
		LieElement y = random_lie(rng, ab(), Ring::rationals(), 1 + ((i + 1) % 3));
		if (x.is_zero() || y.is_zero()) continue;
		Derivation adx = adjoint(eg, x), ady = adjoint(eg, y);
		CHECK(check_derivation(adx).ok());
		CHECK(eval_derivation(adx, y) == lie_bracket(x, y));
		if (lie_bracket(x, y).is_zero()) continue;
		CHECK(der_equal(adjoint(eg, lie_bracket(x, y)), der_bracket(adx, ady)));
	}
	CHECK_THROWS_AS(adjoint(eg, eg->zero()), Error);
	CHECK_THROWS_AS(adjoint(eg, gen(0) + lie_bracket(gen(0), gen(1))), Error);
}

TEST_CASE("shape violations are reported, not silently accepted") {
	EgLiePtr eg = plain();
	// inhomogeneous value smuggled in around the validating constructor
	Derivation bad{eg, 1, Cocycle{1, {}}, {eg->zero(), gen(0) + lie_bracket(gen(0), gen(1))}};
	CHECK_FALSE(check_derivation(bad).ok());
	CHECK_THROWS_AS(
	    make_derivation(eg, 1, Cocycle{1, {}}, {eg->zero(), gen(0)}), Error);
	CHECK_THROWS_AS(make_derivation(eg, 0, Cocycle{0, {}}, {eg->zero(), eg->zero()}),
	                Error);

	Derivation wrong_degree{eg, 2, Cocycle{2, {}}, {eg->zero(), lie_bracket(gen(0), gen(1))}};
	CHECK_FALSE(check_derivation(wrong_degree).ok());
}

TEST_CASE("cocycles over the swap group evaluate through the action") {
	EgLiePtr eg = swap_eg();
	ReducedWord t = ReducedWord::gen(eg->l0(), 0);
	LieElement am_b = eg->gen_class(0) - eg->gen_class(1);

	PosAut st = l0_action(*eg, t);
	CHECK(apply_pos(*eg, st, eg->gen_class(0)) == eg->gen_class(1));
	CHECK(apply_pos(*eg, l0_action(*eg, t.pow(2)), eg->gen_class(0)) == eg->gen_class(0));
	CHECK(apply_pos(*eg, l0_action(*eg, t.inverse()), eg->gen_class(0)) ==
	      eg->gen_class(1));

	Cocycle d0{1, {am_b}};
	CHECK(eval_cocycle(*eg, d0, t) == am_b);
	// d0(t^2) = d0(t) + t.d0(t) = (a-b) + (b-a) = 0
	CHECK(eval_cocycle(*eg, d0, t.pow(2)).is_zero());
	CHECK(eval_cocycle(*eg, d0, t.pow(3)) == am_b);
	CHECK(eval_cocycle(*eg, d0, t.inverse()) == am_b);
	CHECK(eval_cocycle(*eg, d0, ReducedWord::identity(eg->l0())).is_zero());
}

TEST_CASE("the mixed rule ties cocycle and generator values together") {
	EgLiePtr eg = swap_eg();
	LieElement a = eg->gen_class(0), b = eg->gen_class(1);
	Cocycle d0{1, {a - b}};

	// d(a) = 0 forces d(b) = [d0(t), t.a] + t.d(a) = [a-b, b]
	Derivation d = make_derivation(eg, 1, d0, {eg->zero(), lie_bracket(a, b)});
	CHECK(check_derivation(d).ok());

	Derivation corrupt{eg, 1, d0, {eg->zero(), lie_bracket(a, b).scale(2)}};
	CHECK_FALSE(check_derivation(corrupt).ok());

	// the bracket of compatible derivations stays compatible
	Derivation add = adjoint(eg, a + b);
	CHECK(add.d0.values[0].is_zero());
	Derivation br = der_bracket(d, add);
	CHECK(check_derivation(br).ok());

	// a cocycle value alone does not determine a derivation: zero cocycle
	// cannot carry the swap-asymmetric generator values
	DerivationSeed bad{1, Cocycle{1, {eg->zero()}}, {eg->zero(), lie_bracket(a, b)}};
	CHECK_THROWS_AS(extend_derivation(eg, bad), Error);
	try {
		extend_derivation(eg, bad);
	} catch (const Error& e) {
		CHECK(e.name() == std::string("IncompatiblePair"));
	}
}

TEST_CASE("degree-0 automorphisms act on derivations") {
	EgLiePtr eg = plain();
	LieElement a = gen(0), b = gen(1);
	Derivation d = make_derivation(eg, 1, Cocycle{1, {}}, {eg->zero(), lie_bracket(a, b)});

	Aut0 id = aut0_identity(eg);
	CHECK(der_equal(der_action(id, d), d));

	PosAut swap = make_pos_aut(*eg, {b, a}, {b, a});
	Aut0 f = make_aut0(eg, swap);
	Derivation fd = der_action(f, d);
	CHECK(fd.values[0] == lie_bracket(b, a));
	CHECK(fd.values[1].is_zero());
	CHECK(check_derivation(fd).ok());
	CHECK(der_equal(der_action(aut0_inverse(f), fd), d));

	std::mt19937_64 rng(54);
	for (int i = 0; i < 20; ++i) {
		Derivation x = random_derivation(rng, eg, 1 + (i % 2));
		Derivation y = random_derivation(rng, eg, 1);
		CHECK(der_equal(der_action(f, der_bracket(x, y)),
		                der_bracket(der_action(f, x), der_action(f, y))));
		CHECK(der_equal(der_action(f, der_add(x, x)), der_scale(der_action(f, x), 2)));
	}
}

TEST_CASE("automorphisms of the full structure respect action and relations") {
	EgLiePtr eg = swap_eg();
	LieElement a = eg->gen_class(0), b = eg->gen_class(1);
	ReducedWord t = ReducedWord::gen(eg->l0(), 0);

	// the swap itself, with identity on L_0, is equivariant
	PosAut swap = make_pos_aut(*eg, {b, a}, {b, a});
	Aut0 f = make_aut0(eg, swap, {t}, {t});
	Derivation d = make_derivation(eg, 1, Cocycle{1, {a - b}},
	                               {eg->zero(), lie_bracket(a, b)});
	Derivation fd = der_action(f, d);
	CHECK(check_derivation(fd).ok());
	CHECK(fd.d0.values[0] == b - a);
	CHECK(der_equal(der_action(aut0_inverse(f), fd), d));

	// a non-equivariant positive part is rejected
	PosAut shear = make_pos_aut(*eg, {a, a + b}, {a, b - a});
	CHECK_THROWS_AS(make_aut0(eg, shear, {t}, {t}), Error);
	// as is an L_0 part without a valid witness
	CHECK_THROWS_AS(make_aut0(eg, swap, {t * t}, {t}), Error);
}

TEST_CASE("pos-aut validation catches bad inverses and degree drift") {
	EgLiePtr eg = plain();
	LieElement a = gen(0), b = gen(1);
	CHECK_THROWS_AS(make_pos_aut(*eg, {b, a}, {a, b}), Error);
	CHECK_THROWS_AS(make_pos_aut(*eg, {lie_bracket(a, b), b}, {a, b}), Error);
	CHECK_THROWS_AS(make_pos_aut(*eg, {eg->zero(), b}, {eg->zero(), b}), Error);

	PosAut ok = make_pos_aut(*eg, {a + b, b}, {a - b, b});
	CHECK(apply_pos(*eg, ok, lie_bracket(a, b)) == lie_bracket(a + b, b));
	PosAut both = compose_pos(*eg, ok, inverse_pos(ok));
	CHECK(both.img[0] == a);
	CHECK(both.img[1] == b);
}

TEST_CASE("truncation and extension are mutually inverse") {
	std::mt19937_64 rng(55);
	EgLiePtr eg = plain();
	for (int i = 0; i < 25; ++i) {
		Derivation d = random_derivation(rng, eg, 1 + (i % 3));
		DerivationSeed seed = truncate_derivation(d);
		CHECK(der_equal(extend_derivation(eg, seed), d));
	}

	// worked example: a -> [a,b], b -> 0 extends and acts on [a,b]
	LieElement a = gen(0), b = gen(1);
	DerivationSeed seed{1, Cocycle{1, {}}, {lie_bracket(a, b), eg->zero()}};
	Derivation d = extend_derivation(eg, seed);
	CHECK(eval_derivation(d, lie_bracket(a, b)) ==
	      lie_bracket(lie_bracket(a, b), b));

	EgLiePtr sw = swap_eg();
	LieElement sa = sw->gen_class(0), sb = sw->gen_class(1);
	Derivation ds = make_derivation(sw, 1, Cocycle{1, {sa - sb}},
	                                {sw->zero(), lie_bracket(sa, sb)});
	CHECK(der_equal(extend_derivation(sw, truncate_derivation(ds)), ds));
}

TEST_CASE("weight-2 generators carry the higher-degree component") {
	AlphabetPtr wa = Alphabet::make({{"x", 1}, {"y", 1}, {"A", 2}});
	EgLiePtr eg = EgLie::make(wa, Ring::rationals());
	LieElement x = eg->gen_class(0), y = eg->gen_class(1), A = eg->gen_class(2);

	Derivation d = make_derivation(
	    eg, 1, Cocycle{1, {}},
	    {lie_bracket(x, y), eg->zero(), lie_bracket(x, lie_bracket(x, y))});
	CHECK(check_derivation(d).ok());
	CHECK(eval_derivation(d, A) == lie_bracket(x, lie_bracket(x, y)));
	// value degrees follow the generator weights
	CHECK(d.values[0].min_degree() == 2);
	CHECK(d.values[2].min_degree() == 3);
	// a weight-blind value is rejected
	CHECK_THROWS_AS(
	    make_derivation(eg, 1, Cocycle{1, {}},
	                    {lie_bracket(x, y), eg->zero(), lie_bracket(x, y)}),
	    Error);

	// ad of a degree-2 element is a degree-2 derivation
	Derivation adA = adjoint(eg, A);
	CHECK(check_derivation(adA).ok());
	CHECK(adA.degree == 2);
	CHECK(eval_derivation(adA, x) == lie_bracket(A, x));
}
