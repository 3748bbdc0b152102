#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jtau/freelie.hpp"
#include "jtau/sampler.hpp"

using namespace jtau;

namespace {

AlphabetPtr ab() {
	static AlphabetPtr a = Alphabet::make_unweighted({"a", "b"});
	return a;
}

AlphabetPtr abc() {
	static AlphabetPtr a = Alphabet::make_unweighted({"a", "b", "c"});
	return a;
}

bool is_lyndon(const Mono& w) {
	for (size_t i = 1; i < w.size(); ++i)
		if (w.substr(i) <= w) return false;
	return true;
}

/* Multiplies (1 - t^d)^(-count) into poly mod t^(n+1); binomial series, so
   integer arithmetic throughout. */
std::vector<mpz_class> mul_layer(std::vector<mpz_class> poly, int d, int count, int n) {
	std::vector<mpz_class> factor(n + 1, 0);
	factor[0] = 1;
	mpz_class binom = 1;
	for (int k = 1; k * d <= n; ++k) {
		binom = binom * (k + count - 1) / k;
		factor[k * d] = binom;
	}
	std::vector<mpz_class> out(n + 1, 0);
	for (int i = 0; i <= n; ++i)
		for (int j = 0; i + j <= n; ++j) out[i + j] += poly[i] * factor[j];
	return out;
}

}  // namespace

TEST_CASE("rank-2 basis dimensions match the necklace counts") {
	const int expect[] = {2, 1, 2, 3, 6, 9, 18, 30};
	for (int d = 1; d <= 8; ++d) {
		CHECK(lyndon_dim(ab(), d) == expect[d - 1]);
		CHECK(static_cast<int>(lyndon_words(ab(), d).size()) == expect[d - 1]);
	}
	const int expect3[] = {3, 3, 8, 18, 48};
	for (int d = 1; d <= 5; ++d) CHECK(lyndon_dim(abc(), d) == expect3[d - 1]);
}

TEST_CASE("dimension generating function recovers the word counts") {
	// prod_d (1 - t^d)^(-dim_d) must equal sum_n (#words of degree n) t^n
	const int n = 8;
	for (int rank : {2, 3}) {
		AlphabetPtr alpha = rank == 2 ? ab() : abc();
		std::vector<mpz_class> poly(n + 1, 0);
		poly[0] = 1;
		for (int d = 1; d <= n; ++d) poly = mul_layer(poly, d, lyndon_dim(alpha, d), n);
		mpz_class power = 1;
		for (int k = 0; k <= n; ++k) {
			CHECK(poly[k] == power);
			power *= rank;
		}
	}
	// weighted alphabet {x:1, A:2}: word counts are the Fibonacci numbers
	AlphabetPtr wa = Alphabet::make({{"x", 1}, {"A", 2}});
	std::vector<mpz_class> poly(n + 1, 0);
	poly[0] = 1;
	for (int d = 1; d <= n; ++d) poly = mul_layer(poly, d, lyndon_dim(wa, d), n);
	mpz_class f0 = 1, f1 = 1;
	for (int k = 0; k <= n; ++k) {
		CHECK(poly[k] == f0);
		mpz_class f2 = f0 + f1;
		f0 = f1;
		f1 = f2;
	}
}

TEST_CASE("basis words are Lyndon with Lyndon standard factors") {
	for (int d = 1; d <= 6; ++d) {
		const auto& words = lyndon_words(abc(), d);
		for (size_t i = 0; i < words.size(); ++i) {
			CHECK(is_lyndon(words[i]));
			if (i > 0) CHECK(words[i - 1] < words[i]);
			if (words[i].size() > 1) {
				auto [u, v] = standard_factorization(words[i]);
				CHECK(u + v == words[i]);
				CHECK(is_lyndon(u));
				CHECK(is_lyndon(v));
				CHECK(u < v);
			}
		}
	}
}

TEST_CASE("tensor expansion and its inverse are mutually inverse") {
	for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(5)}) {
		for (int d = 1; d <= 5; ++d)
			for (int i = 0; i < lyndon_dim(ab(), d); ++i) {
				LieElement x = LieElement::basis_element(ab(), ring, d, i);
				CHECK(tensor_to_lie(lie_to_tensor(x, d)) == x);
			}
	}
	std::mt19937_64 rng(31);
	for (int i = 0; i < 60; ++i) {
		LieElement x = random_lie(rng, abc(), Ring::rationals(), 1 + (i % 4));
		CHECK(tensor_to_lie(lie_to_tensor(x, 4)) == x);
	}
}

TEST_CASE("expansions of bracketings are primitive with unit leading term") {
	for (int d = 1; d <= 5; ++d) {
		const auto& words = lyndon_words(ab(), d);
		for (size_t i = 0; i < words.size(); ++i) {
			TruncatedSeries s =
			    lie_to_tensor(LieElement::basis_element(ab(), Ring::rationals(), d,
			                                            static_cast<int>(i)),
			                  d);
			CHECK(s.coeff(words[i]) == 1);
			CHECK(hopf_check(s).primitive);
			// no smaller word with the same content appears
			for (const auto& [key, c] : s.terms()) CHECK(key.second >= words[i]);
		}
	}
}

TEST_CASE("bracket satisfies the Lie axioms") {
	std::mt19937_64 rng(32);
	for (int i = 0; i < 80; ++i) {
		LieElement x = random_lie(rng, ab(), Ring::rationals(), 1 + (i % 3));
		LieElement y = random_lie(rng, ab(), Ring::rationals(), 1 + ((i + 1) % 3));
		LieElement z = random_lie(rng, ab(), Ring::rationals(), 1 + ((i + 2) % 3));
		CHECK(lie_bracket(x, x).is_zero());
		CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
		CHECK((lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
		       lie_bracket(z, lie_bracket(x, y)))
		          .is_zero());
		CHECK(lie_bracket(x + y, z) == lie_bracket(x, z) + lie_bracket(y, z));
		CHECK(lie_bracket(x.scale(3), y) == lie_bracket(x, y).scale(3));
	}
}

TEST_CASE("bracket agrees with the tensor commutator") {
	std::mt19937_64 rng(33);
	for (int i = 0; i < 50; ++i) {
		LieElement x = random_lie(rng, abc(), Ring::rationals(), 1 + (i % 2));
		LieElement y = random_lie(rng, abc(), Ring::rationals(), 1 + (i % 3));
		int cap = x.max_degree() + y.max_degree();
		if (cap == 0) continue;
		TruncatedSeries tx = lie_to_tensor(x, cap), ty = lie_to_tensor(y, cap);
		CHECK(lie_to_tensor(lie_bracket(x, y), cap) == tx * ty - ty * tx);
	}
}

TEST_CASE("non-Lie tensors are rejected with the offending term") {
	AlphabetPtr alpha = ab();
	TruncatedSeries ab_word(alpha, Ring::rationals(), 2);
	ab_word.add_term(mono_of_letters({0, 1}), 1);
	CHECK_THROWS_AS(tensor_to_lie(ab_word), Error);
	TruncatedSeries sq(alpha, Ring::rationals(), 2);
	sq.add_term(mono_of_letters({0, 0}), 1);
	CHECK_THROWS_AS(tensor_to_lie(sq), Error);
	try {
		tensor_to_lie(sq);
	} catch (const Error& e) {
		CHECK(e.name() == std::string("NotALieElement"));
	}
	// over F_2 the square of a primitive is primitive but still not Lie
	TruncatedSeries sq2(alpha, Ring::prime_field(2), 2);
	sq2.add_term(mono_of_letters({0, 0}), 1);
	CHECK(hopf_check(sq2.in_ring(Ring::rationals()).scale(1)).primitive == false);
	CHECK_THROWS_AS(tensor_to_lie(sq2), Error);
}

TEST_CASE("bracketing strings and group words follow the factorization") {
	AlphabetPtr alpha = ab();
	CHECK(bracketing_to_string(alpha, mono_of_letters({0})) == "a");
	CHECK(bracketing_to_string(alpha, mono_of_letters({0, 1})) == "[a,b]");
	CHECK(bracketing_to_string(alpha, mono_of_letters({0, 0, 1})) == "[a,[a,b]]");
	CHECK(bracketing_to_string(alpha, mono_of_letters({0, 1, 1})) == "[[a,b],b]");

	ReducedWord a = ReducedWord::gen(alpha, 0), b = ReducedWord::gen(alpha, 1);
	CHECK(bracketing_to_group_word(alpha, mono_of_letters({0, 1})) == commutator(a, b));
	CHECK(bracketing_to_group_word(alpha, mono_of_letters({0, 0, 1})) ==
	      commutator(a, commutator(a, b)));
}

TEST_CASE("weighted generators enter at their weight") {
	AlphabetPtr wa = Alphabet::make({{"x", 1}, {"A", 2}});
	LieElement X = LieElement::generator(wa, Ring::rationals(), 0);
	LieElement Aa = LieElement::generator(wa, Ring::rationals(), 1);
	CHECK(X.min_degree() == 1);
	CHECK(Aa.min_degree() == 2);
	CHECK(lie_bracket(X, Aa).min_degree() == 3);
	CHECK(lie_to_tensor(Aa, 2).valuation() == Degree::finite(2));
	CHECK(tensor_to_lie(lie_to_tensor(lie_bracket(X, Aa), 3)) == lie_bracket(X, Aa));
}
