/* Acceptance gate: one line per criterion, nonzero exit if any fails or
   overruns its time budget. Every comparison is exact. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "jtau/formal.hpp"
#include "jtau/render.hpp"
#include "jtau/sampler.hpp"

using namespace jtau;

namespace {

int failures = 0;

void run(int number, const char* name, double budget_seconds,
         const std::function<bool()>& body) {
	auto start = std::chrono::steady_clock::now();
	bool ok = false;
	std::string error;
	try {
		ok = body();
	} catch (const Error& e) {
		error = e.what();
	}
	double elapsed =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	bool in_budget = elapsed < budget_seconds;
	if (!ok || !in_budget) ++failures;
	std::printf("%s  %2d  %-34s  %6.2f s (budget %g s)%s%s\n",
	            (ok && in_budget) ? "PASS" : "FAIL", number, name, elapsed, budget_seconds,
	            in_budget ? "" : "  OVER BUDGET", error.empty() ? "" : "  ERROR");
	if (!error.empty()) std::printf("      %s\n", error.c_str());
	std::fflush(stdout);
}

AlphabetPtr ab() {
	static AlphabetPtr a = Alphabet::make_unweighted({"a", "b"});
	return a;
}

AlphabetPtr abc() {
	static AlphabetPtr a = Alphabet::make_unweighted({"a", "b", "c"});
	return a;
}

AlphabetPtr xA() {
	static AlphabetPtr a = Alphabet::make({{"x", 1}, {"y", 1}, {"A", 2}});
	return a;
}

/* Independent dimension oracle: (1/d) sum over divisors of mu(e) r^(d/e). */
long long witt(int rank, int d) {
	auto moebius = [](int n) {
		int m = 1;
		for (int p = 2; p * p <= n; ++p)
			if (n % p == 0) {
				n /= p;
				if (n % p == 0) return 0;
				m = -m;
			}
		return n > 1 ? -m : m;
	};
	long long sum = 0;
	for (int e = 1; e <= d; ++e)
		if (d % e == 0) {
			long long power = 1;
			for (int k = 0; k < d / e; ++k) power *= rank;
			sum += moebius(e) * power;
		}
	return sum / d;
}

bool criterion_dimensions() {
	const int expect[] = {2, 1, 2, 3, 6, 9, 18, 30};
	for (int d = 1; d <= 8; ++d) {
		if (lyndon_dim(ab(), d) != expect[d - 1]) return false;
		if (lyndon_dim(ab(), d) != witt(2, d)) return false;
	}
	for (int d = 1; d <= 6; ++d)
		if (lyndon_dim(abc(), d) != witt(3, d)) return false;
	return true;
}

bool criterion_commutator_laws() {
	std::mt19937_64 rng(101);
	for (int i = 0; i < 1000; ++i) {
		ReducedWord x = random_word(rng, abc(), 4);
		ReducedWord y = random_word(rng, abc(), 4);
		ReducedWord z = random_word(rng, abc(), 4);
		if (commutator(x, y * z) !=
		    commutator(x, y) * conjugate(y, commutator(x, z)))
			return false;
		if (commutator(x * y, z) !=
		    conjugate(x, commutator(y, z)) * commutator(x, z))
			return false;
		ReducedWord hw = commutator(commutator(x, y), conjugate(y, z)) *
		                 commutator(commutator(y, z), conjugate(z, x)) *
		                 commutator(commutator(z, x), conjugate(x, y));
		if (!hw.is_identity()) return false;
	}
	return true;
}

bool criterion_oracle_cross_check() {
	SeriesSpec spec = SeriesSpec::lower_central(ab());
	for (int m = 1; m <= 5; ++m) {
		const auto& basis = lyndon_words(ab(), m);
		for (size_t i = 0; i < basis.size(); ++i) {
			ReducedWord w = bracketing_to_group_word(ab(), basis[i]);
			if (series_degree(w, spec, 6) != Degree::finite(m)) return false;
			if (gr_class(w, spec, m) !=
			    LieElement::basis_element(ab(), Ring::integers(), m,
			                              static_cast<int>(i)))
				return false;
		}
	}
	return true;
}

bool criterion_morphism_suite() {
	std::mt19937_64 rng(102);
	int pairs = 0;
	while (pairs < 100) {
		AlphabetPtr alpha = (pairs % 5 < 3) ? ab() : abc();
		SeriesSpec spec = SeriesSpec::lower_central(alpha);
		FilteredAut f = make_filtered(random_ia_map(rng, alpha, 2), spec, 6);
		FilteredAut g = make_filtered(random_ia_map(rng, alpha, 2), spec, 6);
		if (f.degree.is_finite() && f.degree.finite_value() > 3) continue;
		if (g.degree.is_finite() && g.degree.finite_value() > 3) continue;
		GroupMap h = random_nielsen_map(rng, alpha, 2);
		if (!verify_morphism_identities(f, g, h).ok()) return false;
		++pairs;
	}
	return true;
}

bool criterion_adjoint_compatibility() {
	SeriesSpec spec = SeriesSpec::lower_central(ab());
	std::mt19937_64 rng(103);
	for (int i = 0; i < 50; ++i) {
		int m = 1 + (i % 4);
		ReducedWord w = random_word_of_degree(rng, ab(), m);
		FilteredAut fw = make_filtered(GroupMap::inner(w), spec, 6);
		if (fw.degree != Degree::finite(m)) return false;
		Derivation t = tau(fw);
		if (!der_equal(t, adjoint(t.eg, gr_class(w, spec, m)))) return false;
	}
	return true;
}

bool criterion_derivation_laws() {
	EgLiePtr eg = EgLie::make(ab(), Ring::rationals());
	std::mt19937_64 rng(104);
	auto rand_der = [&](const EgLiePtr& e, int degree) {
		std::vector<LieElement> values;
		for (int i = 0; i < e->pos()->size(); ++i)
			values.push_back(
			    random_lie(rng, e->pos(), e->ring(), degree + e->pos()->weight(i)));
		return make_derivation(e, degree, Cocycle{degree, {}}, std::move(values));
	};

	for (int i = 0; i < 20; ++i) {
		Derivation x = rand_der(eg, 1 + (i % 2));
		Derivation y = rand_der(eg, 1);
		Derivation z = rand_der(eg, 1 + ((i + 1) % 2));
		Derivation jac = der_add(
		    der_add(der_bracket(x, der_bracket(y, z)), der_bracket(y, der_bracket(z, x))),
		    der_bracket(z, der_bracket(x, y)));
		if (!der_is_zero(jac)) return false;
		if (!der_equal(der_bracket(x, y), der_scale(der_bracket(y, x), -1))) return false;

		PosAut swap = make_pos_aut(*eg, {eg->gen_class(1), eg->gen_class(0)},
		                           {eg->gen_class(1), eg->gen_class(0)});
		Aut0 f = make_aut0(eg, swap);
		if (!der_equal(der_action(f, der_bracket(x, y)),
		               der_bracket(der_action(f, x), der_action(f, y))))
			return false;
		if (!der_equal(extend_derivation(eg, truncate_derivation(x)), x)) return false;
	}

	// nontrivial-cocycle fixture: L_0 = <t> by the swap
	PosAut swap{{LieElement::generator(ab(), Ring::rationals(), 1),
	             LieElement::generator(ab(), Ring::rationals(), 0)},
	            {LieElement::generator(ab(), Ring::rationals(), 1),
	             LieElement::generator(ab(), Ring::rationals(), 0)}};
	EgLiePtr sw =
	    EgLie::make(ab(), Ring::rationals(), Alphabet::make_unweighted({"t"}), {}, {swap});
	LieElement a = sw->gen_class(0), b = sw->gen_class(1);
	Derivation d =
	    make_derivation(sw, 1, Cocycle{1, {a - b}}, {sw->zero(), lie_bracket(a, b)});
	if (!check_derivation(d).ok()) return false;
	Derivation e = adjoint(sw, a + b);
	Derivation br = der_bracket(d, e);
	if (!check_derivation(br).ok()) return false;
	if (!der_equal(extend_derivation(sw, truncate_derivation(d)), d)) return false;
	if (!der_equal(extend_derivation(sw, truncate_derivation(br)), br)) return false;
	// and a seed that cannot extend is rejected
	DerivationSeed bad{1, Cocycle{1, {sw->zero()}}, {sw->zero(), lie_bracket(a, b)}};
	try {
		extend_derivation(sw, bad);
		return false;
	} catch (const Error& err) {
		if (err.name() != std::string("IncompatiblePair")) return false;
	}
	return true;
}

bool criterion_mod_p() {
	std::mt19937_64 rng(105);
	for (long p : {2L, 3L}) {
		SeriesSpec spec = SeriesSpec::zassenhaus(ab(), p);
		if (!check_axioms(spec, 6, 9, 64).ok()) return false;
		for (int i = 0; i < 25; ++i) {
			GroupMap f = random_ia_map(rng, ab(), 2);
			Degree d = filtration_degree(f, spec, 6);
			if (!d.is_finite()) continue;
			GroupMap fp = f;
			for (long k = 1; k < p; ++k) fp = compose_maps(fp, f);
			long long want = std::min<long long>(p * d.finite_value(), 7);
			if (filtration_degree(fp, spec, 6).lower_bound() < want) return false;
		}
	}
	return true;
}

bool criterion_kernel_identity() {
	SeriesSpec spec = SeriesSpec::lower_central(ab());
	std::mt19937_64 rng(106);
	for (int i = 0; i < 100; ++i) {
		GroupMap f = (i % 3 == 0)
		                 ? GroupMap::inner(random_word_of_degree(rng, ab(), 1 + (i % 4)))
		                 : random_ia_map(rng, ab(), 2);
		FilteredAut fa = make_filtered(f, spec, 6);
		for (int m = 1; m <= 3; ++m) {
			if (fa.degree.lower_bound() < m) continue;  // tau undefined below m
			bool zero = der_is_zero(tau(fa, m));
			bool deeper = fa.degree.lower_bound() >= m + 1;
			if (zero != deeper) return false;
		}
	}
	return true;
}

bool criterion_bracket_minimum() {
	std::mt19937_64 rng(107);
	int done = 0;
	while (done < 100) {
		AlphabetPtr alpha = (done % 2) ? ab() : abc();
		SeriesSpec spec = SeriesSpec::lower_central(alpha);
		int d = 1 + (done % 4);
		ReducedWord w = random_word_of_degree(rng, alpha, d);
		if (series_degree(w, spec, 6) != Degree::finite(d)) return false;
		int best = std::numeric_limits<int>::max();
		for (int i = 0; i < alpha->size(); ++i) {
			Degree bd = series_degree(commutator(w, ReducedWord::gen(alpha, i)),
			                          spec, 6);
			best = std::min(best, bd.lower_bound());
		}
		if (best != d + 1) return false;
		++done;
	}
	return true;
}

bool criterion_formality_leading() {
	SeriesSpec spec = SeriesSpec::lower_central(ab());
	Expansion standard = Expansion::standard(ab(), 5);
	Expansion perturbed(
	    ab(), 5,
	    {LieElement::generator(ab(), Ring::rationals(), 0) +
	         lie_bracket(LieElement::generator(ab(), Ring::rationals(), 0),
	                     LieElement::generator(ab(), Ring::rationals(), 1))
	             .scale(mpq_class(1, 2)),
	     LieElement::generator(ab(), Ring::rationals(), 1)});
	std::mt19937_64 rng(108);
	int seen = 0;
	while (seen < 30) {
		GroupMap f = random_ia_map(rng, ab(), 2);
		FilteredAut fa = make_filtered(f, spec, 5);
		if (!fa.degree.is_finite() || fa.degree.finite_value() > 2) continue;
		++seen;
		int m = fa.degree.finite_value();
		Derivation expect = tau(fa);
		for (const Expansion* th : {&standard, &perturbed}) {
			DerivationTail t = operator_log(conjugated_endo(*th, f), 1);
			if (t.is_zero() || t.leading_degree() != m) return false;
			const Derivation& lead = t.parts.at(m);
			for (int i = 0; i < 2; ++i)
				if (lead.values[i] != expect.values[i].in_ring(Ring::rationals()))
					return false;
		}
	}
	return true;
}

bool criterion_bch() {
	Expansion th = Expansion::standard(ab(), 4);
	std::mt19937_64 rng(109);
	for (int i = 0; i < 20; ++i) {
		GroupMap f = random_ia_map(rng, ab(), 2);
		GroupMap g = random_ia_map(rng, ab(), 2);
		DerivationTail s = operator_log(conjugated_endo(th, f), 1);
		DerivationTail t = operator_log(conjugated_endo(th, g), 1);
		DerivationTail direct = operator_log(conjugated_endo(th, compose_maps(f, g)), 1);
		if (!tail_equal(bch_product(s, t), direct)) return false;
	}
	// hand-checkable pair: conjugations by a and by b, both of degree 1;
	// the degree-2 component of the product must be s2 + t2 + [s1,t1]/2
	DerivationTail s =
	    operator_log(conjugated_endo(th, GroupMap::inner(ReducedWord::gen(ab(), 0))), 1);
	DerivationTail t =
	    operator_log(conjugated_endo(th, GroupMap::inner(ReducedWord::gen(ab(), 1))), 1);
	DerivationTail p = bch_product(s, t);
	auto part = [](const DerivationTail& tl, int d) {
		auto it = tl.parts.find(d);
		return it != tl.parts.end() ? it->second : zero_derivation(tl.eg, d);
	};
	Derivation expect = der_add(der_add(part(s, 2), part(t, 2)),
	                            der_scale(der_bracket(part(s, 1), part(t, 1)),
	                                      mpq_class(1, 2)));
	return der_equal(part(p, 2), expect);
}

bool criterion_group_ring_map() {
	SeriesSpec spec = SeriesSpec::lower_central(ab());
	Expansion th = Expansion::standard(ab(), 6);
	return upsilon_checks(spec, th, 5, 110, 50).ok();
}

bool criterion_weight_filtration() {
	AlphabetPtr alpha = xA();
	SeriesSpec spec = SeriesSpec::weight(alpha);
	if (!check_axioms(spec, 6, 111, 64).ok()) return false;

	std::mt19937_64 rng(112);
	int sampled = 0;
	while (sampled < 20) {
		GroupMap f = random_weighted_map(rng, alpha, 2);
		FilteredAut fa = make_filtered(f, spec, 6);
		++sampled;
		if (!fa.degree.is_finite() || fa.degree.finite_value() < 1 ||
		    fa.degree.finite_value() > 3)
			continue;
		Derivation t = tau(fa);
		if (!check_derivation(t).ok()) return false;
		if (der_is_zero(t)) return false;
		// weight-1 values carry the degree-(m+1) component, the weight-2
		// value the degree-(m+2) component
		int m = fa.degree.finite_value();
		for (int i = 0; i < alpha->size(); ++i)
			if (!t.values[i].is_zero() &&
			    t.values[i].min_degree() != m + alpha->weight(i))
				return false;
	}

	// truncate/extend round-trip over the weight-2 structure
	EgLiePtr eg = EgLie::make(alpha, Ring::rationals());
	for (int i = 0; i < 10; ++i) {
		std::vector<LieElement> values;
		for (int j = 0; j < alpha->size(); ++j)
			values.push_back(random_lie(rng, alpha, Ring::rationals(),
			                            1 + (i % 2) + alpha->weight(j)));
		Derivation d =
		    make_derivation(eg, 1 + (i % 2), Cocycle{1 + (i % 2), {}}, std::move(values));
		if (!der_equal(extend_derivation(eg, truncate_derivation(d)), d)) return false;
	}
	return true;
}

}  // namespace

int main() {
	run(1, "free Lie dimensions", 1, criterion_dimensions);
	run(2, "commutator laws", 5, criterion_commutator_laws);
	run(3, "basis words hit their classes", 10, criterion_oracle_cross_check);
	run(4, "morphism identity suite", 60, criterion_morphism_suite);
	run(5, "conjugation tau is adjoint", 30, criterion_adjoint_compatibility);
	run(6, "derivation algebra laws", 10, criterion_derivation_laws);
	run(7, "mod-p axioms and powers", 30, criterion_mod_p);
	run(8, "tau kernel matches filtration", 30, criterion_kernel_identity);
	run(9, "generator bracket minimum", 20, criterion_bracket_minimum);
	run(10, "log leading term is tau", 60, criterion_formality_leading);
	run(11, "bch against composite log", 30, criterion_bch);
	run(12, "group-ring map independence", 30, criterion_group_ring_map);
	run(13, "weight filtration end to end", 30, criterion_weight_filtration);

	if (failures > 0) {
		std::printf("%d criterion(s) failed\n", failures);
		return 1;
	}
	std::printf("all 13 criteria passed\n");
	return 0;
}
