#include "jtau/johnson.hpp"

namespace jtau {

namespace {

ReducedWord defect(const GroupMap& f, int i) {
	ReducedWord x = ReducedWord::gen(f.alpha, i);
	return apply_map(f, x) * x.inverse();
}

/* Weight series only: f must keep each weight-2 generator inside the second
   term, in both directions, before any degree makes sense. */
void check_weight_structure(const GroupMap& f, const SeriesSpec& spec) {
	if (spec.variant() != SeriesSpec::Variant::Weight) return;
	const GroupMap inv{f.alpha, *f.witness, f.images};
	for (int i = 0; i < f.alpha->size(); ++i) {
		if (f.alpha->weight(i) != 2) continue;
		for (const GroupMap* g : {&f, &inv}) {
			ReducedWord img = g->images[i];
			Degree d = series_degree(img, spec, 2);
			require(d.lower_bound() >= 2, "StructureMismatch",
			        "image " + word_to_string(img) + " of weight-2 generator " +
			            f.alpha->name(i) + " leaves the weight filtration");
		}
	}
}

}  // namespace

Degree filtration_degree(const GroupMap& f, const SeriesSpec& spec, int cap) {
	require(cap >= 1, "CapTooSmall", "filtration degree needs cap >= 1");
	check_same_alphabet(f.alpha, spec.alphabet(), "filtration_degree");
	require(verify_automorphism(f), "NotAnAutomorphism",
	        "map and witness do not invert each other");
	check_weight_structure(f, spec);
	long long best = cap;
	for (int i = 0; i < f.alpha->size(); ++i) {
		int wt = spec.graded_alphabet()->weight(i);
		Degree d = series_degree(defect(f, i), spec, cap + wt - 1);
		long long mi = d.is_finite() ? d.finite_value() - wt : cap;
		require(mi >= 0, "StructureMismatch",
		        "defect on " + f.alpha->name(i) + " leaves the weight filtration");
		best = std::min(best, mi);
	}
	return best >= cap ? Degree::above_cap(cap) : Degree::finite(static_cast<int>(best));
}

FilteredAut make_filtered(GroupMap f, const SeriesSpec& spec, int cap) {
	Degree d = filtration_degree(f, spec, cap);
	return FilteredAut{std::move(f), spec, cap, d};
}

EgLiePtr derivation_target(const SeriesSpec& spec) {
	return EgLie::make(spec.graded_alphabet(), spec.ring());
}

Derivation tau(const FilteredAut& f) {
	require(f.degree.is_finite() && f.degree.finite_value() >= 1, "DegreeTooLow",
	        "no default tau degree: filtration degree is " + f.degree.to_string());
	return tau(f, f.degree.finite_value());
}

Derivation tau(const FilteredAut& f, int m) {
	require(m >= 1, "DegreeTooLow", "tau starts at degree 1");
	require(f.degree.lower_bound() >= m, "DegreeTooLow",
	        "filtration degree " + f.degree.to_string() + " is below " + std::to_string(m));
	const AlphabetPtr& graded = f.spec.graded_alphabet();
	require(f.cap >= m + 1 + graded->max_weight(), "CapTooSmall",
	        "tau at degree " + std::to_string(m) + " needs cap >= " +
	            std::to_string(m + 1 + graded->max_weight()));
	Derivation d = zero_derivation(derivation_target(f.spec), m);
	if (f.degree.lower_bound() > m) return d;
	for (int i = 0; i < graded->size(); ++i)
		d.values[i] = gr_class(defect(f.f, i), f.spec, m + graded->weight(i));
	return d;
}

Aut0 tau0(const GroupMap& f, const SeriesSpec& spec) {
	check_same_alphabet(f.alpha, spec.alphabet(), "tau0");
	require(verify_automorphism(f), "NotAnAutomorphism",
	        "map and witness do not invert each other");
	check_weight_structure(f, spec);
	EgLiePtr eg = derivation_target(spec);
	const AlphabetPtr& graded = spec.graded_alphabet();
	PosAut a;
	GroupMap inv = f.inverse_map();
	for (int i = 0; i < graded->size(); ++i) {
		int wt = graded->weight(i);
		a.img.push_back(gr_class(f.images[i], spec, wt));
		a.inv.push_back(gr_class(inv.images[i], spec, wt));
	}
	return make_aut0(eg, std::move(a));
}

CheckReport verify_morphism_identities(const FilteredAut& f, const FilteredAut& g,
                                       const GroupMap& h) {
	CheckReport rep;
	check_same_alphabet(f.f.alpha, g.f.alpha, "verify_morphism_identities");
	require(f.cap == g.cap, "CapMismatch", "operands use different caps");
	const int N = f.cap;
	const long long m = f.degree.lower_bound(), n = g.degree.lower_bound();
	const int max_wt = f.spec.graded_alphabet()->max_weight();

	GroupMap comm = commutator_map(f.f, g.f);
	Degree dc = filtration_degree(comm, f.spec, N);
	if (dc.lower_bound() < std::min<long long>(m + n, N))
		rep.violations.push_back("deg([f,g]) = " + dc.to_string() + " < " +
		                         std::to_string(m + n));

	long long mm = std::min(m, n);
	if (mm >= 1 && N >= mm + 1 + max_wt) {
		int k = static_cast<int>(mm);
		FilteredAut fg = make_filtered(compose_maps(f.f, g.f), f.spec, N);
		if (!der_equal(tau(fg, k), der_add(tau(f, k), tau(g, k))))
			rep.violations.push_back("tau(fg) differs from tau(f) + tau(g) at degree " +
			                         std::to_string(k));
	}

	if (f.degree.is_finite() && g.degree.is_finite() && m >= 1 && n >= 1 &&
	    N >= m + n + 1 + max_wt) {
		int k = static_cast<int>(m + n);
		FilteredAut fc = make_filtered(comm, f.spec, N);
		if (!der_equal(tau(fc, k), der_bracket(tau(f, static_cast<int>(m)),
		                                       tau(g, static_cast<int>(n)))))
			rep.violations.push_back("tau([f,g]) differs from [tau f, tau g] at degree " +
			                         std::to_string(k));
	}

	if (f.degree.is_finite() && m >= 1 && N >= m + 1 + max_wt) {
		int k = static_cast<int>(m);
		GroupMap conj = compose_maps(compose_maps(h, f.f), h.inverse_map());
		FilteredAut fc = make_filtered(conj, f.spec, N);
		if (!der_equal(tau(fc, k), der_action(tau0(h, f.spec), tau(f, k))))
			rep.violations.push_back("tau(h f h^-1) differs from tau0(h) acting on tau(f)");
	}

	for (const FilteredAut* p : {&f, &g}) {
		if (!p->degree.is_finite()) continue;
		long long d = p->degree.finite_value();
		if (d >= 1 && N >= d + 1 + max_wt && der_is_zero(tau(*p, static_cast<int>(d))))
			rep.violations.push_back("tau vanishes at the exact filtration degree " +
			                         std::to_string(d));
		for (int k = 1; k < std::min<long long>(d, 4); ++k)
			if (N >= k + 1 + max_wt && !der_is_zero(tau(*p, k)))
				rep.violations.push_back("tau nonzero below the filtration degree, at " +
				                         std::to_string(k));
	}

	return rep;
}

}  // namespace jtau
