#pragma once
#include "jtau/eglie.hpp"
#include "jtau/nseries.hpp"

namespace jtau {

/* Automorphism filtered by a series, with its filtration degree computed at
   construction. Degree d means: every defect f(x)x^-1 lies d steps deeper in
   the filtration than x requires, and d is maximal with that property.
   Degree 0 is an automorphism acting nontrivially on the first layer;
   AboveCap(N) means every check up to N passed. */
struct FilteredAut {
	GroupMap f;
	SeriesSpec spec;
	int cap;
	Degree degree;
};

/* Largest m <= cap with series_degree(f(x) x^-1) >= m + weight(x) for every
   generator x. Errors: NotAnAutomorphism (witness fails), MissingWitness,
   StructureMismatch (Weight series only: f or its inverse does not keep
   weight-2 generators in the second filtration term, so f does not act on
   the filtered group at all). */
Degree filtration_degree(const GroupMap& f, const SeriesSpec& spec, int cap);

FilteredAut make_filtered(GroupMap f, const SeriesSpec& spec, int cap);

/* Derivation values of tau live in the free Lie algebra over the grading
   alphabet with a trivial degree-0 part. */
EgLiePtr derivation_target(const SeriesSpec& spec);

/* Johnson derivation at degree m: x-bar -> class of f(x) x^-1 in layer
   m + weight(x). Zero when the degree of f exceeds m. Defaults to the
   computed degree of f, which must then be finite and >= 1.
   Errors: DegreeTooLow (degree of f below m, or m < 1); CapTooSmall (cap
   below m + 1 + max weight). */
Derivation tau(const FilteredAut& f);
Derivation tau(const FilteredAut& f, int m);

/* Degree-0 action of f on the graded Lie algebra: the matrix induced on the
   first layer, plus the layer-2 block when weight-2 generators exist. */
Aut0 tau0(const GroupMap& f, const SeriesSpec& spec);

/* Executable forms of the morphism identities, report-valued:
     (i)   deg([f,g]) >= deg f + deg g (cap-aware)
     (ii)  tau_m(fg) = tau_m(f) + tau_m(g) at m = min(deg f, deg g) >= 1
     (iii) tau(commutator(f,g)) = der_bracket(tau f, tau g) at deg f + deg g
     (iv)  tau(h f h^-1) = der_action(tau0(h), tau(f))
     (v)   tau_m(f) = 0 exactly below the degree, nonzero at the degree
   Identities needing an exact finite degree are skipped when the degree is
   AboveCap; skipped checks are not violations. */
CheckReport verify_morphism_identities(const FilteredAut& f, const FilteredAut& g,
                                       const GroupMap& h);

}  // namespace jtau
