#pragma once
#include <random>

#include "jtau/freelie.hpp"

namespace jtau {

/* Deterministic sample streams for property harnesses and the CLI. Every
   function advances the caller's generator; identical seeds give identical
   samples. */

ReducedWord random_word(std::mt19937_64& rng, const AlphabetPtr& alpha, int max_syllables);

/* Word of exact lower-central degree d: a product of one or two distinct
   instantiated Lyndon bracketings of degree d, conjugated by a random word.
   The gr-class is a nonzero combination of basis elements, so the degree is
   exactly d. */
ReducedWord random_word_of_degree(std::mt19937_64& rng, const AlphabetPtr& alpha, int d);

LieElement random_lie(std::mt19937_64& rng, const AlphabetPtr& alpha, const Ring& ring,
                      int degree);

/* Composition of elementary Nielsen moves (swap, invert, right multiply),
   with witness. Generally acts nontrivially on the first layer. */
GroupMap random_nielsen_map(std::mt19937_64& rng, const AlphabetPtr& alpha, int moves);

/* Composition of inner automorphisms, partial conjugations, and (rank >= 3)
   commutator transvections x_i -> x_i [x_j, x_k]. Trivial on the first
   layer, so the filtration degree is at least 1. */
GroupMap random_ia_map(std::mt19937_64& rng, const AlphabetPtr& alpha, int moves);

/* Automorphisms compatible with a two-weight alphabet: inner conjugations,
   transvections of weight-1 generators by weight-2 generators or
   commutators, and corrections of weight-2 generators by commutator words.
   Images of weight-2 generators stay in the second filtration term. */
GroupMap random_weighted_map(std::mt19937_64& rng, const AlphabetPtr& alpha, int moves);

}  // namespace jtau
