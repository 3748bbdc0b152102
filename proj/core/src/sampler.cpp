#include "jtau/sampler.hpp"

namespace jtau {

namespace {

int pick(std::mt19937_64& rng, int n) {
	return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

GroupMap elementary(const AlphabetPtr& alpha, int i, ReducedWord img, ReducedWord inv_img) {
	GroupMap f = GroupMap::identity(alpha);
	f.images[i] = std::move(img);
	(*f.witness)[i] = std::move(inv_img);
	return f;
}

/* x_i -> w x_i w^-1 for w over the other generators, so the inverse swaps
   w for w^-1. */
GroupMap partial_conjugation(std::mt19937_64& rng, const AlphabetPtr& alpha, int i) {
	ReducedWord w = ReducedWord::identity(alpha);
	int len = 1 + pick(rng, 3);
	for (int k = 0; k < len; ++k) {
		int g = pick(rng, alpha->size() - 1);
		if (g >= i) ++g;
		w = w * ReducedWord::gen(alpha, g, pick(rng, 2) ? 1 : -1);
	}
	ReducedWord x = ReducedWord::gen(alpha, i);
	return elementary(alpha, i, conjugate(w, x), conjugate(w.inverse(), x));
}

}  // namespace

ReducedWord random_word(std::mt19937_64& rng, const AlphabetPtr& alpha, int max_syllables) {
	ReducedWord w = ReducedWord::identity(alpha);
	int n = 1 + pick(rng, max_syllables);
	for (int k = 0; k < n; ++k) {
		long long e = 1 + pick(rng, 2);
		w = w * ReducedWord::gen(alpha, pick(rng, alpha->size()), pick(rng, 2) ? e : -e);
	}
	return w;
}

ReducedWord random_word_of_degree(std::mt19937_64& rng, const AlphabetPtr& alpha, int d) {
	const std::vector<Mono>& basis = lyndon_words(alpha, d);
	require(!basis.empty(), "BadDegree",
	        "no basis words of degree " + std::to_string(d));
	ReducedWord w = bracketing_to_group_word(alpha, basis[pick(rng, basis.size())]);
	if (basis.size() > 1 && pick(rng, 2)) {
		int other = pick(rng, basis.size());
		ReducedWord v = bracketing_to_group_word(alpha, basis[other]);
		if (v != w) w = w * v;
	}
	ReducedWord c = ReducedWord::identity(alpha);
	int len = pick(rng, 4);
	for (int k = 0; k < len; ++k)
		c = c * ReducedWord::gen(alpha, pick(rng, alpha->size()), pick(rng, 2) ? 1 : -1);
	return conjugate(c, w);
}

LieElement random_lie(std::mt19937_64& rng, const AlphabetPtr& alpha, const Ring& ring,
                      int degree) {
	LieElement x(alpha, ring);
	std::uniform_int_distribution<int> coef(-2, 2);
	for (int i = 0; i < lyndon_dim(alpha, degree); ++i) x.add_coord(degree, i, coef(rng));
	return x;
}

GroupMap random_nielsen_map(std::mt19937_64& rng, const AlphabetPtr& alpha, int moves) {
	GroupMap f = GroupMap::identity(alpha);
	for (int s = 0; s < moves; ++s) {
		int kind = pick(rng, 3);
		int i = pick(rng, alpha->size());
		GroupMap e = GroupMap::identity(alpha);
		if (kind == 0 && alpha->size() >= 2) {
			int j = pick(rng, alpha->size() - 1);
			if (j >= i) ++j;
			std::swap(e.images[i], e.images[j]);
			std::swap((*e.witness)[i], (*e.witness)[j]);
		} else if (kind == 1) {
			e = elementary(alpha, i, ReducedWord::gen(alpha, i, -1),
			               ReducedWord::gen(alpha, i, -1));
		} else if (alpha->size() >= 2) {
			int j = pick(rng, alpha->size() - 1);
			if (j >= i) ++j;
			ReducedWord x = ReducedWord::gen(alpha, i), y = ReducedWord::gen(alpha, j);
			e = elementary(alpha, i, x * y, x * y.inverse());
		}
		f = compose_maps(f, e);
	}
	return f;
}

GroupMap random_ia_map(std::mt19937_64& rng, const AlphabetPtr& alpha, int moves) {
	require(alpha->size() >= 2, "StructureMismatch", "IA sampling needs rank >= 2");
	GroupMap f = GroupMap::identity(alpha);
	for (int s = 0; s < moves; ++s) {
		int kind = pick(rng, alpha->size() >= 3 ? 3 : 2);
		GroupMap e = GroupMap::identity(alpha);
		if (kind == 0) {
			ReducedWord w = random_word(rng, alpha, 3);
			if (w.is_identity()) continue;
			e = GroupMap::inner(w);
		} else if (kind == 1) {
			e = partial_conjugation(rng, alpha, pick(rng, alpha->size()));
		} else {
			int i = pick(rng, alpha->size());
			int j = pick(rng, alpha->size() - 1);
			if (j >= i) ++j;
			int k = j;
			while (k == j || k == i) k = pick(rng, alpha->size());
			ReducedWord x = ReducedWord::gen(alpha, i);
			ReducedWord c = commutator(ReducedWord::gen(alpha, j), ReducedWord::gen(alpha, k));
			e = elementary(alpha, i, x * c, x * c.inverse());
		}
		f = compose_maps(f, e);
	}
	return f;
}

GroupMap random_weighted_map(std::mt19937_64& rng, const AlphabetPtr& alpha, int moves) {
	std::vector<int> light, heavy;
	for (int i = 0; i < alpha->size(); ++i)
		(alpha->weight(i) == 1 ? light : heavy).push_back(i);
	require(!light.empty(), "StructureMismatch", "need a weight-1 generator");
	GroupMap f = GroupMap::identity(alpha);
	for (int s = 0; s < moves; ++s) {
		int kind = pick(rng, 3);
		GroupMap e = GroupMap::identity(alpha);
		if (kind == 0) {
			ReducedWord w = random_word(rng, alpha, 3);
			if (w.is_identity()) continue;
			e = GroupMap::inner(w);
		} else if (kind == 1 && !heavy.empty()) {
			/* weight-1 generator times a weight-2 generator */
			int i = light[pick(rng, light.size())];
			ReducedWord x = ReducedWord::gen(alpha, i);
			ReducedWord u = ReducedWord::gen(alpha, heavy[pick(rng, heavy.size())],
			                                 pick(rng, 2) ? 1 : -1);
			e = elementary(alpha, i, x * u, x * u.inverse());
		} else {
			/* any generator times a commutator of two others */
			int i = pick(rng, alpha->size());
			int j = pick(rng, alpha->size()), k = pick(rng, alpha->size());
			if (alpha->size() >= 3) {
				j = pick(rng, alpha->size() - 1);
				if (j >= i) ++j;
				k = j;
				while (k == j || k == i) k = pick(rng, alpha->size());
			} else {
				continue;
			}
			ReducedWord x = ReducedWord::gen(alpha, i);
			ReducedWord c = commutator(ReducedWord::gen(alpha, j), ReducedWord::gen(alpha, k));
			e = elementary(alpha, i, x * c, x * c.inverse());
		}
		f = compose_maps(f, e);
	}
	return f;
}

}  // namespace jtau
