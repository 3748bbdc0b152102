#include "jtau/eglie.hpp"

#include <random>

namespace jtau {

namespace {

void validate_pos_aut(const AlphabetPtr& pos, const Ring& ring, const PosAut& f) {
	require(f.img.size() == static_cast<size_t>(pos->size()) && f.img.size() == f.inv.size(),
	        "StructureMismatch", "automorphism needs one image and one inverse per generator");
	for (int i = 0; i < pos->size(); ++i) {
		for (const LieElement* x : {&f.img[i], &f.inv[i]}) {
			check_same_alphabet(x->alphabet(), pos, "automorphism image");
			check_same_ring(x->ring(), ring, "automorphism image");
			require(!x->is_zero() && x->is_homogeneous() &&
			            x->min_degree() == pos->weight(i),
			        "StructureMismatch",
			        "image of " + pos->name(i) + " must be homogeneous of its weight");
		}
	}
}

LieElement apply_images(const AlphabetPtr& pos, const Ring& ring,
                        const std::vector<LieElement>& images, const LieElement& x) {
	if (x.is_zero()) return LieElement::zero(pos, ring);
	int cap = x.max_degree();
	std::vector<TruncatedSeries> t;
	t.reserve(images.size());
	for (const auto& im : images) t.push_back(lie_to_tensor(im, cap));
	return tensor_to_lie(substitute(lie_to_tensor(x, cap), t));
}

std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

LieElement random_homogeneous(const AlphabetPtr& alpha, const Ring& ring, int degree,
                              std::mt19937_64& rng) {
	LieElement x(alpha, ring);
	std::uniform_int_distribution<int> coef(-2, 2);
	for (int i = 0; i < lyndon_dim(alpha, degree); ++i) x.add_coord(degree, i, coef(rng));
	return x;
}

}  // namespace

EgLie::EgLie(AlphabetPtr pos, Ring ring) : pos_(std::move(pos)), ring_(ring) {}

EgLie::EgLie(AlphabetPtr pos, Ring ring, AlphabetPtr l0, std::vector<ReducedWord> l0_relations,
             std::vector<PosAut> action)
    : pos_(std::move(pos)),
      ring_(ring),
      l0_(std::move(l0)),
      rels_(std::move(l0_relations)),
      action_(std::move(action)) {
	require(l0_ != nullptr, "StructureMismatch", "null L_0 alphabet");
	require(action_.size() == static_cast<size_t>(l0_->size()), "StructureMismatch",
	        "one action automorphism per L_0 generator required");
	for (const auto& f : action_) validate_pos_aut(pos_, ring_, f);
	for (const auto& f : action_) {
		for (int i = 0; i < pos_->size(); ++i) {
			require(apply_images(pos_, ring_, f.img, f.inv[i]) == gen_class(i) &&
			            apply_images(pos_, ring_, f.inv, f.img[i]) == gen_class(i),
			        "StructureMismatch", "action images and inverses do not invert");
		}
	}
	for (const auto& r : rels_) {
		check_same_alphabet(r.alphabet(), l0_, "L_0 relation");
		PosAut a = l0_action(*this, r);
		for (int i = 0; i < pos_->size(); ++i)
			require(a.img[i] == gen_class(i), "StructureMismatch",
			        "relation " + word_to_string(r) + " does not act as the identity");
	}
}

void check_same_eglie(const EgLiePtr& a, const EgLiePtr& b, const char* where) {
	require(a != nullptr && b != nullptr, "StructureMismatch",
	        std::string(where) + ": null eg-Lie algebra");
	if (a == b) return;
	bool same = *a->pos() == *b->pos() && a->ring() == b->ring() && !a->has_l0() &&
	            !b->has_l0();
	require(same, "StructureMismatch",
	        std::string(where) + ": operands live in different eg-Lie algebras");
}

LieElement apply_pos(const EgLie& eg, const PosAut& f, const LieElement& x) {
	return apply_images(eg.pos(), eg.ring(), f.img, x);
}

PosAut pos_identity(const EgLie& eg) {
	PosAut f;
	for (int i = 0; i < eg.pos()->size(); ++i) {
		f.img.push_back(eg.gen_class(i));
		f.inv.push_back(eg.gen_class(i));
	}
	return f;
}

PosAut inverse_pos(const PosAut& f) { return {f.inv, f.img}; }

PosAut compose_pos(const EgLie& eg, const PosAut& f, const PosAut& g) {
	PosAut h;
	for (int i = 0; i < eg.pos()->size(); ++i) {
		h.img.push_back(apply_pos(eg, f, g.img[i]));
		h.inv.push_back(apply_pos(eg, inverse_pos(g), f.inv[i]));
	}
	return h;
}

PosAut make_pos_aut(const EgLie& eg, std::vector<LieElement> img, std::vector<LieElement> inv) {
	PosAut f{std::move(img), std::move(inv)};
	validate_pos_aut(eg.pos(), eg.ring(), f);
	for (int i = 0; i < eg.pos()->size(); ++i)
		require(apply_pos(eg, f, f.inv[i]) == eg.gen_class(i) &&
		            apply_pos(eg, inverse_pos(f), f.img[i]) == eg.gen_class(i),
		        "StructureMismatch", "images and inverse images do not invert each other");
	return f;
}

PosAut l0_action(const EgLie& eg, const ReducedWord& w) {
	require(eg.has_l0(), "StructureMismatch", "structure has a trivial L_0");
	check_same_alphabet(w.alphabet(), eg.l0(), "l0_action");
	PosAut acc = pos_identity(eg);
	for (const auto& s : w.syllables()) {
		PosAut step = s.exp > 0 ? eg.action(s.gen) : inverse_pos(eg.action(s.gen));
		long long n = s.exp > 0 ? s.exp : -s.exp;
		for (long long k = 0; k < n; ++k) acc = compose_pos(eg, acc, step);
	}
	return acc;
}

LieElement eval_cocycle(const EgLie& eg, const Cocycle& c, const ReducedWord& w) {
	require(eg.has_l0(), "StructureMismatch", "cocycle needs a nontrivial L_0");
	check_same_alphabet(w.alphabet(), eg.l0(), "eval_cocycle");
	require(c.values.size() == static_cast<size_t>(eg.l0()->size()), "StructureMismatch",
	        "cocycle needs one value per L_0 generator");
	LieElement out = eg.zero();
	PosAut prefix = pos_identity(eg);
	for (const auto& s : w.syllables()) {
		long long n = s.exp > 0 ? s.exp : -s.exp;
		for (long long k = 0; k < n; ++k) {
			if (s.exp > 0) {
				out = out + apply_pos(eg, prefix, c.values[s.gen]);
				prefix = compose_pos(eg, prefix, eg.action(s.gen));
			} else {
				prefix = compose_pos(eg, prefix, inverse_pos(eg.action(s.gen)));
				out = out - apply_pos(eg, prefix, c.values[s.gen]);
			}
		}
	}
	return out;
}

// ------------------------------------------------------------- derivations

Derivation zero_derivation(const EgLiePtr& eg, int degree) {
	require(degree >= 1, "BadDegree", "derivation degree must be >= 1");
	Derivation d{eg, degree, Cocycle{degree, {}}, {}};
	if (eg->has_l0())
		d.d0.values.assign(eg->l0()->size(), eg->zero());
	d.values.assign(eg->pos()->size(), eg->zero());
	return d;
}

static void validate_derivation_shape(const Derivation& d) {
	require(d.eg != nullptr, "StructureMismatch", "derivation without parent structure");
	require(d.degree >= 1, "BadDegree", "derivation degree must be >= 1");
	const auto& pos = d.eg->pos();
	require(d.values.size() == static_cast<size_t>(pos->size()), "StructureMismatch",
	        "derivation needs one value per positive generator");
	for (int i = 0; i < pos->size(); ++i) {
		check_same_alphabet(d.values[i].alphabet(), pos, "derivation value");
		check_same_ring(d.values[i].ring(), d.eg->ring(), "derivation value");
		require(d.values[i].is_zero() ||
		            (d.values[i].is_homogeneous() &&
		             d.values[i].min_degree() == d.degree + pos->weight(i)),
		        "StructureMismatch",
		        "value on " + pos->name(i) + " must be homogeneous of degree " +
		            std::to_string(d.degree + pos->weight(i)));
	}
	size_t nl0 = d.eg->has_l0() ? d.eg->l0()->size() : 0;
	require(d.d0.values.size() == nl0, "StructureMismatch",
	        "cocycle needs one value per L_0 generator");
	require(d.d0.degree == d.degree, "StructureMismatch", "cocycle degree mismatch");
	for (const auto& v : d.d0.values)
		require(v.is_zero() || (v.is_homogeneous() && v.min_degree() == d.degree),
		        "StructureMismatch",
		        "cocycle values must be homogeneous of degree " + std::to_string(d.degree));
}

Derivation make_derivation(const EgLiePtr& eg, int degree, Cocycle d0,
                           std::vector<LieElement> values) {
	Derivation d{eg, degree, std::move(d0), std::move(values)};
	validate_derivation_shape(d);
	return d;
}

bool der_equal(const Derivation& a, const Derivation& b) {
	check_same_eglie(a.eg, b.eg, "derivation comparison");
	if (a.degree != b.degree) return false;
	for (size_t i = 0; i < a.values.size(); ++i)
		if (a.values[i] != b.values[i]) return false;
	for (size_t i = 0; i < a.d0.values.size(); ++i)
		if (a.d0.values[i] != b.d0.values[i]) return false;
	return true;
}

bool der_is_zero(const Derivation& a) {
	for (const auto& v : a.values)
		if (!v.is_zero()) return false;
	for (const auto& v : a.d0.values)
		if (!v.is_zero()) return false;
	return true;
}

Derivation der_add(const Derivation& a, const Derivation& b) {
	check_same_eglie(a.eg, b.eg, "derivation sum");
	require(a.degree == b.degree, "StructureMismatch", "derivation sum needs equal degrees");
	Derivation r = a;
	for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] + b.values[i];
	for (size_t i = 0; i < r.d0.values.size(); ++i)
		r.d0.values[i] = r.d0.values[i] + b.d0.values[i];
	return r;
}

Derivation der_scale(const Derivation& a, const mpq_class& c) {
	Derivation r = a;
	for (auto& v : r.values) v = v.scale(c);
	for (auto& v : r.d0.values) v = v.scale(c);
	return r;
}

LieElement eval_derivation(const Derivation& d, const LieElement& x) {
	check_same_alphabet(x.alphabet(), d.eg->pos(), "eval_derivation");
	check_same_ring(x.ring(), d.eg->ring(), "eval_derivation");
	if (x.is_zero()) return d.eg->zero();
	int cap = x.max_degree() + d.degree;
	std::vector<TruncatedSeries> images;
	images.reserve(d.values.size());
	for (const auto& v : d.values) images.push_back(lie_to_tensor(v, cap));
	return tensor_to_lie(derive(lie_to_tensor(x, cap), images));
}

CheckReport check_derivation(const Derivation& d, std::uint64_t seed, int samples) {
	CheckReport rep;
	try {
		validate_derivation_shape(d);
	} catch (const Error& e) {
		rep.violations.push_back(e.what());
		return rep;
	}
	const EgLie& eg = *d.eg;
	auto rng = seeded_rng(seed);
	std::uniform_int_distribution<int> deg_pick(1, 2);
	for (int s = 0; s < samples; ++s) {
		LieElement u = random_homogeneous(eg.pos(), eg.ring(), deg_pick(rng), rng);
		LieElement v = random_homogeneous(eg.pos(), eg.ring(), deg_pick(rng), rng);
		LieElement lhs = eval_derivation(d, lie_bracket(u, v));
		LieElement rhs = lie_bracket(eval_derivation(d, u), v) +
		                 lie_bracket(u, eval_derivation(d, v));
		if (lhs != rhs)
			rep.violations.push_back("Leibniz rule fails on a sampled pair (sample " +
			                         std::to_string(s) + ")");
	}
	if (eg.has_l0()) {
		for (const auto& r : eg.l0_relations())
			if (!eval_cocycle(eg, d.d0, r).is_zero())
				rep.violations.push_back("cocycle does not vanish on relation " +
				                         word_to_string(r));
		/* d(a.b) = [d0(a), a.b] + a.d(b) on generator pairs, then on sampled
		   word/element pairs */
		for (int a = 0; a < eg.l0()->size(); ++a) {
			const PosAut& act = eg.action(a);
			for (int b = 0; b < eg.pos()->size(); ++b) {
				LieElement ab = act.img[b];
				LieElement lhs = eval_derivation(d, ab);
				LieElement rhs = lie_bracket(d.d0.values[a], ab) +
				                 apply_pos(eg, act, eval_derivation(d, eg.gen_class(b)));
				if (lhs != rhs)
					rep.violations.push_back(
					    "mixed rule fails on (" + eg.l0()->name(a) + ", " +
					    eg.pos()->name(b) + ")");
			}
		}
		std::uniform_int_distribution<int> lw(1, 3), sign(0, 1);
		for (int s = 0; s < samples; ++s) {
			ReducedWord w = ReducedWord::identity(eg.l0());
			int len = lw(rng);
			for (int k = 0; k < len; ++k) {
				std::uniform_int_distribution<int> gp(0, eg.l0()->size() - 1);
				w = w * ReducedWord::gen(eg.l0(), gp(rng), sign(rng) ? 1 : -1);
			}
			LieElement u = random_homogeneous(eg.pos(), eg.ring(), deg_pick(rng), rng);
			PosAut act = l0_action(eg, w);
			LieElement wu = apply_pos(eg, act, u);
			LieElement lhs = eval_derivation(d, wu);
			LieElement rhs = lie_bracket(eval_cocycle(eg, d.d0, w), wu) +
			                 apply_pos(eg, act, eval_derivation(d, u));
			if (lhs != rhs)
				rep.violations.push_back("mixed rule fails on sampled word " +
				                         word_to_string(w));
		}
	}
	return rep;
}

Derivation der_bracket(const Derivation& d, const Derivation& e) {
	check_same_eglie(d.eg, e.eg, "der_bracket");
	Derivation r = zero_derivation(d.eg, d.degree + e.degree);
	for (size_t i = 0; i < r.values.size(); ++i)
		r.values[i] = eval_derivation(d, e.values[i]) - eval_derivation(e, d.values[i]);
	for (size_t a = 0; a < r.d0.values.size(); ++a)
		r.d0.values[a] = eval_derivation(d, e.d0.values[a]) -
		                 eval_derivation(e, d.d0.values[a]) -
		                 lie_bracket(d.d0.values[a], e.d0.values[a]);
	return r;
}

// -------------------------------------------------------- degree-0 action

Aut0 make_aut0(const EgLiePtr& eg, PosAut pos, std::vector<ReducedWord> l0_img,
               std::vector<ReducedWord> l0_inv) {
	Aut0 f{eg, std::move(pos), std::move(l0_img), std::move(l0_inv)};
	validate_pos_aut(eg->pos(), eg->ring(), f.pos);
	for (int i = 0; i < eg->pos()->size(); ++i)
		require(apply_pos(*eg, f.pos, f.pos.inv[i]) == eg->gen_class(i),
		        "StructureMismatch", "positive images and inverses do not invert");
	if (eg->has_l0()) {
		size_t n = eg->l0()->size();
		require(f.l0_img.size() == n && f.l0_inv.size() == n, "StructureMismatch",
		        "degree-0 automorphism needs L_0 images and a witness");
		GroupMap f0{eg->l0(), f.l0_img, f.l0_inv};
		require(verify_automorphism(f0), "NotAnAutomorphism",
		        "L_0 images and witness do not invert each other");
		for (const auto& rel : eg->l0_relations())
			require(apply_map(f0, rel).is_identity(), "StructureMismatch",
			        "L_0 automorphism does not fix relation " + word_to_string(rel));
		/* equivariance: f(a.x) = f0(a).f(x) on generator pairs */
		for (int a = 0; a < eg->l0()->size(); ++a) {
			PosAut imaged = l0_action(*eg, f.l0_img[a]);
			for (int i = 0; i < eg->pos()->size(); ++i) {
				LieElement lhs = apply_pos(*eg, f.pos, eg->action(a).img[i]);
				LieElement rhs = apply_pos(*eg, imaged, f.pos.img[i]);
				require(lhs == rhs, "StructureMismatch",
				        "action equivariance fails on (" + eg->l0()->name(a) + ", " +
				            eg->pos()->name(i) + ")");
			}
		}
	} else {
		require(f.l0_img.empty() && f.l0_inv.empty(), "StructureMismatch",
		        "L_0 data given for a trivial L_0");
	}
	return f;
}

Aut0 aut0_identity(const EgLiePtr& eg) {
	Aut0 f{eg, pos_identity(*eg), {}, {}};
	if (eg->has_l0())
		for (int i = 0; i < eg->l0()->size(); ++i) {
			f.l0_img.push_back(ReducedWord::gen(eg->l0(), i));
			f.l0_inv.push_back(ReducedWord::gen(eg->l0(), i));
		}
	return f;
}

Aut0 aut0_inverse(const Aut0& f) { return {f.eg, inverse_pos(f.pos), f.l0_inv, f.l0_img}; }

Derivation der_action(const Aut0& f, const Derivation& d) {
	check_same_eglie(f.eg, d.eg, "der_action");
	Derivation r = zero_derivation(d.eg, d.degree);
	for (int i = 0; i < d.eg->pos()->size(); ++i)
		r.values[i] =
		    apply_pos(*d.eg, f.pos, eval_derivation(d, f.pos.inv[i]));
	if (d.eg->has_l0()) {
		GroupMap f0inv{d.eg->l0(), f.l0_inv, f.l0_img};
		for (int a = 0; a < d.eg->l0()->size(); ++a) {
			ReducedWord pre = apply_map(f0inv, ReducedWord::gen(d.eg->l0(), a));
			r.d0.values[a] = apply_pos(*d.eg, f.pos, eval_cocycle(*d.eg, d.d0, pre));
		}
	}
	return r;
}

Derivation adjoint(const EgLiePtr& eg, const LieElement& x) {
	check_same_alphabet(x.alphabet(), eg->pos(), "adjoint");
	check_same_ring(x.ring(), eg->ring(), "adjoint");
	require(!x.is_zero() && x.is_homogeneous(), "NotHomogeneous",
	        "adjoint needs a nonzero homogeneous positive element");
	Derivation d = zero_derivation(eg, x.min_degree());
	for (int i = 0; i < eg->pos()->size(); ++i)
		d.values[i] = lie_bracket(x, eg->gen_class(i));
	if (eg->has_l0())
		for (int a = 0; a < eg->l0()->size(); ++a)
			d.d0.values[a] = x - apply_pos(*eg, eg->action(a), x);
	return d;
}

// ------------------------------------------------------- truncate, extend

DerivationSeed truncate_derivation(const Derivation& d) {
	return {d.degree, d.d0, d.values};
}

Derivation extend_derivation(const EgLiePtr& eg, const DerivationSeed& seed) {
	Derivation d{eg, seed.degree, seed.d0, seed.values};
	try {
		validate_derivation_shape(d);
		if (eg->has_l0()) {
			for (const auto& r : eg->l0_relations())
				require(eval_cocycle(*eg, d.d0, r).is_zero(), "IncompatiblePair",
				        "cocycle does not vanish on relation " + word_to_string(r));
			for (int a = 0; a < eg->l0()->size(); ++a) {
				const PosAut& act = eg->action(a);
				for (int b = 0; b < eg->pos()->size(); ++b) {
					LieElement ab = act.img[b];
					LieElement lhs = eval_derivation(d, ab);
					LieElement rhs =
					    lie_bracket(d.d0.values[a], ab) +
					    apply_pos(*eg, act, eval_derivation(d, eg->gen_class(b)));
					require(lhs == rhs, "IncompatiblePair",
					        "seed violates the mixed rule on (" + eg->l0()->name(a) +
					            ", " + eg->pos()->name(b) + ")");
				}
			}
		}
	} catch (const Error& e) {
		if (e.name() == "IncompatiblePair") throw;
		fail("IncompatiblePair", e.what());
	}
	return d;
}

}  // namespace jtau
