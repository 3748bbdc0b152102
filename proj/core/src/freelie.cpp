#include "jtau/freelie.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace jtau {

namespace {

/* All Lyndon data is cached per weight profile; generator names play no role
   here. One recursive mutex guards the registry and the caches it owns.
   Degree tables live in node-stable maps and are only appended to while a
   degree is first built, so references handed out stay valid. */
struct BasisCache {
	std::vector<int> weights;
	int built = -1;
	std::map<int, std::vector<Mono>> by_degree;
	std::map<Mono, std::map<Mono, mpz_class>> expansions;

	int degree_of(const Mono& m) const {
		int d = 0;
		for (unsigned char c : m) d += weights[c];
		return d;
	}
};

std::recursive_mutex g_mu;
std::map<std::vector<int>, BasisCache> g_caches;

/* Duval's algorithm: all Lyndon words of length <= n over k letters, in
   lexicographic order. */
void duval(int k, int n, const std::function<void(const Mono&)>& emit) {
	Mono t(1, '\0');
	while (!t.empty()) {
		emit(t);
		Mono s;
		while (static_cast<int>(s.size()) < n) s.push_back(t[s.size() % t.size()]);
		while (!s.empty() && s.back() == static_cast<char>(k - 1)) s.pop_back();
		if (!s.empty()) ++s.back();
		t = s;
	}
}

BasisCache& cache_for(const AlphabetPtr& alpha) {
	std::vector<int> w;
	for (int i = 0; i < alpha->size(); ++i) w.push_back(alpha->weight(i));
	auto [it, fresh] = g_caches.try_emplace(w);
	if (fresh) it->second.weights = w;
	return it->second;
}

void ensure_degree(BasisCache& c, int degree) {
	if (degree <= c.built) return;
	int k = static_cast<int>(c.weights.size());
	/* letters have weight >= 1, so new degrees only gain words of length
	   <= degree; previously built degrees are never touched again */
	duval(k, degree, [&](const Mono& m) {
		int d = c.degree_of(m);
		if (d > c.built && d <= degree) c.by_degree[d].push_back(m);
	});
	c.built = degree;
}

const std::map<Mono, mpz_class>& expansion_of(BasisCache& c, const Mono& w) {
	auto it = c.expansions.find(w);
	if (it != c.expansions.end()) return it->second;
	std::map<Mono, mpz_class> e;
	if (w.size() == 1) {
		e[w] = 1;
	} else {
		auto [u, v] = standard_factorization(w);
		const auto eu = expansion_of(c, u);  // copies: recursion may rehash the map
		const auto ev = expansion_of(c, v);
		for (const auto& [mu, cu] : eu)
			for (const auto& [mv, cv] : ev) {
				e[mu + mv] += cu * cv;
				e[mv + mu] -= cu * cv;
			}
		for (auto i = e.begin(); i != e.end();)
			i = sgn(i->second) == 0 ? e.erase(i) : std::next(i);
	}
	return c.expansions.emplace(w, std::move(e)).first->second;
}

}  // namespace

std::pair<Mono, Mono> standard_factorization(const Mono& w) {
	require(w.size() >= 2, "NotComposite", "standard factorization needs length >= 2");
	size_t best = 1;
	for (size_t i = 2; i < w.size(); ++i)
		if (w.compare(i, Mono::npos, w, best, Mono::npos) < 0) best = i;
	return {w.substr(0, best), w.substr(best)};
}

const std::vector<Mono>& lyndon_words(const AlphabetPtr& alpha, int degree) {
	require(degree >= 1, "BadDegree", "lyndon_words needs degree >= 1");
	std::lock_guard<std::recursive_mutex> lock(g_mu);
	BasisCache& c = cache_for(alpha);
	ensure_degree(c, degree);
	return c.by_degree[degree];  // default-constructs an empty table if the degree has no words
}

int lyndon_dim(const AlphabetPtr& alpha, int degree) {
	return static_cast<int>(lyndon_words(alpha, degree).size());
}

std::string bracketing_to_string(const AlphabetPtr& alpha, const Mono& w) {
	require(!w.empty(), "BadDegree", "empty bracketing");
	if (w.size() == 1) return alpha->name(static_cast<unsigned char>(w[0]));
	auto [u, v] = standard_factorization(w);
	return "[" + bracketing_to_string(alpha, u) + "," + bracketing_to_string(alpha, v) + "]";
}

ReducedWord bracketing_to_group_word(const AlphabetPtr& alpha, const Mono& w) {
	require(!w.empty(), "BadDegree", "empty bracketing");
	if (w.size() == 1) return ReducedWord::gen(alpha, static_cast<unsigned char>(w[0]));
	auto [u, v] = standard_factorization(w);
	return commutator(bracketing_to_group_word(alpha, u), bracketing_to_group_word(alpha, v));
}

// ------------------------------------------------------------- LieElement

LieElement::LieElement(AlphabetPtr alpha, Ring ring)
    : alpha_(std::move(alpha)), ring_(ring) {}

LieElement LieElement::generator(AlphabetPtr alpha, Ring ring, int i) {
	require(i >= 0 && i < alpha->size(), "UnknownGenerator", "generator index out of range");
	int d = alpha->weight(i);
	Mono m(1, static_cast<char>(i));
	const auto& words = lyndon_words(alpha, d);
	auto it = std::lower_bound(words.begin(), words.end(), m);
	LieElement x(alpha, ring);
	x.add_coord(d, static_cast<int>(it - words.begin()), 1);
	return x;
}

LieElement LieElement::basis_element(AlphabetPtr alpha, Ring ring, int degree, int index) {
	require(index >= 0 && index < lyndon_dim(alpha, degree), "BadDegree",
	        "basis index out of range");
	LieElement x(std::move(alpha), ring);
	x.add_coord(degree, index, 1);
	return x;
}

void LieElement::add_coord(int degree, int index, const mpq_class& c) {
	Key k{degree, index};
	auto it = coords_.find(k);
	if (it == coords_.end()) {
		mpq_class r = ring_.reduce(c);
		if (sgn(r) != 0) coords_.emplace(k, std::move(r));
	} else {
		it->second = ring_.add(it->second, c);
		if (sgn(it->second) == 0) coords_.erase(it);
	}
}

mpq_class LieElement::coord(int degree, int index) const {
	auto it = coords_.find({degree, index});
	return it == coords_.end() ? mpq_class(0) : it->second;
}

int LieElement::max_degree() const {
	return coords_.empty() ? 0 : coords_.rbegin()->first.first;
}

int LieElement::min_degree() const {
	return coords_.empty() ? 0 : coords_.begin()->first.first;
}

bool LieElement::is_homogeneous() const {
	return coords_.empty() || min_degree() == max_degree();
}

LieElement LieElement::homogeneous_part(int d) const {
	LieElement r(alpha_, ring_);
	for (const auto& [k, c] : coords_)
		if (k.first == d) r.coords_.emplace(k, c);
	return r;
}

LieElement LieElement::in_ring(const Ring& r) const {
	LieElement out(alpha_, r);
	for (const auto& [k, c] : coords_) out.add_coord(k.first, k.second, c);
	return out;
}

void check_lie_compatible(const LieElement& a, const LieElement& b, const char* where) {
	check_same_alphabet(a.alphabet(), b.alphabet(), where);
	check_same_ring(a.ring(), b.ring(), where);
}

LieElement LieElement::operator+(const LieElement& o) const {
	check_lie_compatible(*this, o, "lie sum");
	LieElement r = *this;
	for (const auto& [k, c] : o.coords_) r.add_coord(k.first, k.second, c);
	return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
	check_lie_compatible(*this, o, "lie difference");
	LieElement r = *this;
	for (const auto& [k, c] : o.coords_) r.add_coord(k.first, k.second, -c);
	return r;
}

LieElement LieElement::operator-() const {
	LieElement r(alpha_, ring_);
	for (const auto& [k, c] : coords_) r.coords_.emplace(k, ring_.neg(c));
	return r;
}

LieElement LieElement::scale(const mpq_class& c) const {
	LieElement r(alpha_, ring_);
	if (ring_.is_zero(ring_.reduce(c))) return r;
	for (const auto& [k, v] : coords_) {
		mpq_class w = ring_.mul(v, c);
		if (sgn(w) != 0) r.coords_.emplace(k, std::move(w));
	}
	return r;
}

bool LieElement::operator==(const LieElement& o) const {
	check_lie_compatible(*this, o, "lie comparison");
	return coords_ == o.coords_;
}

// ------------------------------------------------------------ conversions

TruncatedSeries lie_to_tensor(const LieElement& x, int cap) {
	TruncatedSeries out(x.alphabet(), x.ring(), cap);
	std::lock_guard<std::recursive_mutex> lock(g_mu);
	BasisCache& c = cache_for(x.alphabet());
	for (const auto& [k, coeff] : x.coords()) {
		if (k.first > cap) continue;
		ensure_degree(c, k.first);
		const Mono& w = c.by_degree[k.first][k.second];
		for (const auto& [m, z] : expansion_of(c, w)) out.add_term(m, coeff * mpq_class(z));
	}
	return out;
}

LieElement tensor_to_lie(const TruncatedSeries& s) {
	LieElement out(s.alphabet(), s.ring());
	require(sgn(s.constant_term()) == 0, "NotALieElement", "nonzero constant term");
	std::lock_guard<std::recursive_mutex> lock(g_mu);
	BasisCache& c = cache_for(s.alphabet());
	TruncatedSeries residual = s;
	while (!residual.is_zero()) {
		auto [key, coeff] = *residual.terms().begin();
		const auto& [d, m] = key;
		ensure_degree(c, d);
		const auto& words = c.by_degree[d];
		auto it = std::lower_bound(words.begin(), words.end(), m);
		if (it == words.end() || *it != m)
			fail("NotALieElement",
			     "leading term " + scalar_to_string(coeff) + " * '" +
			         mono_to_string(*s.alphabet(), m) +
			         "' is not a Lyndon word; series is outside the Lie subspace");
		out.add_coord(d, static_cast<int>(it - words.begin()), coeff);
		for (const auto& [em, ez] : expansion_of(c, m))
			residual.add_term(em, -coeff * mpq_class(ez));
	}
	return out;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
	check_lie_compatible(a, b, "lie_bracket");
	if (a.is_zero() || b.is_zero()) return LieElement::zero(a.alphabet(), a.ring());
	int cap = a.max_degree() + b.max_degree();
	TruncatedSeries ta = lie_to_tensor(a, cap), tb = lie_to_tensor(b, cap);
	return tensor_to_lie(ta * tb - tb * ta);
}

}  // namespace jtau
