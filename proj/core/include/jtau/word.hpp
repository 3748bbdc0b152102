#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jtau/alphabet.hpp"

namespace jtau {

/* One maximal run g^e, e != 0. */
struct Syllable {
	int gen;
	long long exp;
	bool operator==(const Syllable&) const = default;
};

/* Freely reduced word in run-length form: adjacent syllables use distinct
   generators and no exponent is zero. All constructors and operations keep
   that invariant, so equality is plain structural equality. */
class ReducedWord {
public:
	ReducedWord() = default;
	explicit ReducedWord(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
	ReducedWord(AlphabetPtr alpha, const std::vector<Syllable>& raw);

	static ReducedWord identity(AlphabetPtr alpha) { return ReducedWord(std::move(alpha)); }
	static ReducedWord gen(AlphabetPtr alpha, int i, long long exp = 1);

	const AlphabetPtr& alphabet() const { return alpha_; }
	const std::vector<Syllable>& syllables() const { return sylls_; }
	bool is_identity() const { return sylls_.empty(); }
	/* Total letter count, sum of |exp|. */
	long long length() const;

	ReducedWord operator*(const ReducedWord& o) const;
	ReducedWord inverse() const;
	ReducedWord pow(long long k) const;

	bool operator==(const ReducedWord& o) const;
	bool operator!=(const ReducedWord& o) const { return !(*this == o); }

private:
	AlphabetPtr alpha_;
	std::vector<Syllable> sylls_;

	void push(Syllable s);
	friend ReducedWord concat_all(const std::vector<ReducedWord>& parts);
};

/* g h g^-1 */
ReducedWord conjugate(const ReducedWord& g, const ReducedWord& h);
/* g h g^-1 h^-1 */
ReducedWord commutator(const ReducedWord& g, const ReducedWord& h);

/* Word DSL:
     word   := factor*
     factor := atom ("^" int)?
     atom   := ident | "(" word ")" | "[" word "," word "]"
   Identifiers must name alphabet generators; whitespace separates factors. */
ReducedWord parse_word(const AlphabetPtr& alpha, const std::string& text);
std::string word_to_string(const ReducedWord& w);  // "()" for the identity

/* Endomorphism of the free group, stored by generator images. A witness is
   the claimed inverse map; verify_automorphism checks it on generators. */
struct GroupMap {
	AlphabetPtr alpha;
	std::vector<ReducedWord> images;
	std::optional<std::vector<ReducedWord>> witness;

	static GroupMap identity(const AlphabetPtr& alpha);
	/* x -> w x w^-1 for every generator, witness built from w^-1. */
	static GroupMap inner(const ReducedWord& w);

	const ReducedWord& image(int i) const { return images[i]; }
	bool has_witness() const { return witness.has_value(); }
	GroupMap inverse_map() const;  // swaps images and witness; MissingWitness if absent
};

ReducedWord apply_map(const GroupMap& f, const ReducedWord& w);
/* (f . g)(x) = f(g(x)); witnesses compose when both present. */
GroupMap compose_maps(const GroupMap& f, const GroupMap& g);
/* f g f^-1 g^-1 as a map, with witness. */
GroupMap commutator_map(const GroupMap& f, const GroupMap& g);
/* True iff the witness exists and f and it invert each other on generators.
   MissingWitness if no witness is attached. */
bool verify_automorphism(const GroupMap& f);

/* Map file format: "name -> word" lines, '#' comments, and an optional
   "inverse:" section introducing the witness lines. */
GroupMap parse_map_text(const AlphabetPtr& alpha, const std::string& text);
GroupMap parse_map_file(const AlphabetPtr& alpha, const std::string& path);
std::string map_to_string(const GroupMap& f);

}  // namespace jtau
