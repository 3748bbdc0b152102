#include "jtau/word.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace jtau {

void ReducedWord::push(Syllable s) {
	if (s.exp == 0) return;
	if (!sylls_.empty() && sylls_.back().gen == s.gen) {
		sylls_.back().exp += s.exp;
		if (sylls_.back().exp == 0) sylls_.pop_back();
	} else {
		sylls_.push_back(s);
	}
}

ReducedWord::ReducedWord(AlphabetPtr alpha, const std::vector<Syllable>& raw)
    : alpha_(std::move(alpha)) {
	for (const auto& s : raw) {
		require(s.gen >= 0 && s.gen < alpha_->size(), "UnknownGenerator",
		        "generator index out of range");
		push(s);
	}
}

ReducedWord ReducedWord::gen(AlphabetPtr alpha, int i, long long exp) {
	return ReducedWord(std::move(alpha), {{i, exp}});
}

long long ReducedWord::length() const {
	long long n = 0;
	for (const auto& s : sylls_) n += s.exp < 0 ? -s.exp : s.exp;
	return n;
}

ReducedWord ReducedWord::operator*(const ReducedWord& o) const {
	check_same_alphabet(alpha_, o.alpha_, "word product");
	ReducedWord r = *this;
	for (const auto& s : o.sylls_) r.push(s);
	return r;
}

ReducedWord ReducedWord::inverse() const {
	ReducedWord r(alpha_);
	r.sylls_.reserve(sylls_.size());
	for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
		r.sylls_.push_back({it->gen, -it->exp});
	return r;
}

ReducedWord ReducedWord::pow(long long k) const {
	ReducedWord base = k < 0 ? inverse() : *this;
	long long n = k < 0 ? -k : k;
	ReducedWord r(alpha_);
	for (long long i = 0; i < n; ++i) r = r * base;
	return r;
}

bool ReducedWord::operator==(const ReducedWord& o) const {
	check_same_alphabet(alpha_, o.alpha_, "word comparison");
	return sylls_ == o.sylls_;
}

ReducedWord conjugate(const ReducedWord& g, const ReducedWord& h) {
	return g * h * g.inverse();
}

ReducedWord commutator(const ReducedWord& g, const ReducedWord& h) {
	return g * h * g.inverse() * h.inverse();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Lexer {
	const std::string& s;
	size_t pos = 0;

	void skip_ws() {
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
	}
	bool done() {
		skip_ws();
		return pos >= s.size();
	}
	char peek() {
		skip_ws();
		return pos < s.size() ? s[pos] : '\0';
	}
	char take() {
		skip_ws();
		require(pos < s.size(), "SyntaxError", "unexpected end of word");
		return s[pos++];
	}
	void expect(char c) {
		char got = take();
		if (got != c)
			fail("SyntaxError", std::string("expected '") + c + "' at position " +
			                        std::to_string(pos - 1) + ", got '" + got + "'");
	}
	std::string ident() {
		skip_ws();
		size_t start = pos;
		while (pos < s.size() &&
		       (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
			++pos;
		return s.substr(start, pos - start);
	}
	long long integer() {
		skip_ws();
		size_t start = pos;
		if (pos < s.size() && s[pos] == '-') ++pos;
		size_t digits = pos;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
		require(pos > digits, "SyntaxError",
		        "expected integer at position " + std::to_string(start));
		try {
			return std::stoll(s.substr(start, pos - start));
		} catch (...) {
			fail("SyntaxError", "exponent out of range at position " + std::to_string(start));
		}
	}
};

ReducedWord parse_word_body(Lexer& lx, const AlphabetPtr& alpha, int depth);

ReducedWord parse_atom(Lexer& lx, const AlphabetPtr& alpha, int depth) {
	require(depth < 200, "SyntaxError", "nesting too deep");
	char c = lx.peek();
	if (c == '(') {
		lx.take();
		ReducedWord w = parse_word_body(lx, alpha, depth + 1);
		lx.expect(')');
		return w;
	}
	if (c == '[') {
		lx.take();
		ReducedWord l = parse_word_body(lx, alpha, depth + 1);
		lx.expect(',');
		ReducedWord r = parse_word_body(lx, alpha, depth + 1);
		lx.expect(']');
		return commutator(l, r);
	}
	if (std::isalpha(static_cast<unsigned char>(c))) {
		std::string name = lx.ident();
		int i = alpha->find(name);
		require(i >= 0, "UnknownGenerator", "'" + name + "' is not in the alphabet");
		return ReducedWord::gen(alpha, i);
	}
	fail("SyntaxError",
	     std::string("unexpected character '") + c + "' at position " + std::to_string(lx.pos));
}

ReducedWord parse_word_body(Lexer& lx, const AlphabetPtr& alpha, int depth) {
	ReducedWord w = ReducedWord::identity(alpha);
	while (!lx.done()) {
		char c = lx.peek();
		if (c == ')' || c == ']' || c == ',') break;
		ReducedWord f = parse_atom(lx, alpha, depth);
		if (lx.peek() == '^') {
			lx.take();
			f = f.pow(lx.integer());
		}
		w = w * f;
	}
	return w;
}

}  // namespace

ReducedWord parse_word(const AlphabetPtr& alpha, const std::string& text) {
	Lexer lx{text};
	ReducedWord w = parse_word_body(lx, alpha, 0);
	require(lx.done(), "SyntaxError",
	        "trailing input at position " + std::to_string(lx.pos));
	return w;
}

std::string word_to_string(const ReducedWord& w) {
	if (w.is_identity()) return "()";
	std::string out;
	for (const auto& s : w.syllables()) {
		if (!out.empty()) out += ' ';
		out += w.alphabet()->name(s.gen);
		if (s.exp != 1) out += "^" + std::to_string(s.exp);
	}
	return out;
}

// ------------------------------------------------------------------ maps

GroupMap GroupMap::identity(const AlphabetPtr& alpha) {
	GroupMap f{alpha, {}, {}};
	std::vector<ReducedWord> imgs;
	for (int i = 0; i < alpha->size(); ++i) imgs.push_back(ReducedWord::gen(alpha, i));
	f.images = imgs;
	f.witness = imgs;
	return f;
}

GroupMap GroupMap::inner(const ReducedWord& w) {
	const AlphabetPtr& alpha = w.alphabet();
	GroupMap f{alpha, {}, std::vector<ReducedWord>{}};
	ReducedWord wi = w.inverse();
	for (int i = 0; i < alpha->size(); ++i) {
		ReducedWord x = ReducedWord::gen(alpha, i);
		f.images.push_back(conjugate(w, x));
		f.witness->push_back(conjugate(wi, x));
	}
	return f;
}

GroupMap GroupMap::inverse_map() const {
	require(has_witness(), "MissingWitness", "map has no inverse witness");
	return GroupMap{alpha, *witness, images};
}

ReducedWord apply_map(const GroupMap& f, const ReducedWord& w) {
	check_same_alphabet(f.alpha, w.alphabet(), "apply_map");
	ReducedWord r = ReducedWord::identity(f.alpha);
	for (const auto& s : w.syllables()) r = r * f.images[s.gen].pow(s.exp);
	return r;
}

GroupMap compose_maps(const GroupMap& f, const GroupMap& g) {
	check_same_alphabet(f.alpha, g.alpha, "compose_maps");
	GroupMap h{f.alpha, {}, {}};
	for (const auto& w : g.images) h.images.push_back(apply_map(f, w));
	if (f.has_witness() && g.has_witness()) {
		GroupMap ginv = g.inverse_map();
		std::vector<ReducedWord> wit;
		for (const auto& w : f.witness.value()) wit.push_back(apply_map(ginv, w));
		h.witness = std::move(wit);
	}
	return h;
}

GroupMap commutator_map(const GroupMap& f, const GroupMap& g) {
	GroupMap fi = f.inverse_map(), gi = g.inverse_map();
	return compose_maps(compose_maps(f, g), compose_maps(fi, gi));
}

bool verify_automorphism(const GroupMap& f) {
	require(f.has_witness(), "MissingWitness", "verify_automorphism needs a witness");
	GroupMap w{f.alpha, *f.witness, {}};
	for (int i = 0; i < f.alpha->size(); ++i) {
		ReducedWord x = ReducedWord::gen(f.alpha, i);
		if (apply_map(f, w.images[i]) != x) return false;
		if (apply_map(w, f.images[i]) != x) return false;
	}
	return true;
}

GroupMap parse_map_text(const AlphabetPtr& alpha, const std::string& text) {
	std::vector<std::optional<ReducedWord>> images(alpha->size()), inv(alpha->size());
	bool in_inverse = false;
	bool saw_inverse_header = false;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		auto hash = line.find('#');
		if (hash != std::string::npos) line.erase(hash);
		auto notblank = line.find_first_not_of(" \t\r\n");
		if (notblank == std::string::npos) continue;
		std::string trimmed = line.substr(notblank);
		while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
			trimmed.pop_back();
		if (trimmed == "inverse:") {
			require(!saw_inverse_header, "SyntaxError", "duplicate inverse: section");
			in_inverse = saw_inverse_header = true;
			continue;
		}
		auto arrow = trimmed.find("->");
		require(arrow != std::string::npos, "SyntaxError", "map line needs '->': " + trimmed);
		std::string name = trimmed.substr(0, arrow);
		while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
			name.pop_back();
		int gi = alpha->find(name);
		require(gi >= 0, "UnknownGenerator", "'" + name + "' is not in the alphabet");
		auto& slot = in_inverse ? inv[gi] : images[gi];
		require(!slot.has_value(), "SyntaxError", "duplicate image for generator " + name);
		slot = parse_word(alpha, trimmed.substr(arrow + 2));
	}
	GroupMap f{alpha, {}, {}};
	for (int i = 0; i < alpha->size(); ++i) {
		require(images[i].has_value(), "SyntaxError",
		        "missing image for generator " + alpha->name(i));
		f.images.push_back(*images[i]);
	}
	if (saw_inverse_header) {
		std::vector<ReducedWord> wit;
		for (int i = 0; i < alpha->size(); ++i) {
			require(inv[i].has_value(), "SyntaxError",
			        "missing inverse image for generator " + alpha->name(i));
			wit.push_back(*inv[i]);
		}
		f.witness = std::move(wit);
	}
	return f;
}

GroupMap parse_map_file(const AlphabetPtr& alpha, const std::string& path) {
	std::ifstream in(path);
	require(in.good(), "FileNotFound", "cannot open map file " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_map_text(alpha, ss.str());
}

std::string map_to_string(const GroupMap& f) {
	std::string out;
	for (int i = 0; i < f.alpha->size(); ++i)
		out += f.alpha->name(i) + " -> " + word_to_string(f.images[i]) + "\n";
	if (f.has_witness()) {
		out += "inverse:\n";
		for (int i = 0; i < f.alpha->size(); ++i)
			out += f.alpha->name(i) + " -> " + word_to_string((*f.witness)[i]) + "\n";
	}
	return out;
}

}  // namespace jtau
