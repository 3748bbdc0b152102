#include "jtau/render.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace jtau {

namespace {

using nlohmann::json;

/* Joins signed terms: first term keeps a bare minus, later terms become
   " + " or " - " separators. */
class TermJoiner {
public:
	void add(const mpq_class& coeff, const std::string& body) {
		mpq_class c = coeff;
		if (first_) {
			if (c < 0) {
				out_ += "-";
				c = -c;
			}
			first_ = false;
		} else if (c < 0) {
			out_ += " - ";
			c = -c;
		} else {
			out_ += " + ";
		}
		if (c != 1 || body.empty()) {
			out_ += scalar_to_string(c);
			if (!body.empty()) out_ += "*";
		}
		out_ += body;
	}
	std::string str() const { return out_.empty() ? "0" : out_; }

private:
	std::string out_;
	bool first_ = true;
};

const Mono& basis_word(const AlphabetPtr& alpha, int degree, int index) {
	return lyndon_words(alpha, degree)[index];
}

json lie_json(const LieElement& x) {
	json terms = json::array();
	for (const auto& [key, c] : x.coords()) {
		const Mono& w = basis_word(x.alphabet(), key.first, key.second);
		json letters = json::array();
		for (unsigned char l : w) letters.push_back(x.alphabet()->name(l));
		terms.push_back({{"degree", key.first},
		                 {"index", key.second},
		                 {"word", letters},
		                 {"coefficient", scalar_to_string(c)}});
	}
	return {{"ring", x.ring().name()}, {"terms", terms}};
}

json series_json(const TruncatedSeries& s) {
	json terms = json::array();
	for (const auto& [key, c] : s.terms()) {
		json letters = json::array();
		for (unsigned char l : key.second) letters.push_back(s.alphabet()->name(l));
		terms.push_back({{"degree", key.first},
		                 {"monomial", letters},
		                 {"coefficient", scalar_to_string(c)}});
	}
	return {{"ring", s.ring().name()}, {"cap", s.cap()}, {"terms", terms}};
}

json degree_json(const Degree& d) {
	if (d.is_infinity()) return {{"kind", "infinity"}};
	if (d.is_above_cap()) return {{"kind", "above_cap"}, {"cap", d.value}};
	return {{"kind", "finite"}, {"value", d.finite_value()}};
}

json derivation_json(const Derivation& d) {
	json values = json::array();
	const AlphabetPtr& pos = d.eg->pos();
	for (int i = 0; i < pos->size(); ++i)
		values.push_back({{"generator", pos->name(i)}, {"value", lie_json(d.values[i])}});
	json j = {{"degree", d.degree}, {"values", values}};
	if (d.eg->has_l0()) {
		json d0 = json::array();
		for (int a = 0; a < d.eg->l0()->size(); ++a)
			d0.push_back({{"generator", d.eg->l0()->name(a)},
			              {"value", lie_json(d.d0.values[a])}});
		j["d0"] = d0;
	}
	return j;
}

}  // namespace

std::string lie_to_string(const LieElement& x) {
	TermJoiner out;
	for (const auto& [key, c] : x.coords())
		out.add(c, bracketing_to_string(x.alphabet(), basis_word(x.alphabet(), key.first,
		                                                         key.second)));
	return out.str();
}

std::string series_to_string(const TruncatedSeries& s) {
	TermJoiner out;
	for (const auto& [key, c] : s.terms()) {
		std::string body;
		if (!key.second.empty()) body = mono_to_string(*s.alphabet(), key.second);
		out.add(c, body);
	}
	return out.str();
}

std::string derivation_to_string(const Derivation& d) {
	std::ostringstream out;
	out << "degree: " << d.degree << "\n";
	const AlphabetPtr& pos = d.eg->pos();
	if (d.eg->has_l0()) {
		out << "d0:\n";
		for (int a = 0; a < d.eg->l0()->size(); ++a)
			out << "  " << d.eg->l0()->name(a) << " -> " << lie_to_string(d.d0.values[a])
			    << "\n";
	}
	for (int wt = 1; wt <= pos->max_weight(); ++wt) {
		bool any = false;
		for (int i = 0; i < pos->size(); ++i) any |= pos->weight(i) == wt;
		if (!any) continue;
		out << "d" << wt << ":\n";
		for (int i = 0; i < pos->size(); ++i)
			if (pos->weight(i) == wt)
				out << "  " << pos->name(i) << " -> " << lie_to_string(d.values[i]) << "\n";
	}
	return out.str();
}

std::string tail_to_string(const DerivationTail& t) {
	if (t.is_zero()) return "0\n";
	std::ostringstream out;
	for (const auto& [deg, part] : t.parts) out << derivation_to_string(part);
	return out.str();
}

std::string aut0_to_string(const Aut0& f) {
	std::ostringstream out;
	const AlphabetPtr& pos = f.eg->pos();
	if (f.eg->has_l0())
		for (int a = 0; a < f.eg->l0()->size(); ++a)
			out << f.eg->l0()->name(a) << " -> " << word_to_string(f.l0_img[a]) << "\n";
	for (int i = 0; i < pos->size(); ++i)
		out << pos->name(i) << " -> " << lie_to_string(f.pos.img[i]) << "\n";
	return out.str();
}

std::string lie_to_json(const LieElement& x) { return lie_json(x).dump(); }
std::string series_to_json(const TruncatedSeries& s) { return series_json(s).dump(); }
std::string degree_to_json(const Degree& d) { return degree_json(d).dump(); }
std::string derivation_to_json(const Derivation& d) { return derivation_json(d).dump(); }

std::string tail_to_json(const DerivationTail& t) {
	json parts = json::array();
	for (const auto& [deg, part] : t.parts) parts.push_back(derivation_json(part));
	return json{{"cap", t.cap}, {"parts", parts}}.dump();
}

std::string report_to_json(const CheckReport& r) {
	return json{{"ok", r.ok()}, {"violations", r.violations}}.dump();
}

// ----------------------------------------------------------------- parsing

namespace {

class LieParser {
public:
	LieParser(const AlphabetPtr& alpha, const Ring& ring, const std::string& text)
	    : alpha_(alpha), ring_(ring), s_(text) {}

	LieElement parse() {
		LieElement x = expr();
		ws();
		require(pos_ == s_.size(), "SyntaxError",
		        "unexpected trailing input at offset " + std::to_string(pos_));
		return x;
	}

private:
	void ws() {
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
	}

	bool eat(char c) {
		ws();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	char peek() {
		ws();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	LieElement expr() {
		bool neg = eat('-');
		if (!neg) eat('+');
		LieElement acc = term();
		if (neg) acc = -acc;
		while (true) {
			if (eat('+'))
				acc = acc + term();
			else if (eat('-'))
				acc = acc - term();
			else
				break;
		}
		return acc;
	}

	LieElement term() {
		if (std::isdigit(static_cast<unsigned char>(peek()))) {
			mpq_class c = rational();
			eat('*');
			char next = peek();
			if (next == '\0' || next == '+' || next == '-' || next == ',' || next == ']' ||
			    next == ')') {
				require(c == 0, "SyntaxError", "a bare number must be 0");
				return LieElement::zero(alpha_, ring_);
			}
			return factor().scale(c);
		}
		return factor();
	}

	LieElement factor() {
		if (eat('[')) {
			LieElement left = expr();
			require(eat(','), "SyntaxError", "expected , in bracket");
			LieElement right = expr();
			require(eat(']'), "SyntaxError", "expected ] closing bracket");
			return lie_bracket(left, right);
		}
		if (eat('(')) {
			LieElement inner = expr();
			require(eat(')'), "SyntaxError", "expected ) closing group");
			return inner;
		}
		std::string name = ident();
		int i = alpha_->find(name);
		require(i >= 0, "UnknownGenerator", "generator \"" + name + "\" is not declared");
		return LieElement::generator(alpha_, ring_, i);
	}

	std::string ident() {
		ws();
		size_t start = pos_;
		while (pos_ < s_.size() &&
		       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
			++pos_;
		require(pos_ > start, "SyntaxError",
		        "expected a generator name at offset " + std::to_string(start));
		return s_.substr(start, pos_ - start);
	}

	mpq_class rational() {
		ws();
		size_t start = pos_;
		while (pos_ < s_.size() &&
		       (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
			++pos_;
		return parse_scalar(ring_, s_.substr(start, pos_ - start));
	}

	const AlphabetPtr& alpha_;
	const Ring& ring_;
	const std::string& s_;
	size_t pos_ = 0;
};

}  // namespace

LieElement parse_lie(const AlphabetPtr& alpha, const Ring& ring, const std::string& text) {
	return LieParser(alpha, ring, text).parse();
}

Expansion parse_expansion_text(const AlphabetPtr& alpha, int cap, const std::string& text) {
	std::vector<LieElement> tails;
	for (int i = 0; i < alpha->size(); ++i)
		tails.push_back(LieElement::generator(alpha, Ring::rationals(), i));
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
		auto notspace = [](unsigned char c) { return !std::isspace(c); };
		if (std::find_if(line.begin(), line.end(), notspace) == line.end()) continue;
		std::string trimmed = line;
		trimmed.erase(trimmed.begin(),
		              std::find_if(trimmed.begin(), trimmed.end(), notspace));
		if (trimmed == "d1:" || trimmed == "d2:") continue;
		auto arrow = line.find("->");
		require(arrow != std::string::npos, "SyntaxError",
		        "line " + std::to_string(lineno) + ": expected \"name -> expression\"");
		std::string name = line.substr(0, arrow);
		name.erase(std::remove_if(name.begin(), name.end(),
		                          [](unsigned char c) { return std::isspace(c); }),
		           name.end());
		int i = alpha->find(name);
		require(i >= 0, "UnknownGenerator",
		        "line " + std::to_string(lineno) + ": generator \"" + name + "\"");
		tails[i] = parse_lie(alpha, Ring::rationals(), line.substr(arrow + 2));
	}
	return Expansion(alpha, cap, std::move(tails));
}

Expansion parse_expansion_file(const AlphabetPtr& alpha, int cap, const std::string& path) {
	std::ifstream in(path);
	require(in.good(), "FileError", "cannot open " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_expansion_text(alpha, cap, buf.str());
}

GroupRingElem parse_group_ring(const AlphabetPtr& alpha, const std::string& text) {
	GroupRingElem out;
	size_t pos = 0;
	mpq_class sign = 1;
	auto ws = [&] {
		while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
	};
	ws();
	require(pos < text.size(), "SyntaxError", "empty group-ring expression");
	while (pos < text.size()) {
		ws();
		if (text[pos] == '+' || text[pos] == '-') {
			sign = text[pos] == '-' ? -1 : 1;
			++pos;
			ws();
		}
		mpq_class c = 1;
		if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
			size_t start = pos;
			while (pos < text.size() &&
			       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
				++pos;
			c = parse_scalar(Ring::rationals(), text.substr(start, pos - start));
			ws();
			if (pos < text.size() && text[pos] == '*') {
				++pos;
				ws();
			}
		}
		/* the word part runs to the next top-level + or - */
		size_t start = pos;
		int depth = 0;
		while (pos < text.size()) {
			char ch = text[pos];
			if (ch == '(' || ch == '[') ++depth;
			if (ch == ')' || ch == ']') --depth;
			if (depth == 0 && (ch == '+' || ch == '-')) {
				/* an exponent sign right after ^ belongs to the word */
				size_t back = pos;
				while (back > start &&
				       std::isspace(static_cast<unsigned char>(text[back - 1])))
					--back;
				if (back > start && text[back - 1] == '^') {
					++pos;
					continue;
				}
				break;
			}
			++pos;
		}
		std::string wtext = text.substr(start, pos - start);
		auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
		bool empty = std::find_if(wtext.begin(), wtext.end(), notspace) == wtext.end();
		ReducedWord w = ReducedWord::identity(alpha);
		if (!empty) {
			std::string trimmed = wtext;
			trimmed.erase(trimmed.begin(),
			              std::find_if(trimmed.begin(), trimmed.end(), notspace));
			trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), notspace).base(),
			              trimmed.end());
			if (trimmed != "1") w = parse_word(alpha, trimmed);
		}
		out.emplace_back(sign * c, w);
		sign = 1;
	}
	return out;
}

}  // namespace jtau
