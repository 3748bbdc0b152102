#include "jtau/alphabet.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace jtau {

static bool valid_ident(const std::string& s) {
	if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
	for (char c : s)
		if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
	return true;
}

Alphabet::Alphabet(std::vector<std::pair<std::string, int>> gens) : gens_(std::move(gens)) {
	require(!gens_.empty(), "EmptyAlphabet", "alphabet needs at least one generator");
	require(gens_.size() <= 100, "AlphabetTooLarge", "at most 100 generators supported");
	for (size_t i = 0; i < gens_.size(); ++i) {
		require(valid_ident(gens_[i].first), "SyntaxError",
		        "bad generator name '" + gens_[i].first + "'");
		require(gens_[i].second >= 1 && gens_[i].second <= 2, "BadWeight",
		        "generator weight must be 1 or 2");
		for (size_t j = 0; j < i; ++j)
			require(gens_[j].first != gens_[i].first, "DuplicateGenerator",
			        "generator '" + gens_[i].first + "' repeated");
		if (gens_[i].second > max_weight_) max_weight_ = gens_[i].second;
	}
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::pair<std::string, int>> gens) {
	return std::make_shared<Alphabet>(std::move(gens));
}

std::shared_ptr<const Alphabet> Alphabet::make_unweighted(const std::vector<std::string>& names) {
	std::vector<std::pair<std::string, int>> g;
	for (const auto& n : names) g.emplace_back(n, 1);
	return make(std::move(g));
}

std::shared_ptr<const Alphabet> Alphabet::parse_text(const std::string& text) {
	std::vector<std::pair<std::string, int>> gens;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		auto hash = line.find('#');
		if (hash != std::string::npos) line.erase(hash);
		std::istringstream ls(line);
		std::string name;
		if (!(ls >> name)) continue;
		int w = 1;
		std::string wtok;
		if (ls >> wtok) {
			try {
				w = std::stoi(wtok);
			} catch (...) {
				fail("SyntaxError", "bad weight '" + wtok + "' for generator " + name);
			}
		}
		std::string extra;
		require(!(ls >> extra), "SyntaxError", "trailing junk on alphabet line: " + line);
		gens.emplace_back(name, w);
	}
	return make(std::move(gens));
}

std::shared_ptr<const Alphabet> Alphabet::parse_file(const std::string& path) {
	std::ifstream in(path);
	require(in.good(), "FileNotFound", "cannot open alphabet file " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_text(ss.str());
}

int Alphabet::find(const std::string& name) const {
	for (int i = 0; i < size(); ++i)
		if (gens_[i].first == name) return i;
	return -1;
}

void check_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* where) {
	if (a == b) return;
	if (!a || !b || *a != *b)
		fail("AlphabetMismatch", std::string(where) + ": operands use different alphabets");
}

}  // namespace jtau
