#pragma once
#include <memory>
#include <string>
#include <vector>

#include "jtau/error.hpp"

namespace jtau {

/* Ordered list of free-group generators, each with a positive integer weight.
   Weight 1 is the usual case; weight 2 marks the extra generators of the
   weight filtration. The order fixes the monomial ordering everywhere. */
class Alphabet {
public:
	Alphabet() = default;
	explicit Alphabet(std::vector<std::pair<std::string, int>> gens);

	static std::shared_ptr<const Alphabet> make(std::vector<std::pair<std::string, int>> gens);
	/* Convenience: weight-1 generators named by the given list. */
	static std::shared_ptr<const Alphabet> make_unweighted(const std::vector<std::string>& names);
	/* File format: one generator per line, "name" or "name weight";
	   '#' starts a comment. */
	static std::shared_ptr<const Alphabet> parse_file(const std::string& path);
	static std::shared_ptr<const Alphabet> parse_text(const std::string& text);

	int size() const { return static_cast<int>(gens_.size()); }
	const std::string& name(int i) const { return gens_[i].first; }
	int weight(int i) const { return gens_[i].second; }
	int max_weight() const { return max_weight_; }
	bool has_weights() const { return max_weight_ > 1; }
	/* Index of a generator name, or -1. */
	int find(const std::string& name) const;

	bool operator==(const Alphabet& o) const { return gens_ == o.gens_; }
	bool operator!=(const Alphabet& o) const { return !(*this == o); }

	const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }

private:
	std::vector<std::pair<std::string, int>> gens_;
	int max_weight_ = 1;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

void check_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* where);

}  // namespace jtau
