#pragma once
#include <climits>
#include <string>

#include "jtau/error.hpp"

namespace jtau {

/* Outcome of a valuation or filtration-degree computation. Finite values are
   exact; AboveCap(c) certifies only "greater than c"; Infinity is reserved
   for identities known exactly at the word level. */
struct Degree {
	enum class Kind { Finite, AboveCap, Infinity };
	Kind kind = Kind::Finite;
	int value = 0;  // the degree, or the cap for AboveCap

	static Degree finite(int v) { return {Kind::Finite, v}; }
	static Degree above_cap(int cap) { return {Kind::AboveCap, cap}; }
	static Degree infinity() { return {Kind::Infinity, 0}; }

	bool is_finite() const { return kind == Kind::Finite; }
	bool is_above_cap() const { return kind == Kind::AboveCap; }
	bool is_infinity() const { return kind == Kind::Infinity; }

	int finite_value() const {
		require(is_finite(), "NotFinite", "degree is not finite: " + to_string());
		return value;
	}

	/* Smallest degree consistent with what was certified. */
	int lower_bound() const {
		switch (kind) {
			case Kind::Finite: return value;
			case Kind::AboveCap: return value + 1;
			case Kind::Infinity: return INT_MAX;
		}
		return 0;
	}

	bool operator==(const Degree& o) const { return kind == o.kind && value == o.value; }
	bool operator!=(const Degree& o) const { return !(*this == o); }

	std::string to_string() const {
		switch (kind) {
			case Kind::Finite: return std::to_string(value);
			case Kind::AboveCap: return ">" + std::to_string(value);
			case Kind::Infinity: return "inf";
		}
		return "?";
	}
};

}  // namespace jtau
