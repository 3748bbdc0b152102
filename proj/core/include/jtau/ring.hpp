#pragma once
#include <gmpxx.h>

#include <string>

#include "jtau/error.hpp"

namespace jtau {

/* Scalars are canonical mpq_class values; a Ring says which subring they live
   in and keeps them normalized (PrimeField values are integers in [0, p)).
   All arithmetic is exact; nothing here ever touches floating point. */
struct Ring {
	enum class Kind { Integers, Rationals, PrimeField };

	Kind kind = Kind::Integers;
	long p = 0;  // modulus, PrimeField only

	static Ring integers() { return {Kind::Integers, 0}; }
	static Ring rationals() { return {Kind::Rationals, 0}; }
	static Ring prime_field(long p);

	bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
	bool operator!=(const Ring& o) const { return !(*this == o); }

	std::string name() const;

	mpq_class reduce(const mpq_class& x) const;
	mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
	mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
	mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
	mpq_class neg(const mpq_class& a) const { return reduce(-a); }
	/* Division by a unit; Integers only admit exact quotients. */
	mpq_class div(const mpq_class& a, const mpq_class& b) const;

	bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
};

void check_same_ring(const Ring& a, const Ring& b, const char* where);

/* Parses "n" or "n/d" into an exact scalar of the given ring. */
mpq_class parse_scalar(const Ring& ring, const std::string& text);
std::string scalar_to_string(const mpq_class& x);

}  // namespace jtau
