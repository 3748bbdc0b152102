#include "jtau/ring.hpp"

namespace jtau {

Ring Ring::prime_field(long p) {
	require(p >= 2, "BadModulus", "prime field modulus must be a prime >= 2");
	mpz_class m(p);
	require(mpz_probab_prime_p(m.get_mpz_t(), 40) != 0, "BadModulus",
	        "modulus " + std::to_string(p) + " is not prime");
	return {Kind::PrimeField, p};
}

std::string Ring::name() const {
	switch (kind) {
		case Kind::Integers: return "Z";
		case Kind::Rationals: return "Q";
		case Kind::PrimeField: return "F" + std::to_string(p);
	}
	return "?";
}

mpq_class Ring::reduce(const mpq_class& x) const {
	switch (kind) {
		case Kind::Rationals: return x;
		case Kind::Integers:
			require(x.get_den() == 1, "NotAnInteger",
			        "non-integral value " + scalar_to_string(x) + " in ring Z");
			return x;
		case Kind::PrimeField: {
			require(x.get_den() % p != 0, "BadDenominator",
			        "denominator divisible by " + std::to_string(p));
			// num * den^-1 mod p
			mpz_class num = x.get_num() % p, den = x.get_den() % p, inv;
			mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
			mpz_class r = (num * inv) % p;
			if (r < 0) r += p;
			return mpq_class(r);
		}
	}
	return x;
}

mpq_class Ring::div(const mpq_class& a, const mpq_class& b) const {
	require(sgn(b) != 0 || kind == Kind::PrimeField, "DivisionByZero", "division by zero");
	switch (kind) {
		case Kind::Rationals: return a / b;
		case Kind::Integers: {
			mpq_class q = a / b;
			require(q.get_den() == 1, "InexactDivision",
			        scalar_to_string(a) + " not divisible by " + scalar_to_string(b) + " in Z");
			return q;
		}
		case Kind::PrimeField: {
			mpq_class bb = reduce(b);
			require(sgn(bb) != 0, "DivisionByZero", "division by zero in " + name());
			return reduce(a / bb);
		}
	}
	return a;
}

void check_same_ring(const Ring& a, const Ring& b, const char* where) {
	if (a != b)
		fail("RingMismatch",
		     std::string(where) + ": " + a.name() + " vs " + b.name());
}

mpq_class parse_scalar(const Ring& ring, const std::string& text) {
	mpq_class q;
	if (q.set_str(text, 10) != 0)
		fail("SyntaxError", "bad scalar '" + text + "'");
	q.canonicalize();
	return ring.reduce(q);
}

std::string scalar_to_string(const mpq_class& x) {
	return x.get_str();
}

}  // namespace jtau
