#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqr {

using Int = mpz_class;
using Rat = mpq_class;

inline long to_long(const Int& x)
{
	if (!x.fits_slong_p())
		throw std::overflow_error("integer does not fit in long");
	return x.get_si();
}

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// mpq_class(n, d) does not canonicalize; always build fractions through this
inline Rat frac(long n, long d)
{
	Rat r(n, d);
	r.canonicalize();
	return r;
}

inline Rat frac(const Int& n, const Int& d)
{
	Rat r(n, d);
	r.canonicalize();
	return r;
}

inline Int gcd(const Int& a, const Int& b)
{
	Int g;
	mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return g;
}

inline Int lcm(const Int& a, const Int& b)
{
	Int l;
	mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return l;
}

inline int cmpabs(const Int& a, const Int& b)
{
	return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline long gcd_long(long a, long b)
{
	if (a < 0) a = -a;
	if (b < 0) b = -b;
	while (b) {
		long t = a % b;
		a = b;
		b = t;
	}
	return a;
}

inline long lcm_long(long a, long b)
{
	if (a == 0 || b == 0) return 0;
	return a / gcd_long(a, b) * b;
}

// floor division and positive remainder
inline Int fdiv(const Int& a, const Int& b)
{
	Int q;
	mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return q;
}

inline Int fmod(const Int& a, const Int& b)
{
	Int r;
	mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

inline long mod_long(long a, long m)
{
	long r = a % m;
	return r < 0 ? r + m : r;
}

using RatVec = std::vector<Rat>;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace uqr
