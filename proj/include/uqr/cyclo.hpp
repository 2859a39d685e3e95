#pragma once

#include "uqr/rational.hpp"

#include <complex>

namespace uqr {

/// Exact element of the cyclotomic field Q(zeta_M), stored as the residue of a
/// rational polynomial in zeta_M modulo the M-th cyclotomic polynomial. The
/// representation is canonical for a fixed M, so equality at a common order is
/// coefficient equality; mixed orders are compared after embedding into the lcm.
class CycNum {
public:
	CycNum() : order_(1), c_(1) {} // zero in Q(zeta_1) = Q

	static CycNum from_rat(const Rat& r);
	static CycNum from_rat(long r) { return from_rat(Rat(r)); }
	/// zeta_M^k, the canonical primitive M-th root exp(2*pi*i/M) to the k-th power.
	static CycNum root_of_unity(long M, long k);

	long order() const { return order_; }
	const RatVec& coeffs() const { return c_; }

	bool is_zero() const;
	bool is_rational(Rat* out = nullptr) const;

	/// Embed into Q(zeta_M) for M a multiple of order().
	CycNum to_order(long M) const;

	CycNum operator-() const;
	CycNum inv() const;

	friend CycNum operator+(const CycNum&, const CycNum&);
	friend CycNum operator-(const CycNum&, const CycNum&);
	friend CycNum operator*(const CycNum&, const CycNum&);
	friend CycNum operator*(const Rat&, const CycNum&);
	friend CycNum operator/(const CycNum&, const CycNum&);
	friend bool operator==(const CycNum&, const CycNum&);
	friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

	CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
	CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
	CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

	/// Multiplicative order, or 0 if it exceeds the bound (or the element is
	/// not a root of unity within it).
	long multiplicative_order(long bound = 1024) const;

	std::string str() const;              // exact, e.g. "1/2*z12^4 - z12"
	std::complex<double> approx() const;  // display only

private:
	long order_;
	RatVec c_; // size = deg Phi_M, reduced mod Phi_M

	CycNum(long M, RatVec c) : order_(M), c_(std::move(c)) {}
	static CycNum from_poly(long M, RatVec poly); // arbitrary degree, reduces
	friend struct CycTestAccess;
};

/// Coefficients of the M-th cyclotomic polynomial (monic, ascending degree).
const std::vector<Int>& cyclotomic_poly(long M);

long euler_phi(long M);

/// q^a = exp(2*pi*i*a/ell) for rational a (Convention: q = exp(2*pi*i/ell)).
CycNum q_pow(long ell, const Rat& a);
inline CycNum q_pow(long ell, long a) { return q_pow(ell, Rat(a)); }

/// Quantum integer [n] and factorial [n]! evaluated at q^base, base rational.
CycNum qint(long ell, long n, const Rat& base = Rat(1));
CycNum qfact(long ell, long n, const Rat& base = Rat(1));

} // namespace uqr
