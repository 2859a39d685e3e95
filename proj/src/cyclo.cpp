#include "uqr/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace uqr {

long euler_phi(long M)
{
	long phi = M;
	long m = M;
	for (long p = 2; p * p <= m; ++p) {
		if (m % p) continue;
		phi -= phi / p;
		while (m % p == 0) m /= p;
	}
	if (m > 1) phi -= phi / m;
	return phi;
}

namespace {

// exact division of integer polynomials (ascending coefficients), remainder must vanish
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den)
{
	std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
	long dd = (long)den.size() - 1;
	for (long d = (long)num.size() - 1; d >= dd; --d) {
		if (num[d] == 0) continue;
		if (fmod(num[d], den[dd]) != 0) throw std::logic_error("poly_div_exact: not divisible");
		Int qc = num[d] / den[dd];
		q[d - dd] = qc;
		for (long i = 0; i <= dd; ++i) num[d - dd + i] -= qc * den[i];
	}
	for (const Int& c : num)
		if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
	return q;
}

std::map<long, std::vector<Int>>& cyclo_cache()
{
	static std::map<long, std::vector<Int>> cache;
	return cache;
}
std::mutex cyclo_mutex;

std::vector<Int> compute_cyclotomic(long M)
{
	// x^M - 1 divided by Phi_d for all proper divisors d of M
	std::vector<Int> num(M + 1);
	num[0] = -1;
	num[M] = 1;
	for (long d = 1; d < M; ++d) {
		if (M % d) continue;
		num = poly_div_exact(std::move(num), cyclotomic_poly(d));
	}
	return num;
}

} // namespace

const std::vector<Int>& cyclotomic_poly(long M)
{
	if (M < 1) throw std::domain_error("cyclotomic_poly: order must be positive");
	{
		std::lock_guard<std::mutex> lock(cyclo_mutex);
		auto it = cyclo_cache().find(M);
		if (it != cyclo_cache().end()) return it->second;
	}
	// compute outside the lock; divisor lookups re-lock recursively via this function
	std::vector<Int> phi = M == 1 ? std::vector<Int>{-1, 1} : compute_cyclotomic(M);
	std::lock_guard<std::mutex> lock(cyclo_mutex);
	return cyclo_cache().emplace(M, std::move(phi)).first->second;
}

CycNum CycNum::from_poly(long M, RatVec poly)
{
	const std::vector<Int>& phi = cyclotomic_poly(M);
	long deg = (long)phi.size() - 1;
	// wrap exponents mod M first (zeta_M^M = 1), then reduce mod Phi_M
	if ((long)poly.size() > M) {
		RatVec wrapped(M);
		for (long i = 0; i < (long)poly.size(); ++i) wrapped[i % M] += poly[i];
		poly = std::move(wrapped);
	}
	for (long d = (long)poly.size() - 1; d >= deg; --d) {
		if (poly[d] == 0) continue;
		Rat qc = poly[d]; // Phi_M is monic
		for (long i = 0; i <= deg; ++i) poly[d - deg + i] -= qc * Rat(phi[i]);
	}
	poly.resize(deg);
	return CycNum(M, std::move(poly));
}

CycNum CycNum::from_rat(const Rat& r)
{
	return CycNum(1, {r});
}

CycNum CycNum::root_of_unity(long M, long k)
{
	if (M < 1) throw std::domain_error("root_of_unity: order must be positive");
	k = mod_long(k, M);
	// reduce the order so values carry their minimal field
	long g = gcd_long(k, M);
	if (k != 0 && g > 1) {
		M /= g;
		k /= g;
	}
	if (k == 0) return from_rat(1);
	RatVec poly(k + 1);
	poly[k] = 1;
	return from_poly(M, std::move(poly));
}

bool CycNum::is_zero() const
{
	for (const Rat& x : c_)
		if (x != 0) return false;
	return true;
}

bool CycNum::is_rational(Rat* out) const
{
	for (size_t i = 1; i < c_.size(); ++i)
		if (c_[i] != 0) return false;
	if (out) *out = c_.empty() ? Rat(0) : c_[0];
	return true;
}

CycNum CycNum::to_order(long M) const
{
	if (M == order_) return *this;
	if (M % order_) throw std::invalid_argument("to_order: not a multiple of current order");
	long s = M / order_;
	RatVec poly((c_.size() - 1) * s + 1);
	for (size_t i = 0; i < c_.size(); ++i) poly[i * s] = c_[i];
	return from_poly(M, std::move(poly));
}

CycNum CycNum::operator-() const
{
	RatVec c = c_;
	for (Rat& x : c) x = -x;
	return CycNum(order_, std::move(c));
}

CycNum operator+(const CycNum& a, const CycNum& b)
{
	long M = lcm_long(a.order_, b.order_);
	CycNum x = a.to_order(M), y = b.to_order(M);
	for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
	return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b)
{
	long M = lcm_long(a.order_, b.order_);
	CycNum x = a.to_order(M), y = b.to_order(M);
	RatVec prod(x.c_.size() + y.c_.size() - 1);
	for (size_t i = 0; i < x.c_.size(); ++i) {
		if (x.c_[i] == 0) continue;
		for (size_t j = 0; j < y.c_.size(); ++j) {
			if (y.c_[j] == 0) continue;
			prod[i + j] += x.c_[i] * y.c_[j];
		}
	}
	return CycNum::from_poly(M, std::move(prod));
}

CycNum operator*(const Rat& r, const CycNum& b)
{
	RatVec c = b.c_;
	for (Rat& x : c) x *= r;
	return CycNum(b.order_, std::move(c));
}

bool operator==(const CycNum& a, const CycNum& b)
{
	long M = lcm_long(a.order_, b.order_);
	return a.to_order(M).c_ == b.to_order(M).c_;
}

CycNum CycNum::inv() const
{
	if (is_zero()) throw std::domain_error("CycNum: division by zero");
	Rat r;
	if (is_rational(&r)) return from_rat(1 / r);
	// solve (this) * y = 1 via the multiplication matrix in the power basis
	long n = (long)c_.size();
	std::vector<RatVec> M(n, RatVec(n + 1));
	CycNum pw = from_rat(1).to_order(order_);
	for (long j = 0; j < n; ++j) {
		CycNum col = *this * pw;
		for (long i = 0; i < n; ++i) M[i][j] = col.c_[i];
		if (j + 1 < n) {
			RatVec shift(j + 2);
			shift[j + 1] = 1;
			pw = from_poly(order_, std::move(shift));
		}
	}
	M[0][n] = 1;
	for (long c = 0; c < n; ++c) {
		long p = -1;
		for (long rrow = c; rrow < n; ++rrow)
			if (M[rrow][c] != 0) { p = rrow; break; }
		if (p < 0) throw std::logic_error("CycNum::inv: singular multiplication matrix");
		std::swap(M[c], M[p]);
		Rat ic = 1 / M[c][c];
		for (long j = c; j <= n; ++j) M[c][j] *= ic;
		for (long rrow = 0; rrow < n; ++rrow) {
			if (rrow == c || M[rrow][c] == 0) continue;
			Rat k = M[rrow][c];
			for (long j = c; j <= n; ++j) M[rrow][j] -= k * M[c][j];
		}
	}
	RatVec y(n);
	for (long i = 0; i < n; ++i) y[i] = M[i][n];
	return CycNum(order_, std::move(y));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

long CycNum::multiplicative_order(long bound) const
{
	CycNum one = from_rat(1);
	CycNum p = *this;
	for (long k = 1; k <= bound; ++k) {
		if (p == one) return k;
		p = p * *this;
	}
	return 0;
}

std::string CycNum::str() const
{
	std::ostringstream os;
	bool first = true;
	for (long i = (long)c_.size() - 1; i >= 0; --i) {
		if (c_[i] == 0) continue;
		Rat v = c_[i];
		if (!first) os << (v < 0 ? " - " : " + ");
		else if (v < 0) os << "-";
		first = false;
		Rat av = abs(v);
		if (i == 0) os << av.get_str();
		else {
			if (av != 1) os << av.get_str() << "*";
			os << "z" << order_;
			if (i > 1) os << "^" << i;
		}
	}
	if (first) os << "0";
	return os.str();
}

std::complex<double> CycNum::approx() const
{
	std::complex<double> z = 0;
	double ang = 2.0 * M_PI / (double)order_;
	for (size_t i = 0; i < c_.size(); ++i) {
		if (c_[i] == 0) continue;
		z += c_[i].get_d() * std::polar(1.0, ang * (double)i);
	}
	return z;
}

CycNum q_pow(long ell, const Rat& a)
{
	if (ell <= 2) throw std::domain_error("q_pow: ell must exceed 2");
	// exp(2 pi i a / ell) = zeta_{ell*den(a)}^{num(a)}
	Int d = den(a);
	Int Mi = d * ell;
	Int ki = fmod(num(a), Mi);
	return CycNum::root_of_unity(to_long(Mi), to_long(ki));
}

CycNum qint(long ell, long n, const Rat& base)
{
	// [n]_{q^base} = sum_{j=0}^{n-1} q^{base*(n-1-2j)}
	CycNum s = CycNum::from_rat(0);
	for (long j = 0; j < n; ++j) s += q_pow(ell, base * Rat(n - 1 - 2 * j));
	return s;
}

CycNum qfact(long ell, long n, const Rat& base)
{
	CycNum p = CycNum::from_rat(1);
	for (long k = 2; k <= n; ++k) p *= qint(ell, k, base);
	return p;
}

} // namespace uqr
