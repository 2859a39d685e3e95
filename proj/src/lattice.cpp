#include "uqr/lattice.hpp"

#include <sstream>

namespace uqr {

IntegerLattice::IntegerLattice(const RootSystemData& g, Mat generators) : g_(&g)
{
	if (generators.rows != g.rank()) throw std::invalid_argument("lattice: wrong dimension");
	basis_ = hermite_cols(generators);
}

IntegerLattice::IntegerLattice(const RootSystemData& g, const Rat& scale,
                               const std::vector<RatVec>& gens)
    : g_(&g)
{
	Mat m(g.rank(), (long)gens.size());
	for (long j = 0; j < (long)gens.size(); ++j)
		for (long i = 0; i < g.rank(); ++i) {
			Rat v = scale * gens[j][i];
			if (!is_integral(v))
				throw std::domain_error("lattice: scaled generator leaves the weight lattice");
			m.at(i, j) = num(v);
		}
	basis_ = hermite_cols(m);
}

bool IntegerLattice::contains(const std::vector<Int>& v) const
{
	// back-substitute against the lower-triangular Hermite basis
	std::vector<Int> r = v;
	long n = basis_.rows;
	for (long i = 0; i < n; ++i) {
		if (fmod(r[i], basis_.at(i, i)) != 0) return false;
		Int c = r[i] / basis_.at(i, i);
		for (long k = i; k < n; ++k) r[k] -= c * basis_.at(k, i);
	}
	return true;
}

bool IntegerLattice::contains_lattice(const IntegerLattice& other) const
{
	for (long j = 0; j < other.basis_.cols; ++j)
		if (!contains(other.basis_.col(j))) return false;
	return true;
}

Int IntegerLattice::det_abs() const
{
	Int d = 1;
	for (long i = 0; i < basis_.rows; ++i) d *= basis_.at(i, i);
	return d;
}

bool IntegerLattice::operator==(const IntegerLattice& o) const
{
	return g_ == o.g_ && basis_ == o.basis_;
}

std::string IntegerLattice::str() const
{
	std::ostringstream os;
	os << "<";
	for (long j = 0; j < basis_.cols; ++j) {
		if (j) os << ", ";
		os << "(";
		for (long i = 0; i < basis_.rows; ++i) {
			if (i) os << ",";
			os << basis_.at(i, j).get_str();
		}
		os << ")";
	}
	os << ">";
	return os.str();
}

IntegerLattice weight_lattice(const RootSystemData& g)
{
	return IntegerLattice(g, Mat::identity(g.rank()));
}

IntegerLattice root_lattice(const RootSystemData& g)
{
	return IntegerLattice(g, g.cartan);
}

namespace {

IntegerLattice scaled_base(const RootSystemData& g, LatticeBase base, const std::vector<long>& mult)
{
	long n = g.rank();
	Mat m(n, n);
	for (long j = 0; j < n; ++j) {
		if (base == LatticeBase::roots) {
			for (long i = 0; i < n; ++i) m.at(i, j) = Int(mult[j]) * g.cartan.at(i, j);
		} else {
			m.at(j, j) = mult[j];
		}
	}
	return IntegerLattice(g, std::move(m));
}

} // namespace

IntegerLattice ell_lattice_round(const RootSystemData& g, LatticeBase base, long ell)
{
	if (ell <= 2) throw std::domain_error("ell must exceed 2");
	std::vector<long> mult(g.rank());
	for (long i = 0; i < g.rank(); ++i) mult[i] = g.ell_i(i, ell);
	return scaled_base(g, base, mult);
}

IntegerLattice ell_lattice_square(const RootSystemData& g, LatticeBase base, long ell)
{
	if (ell <= 2) throw std::domain_error("ell must exceed 2");
	std::vector<long> mult(g.rank());
	for (long i = 0; i < g.rank(); ++i) mult[i] = g.ell_sq_i(i, ell);
	return scaled_base(g, base, mult);
}

IntegerLattice lusztig_kernel(const RootSystemData& g, long ell)
{
	std::vector<long> mult(g.rank());
	for (long i = 0; i < g.rank(); ++i) mult[i] = 2 * g.ell_i(i, ell);
	return scaled_base(g, LatticeBase::roots, mult);
}

IntegerLattice cent_q(const RootSystemData& g, const IntegerLattice& L1,
                      const IntegerLattice& L2, long ell)
{
	if (&L1.ambient() != &g || &L2.ambient() != &g)
		throw std::invalid_argument("cent_q: ambient mismatch");
	if (!L1.contains_lattice(L2))
		throw std::domain_error("cent_q: L2 must be contained in L1");
	long n = g.rank();
	const Mat& B1 = L1.basis();
	const Mat& B2 = L2.basis();

	// pairing matrix P[x][j] = (B1 x, g_j); clear denominators by s
	RatMat P(n, n);
	Int s = 1;
	for (long x = 0; x < n; ++x)
		for (long j = 0; j < n; ++j) {
			P.at(x, j) = g.killing_zz(B1.col(x), B2.col(j));
			s = lcm(s, den(P.at(x, j)));
		}
	// solve s*P^T x = s*ell*y: x-part of the kernel of [sP^T | -s*ell*I]
	Mat K(n, 2 * n);
	for (long j = 0; j < n; ++j)
		for (long x = 0; x < n; ++x) {
			Rat v = Rat(s) * P.at(x, j);
			K.at(j, x) = num(v);
		}
	for (long j = 0; j < n; ++j) K.at(j, n + j) = -s * ell;
	Mat ker = kernel_int(K);
	// the x-parts of the kernel span the full solution lattice (it contains
	// s*ell*Z^n, so the rank is n)
	Mat gens(n, ker.cols);
	for (long c = 0; c < ker.cols; ++c) {
		std::vector<Int> x(n);
		for (long i = 0; i < n; ++i) x[i] = ker.at(i, c);
		std::vector<Int> eta = mat_vec(B1, x);
		for (long i = 0; i < n; ++i) gens.at(i, c) = eta[i];
	}
	return IntegerLattice(g, std::move(gens));
}

IntegerLattice intersect(const IntegerLattice& L1, const IntegerLattice& L2)
{
	if (&L1.ambient() != &L2.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
	long n = L1.basis().rows;
	Mat K(n, 2 * n);
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j) {
			K.at(i, j) = L1.basis().at(i, j);
			K.at(i, n + j) = -L2.basis().at(i, j);
		}
	Mat ker = kernel_int(K);
	Mat gens(n, ker.cols);
	for (long c = 0; c < ker.cols; ++c) {
		std::vector<Int> x(n);
		for (long i = 0; i < n; ++i) x[i] = ker.at(i, c);
		std::vector<Int> v = mat_vec(L1.basis(), x);
		for (long i = 0; i < n; ++i) gens.at(i, c) = v[i];
	}
	return IntegerLattice(L1.ambient(), std::move(gens));
}

IntegerLattice lattice_sum(const IntegerLattice& L1, const IntegerLattice& L2)
{
	if (&L1.ambient() != &L2.ambient()) throw std::invalid_argument("lattice_sum: ambient mismatch");
	return IntegerLattice(L1.ambient(), hstack(L1.basis(), L2.basis()));
}

LatticeQuotient::LatticeQuotient(const IntegerLattice& L1, const IntegerLattice& L2)
    : L1_(L1), L2_(L2)
{
	if (&L1.ambient() != &L2.ambient())
		throw std::invalid_argument("quotient: ambient mismatch");
	if (!L1.contains_lattice(L2))
		throw std::domain_error("quotient: L2 must be contained in L1");
	Mat X = solve_int(L1.basis(), L2.basis());
	SmithForm f = smith(X);
	long n = X.rows;
	sdiag_.resize(n);
	for (long i = 0; i < n; ++i) {
		Int s = f.S.at(i, i);
		if (s == 0) throw std::domain_error("quotient: infinite index");
		sdiag_[i] = to_long(s);
		order_ *= s;
		if (sdiag_[i] > 1) grp_.factors.push_back(sdiag_[i]);
	}
	U_ = f.U;
	Uinv_ = f.Uinv;
}

AbelianGroup::Elem LatticeQuotient::project(const std::vector<Int>& v) const
{
	RatVec b(v.begin(), v.end());
	RatVec x = solve_rat(L1_.basis(), b);
	std::vector<Int> xi(x.size());
	for (size_t i = 0; i < x.size(); ++i) {
		if (!is_integral(x[i])) throw std::domain_error("project: vector not in L1");
		xi[i] = num(x[i]);
	}
	std::vector<Int> t = mat_vec(U_, xi);
	AbelianGroup::Elem e;
	for (size_t i = 0; i < t.size(); ++i)
		if (sdiag_[i] > 1) e.push_back(to_long(fmod(t[i], Int(sdiag_[i]))));
	return e;
}

std::vector<Int> LatticeQuotient::lift(const AbelianGroup::Elem& x) const
{
	long n = (long)sdiag_.size();
	std::vector<Int> t(n, 0);
	long k = 0;
	for (long i = 0; i < n; ++i)
		if (sdiag_[i] > 1) t[i] = x[k++];
	std::vector<Int> y = mat_vec(Uinv_, t);
	return mat_vec(L1_.basis(), y);
}

} // namespace uqr
