#pragma once

#include "uqr/rootdata.hpp"

namespace uqr {

/// Finite-index sublattice of the weight lattice of a fixed root system,
/// stored by its column-Hermite basis in fundamental-weight coordinates.
/// Two lattices are equal iff their Hermite bases are equal.
class IntegerLattice {
public:
	IntegerLattice() = default;
	/// generators = columns; must be integral (inside Lambda_W) and of full rank
	IntegerLattice(const RootSystemData& g, Mat generators);
	/// scale * generators must be integral; validates and clears the scale
	IntegerLattice(const RootSystemData& g, const Rat& scale, const std::vector<RatVec>& gens);

	const RootSystemData& ambient() const { return *g_; }
	const Mat& basis() const { return basis_; } // n x n Hermite form

	bool contains(const std::vector<Int>& v) const;
	bool contains_lattice(const IntegerLattice& other) const;

	Int det_abs() const;

	bool operator==(const IntegerLattice& o) const;
	bool operator!=(const IntegerLattice& o) const { return !(*this == o); }

	std::string str() const;

private:
	const RootSystemData* g_ = nullptr;
	Mat basis_;
};

IntegerLattice weight_lattice(const RootSystemData& g);
IntegerLattice root_lattice(const RootSystemData& g);

/// Def-style scaled lattices: round uses ell_i = ell/gcd(ell, 2 d_i), square
/// uses ell/gcd(ell, d_i).
enum class LatticeBase { roots, weights };
IntegerLattice ell_lattice_round(const RootSystemData& g, LatticeBase base, long ell);
IntegerLattice ell_lattice_square(const RootSystemData& g, LatticeBase base, long ell);
/// Lusztig's kernel 2 * Lambda^{(ell)} on the root basis.
IntegerLattice lusztig_kernel(const RootSystemData& g, long ell);

/// Cent^q_{L1}(L2) = { eta in L1 : (eta, lambda) in ell*Z for all lambda in L2 },
/// computed by solving the integer congruence system against the generators.
IntegerLattice cent_q(const RootSystemData& g, const IntegerLattice& L1,
                      const IntegerLattice& L2, long ell);

IntegerLattice intersect(const IntegerLattice& L1, const IntegerLattice& L2);
IntegerLattice lattice_sum(const IntegerLattice& L1, const IntegerLattice& L2);

/// L1/L2 for L2 a finite-index sublattice of L1: invariant factors plus exact
/// project/lift maps realizing the isomorphism.
class LatticeQuotient {
public:
	LatticeQuotient() = default;
	LatticeQuotient(const IntegerLattice& L1, const IntegerLattice& L2);

	const AbelianGroup& group() const { return grp_; }
	Int order() const { return order_; }

	/// v must lie in L1; returns its class.
	AbelianGroup::Elem project(const std::vector<Int>& v) const;
	/// representative in L1 of a class
	std::vector<Int> lift(const AbelianGroup::Elem& x) const;

	const IntegerLattice& sub() const { return L2_; }
	const IntegerLattice& big() const { return L1_; }

private:
	IntegerLattice L1_, L2_;
	AbelianGroup grp_;          // nontrivial invariant factors only
	std::vector<long> sdiag_;   // all Smith diagonal entries
	Mat U_, Uinv_;              // from the Smith form of B1^{-1} B2
	Int order_ = 1;
};

} // namespace uqr
