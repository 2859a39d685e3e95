#pragma once

#include "uqr/abelian.hpp"
#include "uqr/intmat.hpp"

#include <optional>

namespace uqr {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
	Family family;
	long rank;

	bool operator==(const RootSystemType& o) const
	{
		return family == o.family && rank == o.rank;
	}
	std::string str() const;
};

RootSystemType parse_type(char family, long rank); // validates rank bounds

/// Rational matrix helper for the weight-basis data.
struct RatMat {
	long rows = 0, cols = 0;
	std::vector<Rat> a;
	RatMat() = default;
	RatMat(long r, long c) : rows(r), cols(c), a(r * c) {}
	Rat& at(long r, long c) { return a[r * cols + c]; }
	const Rat& at(long r, long c) const { return a[r * cols + c]; }
};

/// Immutable Lie-theoretic constants for one simple root system. All vectors
/// live in fundamental-weight coordinates: lambda_i = e_i, and the simple
/// roots are the columns of the Cartan matrix.
struct RootSystemData {
	RootSystemType type;
	Mat cartan;              // a_ij = <alpha_i, alpha_j>
	std::vector<long> d;     // symmetrizers, (alpha_i, alpha_j) = d_i a_ij
	RatMat weight_to_root;   // columns = fundamental weights in simple-root coordinates
	RatMat gram_weights;     // (lambda_i, lambda_j)

	AbelianGroup pi1;                 // fundamental group in the designated basis
	std::vector<long> pi1_gen_weight; // 1-based weight indices of the designated generators

	std::vector<std::pair<long, long>> pos_roots_by_d; // (d_alpha, count)

	long rank() const { return type.rank; }

	/// Killing form of two vectors in fundamental-weight coordinates.
	Rat killing(const RatVec& v, const RatVec& w) const;
	Rat killing_zz(const std::vector<Int>& v, const std::vector<Int>& w) const;

	/// alpha_i as an integer weight-coordinate vector (column i of the Cartan matrix).
	std::vector<Int> simple_root(long i) const;

	long ell_i(long i, long ell) const { return ell / gcd_long(ell, 2 * d[i]); }       // order of q^{2d_i}
	long ell_sq_i(long i, long ell) const { return ell / gcd_long(ell, d[i]); }        // Def-[ell] scaling
	long ell_alpha(long dalpha, long ell) const { return ell / gcd_long(ell, 2 * dalpha); }
};

const RootSystemData& build(const RootSystemType& type); // cached, immutable

/// True when every ell_alpha exceeds 1 and ell_i > -a_ij for i != j.
bool small_ell_condition(const RootSystemData& g, long ell);

/// Replacement root systems for the excluded (type, ell) pairs; empty optional
/// when the condition holds and no substitution is needed. Reducible
/// replacements (B_n at ell=4) come back as a list.
std::optional<std::vector<RootSystemType>> substitute_excluded(const RootSystemType& type, long ell);

/// dim u_q(g, Lambda, Lambda') = |Lambda/Lambda'| * prod over positive roots
/// with ell_alpha > 1 of ell_alpha^2.
Int uq_dimension(const RootSystemData& g, long ell, const Int& lattice_index);

} // namespace uqr
