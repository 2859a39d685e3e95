#pragma once

#include "uqr/rational.hpp"

namespace uqr {

/// Dense integer matrix, row-major. Sizes here are tiny (rank <= 8 plus a few
/// stacked columns), so everything is exact mpz arithmetic with no pivoting
/// cleverness beyond what uniqueness of the normal forms needs.
struct Mat {
	long rows = 0, cols = 0;
	std::vector<Int> a;

	Mat() = default;
	Mat(long r, long c) : rows(r), cols(c), a(r * c) {}

	Int& at(long r, long c) { return a[r * cols + c]; }
	const Int& at(long r, long c) const { return a[r * cols + c]; }

	static Mat identity(long n)
	{
		Mat m(n, n);
		for (long i = 0; i < n; ++i) m.at(i, i) = 1;
		return m;
	}

	std::vector<Int> col(long j) const
	{
		std::vector<Int> v(rows);
		for (long i = 0; i < rows; ++i) v[i] = at(i, j);
		return v;
	}

	bool operator==(const Mat& o) const
	{
		return rows == o.rows && cols == o.cols && a == o.a;
	}
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat hstack(const Mat& A, const Mat& B);
std::vector<Int> mat_vec(const Mat& A, const std::vector<Int>& v);

/// Column-style Hermite normal form of a full-row-rank matrix: the unique
/// lower-triangular n x n basis H of the column span with H[i][i] > 0 and
/// 0 <= H[i][j] < H[i][i] for j < i.
Mat hermite_cols(const Mat& A);

/// Smith normal form S = U A V with U, V unimodular, S diagonal with
/// s_1 | s_2 | ... (nonnegative). uinv is U^{-1}.
struct SmithForm {
	Mat U, Uinv, S, V;
	std::vector<Int> diag() const;
};
SmithForm smith(const Mat& A);

/// Basis (as columns) of { x : A x = 0 } over the integers.
Mat kernel_int(const Mat& A);

/// Exact solution X of A X = B for square invertible A; throws if the
/// solution is not integral.
Mat solve_int(const Mat& A, const Mat& B);

/// Exact rational solution of A x = b for square invertible A.
RatVec solve_rat(const Mat& A, const RatVec& b);

Int det(const Mat& A);

} // namespace uqr
