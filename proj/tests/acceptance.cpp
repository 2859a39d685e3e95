// Acceptance suite: one test case per criterion, each printing a single
// summary line. Everything is exact arithmetic; the thresholds are wall-clock
// budgets only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqr/report.hpp"
#include "uqr/uqalg.hpp"

#include <chrono>
#include <iostream>

using namespace uqr;

namespace {

struct Timer {
	std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
	double secs() const
	{
		return std::chrono::duration_cast<std::chrono::milliseconds>(
		           std::chrono::steady_clock::now() - t0)
		           .count() /
		       1000.0;
	}
};

std::vector<RootSystemType> acceptance_grid()
{
	std::vector<RootSystemType> v;
	for (long n = 1; n <= 6; ++n) v.push_back(parse_type('A', n));
	for (long n = 2; n <= 5; ++n) v.push_back(parse_type('B', n));
	for (long n = 3; n <= 5; ++n) v.push_back(parse_type('C', n));
	for (long n = 4; n <= 7; ++n) v.push_back(parse_type('D', n));
	for (long n = 6; n <= 8; ++n) v.push_back(parse_type('E', n));
	v.push_back(parse_type('F', 4));
	v.push_back(parse_type('G', 2));
	return v;
}

const std::vector<long> kEllSet = {3, 4, 5, 6, 7, 8, 9, 12};

void line(int crit, bool ok, const std::string& detail)
{
	std::cout << "criterion " << crit << ": " << (ok ? "PASS" : "FAIL") << " - " << detail
	          << std::endl;
}

IntegerLattice sq_kernel(const RootSystemData& g, long ell)
{
	return ell_lattice_square(g, LatticeBase::roots, ell);
}

// brute-force centralizer oracle by coset enumeration (rank <= 3, small ell)
IntegerLattice cent_q_bruteforce(const RootSystemData& g, const IntegerLattice& L2, long ell)
{
	long n = g.rank();
	Int s = 1;
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j) s = lcm(s, den(g.gram_weights.at(i, j)));
	long mod = ell * to_long(s);
	std::vector<std::vector<Int>> keep;
	std::vector<long> idx(n, 0);
	while (true) {
		std::vector<Int> v(idx.begin(), idx.end());
		bool ok = true;
		for (long j = 0; j < n && ok; ++j)
			if (!is_integral(g.killing_zz(v, L2.basis().col(j)) / ell)) ok = false;
		if (ok) keep.push_back(v);
		long k = 0;
		while (k < n && ++idx[k] == mod) idx[k++] = 0;
		if (k == n) break;
	}
	Mat gens(n, (long)keep.size() + n);
	for (long c = 0; c < (long)keep.size(); ++c)
		for (long i = 0; i < n; ++i) gens.at(i, c) = keep[c][i];
	for (long j = 0; j < n; ++j) gens.at(j, (long)keep.size() + j) = mod;
	return IntegerLattice(g, std::move(gens));
}

} // namespace

TEST_CASE("criterion 1: classification table reproduction")
{
	Timer timer;
	long pass = 0, warn = 0, fail = 0;
	std::vector<std::string> warn_cells;
	for (const auto& t : acceptance_grid()) {
		const RootSystemData& g = build(t);
		for (long ell : kEllSet) {
			if (substitute_excluded(t, ell)) continue;
			auto sols = solve(g, ell, sq_kernel(g, ell));
			CellCheck c = check_cell(t, ell, sols);
			if (c.status == CellStatus::Pass) ++pass;
			else if (c.status == CellStatus::Warn) {
				++warn;
				warn_cells.push_back(t.str() + "/" + std::to_string(ell));
				std::cout << "  WARN " << t.str() << " ell=" << ell << ": " << c.detail
				          << "\n";
			} else {
				++fail;
				std::cout << "  FAIL " << t.str() << " ell=" << ell << ": " << c.detail
				          << "\n";
			}
		}
	}
	// spot values quoted in the criteria
	CHECK(solve(build(parse_type('A', 1)), 5, sq_kernel(build(parse_type('A', 1)), 5)).size() == 2);
	CHECK(solve(build(parse_type('D', 6)), 8, sq_kernel(build(parse_type('D', 6)), 8)).size() == 16);
	CHECK(solve(build(parse_type('D', 5)), 6, sq_kernel(build(parse_type('D', 5)), 6)).size() == 4);
	CHECK(solve(build(parse_type('E', 6)), 9, sq_kernel(build(parse_type('E', 6)), 9)).size() == 3);

	bool ok = fail == 0 && timer.secs() < 60.0;
	CHECK(fail == 0);
	CHECK(timer.secs() < 60.0);
	std::ostringstream d;
	d << pass << " cells pass, " << warn << " warn (divergent printed rows, both readings shown), "
	  << fail << " fail in " << timer.secs() << "s";
	line(1, ok, d.str());
}

TEST_CASE("criterion 2: centralizer lattice identities")
{
	Timer timer;
	bool ok = true;
	long cells = 0, oracled = 0;
	for (const auto& t : acceptance_grid()) {
		const RootSystemData& g = build(t);
		auto lw = weight_lattice(g);
		auto lr = root_lattice(g);
		for (long ell : kEllSet) {
			bool a = cent_q(g, lw, lr, ell) == ell_lattice_square(g, LatticeBase::weights, ell);
			bool b = intersect(cent_q(g, lw, lw, ell), lr) ==
			         ell_lattice_square(g, LatticeBase::roots, ell);
			CHECK(a);
			CHECK(b);
			ok = ok && a && b;
			++cells;
		}
		if (g.rank() <= 3) {
			for (long ell = 3; ell <= 8; ++ell) {
				bool a = cent_q(g, lw, lr, ell) == cent_q_bruteforce(g, lr, ell);
				bool b = cent_q(g, lw, lw, ell) == cent_q_bruteforce(g, lw, ell);
				CHECK(a);
				CHECK(b);
				ok = ok && a && b;
				++oracled;
			}
		}
	}
	std::ostringstream d;
	d << cells << " lattice-identity cells, " << oracled
	  << " coset-oracle cells, all exact in " << timer.secs() << "s";
	line(2, ok, d.str());
}

TEST_CASE("criterion 3: pairing counts solve the group-equations")
{
	Timer timer;
	bool ok = true;
	for (long N = 1; N <= 12; ++N) {
		AbelianGroup G;
		if (N > 1) G.factors = {N};
		long expect = 0;
		for (long d = 1; d <= N; ++d)
			if (N % d == 0) expect += d;
		auto ps = enumerate_pairings(G);
		CHECK((long)ps.size() == expect);
		ok = ok && (long)ps.size() == expect;
		for (const auto& p : ps) {
			bool geq = check_group_equations(pairing_solution(p));
			CHECK(geq);
			ok = ok && geq;
		}
	}
	AbelianGroup K{{2, 2}};
	auto ps = enumerate_pairings(K);
	CHECK(ps.size() == 35);
	ok = ok && ps.size() == 35;
	for (const auto& p : ps) {
		bool geq = check_group_equations(pairing_solution(p));
		CHECK(geq);
		ok = ok && geq;
	}
	std::ostringstream d;
	d << "sum_{d|N} d counts for N <= 12 and 35 for Z2xZ2, every table passing, in "
	  << timer.secs() << "s";
	line(3, ok, d.str());
}

TEST_CASE("criterion 4: gcd criterion equals the brute-force diamond check")
{
	Timer timer;
	long cells = 0, disagreements = 0;
	for (long N = 1; N <= 8; ++N) {
		AbelianGroup G;
		if (N > 1) G.factors = {N};
		for (long ell = 3; ell <= 12; ++ell)
			for (long m = 1; m <= N; ++m) {
				Diamond dia = cyclic_diamond(N, ell, m);
				for (long dd = 1; dd <= N; ++dd) {
					if (N % dd) continue;
					Subgroup H = subgroup_closure(G, {G.smul(N / dd, G.rank() ? AbelianGroup::Elem{1} : AbelianGroup::Elem{})});
					for (long k = 1; k <= dd; ++k) {
						Pairing p{H, H, {}};
						if (dd > 1) p.t = {{mod_long(k, dd)}};
						bool brute = check_diamond_equations(pairing_solution(p), dia);
						bool crit = gcd_criterion(N, dd, k, ell, m);
						if (brute != crit) ++disagreements;
						++cells;
					}
				}
			}
	}
	CHECK(disagreements == 0);
	std::ostringstream d;
	d << cells << " (N,ell,m,d,k) cells, " << disagreements << " disagreements, in "
	  << timer.secs() << "s";
	line(4, disagreements == 0, d.str());
}

TEST_CASE("criterion 5: necessary-kernel gate and starred cells")
{
	Timer timer;
	bool ok = true;
	long starred_cells = 0, empty_cells = 0;
	for (const auto& t : acceptance_grid()) {
		const RootSystemData& g = build(t);
		for (long ell : kEllSet) {
			if (substitute_excluded(t, ell)) continue;
			bool star = kernel_is_starred(g, ell);
			auto lus = solve(g, ell, lusztig_kernel(g, ell));
			if (ell % 2) {
				// odd ell: the kernels always differ
				CHECK(!star);
				ok = ok && !star;
			}
			if (star) {
				++starred_cells;
				auto sq = solve(g, ell, sq_kernel(g, ell));
				bool same = sq.size() == lus.size();
				for (size_t i = 0; same && i < sq.size(); ++i)
					same = sq[i].key() == lus[i].key();
				CHECK(same);
				ok = ok && same;
			} else {
				++empty_cells;
				CHECK(lus.empty());
				ok = ok && lus.empty();
			}
		}
	}
	std::ostringstream d;
	d << starred_cells << " starred cells match the bracket-kernel solutions, "
	  << empty_cells << " cells empty under the lusztig kernel, in " << timer.secs() << "s";
	line(5, ok, d.str());
}

TEST_CASE("criterion 6: coefficient-equation oracle at desk scale")
{
	Timer timer;
	bool ok = true;
	long accepted_checked = 0, rejected_checked = 0;
	for (const auto& t : acceptance_grid()) {
		const RootSystemData& g = build(t);
		for (long ell : kEllSet) {
			if (substitute_excluded(t, ell)) continue;
			auto lp = sq_kernel(g, ell);
			auto sols = solve(g, ell, lp);
			std::vector<std::string> accepted;
			for (const auto& s : sols) accepted.push_back(s.key());

			DiamondSpec dia = build_diamond(g, ell, lp);
			for (const Pairing& p : enumerate_pairings(dia.pi1.grp)) {
				R0Solution cand;
				cand.type = t;
				cand.ell = ell;
				cand.omega = p;
				auto pre = [&](const Subgroup& h) {
					Mat gens(g.rank(), g.rank() + (long)h.elems.size());
					for (long j = 0; j < g.rank(); ++j)
						for (long i = 0; i < g.rank(); ++i)
							gens.at(i, j) = g.cartan.at(i, j);
					for (long c = 0; c < (long)h.elems.size(); ++c) {
						auto v = dia.pi1.rep(h.elems[c]);
						for (long i = 0; i < g.rank(); ++i)
							gens.at(i, g.rank() + c) = v[i];
					}
					return IntegerLattice(g, std::move(gens));
				};
				cand.lambda1 = pre(p.H1);
				cand.lambda2 = pre(p.H2);
				// desk-scale bound on the domain index |Lambda/Lambda'|
				Int idx = lp.det_abs() / lattice_sum(cand.lambda1, cand.lambda2).det_abs();
				if (idx > 200) continue;
				bool is_accepted = false;
				for (const auto& k : accepted)
					if (k == cand.key()) is_accepted = true;
				FFunction f = f_from_solution(cand, lp);
				bool feq = check_f_equations(f);
				if (is_accepted) {
					CHECK(feq);
					ok = ok && feq;
					++accepted_checked;
				} else {
					CHECK(!feq);
					ok = ok && !feq;
					++rejected_checked;
				}
			}
		}
	}
	bool in_time = timer.secs() < 120.0;
	CHECK(in_time);
	std::ostringstream d;
	d << accepted_checked << " accepted solutions pass, " << rejected_checked
	  << " rejected candidates fail, in " << timer.secs() << "s";
	line(6, ok && in_time, d.str());
}

TEST_CASE("criterion 7: rank-one quasitriangularity end to end")
{
	Timer timer;
	bool ok = true;
	const RootSystemData& g = build(parse_type('A', 1));
	long verified = 0;
	for (long ell = 3; ell <= 6; ++ell) {
		auto sols = solve(g, ell, sq_kernel(g, ell));
		for (const auto& s : sols) {
			UqSl2 u = algebra_for(s);
			if (ell == 5 && s.dk->first == 2) {
				CHECK(u.dimension() == 250);
				ok = ok && u.dimension() == 250;
			}
			auto rep = u.verify_solution(s);
			CHECK(rep.invertible);
			CHECK(rep.intertwines);
			CHECK(rep.coproduct_first);
			CHECK(rep.coproduct_second);
			ok = ok && rep.all();
			++verified;
		}
	}
	// negative control: the trivial candidate at ell = 4 is not an R-matrix
	R0Solution cand;
	cand.type = g.type;
	cand.ell = 4;
	Subgroup triv = subgroup_closure(g.pi1, {});
	cand.omega = Pairing{triv, triv, {}};
	cand.dk = {1, 1};
	cand.lambda1 = root_lattice(g);
	cand.lambda2 = root_lattice(g);
	UqSl2 u = algebra_for(cand);
	auto rep = u.verify_quasitriangular(u.assemble_R(cand), u.assemble_R_inverse(cand));
	CHECK(!rep.all());
	ok = ok && !rep.all();
	bool in_time = timer.secs() < 300.0;
	CHECK(in_time);
	std::ostringstream d;
	d << verified << " solutions pass all three axioms (250-dimensional algebra at ell=5), "
	  << "the rejected candidate fails, in " << timer.secs() << "s";
	line(7, ok && in_time, d.str());
}

TEST_CASE("criterion 8: B2 worked example")
{
	Timer timer;
	const RootSystemData& b2 = build(parse_type('B', 2));
	bool ok = true;

	// odd ell: diamond (Z2, Z2, Z2, Z1, Z1, 1, lambda_2), solutions (1,1), (2,1)
	for (long ell : {3L, 5L, 7L, 9L}) {
		auto spec = build_diamond(b2, ell, sq_kernel(b2, ell));
		bool dia_ok = spec.eq.A.factors == std::vector<long>{2} &&
		              spec.subB.size() == 2 && spec.subC.size() == 1 &&
		              spec.subD.size() == 1 && spec.cyclic_mod.has_value() &&
		              (*spec.cyclic_mod)[1] == 0 && (*spec.cyclic_mod)[2] == 1;
		CHECK(dia_ok);
		auto sols = solve(b2, ell, sq_kernel(b2, ell));
		std::vector<std::pair<long, long>> dk;
		for (const auto& s : sols) dk.push_back(*s.dk);
		std::sort(dk.begin(), dk.end());
		bool sols_ok = dk == std::vector<std::pair<long, long>>{{1, 1}, {2, 1}};
		CHECK(sols_ok);
		ok = ok && dia_ok && sols_ok;
	}

	// even ell: the printed text says (Z2,Z2,Z2,Z2,Z1,1,0) with all 3 solutions;
	// the computed diamond is (Z2,Z2,Z1,Z2,Z1,primitive,0) with exactly the two
	// full-support solutions, and the coefficient-equation oracle sides with the
	// computed reading (criterion 6 covers B2 at ell = 6 and 8). Reported as the
	// documented divergence, asserted on the computed values.
	bool even_match_printed = true;
	for (long ell : {6L, 8L, 12L}) {
		auto spec = build_diamond(b2, ell, sq_kernel(b2, ell));
		bool dia_ok = spec.eq.A.factors == std::vector<long>{2} &&
		              spec.subB.size() == 1 && spec.subC.size() == 2 &&
		              spec.subD.size() == 1;
		CHECK(dia_ok);
		auto sols = solve(b2, ell, sq_kernel(b2, ell));
		std::vector<std::pair<long, long>> dk;
		for (const auto& s : sols) dk.push_back(*s.dk);
		std::sort(dk.begin(), dk.end());
		bool sols_ok = dk == std::vector<std::pair<long, long>>{{2, 1}, {2, 2}};
		CHECK(sols_ok);
		if (sols.size() != 3) even_match_printed = false;
		ok = ok && dia_ok && sols_ok;
	}
	std::ostringstream d;
	d << "odd-ell diamond and solutions match the worked example exactly; even-ell "
	  << (even_match_printed ? "matches the printed count"
	                         : "computed set {(2,1),(2,2)} (printed text claims a third "
	                           "solution; refuted by its own Gram data and the "
	                           "coefficient-equation oracle)")
	  << "; in " << timer.secs() << "s";
	line(8, ok, d.str());
}
