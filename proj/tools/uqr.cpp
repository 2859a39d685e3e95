// uqr: toral R-matrix data for small quantum groups u_q(g, Lambda, Lambda')
// at roots of unity. Subcommands: solve one (type, ell) cell, sweep the
// classification table, or verify the rank-one Hopf-algebra axioms.

#include "uqr/report.hpp"
#include "uqr/uqalg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iostream>

using namespace uqr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitExcluded = 3;

struct SolveArgs {
	std::string type = "A";
	long rank = 1;
	long ell = 3;
	std::string kernel = "square";
	std::string format = "table";
	std::string verify = "none";
};

IntegerLattice kernel_lattice(const RootSystemData& g, long ell, const std::string& kernel)
{
	if (kernel == "lusztig") return lusztig_kernel(g, ell);
	return ell_lattice_square(g, LatticeBase::roots, ell);
}

int run_solve(const SolveArgs& a)
{
	RootSystemType t = parse_type(a.type.at(0), a.rank);
	const RootSystemData& g = build(t);
	std::vector<R0Solution> sols;
	try {
		sols = solve(g, a.ell, kernel_lattice(g, a.ell, a.kernel));
	} catch (const ExcludedTypeError& e) {
		std::cerr << t.str() << " at ell=" << a.ell
		          << " needs the substitution table; consult";
		for (const auto& s : e.substitution) std::cerr << " " << s.str();
		std::cerr << "\n";
		return kExitExcluded;
	}

	SolutionReport rep = make_report(t, a.ell, a.kernel, sols);
	for (size_t i = 0; i < sols.size(); ++i) {
		if (a.verify == "f" || a.verify == "full") {
			FFunction f = f_from_solution(sols[i], kernel_lattice(g, a.ell, a.kernel));
			try {
				rep.solutions[i].f_equations = check_f_equations(f) ? "pass" : "fail";
			} catch (const std::length_error&) {
				rep.solutions[i].f_equations = "skipped";
			}
		}
		if (a.verify == "full") {
			if (t.family != Family::A || t.rank != 1) {
				std::cerr << "--verify full runs the Hopf-algebra axioms for A1 only; "
				             "use --verify f (check_f_equations) for higher rank\n";
				return kExitInput;
			}
			UqSl2 u = algebra_for(sols[i]);
			rep.solutions[i].quasitriangular = u.verify_solution(sols[i]).all() ? "pass" : "fail";
		}
	}

	if (a.format == "json") std::cout << report_to_json(rep).dump(2) << "\n";
	else std::cout << render_text(rep);
	return sols.empty() ? kExitEmpty : kExitOk;
}

struct TableArgs {
	long max_rank = 8;
	std::vector<long> ells = {3, 4, 5, 6, 7, 8, 9, 12};
	std::string kernel = "square";
};

std::vector<RootSystemType> table_grid(long max_rank)
{
	std::vector<RootSystemType> v;
	for (long n = 1; n <= std::min(max_rank, 6L); ++n) v.push_back(parse_type('A', n));
	for (long n = 2; n <= std::min(max_rank, 5L); ++n) v.push_back(parse_type('B', n));
	for (long n = 3; n <= std::min(max_rank, 5L); ++n) v.push_back(parse_type('C', n));
	for (long n = 4; n <= std::min(max_rank, 7L); ++n) v.push_back(parse_type('D', n));
	for (long n = 6; n <= std::min(max_rank, 8L); ++n) v.push_back(parse_type('E', n));
	if (max_rank >= 4) v.push_back(parse_type('F', 4));
	v.push_back(parse_type('G', 2));
	return v;
}

int run_table(const TableArgs& a)
{
	long pass = 0, warn = 0, fail = 0, skipped = 0;
	for (const auto& t : table_grid(a.max_rank)) {
		const RootSystemData& g = build(t);
		for (long ell : a.ells) {
			if (ell <= 2) continue;
			if (auto sub = substitute_excluded(t, ell)) {
				std::cout << t.str() << " ell=" << ell << "  SKIP (see";
				for (const auto& s : *sub) std::cout << " " << s.str();
				std::cout << ")\n";
				++skipped;
				continue;
			}
			auto sols = solve(g, ell, kernel_lattice(g, ell, a.kernel));
			if (a.kernel == "lusztig") {
				std::cout << t.str() << " ell=" << ell << "  #=" << sols.size()
				          << (kernel_is_starred(g, ell) ? "  (starred)" : "") << "\n";
				continue;
			}
			CellCheck c = check_cell(t, ell, sols);
			const char* tag = c.status == CellStatus::Pass
			                      ? "PASS"
			                      : (c.status == CellStatus::Warn ? "WARN" : "FAIL");
			std::cout << t.str() << " ell=" << ell << "  #=" << sols.size() << "  " << tag;
			if (c.status != CellStatus::Pass) std::cout << "  " << c.detail;
			std::cout << "\n";
			if (c.status == CellStatus::Pass) ++pass;
			else if (c.status == CellStatus::Warn) ++warn;
			else ++fail;
		}
	}
	if (a.kernel != "lusztig")
		std::cout << "summary: " << pass << " pass, " << warn << " warn, " << fail
		          << " fail, " << skipped << " skipped\n";
	return fail ? kExitInput : kExitOk;
}

struct VerifyArgs {
	std::string type = "A";
	long rank = 1;
	long ell = 3;
	bool full = false;
};

int run_verify(const VerifyArgs& a)
{
	RootSystemType t = parse_type(a.type.at(0), a.rank);
	const RootSystemData& g = build(t);
	if (a.full && !(t.family == Family::A && t.rank == 1)) {
		std::cerr << "--full verifies the Hopf-algebra axioms and supports A1 only; "
		             "higher-rank solutions are certified through check_f_equations\n";
		return kExitInput;
	}
	std::vector<R0Solution> sols;
	try {
		sols = solve(g, a.ell, ell_lattice_square(g, LatticeBase::roots, a.ell));
	} catch (const ExcludedTypeError& e) {
		std::cerr << "excluded pair; consult";
		for (const auto& s : e.substitution) std::cerr << " " << s.str();
		std::cerr << "\n";
		return kExitExcluded;
	}
	bool all_ok = true;
	for (const auto& s : sols) {
		auto t0 = std::chrono::steady_clock::now();
		std::cout << solution_label(s) << ": ";
		if (a.full) {
			UqSl2 u = algebra_for(s);
			auto rep = u.verify_quasitriangular(u.assemble_R(s), u.assemble_R_inverse(s));
			std::cout << "invertible=" << (rep.invertible ? "pass" : "FAIL")
			          << " intertwine=" << (rep.intertwines ? "pass" : "FAIL")
			          << " coproduct1=" << (rep.coproduct_first ? "pass" : "FAIL")
			          << " coproduct2=" << (rep.coproduct_second ? "pass" : "FAIL");
			all_ok = all_ok && rep.all();
		} else {
			FFunction f = f_from_solution(s, ell_lattice_square(g, LatticeBase::roots, a.ell));
			try {
				bool ok = check_f_equations(f);
				std::cout << "f-equations=" << (ok ? "pass" : "FAIL");
				all_ok = all_ok && ok;
			} catch (const std::length_error&) {
				std::cout << "f-equations=skipped (index too large)";
			}
		}
		auto t1 = std::chrono::steady_clock::now();
		std::cout << "  ["
		          << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
		          << " ms]\n";
	}
	return all_ok ? kExitOk : kExitInput;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"toral R-matrix solver for small quantum groups at roots of unity"};
	app.require_subcommand(1);

	SolveArgs sa;
	CLI::App* solve_cmd = app.add_subcommand("solve", "solve one (type, rank, ell) cell");
	solve_cmd->add_option("--type,-t", sa.type, "root system family A..G")->required();
	solve_cmd->add_option("--rank,-r", sa.rank, "rank")->required();
	solve_cmd->add_option("--ell,-l", sa.ell, "order of the root of unity")->required();
	solve_cmd->add_option("--kernel", sa.kernel, "square (default) or lusztig")
	    ->check(CLI::IsMember({"square", "lusztig"}));
	solve_cmd->add_option("--format", sa.format, "table (default) or json")
	    ->check(CLI::IsMember({"table", "json"}));
	solve_cmd->add_option("--verify", sa.verify, "none (default), f, or full")
	    ->check(CLI::IsMember({"none", "f", "full"}));

	TableArgs ta;
	CLI::App* table_cmd = app.add_subcommand("table", "reproduce the classification table");
	table_cmd->add_option("--max-rank", ta.max_rank, "rank cutoff for the grid");
	table_cmd->add_option("--ell-set", ta.ells, "orders to sweep")->delimiter(',');
	table_cmd->add_option("--kernel", ta.kernel, "square (default) or lusztig")
	    ->check(CLI::IsMember({"square", "lusztig"}));

	VerifyArgs va;
	CLI::App* verify_cmd = app.add_subcommand("verify", "verify solutions per axiom");
	verify_cmd->add_option("--type,-t", va.type, "root system family")->required();
	verify_cmd->add_option("--rank,-r", va.rank, "rank")->required();
	verify_cmd->add_option("--ell,-l", va.ell, "order of the root of unity")->required();
	verify_cmd->add_flag("--full", va.full, "run the full Hopf-algebra axioms (A1 only)");

	CLI11_PARSE(app, argc, argv);

	try {
		if (solve_cmd->parsed()) return run_solve(sa);
		if (table_cmd->parsed()) return run_table(ta);
		if (verify_cmd->parsed()) return run_verify(va);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitInput;
	}
	return kExitInput;
}
