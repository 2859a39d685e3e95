#pragma once

#include "uqr/reference_table.hpp"

#include <nlohmann/json_fwd.hpp>

namespace uqr {

/// Wire format for one solve() run. Everything is exact: omega values are
/// (numerator, denominator) exponents of e^{2*pi*i*(num/den)} on basis pairs,
/// lattices are Hermite basis columns in fundamental-weight coordinates.
struct SolutionEntry {
	long h1_order = 1, h2_order = 1;
	std::vector<long> h1_factors, h2_factors;        // basis generator orders
	std::vector<std::vector<long>> h1_gens, h2_gens; // pi1 coordinates
	std::vector<std::array<long, 2>> omega;          // row-major over basis pairs
	std::optional<std::pair<long, long>> dk;
	std::vector<std::vector<long>> lambda1, lambda2; // basis columns
	std::string f_equations = "skipped";
	std::string quasitriangular = "skipped";

	bool operator==(const SolutionEntry&) const = default;
};

struct SolutionReport {
	char family = 'A';
	long rank = 1, ell = 3;
	std::string kernel = "square"; // or "lusztig"
	bool starred = false;
	long count = 0;
	std::vector<long> pi1_basis_weights; // weight indices of the designated generators
	std::vector<SolutionEntry> solutions;

	bool operator==(const SolutionReport&) const = default;
};

SolutionReport make_report(const RootSystemType& t, long ell, const std::string& kernel,
                           const std::vector<R0Solution>& sols);

nlohmann::json report_to_json(const SolutionReport& r);
SolutionReport report_from_json(const nlohmann::json& j);

std::string render_text(const SolutionReport& r);

} // namespace uqr
