#pragma once

#include "uqr/rsolver.hpp"

namespace uqr {

/// Reference data for one (type, ell) cell of the classification: the
/// solution set as printed in the source table ("display") and the set the
/// closed-form case analysis actually yields ("derived"). Cells where the two
/// differ are reported as WARN by the golden runner, never silently merged.
struct CellReference {
	bool starred = false;
	std::vector<std::string> display_keys, derived_keys; // sorted R0Solution keys
	std::vector<std::string> display_labels, derived_labels;

	bool divergent() const { return display_keys != derived_keys; }
};

CellReference reference_cell(const RootSystemType& t, long ell);

enum class CellStatus { Pass, Warn, Fail };

struct CellCheck {
	CellStatus status = CellStatus::Fail;
	std::string detail;
};

/// Compare a solve() result against the reference readings: Pass when all
/// agree, Warn when it matches the derived reading on a divergent cell,
/// Fail otherwise.
CellCheck check_cell(const RootSystemType& t, long ell, const std::vector<R0Solution>& got);

/// Human-readable label for one solution (subgroup shapes plus omega data).
std::string solution_label(const R0Solution& sol);

} // namespace uqr
