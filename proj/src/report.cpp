#include "uqr/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace uqr {

using nlohmann::json;

SolutionReport make_report(const RootSystemType& t, long ell, const std::string& kernel,
                           const std::vector<R0Solution>& sols)
{
	const RootSystemData& g = build(t);
	SolutionReport r;
	r.family = (char)t.family;
	r.rank = t.rank;
	r.ell = ell;
	r.kernel = kernel;
	r.starred = kernel_is_starred(g, ell);
	r.count = (long)sols.size();
	r.pi1_basis_weights = g.pi1_gen_weight;
	for (const auto& s : sols) {
		SolutionEntry e;
		e.h1_order = s.omega.H1.size();
		e.h2_order = s.omega.H2.size();
		for (const auto& b : s.omega.H1.basis) e.h1_gens.push_back(b);
		for (const auto& b : s.omega.H2.basis) e.h2_gens.push_back(b);
		e.h1_factors = s.omega.H1.basis_orders;
		e.h2_factors = s.omega.H2.basis_orders;
		for (size_t i = 0; i < s.omega.t.size(); ++i)
			for (size_t j = 0; j < s.omega.t[i].size(); ++j)
				e.omega.push_back({s.omega.t[i][j], s.omega.pair_order(i, j)});
		e.dk = s.dk;
		auto cols = [](const IntegerLattice& L) {
			std::vector<std::vector<long>> v;
			for (long j = 0; j < L.basis().cols; ++j) {
				std::vector<long> col;
				for (long i = 0; i < L.basis().rows; ++i) col.push_back(to_long(L.basis().at(i, j)));
				v.push_back(col);
			}
			return v;
		};
		e.lambda1 = cols(s.lambda1);
		e.lambda2 = cols(s.lambda2);
		r.solutions.push_back(std::move(e));
	}
	return r;
}

json report_to_json(const SolutionReport& r)
{
	json j;
	j["input"] = {{"type", std::string(1, r.family)},
	              {"rank", r.rank},
	              {"ell", r.ell},
	              {"kernel", r.kernel}};
	j["starred"] = r.starred;
	j["count"] = r.count;
	j["pi1_basis_weights"] = r.pi1_basis_weights;
	j["solutions"] = json::array();
	for (const auto& e : r.solutions) {
		json s;
		s["H1"] = {{"order", e.h1_order}, {"factors", e.h1_factors}, {"generators", e.h1_gens}};
		s["H2"] = {{"order", e.h2_order}, {"factors", e.h2_factors}, {"generators", e.h2_gens}};
		json om = json::array();
		for (const auto& p : e.omega) om.push_back({{"num", p[0]}, {"den", p[1]}});
		s["omega"] = om;
		if (e.dk) s["dk"] = {e.dk->first, e.dk->second};
		s["lambda1"] = e.lambda1;
		s["lambda2"] = e.lambda2;
		s["f_equations"] = e.f_equations;
		s["quasitriangular"] = e.quasitriangular;
		j["solutions"].push_back(std::move(s));
	}
	return j;
}

SolutionReport report_from_json(const json& j)
{
	SolutionReport r;
	r.family = j.at("input").at("type").get<std::string>().at(0);
	r.rank = j.at("input").at("rank").get<long>();
	r.ell = j.at("input").at("ell").get<long>();
	r.kernel = j.at("input").at("kernel").get<std::string>();
	r.starred = j.at("starred").get<bool>();
	r.count = j.at("count").get<long>();
	r.pi1_basis_weights = j.at("pi1_basis_weights").get<std::vector<long>>();
	for (const auto& s : j.at("solutions")) {
		SolutionEntry e;
		e.h1_order = s.at("H1").at("order").get<long>();
		e.h2_order = s.at("H2").at("order").get<long>();
		e.h1_gens = s.at("H1").at("generators").get<std::vector<std::vector<long>>>();
		e.h2_gens = s.at("H2").at("generators").get<std::vector<std::vector<long>>>();
		e.h1_factors = s.at("H1").at("factors").get<std::vector<long>>();
		e.h2_factors = s.at("H2").at("factors").get<std::vector<long>>();
		for (const auto& om : s.at("omega"))
			e.omega.push_back({om.at("num").get<long>(), om.at("den").get<long>()});
		if (s.contains("dk")) {
			auto v = s.at("dk").get<std::vector<long>>();
			e.dk = std::make_pair(v[0], v[1]);
		}
		e.lambda1 = s.at("lambda1").get<std::vector<std::vector<long>>>();
		e.lambda2 = s.at("lambda2").get<std::vector<std::vector<long>>>();
		e.f_equations = s.at("f_equations").get<std::string>();
		e.quasitriangular = s.at("quasitriangular").get<std::string>();
		r.solutions.push_back(std::move(e));
	}
	return r;
}

std::string render_text(const SolutionReport& r)
{
	std::ostringstream os;
	os << r.family << r.rank << "  ell=" << r.ell << "  kernel=" << r.kernel
	   << (r.starred ? "  [lusztig kernel coincides]" : "") << "\n";
	os << "  #solutions: " << r.count << "\n";
	auto shape = [](long order, const std::vector<long>& fs) {
		if (order == 1) return std::string("Z1");
		std::string s;
		for (size_t i = 0; i < fs.size(); ++i) {
			if (i) s += "xZ";
			else s += "Z";
			s += std::to_string(fs[i]);
		}
		return s;
	};
	for (const auto& e : r.solutions) {
		os << "  H1 ~ " << shape(e.h1_order, e.h1_factors) << "  H2 ~ "
		   << shape(e.h2_order, e.h2_factors);
		if (e.h1_order > 1 || e.h2_order > 1) {
			os << "  omega = [";
			for (size_t i = 0; i < e.omega.size(); ++i) {
				if (i) os << ", ";
				os << "e(" << e.omega[i][0] << "/" << e.omega[i][1] << ")";
			}
			os << "]";
		} else {
			os << "  omega(0,0) = 1";
		}
		if (e.dk) os << "  (d,k)=(" << e.dk->first << "," << e.dk->second << ")";
		if (e.f_equations != "skipped") os << "  f:" << e.f_equations;
		if (e.quasitriangular != "skipped") os << "  qt:" << e.quasitriangular;
		os << "\n";
	}
	return os.str();
}

} // namespace uqr
