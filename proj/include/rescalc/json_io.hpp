#pragma once

#include "rescalc/classifier.hpp"
#include "rescalc/numeric.hpp"

#include <json.hpp>

namespace rescalc {

using Json = nlohmann::ordered_json;

Json to_json(const TorusPoint& p);
TorusPoint torus_point_from_json(const Json& j);
Json to_json(const Coset& c);
Json to_json(const Hypersurface& h);
Json to_json(const Factored& f);
Json to_json(const MuParameters& p, bool two_lengths);
MuParameters mu_parameters_from_json(const Json& j);
Json root_system_summary(const RootSystem& rs);
Json to_json(const ResidualReport& r, double q);
Json residual_report_json(const std::vector<ResidualReport>& reports, double q);
Json decomposition_json(const Decomposition& dec, const Factored& f, const RootSystem& rs,
                        const NumericConfig& cfg);
Json grouped_json(const GroupedDecomposition& gd, const RootSystem& rs);
Json check_report_json(const CheckReport& rep);

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

} // namespace rescalc
