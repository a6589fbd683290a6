#include "rescalc/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

namespace py = pybind11;
using namespace rescalc;

namespace {

RootSystem build_rs(const std::string& type, int rank) {
    return RootSystem::build(type, type == "G2" ? 2 : rank);
}

MuParameters params_from(const std::string& k_short, const std::string& k_long,
                         const std::string& l_short, const std::string& l_long) {
    MuParameters p;
    p.short_roots.k = Rational::parse(k_short);
    p.long_roots.k = k_long.empty() ? p.short_roots.k : Rational::parse(k_long);
    if (!l_short.empty()) p.short_roots.l = Rational::parse(l_short);
    if (!l_long.empty()) p.long_roots.l = Rational::parse(l_long);
    return p;
}

} // namespace

PYBIND11_MODULE(_rescalc, m) {
    m.doc() = "exact residue calculus on unramified character tori";

    m.def("root_system_json",
          [](const std::string& type, int rank) {
              return root_system_summary(build_rs(type, rank)).dump();
          },
          py::arg("type"), py::arg("rank") = 2,
          "Root system summary: positive roots, coroots, Weyl order, Gram matrix.");

    m.def("weyl_order",
          [](const std::string& type, int rank) {
              return build_rs(type, rank).weyl_order();
          },
          py::arg("type"), py::arg("rank") = 2);

    m.def("mu_json",
          [](const std::string& type, int rank, const std::string& k_short,
             const std::string& k_long, const std::string& l_short,
             const std::string& l_long) {
              RootSystem rs = build_rs(type, rank);
              MuParameters p = params_from(k_short, k_long, l_short, l_long);
              Json j;
              j["parameters"] = to_json(p, rs.length_classes() == 2);
              j["mu"] = to_json(build_mu(rs, p));
              return j.dump();
          },
          py::arg("type"), py::arg("rank") = 2, py::arg("k_short") = "1",
          py::arg("k_long") = "", py::arg("l_short") = "", py::arg("l_long") = "",
          "The mu function in factored form.");

    m.def("mu_value",
          [](const std::string& type, int rank, const std::string& k_short,
             const std::string& k_long, const std::vector<std::string>& phases,
             const std::vector<std::string>& exponents, double q) {
              RootSystem rs = build_rs(type, rank);
              Factored mu = build_mu(rs, params_from(k_short, k_long, "", ""));
              QVec ph, ex;
              for (const auto& s : phases) ph.push_back(Rational::parse(s));
              for (const auto& s : exponents) ex.push_back(Rational::parse(s));
              TorusPoint p(std::move(ph), std::move(ex));
              Field v = mu.evaluate(p);
              auto c = v.to_complex(q);
              return py::make_tuple(v.str(), std::complex<double>(c));
          },
          py::arg("type"), py::arg("rank"), py::arg("k_short"), py::arg("k_long"),
          py::arg("phases"), py::arg("exponents"), py::arg("q") = 2.0,
          "Exact and numeric value of mu at a torus point.");

    m.def("residual_json",
          [](const std::string& type, int rank, const std::string& k_short,
             const std::string& k_long, double q, unsigned long seed) {
              RootSystem rs = build_rs(type, rank);
              Factored mu = build_mu(rs, params_from(k_short, k_long, "", ""));
              Arrangement arr = arrangement_from_mu(mu, rs);
              auto reports = classify_residual(mu, arr, rs);
              WalkOptions o;
              o.seed = seed;
              Decomposition dec = compute_residue_data(mu, arr, rs, o);
              for (auto& r : reports)
                  if (r.residual && r.codim == rs.rank())
                      r.opdam = opdam_sum(r.coset, mu, dec, rs);
              return residual_report_json(reports, q).dump();
          },
          py::arg("type"), py::arg("rank") = 2, py::arg("k_short") = "1",
          py::arg("k_long") = "", py::arg("q") = 2.0, py::arg("seed") = 0,
          "Residual-coset classification with nonvanishing sums.");

    m.def("decompose_json",
          [](const std::string& type, int rank, const std::string& k_short,
             const std::string& k_long, double q, unsigned long seed) {
              RootSystem rs = build_rs(type, rank);
              Factored mu = build_mu(rs, params_from(k_short, k_long, "", ""));
              Arrangement arr = arrangement_from_mu(mu, rs);
              WalkOptions o;
              o.seed = seed;
              Decomposition dec = compute_residue_data(mu, arr, rs, o);
              NumericConfig cfg;
              cfg.q = q;
              Json j;
              j["decomposition"] = decomposition_json(dec, mu, rs, cfg);
              j["grouped"] = grouped_json(group_decomposition(dec, rs), rs);
              return j.dump();
          },
          py::arg("type"), py::arg("rank") = 2, py::arg("k_short") = "1",
          py::arg("k_long") = "", py::arg("q") = 2.0, py::arg("seed") = 0,
          "Contour-shift decomposition terms and the grouped report.");

    m.def("verify",
          [](const std::string& type, int rank, const std::string& k_short,
             const std::string& k_long, double q, long grid, double tolerance,
             unsigned long seed) {
              RootSystem rs = build_rs(type, rank);
              Factored mu = build_mu(rs, params_from(k_short, k_long, "", ""));
              Arrangement arr = arrangement_from_mu(mu, rs);
              WalkOptions o;
              o.seed = seed;
              Decomposition dec = compute_residue_data(mu, arr, rs, o);
              NumericConfig cfg;
              cfg.q = q;
              cfg.grid = grid;
              cfg.tolerance = tolerance;
              CheckReport rep = check_full_decomposition(mu, dec, rs, cfg);
              py::dict d;
              d["pass"] = rep.pass;
              d["difference"] = rep.lhs_minus_rhs;
              d["scale"] = rep.scale;
              d["message"] = rep.message;
              return d;
          },
          py::arg("type"), py::arg("rank") = 2, py::arg("k_short") = "1",
          py::arg("k_long") = "", py::arg("q") = 2.0, py::arg("grid") = 256,
          py::arg("tolerance") = 1e-6, py::arg("seed") = 0,
          "Numeric check of the contour-shift identity; returns a report dict.");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
