// rescalc: exact residue data, residual-point classification and numeric
// verification for mu functions on unramified character tori.

#include "rescalc/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

using namespace rescalc;

namespace {

struct RunConfig {
    std::string type = "G2";
    int rank = 2;
    std::string k_short = "1";
    std::string k_long;
    std::string l_short;
    std::string l_long;
    double q = 2.0;
    long grid = 256;
    double tolerance = 1e-6;
    unsigned long seed = 0;
    std::string chamber;  // sign string like "++----", empty = dominant
    std::string json_out;
    bool verify = false;

    RootSystem build_rs() const {
        int r = rank;
        if (type == "G2") r = 2;
        return RootSystem::build(type, r);
    }
    MuParameters build_params() const {
        MuParameters p;
        p.short_roots.k = Rational::parse(k_short);
        p.long_roots.k = k_long.empty() ? p.short_roots.k : Rational::parse(k_long);
        if (!l_short.empty()) p.short_roots.l = Rational::parse(l_short);
        if (!l_long.empty()) p.long_roots.l = Rational::parse(l_long);
        return p;
    }
    NumericConfig numeric() const {
        NumericConfig cfg;
        cfg.q = q;
        cfg.grid = grid;
        cfg.tolerance = tolerance;
        cfg.seed = seed;
        return cfg;
    }
    WalkOptions walk_options(const RootSystem& rs) const {
        WalkOptions o;
        o.seed = seed;
        if (!chamber.empty()) {
            if (chamber.size() != rs.positive_roots().size())
                throw std::invalid_argument("chamber sign string length mismatch");
            for (char c : chamber) o.start_signs.push_back(c == '+' ? 1 : -1);
        }
        return o;
    }
};

void load_config_file(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    Json j;
    in >> j;
    if (j.contains("type")) rc.type = j["type"].get<std::string>();
    if (j.contains("rank")) rc.rank = j["rank"].get<int>();
    if (j.contains("mu")) {
        const auto& jm = j["mu"];
        if (jm.contains("short")) {
            if (jm["short"].contains("k")) rc.k_short = jm["short"]["k"].get<std::string>();
            if (jm["short"].contains("l")) rc.l_short = jm["short"]["l"].get<std::string>();
        }
        if (jm.contains("long")) {
            if (jm["long"].contains("k")) rc.k_long = jm["long"]["k"].get<std::string>();
            if (jm["long"].contains("l")) rc.l_long = jm["long"]["l"].get<std::string>();
        }
    }
    if (j.contains("q")) rc.q = j["q"].get<double>();
    if (j.contains("grid")) rc.grid = j["grid"].get<long>();
    if (j.contains("tolerance")) rc.tolerance = j["tolerance"].get<double>();
    if (j.contains("seed")) rc.seed = j["seed"].get<unsigned long>();
    if (j.contains("chamber")) rc.chamber = j["chamber"].get<std::string>();
}

void emit(const Json& j, const std::string& json_out) {
    if (json_out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(json_out);
        out << j.dump(2) << "\n";
    }
}

void print_residual_table(const std::vector<ResidualReport>& reports, double q) {
    std::cout << std::left << std::setw(7) << "orbit" << std::setw(6) << "rep"
              << std::setw(8) << "codim" << std::setw(7) << "order" << std::setw(10)
              << "residual" << "coset\n";
    for (const auto& r : reports) {
        if (!r.orbit_representative) continue;
        std::cout << std::left << std::setw(7) << r.orbit_id << std::setw(6) << "*"
                  << std::setw(8) << r.codim << std::setw(7) << r.pole_order
                  << std::setw(10) << (r.residual ? "yes" : "no")
                  << torus_point_str(r.coset.base);
        if (r.residual && r.codim == r.coset.ambient_rank() && !r.opdam.is_zero()) {
            auto v = r.opdam.to_complex(q);
            std::cout << "  opdam=" << v.real() << (v.imag() < 0 ? "-" : "+")
                      << std::abs(v.imag()) << "i";
        }
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact residue calculus on unramified character tori"};
    app.require_subcommand(1);
    RunConfig rc;
    std::string config_path;

    auto add_common = [&](CLI::App* cmd, bool with_mu) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--type", rc.type, "root system type: A, B, C, D, G2");
        cmd->add_option("--rank", rc.rank, "rank (ignored for G2)");
        if (with_mu) {
            cmd->add_option("--k-short", rc.k_short, "parameter k on short roots");
            cmd->add_option("--k-long", rc.k_long, "parameter k on long roots");
            cmd->add_option("--l-short", rc.l_short, "phase-1/2 parameter on short roots");
            cmd->add_option("--l-long", rc.l_long, "phase-1/2 parameter on long roots");
        }
        cmd->add_option("--q", rc.q, "numeric residue-field cardinality");
        cmd->add_option("--grid", rc.grid, "quadrature points per circle");
        cmd->add_option("--tolerance", rc.tolerance, "relative tolerance");
        cmd->add_option("--seed", rc.seed, "walk seed");
        cmd->add_option("--chamber", rc.chamber, "start chamber signs, e.g. ++++++");
        cmd->add_option("--json-out", rc.json_out, "write the JSON report to a file");
    };

    auto* c_rootsys = app.add_subcommand("rootsys", "root system summary");
    add_common(c_rootsys, false);
    auto* c_mu = app.add_subcommand("mu", "build the mu function");
    add_common(c_mu, true);
    auto* c_residual = app.add_subcommand("residual", "classify residual cosets");
    add_common(c_residual, true);
    auto* c_decompose = app.add_subcommand("decompose", "contour-shift decomposition");
    add_common(c_decompose, true);
    c_decompose->add_flag("--verify", rc.verify, "run the numeric identity check");
    auto* c_verify = app.add_subcommand("verify", "numeric verification suite");
    add_common(c_verify, true);

    // load the config file first; explicit flags then override it, since
    // CLI11 assigns bound variables only for options actually given
    try {
        for (int i = 1; i + 1 < argc; ++i)
            if (std::string(argv[i]) == "--config") load_config_file(rc, argv[i + 1]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_rootsys)) {
            RootSystem rs = rc.build_rs();
            Json j = root_system_summary(rs);
            emit(j, rc.json_out);
            std::cout << rs.type() << rs.rank() << ": " << rs.positive_roots().size()
                      << " positive roots, |W| = " << rs.weyl_order() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_mu)) {
            RootSystem rs = rc.build_rs();
            Factored mu = build_mu(rs, rc.build_params());
            Json j;
            j["parameters"] = to_json(rc.build_params(), rs.length_classes() == 2);
            j["mu"] = to_json(mu);
            emit(j, rc.json_out);
            return 0;
        }
        if (app.got_subcommand(c_residual)) {
            RootSystem rs = rc.build_rs();
            Factored mu = build_mu(rs, rc.build_params());
            Arrangement arr = arrangement_from_mu(mu, rs);
            auto reports = classify_residual(mu, arr, rs);
            // opdam sums for the full-rank residual orbits
            Decomposition dec = compute_residue_data(mu, arr, rs, rc.walk_options(rs));
            for (auto& r : reports)
                if (r.residual && r.codim == rs.rank())
                    r.opdam = opdam_sum(r.coset, mu, dec, rs);
            Json j = residual_report_json(reports, rc.q);
            emit(j, rc.json_out);
            print_residual_table(reports, rc.q);
            return 0;
        }
        if (app.got_subcommand(c_decompose)) {
            RootSystem rs = rc.build_rs();
            Factored mu = build_mu(rs, rc.build_params());
            Arrangement arr = arrangement_from_mu(mu, rs);
            Decomposition dec;
            try {
                dec = compute_residue_data(mu, arr, rs, rc.walk_options(rs));
            } catch (const walk_error& e) {
                std::cerr << "walk failure: " << e.what() << "\n";
                return 3;
            }
            Json j;
            j["decomposition"] = decomposition_json(dec, mu, rs, rc.numeric());
            j["grouped"] = grouped_json(group_decomposition(dec, rs), rs);
            if (rc.verify) {
                CheckReport rep = check_full_decomposition(mu, dec, rs, rc.numeric());
                j["verify"] = check_report_json(rep);
                emit(j, rc.json_out);
                std::cout << (rep.pass ? "identity check: pass" : "identity check: FAIL")
                          << " (" << rep.message << ")\n";
                return rep.pass ? 0 : 1;
            }
            emit(j, rc.json_out);
            std::cout << "terms: " << j["decomposition"]["terms"].size() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_verify)) {
            RootSystem rs = rc.build_rs();
            Factored mu = build_mu(rs, rc.build_params());
            Arrangement arr = arrangement_from_mu(mu, rs);
            Decomposition dec;
            try {
                dec = compute_residue_data(mu, arr, rs, rc.walk_options(rs));
            } catch (const walk_error& e) {
                std::cerr << "walk failure: " << e.what() << "\n";
                return 3;
            }
            CheckReport rep = check_full_decomposition(mu, dec, rs, rc.numeric());
            Json j = check_report_json(rep);
            emit(j, rc.json_out);
            std::cout << (rep.pass ? "pass" : "FAIL") << " difference=" << rep.lhs_minus_rhs
                      << " scale=" << rep.scale << "\n";
            return rep.pass ? 0 : 1;
        }
    } catch (const walk_error& e) {
        std::cerr << "walk failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
