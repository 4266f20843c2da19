#include <algorithm>
#include <cstdio>
#include <limits>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kitecc/analysis.hpp"
#include "kitecc/errors.hpp"
#include "kitecc/io.hpp"
#include "kitecc/oracle.hpp"
#include "kitecc/solver.hpp"

namespace {

using namespace kitecc;

struct CommonOpts {
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out,-o", opts.out, "Write output to this file instead of stdout");
}

OutputFormat parse_format(const CommonOpts& opts) {
    return opts.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

FamilyId parse_family(const std::string& name) {
    if (const auto f = family_from_name(name)) return *f;
    throw InvalidArguments("unknown family '" + name +
                           "' (expected convex-mu1, convex-mu2, concave-mu1, concave-mu2)");
}

void check_step(double step_deg) {
    if (!(step_deg > 0.0 && step_deg <= 1.0))
        throw InvalidArguments("step must lie in (0, 1] degrees");
}

void emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw IoFailure("cannot open '" + opts.out + "' for writing");
    f << payload;
    if (!f) throw IoFailure("short write to '" + opts.out + "'");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Axisymmetric four-body central configurations with three equal masses"};
    app.require_subcommand(1);

    // trace
    auto* trace = app.add_subcommand("trace", "Trace one solution family over its beta domain");
    std::string trace_family_name;
    double trace_step = 0.05;
    CommonOpts trace_opts;
    trace->add_option("--family", trace_family_name, "Solution family")->required();
    trace->add_option("--step", trace_step, "Beta grid step in degrees (default 0.05)");
    add_common(trace, trace_opts);

    // point
    auto* point = app.add_subcommand("point", "Solve one curve point at a given beta");
    std::string point_family_name;
    double point_beta = 0.0;
    bool point_verify = false;
    CommonOpts point_opts;
    point->add_option("--family", point_family_name, "Solution family")->required();
    point->add_option("--beta", point_beta, "Beta in degrees")->required();
    point->add_flag("--verify", point_verify, "Attach the centrality-oracle residual");
    add_common(point, point_opts);

    // special-points
    auto* special = app.add_subcommand("special-points", "Catalog of labeled points");
    CommonOpts special_opts;
    add_common(special, special_opts);

    // branch
    auto* branch = app.add_subcommand("branch", "All beta solutions at a fixed alpha");
    std::string branch_family_name;
    double branch_alpha = 0.0;
    CommonOpts branch_opts;
    branch->add_option("--family", branch_family_name, "Solution family")->required();
    branch->add_option("--alpha", branch_alpha, "Alpha in degrees")->required();
    add_common(branch, branch_opts);

    // verify
    auto* verify = app.add_subcommand("verify", "Trace families and run the centrality oracle");
    std::string verify_family_name;
    double verify_step = 0.05;
    double verify_tol = 1e-9;
    CommonOpts verify_opts;
    verify->add_option("--family", verify_family_name, "Restrict to one family");
    verify->add_option("--step", verify_step, "Beta grid step in degrees");
    verify->add_option("--tol", verify_tol, "Maximum acceptable oracle residual");
    add_common(verify, verify_opts);

    // m-function
    auto* mfun = app.add_subcommand("m-function", "Mass ratio mu2/mu1 along concave-mu2");
    double mfun_beta = 0.0;
    bool mfun_has_beta = false;
    bool mfun_min = false;
    double mfun_step = 0.05;
    CommonOpts mfun_opts;
    mfun->add_option("--beta", mfun_beta, "Evaluate at one beta (degrees)")
        ->each([&](const std::string&) { mfun_has_beta = true; });
    mfun->add_flag("--min", mfun_min, "Report only the interior minimum");
    mfun->add_option("--step", mfun_step, "Scan step in degrees");
    add_common(mfun, mfun_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::ostringstream msg;
        msg << e.what();
        nlohmann::ordered_json err;
        err["error"]["module"] = "cli_io";
        err["error"]["kind"] = "InvalidArguments";
        err["error"]["message"] = msg.str();
        std::cerr << err.dump(2) << "\n";
        return e.get_exit_code();
    }

    if (trace->parsed()) {
        check_step(trace_step);
        CurveFamily fam = trace_family(parse_family(trace_family_name), trace_step);
        attach_oracle(fam);
        emit(trace_opts, export_curve(fam, parse_format(trace_opts)));
        return 0;
    }

    if (point->parsed()) {
        const FamilyId f = parse_family(point_family_name);
        const double beta = deg2rad(point_beta);
        CurvePoint pt;
        pt.beta = beta;
        pt.alpha = solve_alpha(f, beta);
        pt.residual = residual_full(pt.angles(), f);
        pt.mass = masses(pt.angles(), kind_of(f));
        if (pt.mass.status == MassStatus::SingularDenominator)
            pt.mass.value = singular_limit_masses(f); // limit along the curve
        if (point_verify) {
            const auto rep = verify_central(make_configuration(pt.angles(), kind_of(f),
                                                               pt.mass.value));
            pt.oracle_residual = rep.max_relative_residual;
            pt.lambda = rep.lambda;
        }
        CurveFamily one;
        one.id = f;
        one.points.push_back(pt);
        emit(point_opts, export_curve(one, parse_format(point_opts)));
        return 0;
    }

    if (special->parsed()) {
        emit(special_opts, export_special_points(special_points(), parse_format(special_opts)));
        return 0;
    }

    if (branch->parsed()) {
        const FamilyId f = parse_family(branch_family_name);
        const double alpha = deg2rad(branch_alpha);
        std::vector<BranchRow> rows;
        for (const BranchPoint& bp : branch_values(f, alpha)) rows.push_back({f, alpha, bp});
        emit(branch_opts, export_branch(rows, parse_format(branch_opts)));
        return 0;
    }

    if (verify->parsed()) {
        check_step(verify_step);
        std::vector<FamilyId> families;
        if (verify_family_name.empty())
            families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
        else
            families.push_back(parse_family(verify_family_name));

        std::vector<VerifySummary> rows;
        bool ok = true;
        for (FamilyId f : families) {
            CurveFamily fam = trace_family(f, verify_step);
            attach_oracle(fam);
            VerifySummary s;
            s.family = f;
            s.points = fam.points.size();
            s.lambda_min = std::numeric_limits<double>::infinity();
            s.lambda_max = -std::numeric_limits<double>::infinity();
            for (const CurvePoint& pt : fam.points) {
                if (pt.singular()) {
                    ++s.singular;
                    continue;
                }
                s.max_residual = std::max(s.max_residual, pt.oracle_residual);
                s.lambda_min = std::min(s.lambda_min, pt.lambda);
                s.lambda_max = std::max(s.lambda_max, pt.lambda);
            }
            ok = ok && s.max_residual < verify_tol && s.lambda_min > 0.0;
            rows.push_back(s);
        }
        emit(verify_opts, export_verify(rows, parse_format(verify_opts)));
        return ok ? 0 : 1;
    }

    if (mfun->parsed()) {
        check_step(mfun_step);
        std::vector<MRow> rows;
        if (mfun_min) {
            const AnglePair at = find_M_minimum();
            rows.push_back({at.beta, at.alpha, mass_ratio_M(at.beta)});
        } else if (mfun_has_beta) {
            const double beta = deg2rad(mfun_beta);
            rows.push_back({beta, solve_alpha(FamilyId::ConcaveMu2, beta), mass_ratio_M(beta)});
        } else {
            const double lo = 30.0;
            const double hi = 33.093;
            const auto klo = static_cast<long>(std::ceil(lo / mfun_step - 1e-9));
            const auto khi = static_cast<long>(std::floor(hi / mfun_step + 1e-9));
            for (long k = klo; k <= khi; ++k) {
                const double beta = deg2rad(static_cast<double>(k) * mfun_step);
                rows.push_back({beta, solve_alpha(FamilyId::ConcaveMu2, beta),
                                mass_ratio_M(beta)});
            }
            const double bhi = deg2rad(hi);
            if (rows.empty() || std::abs(rows.back().beta - bhi) > 1e-11)
                rows.push_back({bhi, solve_alpha(FamilyId::ConcaveMu2, bhi), mass_ratio_M(bhi)});
        }
        emit(mfun_opts, export_m_scan(rows, parse_format(mfun_opts)));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const kitecc::Error& e) {
        nlohmann::ordered_json err;
        err["error"]["module"] = e.module();
        err["error"]["kind"] = e.kind();
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err;
        err["error"]["module"] = "cli_io";
        err["error"]["kind"] = "Internal";
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
