#include "kitecc/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace kitecc {
namespace {

using ordered_json = nlohmann::ordered_json;

// nlohmann serializes NaN as null; mirror that convention explicitly so the
// JSON shape is stable.
ordered_json json_real(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

std::optional<FamilyId> kl_family(SpecialPoint::Label label) {
    using L = SpecialPoint::Label;
    switch (label) {
    case L::P1: return FamilyId::ConvexMu1;
    case L::P2: return FamilyId::ConvexMu2;
    case L::P3:
    case L::P4: return FamilyId::ConcaveMu2;
    case L::P5:
    case L::P7: return FamilyId::ConcaveMu1;
    default: return std::nullopt;
    }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string format_shortest(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_deg6(double radians) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6f", rad2deg(radians));
    return std::string(buf.data());
}

std::string export_curve(const CurveFamily& family, OutputFormat fmt) {
    const std::string fam(family_name(family.id));
    const std::string kind(kind_name(kind_of(family.id)));

    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "family,kind,beta_deg,alpha_deg,mu1,mu2,mu,residual_full,oracle_residual,lambda,"
              "note\n";
        for (const CurvePoint& pt : family.points) {
            os << fam << ',' << kind << ',' << format_deg6(pt.beta) << ','
               << format_deg6(pt.alpha) << ',' << format_shortest(pt.mass.value.mu1) << ','
               << format_shortest(pt.mass.value.mu2) << ',' << format_shortest(pt.mass.value.mu)
               << ',' << format_shortest(pt.residual) << ',' << format_shortest(pt.oracle_residual)
               << ',' << format_shortest(pt.lambda) << ','
               << (pt.singular() ? "singular-S" : "") << '\n';
        }
        return os.str();
    }

    ordered_json arr = ordered_json::array();
    for (const CurvePoint& pt : family.points) {
        ordered_json row;
        row["family"] = fam;
        row["kind"] = kind;
        row["beta_deg"] = rad2deg(pt.beta);
        row["alpha_deg"] = rad2deg(pt.alpha);
        row["mu1"] = json_real(pt.mass.value.mu1);
        row["mu2"] = json_real(pt.mass.value.mu2);
        row["mu"] = json_real(pt.mass.value.mu);
        row["residual_full"] = pt.residual;
        row["oracle_residual"] = json_real(pt.oracle_residual);
        row["lambda"] = json_real(pt.lambda);
        row["note"] = pt.singular() ? "singular-S" : "";
        arr.push_back(std::move(row));
    }
    return dump(arr);
}

std::string export_special_points(const std::vector<SpecialPoint>& points, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "label,beta_deg,alpha_deg,mu1,mu2,mu,k,l,note\n";
        for (const SpecialPoint& sp : points) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            const MassTriple m = sp.masses.value_or(MassTriple{nan, nan, nan});
            std::string k = "";
            std::string l = "";
            if (const auto f = kl_family(sp.label)) {
                const KLPoint q = to_kl(sp.angles, *f);
                k = format_shortest(q.k);
                l = format_shortest(q.l);
            }
            os << sp.name() << ',' << format_deg6(sp.angles.beta) << ','
               << format_deg6(sp.angles.alpha) << ',' << format_shortest(m.mu1) << ','
               << format_shortest(m.mu2) << ',' << format_shortest(m.mu) << ',' << k << ',' << l
               << ',' << sp.mass_note << '\n';
        }
        return os.str();
    }

    ordered_json arr = ordered_json::array();
    for (const SpecialPoint& sp : points) {
        ordered_json row;
        row["label"] = std::string(sp.name());
        row["beta_deg"] = rad2deg(sp.angles.beta);
        row["alpha_deg"] = rad2deg(sp.angles.alpha);
        if (sp.masses) {
            row["mu1"] = sp.masses->mu1;
            row["mu2"] = sp.masses->mu2;
            row["mu"] = sp.masses->mu;
        } else {
            row["mu1"] = nullptr;
            row["mu2"] = nullptr;
            row["mu"] = nullptr;
        }
        if (const auto f = kl_family(sp.label)) {
            const KLPoint q = to_kl(sp.angles, *f);
            row["k"] = q.k;
            row["l"] = q.l;
        }
        if (!sp.mass_note.empty()) row["note"] = sp.mass_note;
        arr.push_back(std::move(row));
    }
    return dump(arr);
}

std::string export_branch(const std::vector<BranchRow>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "family,alpha_deg,beta_deg,mu1,mu2,mu\n";
        for (const BranchRow& r : rows) {
            os << family_name(r.family) << ',' << format_deg6(r.alpha) << ','
               << format_deg6(r.point.beta) << ',' << format_shortest(r.point.masses.mu1) << ','
               << format_shortest(r.point.masses.mu2) << ','
               << format_shortest(r.point.masses.mu) << '\n';
        }
        return os.str();
    }
    ordered_json arr = ordered_json::array();
    for (const BranchRow& r : rows) {
        ordered_json row;
        row["family"] = std::string(family_name(r.family));
        row["alpha_deg"] = rad2deg(r.alpha);
        row["beta_deg"] = rad2deg(r.point.beta);
        row["mu1"] = r.point.masses.mu1;
        row["mu2"] = r.point.masses.mu2;
        row["mu"] = r.point.masses.mu;
        arr.push_back(std::move(row));
    }
    return dump(arr);
}

std::string export_verify(const std::vector<VerifySummary>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "family,points,singular,max_oracle_residual,lambda_min,lambda_max\n";
        for (const VerifySummary& r : rows) {
            os << family_name(r.family) << ',' << r.points << ',' << r.singular << ','
               << format_shortest(r.max_residual) << ',' << format_shortest(r.lambda_min) << ','
               << format_shortest(r.lambda_max) << '\n';
        }
        return os.str();
    }
    ordered_json arr = ordered_json::array();
    for (const VerifySummary& r : rows) {
        ordered_json row;
        row["family"] = std::string(family_name(r.family));
        row["points"] = r.points;
        row["singular"] = r.singular;
        row["max_oracle_residual"] = r.max_residual;
        row["lambda_min"] = r.lambda_min;
        row["lambda_max"] = r.lambda_max;
        arr.push_back(std::move(row));
    }
    return dump(arr);
}

std::string export_m_scan(const std::vector<MRow>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "beta_deg,alpha_deg,M\n";
        for (const MRow& r : rows)
            os << format_deg6(r.beta) << ',' << format_deg6(r.alpha) << ','
               << format_shortest(r.m) << '\n';
        return os.str();
    }
    ordered_json arr = ordered_json::array();
    for (const MRow& r : rows) {
        ordered_json row;
        row["beta_deg"] = rad2deg(r.beta);
        row["alpha_deg"] = rad2deg(r.alpha);
        row["M"] = r.m;
        arr.push_back(std::move(row));
    }
    return dump(arr);
}

} // namespace kitecc
