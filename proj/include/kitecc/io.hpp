#ifndef KITECC_IO_HPP
#define KITECC_IO_HPP

#include <string>
#include <vector>

#include "kitecc/solver.hpp"

namespace kitecc {

enum class OutputFormat { Csv, Json };

// Curve export.  CSV columns:
//   family,kind,beta_deg,alpha_deg,mu1,mu2,mu,residual_full,oracle_residual,lambda,note
// Angles carry 6 decimals; every other real uses the shortest decimal that
// round-trips.  Singular rows emit NaN mass fields and note=singular-S.
// JSON mirrors the same fields per point at full double precision.
std::string export_curve(const CurveFamily& family, OutputFormat fmt);

std::string export_special_points(const std::vector<SpecialPoint>& points, OutputFormat fmt);

struct BranchRow {
    FamilyId family;
    double alpha; // radians
    BranchPoint point;
};
std::string export_branch(const std::vector<BranchRow>& rows, OutputFormat fmt);

struct VerifySummary {
    FamilyId family;
    std::size_t points = 0;
    std::size_t singular = 0;
    double max_residual = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};
std::string export_verify(const std::vector<VerifySummary>& rows, OutputFormat fmt);

struct MRow {
    double beta;  // radians
    double alpha; // radians
    double m;
};
std::string export_m_scan(const std::vector<MRow>& rows, OutputFormat fmt);

// Formats one double with the shortest representation that parses back to
// the same value.
std::string format_shortest(double v);
std::string format_deg6(double radians);

} // namespace kitecc

#endif
