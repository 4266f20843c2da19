#ifndef KITECC_FAMILY_HPP
#define KITECC_FAMILY_HPP

#include <optional>
#include <string_view>

namespace kitecc {

enum class ConfigKind { Convex, Concave };

// The four solution-curve families: each fixes a configuration kind and
// which axis mass (mu1 of body A or mu2 of body B) equals the wing mass mu.
enum class FamilyId { ConvexMu1, ConvexMu2, ConcaveMu1, ConcaveMu2 };

constexpr ConfigKind kind_of(FamilyId f) {
    return (f == FamilyId::ConvexMu1 || f == FamilyId::ConvexMu2) ? ConfigKind::Convex
                                                                  : ConfigKind::Concave;
}

constexpr bool is_mu1_family(FamilyId f) {
    return f == FamilyId::ConvexMu1 || f == FamilyId::ConcaveMu1;
}

constexpr std::string_view family_name(FamilyId f) {
    switch (f) {
    case FamilyId::ConvexMu1: return "convex-mu1";
    case FamilyId::ConvexMu2: return "convex-mu2";
    case FamilyId::ConcaveMu1: return "concave-mu1";
    default: return "concave-mu2";
    }
}

constexpr std::string_view kind_name(ConfigKind k) {
    return k == ConfigKind::Convex ? "convex" : "concave";
}

std::optional<FamilyId> family_from_name(std::string_view name);

inline constexpr FamilyId kAllFamilies[] = {FamilyId::ConvexMu1, FamilyId::ConvexMu2,
                                            FamilyId::ConcaveMu1, FamilyId::ConcaveMu2};

} // namespace kitecc

#endif
