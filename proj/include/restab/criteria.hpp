#ifndef RESTAB_CRITERIA_HPP
#define RESTAB_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "restab/chern.hpp"
#include "restab/walls.hpp"

namespace restab {

enum class Criterion { Flenner, Bogomolov, Langer, GeneralSurface, PlaneGeneral, HirzebruchLemma };

const char* criterion_name(Criterion c);
const char* criterion_title(Criterion c);

enum class Conclusion { Stable, Semistable };

/// One evaluated restriction criterion. satisfied is exactly lhs > rhs.
/// Hypotheses the machine cannot check (integrality, smoothness, stability
/// or generality of E) are carried as explicit strings.
struct CriterionReport {
    Criterion name;
    Rational lhs;
    Rational rhs;
    bool satisfied = false;
    Conclusion conclusion = Conclusion::Semistable;
    std::vector<std::string> hypotheses;

    /// Companion inequalities (corollary forms, cross-checks).
    struct Extra {
        std::string label;
        Rational lhs;
        Rational rhs;
        bool satisfied;
    };
    std::vector<Extra> extras;
};

/// Flenner: d - 1/d > H^2 max{(r^2-1)/4, 1} - 2; conclusion semistable.
CriterionReport flenner(const ChernCharacter& v, const DivisorClass& H, long d,
                        const SurfaceModel& surface);

/// Bogomolov: 2d > C(r,fl(r/2)) C(r-2,fl(r/2)-1) r Delta + 1; stable.
CriterionReport bogomolov_restriction(const ChernCharacter& v, const DivisorClass& H, long d,
                                      const SurfaceModel& surface);

/// Langer: d/2 > r(r-1) Delta + 1/(2 r(r-1) H^2); (semi)stable.
CriterionReport langer(const ChernCharacter& v, const DivisorClass& H, long d,
                       const SurfaceModel& surface);

/// The general-surface wall criterion:
///   C^2/(2 H.C) - ch1^D.C/(r H.C) + mu_{H,D} >
///     r(r-1) H^2 Delta_{H,D} + 1/(2 r(r-1) H^2).
/// For C = dH the report also carries the corollary inequality
/// d/2 > r(r-1) Delta + 1/(2 r(r-1) H^2) evaluated at the minimizing twist.
CriterionReport general_surface(const ChernCharacter& v, const DivisorClass& C,
                                const TwistContext& ctx, const SurfaceModel& surface);

/// The plane criterion d^2 > 8 Delta + 4 for general E. The Drezet-Le Potier
/// gate Delta >= delta(mu) must hold (else NotPicardRankTwo); the strict
/// Picard-rank-two status is surfaced as a hypothesis string.
CriterionReport plane_general(const ChernCharacter& v, long d, const SurfaceModel& surface,
                              unsigned depth = kDefaultDepthCriteria);

inline constexpr unsigned kDefaultDepthCriteria = 12;

/// Verbatim Hirzebruch-surface inequality d > 2 r(r-1)(ab - a^2 m) Delta_H
/// with H = aM + bF; paired with the general-surface evaluation of the same
/// data as an authoritative cross-check.
CriterionReport hirzebruch_lemma(const ChernCharacter& v, unsigned m, long a, long b, long d,
                                 const SurfaceModel& surface);

/// Smallest d in [1, d_max] satisfying the criterion; nullopt if none.
std::optional<long> minimal_degree(Criterion which, const ChernCharacter& v,
                                   const TwistContext& ctx, const SurfaceModel& surface,
                                   long d_max, unsigned depth = kDefaultDepthCriteria);

/// Criteria applicable to curves of class dH on this surface.
std::vector<Criterion> applicable_criteria(const SurfaceModel& surface);

/// Evaluate one criterion at degree d (C = dH).
CriterionReport evaluate_criterion(Criterion which, const ChernCharacter& v,
                                   const TwistContext& ctx, const SurfaceModel& surface, long d,
                                   unsigned depth = kDefaultDepthCriteria);

struct CompareRow {
    Criterion criterion;
    long d;
    CriterionReport report;
};

struct CompareTable {
    std::vector<CompareRow> rows;  // ordered by (criterion, d)
    std::vector<std::pair<Criterion, std::optional<long>>> minimal;
};

/// Side-by-side sweep of every applicable criterion over d = 1..d_max.
/// Rows may be evaluated in parallel; output order is deterministic.
CompareTable compare(const ChernCharacter& v, const TwistContext& ctx,
                     const SurfaceModel& surface, long d_max,
                     unsigned depth = kDefaultDepthCriteria, bool parallel = true);

}  // namespace restab

#endif
