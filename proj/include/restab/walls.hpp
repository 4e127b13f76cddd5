#ifndef RESTAB_WALLS_HPP
#define RESTAB_WALLS_HPP

#include <utility>

#include "restab/chern.hpp"
#include "restab/quadratic.hpp"

namespace restab {

enum class WallKind { Semicircle, Empty, Vertical };

/// Wall in the (s,t) half-plane. Radius is stored squared so every geometric
/// comparison reduces to a rational sign test. Empty records radius_sq <= 0,
/// Vertical records equal-slope degenerate input (the line s = center_s).
struct Wall {
    Rational center_s;
    Rational radius_sq;
    WallKind kind = WallKind::Empty;
};

struct StabilityPoint {
    Rational s;
    Rational t;  // must be > 0
};

/// Z_{s,t}(E) = -ch2^{D+sH} + (t^2 H^2 / 2) ch0^{D+sH} + i H.ch1^{D+sH},
/// returned as (real, imaginary).
std::pair<Rational, Rational> central_charge(const ChernCharacter& v, const TwistContext& ctx,
                                             const SurfaceModel& surface, const StabilityPoint& p);

/// mu_{s,t}(E) = ((mu_{H,D}-s)^2 - t^2 - 2 Delta_{H,D}) / (mu_{H,D} - s).
/// Requires ch0 != 0 and mu_{H,D} != s.
Rational bridgeland_slope(const ChernCharacter& v, const TwistContext& ctx,
                          const SurfaceModel& surface, const StabilityPoint& p);

/// Same slope evaluated from t^2 directly; lets callers sit exactly on a
/// wall, whose points generally have irrational t but rational t^2.
Rational bridgeland_slope_t2(const ChernCharacter& v, const TwistContext& ctx,
                             const SurfaceModel& surface, const Rational& s,
                             const Rational& t_sq);

/// Rank-zero pushforward slope (ch2 - (D+sH).ch1) / (H.ch1); independent
/// of t. Requires ch0 = 0 and H.ch1 != 0.
Rational bridgeland_slope_rank0(const ChernCharacter& v, const TwistContext& ctx,
                                const SurfaceModel& surface, const Rational& s);

/// Wall W(v,w) between two classes of nonzero rank:
///   center = (mu_v + mu_w)/2 - (Delta_v - Delta_w)/(mu_v - mu_w)
///   rho^2  = (mu_v - center)^2 - 2 Delta_v.
/// Equal slopes give the Vertical variant; rho^2 <= 0 gives Empty.
Wall wall(const ChernCharacter& v, const ChernCharacter& w, const TwistContext& ctx,
          const SurfaceModel& surface);

/// The wall W(E, E(-C)[1]), computed through the generic two-class wall on
/// ch(E) and -ch(E(-C)). Requires ch0 > 0 and H.C > 0.
Wall restriction_wall(const ChernCharacter& v, const DivisorClass& C, const TwistContext& ctx,
                      const SurfaceModel& surface);

/// The restriction wall together with the paper's two closed-form centers.
/// The general-curve form C.ch1^D/(ch0 H.C) - C^2/(2 H.C) always matches the
/// generic computation; the form mu - C.H/(2H^2) matches only for C
/// proportional to H, and the literal radius expression C.H/(2H^2) - 2 Delta
/// is reported for comparison without being trusted.
struct RestrictionWallReport {
    Wall wall;
    Rational center_general_curve;   // always equals wall.center_s
    Rational center_proportional;    // mu_{H,D} - C.H/(2 H^2)
    bool centers_agree;              // center_proportional == wall.center_s
    Rational radius_sq_literal;      // C.H/(2 H^2) - 2 Delta_{H,D}
    bool radius_literal_agrees;      // radius_sq_literal == wall.radius_sq
};
RestrictionWallReport restriction_wall_report(const ChernCharacter& v, const DivisorClass& C,
                                              const TwistContext& ctx,
                                              const SurfaceModel& surface);

/// Half-open interval [mu - C.H/H^2, mu) of s-values where both E and
/// E(-C)[1] lie in the category A_s (numerical membership only).
std::pair<Rational, Rational> category_window(const ChernCharacter& v, const DivisorClass& C,
                                              const TwistContext& ctx,
                                              const SurfaceModel& surface);

/// Bounding wall for subsheaf walls of a rank >= 2 class: center
/// mu - 1/(2r(r-1)H^2) - r(r-1) H^2 Delta_{H,D}, radius^2 from the center.
Wall gieseker_bound_wall(const ChernCharacter& v, const TwistContext& ctx,
                         const SurfaceModel& surface);

/// Nesting order used by the restriction proofs: w1 is outside w2 iff
/// center(w1) <= center(w2) and the left foot of w1 lies strictly left of
/// the left foot of w2. Feet compare exactly through radius_sq.
bool is_outside(const Wall& w1, const Wall& w2);

/// Left foot center - sqrt(radius_sq) as an exact quadratic number.
QuadraticNumber left_foot(const Wall& w);

}  // namespace restab

#endif
