#ifndef RESTAB_P2X_HPP
#define RESTAB_P2X_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "restab/chern.hpp"
#include "restab/quadratic.hpp"

namespace restab {

inline constexpr unsigned kDefaultDepth = 12;

/// Exceptional slope on P2 with its dyadic address: alpha = eps(p/2^q),
/// rank = denominator of alpha, Delta = (1 - 1/rank^2)/2.
struct ExceptionalSlope {
    Rational alpha;
    Integer rank;
    Rational discriminant;
    Integer dyadic_p;
    unsigned dyadic_q = 0;
};

/// Memo of generated exceptional slopes up to a fixed dyadic depth for the
/// unit interval. Immutable once built; lookups are read-only and safe to
/// share across threads.
class ExceptionalTable {
  public:
    explicit ExceptionalTable(unsigned depth);

    unsigned depth() const { return depth_; }

    /// eps(p/2^q) for 0 <= p <= 2^q, q <= depth.
    const ExceptionalSlope& unit(unsigned long p, unsigned q) const;

    /// New slopes introduced at level q (odd numerators), sorted by alpha.
    const std::vector<ExceptionalSlope>& level(unsigned q) const { return levels_[q]; }

  private:
    unsigned depth_;
    std::vector<std::vector<ExceptionalSlope>> by_p_;   // [q][p]
    std::vector<std::vector<ExceptionalSlope>> levels_;  // [q] = new entries, sorted
};

/// Process-wide cache of tables; thread-safe.
std::shared_ptr<const ExceptionalTable> exceptional_table(unsigned depth);

/// eps(p/2^q) via the generation rule
///   eps(n) = n,  eps((2p+1)/2^{q+1}) = eps(p/2^q) * eps((p+1)/2^q),
///   a * b = (a+b)/2 + (Delta_b - Delta_a)/(3 + a - b).
/// Requires p odd when q > 0.
ExceptionalSlope exceptional_from_dyadic(const Integer& p, unsigned q);

/// All eps(p/2^q), q <= depth, alpha strictly inside (lo, hi), sorted by
/// alpha; integer translates included.
std::vector<ExceptionalSlope> enumerate_exceptional(unsigned depth, const Rational& lo,
                                                    const Rational& hi);

/// x_alpha = (3 - sqrt(5 + 8 Delta_alpha))/2; the half-width of I_alpha.
QuadraticNumber x_alpha(const ExceptionalSlope& e);

/// Endpoints of I_alpha = (alpha - x_alpha, alpha + x_alpha).
std::pair<QuadraticNumber, QuadraticNumber> interval_alpha(const ExceptionalSlope& e);

/// Larger slope mu_0 with (mu_0, 1/2) on the associated quadratic Q_v:
/// mu_0 = (-3 + sqrt(5 + 8 Delta(v)))/2 - mu(v). Requires 5 + 8 Delta >= 0.
QuadraticNumber mu0(const ChernCharacter& v, const SurfaceModel& surface);

/// The unique generated alpha with x strictly inside I_alpha, searched level
/// by level with exact comparisons; DepthExceeded if none up to `depth`.
ExceptionalSlope find_interval(const QuadraticNumber& x, unsigned depth);

/// Drezet-Le Potier curve delta(mu) = P(-|mu - alpha|) - Delta_alpha for
/// mu in I_alpha.
Rational dlp_delta(const Rational& mu, unsigned depth);

/// Strict Picard-rank-two test Delta(v) > delta(mu(v)).
bool has_picard_rank_two(const ChernCharacter& v, unsigned depth);

/// Expected dimension r^2 (2 Delta - 1) + 1; requires Delta >= delta(mu).
Integer moduli_dimension_p2(const ChernCharacter& v, unsigned depth = kDefaultDepth);

/// Exceptional slope whose interval captures mu0(v).
ExceptionalSlope corresponding_exceptional(const ChernCharacter& v, const SurfaceModel& surface,
                                           unsigned depth);

/// Chern character of the exceptional bundle of slope alpha:
/// (r, r alpha H, r (alpha^2/2 - Delta_alpha)).
ChernCharacter exceptional_character(const ExceptionalSlope& e, const SurfaceModel& surface);

/// Corresponding orthogonal invariants (mu^+, Delta^+), split on the sign of
/// chi(v, w) against the corresponding exceptional character w.
struct OrthogonalInvariants {
    Rational mu_plus;
    Rational delta_plus;
    int chi_sign = 0;  // sign of chi(v, w)
    ExceptionalSlope exceptional;
};
OrthogonalInvariants orthogonal_invariants(const ChernCharacter& v, const SurfaceModel& surface,
                                           unsigned depth);

/// Center of the effective wall: s_0 = -mu^+(v) - 3/2.
Rational effective_wall_center(const ChernCharacter& v, const SurfaceModel& surface,
                               unsigned depth);

/// The bound mu^+ < sqrt(2 Delta + 1) - 3/2 - mu, as an exact quadratic
/// number. Informative only: the comparison is reported, never enforced.
QuadraticNumber mu_plus_bound(const ChernCharacter& v, const SurfaceModel& surface);

}  // namespace restab

#endif
