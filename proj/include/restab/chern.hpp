#ifndef RESTAB_CHERN_HPP
#define RESTAB_CHERN_HPP

#include "restab/rational.hpp"
#include "restab/surface.hpp"

namespace restab {

/// Numerical K-class (ch0, ch1, ch2) on a fixed Picard lattice. ch0 may be
/// negative for shifted objects; ch1 lives in the lattice basis.
struct ChernCharacter {
    Integer ch0;
    DivisorClass ch1;
    Rational ch2;

    bool operator==(const ChernCharacter& o) const = default;
};

/// Polarization H (ample, user-asserted) plus an arbitrary rational twist
/// divisor D.
struct TwistContext {
    DivisorClass H;
    DivisorClass D;
};

/// ch^D = exp(-D) ch: (ch0, ch1 - D ch0, ch2 - D.ch1 + (D^2/2) ch0).
ChernCharacter twist(const ChernCharacter& v, const DivisorClass& D, const SurfaceModel& surface);

/// ch(E (x) O(L)) = ch(E) exp(L); inverse of twisting by L.
ChernCharacter tensor_line(const ChernCharacter& v, const DivisorClass& L,
                           const SurfaceModel& surface);

/// Homological shift [1]: negates every component.
ChernCharacter shift(const ChernCharacter& v);

/// mu_{H,D} = H.ch1^D / (H^2 ch0). Requires ch0 != 0.
Rational slope(const ChernCharacter& v, const TwistContext& ctx, const SurfaceModel& surface);

/// Delta_{H,D} = mu_{H,D}^2/2 - ch2^D / (H^2 ch0). Requires ch0 != 0.
Rational discriminant(const ChernCharacter& v, const TwistContext& ctx,
                      const SurfaceModel& surface);

/// Delta = c1^2/(2 r^2) - ch2/r with c1^2 taken in the lattice pairing.
Rational classical_discriminant(const ChernCharacter& v, const SurfaceModel& surface);

/// The twist divisor D with H^2 Delta_{H,D}(v) = Delta(v): write
/// ch1 = eH + eps with H.eps = 0; D = eps/ch0.
DivisorClass minimizing_twist(const ChernCharacter& v, const DivisorClass& H,
                              const SurfaceModel& surface);

/// ch(i_* F) for a rank-r sheaf F of degree e on an integral curve C:
/// (0, rC, e - r C^2 / 2).
ChernCharacter pushforward(const DivisorClass& C, const Integer& r, const Integer& e,
                           const SurfaceModel& surface);

/// Riemann-Roch on the surface: chi(v) = ch2 - K.ch1/2 + ch0 chi(O).
Rational euler_char(const ChernCharacter& v, const SurfaceModel& surface);

/// chi on P2: ch0 + (3/2) deg ch1 + ch2. Requires a ProjectivePlane surface.
Rational euler_char_p2(const ChernCharacter& v, const SurfaceModel& surface);

/// Euler pairing on P2: chi(v,w) = r_v r_w (P(mu_w - mu_v) - Delta_v - Delta_w)
/// with P(x) = (x^2+3x+2)/2. Requires both ranks nonzero.
Rational euler_pairing_p2(const ChernCharacter& v, const ChernCharacter& w,
                          const SurfaceModel& surface);

/// Bogomolov inequality gate: Delta_{H,D}(v) >= 0. Requires ch0 > 0.
bool bogomolov_ok(const ChernCharacter& v, const TwistContext& ctx, const SurfaceModel& surface);

/// Integrality expected of a sheaf class on P2: integer rank, integral c1
/// and integer chi. Shifted or formal classes may legitimately fail this.
bool is_sheaf_like_p2(const ChernCharacter& v, const SurfaceModel& surface);

/// Hilbert polynomial of O_{P2}: P(x) = (x^2 + 3x + 2)/2.
Rational hilbert_p2(const Rational& x);

}  // namespace restab

#endif
