#ifndef RESTAB_SURFACE_HPP
#define RESTAB_SURFACE_HPP

#include <cstddef>
#include <vector>

#include "restab/rational.hpp"

namespace restab {

/// A Q-divisor class written in the fixed basis of the surface's Picard
/// lattice. Length must equal the owning surface's Picard rank.
class DivisorClass {
  public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
    static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Rational>(rank)); }

    std::size_t size() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    DivisorClass operator-() const;
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Rational& k) const;
    bool operator==(const DivisorClass& o) const { return c_ == o.c_; }
    bool operator!=(const DivisorClass& o) const { return c_ != o.c_; }

  private:
    std::vector<Rational> c_;
};

inline DivisorClass operator*(const Rational& k, const DivisorClass& d) { return d * k; }

enum class SurfaceKind { ProjectivePlane, Hirzebruch, Custom };

/// Numerical model of a smooth polarized surface: Picard lattice with its
/// intersection form, canonical class and chi(O). Values are immutable after
/// construction and safe to share across threads.
class SurfaceModel {
  public:
    static SurfaceModel projective_plane();
    static SurfaceModel hirzebruch(unsigned m);
    static SurfaceModel custom(std::vector<std::vector<Integer>> gram, DivisorClass canonical,
                               Integer chi_o);

    SurfaceKind kind() const { return kind_; }
    unsigned hirzebruch_m() const { return m_; }
    std::size_t picard_rank() const { return rank_; }
    const std::vector<std::vector<Integer>>& intersection_matrix() const { return gram_; }
    const DivisorClass& canonical_class() const { return canonical_; }
    const Integer& chi_structure_sheaf() const { return chi_o_; }

    /// Basis class e_i.
    DivisorClass basis(std::size_t i) const;
    /// Line class H on P2.
    DivisorClass line() const;
    /// Section class M (self-intersection -m) on F_m.
    DivisorClass section() const;
    /// Fiber class F on F_m.
    DivisorClass fiber() const;

  private:
    SurfaceModel() = default;
    SurfaceKind kind_ = SurfaceKind::Custom;
    unsigned m_ = 0;
    std::size_t rank_ = 0;
    std::vector<std::vector<Integer>> gram_;
    DivisorClass canonical_;
    Integer chi_o_ = 0;
};

/// Intersection pairing a . b on the lattice; symmetric, exact.
Rational intersect(const SurfaceModel& surface, const DivisorClass& a, const DivisorClass& b);

/// Ampleness test for the builtin surfaces. P2: positive multiple of H.
/// F_m with c = aM + bF: a > 0 and b > am. Custom surfaces have no ampleness
/// oracle and raise UnsupportedSurface; ampleness there is a user assertion.
bool is_ample(const SurfaceModel& surface, const DivisorClass& c);

/// Arithmetic genus by adjunction: g = 1 + (c^2 + K.c)/2.
Rational genus_of_curve(const SurfaceModel& surface, const DivisorClass& c);

}  // namespace restab

#endif
