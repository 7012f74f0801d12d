#pragma once

#include <cmath>

#include <Eigen/Core>

#include "coadjoint/minkowski.hpp"
#include "coadjoint/tolerance.hpp"

namespace coadjoint {

using Mat5 = Eigen::Matrix<double, 5, 5>;

/// Skew matrix with hat(l) * r == l.cross(r).
Mat3 hat(const Vec3& l);

/// Element M = [[hat(l), g], [g^T, 0]] of o(3,1). Stored as (l, g) so that
/// M^T G + G M = 0 holds by construction.
struct LorentzAlgebraElement {
    Vec3 l = Vec3::Zero();  ///< rotation part
    Vec3 g = Vec3::Zero();  ///< boost part

    Mat4 matrix() const;

    /// Validated conversion; throws Error(ConstraintViolation) naming the
    /// first entry of M^T G + G M that exceeds the structural tolerance.
    static LorentzAlgebraElement from_matrix(const Mat4& m, const ToleranceConfig& tol = {});

    /// Orthogonal projection of an arbitrary 4x4 matrix onto o(3,1).
    static LorentzAlgebraElement project(const Mat4& m);

    double norm() const { return std::sqrt(l.squaredNorm() + g.squaredNorm()); }
    bool is_finite() const { return l.allFinite() && g.allFinite(); }

    LorentzAlgebraElement operator+(const LorentzAlgebraElement& o) const { return {l + o.l, g + o.g}; }
    LorentzAlgebraElement operator-(const LorentzAlgebraElement& o) const { return {l - o.l, g - o.g}; }
    LorentzAlgebraElement operator*(double s) const { return {s * l, s * g}; }
};

/// A matrix S with S^T G S = G. Construction validates the constraint and
/// caches det(S) and the time-orientation flag.
class LorentzMatrix {
public:
    explicit LorentzMatrix(const Mat4& s, const ToleranceConfig& tol = {});

    static LorentzMatrix identity();

    const Mat4& matrix() const noexcept { return s_; }

    /// G S^T G, the exact inverse for a Lorentz matrix.
    Mat4 inverse() const;

    double det() const noexcept { return det_; }
    bool orthochronous() const noexcept { return orthochronous_; }

    /// max |S^T G S - G|
    static double constraint_residual(const Mat4& s);

private:
    Mat4 s_;
    double det_;
    bool orthochronous_;
};

/// (S, C): the affine map x -> S x + C, realized as [[S, C], [0, 1]].
struct PoincareElement {
    LorentzMatrix s = LorentzMatrix::identity();
    FourVector c = FourVector::Zero();

    static PoincareElement identity() { return {}; }
    static PoincareElement translation(const FourVector& c) { return {LorentzMatrix::identity(), c}; }

    Mat5 realization() const;
};

/// (S1, C1) . (S2, C2) = (S1 S2, S1 C2 + C1)
PoincareElement group_multiply(const PoincareElement& a, const PoincareElement& b);
PoincareElement group_inverse(const PoincareElement& a);

inline PoincareElement operator*(const PoincareElement& a, const PoincareElement& b) { return group_multiply(a, b); }

/// nu = (M, P), viewed as a covector through the pairing below.
struct CoadjointPoint {
    LorentzAlgebraElement m;
    FourVector p = FourVector::Zero();

    double norm() const { return std::sqrt(m.l.squaredNorm() + m.g.squaredNorm() + p.squaredNorm()); }
    bool is_finite() const { return m.is_finite() && p.allFinite(); }
};

/// Euclidean distance between the (l, g, P) coordinates of two points.
double distance(const CoadjointPoint& a, const CoadjointPoint& b);

/// <(M,P) | (Sigma,Gamma)> = -1/2 tr(M Sigma) - gamma(P, Gamma)
double pair(const CoadjointPoint& nu, const CoadjointPoint& xi);

/// L_{C,V} with L Gamma = gamma(V, Gamma) C - gamma(C, Gamma) V.
LorentzAlgebraElement l_operator(const FourVector& c, const FourVector& v);

/// (S, C) . (M, P) = (S M S^-1 + L_{C, SP}, S P)
CoadjointPoint coadjoint_act(const PoincareElement& g, const CoadjointPoint& nu);

/// W = (p x g + E l, <p, l>)
FourVector polarization(const CoadjointPoint& nu);

struct Casimirs {
    double c1 = 0.0;  ///< gamma(P, P)
    double c2 = 0.0;  ///< gamma(W, W)
};

Casimirs casimirs(const CoadjointPoint& nu);

enum class Involution { Space, Time, SpaceTime };

/// (I_s, 0), (I_t, 0) or (I_s I_t, 0).
PoincareElement involution(Involution kind);

}  // namespace coadjoint
