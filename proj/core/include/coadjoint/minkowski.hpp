#pragma once

#include <array>
#include <optional>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "coadjoint/tolerance.hpp"

namespace coadjoint {

/// A vector of Minkowski space. Components are ordered (x, y, z, t); the
/// spatial part is the momentum p and the last entry the energy E.
using FourVector = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Gram matrix G = diag(-1, -1, -1, 1).
const Mat4& minkowski_metric();

/// Gram matrix of a null frame {P^, Q, Q', P}: [[0,0,0,1],[0,-1,0,0],[0,0,-1,0],[1,0,0,0]].
const Mat4& null_frame_metric();

/// Lorentz inner product, signature (- - - +).
double gamma(const FourVector& u, const FourVector& v) noexcept;

/// Standard basis vector e_{index+1}; index 3 is the time direction e4.
FourVector basis_vector(int index);

inline Vec3 spatial(const FourVector& v) { return v.head<3>(); }
inline FourVector four_vector(const Vec3& r, double t) {
    FourVector v;
    v << r, t;
    return v;
}

bool all_finite(const FourVector& v) noexcept;

enum class CausalTag { Zero, Timelike, Spacelike, Lightlike };

struct CausalType {
    CausalTag tag = CausalTag::Zero;
    /// Present for Timelike and Spacelike: gamma(P,P) = epsilon * mu^2, mu > 0.
    std::optional<double> mu;

    int epsilon() const noexcept { return tag == CausalTag::Spacelike ? -1 : 1; }
};

CausalType causal_type(const FourVector& p, const ToleranceConfig& tol = {});

/// gamma-orthonormal basis of span{P}^gamma (each w_i has square -1) plus the
/// unit timelike vector P / mu.
struct TimelikeFrame {
    std::array<FourVector, 3> w;
    FourVector p_hat;
    double mu = 0.0;

    /// Columns (w1, w2, w3, p_hat).
    Mat4 matrix() const;
};

/// Null frame f1 = P^, f2 = Q, f3 = Q', f4 = P with Gram matrix null_frame_metric().
struct LightlikeFrame {
    FourVector f1, f2, f3, f4;

    Mat4 matrix() const;
};

/// Throws Error(NotTimelike) unless causal_type(p) is Timelike.
TimelikeFrame timelike_frame(const FourVector& p, const ToleranceConfig& tol = {});

/// Throws Error(NotLightlike) unless causal_type(p) is Lightlike (and p != 0).
LightlikeFrame lightlike_frame(const FourVector& p, const ToleranceConfig& tol = {});

/// Max-entry deviation of the frame's Gram matrix from its target.
double gram_residual(const TimelikeFrame& frame);
double gram_residual(const LightlikeFrame& frame);

}  // namespace coadjoint
