#include "coadjoint/poincare.hpp"

#include <Eigen/LU>
#include <fmt/format.h>

#include "coadjoint/error.hpp"

namespace coadjoint {

Mat3 hat(const Vec3& l) {
    Mat3 m;
    m << 0.0, -l.z(), l.y(),
         l.z(), 0.0, -l.x(),
         -l.y(), l.x(), 0.0;
    return m;
}

Mat4 LorentzAlgebraElement::matrix() const {
    Mat4 m = Mat4::Zero();
    m.topLeftCorner<3, 3>() = hat(l);
    m.topRightCorner<3, 1>() = g;
    m.bottomLeftCorner<1, 3>() = g.transpose();
    return m;
}

LorentzAlgebraElement LorentzAlgebraElement::project(const Mat4& m) {
    LorentzAlgebraElement e;
    e.l = Vec3(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)) / 2.0;
    for (int i = 0; i < 3; ++i) e.g(i) = (m(i, 3) + m(3, i)) / 2.0;
    return e;
}

LorentzAlgebraElement LorentzAlgebraElement::from_matrix(const Mat4& m, const ToleranceConfig& tol) {
    if (!m.allFinite()) throw Error(ErrorCode::ConstraintViolation, "matrix has non-finite entries");

    const Mat4& g = minkowski_metric();
    const Mat4 residual = m.transpose() * g + g * m;
    const double bound = tol.structural * scale(m.cwiseAbs().maxCoeff());
    Eigen::Index row = 0, col = 0;
    const double worst = residual.cwiseAbs().maxCoeff(&row, &col);
    if (worst > bound) {
        throw Error(ErrorCode::ConstraintViolation,
                    fmt::format("M^T G + G M has entry ({},{}) = {} exceeding {}; violated by M[{}][{}] and M[{}][{}]",
                                row, col, residual(row, col), bound, row, col, col, row));
    }
    return project(m);
}

LorentzMatrix::LorentzMatrix(const Mat4& s, const ToleranceConfig& tol) : s_(s) {
    if (!s.allFinite()) throw Error(ErrorCode::ConstraintViolation, "Lorentz matrix has non-finite entries");
    const double size = scale(s.cwiseAbs().maxCoeff());
    const double residual = constraint_residual(s);
    if (residual > tol.structural * size * size)
        throw Error(ErrorCode::ConstraintViolation,
                    fmt::format("S^T G S deviates from G by {} (limit {})", residual, tol.structural * size * size));
    det_ = s.determinant() > 0 ? 1.0 : -1.0;
    orthochronous_ = s(3, 3) > 0;
}

LorentzMatrix LorentzMatrix::identity() { return LorentzMatrix(Mat4::Identity()); }

Mat4 LorentzMatrix::inverse() const {
    const Mat4& g = minkowski_metric();
    return g * s_.transpose() * g;
}

double LorentzMatrix::constraint_residual(const Mat4& s) {
    const Mat4& g = minkowski_metric();
    return (s.transpose() * g * s - g).cwiseAbs().maxCoeff();
}

Mat5 PoincareElement::realization() const {
    Mat5 r = Mat5::Zero();
    r.topLeftCorner<4, 4>() = s.matrix();
    r.topRightCorner<4, 1>() = c;
    r(4, 4) = 1.0;
    return r;
}

PoincareElement group_multiply(const PoincareElement& a, const PoincareElement& b) {
    return {LorentzMatrix(a.s.matrix() * b.s.matrix()), a.s.matrix() * b.c + a.c};
}

PoincareElement group_inverse(const PoincareElement& a) {
    const Mat4 inv = a.s.inverse();
    return {LorentzMatrix(inv), -(inv * a.c)};
}

double distance(const CoadjointPoint& a, const CoadjointPoint& b) {
    return std::sqrt((a.m.l - b.m.l).squaredNorm() + (a.m.g - b.m.g).squaredNorm() + (a.p - b.p).squaredNorm());
}

double pair(const CoadjointPoint& nu, const CoadjointPoint& xi) {
    return -0.5 * (nu.m.matrix() * xi.m.matrix()).trace() - gamma(nu.p, xi.p);
}

LorentzAlgebraElement l_operator(const FourVector& c, const FourVector& v) {
    const Vec3 cs = spatial(c);
    const Vec3 vs = spatial(v);
    return {cs.cross(vs), v.w() * cs - c.w() * vs};
}

CoadjointPoint coadjoint_act(const PoincareElement& g, const CoadjointPoint& nu) {
    const Mat4& s = g.s.matrix();
    const FourVector sp = s * nu.p;
    const auto rotated = LorentzAlgebraElement::project(s * nu.m.matrix() * g.s.inverse());
    return {rotated + l_operator(g.c, sp), sp};
}

FourVector polarization(const CoadjointPoint& nu) {
    const Vec3 p = spatial(nu.p);
    const double energy = nu.p.w();
    return four_vector(p.cross(nu.m.g) + energy * nu.m.l, p.dot(nu.m.l));
}

Casimirs casimirs(const CoadjointPoint& nu) {
    const FourVector w = polarization(nu);
    return {gamma(nu.p, nu.p), gamma(w, w)};
}

PoincareElement involution(Involution kind) {
    FourVector diag;
    switch (kind) {
        case Involution::Space: diag << -1, -1, -1, 1; break;
        case Involution::Time: diag << 1, 1, 1, -1; break;
        case Involution::SpaceTime: diag << -1, -1, -1, -1; break;
    }
    return {LorentzMatrix(Mat4(diag.asDiagonal())), FourVector::Zero()};
}

}  // namespace coadjoint
