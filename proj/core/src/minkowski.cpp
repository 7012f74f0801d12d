#include "coadjoint/minkowski.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "coadjoint/error.hpp"

namespace coadjoint {

namespace {

/// Gram-Schmidt in the indefinite metric. Candidates are the standard basis
/// vectors pushed through `project`; at each step the candidate with the
/// largest |gamma(v,v)| is re-projected, normalized and removed from the others.
std::vector<FourVector> complete_orthonormal(const std::function<FourVector(const FourVector&)>& project,
                                             int count) {
    std::vector<FourVector> candidates;
    for (int i = 0; i < 4; ++i) candidates.push_back(project(basis_vector(i)));

    std::vector<FourVector> chosen;
    while (static_cast<int>(chosen.size()) < count) {
        int best = -1;
        double best_norm = 0.0;
        for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
            const double n = std::abs(gamma(candidates[i], candidates[i]));
            if (n > best_norm) {
                best_norm = n;
                best = i;
            }
        }
        if (best < 0 || best_norm == 0.0)
            throw Error(ErrorCode::InvalidArgument, "orthonormal completion degenerated");

        // Second projection pass against the constraint and earlier picks.
        FourVector v = project(candidates[best]);
        for (const auto& u : chosen) v -= gamma(u, u) * gamma(v, u) * u;
        FourVector w = v / std::sqrt(std::abs(gamma(v, v)));
        candidates.erase(candidates.begin() + best);
        const double sign = gamma(w, w) < 0 ? -1.0 : 1.0;
        for (auto& c : candidates) c -= sign * gamma(c, w) * w;
        chosen.push_back(w);
    }
    return chosen;
}

}  // namespace

const Mat4& minkowski_metric() {
    static const Mat4 g = FourVector(-1.0, -1.0, -1.0, 1.0).asDiagonal();
    return g;
}

const Mat4& null_frame_metric() {
    static const Mat4 g = [] {
        Mat4 m = Mat4::Zero();
        m(0, 3) = m(3, 0) = 1.0;
        m(1, 1) = m(2, 2) = -1.0;
        return m;
    }();
    return g;
}

double gamma(const FourVector& u, const FourVector& v) noexcept {
    return -u.x() * v.x() - u.y() * v.y() - u.z() * v.z() + u.w() * v.w();
}

FourVector basis_vector(int index) {
    if (index < 0 || index > 3) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    return FourVector::Unit(index);
}

bool all_finite(const FourVector& v) noexcept { return v.allFinite(); }

CausalType causal_type(const FourVector& p, const ToleranceConfig& tol) {
    const double norm = p.norm();
    const double s = scale(norm);
    if (norm <= tol.classify * s) return {CausalTag::Zero, std::nullopt};

    const double q = gamma(p, p);
    if (std::abs(q) <= tol.classify * s * s) return {CausalTag::Lightlike, std::nullopt};
    return {q > 0 ? CausalTag::Timelike : CausalTag::Spacelike, std::sqrt(std::abs(q))};
}

Mat4 TimelikeFrame::matrix() const {
    Mat4 m;
    m << w[0], w[1], w[2], p_hat;
    return m;
}

Mat4 LightlikeFrame::matrix() const {
    Mat4 m;
    m << f1, f2, f3, f4;
    return m;
}

TimelikeFrame timelike_frame(const FourVector& p, const ToleranceConfig& tol) {
    const auto type = causal_type(p, tol);
    if (type.tag != CausalTag::Timelike) throw Error(ErrorCode::NotTimelike, "momentum is not timelike");

    const double pp = gamma(p, p);
    const auto w = complete_orthonormal([&](const FourVector& v) -> FourVector { return v - gamma(v, p) / pp * p; }, 3);

    TimelikeFrame frame;
    frame.w = {w[0], w[1], w[2]};
    frame.mu = *type.mu;
    frame.p_hat = p / frame.mu;
    return frame;
}

LightlikeFrame lightlike_frame(const FourVector& p, const ToleranceConfig& tol) {
    if (causal_type(p, tol).tag != CausalTag::Lightlike)
        throw Error(ErrorCode::NotLightlike, "momentum is not lightlike");

    const double energy = p.w();
    const FourVector p_hat = four_vector(-spatial(p), energy) / (2.0 * energy * energy);

    // Complement of the hyperbolic pair (p_hat, p): v - gamma(v,p) p_hat - gamma(v,p_hat) p.
    const auto q = complete_orthonormal(
        [&](const FourVector& v) -> FourVector { return v - gamma(v, p) * p_hat - gamma(v, p_hat) * p; }, 2);

    return {p_hat, q[0], q[1], p};
}

double gram_residual(const TimelikeFrame& frame) {
    const Mat4 b = frame.matrix();
    return (b.transpose() * minkowski_metric() * b - minkowski_metric()).cwiseAbs().maxCoeff();
}

double gram_residual(const LightlikeFrame& frame) {
    const Mat4 b = frame.matrix();
    return (b.transpose() * minkowski_metric() * b - null_frame_metric()).cwiseAbs().maxCoeff();
}

}  // namespace coadjoint
