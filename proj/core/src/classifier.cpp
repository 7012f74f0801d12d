#include "coadjoint/classifier.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "coadjoint/error.hpp"

namespace coadjoint {

namespace {

constexpr double kMarginalFactor = 100.0;

bool near_threshold(double value, double threshold) {
    return value > threshold / kMarginalFactor && value < threshold * kMarginalFactor;
}

/// Axis of a 3x3 skew matrix: Y = hat(axis(Y)).
Vec3 axis(const Mat3& y) { return Vec3(y(2, 1) - y(1, 2), y(0, 2) - y(2, 0), y(1, 0) - y(0, 1)) / 2.0; }

/// Everything the reduction learns about a point; shared by classify() and normal_form().
struct Analysis {
    OrbitClass cls;
    PoincareElement translation;
    // timelike
    std::optional<TimelikeFrame> rest_frame;
    Vec3 rotation_axis = Vec3::Zero();
    // lightlike
    std::optional<ReducedLightlikeForm> null_form;
};

Analysis analyze(const CoadjointPoint& nu, const ToleranceConfig& tol) {
    if (!nu.is_finite()) throw Error(ErrorCode::InvalidArgument, "point has non-finite components");

    Analysis out;
    const double p_norm = nu.p.norm();
    const double s = scale(p_norm);
    const double zero_threshold = tol.classify * (1.0 + nu.m.norm());
    const bool marginal_type =
        near_threshold(p_norm, tol.classify * s) || near_threshold(std::abs(gamma(nu.p, nu.p)), tol.classify * s * s);

    const auto type = causal_type(nu.p, tol);
    switch (type.tag) {
        case CausalTag::Zero:
            out.cls = OrbitClass::out_of_catalog(OutOfCatalogReason::ZeroMomentum);
            break;
        case CausalTag::Spacelike:
            out.cls = OrbitClass::out_of_catalog(OutOfCatalogReason::SpacelikeMomentum);
            break;
        case CausalTag::Timelike: {
            auto rest = rest_translation(nu, tol);
            const auto frame = timelike_frame(nu.p, tol);
            const Mat4 mm = rest.point.m.matrix();
            Mat3 y;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) y(i, j) = -gamma(frame.w[i], mm * frame.w[j]);

            out.rotation_axis = axis(y);
            const double beta = out.rotation_axis.norm();
            out.cls = beta > zero_threshold ? OrbitClass::massive_spinning(*type.mu, beta)
                                            : OrbitClass::massive_spinless(*type.mu);
            out.cls.marginal = near_threshold(beta, zero_threshold);
            out.translation = rest.translation;
            out.rest_frame = frame;
            break;
        }
        case CausalTag::Lightlike: {
            auto reduced = reduce_lightlike(nu, tol);
            const auto& form = reduced.form;
            const double beta = std::abs(form.yprime(1, 0) - form.yprime(0, 1)) / 2.0;
            const double x_norm = form.x.norm();
            if (x_norm > zero_threshold) {
                // |x|^2 = -C2 is an orbit invariant: no group element removes x.
                out.cls = OrbitClass::out_of_catalog(OutOfCatalogReason::ContinuousSpin);
            } else if (beta > zero_threshold) {
                out.cls = OrbitClass::massless_helicity(beta);
            } else {
                out.cls = OrbitClass::out_of_catalog(OutOfCatalogReason::MasslessSpinless);
            }
            out.cls.marginal = near_threshold(beta, zero_threshold) || near_threshold(x_norm, zero_threshold);
            out.translation = reduced.translation;
            out.null_form = form;
            break;
        }
    }
    out.cls.marginal = out.cls.marginal || marginal_type;
    return out;
}

/// Lorentz matrix sending the gamma-orthonormal basis B (columns) to the standard basis.
LorentzMatrix change_of_basis(const Mat4& b) {
    const Mat4& g = minkowski_metric();
    return LorentzMatrix(g * b.transpose() * g);
}

Mat4 massive_spinning_basis(const TimelikeFrame& frame, const Vec3& rotation_axis) {
    const Vec3 k = rotation_axis.normalized();
    Eigen::Index seed = 0;
    k.cwiseAbs().minCoeff(&seed);
    const Vec3 u = (Vec3::Unit(seed) - k(seed) * k).normalized();
    const Vec3 v = k.cross(u);

    auto lift = [&](const Vec3& c) -> FourVector { return c(0) * frame.w[0] + c(1) * frame.w[1] + c(2) * frame.w[2]; };
    Mat4 b;
    b << lift(u), lift(v), lift(k), frame.p_hat;
    return b;
}

Mat4 massless_basis(const ReducedLightlikeForm& form, double beta) {
    const auto& f = form.frame;
    const double r = std::numbers::sqrt2 / 2.0;
    const FourVector turned = (form.yprime(0, 0) * f.f2 + form.yprime(1, 0) * f.f3) / beta;
    Mat4 b;
    b << r * (f.f4 - f.f1), f.f2, turned, r * (f.f1 + f.f4);
    return b;
}

int sign_of(double v) { return v < 0 ? -1 : 1; }

}  // namespace

OrbitClass OrbitClass::massive_spinning(double mu, double beta) {
    OrbitClass c;
    c.tag = OrbitTag::MassiveSpinning;
    c.mu = mu;
    c.beta = beta;
    return c;
}

OrbitClass OrbitClass::massive_spinless(double mu) {
    OrbitClass c;
    c.tag = OrbitTag::MassiveSpinless;
    c.mu = mu;
    return c;
}

OrbitClass OrbitClass::massless_helicity(double beta) {
    OrbitClass c;
    c.tag = OrbitTag::MasslessHelicity;
    c.beta = beta;
    return c;
}

OrbitClass OrbitClass::out_of_catalog(OutOfCatalogReason reason) {
    OrbitClass c;
    c.reason = reason;
    return c;
}

RestTranslation rest_translation(const CoadjointPoint& nu, const ToleranceConfig& tol) {
    if (causal_type(nu.p, tol).tag != CausalTag::Timelike)
        throw Error(ErrorCode::NotTimelike, "rest translation needs timelike momentum");
    const FourVector c = -(nu.m.matrix() * nu.p) / gamma(nu.p, nu.p);
    auto t = PoincareElement::translation(c);
    auto moved = coadjoint_act(t, nu);
    return {std::move(t), moved};
}

ReducedLightlikeForm lightlike_block_form(const CoadjointPoint& nu, const LightlikeFrame& frame) {
    const Mat4 f = frame.matrix();
    const Mat4 f_inv = null_frame_metric() * f.transpose() * minkowski_metric();
    const Mat4 block = f_inv * nu.m.matrix() * f;

    ReducedLightlikeForm form;
    form.a = block(0, 0);
    form.y = block.block<2, 1>(1, 0);
    form.x = block.block<2, 1>(1, 3);
    form.yprime = block.block<2, 2>(1, 1);
    form.frame = frame;
    return form;
}

LorentzAlgebraElement reassemble(const ReducedLightlikeForm& form) {
    Mat4 block = Mat4::Zero();
    block(0, 0) = form.a;
    block.block<1, 2>(0, 1) = form.x.transpose();
    block.block<2, 1>(1, 0) = form.y;
    block.block<2, 2>(1, 1) = form.yprime;
    block.block<2, 1>(1, 3) = form.x;
    block.block<1, 2>(3, 1) = form.y.transpose();
    block(3, 3) = -form.a;

    const Mat4 f = form.frame.matrix();
    const Mat4 f_inv = null_frame_metric() * f.transpose() * minkowski_metric();
    return LorentzAlgebraElement::project(f * block * f_inv);
}

LightlikeReduction reduce_lightlike(const CoadjointPoint& nu, const ToleranceConfig& tol) {
    const auto frame = lightlike_frame(nu.p, tol);
    const auto before = lightlike_block_form(nu, frame);
    const FourVector c = -(before.a * frame.f1 + before.y(0) * frame.f2 + before.y(1) * frame.f3);
    auto t = PoincareElement::translation(c);
    return {t, lightlike_block_form(coadjoint_act(t, nu), frame)};
}

OrbitClass classify(const CoadjointPoint& nu, const ToleranceConfig& tol) { return analyze(nu, tol).cls; }

NormalFormResult normal_form(const CoadjointPoint& nu, const ToleranceConfig& tol) {
    const auto analysis = analyze(nu, tol);
    const auto& cls = analysis.cls;
    if (!cls.in_catalog())
        throw Error(ErrorCode::OutOfCatalog, fmt::format("point is out of catalog ({})", to_string(*cls.reason)));

    Mat4 basis;
    switch (cls.tag) {
        case OrbitTag::MassiveSpinning:
            basis = massive_spinning_basis(*analysis.rest_frame, analysis.rotation_axis);
            break;
        case OrbitTag::MassiveSpinless:
            basis = analysis.rest_frame->matrix();
            break;
        case OrbitTag::MasslessHelicity:
            basis = massless_basis(*analysis.null_form, *cls.beta);
            break;
        case OrbitTag::OutOfCatalog:
            break;
    }

    NormalFormResult result;
    result.cls = cls;
    result.labels = component_labels(nu, cls);
    result.representative = representative(cls);
    result.witness = PoincareElement{change_of_basis(basis), FourVector::Zero()} * analysis.translation;
    result.residual = distance(coadjoint_act(result.witness, nu), result.representative) / scale(nu.norm());
    if (result.residual >= tol.classify) result.cls.marginal = true;
    return result;
}

ComponentLabel component_labels(const CoadjointPoint& nu, const OrbitClass& cls) {
    ComponentLabel labels;
    labels.energy_sign = sign_of(nu.p.w());
    switch (cls.tag) {
        case OrbitTag::MassiveSpinning:
            labels.spin_sign = labels.energy_sign;
            break;
        case OrbitTag::MassiveSpinless:
            break;
        case OrbitTag::MasslessHelicity:
            labels.helicity_sign = sign_of(polarization(nu).w());
            break;
        case OrbitTag::OutOfCatalog:
            throw Error(ErrorCode::OutOfCatalog, "out-of-catalog orbits carry no component labels");
    }
    return labels;
}

CoadjointPoint representative(const OrbitClass& cls) {
    CoadjointPoint nu;
    switch (cls.tag) {
        case OrbitTag::MassiveSpinning:
            nu.m.l = Vec3(0.0, 0.0, *cls.beta);
            nu.p = *cls.mu * basis_vector(3);
            break;
        case OrbitTag::MassiveSpinless:
            nu.p = *cls.mu * basis_vector(3);
            break;
        case OrbitTag::MasslessHelicity:
            nu.m.l = Vec3(*cls.beta, 0.0, 0.0);
            nu.p = (basis_vector(0) + basis_vector(3)) * (std::numbers::sqrt2 / 2.0);
            break;
        case OrbitTag::OutOfCatalog:
            throw Error(ErrorCode::OutOfCatalog, "out-of-catalog orbits have no representative");
    }
    return nu;
}

CoadjointPoint representative(const OrbitClass& cls, const ComponentLabel& labels) {
    auto check_sign = [](int s) {
        if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "label signs must be +1 or -1");
    };
    check_sign(labels.energy_sign);

    CoadjointPoint nu = representative(cls);
    if (cls.tag == OrbitTag::MassiveSpinning && labels.spin_sign && *labels.spin_sign != labels.energy_sign)
        throw Error(ErrorCode::InvalidArgument, "massive spinning orbits have spin sign equal to energy sign");
    if (cls.tag == OrbitTag::MasslessHelicity && labels.helicity_sign) {
        check_sign(*labels.helicity_sign);
        if (*labels.helicity_sign < 0) nu = coadjoint_act(involution(Involution::Space), nu);
    }
    if (labels.energy_sign < 0) nu = coadjoint_act(involution(Involution::Time), nu);
    return nu;
}

std::string cvk_label(const OrbitClass& cls) {
    switch (cls.tag) {
        case OrbitTag::MassiveSpinning:
            return fmt::format("∇₃⁺(0),{} + Δ₀⁻(i·{}, IP) + Δ₀⁻(0)", *cls.mu, *cls.beta);
        case OrbitTag::MassiveSpinless:
            return fmt::format("∇₃⁺(0),{} + Δ₀⁻(0) + Δ₀⁻(0) + Δ₀⁻(0)", *cls.mu);
        case OrbitTag::MasslessHelicity:
            return fmt::format("∇₄(0,0) + Δ₀⁻(i·{}, IP)", *cls.beta);
        case OrbitTag::OutOfCatalog:
            break;
    }
    throw Error(ErrorCode::OutOfCatalog, "out-of-catalog orbits have no catalog notation");
}

std::string_view to_string(OrbitTag tag) noexcept {
    switch (tag) {
        case OrbitTag::MassiveSpinning: return "massive-spinning";
        case OrbitTag::MassiveSpinless: return "massive-spinless";
        case OrbitTag::MasslessHelicity: return "massless-helicity";
        case OrbitTag::OutOfCatalog: return "out-of-catalog";
    }
    return "unknown";
}

std::string_view to_string(OutOfCatalogReason reason) noexcept {
    switch (reason) {
        case OutOfCatalogReason::ZeroMomentum: return "zero-momentum";
        case OutOfCatalogReason::SpacelikeMomentum: return "spacelike-momentum";
        case OutOfCatalogReason::MasslessSpinless: return "massless-spinless";
        case OutOfCatalogReason::ContinuousSpin: return "continuous-spin";
    }
    return "unknown";
}

std::optional<OrbitTag> parse_orbit_tag(std::string_view name) noexcept {
    for (auto tag : {OrbitTag::MassiveSpinning, OrbitTag::MassiveSpinless, OrbitTag::MasslessHelicity})
        if (to_string(tag) == name) return tag;
    return std::nullopt;
}

}  // namespace coadjoint
