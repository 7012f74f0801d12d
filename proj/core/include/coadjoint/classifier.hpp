#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "coadjoint/minkowski.hpp"
#include "coadjoint/poincare.hpp"
#include "coadjoint/tolerance.hpp"

namespace coadjoint {

enum class OrbitTag { MassiveSpinning, MassiveSpinless, MasslessHelicity, OutOfCatalog };

enum class OutOfCatalogReason { ZeroMomentum, SpacelikeMomentum, MasslessSpinless, ContinuousSpin };

/// Outcome of classification. mu is the mass modulus and beta the spin
/// parameter; both are positive whenever present.
struct OrbitClass {
    OrbitTag tag = OrbitTag::OutOfCatalog;
    std::optional<double> mu;
    std::optional<double> beta;
    std::optional<OutOfCatalogReason> reason;
    /// Some decision quantity sat within two orders of magnitude of its threshold.
    bool marginal = false;

    static OrbitClass massive_spinning(double mu, double beta);
    static OrbitClass massive_spinless(double mu);
    static OrbitClass massless_helicity(double beta);
    static OrbitClass out_of_catalog(OutOfCatalogReason reason);

    bool in_catalog() const noexcept { return tag != OrbitTag::OutOfCatalog; }
};

/// Connected-component labels. helicity_sign is set only for massless
/// orbits, spin_sign only for massive spinning ones.
struct ComponentLabel {
    int energy_sign = 1;
    std::optional<int> helicity_sign;
    std::optional<int> spin_sign;

    bool operator==(const ComponentLabel&) const = default;
};

struct NormalFormResult {
    OrbitClass cls;
    ComponentLabel labels;
    CoadjointPoint representative;
    PoincareElement witness;
    /// |coadjoint_act(witness, input) - representative| / max(1, |input|)
    double residual = 0.0;
};

/// M expressed in a null frame {f1, f2, f3, f4} as the block matrix
///   [[a,  x^T, 0 ],
///    [y,  Y',  x ],
///    [0,  y^T, -a]]
/// with P = f4 and Y' skew.
struct ReducedLightlikeForm {
    double a = 0.0;
    Eigen::Vector2d y = Eigen::Vector2d::Zero();
    Eigen::Vector2d x = Eigen::Vector2d::Zero();
    Eigen::Matrix2d yprime = Eigen::Matrix2d::Zero();
    LightlikeFrame frame;
};

struct RestTranslation {
    PoincareElement translation;
    CoadjointPoint point;
};

struct LightlikeReduction {
    PoincareElement translation;
    ReducedLightlikeForm form;
};

/// Translation (I, -MP / gamma(P,P)) after which M'P = 0, so span{P}^gamma is
/// M'-invariant. Throws Error(NotTimelike).
RestTranslation rest_translation(const CoadjointPoint& nu, const ToleranceConfig& tol = {});

/// Block decomposition of nu.m in the given null frame, without any translation.
ReducedLightlikeForm lightlike_block_form(const CoadjointPoint& nu, const LightlikeFrame& frame);

/// Inverse of lightlike_block_form: the algebra element in standard coordinates.
LorentzAlgebraElement reassemble(const ReducedLightlikeForm& form);

/// Builds the null frame, then translates by -(a f1 + y_1 f2 + y_2 f3) so the
/// returned form has a = 0 and y = 0. Throws Error(NotLightlike).
LightlikeReduction reduce_lightlike(const CoadjointPoint& nu, const ToleranceConfig& tol = {});

OrbitClass classify(const CoadjointPoint& nu, const ToleranceConfig& tol = {});

/// Throws Error(OutOfCatalog) when classify() does not land in the catalog.
NormalFormResult normal_form(const CoadjointPoint& nu, const ToleranceConfig& tol = {});

/// Throws Error(OutOfCatalog) for an out-of-catalog class.
ComponentLabel component_labels(const CoadjointPoint& nu, const OrbitClass& cls);

/// Canonical representative of a catalog orbit, lying in the (+) / (+,+) component.
CoadjointPoint representative(const OrbitClass& cls);

/// Representative moved into the component named by `labels` via I_t and/or I_s.
/// Throws Error(InvalidArgument) for inconsistent labels.
CoadjointPoint representative(const OrbitClass& cls, const ComponentLabel& labels);

/// Orbit notation of the full coadjoint-orbit classification, with mu and beta filled in.
std::string cvk_label(const OrbitClass& cls);

std::string_view to_string(OrbitTag tag) noexcept;
std::string_view to_string(OutOfCatalogReason reason) noexcept;
std::optional<OrbitTag> parse_orbit_tag(std::string_view name) noexcept;

}  // namespace coadjoint
