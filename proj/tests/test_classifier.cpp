#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "coadjoint/classifier.hpp"
#include "coadjoint/error.hpp"
#include "coadjoint/sampling.hpp"
#include "test_support.hpp"

namespace coadjoint {
namespace {

const FourVector e1 = FourVector::Unit(0);
const FourVector e4 = FourVector::Unit(3);
const double kR = std::numbers::sqrt2 / 2.0;

CoadjointPoint massless_rep(double beta = 1.0) { return {{Vec3(beta, 0, 0), Vec3::Zero()}, kR * (e1 + e4)}; }

struct Catalog {
    OrbitClass cls;
    ComponentLabel labels;
};

std::vector<Catalog> catalog() {
    std::vector<Catalog> out;
    for (int e : {1, -1}) {
        out.push_back({OrbitClass::massive_spinning(2.0, 1.0), {e, std::nullopt, e}});
        out.push_back({OrbitClass::massive_spinless(3.0), {e, std::nullopt, std::nullopt}});
        for (int h : {1, -1}) out.push_back({OrbitClass::massless_helicity(0.75), {e, h, std::nullopt}});
    }
    return out;
}

/// Closed-form boost taking a timelike P with E > 0 to rest.
Mat4 rest_boost(const FourVector& p) {
    const double m = std::sqrt(gamma(p, p));
    const Vec3 u = spatial(p) / m;  // spatial part of the four-velocity
    const double g = p.w() / m;
    Mat4 b = Mat4::Identity();
    b.topLeftCorner<3, 3>() += u * u.transpose() / (1.0 + g);
    b.topRightCorner<3, 1>() = -u;
    b.bottomLeftCorner<1, 3>() = -u.transpose();
    b(3, 3) = g;
    return b;
}

TEST(RestTranslation, Examples) {
    const CoadjointPoint boosted{{Vec3::Zero(), Vec3(1, 0, 0)}, e4};
    const auto r = rest_translation(boosted);
    EXPECT_EQ(r.translation.c, -e1);
    EXPECT_EQ(r.point.m.l, Vec3::Zero());
    EXPECT_EQ(r.point.m.g, Vec3::Zero());
    EXPECT_EQ(r.point.p, e4);

    const CoadjointPoint rep{{Vec3(0, 0, 1), Vec3::Zero()}, 2.0 * e4};
    const auto same = rest_translation(rep);
    EXPECT_EQ(same.translation.c, FourVector::Zero());
    EXPECT_EQ(distance(same.point, rep), 0.0);

    EXPECT_THROW(rest_translation(CoadjointPoint{{}, e1}), Error);
}

TEST(RestTranslation, AnnihilatesMP) {
    testing::Gen gen(41);
    for (int i = 0; i < 1000; ++i) {
        auto nu = gen.point(5);
        nu.p = four_vector(gen.vec3(3), 0.0);
        nu.p.w() = (gen.coin() ? 1 : -1) * std::sqrt(spatial(nu.p).squaredNorm() + gen.uniform(0.1, 4));
        const auto r = rest_translation(nu);
        ASSERT_LT((r.point.m.matrix() * r.point.p).norm(), 1e-10 * std::max(1.0, nu.norm() * nu.norm()));
    }
}

TEST(ReduceLightlike, Representative) {
    const auto red = reduce_lightlike(massless_rep());
    EXPECT_NEAR(red.form.a, 0.0, 1e-15);
    EXPECT_LT(red.form.y.norm(), 1e-15);
    EXPECT_LT(red.form.x.norm(), 1e-15);
    // Skew with eigenvalues +-i.
    EXPECT_NEAR(red.form.yprime(1, 0), 1.0, 1e-15);
    EXPECT_NEAR(red.form.yprime(0, 1), -1.0, 1e-15);
    EXPECT_NEAR(red.form.yprime(0, 0), 0.0, 1e-15);
}

TEST(ReduceLightlike, ZeroAlgebraPart) {
    const auto red = reduce_lightlike(CoadjointPoint{{}, kR * (e1 + e4)});
    EXPECT_EQ(red.form.a, 0.0);
    EXPECT_EQ(red.form.y, Eigen::Vector2d::Zero());
    EXPECT_EQ(red.form.x, Eigen::Vector2d::Zero());
    EXPECT_EQ(red.form.yprime, Eigen::Matrix2d::Zero());
    EXPECT_THROW(reduce_lightlike(CoadjointPoint{{}, e4}), Error);
}

TEST(ReduceLightlike, MovedRepresentativeKeepsInvariants) {
    testing::Gen gen(42);
    for (int i = 0; i < 500; ++i) {
        const auto nu = coadjoint_act(gen.any(), massless_rep(1.0));
        const auto red = reduce_lightlike(nu);
        const double s = std::max(1.0, nu.norm());
        ASSERT_LT(std::abs(red.form.a), 1e-10 * s);
        ASSERT_LT(red.form.y.norm(), 1e-10 * s);
        ASSERT_LT(red.form.x.norm(), 1e-10 * s);
        ASSERT_NEAR(std::abs(red.form.yprime(1, 0)), 1.0, 1e-10 * s);
    }
}

TEST(ReduceLightlike, BlockFormReassembles) {
    testing::Gen gen(43);
    for (int i = 0; i < 500; ++i) {
        auto nu = gen.point(4);
        const double energy = (gen.coin() ? 1 : -1) * gen.uniform(0.2, 5);
        nu.p = four_vector(std::abs(energy) * gen.unit3(), energy);
        const auto form = lightlike_block_form(nu, lightlike_frame(nu.p));
        const auto back = reassemble(form);
        ASSERT_LT((back.matrix() - nu.m.matrix()).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, nu.norm()));
        // the translation removes a and y but leaves x and Y'
        const auto red = reduce_lightlike(nu);
        ASSERT_LT(std::abs(red.form.a) + red.form.y.norm(), 1e-10 * std::max(1.0, nu.norm()));
        ASSERT_LT((red.form.x - form.x).norm(), 1e-10 * std::max(1.0, nu.norm()));
    }
}

// x cannot be removed by any group element: |x|^2 = -C2 with P = f4.
TEST(ReduceLightlike, XNormIsMinusSecondCasimir) {
    testing::Gen gen(44);
    for (int i = 0; i < 1000; ++i) {
        auto nu = gen.point(3);
        const double energy = (gen.coin() ? 1 : -1) * gen.uniform(0.2, 5);
        nu.p = four_vector(std::abs(energy) * gen.unit3(), energy);
        const auto red = reduce_lightlike(nu);
        const double c2 = casimirs(nu).c2;
        ASSERT_NEAR(red.form.x.squaredNorm(), -c2, 1e-9 * std::max(1.0, std::abs(c2)));
    }
}

TEST(Classify, Examples) {
    auto c = classify({{Vec3(0, 0, 1), Vec3::Zero()}, 2.0 * e4});
    EXPECT_EQ(c.tag, OrbitTag::MassiveSpinning);
    EXPECT_DOUBLE_EQ(*c.mu, 2.0);
    EXPECT_DOUBLE_EQ(*c.beta, 1.0);

    c = classify({{}, 3.0 * e4});
    EXPECT_EQ(c.tag, OrbitTag::MassiveSpinless);
    EXPECT_DOUBLE_EQ(*c.mu, 3.0);
    EXPECT_FALSE(c.beta);

    c = classify(massless_rep());
    EXPECT_EQ(c.tag, OrbitTag::MasslessHelicity);
    EXPECT_NEAR(*c.beta, 1.0, 1e-15);
    EXPECT_FALSE(c.mu);

    c = classify({{}, e1});
    EXPECT_EQ(c.tag, OrbitTag::OutOfCatalog);
    EXPECT_EQ(*c.reason, OutOfCatalogReason::SpacelikeMomentum);

    c = classify({{Vec3::Zero(), Vec3(1, 0, 0)}, e4});
    EXPECT_EQ(c.tag, OrbitTag::MassiveSpinless);
    EXPECT_DOUBLE_EQ(*c.mu, 1.0);
}

TEST(Classify, OutOfCatalogReasons) {
    EXPECT_EQ(*classify({{Vec3(1, 2, 3), Vec3::Zero()}, FourVector::Zero()}).reason, OutOfCatalogReason::ZeroMomentum);
    EXPECT_EQ(*classify({{}, kR * (e1 + e4)}).reason, OutOfCatalogReason::MasslessSpinless);
    // M P = e2 / sqrt(2): x != 0
    EXPECT_EQ(*classify({{Vec3::Zero(), Vec3(0, 1, 0)}, kR * (e1 + e4)}).reason, OutOfCatalogReason::ContinuousSpin);
    // helicity plus x: still continuous spin
    EXPECT_EQ(*classify({{Vec3(1, 0, 0), Vec3(0, 1, 0)}, kR * (e1 + e4)}).reason, OutOfCatalogReason::ContinuousSpin);
    EXPECT_THROW(classify({{}, FourVector(NAN, 0, 0, 1)}), Error);
}

TEST(Classify, MarginalNearThreshold) {
    EXPECT_FALSE(classify({{Vec3(0, 0, 1), Vec3::Zero()}, e4}).marginal);
    const auto c = classify({{Vec3(0, 0, 3e-8), Vec3::Zero()}, e4});
    EXPECT_TRUE(c.marginal);
    EXPECT_FALSE(classify({{Vec3(0, 0, 1e-13), Vec3::Zero()}, e4}).marginal);
}

TEST(NormalForm, RepresentativesAreFixed) {
    for (const auto& nu : {CoadjointPoint{{Vec3(0, 0, 1), Vec3::Zero()}, 2.0 * e4}, CoadjointPoint{{}, 3.0 * e4},
                           massless_rep(2.5)}) {
        const auto nf = normal_form(nu);
        EXPECT_LT(distance(nf.representative, nu), 1e-12);
        EXPECT_LT((nf.witness.s.matrix() - Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT(nf.witness.c.norm(), 1e-12);
        EXPECT_LT(nf.residual, 1e-12);
    }
}

TEST(NormalForm, RecoversRepresentativeFromOrbit) {
    testing::Gen gen(45);
    const CoadjointPoint rep2{{}, e4};
    const CoadjointPoint rep1{{Vec3(0, 0, 1), Vec3::Zero()}, 2.0 * e4};
    for (int i = 0; i < 200; ++i) {
        const auto nf2 = normal_form(coadjoint_act(gen.any(), rep2));
        EXPECT_LT(distance(nf2.representative, rep2), 1e-8);
        EXPECT_LT(nf2.residual, 1e-8);

        const auto nf1 = normal_form(coadjoint_act(gen.any(), rep1));
        EXPECT_NEAR(*nf1.cls.mu, 2.0, 1e-9);
        EXPECT_NEAR(*nf1.cls.beta, 1.0, 1e-9);
        EXPECT_LT(nf1.residual, 1e-8);
    }
}

TEST(NormalForm, OutOfCatalogThrows) {
    try {
        normal_form({{}, e1});
        FAIL() << "expected OutOfCatalog";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfCatalog);
    }
}

TEST(ComponentLabels, Examples) {
    const CoadjointPoint rep2{{}, e4};
    const auto spinless = OrbitClass::massive_spinless(1.0);
    EXPECT_EQ(component_labels(rep2, spinless).energy_sign, 1);
    EXPECT_EQ(component_labels(coadjoint_act(involution(Involution::Time), rep2), spinless).energy_sign, -1);

    const auto helicity = OrbitClass::massless_helicity(1.0);
    const auto rep3 = massless_rep();
    EXPECT_EQ(component_labels(rep3, helicity), (ComponentLabel{1, 1, std::nullopt}));
    EXPECT_EQ(component_labels(coadjoint_act(involution(Involution::Space), rep3), helicity),
              (ComponentLabel{1, -1, std::nullopt}));
    EXPECT_EQ(component_labels(coadjoint_act(involution(Involution::Time), rep3), helicity),
              (ComponentLabel{-1, 1, std::nullopt}));

    const auto spinning = OrbitClass::massive_spinning(1.0, 1.0);
    const CoadjointPoint rep1{{Vec3(0, 0, 1), Vec3::Zero()}, e4};
    EXPECT_EQ(component_labels(rep1, spinning), (ComponentLabel{1, std::nullopt, 1}));
    EXPECT_EQ(component_labels(coadjoint_act(involution(Involution::Time), rep1), spinning),
              (ComponentLabel{-1, std::nullopt, -1}));

    EXPECT_THROW(component_labels(rep1, OrbitClass::out_of_catalog(OutOfCatalogReason::ZeroMomentum)), Error);
}

TEST(CvkLabel, Examples) {
    EXPECT_EQ(cvk_label(OrbitClass::massive_spinning(2, 1)), "∇₃⁺(0),2 + Δ₀⁻(i·1, IP) + Δ₀⁻(0)");
    EXPECT_EQ(cvk_label(OrbitClass::massive_spinless(3)), "∇₃⁺(0),3 + Δ₀⁻(0) + Δ₀⁻(0) + Δ₀⁻(0)");
    EXPECT_EQ(cvk_label(OrbitClass::massless_helicity(1)), "∇₄(0,0) + Δ₀⁻(i·1, IP)");
    EXPECT_EQ(cvk_label(OrbitClass::massless_helicity(0.25)), "∇₄(0,0) + Δ₀⁻(i·0.25, IP)");
    EXPECT_THROW(cvk_label(OrbitClass::out_of_catalog(OutOfCatalogReason::ContinuousSpin)), Error);
}

TEST(Representative, RejectsInconsistentLabels) {
    EXPECT_THROW(representative(OrbitClass::massive_spinning(1, 1), ComponentLabel{1, std::nullopt, -1}), Error);
    EXPECT_THROW(representative(OrbitClass::massive_spinless(1), ComponentLabel{0, std::nullopt, std::nullopt}), Error);
}

TEST(Properties, OrbitInvariance) {
    testing::Gen gen(46);
    for (const auto& [cls, labels] : catalog()) {
        const auto start = representative(cls, labels);
        for (int i = 0; i < 100; ++i) {
            const auto got = classify(coadjoint_act(gen.any(), start));
            ASSERT_EQ(got.tag, cls.tag);
            if (cls.mu) ASSERT_LT(testing::rel_err(*got.mu, *cls.mu), 1e-6);
            if (cls.beta) ASSERT_LT(testing::rel_err(*got.beta, *cls.beta), 1e-6);
        }
    }
}

TEST(Properties, CasimirConsistency) {
    testing::Gen gen(47);
    for (const auto& [cls, labels] : catalog()) {
        for (int i = 0; i < 100; ++i) {
            const auto nu = coadjoint_act(gen.proper(), representative(cls, labels));
            const auto c = casimirs(nu);
            const double s = std::max(1.0, nu.norm());
            switch (cls.tag) {
                case OrbitTag::MassiveSpinning: {
                    const double mu = *cls.mu, beta = *cls.beta;
                    ASSERT_LT(testing::rel_err(c.c1, mu * mu), 1e-8);
                    ASSERT_LT(testing::rel_err(c.c2, -mu * mu * beta * beta), 1e-8);
                    break;
                }
                case OrbitTag::MassiveSpinless:
                    ASSERT_LT(testing::rel_err(c.c1, *cls.mu * *cls.mu), 1e-8);
                    ASSERT_LT(std::abs(c.c2), 1e-8 * s * s);
                    break;
                default:
                    ASSERT_LT(std::abs(c.c1), 1e-8 * s * s);
                    ASSERT_LT(std::abs(c.c2), 1e-8 * s * s);
            }
        }
    }
}

TEST(Properties, WitnessSoundAndLabelsStable) {
    testing::Gen gen(48);
    for (const auto& [cls, labels] : catalog()) {
        const auto start = representative(cls, labels);
        for (int i = 0; i < 100; ++i) {
            const auto nu = coadjoint_act(gen.proper(), start);
            const auto nf = normal_form(nu);
            ASSERT_LT(verify_witness(nu, nf), 1e-7);
            ASSERT_EQ(nf.labels, labels);
        }
    }
}

TEST(Properties, InvolutionsFlipTheDocumentedLabels) {
    testing::Gen gen(49);
    for (const auto& [cls, labels] : catalog()) {
        const auto nu = coadjoint_act(gen.proper(), representative(cls, labels));
        const auto base = component_labels(nu, cls);

        auto flipped_t = component_labels(coadjoint_act(involution(Involution::Time), nu), cls);
        ASSERT_EQ(flipped_t.energy_sign, -base.energy_sign);
        ASSERT_EQ(flipped_t.helicity_sign, base.helicity_sign);

        auto flipped_s = component_labels(coadjoint_act(involution(Involution::Space), nu), cls);
        ASSERT_EQ(flipped_s.energy_sign, base.energy_sign);
        if (cls.tag == OrbitTag::MasslessHelicity)
            ASSERT_EQ(*flipped_s.helicity_sign, -*base.helicity_sign);
        else
            ASSERT_EQ(flipped_s, base);
    }
}

TEST(Properties, BetaMatchesRestFrameRotation) {
    testing::Gen gen(50);
    for (int e : {1, -1}) {
        const auto cls = OrbitClass::massive_spinning(1.5, 0.8);
        const auto start = representative(cls, {e, std::nullopt, e});
        for (int i = 0; i < 200; ++i) {
            auto nu = coadjoint_act(gen.proper(), start);
            const double beta = *classify(nu).beta;

            // Independent route: reverse time if needed, boost to rest, drop the
            // translation part; the remaining M is a pure rotation of size beta.
            if (nu.p.w() < 0) nu = coadjoint_act(involution(Involution::Time), nu);
            auto rest = coadjoint_act(PoincareElement{LorentzMatrix(rest_boost(nu.p)), FourVector::Zero()}, nu);
            rest = rest_translation(rest).point;
            ASSERT_LT(testing::rel_err(beta, rest.m.l.norm()), 1e-10);
            ASSERT_LT(rest.m.g.norm(), 1e-9);

            const auto c = casimirs(nu);
            ASSERT_LT(testing::rel_err(beta, std::sqrt(-c.c2 / c.c1)), 1e-9);
        }
    }
}

}  // namespace
}  // namespace coadjoint
