#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coadjoint/classifier.hpp"
#include "coadjoint/poincare.hpp"

namespace coadjoint {

struct SamplerConfig {
    std::uint64_t seed = 0;
    double max_rapidity = 2.0;
    double max_translation = 10.0;
    bool include_involutions = false;

    /// Independent config for task `index`, seeded by a splitmix64 step.
    SamplerConfig derive(std::uint64_t index) const;
};

/// exp(m) by scaling and squaring: Taylor series (20 terms) at |m| / 2^k < 0.5.
Mat4 expm(const Mat4& m);

/// Deterministic stream of group elements. Copying a Sampler copies its state.
class Sampler {
public:
    explicit Sampler(const SamplerConfig& cfg);

    /// exp(boost) * exp(rotation) with rapidity <= max_rapidity and rotation
    /// angle <= min(max_rapidity, pi), then a translation of norm <=
    /// max_translation. When `allow_involutions` and the config permits,
    /// I_s and I_t are each composed in with probability 1/2.
    PoincareElement group_element(bool allow_involutions = true);

    /// Uniform in [0, 1), reproducible across standard libraries.
    double uniform();

    /// Uniform in the closed ball of the given radius in R^n.
    template <int N>
    Eigen::Matrix<double, N, 1> in_ball(double radius) {
        if (radius <= 0.0) return Eigen::Matrix<double, N, 1>::Zero();
        for (;;) {
            Eigen::Matrix<double, N, 1> v;
            for (int i = 0; i < N; ++i) v(i) = 2.0 * uniform() - 1.0;
            if (v.squaredNorm() <= 1.0) return radius * v;
        }
    }

    const SamplerConfig& config() const noexcept { return cfg_; }

private:
    SamplerConfig cfg_;
    std::mt19937_64 engine_;
};

/// First element of Sampler(cfg): the same config always yields the same element.
PoincareElement random_group_element(const SamplerConfig& cfg);

/// `count` points on the orbit of `cls`, all in the component named by `labels`.
/// Throws Error(OutOfCatalog) for an out-of-catalog class.
std::vector<CoadjointPoint> sample_orbit(const OrbitClass& cls, const ComponentLabel& labels,
                                         const SamplerConfig& cfg, int count);

/// |coadjoint_act(result.witness, nu) - result.representative| / max(1, |nu|)
double verify_witness(const CoadjointPoint& nu, const NormalFormResult& result);

}  // namespace coadjoint
