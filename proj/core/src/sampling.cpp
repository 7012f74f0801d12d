#include "coadjoint/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coadjoint/error.hpp"

namespace coadjoint {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

SamplerConfig SamplerConfig::derive(std::uint64_t index) const {
    SamplerConfig out = *this;
    out.seed = splitmix64(seed ^ splitmix64(index));
    return out;
}

Mat4 expm(const Mat4& m) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm >= 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5))) + 1;

    const Mat4 a = m / std::ldexp(1.0, squarings);
    Mat4 result = Mat4::Identity();
    Mat4 term = Mat4::Identity();
    for (int k = 1; k <= 20; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

Sampler::Sampler(const SamplerConfig& cfg) : cfg_(cfg), engine_(cfg.seed) {}

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

PoincareElement Sampler::group_element(bool allow_involutions) {
    const Vec3 boost = in_ball<3>(cfg_.max_rapidity);
    const Vec3 rotation = in_ball<3>(std::min(cfg_.max_rapidity, std::numbers::pi));
    const FourVector c = in_ball<4>(cfg_.max_translation);

    Mat4 s = expm(LorentzAlgebraElement{Vec3::Zero(), boost}.matrix()) *
             expm(LorentzAlgebraElement{rotation, Vec3::Zero()}.matrix());
    if (allow_involutions && cfg_.include_involutions) {
        if (uniform() < 0.5) s = involution(Involution::Space).s.matrix() * s;
        if (uniform() < 0.5) s = involution(Involution::Time).s.matrix() * s;
    }
    return {LorentzMatrix(s), c};
}

PoincareElement random_group_element(const SamplerConfig& cfg) { return Sampler(cfg).group_element(); }

std::vector<CoadjointPoint> sample_orbit(const OrbitClass& cls, const ComponentLabel& labels,
                                         const SamplerConfig& cfg, int count) {
    if (!cls.in_catalog()) throw Error(ErrorCode::OutOfCatalog, "cannot sample an out-of-catalog orbit");
    if (count < 0) throw Error(ErrorCode::InvalidArgument, "sample count must be non-negative");

    const CoadjointPoint start = representative(cls, labels);
    Sampler sampler(cfg);
    std::vector<CoadjointPoint> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) points.push_back(coadjoint_act(sampler.group_element(false), start));
    return points;
}

double verify_witness(const CoadjointPoint& nu, const NormalFormResult& result) {
    return distance(coadjoint_act(result.witness, nu), result.representative) / scale(nu.norm());
}

}  // namespace coadjoint
