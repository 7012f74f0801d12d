#include "json_codec.hpp"

#include <cmath>
#include <string>

namespace coadjoint::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

double number_at(const json& arr, std::size_t i, const std::string& field) {
    const auto& v = arr.at(i);
    if (!v.is_number()) malformed(field + "[" + std::to_string(i) + "] is not a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) malformed(field + "[" + std::to_string(i) + "] is not finite");
    return d;
}

template <int N>
Eigen::Matrix<double, N, 1> vector_from(const json& doc, const std::string& field) {
    if (!doc.is_array() || doc.size() != N) malformed(field + " must be an array of " + std::to_string(N) + " numbers");
    Eigen::Matrix<double, N, 1> v;
    for (int i = 0; i < N; ++i) v(i) = number_at(doc, static_cast<std::size_t>(i), field);
    return v;
}

Mat4 matrix_from(const json& doc, const std::string& field) {
    if (!doc.is_array() || doc.size() != 4) malformed(field + " must be a 4x4 nested array");
    Mat4 m;
    for (int r = 0; r < 4; ++r) m.row(r) = vector_from<4>(doc[static_cast<std::size_t>(r)], field + "[" + std::to_string(r) + "]").transpose();
    return m;
}

template <typename Derived>
json array_of(const Eigen::MatrixBase<Derived>& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

json matrix_to_json(const Mat4& m) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) rows.push_back(array_of(m.row(r).transpose()));
    return rows;
}

std::string sign_string(int s) { return s < 0 ? "-" : "+"; }

}  // namespace

CoadjointPoint point_from_json(const json& doc, const ToleranceConfig& tol) {
    if (!doc.is_object()) malformed("point must be a JSON object");
    if (!doc.contains("P")) malformed("point is missing \"P\"");

    CoadjointPoint nu;
    nu.p = vector_from<4>(doc["P"], "P");

    const bool has_pair = doc.contains("M");
    const bool has_matrix = doc.contains("M_matrix");
    if (has_pair == has_matrix) malformed("point needs exactly one of \"M\" or \"M_matrix\"");
    if (has_pair) {
        const auto& m = doc["M"];
        if (!m.is_object() || !m.contains("l") || !m.contains("g")) malformed("\"M\" must be {\"l\": [3], \"g\": [3]}");
        nu.m.l = vector_from<3>(m["l"], "M.l");
        nu.m.g = vector_from<3>(m["g"], "M.g");
    } else {
        nu.m = LorentzAlgebraElement::from_matrix(matrix_from(doc["M_matrix"], "M_matrix"), tol);
    }
    return nu;
}

json point_to_json(const CoadjointPoint& nu) {
    return {{"M", {{"l", array_of(nu.m.l)}, {"g", array_of(nu.m.g)}}}, {"P", array_of(nu.p)}};
}

PoincareElement element_from_json(const json& doc, const ToleranceConfig& tol) {
    if (!doc.is_object()) malformed("group element must be a JSON object");
    if (doc.contains("involution")) {
        const auto& kind = doc["involution"];
        if (kind == "space") return involution(Involution::Space);
        if (kind == "time") return involution(Involution::Time);
        if (kind == "spacetime") return involution(Involution::SpaceTime);
        malformed("involution must be \"space\", \"time\" or \"spacetime\"");
    }
    if (!doc.contains("S") || !doc.contains("C")) malformed("group element needs \"S\" and \"C\" or \"involution\"");
    return {LorentzMatrix(matrix_from(doc["S"], "S"), tol), vector_from<4>(doc["C"], "C")};
}

json element_to_json(const PoincareElement& g) { return {{"S", matrix_to_json(g.s.matrix())}, {"C", array_of(g.c)}}; }

json report_to_json(const CoadjointPoint& nu, const OrbitClass& cls, const NormalFormResult* nf) {
    const auto inv = casimirs(nu);
    json report;
    report["class"] = std::string(to_string(cls.tag));
    report["casimirs"] = {inv.c1, inv.c2};
    report["marginal"] = cls.marginal;
    if (!cls.in_catalog()) {
        report["reason"] = std::string(to_string(*cls.reason));
        return report;
    }

    if (cls.mu) report["mu"] = *cls.mu;
    if (cls.beta) report["beta"] = *cls.beta;
    const auto labels = component_labels(nu, cls);
    json l = {{"energy", sign_string(labels.energy_sign)}};
    if (labels.helicity_sign) l["helicity"] = sign_string(*labels.helicity_sign);
    if (labels.spin_sign) l["spin"] = sign_string(*labels.spin_sign);
    report["labels"] = l;
    report["cvk_label"] = cvk_label(cls);

    if (nf) {
        report["representative"] = point_to_json(nf->representative);
        report["witness"] = element_to_json(nf->witness);
        report["residual"] = nf->residual;
        report["marginal"] = nf->cls.marginal;
    }
    return report;
}

json invariants_to_json(const CoadjointPoint& nu) {
    const auto inv = casimirs(nu);
    return {{"C1", inv.c1}, {"C2", inv.c2}, {"W", array_of(polarization(nu))}};
}

}  // namespace coadjoint::cli
