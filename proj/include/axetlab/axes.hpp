#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/algebra.hpp"
#include "axetlab/errors.hpp"
#include "axetlab/fusion.hpp"
#include "axetlab/linalg.hpp"

namespace axetlab {

/// Diagnostic of axioms A1-A4 for a candidate axis.
template <FieldDescriptor Field>
struct AxisReport {
    using Element = typename StructureAlgebra<Field>::Element;

    struct Violation {
        std::size_t lambda;  // eigenvalue indices into the law
        std::size_t mu;
        Element witness;     // the offending product
    };

    bool is_idempotent = false;                  // A1
    bool spectrum_ok = false;                    // A2
    bool fusion_ok = false;                      // A3, only meaningful when spectrum_ok
    bool is_primitive = false;                   // A4
    std::vector<std::vector<Element>> eigenspace_bases;  // indexed like law.eigenvalues()
    std::vector<Violation> fusion_violations;

    bool passes() const { return is_idempotent && spectrum_ok && fusion_ok && is_primitive; }

    std::size_t eigenspace_dim(std::size_t i) const { return eigenspace_bases.at(i).size(); }

    /// First failing axiom, or empty when all pass.
    std::string first_failure() const
    {
        if (!is_idempotent) {
            return "A1 (not idempotent)";
        }
        if (!spectrum_ok) {
            return "A2 (not semisimple over the law)";
        }
        if (!fusion_ok) {
            return "A3 (fusion rule violated)";
        }
        if (!is_primitive) {
            return "A4 (not primitive)";
        }
        return {};
    }
};

template <FieldDescriptor Field>
AxisReport<Field> verify_axis(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& a,
                              const FusionLaw<Field>& law)
{
    using Element = typename StructureAlgebra<Field>::Element;
    const Field& field = alg.field();
    AxisReport<Field> report;
    report.is_idempotent = alg.multiply(a, a) == a;

    auto ad = alg.adjoint(a);
    std::size_t total = 0;
    for (const auto& lambda : law.eigenvalues()) {
        report.eigenspace_bases.push_back(alg.eigenspace(ad, lambda));
        total += report.eigenspace_bases.back().size();
    }
    report.spectrum_ok = total == alg.dim();

    auto one = law.index_of(field.one());
    report.is_primitive = one && report.eigenspace_bases[*one].size() == 1;

    if (!report.spectrum_ok) {
        return report;
    }

    std::vector<Element> eigenbasis;
    std::vector<std::size_t> label;
    for (std::size_t i = 0; i < law.size(); ++i) {
        for (const auto& v : report.eigenspace_bases[i]) {
            eigenbasis.push_back(v);
            label.push_back(i);
        }
    }
    auto to_eigen = *inverse(field, Matrix<ScalarOf<Field>>::from_columns(eigenbasis, alg.dim(), field.zero()));

    for (std::size_t i = 0; i < law.size(); ++i) {
        for (std::size_t j = i; j < law.size(); ++j) {
            EigenSet allowed = law.star(i, j);
            for (const auto& u : report.eigenspace_bases[i]) {
                for (const auto& v : report.eigenspace_bases[j]) {
                    Element p = alg.multiply(u, v);
                    Element c = to_eigen.apply(p);
                    for (std::size_t k = 0; k < c.size(); ++k) {
                        if (!c[k].is_zero() && !(allowed & bit(label[k]))) {
                            report.fusion_violations.push_back({i, j, p});
                            break;
                        }
                    }
                }
            }
        }
    }
    report.fusion_ok = report.fusion_violations.empty();
    return report;
}

/// Eigenspace decomposition with respect to a semisimple element. Caches
/// the change of basis so repeated component queries are cheap.
template <FieldDescriptor Field>
class EigenDecomposition {
public:
    using Element = typename StructureAlgebra<Field>::Element;
    using Scalar = ScalarOf<Field>;

    EigenDecomposition(const StructureAlgebra<Field>& alg, const Element& axis, const FusionLaw<Field>& law)
        : field_(alg.field()), law_(law), axis_(axis)
    {
        auto ad = alg.adjoint(axis);
        std::vector<Element> eigenbasis;
        for (std::size_t i = 0; i < law.size(); ++i) {
            auto space = alg.eigenspace(ad, law.eigenvalue(i));
            if (law.eigenvalue(i) == field_.one() && space.size() == 1) {
                // A primitive axis spans its own 1-space; use it directly so
                // the coordinate on it is the projection.
                space = {axis};
            }
            for (auto& v : space) {
                eigenbasis.push_back(v);
                labels_.push_back(i);
            }
        }
        if (eigenbasis.size() != alg.dim()) {
            fail(ErrorKind::NotSemisimple, "eigenspaces span " + std::to_string(eigenbasis.size()) + " of " +
                                               std::to_string(alg.dim()) + " dimensions");
        }
        eigenbasis_ = eigenbasis;
        to_eigen_ = *inverse(field_, Matrix<Scalar>::from_columns(eigenbasis, alg.dim(), field_.zero()));
        std::size_t ones = 0;
        for (auto l : labels_) {
            ones += law.eigenvalue(l) == field_.one() ? 1 : 0;
        }
        primitive_ = ones == 1;
    }

    bool primitive() const { return primitive_; }
    const FusionLaw<Field>& law() const { return law_; }

    /// Component of v in the eigenspace of law eigenvalue index i.
    Element component(const Element& v, std::size_t i) const
    {
        Element c = to_eigen_.apply(v);
        Element out(v.size(), field_.zero());
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (labels_[k] == i && !c[k].is_zero()) {
                out = add(std::move(out), scale(c[k], eigenbasis_[k]));
            }
        }
        return out;
    }

    std::vector<Element> components(const Element& v) const
    {
        std::vector<Element> parts;
        for (std::size_t i = 0; i < law_.size(); ++i) {
            parts.push_back(component(v, i));
        }
        return parts;
    }

    /// Coefficient of the axis in the decomposition of v.
    Scalar projection(const Element& v) const
    {
        if (!primitive_) {
            fail(ErrorKind::NotPrimitive, "projection needs a primitive axis");
        }
        Element c = to_eigen_.apply(v);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (law_.eigenvalue(labels_[k]) == field_.one()) {
                return c[k];
            }
        }
        return field_.zero();
    }

    /// v -> sum over eigenspaces of sign(i) * component_i(v).
    Matrix<Scalar> signed_map(const std::vector<bool>& negate) const
    {
        std::size_t n = eigenbasis_.size();
        Matrix<Scalar> diag(n, n, field_.zero());
        for (std::size_t k = 0; k < n; ++k) {
            diag(k, k) = negate.at(labels_[k]) ? -field_.one() : field_.one();
        }
        auto from_eigen = Matrix<Scalar>::from_columns(eigenbasis_, n, field_.zero());
        return from_eigen * diag * to_eigen_;
    }

private:
    Field field_;
    FusionLaw<Field> law_;
    Element axis_;
    std::vector<Element> eigenbasis_;
    std::vector<std::size_t> labels_;
    Matrix<Scalar> to_eigen_;
    bool primitive_ = false;
};

template <FieldDescriptor Field>
ScalarOf<Field> projection(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& a,
                           const FusionLaw<Field>& law, const typename StructureAlgebra<Field>::Element& v)
{
    return EigenDecomposition<Field>(alg, a, law).projection(v);
}

template <FieldDescriptor Field>
struct MiyamotoMap {
    typename StructureAlgebra<Field>::LinearMap map;
    typename StructureAlgebra<Field>::Element axis;

    bool is_identity(const Field& field) const { return map == Matrix<ScalarOf<Field>>::identity(field, map.rows()); }
};

/// tau_a: +1 on even eigenspaces, -1 on odd ones.
template <FieldDescriptor Field>
MiyamotoMap<Field> miyamoto(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& a,
                            const FusionLaw<Field>& law, const std::optional<Grading>& grading)
{
    if (!grading) {
        fail(ErrorKind::NoGrading, "fusion law " + law.name() + " has no C2-grading");
    }
    EigenDecomposition<Field> dec(alg, a, law);
    return {dec.signed_map(grading->odd), a};
}

template <FieldDescriptor Field>
MiyamotoMap<Field> miyamoto(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& a,
                            const FusionLaw<Field>& law)
{
    return miyamoto(alg, a, law, find_c2_grading(law));
}

/// Membership in the sum of the listed eigenspaces of a semisimple element
/// a: the product of (ad_a - lambda) over the set annihilates v.
template <FieldDescriptor Field>
bool in_eigenspace_sum(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& a,
                       const std::vector<ScalarOf<Field>>& eigenvalues, typename StructureAlgebra<Field>::Element v)
{
    for (const auto& lambda : eigenvalues) {
        auto av = alg.multiply(a, v);
        v = sub(std::move(av), scale(lambda, v));
    }
    return is_zero_vector(v);
}

/// Checks a(xu) = (ax)u for every basis vector x and every u in a basis of
/// A_0(a) together with a itself. Returns the number of failing pairs.
template <FieldDescriptor Field>
std::size_t seress_failures(const StructureAlgebra<Field>& alg, const typename StructureAlgebra<Field>::Element& a)
{
    auto us = alg.eigenspace(alg.adjoint(a), alg.field().zero());
    us.push_back(a);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        auto x = alg.basis(i);
        auto ax = alg.multiply(a, x);
        for (const auto& u : us) {
            if (alg.multiply(a, alg.multiply(x, u)) != alg.multiply(ax, u)) {
                ++failures;
            }
        }
    }
    return failures;
}

template <FieldDescriptor Field>
std::string describe_report(const StructureAlgebra<Field>& alg, const AxisReport<Field>& r, const FusionLaw<Field>& law)
{
    std::ostringstream os;
    os << "A1 " << (r.is_idempotent ? "ok" : "FAIL") << ", A2 " << (r.spectrum_ok ? "ok" : "FAIL") << ", A3 "
       << (r.spectrum_ok ? (r.fusion_ok ? "ok" : "FAIL") : "n/a") << ", A4 " << (r.is_primitive ? "ok" : "FAIL")
       << "; dims";
    for (std::size_t i = 0; i < law.size(); ++i) {
        os << " " << law.eigenvalue(i).to_string() << ":" << r.eigenspace_dim(i);
    }
    (void)alg;
    return os.str();
}

} // namespace axetlab
