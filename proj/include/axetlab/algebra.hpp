#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/errors.hpp"
#include "axetlab/field.hpp"
#include "axetlab/linalg.hpp"

namespace axetlab {

/// Finite-dimensional commutative algebra given by structure constants:
/// e_i e_j = sum_k products[i][j][k] e_k. Commutativity holds by
/// construction since set_product writes both (i,j) and (j,i).
template <FieldDescriptor Field>
class StructureAlgebra {
public:
    using Scalar = ScalarOf<Field>;
    using Element = Vector<Scalar>;
    using LinearMap = Matrix<Scalar>;

    StructureAlgebra(Field field, std::vector<std::string> basis_names)
        : field_(std::move(field)), names_(std::move(basis_names))
    {
        if (names_.empty()) {
            fail(ErrorKind::InvalidArgument, "algebra dimension must be positive");
        }
        products_.assign(dim(), std::vector<Element>(dim(), zero_element()));
    }

    const Field& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::string& basis_name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    Element zero_element() const { return Element(dim(), field_.zero()); }

    Element basis(std::size_t i) const
    {
        Element e = zero_element();
        e.at(i) = field_.one();
        return e;
    }

    Element basis(std::string_view name) const
    {
        auto i = index_of(name);
        if (!i) {
            fail(ErrorKind::UnknownSymbol, "no basis element '" + std::string(name) + "'");
        }
        return basis(*i);
    }

    void set_product(std::size_t i, std::size_t j, Element value)
    {
        check(value);
        products_.at(i).at(j) = value;
        products_.at(j).at(i) = std::move(value);
    }

    const Element& product(std::size_t i, std::size_t j) const { return products_.at(i).at(j); }

    /// Bilinear extension of the table.
    Element multiply(const Element& x, const Element& y) const
    {
        check(x);
        check(y);
        Element out = zero_element();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) {
                    continue;
                }
                Scalar c = x[i] * y[j];
                const Element& p = products_[i][j];
                for (std::size_t k = 0; k < dim(); ++k) {
                    if (!p[k].is_zero()) {
                        out[k] = out[k] + c * p[k];
                    }
                }
            }
        }
        return out;
    }

    /// Matrix of ad_a : x -> a x.
    LinearMap adjoint(const Element& a) const
    {
        std::vector<Element> columns;
        columns.reserve(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            columns.push_back(multiply(a, basis(j)));
        }
        return LinearMap::from_columns(columns, dim(), field_.zero());
    }

    /// Basis of ker(m - lambda id), in reduced echelon form.
    std::vector<Element> eigenspace(const LinearMap& m, const Scalar& lambda) const
    {
        if (m.rows() != dim() || m.cols() != dim()) {
            fail(ErrorKind::DimensionMismatch, "linear map does not match algebra dimension");
        }
        LinearMap shifted = m;
        for (std::size_t i = 0; i < dim(); ++i) {
            shifted(i, i) = shifted(i, i) - lambda;
        }
        return span_basis(field_, kernel(field_, shifted), dim());
    }

    std::vector<Element> span(const std::vector<Element>& vectors) const { return span_basis(field_, vectors, dim()); }

    /// Basis of the smallest subalgebra containing gens.
    std::vector<Element> subalgebra_closure(const std::vector<Element>& gens) const
    {
        if (gens.empty()) {
            fail(ErrorKind::InvalidArgument, "closure of an empty generator list");
        }
        std::vector<Element> basis_now = span(gens);
        for (;;) {
            std::vector<Element> grown = basis_now;
            for (std::size_t i = 0; i < basis_now.size(); ++i) {
                for (std::size_t j = i; j < basis_now.size(); ++j) {
                    grown.push_back(multiply(basis_now[i], basis_now[j]));
                }
            }
            std::vector<Element> next = span(grown);
            if (next.size() == basis_now.size()) {
                return next;
            }
            basis_now = std::move(next);
        }
    }

    /// The unique e with e b_i = b_i for every basis vector, if any.
    std::optional<Element> find_identity() const
    {
        std::size_t n = dim();
        // Unknown e; equation block i: sum_j e_j products[j][i] = e_i.
        LinearMap system(n * n, n, field_.zero());
        Element rhs(n * n, field_.zero());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < n; ++j) {
                    system(i * n + k, j) = products_[j][i][k];
                }
                rhs[i * n + k] = (i == k) ? field_.one() : field_.zero();
            }
        }
        auto sol = solve(field_, system, rhs);
        if (!sol) {
            return std::nullopt;
        }
        std::vector<Element> columns;
        for (std::size_t j = 0; j < n; ++j) {
            columns.push_back(system.column(j));
        }
        if (rank(field_, columns, n * n) < n) {
            return std::nullopt;
        }
        return sol;
    }

    /// Span of gens closed under multiplication by every basis vector.
    std::vector<Element> ideal_closure(const std::vector<Element>& gens) const
    {
        std::vector<Element> current = span(gens);
        for (;;) {
            std::vector<Element> grown = current;
            for (const auto& v : current) {
                for (std::size_t i = 0; i < dim(); ++i) {
                    grown.push_back(multiply(v, basis(i)));
                }
            }
            std::vector<Element> next = span(grown);
            if (next.size() == current.size()) {
                return next;
            }
            current = std::move(next);
        }
    }

    friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b)
    {
        return a.field_ == b.field_ && a.names_ == b.names_ && a.products_ == b.products_;
    }

    void check(const Element& x) const
    {
        if (x.size() != dim()) {
            fail(ErrorKind::DimensionMismatch,
                 "element of length " + std::to_string(x.size()) + " in algebra of dimension " + std::to_string(dim()));
        }
    }

private:
    Field field_;
    std::vector<std::string> names_;
    std::vector<std::vector<Element>> products_;
};

/// Quotient by the ideal generated by ideal_gens. The complement basis keeps
/// the earliest original basis vectors that stay independent modulo the
/// ideal; they keep their names.
template <FieldDescriptor Field>
StructureAlgebra<Field> quotient(const StructureAlgebra<Field>& a, const std::vector<typename StructureAlgebra<Field>::Element>& ideal_gens)
{
    using Element = typename StructureAlgebra<Field>::Element;
    const Field& field = a.field();
    if (ideal_gens.empty()) {
        fail(ErrorKind::InvalidArgument, "quotient needs at least one ideal generator");
    }
    std::vector<Element> ideal = a.ideal_closure(ideal_gens);
    if (ideal.size() >= a.dim()) {
        fail(ErrorKind::NotProperIdeal, "ideal is the whole algebra");
    }
    std::vector<std::size_t> kept;
    std::vector<Element> spanning = ideal;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<Element> trial = spanning;
        trial.push_back(a.basis(i));
        if (rank(field, trial, a.dim()) > spanning.size()) {
            spanning.push_back(a.basis(i));
            kept.push_back(i);
        }
    }
    // spanning = ideal basis followed by kept basis vectors; coordinates of a
    // vector on the kept part give its image in the quotient.
    auto reduce = [&](const Element& v) {
        auto c = coordinates(field, spanning, v);
        Element out(kept.size(), field.zero());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            out[k] = (*c)[ideal.size() + k];
        }
        return out;
    };
    std::vector<std::string> names;
    for (auto i : kept) {
        names.push_back(a.basis_name(i));
    }
    StructureAlgebra<Field> q(field, names);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = i; j < kept.size(); ++j) {
            q.set_product(i, j, reduce(a.product(kept[i], kept[j])));
        }
    }
    return q;
}

/// A ⊕ <1>: appends a basis element acting as a two-sided identity.
template <FieldDescriptor Field>
StructureAlgebra<Field> adjoin_identity(const StructureAlgebra<Field>& a, const std::string& name = "one")
{
    std::vector<std::string> names = a.basis_names();
    names.push_back(name);
    StructureAlgebra<Field> out(a.field(), names);
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto p = a.product(i, j);
            p.push_back(a.field().zero());
            out.set_product(i, j, std::move(p));
        }
        out.set_product(i, n, out.basis(i));
    }
    out.set_product(n, n, out.basis(n));
    return out;
}

/// True iff m : A -> B is bijective and m(e_i e_j) = m(e_i) m(e_j).
template <FieldDescriptor Field>
bool is_isomorphism(const StructureAlgebra<Field>& a, const StructureAlgebra<Field>& b,
                    const typename StructureAlgebra<Field>::LinearMap& m)
{
    if (a.dim() != b.dim() || m.rows() != b.dim() || m.cols() != a.dim()) {
        fail(ErrorKind::DimensionMismatch, "isomorphism check needs equal dimensions");
    }
    if (!inverse(a.field(), m)) {
        return false;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            auto lhs = m.apply(a.product(i, j));
            auto rhs = b.multiply(m.column(i), m.column(j));
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

template <FieldDescriptor Field>
bool is_automorphism(const StructureAlgebra<Field>& a, const typename StructureAlgebra<Field>::LinearMap& m)
{
    return is_isomorphism(a, a, m);
}

/// The linear map sending domain[i] (a basis of A) to images[i].
template <FieldDescriptor Field>
typename StructureAlgebra<Field>::LinearMap map_from_images(const Field& field,
                                                           const std::vector<Vector<ScalarOf<Field>>>& domain,
                                                           const std::vector<Vector<ScalarOf<Field>>>& images)
{
    using S = ScalarOf<Field>;
    if (domain.empty() || domain.size() != images.size()) {
        fail(ErrorKind::DimensionMismatch, "need one image per domain vector");
    }
    std::size_t n = domain.front().size();
    auto d = Matrix<S>::from_columns(domain, n, field.zero());
    auto dinv = inverse(field, d);
    if (!dinv) {
        fail(ErrorKind::InvalidArgument, "domain vectors are not a basis");
    }
    auto im = Matrix<S>::from_columns(images, images.front().size(), field.zero());
    return im * *dinv;
}

/// Restriction of A to the subalgebra spanned by `basis` (assumed closed),
/// with structure constants expressed in that basis.
template <FieldDescriptor Field>
StructureAlgebra<Field> restrict_to(const StructureAlgebra<Field>& a,
                                    const std::vector<typename StructureAlgebra<Field>::Element>& basis,
                                    std::vector<std::string> names = {})
{
    if (names.empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            names.push_back("v" + std::to_string(i + 1));
        }
    }
    StructureAlgebra<Field> sub(a.field(), names);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            auto c = coordinates(a.field(), basis, a.multiply(basis[i], basis[j]));
            if (!c) {
                fail(ErrorKind::InvalidArgument, "span is not closed under multiplication");
            }
            sub.set_product(i, j, std::move(*c));
        }
    }
    return sub;
}

/// Given generators of A and candidate images in B, extends the assignment
/// along the products that build a spanning set of A and returns the
/// resulting linear map, or none if the images are inconsistent.
template <FieldDescriptor Field>
std::optional<typename StructureAlgebra<Field>::LinearMap>
extend_from_generators(const StructureAlgebra<Field>& a, const std::vector<typename StructureAlgebra<Field>::Element>& gens,
                       const StructureAlgebra<Field>& b, const std::vector<typename StructureAlgebra<Field>::Element>& images)
{
    using Element = typename StructureAlgebra<Field>::Element;
    const Field& field = a.field();
    if (a.dim() != b.dim() || gens.size() != images.size()) {
        return std::nullopt;
    }
    std::vector<Element> src;
    std::vector<Element> dst;
    auto try_add = [&](const Element& s, const Element& d) {
        std::vector<Element> trial = src;
        trial.push_back(s);
        if (rank(field, trial, a.dim()) > src.size()) {
            src.push_back(s);
            dst.push_back(d);
        }
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        try_add(gens[i], images[i]);
    }
    for (std::size_t round = 0; src.size() < a.dim() && round <= a.dim(); ++round) {
        std::size_t before = src.size();
        for (std::size_t i = 0; i < before && src.size() < a.dim(); ++i) {
            for (std::size_t j = i; j < before && src.size() < a.dim(); ++j) {
                try_add(a.multiply(src[i], src[j]), b.multiply(dst[i], dst[j]));
            }
        }
        if (src.size() == before) {
            break;
        }
    }
    if (src.size() < a.dim()) {
        return std::nullopt;
    }
    std::vector<Element> dst_check = dst;
    if (rank(field, dst_check, b.dim()) < b.dim()) {
        return std::nullopt;
    }
    return map_from_images(field, src, dst);
}

} // namespace axetlab
