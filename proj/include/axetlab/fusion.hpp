#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/errors.hpp"
#include "axetlab/field.hpp"

namespace axetlab {

/// Subset of a fusion law's eigenvalues, as a bitmask over their indices.
using EigenSet = std::uint32_t;

/// A symmetric fusion law: an ordered eigenvalue list plus the star table.
template <FieldDescriptor Field>
class FusionLaw {
public:
    using Scalar = ScalarOf<Field>;

    FusionLaw(Field field, std::vector<Scalar> eigenvalues, std::string name = "custom")
        : field_(std::move(field)), eigenvalues_(std::move(eigenvalues)), name_(std::move(name))
    {
        if (eigenvalues_.empty() || eigenvalues_.size() > 32) {
            fail(ErrorKind::InvalidArgument, "fusion law needs 1..32 eigenvalues");
        }
        for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (eigenvalues_[i] == eigenvalues_[j]) {
                    fail(ErrorKind::DegenerateParameter, "repeated eigenvalue " + eigenvalues_[i].to_string());
                }
            }
        }
        star_.assign(size(), std::vector<EigenSet>(size(), 0));
    }

    const Field& field() const { return field_; }
    const std::string& name() const { return name_; }
    std::size_t size() const { return eigenvalues_.size(); }
    const std::vector<Scalar>& eigenvalues() const { return eigenvalues_; }
    const Scalar& eigenvalue(std::size_t i) const { return eigenvalues_.at(i); }

    std::optional<std::size_t> index_of(const Scalar& lambda) const
    {
        for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
            if (eigenvalues_[i] == lambda) {
                return i;
            }
        }
        return std::nullopt;
    }

    /// Sets lambda_i * lambda_j (and its mirror) to the given subset.
    void set_star(std::size_t i, std::size_t j, EigenSet set)
    {
        if (set >> size() != 0) {
            fail(ErrorKind::InvalidArgument, "star entry refers to an undeclared eigenvalue");
        }
        star_.at(i).at(j) = set;
        star_.at(j).at(i) = set;
    }

    EigenSet star(std::size_t i, std::size_t j) const { return star_.at(i).at(j); }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = 0; j < size(); ++j) {
                if (star_[i][j] != star_[j][i]) {
                    return false;
                }
            }
        }
        return true;
    }

    std::string set_to_string(EigenSet set) const
    {
        std::string out = "{";
        bool first = true;
        for (std::size_t k = 0; k < size(); ++k) {
            if (set & (EigenSet{1} << k)) {
                out += (first ? "" : ", ") + eigenvalues_[k].to_string();
                first = false;
            }
        }
        return out + "}";
    }

private:
    Field field_;
    std::vector<Scalar> eigenvalues_;
    std::string name_;
    std::vector<std::vector<EigenSet>> star_;
};

constexpr EigenSet bit(std::size_t i) { return EigenSet{1} << i; }

/// J(eta): eigenvalues {1, 0, eta}.
template <FieldDescriptor Field>
FusionLaw<Field> make_jordan(const Field& field, const ScalarOf<Field>& eta)
{
    if (eta.is_zero() || eta == field.one()) {
        fail(ErrorKind::DegenerateParameter, "J(eta) needs eta not in {0, 1}");
    }
    FusionLaw<Field> law(field, {field.one(), field.zero(), eta}, "J(" + eta.to_string() + ")");
    constexpr std::size_t one = 0, zero = 1, e = 2;
    law.set_star(one, one, bit(one));
    law.set_star(zero, zero, bit(zero));
    law.set_star(one, zero, 0);
    law.set_star(one, e, bit(e));
    law.set_star(zero, e, bit(e));
    law.set_star(e, e, bit(one) | bit(zero));
    return law;
}

/// M(alpha, beta): eigenvalues {1, 0, alpha, beta}.
template <FieldDescriptor Field>
FusionLaw<Field> make_monster(const Field& field, const ScalarOf<Field>& alpha, const ScalarOf<Field>& beta)
{
    if (alpha.is_zero() || beta.is_zero() || alpha == field.one() || beta == field.one()) {
        fail(ErrorKind::DegenerateParameter, "M(alpha, beta) needs alpha, beta not in {0, 1}");
    }
    if (alpha == beta) {
        fail(ErrorKind::DegenerateParameter, "M(alpha, beta) needs alpha != beta");
    }
    FusionLaw<Field> law(field, {field.one(), field.zero(), alpha, beta},
                         "M(" + alpha.to_string() + ", " + beta.to_string() + ")");
    constexpr std::size_t one = 0, zero = 1, a = 2, b = 3;
    law.set_star(one, one, bit(one));
    law.set_star(zero, zero, bit(zero));
    law.set_star(one, zero, 0);
    law.set_star(one, a, bit(a));
    law.set_star(zero, a, bit(a));
    law.set_star(a, a, bit(one) | bit(zero));
    law.set_star(one, b, bit(b));
    law.set_star(zero, b, bit(b));
    law.set_star(a, b, bit(b));
    law.set_star(b, b, bit(one) | bit(zero) | bit(a));
    return law;
}

/// Seress: 0 is an eigenvalue, lambda * 0 = {lambda} for lambda != 1, and 1 * 0 is empty.
template <FieldDescriptor Field>
bool is_seress(const FusionLaw<Field>& law)
{
    auto zero = law.index_of(law.field().zero());
    if (!zero) {
        return false;
    }
    for (std::size_t i = 0; i < law.size(); ++i) {
        EigenSet expected = law.eigenvalue(i) == law.field().one() ? 0 : bit(i);
        if (law.star(i, *zero) != expected) {
            return false;
        }
    }
    return true;
}

/// C2-grading: odd[i] is true when eigenvalue i maps to the nontrivial element s.
struct Grading {
    std::vector<bool> odd;

    bool is_odd(std::size_t i) const { return odd.at(i); }
    bool any_odd() const
    {
        for (bool b : odd) {
            if (b) {
                return true;
            }
        }
        return false;
    }
};

template <FieldDescriptor Field>
bool is_grading(const FusionLaw<Field>& law, const Grading& g)
{
    if (g.odd.size() != law.size()) {
        return false;
    }
    for (std::size_t i = 0; i < law.size(); ++i) {
        for (std::size_t j = 0; j < law.size(); ++j) {
            bool parity = g.odd[i] != g.odd[j];
            for (std::size_t k = 0; k < law.size(); ++k) {
                if ((law.star(i, j) & bit(k)) && g.odd[k] != parity) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Exhaustive search over parity assignments with xi(1) = e and a nonempty
/// odd part. The assignment making only the last eigenvalue odd is tried
/// first; after that, masks are tried in increasing order.
template <FieldDescriptor Field>
std::optional<Grading> find_c2_grading(const FusionLaw<Field>& law)
{
    std::size_t n = law.size();
    auto one = law.index_of(law.field().one());
    auto from_mask = [n](std::uint32_t mask) {
        Grading g;
        g.odd.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            g.odd[i] = (mask >> i) & 1U;
        }
        return g;
    };
    auto admissible = [&](std::uint32_t mask) {
        if (mask == 0) {
            return false;
        }
        if (one && ((mask >> *one) & 1U)) {
            return false;
        }
        return is_grading(law, from_mask(mask));
    };
    std::uint32_t preferred = std::uint32_t{1} << (n - 1);
    if (admissible(preferred)) {
        return from_mask(preferred);
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (admissible(static_cast<std::uint32_t>(mask))) {
            return from_mask(static_cast<std::uint32_t>(mask));
        }
    }
    return std::nullopt;
}

} // namespace axetlab
