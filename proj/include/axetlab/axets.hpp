#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/algebra.hpp"
#include "axetlab/axes.hpp"
#include "axetlab/errors.hpp"
#include "axetlab/fusion.hpp"

namespace axetlab {

/// A finite C2-axet given by its involution action: tau[p][q] is the index
/// of point q moved by the involution attached to point p.
struct AxetAction {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> tau;

    std::size_t size() const { return labels.size(); }

    bool is_trivial(std::size_t p) const
    {
        for (std::size_t q = 0; q < size(); ++q) {
            if (tau[p][q] != q) {
                return false;
            }
        }
        return true;
    }
};

using PointSet = std::set<std::size_t>;

/// X(n): points a_i, i mod n, with a_i^{tau_j} = a_{2j-i}.
inline AxetAction make_x(std::size_t n)
{
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "X(n) needs n >= 1");
    }
    AxetAction x;
    x.tau.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        x.labels.push_back("a" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            x.tau[j][i] = (2 * j + 2 * n - i) % n;
        }
    }
    return x;
}

/// Index model of X'(k+2k): X(4k) with a_{2j} identified with a_{2j+2k}.
/// Even representatives are 0, 2, ..., 2k-2; odd ones are 1, 3, ..., 4k-1.
class SkewModel {
public:
    explicit SkewModel(std::size_t k) : k_(k)
    {
        if (k == 0) {
            fail(ErrorKind::InvalidArgument, "X'(k+2k) needs k >= 1");
        }
        for (std::size_t i = 0; i < 2 * k; i += 2) {
            reps_.push_back(i);
        }
        for (std::size_t i = 1; i < 4 * k; i += 2) {
            reps_.push_back(i);
        }
    }

    std::size_t k() const { return k_; }
    std::size_t size() const { return reps_.size(); }

    /// Point index of a_i for any integer i.
    std::size_t index_of(long long i) const
    {
        long long m = static_cast<long long>(4 * k_);
        long long r = ((i % m) + m) % m;
        if (r % 2 == 0) {
            r %= static_cast<long long>(2 * k_);
        }
        auto it = std::find(reps_.begin(), reps_.end(), static_cast<std::size_t>(r));
        return static_cast<std::size_t>(it - reps_.begin());
    }

    std::size_t representative(std::size_t index) const { return reps_.at(index); }

    AxetAction action() const
    {
        AxetAction x;
        std::size_t n = size();
        x.tau.assign(n, std::vector<std::size_t>(n));
        for (std::size_t p = 0; p < n; ++p) {
            x.labels.push_back("a" + std::to_string(reps_[p]));
            for (std::size_t q = 0; q < n; ++q) {
                long long j = static_cast<long long>(reps_[p]);
                long long i = static_cast<long long>(reps_[q]);
                x.tau[p][q] = index_of(2 * j - i);
            }
        }
        return x;
    }

private:
    std::size_t k_;
    std::vector<std::size_t> reps_;
};

inline AxetAction make_xskew(std::size_t k) { return SkewModel(k).action(); }

/// Smallest subset containing z that is invariant under the involutions of
/// its own points.
inline PointSet closure(const AxetAction& x, const PointSet& z)
{
    if (z.empty()) {
        fail(ErrorKind::InvalidArgument, "closure of an empty set");
    }
    PointSet current = z;
    for (;;) {
        PointSet next = current;
        for (auto p : current) {
            for (auto q : current) {
                next.insert(x.tau.at(p).at(q));
            }
        }
        if (next.size() == current.size()) {
            return current;
        }
        current = std::move(next);
    }
}

/// The action restricted to a closed subset, relabelled in increasing order.
inline AxetAction restrict_action(const AxetAction& x, const PointSet& subset)
{
    std::vector<std::size_t> order(subset.begin(), subset.end());
    auto pos = [&](std::size_t p) {
        auto it = std::find(order.begin(), order.end(), p);
        if (it == order.end()) {
            fail(ErrorKind::InvalidArgument, "subset is not closed");
        }
        return static_cast<std::size_t>(it - order.begin());
    };
    AxetAction out;
    out.tau.assign(order.size(), std::vector<std::size_t>(order.size()));
    for (std::size_t p = 0; p < order.size(); ++p) {
        out.labels.push_back(x.labels.at(order[p]));
        for (std::size_t q = 0; q < order.size(); ++q) {
            out.tau[p][q] = pos(x.tau[order[p]][order[q]]);
        }
    }
    return out;
}

struct Shape {
    enum class Kind { X, Skew, Unknown };
    Kind kind = Kind::Unknown;
    std::size_t param = 0;  // n for X(n), k for X'(k+2k)

    std::string to_string() const
    {
        switch (kind) {
        case Kind::X: return "X(" + std::to_string(param) + ")";
        case Kind::Skew: return "Xskew(" + std::to_string(param) + ")";
        case Kind::Unknown: break;
        }
        return "unknown";
    }

    /// The usual printed name, X'(k+2k) for skew shapes.
    std::string display() const
    {
        if (kind == Kind::Skew) {
            return "X'(" + std::to_string(param) + "+" + std::to_string(2 * param) + ")";
        }
        return to_string();
    }

    friend bool operator==(const Shape&, const Shape&) = default;
};

namespace detail {

/// Tries to extend g1 -> m1, g2 -> m2 to an action-preserving bijection.
inline bool extend_isomorphism(const AxetAction& x, const AxetAction& model, const std::vector<std::size_t>& gens,
                               const std::vector<std::size_t>& images)
{
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(x.size(), unset);
    std::vector<std::size_t> inv(model.size(), unset);
    auto assign = [&](std::size_t p, std::size_t m) {
        if (phi[p] == unset && inv[m] == unset) {
            phi[p] = m;
            inv[m] = p;
            return true;
        }
        return phi[p] == m;
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!assign(gens[i], images[i])) {
            return false;
        }
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t p = 0; p < x.size(); ++p) {
            if (phi[p] == unset) {
                continue;
            }
            for (std::size_t q = 0; q < x.size(); ++q) {
                if (phi[q] == unset) {
                    continue;
                }
                std::size_t r = x.tau[p][q];
                bool was_unset = phi[r] == unset;
                if (!assign(r, model.tau[phi[p]][phi[q]])) {
                    return false;
                }
                grew = grew || was_unset;
            }
        }
    }
    return std::find(phi.begin(), phi.end(), unset) == phi.end();
}

inline std::optional<std::vector<std::size_t>> generating_set(const AxetAction& x)
{
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (closure(x, {p}).size() == x.size()) {
            return std::vector<std::size_t>{p};
        }
    }
    for (std::size_t p = 0; p < x.size(); ++p) {
        for (std::size_t q = p + 1; q < x.size(); ++q) {
            if (closure(x, {p, q}).size() == x.size()) {
                return std::vector<std::size_t>{p, q};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// True iff some bijection x -> model intertwines the two actions.
inline bool isomorphic(const AxetAction& x, const AxetAction& model)
{
    if (x.size() != model.size()) {
        return false;
    }
    auto gens = detail::generating_set(x);
    if (!gens) {
        fail(ErrorKind::InvalidArgument, "isomorphism search needs a 2-generated axet");
    }
    std::size_t n = model.size();
    if (gens->size() == 1) {
        for (std::size_t m = 0; m < n; ++m) {
            if (detail::extend_isomorphism(x, model, *gens, {m})) {
                return true;
            }
        }
        return false;
    }
    for (std::size_t m1 = 0; m1 < n; ++m1) {
        for (std::size_t m2 = 0; m2 < n; ++m2) {
            if (m1 != m2 && detail::extend_isomorphism(x, model, *gens, {m1, m2})) {
                return true;
            }
        }
    }
    return false;
}

/// Compares against X(n) (n = |X|) and X'(k+2k) (3k = |X|). Skew models are
/// tried first, so a coincidence would report the skew shape.
inline Shape classify_shape(const AxetAction& x, std::size_t max_points = 24)
{
    std::size_t n = x.size();
    if (n > max_points) {
        fail(ErrorKind::TooLarge, std::to_string(n) + " points exceed the bound " + std::to_string(max_points));
    }
    if (!detail::generating_set(x)) {
        return {};
    }
    if (n % 3 == 0 && isomorphic(x, make_xskew(n / 3))) {
        return {Shape::Kind::Skew, n / 3};
    }
    if (isomorphic(x, make_x(n))) {
        return {Shape::Kind::X, n};
    }
    return {};
}

/// Three points, one involution swapping the other two, the other two trivial.
inline bool has_skew_1_2_pattern(const AxetAction& x)
{
    if (x.size() != 3) {
        return false;
    }
    std::size_t nontrivial = 0;
    for (std::size_t p = 0; p < 3; ++p) {
        if (x.is_trivial(p)) {
            continue;
        }
        ++nontrivial;
        std::size_t q = (p + 1) % 3;
        std::size_t r = (p + 2) % 3;
        if (x.tau[p][p] != p || x.tau[p][q] != r || x.tau[p][r] != q) {
            return false;
        }
    }
    return nontrivial == 1;
}

/// {a_0, a_k, a_{-k}} inside X'(k+2k), as point indices of SkewModel(k).
inline PointSet odd_subaxet(std::size_t k)
{
    if (k % 2 == 0) {
        fail(ErrorKind::EvenK, "odd_subaxet needs odd k, got " + std::to_string(k));
    }
    SkewModel model(k);
    auto kk = static_cast<long long>(k);
    return {model.index_of(0), model.index_of(kk), model.index_of(-kk)};
}

/// Axis points inside an algebra together with their Miyamoto action.
template <FieldDescriptor Field>
struct RealizedAxet {
    using Element = typename StructureAlgebra<Field>::Element;

    std::vector<Element> points;
    std::vector<std::size_t> law_of;  // index into the laws passed to realize_axet
    std::vector<MiyamotoMap<Field>> involutions;
    AxetAction action;
};

/// Orbit of the given axes under all Miyamoto involutions that appear. New
/// points inherit the fusion law of the point they are an image of.
template <FieldDescriptor Field>
RealizedAxet<Field> realize_axet(const StructureAlgebra<Field>& alg,
                                 const std::vector<typename StructureAlgebra<Field>::Element>& axes,
                                 const std::vector<FusionLaw<Field>>& laws, std::size_t max_points = 24,
                                 std::vector<std::string> names = {})
{
    using Element = typename StructureAlgebra<Field>::Element;
    if (axes.empty() || axes.size() != laws.size()) {
        fail(ErrorKind::InvalidArgument, "need one fusion law per axis");
    }
    RealizedAxet<Field> out;
    auto find = [&](const Element& v) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < out.points.size(); ++i) {
            if (out.points[i] == v) {
                return i;
            }
        }
        return std::nullopt;
    };
    auto add_point = [&](const Element& v, std::size_t law, std::string name) {
        if (out.points.size() >= max_points) {
            fail(ErrorKind::NotClosedWithinBound, "axet exceeds " + std::to_string(max_points) + " points");
        }
        out.points.push_back(v);
        out.law_of.push_back(law);
        out.involutions.push_back(miyamoto(alg, v, laws[law]));
        out.action.labels.push_back(std::move(name));
    };
    for (std::size_t i = 0; i < axes.size(); ++i) {
        auto report = verify_axis(alg, axes[i], laws[i]);
        if (!report.passes()) {
            fail(ErrorKind::NotAnAxis, "generator " + std::to_string(i + 1) + " fails " + report.first_failure());
        }
        if (!find(axes[i])) {
            add_point(axes[i], i, i < names.size() ? names[i] : "p" + std::to_string(out.points.size()));
        }
    }
    for (std::size_t done = 0; done != out.points.size();) {
        done = out.points.size();
        for (std::size_t p = 0; p < out.points.size(); ++p) {
            for (std::size_t q = 0; q < out.points.size(); ++q) {
                Element image = out.involutions[p].map.apply(out.points[q]);
                if (!find(image)) {
                    std::string name = out.action.labels[q] + "^" + out.action.labels[p];
                    add_point(image, out.law_of[q], name);
                }
            }
        }
    }
    std::size_t n = out.points.size();
    out.action.tau.assign(n, std::vector<std::size_t>(n));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            out.action.tau[p][q] = *find(out.involutions[p].map.apply(out.points[q]));
        }
    }
    return out;
}

} // namespace axetlab
