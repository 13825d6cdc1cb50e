#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "axetlab/prime_field.hpp"
#include "axetlab/rational.hpp"
#include "axetlab/rational_function.hpp"

namespace axetlab {

/// A field descriptor hands out its own zero/one and embeds Q (when the
/// characteristic allows it). Values themselves are plain regular types.
template <class F>
concept FieldDescriptor = requires(const F& f, const typename F::value_type& x, const Rational& q) {
    typename F::value_type;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_rational(q) } -> std::same_as<typename F::value_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.describe() } -> std::convertible_to<std::string>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x + x } -> std::convertible_to<typename F::value_type>;
    { x - x } -> std::convertible_to<typename F::value_type>;
    { x * x } -> std::convertible_to<typename F::value_type>;
    { x / x } -> std::convertible_to<typename F::value_type>;
    { -x } -> std::convertible_to<typename F::value_type>;
    { x == x } -> std::convertible_to<bool>;
    { x.to_string() } -> std::convertible_to<std::string>;
};

static_assert(FieldDescriptor<RationalField>);
static_assert(FieldDescriptor<PrimeField>);
static_assert(FieldDescriptor<FunctionField>);

template <FieldDescriptor Field>
using ScalarOf = typename Field::value_type;

/// Fails unless the field characteristic avoids every listed prime.
template <FieldDescriptor Field>
void require_characteristic_not(const Field& field, std::initializer_list<std::uint64_t> excluded, const std::string& what)
{
    for (auto p : excluded) {
        if (field.characteristic() == p) {
            fail(ErrorKind::BadCharacteristic, what + " requires characteristic != " + std::to_string(p));
        }
    }
}

} // namespace axetlab
