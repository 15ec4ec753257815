#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "pabel/scalars/rational.hpp"

namespace pabel {

/// A scalar domain: a factory for the unit elements plus the embedding of Q.
/// Element arithmetic is carried by the value type's operators; `is_zero`,
/// `inv` and `to_string` are found by ADL.
template <class D>
concept Field = requires(const D& d, const typename D::value_type& a, const Rational& q, std::int64_t n) {
  typename D::value_type;
  { d.zero() } -> std::convertible_to<typename D::value_type>;
  { d.one() } -> std::convertible_to<typename D::value_type>;
  { d.from_int(n) } -> std::convertible_to<typename D::value_type>;
  { d.from_rational(q) } -> std::convertible_to<typename D::value_type>;
  { d.name() } -> std::convertible_to<std::string>;
  { a + a } -> std::convertible_to<typename D::value_type>;
  { a - a } -> std::convertible_to<typename D::value_type>;
  { a * a } -> std::convertible_to<typename D::value_type>;
  { a / a } -> std::convertible_to<typename D::value_type>;
  { -a } -> std::convertible_to<typename D::value_type>;
  { a == a } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <Field D>
using value_t = typename D::value_type;

/// ADL zero test usable inside classes whose own is_zero() member hides the free function.
template <class T>
bool scalar_is_zero(const T& v) {
  return is_zero(v);
}

}  // namespace pabel
