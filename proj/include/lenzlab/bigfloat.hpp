#ifndef LENZLAB_BIGFLOAT_HPP
#define LENZLAB_BIGFLOAT_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lenzlab/ext_scalar.hpp"

namespace lenzlab {

template <unsigned Bits>
using BinFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<Bits, boost::multiprecision::backends::digit_base_2>>;

using Big256 = BinFloat<256>;
using Big1024 = BinFloat<1024>;

template <class F>
F to_float(const Rational& q) {
    return F(num(q)) / F(den(q));
}

template <>
inline double to_float<double>(const Rational& q) {
    return static_cast<double>(q);
}

template <class F>
F to_float(const ExtScalar& x) {
    return to_float<F>(x.a) + to_float<F>(x.b) * sqrt(F(5));
}

template <>
inline double to_float<double>(const ExtScalar& x) {
    return static_cast<double>(x.a) + static_cast<double>(x.b) * std::sqrt(5.0);
}

template <class F>
F cos_turns_float(const Rational& turns) {
    using std::cos;
    return cos(2 * boost::math::constants::pi<F>() * to_float<F>(turns));
}

template <>
inline double cos_turns_float<double>(const Rational& turns) {
    return std::cos(2.0 * 3.141592653589793238462643383279502884 * static_cast<double>(turns));
}

} // namespace lenzlab

#endif
