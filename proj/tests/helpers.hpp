#ifndef LAURENTCALC_TEST_HELPERS_HPP
#define LAURENTCALC_TEST_HELPERS_HPP

#include <initializer_list>

#include <laurentcalc/polynomial.hpp>

namespace th
{

using lc::Scalar;

inline lc::Vec vec(std::initializer_list<Scalar> xs)
{
    return lc::Vec(xs);
}

inline lc::Polynomial z(std::size_t dim, std::size_t i)
{
    return lc::Polynomial::variable(dim, i);
}

inline lc::Polynomial c(std::size_t dim, const Scalar &x)
{
    return lc::Polynomial::constant(dim, x);
}

} // namespace th

#endif
