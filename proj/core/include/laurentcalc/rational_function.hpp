#ifndef LAURENTCALC_RATIONAL_FUNCTION_HPP
#define LAURENTCALC_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <laurentcalc/configuration.hpp>
#include <laurentcalc/polynomial.hpp>

namespace lc
{

// s -> origin + linear s, linear real with one row per ambient coordinate.
struct AffineMap {
    Point origin;
    Matrix linear;
};

// numerator / prod_H l_H^{k_H}; kept with no common linear factor and sorted denominators.
class RationalFn
{
public:
    using Factor = std::pair<Hyperplane, unsigned>;

    RationalFn() = default;
    RationalFn(InnerProduct ip, Polynomial numerator, std::vector<Factor> denominator = {});

    const InnerProduct &ip() const
    {
        return m_ip;
    }
    std::size_t dim() const
    {
        return m_ip.dim();
    }
    const Polynomial &numerator() const
    {
        return m_num;
    }
    const std::vector<Factor> &denominator() const
    {
        return m_den;
    }
    Polynomial denominator_poly() const;
    bool is_zero() const
    {
        return m_num.is_zero();
    }
    bool is_polynomial() const
    {
        return m_den.empty();
    }
    // Power of H in the denominator (0 if absent).
    unsigned power_of(const Hyperplane &h) const;

    Scalar eval(const Point &z) const;
    std::optional<Scalar> try_eval(const Point &z) const;
    RationalFn derivative(const Vec &v) const;
    RationalFn pullback(const AffineMap &map, const InnerProduct &target) const;

    RationalFn &operator+=(const RationalFn &o);
    RationalFn &operator-=(const RationalFn &o);
    friend RationalFn operator+(RationalFn a, const RationalFn &b)
    {
        return a += b;
    }
    friend RationalFn operator-(RationalFn a, const RationalFn &b)
    {
        return a -= b;
    }
    friend RationalFn operator*(const RationalFn &a, const RationalFn &b);
    friend RationalFn operator*(const Scalar &c, const RationalFn &a);
    // Equality as functions, by cross multiplication.
    friend bool operator==(const RationalFn &a, const RationalFn &b);

private:
    void canonicalize();
    void check_space(const RationalFn &o) const;

    InnerProduct m_ip;
    Polynomial m_num;
    std::vector<Factor> m_den;
};

// Restriction to L in direction coordinates s (z = c(L) + B s).
RationalFn rationalfn_restrict(const RationalFn &f, const XSubspace &l);

} // namespace lc

#endif
