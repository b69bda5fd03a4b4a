#ifndef LAURENTCALC_SCALAR_HPP
#define LAURENTCALC_SCALAR_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lc
{

using Rational = mpq_class;

// Exact element a + b i of Q(i).
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long n) : m_re(n) {}
    GaussianRational(int n) : m_re(n) {}
    GaussianRational(const Rational &re) : m_re(re) {}
    GaussianRational(const Rational &re, const Rational &im) : m_re(re), m_im(im) {}
    GaussianRational(long num, long den) : m_re(num, den)
    {
        m_re.canonicalize();
    }

    static GaussianRational i()
    {
        return {Rational(0), Rational(1)};
    }

    const Rational &re() const
    {
        return m_re;
    }
    const Rational &im() const
    {
        return m_im;
    }

    bool is_zero() const
    {
        return sgn(m_re) == 0 && sgn(m_im) == 0;
    }
    bool is_real() const
    {
        return sgn(m_im) == 0;
    }
    bool is_integer() const;

    GaussianRational conj() const
    {
        return {m_re, -m_im};
    }
    // |z|^2, always a nonnegative rational.
    Rational norm2() const
    {
        return m_re * m_re + m_im * m_im;
    }
    GaussianRational inverse() const;

    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b)
    {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b)
    {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b)
    {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b)
    {
        return a /= b;
    }
    GaussianRational operator-() const
    {
        return {-m_re, -m_im};
    }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }
    // Lexicographic on (re, im); only used for canonical ordering.
    friend std::strong_ordering operator<=>(const GaussianRational &a, const GaussianRational &b);

    // "p/q" when real, otherwise "p/q + r/s i" or "p/q - r/s i".
    std::string to_string() const;
    static GaussianRational parse(std::string_view s);

private:
    Rational m_re{0};
    Rational m_im{0};
};

using Scalar = GaussianRational;
using Vec = std::vector<Scalar>;
using Point = Vec;

// Always "p/q", denominator included even when it is 1.
std::string rational_to_string(const Rational &q);
Rational parse_rational(std::string_view s);

Scalar pow(const Scalar &x, unsigned k);
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

} // namespace lc

#endif
