#ifndef LAURENTCALC_POLYNOMIAL_HPP
#define LAURENTCALC_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <laurentcalc/linalg.hpp>
#include <laurentcalc/scalar.hpp>

namespace lc
{

using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial &m);
Rational monomial_factorial(const Monomial &m);
bool divides(const Monomial &a, const Monomial &b);

// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
class Polynomial
{
public:
    using TermMap = std::map<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(std::size_t dim) : m_dim(dim) {}

    static Polynomial constant(std::size_t dim, const Scalar &c);
    static Polynomial variable(std::size_t dim, std::size_t i);
    static Polynomial monomial(Monomial m, const Scalar &c);
    // c0 + sum_i coeffs[i] z_i
    static Polynomial linear(const Vec &coeffs, const Scalar &c0 = Scalar(0));

    std::size_t dim() const
    {
        return m_dim;
    }
    const TermMap &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    bool is_constant() const;
    Scalar coefficient(const Monomial &m) const;
    Scalar constant_term() const;
    void add_term(const Monomial &m, const Scalar &c);

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;
    Polynomial truncate(int max_degree) const;
    Polynomial homogeneous_part(unsigned k) const;

    Scalar eval(const Point &z) const;
    Polynomial partial(std::size_t i) const;
    Polynomial directional(const Vec &v) const;
    // w -> p(a + w)
    Polynomial translate(const Point &a) const;
    // Substitutes z_i -> subs[i]; all subs share one arity which becomes the result's.
    Polynomial compose(const std::vector<Polynomial> &subs) const;
    // s -> p(origin + linear s), linear has dim() rows.
    Polynomial compose_affine(const Point &origin, const Matrix &linear) const;
    // Reindexes variable i to var_map[i] in a space of new_dim variables.
    Polynomial embed(std::size_t new_dim, const std::vector<std::size_t> &var_map) const;
    Polynomial mul_truncated(const Polynomial &o, int max_degree) const;
    Polynomial pow(unsigned k) const;
    bool is_real() const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Scalar &c);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Scalar &c)
    {
        return a *= c;
    }
    friend Polynomial operator*(const Scalar &c, Polynomial a)
    {
        return a *= c;
    }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.m_dim == b.m_dim && a.m_terms == b.m_terms;
    }

    std::string to_string() const;

private:
    void check_arity(const Polynomial &o) const;

    std::size_t m_dim = 0;
    TermMap m_terms;
};

struct LinearDivision {
    Polynomial quotient;
    Polynomial remainder;
};

// Division by an affine form l (total degree exactly 1) eliminating its first
// variable with nonzero coefficient; remainder is free of that variable.
LinearDivision divide_by_linear(const Polynomial &p, const Polynomial &l);
std::optional<Polynomial> exact_divide_linear(const Polynomial &p, const Polynomial &l);

// Degree <= order truncation of 1/p around 0; requires p(0) != 0.
Polynomial taylor_inverse(const Polynomial &p, int order);

} // namespace lc

#endif
