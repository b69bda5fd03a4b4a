#ifndef LAURENTCALC_DIFFOP_HPP
#define LAURENTCALC_DIFFOP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <laurentcalc/linalg.hpp>
#include <laurentcalc/polynomial.hpp>

namespace lc
{

// Constant coefficient differential operator sum_b c_b d^b, stored by its symbol.
class DiffOp
{
public:
    DiffOp() = default;
    explicit DiffOp(Polynomial symbol) : m_symbol(std::move(symbol)) {}

    static DiffOp identity(std::size_t dim);
    static DiffOp zero(std::size_t dim);
    static DiffOp partial(std::size_t dim, std::size_t i);
    // Derivative along v.
    static DiffOp directional(const Vec &v);
    static DiffOp monomial(const Monomial &m, const Scalar &c);

    const Polynomial &symbol() const
    {
        return m_symbol;
    }
    std::size_t dim() const
    {
        return m_symbol.dim();
    }
    int order() const
    {
        return m_symbol.total_degree();
    }
    bool is_zero() const
    {
        return m_symbol.is_zero();
    }

    Polynomial apply(const Polynomial &p) const;
    // (u p)(0) = sum_b c_b b! p_b
    Scalar apply_at_origin(const Polynomial &p) const;
    Scalar apply_at(const Polynomial &p, const Point &a) const;

    DiffOp &operator+=(const DiffOp &o);
    DiffOp &operator-=(const DiffOp &o);
    friend DiffOp operator+(DiffOp a, const DiffOp &b)
    {
        return a += b;
    }
    friend DiffOp operator-(DiffOp a, const DiffOp &b)
    {
        return a -= b;
    }
    // Composition, which is the product in S(V).
    friend DiffOp operator*(const DiffOp &a, const DiffOp &b)
    {
        return DiffOp(a.m_symbol * b.m_symbol);
    }
    friend DiffOp operator*(const Scalar &c, const DiffOp &a)
    {
        return DiffOp(a.m_symbol * c);
    }
    friend bool operator==(const DiffOp &a, const DiffOp &b)
    {
        return a.m_symbol == b.m_symbol;
    }

    std::string to_string() const;

private:
    Polynomial m_symbol;
};

// u' with u'(h)(a) = u(p h)(a) for every polynomial h.
DiffOp leibniz_flatten(const DiffOp &u, const Polynomial &p, const Point &a);
// Same, with p given by its Taylor expansion at the evaluation point (a polynomial in w = z - a).
DiffOp leibniz_flatten_taylor(const DiffOp &u, const Polynomial &taylor);

using PoleIndex = std::vector<unsigned>;

bool preceq(const PoleIndex &a, const PoleIndex &b);
PoleIndex operator+(const PoleIndex &a, const PoleIndex &b);
// Requires b <= a componentwise.
PoleIndex operator-(const PoleIndex &a, const PoleIndex &b);
unsigned total(const PoleIndex &d);
std::string to_string(const PoleIndex &d);

// z -> <xi, z - a> with the given inner product.
Polynomial root_form(const InnerProduct &ip, const Vec &xi, const Point &a);
// prod_xi <xi, z - a>^{d(xi)}
Polynomial pi_a_d(const InnerProduct &ip, const std::vector<Vec> &roots, const Point &a, const PoleIndex &d);

// j_{d_low, d}(u) = leibniz_flatten(u, pi_{a, d - d_low}, a).
DiffOp j_map(const DiffOp &u, const PoleIndex &d, const PoleIndex &d_low, const std::vector<Vec> &roots,
             const Point &a, const InnerProduct &ip);

} // namespace lc

#endif
