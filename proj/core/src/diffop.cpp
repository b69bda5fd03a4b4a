#include <laurentcalc/diffop.hpp>

#include <laurentcalc/error.hpp>

namespace lc
{

DiffOp DiffOp::identity(std::size_t dim)
{
    return DiffOp(Polynomial::constant(dim, Scalar(1)));
}

DiffOp DiffOp::zero(std::size_t dim)
{
    return DiffOp(Polynomial(dim));
}

DiffOp DiffOp::partial(std::size_t dim, std::size_t i)
{
    return DiffOp(Polynomial::variable(dim, i));
}

DiffOp DiffOp::directional(const Vec &v)
{
    return DiffOp(Polynomial::linear(v));
}

DiffOp DiffOp::monomial(const Monomial &m, const Scalar &c)
{
    return DiffOp(Polynomial::monomial(m, c));
}

Polynomial DiffOp::apply(const Polynomial &p) const
{
    if (p.dim() != dim()) {
        throw precondition_error("arity_mismatch", "operator and polynomial differ in arity");
    }
    Polynomial out(p.dim());
    for (const auto &[b, c] : m_symbol.terms()) {
        for (const auto &[m, x] : p.terms()) {
            if (!divides(b, m)) {
                continue;
            }
            // d^b z^m = m!/(m-b)! z^(m-b)
            Monomial k = m;
            Rational f(1);
            for (std::size_t i = 0; i < k.size(); ++i) {
                for (unsigned j = 0; j < b[i]; ++j) {
                    f *= static_cast<unsigned long>(m[i] - j);
                }
                k[i] -= b[i];
            }
            out.add_term(k, c * x * Scalar(f));
        }
    }
    return out;
}

Scalar DiffOp::apply_at_origin(const Polynomial &p) const
{
    if (p.dim() != dim()) {
        throw precondition_error("arity_mismatch", "operator and polynomial differ in arity");
    }
    Scalar s;
    for (const auto &[b, c] : m_symbol.terms()) {
        const Scalar x = p.coefficient(b);
        if (!x.is_zero()) {
            s += c * x * Scalar(monomial_factorial(b));
        }
    }
    return s;
}

Scalar DiffOp::apply_at(const Polynomial &p, const Point &a) const
{
    return apply(p).eval(a);
}

DiffOp &DiffOp::operator+=(const DiffOp &o)
{
    m_symbol += o.m_symbol;
    return *this;
}

DiffOp &DiffOp::operator-=(const DiffOp &o)
{
    m_symbol -= o.m_symbol;
    return *this;
}

std::string DiffOp::to_string() const
{
    if (m_symbol.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : m_symbol.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + c.to_string() + ")";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i]) {
                out += "*d" + std::to_string(i + 1);
                if (m[i] > 1) {
                    out += "^" + std::to_string(m[i]);
                }
            }
        }
    }
    return out;
}

DiffOp leibniz_flatten_taylor(const DiffOp &u, const Polynomial &taylor)
{
    if (taylor.dim() != u.dim()) {
        throw precondition_error("arity_mismatch", "operator and multiplier differ in arity");
    }
    // u' = sum_b c_b sum_{g <= b} b!/(b-g)! t_g d^(b-g), with t_g the Taylor coefficients.
    Polynomial out(u.dim());
    for (const auto &[b, c] : u.symbol().terms()) {
        for (const auto &[g, t] : taylor.terms()) {
            if (!divides(g, b)) {
                continue;
            }
            Monomial k = b;
            Rational f(1);
            for (std::size_t i = 0; i < k.size(); ++i) {
                for (unsigned j = 0; j < g[i]; ++j) {
                    f *= static_cast<unsigned long>(b[i] - j);
                }
                k[i] -= g[i];
            }
            out.add_term(k, c * t * Scalar(f));
        }
    }
    return DiffOp(std::move(out));
}

DiffOp leibniz_flatten(const DiffOp &u, const Polynomial &p, const Point &a)
{
    if (p.dim() != u.dim() || a.size() != u.dim()) {
        throw precondition_error("arity_mismatch", "operator, multiplier and point differ in arity");
    }
    return leibniz_flatten_taylor(u, p.translate(a).truncate(u.order()));
}

bool preceq(const PoleIndex &a, const PoleIndex &b)
{
    if (a.size() != b.size()) {
        throw precondition_error("arity_mismatch", "pole indices of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

PoleIndex operator+(const PoleIndex &a, const PoleIndex &b)
{
    if (a.size() != b.size()) {
        throw precondition_error("arity_mismatch", "pole indices of different length");
    }
    PoleIndex out(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

PoleIndex operator-(const PoleIndex &a, const PoleIndex &b)
{
    if (!preceq(b, a)) {
        throw precondition_error("not_preceq", "pole index subtraction would go negative");
    }
    PoleIndex out(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

unsigned total(const PoleIndex &d)
{
    unsigned s = 0;
    for (auto x : d) {
        s += x;
    }
    return s;
}

std::string to_string(const PoleIndex &d)
{
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        out += (i ? "," : "") + std::to_string(d[i]);
    }
    return out + ")";
}

Polynomial root_form(const InnerProduct &ip, const Vec &xi, const Point &a)
{
    const Vec cov = ip.covector(xi);
    return Polynomial::linear(cov, -plain_dot(cov, a));
}

Polynomial pi_a_d(const InnerProduct &ip, const std::vector<Vec> &roots, const Point &a, const PoleIndex &d)
{
    if (roots.size() != d.size()) {
        throw precondition_error("arity_mismatch", "pole index length differs from the number of roots");
    }
    if (a.size() != ip.dim()) {
        throw precondition_error("arity_mismatch", "point dimension differs from the space dimension");
    }
    Polynomial p = Polynomial::constant(ip.dim(), Scalar(1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (d[i]) {
            p = p * root_form(ip, roots[i], a).pow(d[i]);
        }
    }
    return p;
}

DiffOp j_map(const DiffOp &u, const PoleIndex &d, const PoleIndex &d_low, const std::vector<Vec> &roots,
             const Point &a, const InnerProduct &ip)
{
    if (!preceq(d_low, d)) {
        throw precondition_error("not_preceq", "j-map requires d_low <= d componentwise");
    }
    if (a.size() != ip.dim() || u.dim() != ip.dim()) {
        throw precondition_error("arity_mismatch", "j-map data differ in dimension");
    }
    const PoleIndex diff = d - d_low;
    if (total(diff) == 0) {
        return u;
    }
    // pi_{a,d} is translation covariant, so its Taylor expansion at a is pi_{0,d}(w).
    return leibniz_flatten_taylor(u, pi_a_d(ip, roots, zero_vec(ip.dim()), diff).truncate(u.order()));
}

} // namespace lc
