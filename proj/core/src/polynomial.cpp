#include <laurentcalc/polynomial.hpp>

#include <algorithm>

#include <laurentcalc/error.hpp>

namespace lc
{

unsigned total_degree(const Monomial &m)
{
    unsigned s = 0;
    for (auto e : m) {
        s += e;
    }
    return s;
}

Rational monomial_factorial(const Monomial &m)
{
    Rational f(1);
    for (auto e : m) {
        if (e > 1) {
            f *= factorial(e);
        }
    }
    return f;
}

bool divides(const Monomial &a, const Monomial &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

Polynomial Polynomial::constant(std::size_t dim, const Scalar &c)
{
    Polynomial p(dim);
    p.add_term(Monomial(dim, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i)
{
    Monomial m(dim, 0);
    m.at(i) = 1;
    return monomial(std::move(m), Scalar(1));
}

Polynomial Polynomial::monomial(Monomial m, const Scalar &c)
{
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::linear(const Vec &coeffs, const Scalar &c0)
{
    const std::size_t n = coeffs.size();
    Polynomial p = constant(n, c0);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

bool Polynomial::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && lc::total_degree(m_terms.begin()->first) == 0);
}

Scalar Polynomial::coefficient(const Monomial &m) const
{
    auto it = m_terms.find(m);
    return it == m_terms.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::constant_term() const
{
    return coefficient(Monomial(m_dim, 0));
}

void Polynomial::add_term(const Monomial &m, const Scalar &c)
{
    if (m.size() != m_dim) {
        throw precondition_error("arity_mismatch", "monomial arity differs from polynomial arity");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, static_cast<int>(lc::total_degree(m)));
    }
    return d;
}

int Polynomial::degree_in(std::size_t var) const
{
    int d = -1;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, static_cast<int>(m[var]));
    }
    return d;
}

Polynomial Polynomial::truncate(int max_degree) const
{
    Polynomial out(m_dim);
    for (const auto &[m, c] : m_terms) {
        if (static_cast<int>(lc::total_degree(m)) <= max_degree) {
            out.m_terms.emplace_hint(out.m_terms.end(), m, c);
        }
    }
    return out;
}

Polynomial Polynomial::homogeneous_part(unsigned k) const
{
    Polynomial out(m_dim);
    for (const auto &[m, c] : m_terms) {
        if (lc::total_degree(m) == k) {
            out.m_terms.emplace_hint(out.m_terms.end(), m, c);
        }
    }
    return out;
}

Scalar Polynomial::eval(const Point &z) const
{
    if (z.size() != m_dim) {
        throw precondition_error("arity_mismatch", "point dimension differs from polynomial arity");
    }
    std::vector<std::vector<Scalar>> powers(m_dim);
    auto power = [&](std::size_t i, unsigned e) -> const Scalar & {
        auto &pw = powers[i];
        if (pw.empty()) {
            pw.push_back(Scalar(1));
        }
        while (pw.size() <= e) {
            pw.push_back(pw.back() * z[i]);
        }
        return pw[e];
    };
    Scalar s;
    for (const auto &[m, c] : m_terms) {
        Scalar t = c;
        for (std::size_t i = 0; i < m_dim; ++i) {
            if (m[i]) {
                t *= power(i, m[i]);
            }
        }
        s += t;
    }
    return s;
}

Polynomial Polynomial::partial(std::size_t i) const
{
    if (i >= m_dim) {
        throw precondition_error("arity_mismatch", "derivative variable out of range");
    }
    Polynomial out(m_dim);
    for (const auto &[m, c] : m_terms) {
        if (m[i] == 0) {
            continue;
        }
        Monomial k = m;
        --k[i];
        out.add_term(k, c * Scalar(static_cast<long>(m[i])));
    }
    return out;
}

Polynomial Polynomial::directional(const Vec &v) const
{
    if (v.size() != m_dim) {
        throw precondition_error("arity_mismatch", "direction dimension differs from polynomial arity");
    }
    Polynomial out(m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
        if (!v[i].is_zero()) {
            out += partial(i) * v[i];
        }
    }
    return out;
}

Polynomial Polynomial::translate(const Point &a) const
{
    if (a.size() != m_dim) {
        throw precondition_error("arity_mismatch", "translation dimension differs from polynomial arity");
    }
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < m_dim; ++i) {
        subs.push_back(variable(m_dim, i) + constant(m_dim, a[i]));
    }
    return compose(subs);
}

Polynomial Polynomial::compose(const std::vector<Polynomial> &subs) const
{
    if (subs.size() != m_dim) {
        throw precondition_error("arity_mismatch", "substitution list length differs from polynomial arity");
    }
    std::size_t new_dim = 0;
    if (!subs.empty()) {
        new_dim = subs[0].dim();
        for (const auto &s : subs) {
            if (s.dim() != new_dim) {
                throw precondition_error("arity_mismatch", "substituted polynomials differ in arity");
            }
        }
    } else {
        new_dim = 0;
    }
    std::vector<std::vector<Polynomial>> powers(m_dim);
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial & {
        auto &pw = powers[i];
        if (pw.empty()) {
            pw.push_back(constant(new_dim, Scalar(1)));
        }
        while (pw.size() <= e) {
            pw.push_back(pw.back() * subs[i]);
        }
        return pw[e];
    };
    Polynomial out(new_dim);
    for (const auto &[m, c] : m_terms) {
        Polynomial t = constant(new_dim, c);
        for (std::size_t i = 0; i < m_dim; ++i) {
            if (m[i]) {
                t = t * power(i, m[i]);
            }
        }
        out += t;
    }
    return out;
}

Polynomial Polynomial::compose_affine(const Point &origin, const Matrix &linear) const
{
    if (origin.size() != m_dim || linear.size() != m_dim) {
        throw precondition_error("arity_mismatch", "affine map does not match polynomial arity");
    }
    const std::size_t k = cols(linear);
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < m_dim; ++i) {
        Vec row = linear[i];
        row.resize(k);
        subs.push_back(Polynomial::linear(row, origin[i]));
    }
    if (m_dim == 0) {
        Polynomial out(k);
        out.add_term(Monomial(k, 0), constant_term());
        return out;
    }
    return compose(subs);
}

Polynomial Polynomial::embed(std::size_t new_dim, const std::vector<std::size_t> &var_map) const
{
    if (var_map.size() != m_dim) {
        throw precondition_error("arity_mismatch", "variable map length differs from polynomial arity");
    }
    Polynomial out(new_dim);
    for (const auto &[m, c] : m_terms) {
        Monomial k(new_dim, 0);
        for (std::size_t i = 0; i < m_dim; ++i) {
            k.at(var_map[i]) += m[i];
        }
        out.add_term(k, c);
    }
    return out;
}

Polynomial Polynomial::mul_truncated(const Polynomial &o, int max_degree) const
{
    check_arity(o);
    Polynomial out(m_dim);
    if (max_degree < 0) {
        return out;
    }
    for (const auto &[m1, c1] : m_terms) {
        const int d1 = static_cast<int>(lc::total_degree(m1));
        if (d1 > max_degree) {
            continue;
        }
        for (const auto &[m2, c2] : o.m_terms) {
            if (d1 + static_cast<int>(lc::total_degree(m2)) > max_degree) {
                continue;
            }
            Monomial m = m1;
            for (std::size_t i = 0; i < m_dim; ++i) {
                m[i] += m2[i];
            }
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial r = constant(m_dim, Scalar(1)), b = *this;
    while (k) {
        if (k & 1u) {
            r = r * b;
        }
        k >>= 1u;
        if (k) {
            b = b * b;
        }
    }
    return r;
}

bool Polynomial::is_real() const
{
    for (const auto &[m, c] : m_terms) {
        if (!c.is_real()) {
            return false;
        }
    }
    return true;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    check_arity(o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    check_arity(o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial &Polynomial::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, x] : m_terms) {
        x *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    a.check_arity(b);
    Polynomial out(a.m_dim);
    for (const auto &[m1, c1] : a.m_terms) {
        for (const auto &[m2, c2] : b.m_terms) {
            Monomial m = m1;
            for (std::size_t i = 0; i < a.m_dim; ++i) {
                m[i] += m2[i];
            }
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto &[m, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : m_terms) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + c.to_string() + ")";
        for (std::size_t i = 0; i < m_dim; ++i) {
            if (m[i]) {
                out += "*z" + std::to_string(i + 1);
                if (m[i] > 1) {
                    out += "^" + std::to_string(m[i]);
                }
            }
        }
    }
    return out;
}

void Polynomial::check_arity(const Polynomial &o) const
{
    if (o.m_dim != m_dim) {
        throw precondition_error("arity_mismatch", "polynomials of different arity");
    }
}

LinearDivision divide_by_linear(const Polynomial &p, const Polynomial &l)
{
    if (l.total_degree() != 1 || p.dim() != l.dim()) {
        throw precondition_error("not_linear", "divisor must be an affine form of the same arity");
    }
    std::size_t pivot = l.dim();
    Scalar lead;
    for (std::size_t i = 0; i < l.dim() && pivot == l.dim(); ++i) {
        Monomial m(l.dim(), 0);
        m[i] = 1;
        lead = l.coefficient(m);
        if (!lead.is_zero()) {
            pivot = i;
        }
    }
    const Scalar inv = lead.inverse();
    Polynomial q(p.dim()), r = p;
    // Eliminate terms divisible by the pivot variable, highest pivot power first.
    for (;;) {
        const Monomial *best = nullptr;
        for (const auto &[m, c] : r.terms()) {
            if (m[pivot] > 0 && (best == nullptr || m[pivot] > (*best)[pivot])) {
                best = &m;
            }
        }
        if (best == nullptr) {
            break;
        }
        Monomial m = *best;
        const Scalar c = r.coefficient(m) * inv;
        --m[pivot];
        const Polynomial t = Polynomial::monomial(m, c);
        q += t;
        r -= t * l;
    }
    return {std::move(q), std::move(r)};
}

std::optional<Polynomial> exact_divide_linear(const Polynomial &p, const Polynomial &l)
{
    auto d = divide_by_linear(p, l);
    if (!d.remainder.is_zero()) {
        return std::nullopt;
    }
    return std::move(d.quotient);
}

Polynomial taylor_inverse(const Polynomial &p, int order)
{
    const Scalar c = p.constant_term();
    if (c.is_zero()) {
        throw precondition_error("not_invertible", "Taylor inverse of a polynomial vanishing at the origin");
    }
    const std::size_t n = p.dim();
    Polynomial out(n);
    if (order < 0) {
        return out;
    }
    const Scalar ic = c.inverse();
    // 1/(c + r) = (1/c) sum_k (-r/c)^k
    Polynomial r = (p - Polynomial::constant(n, c)) * (-ic);
    Polynomial term = Polynomial::constant(n, Scalar(1));
    for (int k = 0; k <= order && !term.is_zero(); ++k) {
        out += term;
        term = term.mul_truncated(r, order);
    }
    return out * ic;
}

} // namespace lc
