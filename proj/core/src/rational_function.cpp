#include <laurentcalc/rational_function.hpp>

#include <algorithm>
#include <map>

#include <laurentcalc/error.hpp>

namespace lc
{

RationalFn::RationalFn(InnerProduct ip, Polynomial numerator, std::vector<Factor> denominator)
    : m_ip(std::move(ip)), m_num(std::move(numerator)), m_den(std::move(denominator))
{
    if (m_num.dim() != m_ip.dim()) {
        if (m_num.is_zero() && m_num.dim() == 0) {
            m_num = Polynomial(m_ip.dim());
        } else {
            throw precondition_error("arity_mismatch", "numerator arity differs from the space dimension");
        }
    }
    for (const auto &[h, k] : m_den) {
        if (h.dim() != m_ip.dim()) {
            throw precondition_error("arity_mismatch", "denominator hyperplane dimension differs from the space");
        }
    }
    canonicalize();
}

void RationalFn::canonicalize()
{
    std::map<Hyperplane, unsigned> merged;
    for (const auto &[h, k] : m_den) {
        if (k > 0) {
            merged[h] += k;
        }
    }
    m_den.clear();
    if (m_num.is_zero()) {
        return;
    }
    for (auto &[h, k] : merged) {
        const Polynomial l = h.form(m_ip);
        while (k > 0) {
            auto q = exact_divide_linear(m_num, l);
            if (!q) {
                break;
            }
            m_num = std::move(*q);
            --k;
        }
        if (k > 0) {
            m_den.emplace_back(h, k);
        }
    }
}

void RationalFn::check_space(const RationalFn &o) const
{
    if (!(m_ip == o.m_ip)) {
        throw precondition_error("space_mismatch", "rational functions live on different spaces");
    }
}

Polynomial RationalFn::denominator_poly() const
{
    Polynomial d = Polynomial::constant(dim(), Scalar(1));
    for (const auto &[h, k] : m_den) {
        d = d * h.form(m_ip).pow(k);
    }
    return d;
}

unsigned RationalFn::power_of(const Hyperplane &h) const
{
    for (const auto &[g, k] : m_den) {
        if (g == h) {
            return k;
        }
    }
    return 0;
}

std::optional<Scalar> RationalFn::try_eval(const Point &z) const
{
    Scalar den(1);
    for (const auto &[h, k] : m_den) {
        const Scalar v = h.value(m_ip, z);
        if (v.is_zero()) {
            return std::nullopt;
        }
        den *= pow(v, k);
    }
    return m_num.eval(z) / den;
}

Scalar RationalFn::eval(const Point &z) const
{
    auto v = try_eval(z);
    if (!v) {
        throw precondition_error("pole", "evaluation point lies on a denominator hyperplane");
    }
    return *v;
}

RationalFn RationalFn::derivative(const Vec &v) const
{
    if (m_den.empty()) {
        return RationalFn(m_ip, m_num.directional(v));
    }
    std::vector<Polynomial> forms;
    for (const auto &[h, k] : m_den) {
        forms.push_back(h.form(m_ip));
    }
    Polynomial all = Polynomial::constant(dim(), Scalar(1));
    for (const auto &l : forms) {
        all = all * l;
    }
    Polynomial num = m_num.directional(v) * all;
    for (std::size_t i = 0; i < m_den.size(); ++i) {
        const Scalar dl = m_ip.dot(m_den[i].first.normal(), v);
        if (dl.is_zero()) {
            continue;
        }
        Polynomial rest = Polynomial::constant(dim(), Scalar(static_cast<long>(m_den[i].second)) * dl);
        for (std::size_t j = 0; j < forms.size(); ++j) {
            if (j != i) {
                rest = rest * forms[j];
            }
        }
        num -= m_num * rest;
    }
    std::vector<Factor> den = m_den;
    for (auto &f : den) {
        ++f.second;
    }
    return RationalFn(m_ip, std::move(num), std::move(den));
}

RationalFn RationalFn::pullback(const AffineMap &map, const InnerProduct &target) const
{
    if (map.origin.size() != dim() || map.linear.size() != dim()) {
        throw precondition_error("arity_mismatch", "affine map does not match the source space");
    }
    const std::size_t k = target.dim();
    Matrix lin = map.linear;
    for (auto &row : lin) {
        if (row.size() != k) {
            if (!row.empty() || k != 0) {
                throw precondition_error("arity_mismatch", "affine map does not match the target space");
            }
        }
    }
    if (!is_real(lin)) {
        throw precondition_error("invalid_map", "the linear part of a pullback must be real");
    }
    Polynomial num = m_num.compose_affine(map.origin, lin);
    std::vector<Factor> den;
    Scalar scale(1);
    for (const auto &[h, p] : m_den) {
        const Vec cov = m_ip.covector(h.normal());
        Vec beta = zero_vec(k);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < dim(); ++i) {
                beta[j] += cov[i] * lin[i][j];
            }
        }
        const Scalar gamma = plain_dot(cov, map.origin) - h.offset();
        if (lc::is_zero(beta)) {
            if (gamma.is_zero()) {
                throw precondition_error("denominator_vanishes",
                                         "a denominator factor vanishes identically on the image");
            }
            scale *= pow(gamma, p);
            continue;
        }
        // beta . s + gamma = f l_{H'}(s)
        const auto cr = canonical_root(target.vector_of(beta));
        den.emplace_back(Hyperplane(cr.root, -gamma / Scalar(cr.factor)), p);
        scale *= pow(Scalar(cr.factor), p);
    }
    return RationalFn(target, num * scale.inverse(), std::move(den));
}

RationalFn &RationalFn::operator+=(const RationalFn &o)
{
    check_space(o);
    std::map<Hyperplane, unsigned> mine, theirs, common;
    for (const auto &[h, k] : m_den) {
        mine[h] = k;
        common[h] = k;
    }
    for (const auto &[h, k] : o.m_den) {
        theirs[h] = k;
        common[h] = std::max(common[h], k);
    }
    auto lift = [&](const Polynomial &num, const std::map<Hyperplane, unsigned> &have) {
        Polynomial out = num;
        for (const auto &[h, k] : common) {
            auto it = have.find(h);
            const unsigned missing = k - (it == have.end() ? 0u : it->second);
            if (missing) {
                out = out * h.form(m_ip).pow(missing);
            }
        }
        return out;
    };
    Polynomial num = lift(m_num, mine) + lift(o.m_num, theirs);
    std::vector<Factor> den(common.begin(), common.end());
    *this = RationalFn(m_ip, std::move(num), std::move(den));
    return *this;
}

RationalFn &RationalFn::operator-=(const RationalFn &o)
{
    return *this += Scalar(-1) * o;
}

RationalFn operator*(const RationalFn &a, const RationalFn &b)
{
    a.check_space(b);
    std::vector<RationalFn::Factor> den = a.m_den;
    den.insert(den.end(), b.m_den.begin(), b.m_den.end());
    return RationalFn(a.m_ip, a.m_num * b.m_num, std::move(den));
}

RationalFn operator*(const Scalar &c, const RationalFn &a)
{
    return RationalFn(a.m_ip, a.m_num * c, a.m_den);
}

bool operator==(const RationalFn &a, const RationalFn &b)
{
    if (!(a.m_ip == b.m_ip)) {
        return false;
    }
    return a.m_num * b.denominator_poly() == b.m_num * a.denominator_poly();
}

RationalFn rationalfn_restrict(const RationalFn &f, const XSubspace &l)
{
    AffineMap map{l.center(), from_columns(l.direction_basis(), l.ambient_dim())};
    return f.pullback(map, l.direction_ip());
}

} // namespace lc
