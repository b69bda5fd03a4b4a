#include <laurentcalc/configuration.hpp>

#include <algorithm>
#include <map>

#include <laurentcalc/error.hpp>

namespace lc
{

CanonicalRoot canonical_root(const Vec &v)
{
    if (!is_real(v) || is_zero(v)) {
        throw precondition_error("invalid_root", "roots and normals must be nonzero real vectors");
    }
    mpz_class l = 1, g = 0;
    for (const auto &x : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    }
    Vec ints;
    for (const auto &x : v) {
        const Rational y = x.re() * Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
    }
    Rational factor(g, l);
    factor.canonicalize();
    for (const auto &x : v) {
        if (!x.is_zero()) {
            if (sgn(x.re()) < 0) {
                factor = -factor;
            }
            break;
        }
    }
    Vec root;
    for (const auto &x : v) {
        root.push_back(Scalar(x.re() / factor));
    }
    return {std::move(root), factor};
}

std::optional<Scalar> proportionality(const Vec &a, const Vec &b)
{
    if (a.size() != b.size() || is_zero(b)) {
        return std::nullopt;
    }
    std::size_t k = 0;
    while (b[k].is_zero()) {
        ++k;
    }
    const Scalar c = a[k] / b[k];
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == c * b[i])) {
            return std::nullopt;
        }
    }
    return c;
}

Scalar pi_rescale_factor(const std::vector<Vec> &roots, const std::vector<Vec> &scaled, const PoleIndex &d)
{
    if (roots.size() != scaled.size() || roots.size() != d.size()) {
        throw precondition_error("arity_mismatch", "root lists and pole index differ in length");
    }
    Scalar f(1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto c = proportionality(scaled[i], roots[i]);
        if (!c || c->is_zero()) {
            throw precondition_error("not_proportional", "root lists are not elementwise proportional");
        }
        f *= pow(*c, d[i]);
    }
    return f;
}

Hyperplane::Hyperplane(const Vec &normal, const Scalar &offset)
{
    auto cr = canonical_root(normal);
    m_normal = std::move(cr.root);
    m_offset = offset / Scalar(cr.factor);
}

Hyperplane Hyperplane::from_equation(const InnerProduct &ip, const Vec &row, const Scalar &rhs)
{
    if (!lc::is_real(row)) {
        throw precondition_error("invalid_root", "hyperplane equation must have real coefficients");
    }
    return Hyperplane(ip.vector_of(row), rhs);
}

Polynomial Hyperplane::form(const InnerProduct &ip) const
{
    return Polynomial::linear(ip.covector(m_normal), -m_offset);
}

Scalar Hyperplane::value(const InnerProduct &ip, const Point &z) const
{
    return ip.dot(m_normal, z) - m_offset;
}

std::strong_ordering operator<=>(const Hyperplane &a, const Hyperplane &b)
{
    if (auto c = a.m_normal <=> b.m_normal; c != 0) {
        return c;
    }
    return a.m_offset <=> b.m_offset;
}

Configuration::Configuration(InnerProduct ip, std::vector<Hyperplane> hyperplanes, std::vector<unsigned> multiplicity,
                             std::vector<Vec> x_set)
    : m_ip(std::move(ip)), m_hyperplanes(std::move(hyperplanes)), m_mult(std::move(multiplicity)),
      m_x(std::move(x_set))
{
    if (m_mult.size() != m_hyperplanes.size()) {
        throw precondition_error("arity_mismatch", "one multiplicity per hyperplane is required");
    }
    for (std::size_t i = 0; i < m_hyperplanes.size(); ++i) {
        if (m_hyperplanes[i].dim() != dim()) {
            throw precondition_error("arity_mismatch", "hyperplane dimension differs from the space dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (m_hyperplanes[i] == m_hyperplanes[j]) {
                throw precondition_error("duplicate_hyperplane", "configuration lists a hyperplane twice");
            }
        }
    }
    if (m_x.empty()) {
        for (const auto &h : m_hyperplanes) {
            m_x.push_back(h.normal());
        }
    }
    for (const auto &x : m_x) {
        if (x.size() != dim()) {
            throw precondition_error("arity_mismatch", "root dimension differs from the space dimension");
        }
        auto r = canonical_root(x).root;
        if (std::find(m_x0.begin(), m_x0.end(), r) == m_x0.end()) {
            m_x0.push_back(std::move(r));
        }
    }
    for (const auto &h : m_hyperplanes) {
        if (std::find(m_x0.begin(), m_x0.end(), h.normal()) == m_x0.end()) {
            throw precondition_error("normal_not_in_x", "hyperplane normal is not proportional to an element of X");
        }
    }
}

std::optional<std::size_t> Configuration::index_of(const Hyperplane &h) const
{
    for (std::size_t i = 0; i < m_hyperplanes.size(); ++i) {
        if (m_hyperplanes[i] == h) {
            return i;
        }
    }
    return std::nullopt;
}

XSubspace::XSubspace(const InnerProduct &ip, std::vector<Hyperplane> defining)
    : m_ip(ip), m_defining(std::move(defining))
{
    const std::size_t n = ip.dim();
    m_center = zero_vec(n);
    if (m_defining.empty()) {
        m_directions = identity_matrix(n);
        return;
    }
    Matrix a;
    Vec rhs;
    std::vector<Vec> normals;
    for (const auto &h : m_defining) {
        if (h.dim() != n) {
            throw precondition_error("arity_mismatch", "hyperplane dimension differs from the space dimension");
        }
        a.push_back(ip.covector(h.normal()));
        rhs.push_back(h.offset());
        normals.push_back(h.normal());
    }
    if (!solve(a, rhs)) {
        throw precondition_error("empty_intersection", "the hyperplanes have empty intersection");
    }
    m_directions = nullspace(a, n);
    for (auto i : independent_subset(normals)) {
        m_perp.push_back(normals[i]);
    }
    const Matrix an = matmul(a, from_columns(m_perp, n));
    const auto y = solve(an, rhs);
    m_center = perp_vector(*y);
}

Point XSubspace::point_at(const Vec &s) const
{
    if (s.size() != dim()) {
        throw precondition_error("arity_mismatch", "direction coordinates have the wrong length");
    }
    Point z = m_center;
    for (std::size_t j = 0; j < s.size(); ++j) {
        z = z + s[j] * m_directions[j];
    }
    return z;
}

Vec XSubspace::perp_vector(const Vec &t) const
{
    if (t.size() != codim()) {
        throw precondition_error("arity_mismatch", "transversal coordinates have the wrong length");
    }
    Vec v = zero_vec(ambient_dim());
    for (std::size_t j = 0; j < t.size(); ++j) {
        v = v + t[j] * m_perp[j];
    }
    return v;
}

bool XSubspace::contains(const Point &z) const
{
    for (const auto &h : m_defining) {
        if (!h.contains(m_ip, z)) {
            return false;
        }
    }
    return true;
}

bool XSubspace::in_perp(const Vec &v) const
{
    for (const auto &b : m_directions) {
        if (!m_ip.dot(v, b).is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<Vec> XSubspace::perp_coordinates(const Vec &v) const
{
    if (codim() == 0) {
        return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    }
    return solve(from_columns(m_perp, ambient_dim()), v);
}

Vec XSubspace::direction_projection(const Vec &v) const
{
    Vec row;
    for (const auto &b : m_directions) {
        row.push_back(m_ip.dot(b, v));
    }
    return direction_ip().vector_of(row);
}

Matrix XSubspace::adapted_frame() const
{
    std::vector<Vec> all = m_directions;
    all.insert(all.end(), m_perp.begin(), m_perp.end());
    return from_columns(all, ambient_dim());
}

XSubspace subspace_from(const InnerProduct &ip, const std::vector<Hyperplane> &hyperplanes)
{
    return XSubspace(ip, hyperplanes);
}

HyperplanesThrough hyperplanes_through(const Configuration &cfg, const XSubspace &l)
{
    HyperplanesThrough out;
    for (std::size_t i = 0; i < cfg.hyperplanes().size(); ++i) {
        const auto &h = cfg.hyperplanes()[i];
        if (l.in_perp(h.normal()) && h.contains(cfg.ip(), l.center())) {
            out.indices.push_back(i);
        }
    }
    for (const auto &x : cfg.x_set()) {
        if (l.in_perp(x)) {
            out.x_of_l.push_back(x);
        }
    }
    return out;
}

Configuration induced_config(const Configuration &cfg, const XSubspace &l, const std::vector<Vec> &support)
{
    const InnerProduct gl = l.direction_ip();
    std::map<Hyperplane, unsigned> merged;
    for (const auto &t : support) {
        const Point base = l.center() + l.perp_vector(t);
        for (std::size_t i = 0; i < cfg.hyperplanes().size(); ++i) {
            const auto &h = cfg.hyperplanes()[i];
            Vec beta;
            for (const auto &b : l.direction_basis()) {
                beta.push_back(cfg.ip().dot(h.normal(), b));
            }
            if (is_zero(beta)) {
                continue;
            }
            const Hyperplane hl = Hyperplane::from_equation(gl, beta, -h.value(cfg.ip(), base));
            auto [it, inserted] = merged.try_emplace(hl, cfg.multiplicity()[i]);
            if (!inserted) {
                it->second = std::max(it->second, cfg.multiplicity()[i]);
            }
        }
    }
    std::vector<Hyperplane> hyps;
    std::vector<unsigned> mult;
    for (const auto &[h, m] : merged) {
        hyps.push_back(h);
        mult.push_back(m);
    }
    std::vector<Vec> xl;
    for (const auto &x : cfg.x_set()) {
        if (!l.in_perp(x)) {
            xl.push_back(l.direction_projection(x));
        }
    }
    if (hyps.empty() && xl.empty()) {
        return Configuration(gl, {}, {});
    }
    return Configuration(gl, std::move(hyps), std::move(mult), std::move(xl));
}

Polynomial pi_omega_d(const Configuration &cfg, const Point &center, const Rational &radius2,
                      const std::optional<std::vector<unsigned>> &d)
{
    const auto &mult = d ? *d : cfg.multiplicity();
    if (mult.size() != cfg.hyperplanes().size()) {
        throw precondition_error("arity_mismatch", "one exponent per hyperplane is required");
    }
    Polynomial p = Polynomial::constant(cfg.dim(), Scalar(1));
    for (std::size_t i = 0; i < cfg.hyperplanes().size(); ++i) {
        const auto &h = cfg.hyperplanes()[i];
        const Rational lhs = h.value(cfg.ip(), center).norm2();
        const Rational rhs = radius2 * cfg.ip().dot(h.normal(), h.normal()).re();
        if (lhs < rhs && mult[i] > 0) {
            p = p * h.form(cfg.ip()).pow(mult[i]);
        }
    }
    return p;
}

} // namespace lc
