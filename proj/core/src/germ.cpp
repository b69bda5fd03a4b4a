#include <laurentcalc/germ.hpp>

#include <algorithm>

#include <laurentcalc/error.hpp>

namespace lc
{

RootFrame::RootFrame(InnerProduct ip, std::vector<Vec> roots) : m_ip(std::move(ip)), m_roots(std::move(roots))
{
    for (std::size_t i = 0; i < m_roots.size(); ++i) {
        if (m_roots[i].size() != m_ip.dim() || !is_real(m_roots[i]) || is_zero(m_roots[i])) {
            throw precondition_error("invalid_root", "roots must be nonzero real vectors of the space dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (proportionality(m_roots[i], m_roots[j])) {
                throw precondition_error("proportional_roots", "root list contains proportional roots");
            }
        }
    }
}

Polynomial RootFrame::form(std::size_t i) const
{
    return Polynomial::linear(m_ip.covector(m_roots.at(i)));
}

Polynomial RootFrame::pi(const PoleIndex &d) const
{
    return pi_a_d(m_ip, m_roots, zero_vec(dim()), d);
}

std::optional<std::pair<std::size_t, Scalar>> RootFrame::find(const Vec &xi) const
{
    for (std::size_t j = 0; j < m_roots.size(); ++j) {
        if (auto c = proportionality(xi, m_roots[j])) {
            return std::make_pair(j, *c);
        }
    }
    return std::nullopt;
}

RootFrame RootFrame::merged(const RootFrame &other) const
{
    if (!(m_ip == other.m_ip)) {
        throw precondition_error("space_mismatch", "root frames live on different spaces");
    }
    std::vector<Vec> roots = m_roots;
    for (const auto &r : other.m_roots) {
        if (!find(r)) {
            roots.push_back(r);
        }
    }
    return RootFrame(m_ip, std::move(roots));
}

Germ::Germ(Point base, RootFrame frame, PoleIndex pole, const Polynomial &jet, int order)
    : m_base(std::move(base)), m_frame(std::move(frame)), m_pole(std::move(pole)), m_jet(jet.truncate(order)),
      m_order(order)
{
    if (m_base.size() != m_frame.dim() || m_jet.dim() != m_frame.dim()) {
        throw precondition_error("arity_mismatch", "germ base, frame and jet differ in dimension");
    }
    if (m_pole.size() != m_frame.size()) {
        throw precondition_error("arity_mismatch", "pole index length differs from the number of roots");
    }
}

Germ Germ::reframe(const RootFrame &target) const
{
    if (!(target.ip() == m_frame.ip())) {
        throw precondition_error("space_mismatch", "root frames live on different spaces");
    }
    PoleIndex pole = target.zero_pole();
    Scalar scale(1);
    for (std::size_t i = 0; i < m_frame.size(); ++i) {
        if (m_pole[i] == 0) {
            continue;
        }
        auto hit = target.find(m_frame.roots()[i]);
        if (!hit) {
            throw precondition_error("root_not_in_frame", "a pole root has no proportional copy in the target frame");
        }
        pole[hit->first] += m_pole[i];
        scale *= pow(hit->second, m_pole[i]);
    }
    return Germ(m_base, target, std::move(pole), m_jet * scale.inverse(), m_order);
}

Germ germ_normalize(const Germ &g)
{
    PoleIndex pole = g.pole();
    Polynomial jet = g.jet();
    int order = g.order();
    for (std::size_t i = 0; i < pole.size(); ++i) {
        const Polynomial l = g.frame().form(i);
        while (pole[i] > 0 && order >= 1) {
            auto q = exact_divide_linear(jet, l);
            if (!q) {
                break;
            }
            jet = std::move(*q);
            --pole[i];
            --order;
        }
    }
    return Germ(g.base(), g.frame(), std::move(pole), jet, order);
}

Germ germ_mul(const Germ &g1, const Germ &g2)
{
    if (!(g1.base() == g2.base())) {
        throw precondition_error("base_mismatch", "germs at different base points");
    }
    const RootFrame frame = g1.frame().merged(g2.frame());
    const Germ a = g1.reframe(frame), b = g2.reframe(frame);
    const int order = std::min(a.order(), b.order());
    return Germ(a.base(), frame, a.pole() + b.pole(), a.jet().mul_truncated(b.jet(), order), order);
}

Germ germ_diff(const Vec &v, const Germ &g)
{
    if (g.order() < 1) {
        throw precondition_error("order_too_small", "differentiation needs a jet of order at least 1");
    }
    if (v.size() != g.dim()) {
        throw precondition_error("arity_mismatch", "direction dimension differs from the germ dimension");
    }
    const auto &frame = g.frame();
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (g.pole()[i] > 0) {
            active.push_back(i);
        }
    }
    const int order = g.order() - 1 + static_cast<int>(active.size());
    const std::size_t n = g.dim();
    // pi_{d+1_T} v(J/pi_d) = pi_T vJ - J sum_{xi in T} d(xi) <xi,v> prod_{eta in T, eta != xi} l_eta
    Polynomial pi_t = Polynomial::constant(n, Scalar(1));
    for (auto i : active) {
        pi_t = pi_t * frame.form(i);
    }
    Polynomial jet = pi_t * g.jet().directional(v);
    Polynomial sum(n);
    for (auto i : active) {
        const Scalar c = Scalar(static_cast<long>(g.pole()[i])) * frame.ip().dot(frame.roots()[i], v);
        if (c.is_zero()) {
            continue;
        }
        Polynomial t = Polynomial::constant(n, c);
        for (auto j : active) {
            if (j != i) {
                t = t * frame.form(j);
            }
        }
        sum += t;
    }
    jet -= g.jet() * sum;
    PoleIndex pole = g.pole();
    for (auto i : active) {
        ++pole[i];
    }
    return germ_normalize(Germ(g.base(), frame, std::move(pole), jet, order));
}

Germ rationalfn_germ_at(const RationalFn &f, const Point &a, int order)
{
    if (a.size() != f.dim()) {
        throw precondition_error("arity_mismatch", "point dimension differs from the space dimension");
    }
    std::vector<Vec> roots;
    PoleIndex pole;
    Polynomial jet = f.numerator().translate(a).truncate(order);
    for (const auto &[h, k] : f.denominator()) {
        if (h.contains(f.ip(), a)) {
            roots.push_back(h.normal());
            pole.push_back(k);
            continue;
        }
        const Polynomial inv = taylor_inverse(h.form(f.ip()).translate(a), order);
        for (unsigned j = 0; j < k; ++j) {
            jet = jet.mul_truncated(inv, order);
        }
    }
    return Germ(a, RootFrame(f.ip(), std::move(roots)), std::move(pole), jet, order);
}

Germ rationalfn_germ_at(const RationalFn &f, const Point &a, int order, const RootFrame &frame)
{
    return rationalfn_germ_at(f, a, order).reframe(frame);
}

Germ germ_pullback(const Germ &g, const Matrix &iota, const InnerProduct &ip0, const Point &a0)
{
    const std::size_t n = g.dim(), n0 = ip0.dim();
    if (iota.size() != n || cols(iota) != n0 || a0.size() != n0) {
        throw precondition_error("arity_mismatch", "embedding shape does not match the germ and source space");
    }
    if (!(matvec(iota, a0) == g.base())) {
        throw precondition_error("base_mismatch", "the germ is not based at the image point");
    }
    const auto &frame = g.frame();
    const Matrix it = transpose(iota);
    std::vector<Vec> roots;
    PoleIndex pole;
    Scalar scale(1);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const Vec p = ip0.vector_of(matvec(it, frame.ip().covector(frame.roots()[i])));
        if (is_zero(p)) {
            if (g.pole()[i] > 0) {
                throw precondition_error("orthogonal_root", "a pole root is orthogonal to the embedded space");
            }
            continue;
        }
        std::size_t j = 0;
        Scalar c(1);
        for (; j < roots.size(); ++j) {
            if (auto f = proportionality(p, roots[j])) {
                c = *f;
                break;
            }
        }
        if (j == roots.size()) {
            roots.push_back(p);
            pole.push_back(0);
        }
        pole[j] += g.pole()[i];
        scale *= pow(c, g.pole()[i]);
    }
    const Polynomial jet = g.jet().compose_affine(zero_vec(n), iota);
    return Germ(a0, RootFrame(ip0, std::move(roots)), std::move(pole), jet * scale.inverse(), g.order());
}

bool germ_equivalent(const Germ &g1, const Germ &g2)
{
    if (!(g1.base() == g2.base())) {
        return false;
    }
    const RootFrame frame = g1.frame().merged(g2.frame());
    const Germ a = g1.reframe(frame), b = g2.reframe(frame);
    PoleIndex top = a.pole();
    for (std::size_t i = 0; i < top.size(); ++i) {
        top[i] = std::max(top[i], b.pole()[i]);
    }
    const PoleIndex ea = top - a.pole(), eb = top - b.pole();
    const int oa = a.order() + static_cast<int>(total(ea));
    const int ob = b.order() + static_cast<int>(total(eb));
    const int order = std::min(oa, ob);
    const Polynomial ja = (a.jet() * frame.pi(ea)).truncate(order);
    const Polynomial jb = (b.jet() * frame.pi(eb)).truncate(order);
    return ja == jb;
}

} // namespace lc
