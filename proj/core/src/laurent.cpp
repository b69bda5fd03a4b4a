#include <laurentcalc/laurent.hpp>

#include <algorithm>

#include <laurentcalc/error.hpp>

namespace lc
{

LaurentFunctional::LaurentFunctional(InnerProduct ip, std::vector<LaurentSummand> summands)
    : m_ip(std::move(ip)), m_summands(std::move(summands))
{
    for (std::size_t i = 0; i < m_summands.size(); ++i) {
        const auto &s = m_summands[i];
        if (s.support.size() != dim() || s.u.dim() != dim() || !(s.frame.ip() == m_ip)) {
            throw precondition_error("arity_mismatch", "summand data do not match the functional's space");
        }
        if (s.d_max.size() != s.frame.size()) {
            throw precondition_error("arity_mismatch", "d_max length differs from the number of roots");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (m_summands[j].support == s.support) {
                throw precondition_error("duplicate_support", "two summands share a support point");
            }
        }
    }
}

const LaurentSummand *LaurentFunctional::summand_at(const Point &a) const
{
    for (const auto &s : m_summands) {
        if (s.support == a) {
            return &s;
        }
    }
    return nullptr;
}

Scalar summand_apply(const LaurentSummand &s, const Germ &g, bool normalize)
{
    if (!(g.base() == s.support)) {
        return Scalar(0);
    }
    const Germ h = normalize ? germ_normalize(g) : g;
    Germ r;
    try {
        r = h.reframe(s.frame);
    } catch (const precondition_error &) {
        throw precondition_error("functional_order_insufficient",
                                 "the germ has a pole along a root outside the functional's X");
    }
    if (!preceq(r.pole(), s.d_max)) {
        throw precondition_error("functional_order_insufficient",
                                 "pole " + to_string(r.pole()) + " exceeds d_max " + to_string(s.d_max));
    }
    const DiffOp ug = j_map(s.u, s.d_max, r.pole(), s.frame.roots(), s.support, s.frame.ip());
    if (r.order() < ug.order()) {
        throw precondition_error("jet_order_too_small", "jet order " + std::to_string(r.order()) +
                                                            " is below the operator order " +
                                                            std::to_string(ug.order()));
    }
    return ug.apply_at_origin(r.jet());
}

Scalar lf_apply(const LaurentFunctional &l, const Germ &g, bool normalize)
{
    if (g.dim() != l.dim()) {
        throw precondition_error("arity_mismatch", "germ and functional live on spaces of different dimension");
    }
    Scalar v;
    for (const auto &s : l.summands()) {
        v += summand_apply(s, g, normalize);
    }
    return v;
}

Scalar lf_apply(const LaurentFunctional &l, const RationalFn &f)
{
    if (!(f.ip() == l.ip())) {
        throw precondition_error("space_mismatch", "function and functional live on different spaces");
    }
    Scalar v;
    for (const auto &s : l.summands()) {
        const Germ g = rationalfn_germ_at(f, s.support, std::max(s.u.order(), 0));
        v += summand_apply(s, g, false);
    }
    return v;
}

LaurentFunctional lf_from_evaluation(const InnerProduct &ip, const Point &a, const std::vector<Vec> &roots,
                                     const PoleIndex &d_max)
{
    const RootFrame frame(ip, roots);
    if (d_max.size() != frame.size() || a.size() != ip.dim()) {
        throw precondition_error("arity_mismatch", "evaluation data differ in dimension");
    }
    DiffOp u = DiffOp::identity(ip.dim());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (unsigned k = 0; k < d_max[i]; ++k) {
            u = u * DiffOp::directional(roots[i]);
        }
    }
    const Scalar c = u.apply_at_origin(frame.pi(d_max));
    u = c.inverse() * u;
    return LaurentFunctional(ip, {LaurentSummand{a, frame, d_max, u}});
}

namespace
{

DiffOp push_operator(const DiffOp &u0, const Matrix &iota)
{
    const std::size_t n = iota.size(), n0 = cols(iota);
    std::vector<Polynomial> subs;
    for (std::size_t j = 0; j < n0; ++j) {
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = iota[i][j];
        }
        subs.push_back(Polynomial::linear(col));
    }
    if (n0 == 0) {
        return DiffOp(Polynomial::constant(n, u0.symbol().constant_term()));
    }
    return DiffOp(u0.symbol().compose(subs));
}

} // namespace

LaurentFunctional lf_pushforward(const Matrix &iota, const InnerProduct &ip, const std::vector<Vec> &roots,
                                 const LaurentFunctional &l0, const std::vector<std::optional<PoleIndex>> &d_choice)
{
    const std::size_t n = ip.dim(), n0 = l0.dim();
    if (iota.size() != n || cols(iota) != n0 || !is_real(iota)) {
        throw precondition_error("arity_mismatch", "embedding shape does not match the spaces");
    }
    if (rank(iota) != n0) {
        throw precondition_error("not_injective", "embedding is not injective");
    }
    const Matrix it = transpose(iota);
    if (!(matmul(it, matmul(ip.gram(), iota)) == l0.ip().gram())) {
        throw precondition_error("not_isometric", "source space does not carry the pulled-back inner product");
    }
    if (!d_choice.empty() && d_choice.size() != l0.summands().size()) {
        throw precondition_error("arity_mismatch", "one d_max choice per summand is required");
    }
    const RootFrame frame(ip, roots);
    std::vector<Vec> projected;
    for (const auto &xi : roots) {
        Vec p = l0.ip().vector_of(matvec(it, ip.covector(xi)));
        if (is_zero(p)) {
            throw precondition_error("orthogonal_root", "an element of X is orthogonal to the embedded space");
        }
        projected.push_back(std::move(p));
    }
    std::vector<LaurentSummand> out;
    for (std::size_t si = 0; si < l0.summands().size(); ++si) {
        const auto &s0 = l0.summands()[si];
        std::vector<std::optional<std::pair<std::size_t, Scalar>>> cls;
        for (const auto &p : projected) {
            cls.push_back(s0.frame.find(p));
        }
        PoleIndex d(roots.size(), 0);
        if (!d_choice.empty() && d_choice[si]) {
            d = *d_choice[si];
            if (d.size() != roots.size()) {
                throw precondition_error("arity_mismatch", "chosen d_max length differs from the number of roots");
            }
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (d[i] > 0 && !cls[i]) {
                    throw precondition_error("functional_order_insufficient",
                                             "chosen d_max puts a pole on a root unknown to the functional");
                }
            }
        } else {
            for (std::size_t j = 0; j < s0.frame.size(); ++j) {
                for (std::size_t i = 0; i < roots.size(); ++i) {
                    if (cls[i] && cls[i]->first == j) {
                        d[i] = s0.d_max[j];
                        break;
                    }
                }
            }
        }
        PoleIndex d0 = s0.frame.zero_pole();
        Scalar c(1);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (d[i] > 0) {
                d0[cls[i]->first] += d[i];
                c *= pow(cls[i]->second, d[i]);
            }
        }
        if (!preceq(d0, s0.d_max)) {
            throw precondition_error("functional_order_insufficient",
                                     "chosen d_max is not admissible for the source functional");
        }
        const DiffOp u0 = j_map(s0.u, s0.d_max, d0, s0.frame.roots(), s0.support, s0.frame.ip());
        const DiffOp v = c.inverse() * push_operator(u0, iota);
        out.push_back(LaurentSummand{matvec(iota, s0.support), frame, d, v});
    }
    return LaurentFunctional(ip, std::move(out));
}

LaurentFunctional lf_mul_action(const RationalFn &psi, const LaurentFunctional &l)
{
    if (!(psi.ip() == l.ip())) {
        throw precondition_error("space_mismatch", "function and functional live on different spaces");
    }
    const std::size_t n = l.dim();
    std::vector<LaurentSummand> out;
    for (const auto &s : l.summands()) {
        const int ord = std::max(s.u.order(), 0);
        if (psi.is_zero()) {
            out.push_back(LaurentSummand{s.support, s.frame, s.d_max, DiffOp::zero(n)});
            continue;
        }
        PoleIndex k = s.frame.zero_pole(), e = s.frame.zero_pole();
        Polynomial num = psi.numerator();
        for (std::size_t i = 0; i < s.frame.size(); ++i) {
            const Polynomial li = root_form(l.ip(), s.frame.roots()[i], s.support);
            while (auto q = exact_divide_linear(num, li)) {
                num = std::move(*q);
                ++k[i];
            }
        }
        Scalar scale(1);
        Polynomial taylor = num.translate(s.support).truncate(ord);
        for (const auto &[h, p] : psi.denominator()) {
            if (h.contains(l.ip(), s.support)) {
                auto hit = s.frame.find(h.normal());
                if (!hit) {
                    throw precondition_error("functional_order_insufficient",
                                             "multiplier has a pole along a root outside the functional's X");
                }
                e[hit->first] += p;
                scale *= pow(hit->second, p);
                continue;
            }
            const Polynomial inv = taylor_inverse(h.form(l.ip()).translate(s.support), ord);
            for (unsigned j = 0; j < p; ++j) {
                taylor = taylor.mul_truncated(inv, ord);
            }
        }
        PoleIndex d = s.d_max + k;
        if (!preceq(e, d)) {
            throw precondition_error("functional_order_insufficient", "multiplier pole exceeds the functional order");
        }
        d = d - e;
        out.push_back(LaurentSummand{s.support, s.frame, d, leibniz_flatten_taylor(s.u, taylor * scale.inverse())});
    }
    return LaurentFunctional(l.ip(), std::move(out));
}

LaurentFunctional lf_mul_action(const Germ &psi, const LaurentFunctional &l)
{
    std::vector<LaurentSummand> out;
    for (const auto &s : l.summands()) {
        if (!(s.support == psi.base())) {
            throw precondition_error("base_mismatch", "multiplier germ is not based at every support point");
        }
        Germ r;
        try {
            r = psi.reframe(s.frame);
        } catch (const precondition_error &) {
            throw precondition_error("functional_order_insufficient",
                                     "multiplier has a pole along a root outside the functional's X");
        }
        if (!preceq(r.pole(), s.d_max)) {
            throw precondition_error("functional_order_insufficient", "multiplier pole exceeds the functional order");
        }
        if (r.order() < s.u.order()) {
            throw precondition_error("jet_order_too_small", "multiplier jet order is below the operator order");
        }
        out.push_back(LaurentSummand{s.support, s.frame, s.d_max - r.pole(), leibniz_flatten_taylor(s.u, r.jet())});
    }
    return LaurentFunctional(l.ip(), std::move(out));
}

LaurentFunctional lf_diff_action(const Vec &v, const LaurentFunctional &l)
{
    if (v.size() != l.dim()) {
        throw precondition_error("arity_mismatch", "direction dimension differs from the space dimension");
    }
    std::vector<LaurentSummand> out;
    for (const auto &s : l.summands()) {
        PoleIndex low = s.d_max;
        for (auto &x : low) {
            x = x > 0 ? x - 1 : 0;
        }
        // pi_{d_max} v phi = v(P h) - Q h with h = pi_low phi.
        const Polynomial p = s.frame.pi(s.d_max - low);
        Polynomial q = s.frame.pi(s.d_max).directional(v);
        for (std::size_t i = 0; i < s.frame.size(); ++i) {
            for (unsigned k = 0; k < low[i]; ++k) {
                q = *exact_divide_linear(q, s.frame.form(i));
            }
        }
        const DiffOp uv = s.u * DiffOp::directional(v);
        const DiffOp u = leibniz_flatten_taylor(uv, p) - leibniz_flatten_taylor(s.u, q);
        out.push_back(LaurentSummand{s.support, s.frame, low, u});
    }
    return LaurentFunctional(l.ip(), std::move(out));
}

AnnihilatorWitness lf_annihilator_witness(const Germ &g)
{
    const Germ h = germ_normalize(g);
    if (h.is_holomorphic()) {
        return {true, std::nullopt};
    }
    std::size_t i = 0;
    while (h.pole()[i] == 0) {
        ++i;
    }
    const auto &frame = h.frame();
    const std::size_t n = h.dim();
    // Restrict the numerator jet to xi^perp and read off a nonvanishing Taylor coefficient.
    const std::vector<Vec> basis = nullspace(Matrix{frame.ip().covector(frame.roots()[i])}, n);
    const Polynomial r = h.jet().compose_affine(zero_vec(n), from_columns(basis, n));
    if (r.is_zero()) {
        throw precondition_error("order_too_small", "jet order too small to certify the pole");
    }
    const Monomial *best = nullptr;
    for (const auto &[m, c] : r.terms()) {
        if (best == nullptr || total_degree(m) < total_degree(*best)) {
            best = &m;
        }
    }
    DiffOp u = DiffOp::identity(n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (unsigned k = 0; k < (*best)[j]; ++k) {
            u = u * DiffOp::directional(basis[j]);
        }
    }
    LaurentFunctional l(frame.ip(), {LaurentSummand{h.base(), frame, h.pole(), u}});
    return {false, std::move(l)};
}

} // namespace lc
