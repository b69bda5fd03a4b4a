#include <laurentcalc/laurent_operator.hpp>

#include <map>

#include <laurentcalc/error.hpp>

namespace lc
{

namespace
{

void check_denominators(const RationalFn &f, const Configuration &cfg)
{
    for (const auto &[h, k] : f.denominator()) {
        if (!cfg.index_of(h)) {
            throw precondition_error("denominator_not_in_config", "a denominator hyperplane is not in the configuration");
        }
    }
}

RationalFn apply_operator(const DiffOp &u, const RationalFn &r, std::size_t offset)
{
    const std::size_t n = r.dim();
    std::map<Monomial, RationalFn> memo;
    memo.emplace(Monomial(u.dim(), 0), r);
    // d^b r, built by differentiating a cached lower derivative once.
    auto derivative = [&](const Monomial &b, auto &self) -> const RationalFn & {
        if (auto it = memo.find(b); it != memo.end()) {
            return it->second;
        }
        std::size_t j = 0;
        while (b[j] == 0) {
            ++j;
        }
        Monomial lower = b;
        --lower[j];
        RationalFn d = self(lower, self).derivative(unit_vec(n, offset + j));
        return memo.emplace(b, std::move(d)).first->second;
    };
    RationalFn out(r.ip(), Polynomial(n));
    for (const auto &[b, c] : u.symbol().terms()) {
        out += c * derivative(b, derivative);
    }
    return out;
}

} // namespace

RationalFn laurent_operator_apply(const LaurentFunctional &l, const Configuration &cfg, const RationalFn &f,
                                  const XSubspace &lsub)
{
    if (!(f.ip() == cfg.ip()) || !(lsub.ip() == cfg.ip())) {
        throw precondition_error("space_mismatch", "function, configuration and subspace live on different spaces");
    }
    const InnerProduct gperp = lsub.perp_ip();
    if (!(l.ip() == gperp)) {
        throw precondition_error("space_mismatch",
                                 "the functional must live on the transversal space of the subspace");
    }
    check_denominators(f, cfg);
    const std::size_t k = lsub.dim(), m = lsub.codim();
    const InnerProduct gl = lsub.direction_ip();
    const InnerProduct block(block_diagonal(gl.gram(), gperp.gram()));
    const RationalFn lifted = f.pullback(AffineMap{lsub.center(), lsub.adapted_frame()}, block);

    std::vector<std::size_t> tvars;
    for (std::size_t j = 0; j < m; ++j) {
        tvars.push_back(k + j);
    }
    Matrix section = zero_matrix(k + m, k);
    for (std::size_t j = 0; j < k; ++j) {
        section[j][j] = Scalar(1);
    }

    RationalFn out(gl, Polynomial(k));
    std::vector<Vec> support;
    for (const auto &s : l.summands()) {
        support.push_back(s.support);
        const Polynomial pi = s.frame.pi(s.d_max).translate(-s.support).embed(k + m, tvars);
        const RationalFn r = RationalFn(block, pi) * lifted;
        const RationalFn ur = apply_operator(DiffOp(s.u.symbol().embed(k + m, tvars)), r, 0);
        Point origin = zero_vec(k);
        origin.insert(origin.end(), s.support.begin(), s.support.end());
        try {
            out += ur.pullback(AffineMap{origin, section}, gl);
        } catch (const precondition_error &e) {
            if (e.code() == "denominator_vanishes") {
                throw precondition_error("functional_order_insufficient",
                                         "a pole along the subspace exceeds the functional order");
            }
            throw;
        }
    }
    const Configuration induced = induced_config(cfg, lsub, support);
    for (const auto &[h, p] : out.denominator()) {
        if (!induced.index_of(h)) {
            throw precondition_error("internal", "output denominator outside the induced configuration");
        }
    }
    return out;
}

InnerProduct doubled_inner_product(const InnerProduct &ip)
{
    Matrix g = block_diagonal(ip.gram(), ip.gram());
    for (auto &row : g) {
        for (auto &x : row) {
            x *= Scalar(1, 2);
        }
    }
    return InnerProduct(std::move(g));
}

namespace
{

Hyperplane factor_hyperplane(const InnerProduct &ip, const InnerProduct &doubled, const Hyperplane &h, bool second)
{
    const std::size_t n = ip.dim();
    const Vec cov = ip.covector(h.normal());
    Vec row = zero_vec(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        row[(second ? n : 0) + i] = cov[i];
    }
    return Hyperplane::from_equation(doubled, row, h.offset());
}

} // namespace

Configuration doubled_config(const Configuration &cfg)
{
    const InnerProduct dbl = doubled_inner_product(cfg.ip());
    const std::size_t n = cfg.dim();
    std::vector<Hyperplane> hyps;
    std::vector<unsigned> mult;
    for (int f = 0; f < 2; ++f) {
        for (std::size_t i = 0; i < cfg.hyperplanes().size(); ++i) {
            hyps.push_back(factor_hyperplane(cfg.ip(), dbl, cfg.hyperplanes()[i], f == 1));
            mult.push_back(cfg.multiplicity()[i]);
        }
    }
    std::vector<Vec> x;
    for (int f = 0; f < 2; ++f) {
        for (const auto &xi : cfg.x_set()) {
            Vec v = zero_vec(2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                v[(f == 1 ? n : 0) + i] = xi[i];
            }
            x.push_back(std::move(v));
        }
    }
    return Configuration(dbl, std::move(hyps), std::move(mult), std::move(x));
}

XSubspace doubled_subspace(const XSubspace &lsub)
{
    const InnerProduct dbl = doubled_inner_product(lsub.ip());
    std::vector<Hyperplane> hyps;
    for (int f = 0; f < 2; ++f) {
        for (const auto &h : lsub.defining()) {
            hyps.push_back(factor_hyperplane(lsub.ip(), dbl, h, f == 1));
        }
    }
    return XSubspace(dbl, std::move(hyps));
}

RationalFn lf_diagonal_apply(const LaurentFunctional &l, const Configuration &cfg, const RationalFn &phi,
                             const XSubspace &lsub)
{
    const InnerProduct dbl = doubled_inner_product(cfg.ip());
    if (!(phi.ip() == dbl)) {
        throw precondition_error("space_mismatch", "Phi must live on V x V with the half-sum inner product");
    }
    const Configuration cfg2 = doubled_config(cfg);
    check_denominators(phi, cfg2);
    const XSubspace lsub2 = doubled_subspace(lsub);
    const std::size_t m = lsub.codim(), n = cfg.dim();
    if (lsub2.codim() != 2 * m) {
        throw precondition_error("internal", "doubled subspace has unexpected codimension");
    }

    // t -> (t, t) on the transversal spaces.
    Matrix iota = zero_matrix(2 * m, m);
    for (std::size_t j = 0; j < m; ++j) {
        iota[j][j] = Scalar(1);
        iota[m + j][j] = Scalar(1);
    }
    std::vector<Vec> roots;
    auto add_root = [&](const Vec &v) -> std::size_t {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (proportionality(v, roots[i])) {
                return i;
            }
        }
        roots.push_back(v);
        return roots.size() - 1;
    };
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> copies(l.summands().size());
    for (std::size_t si = 0; si < l.summands().size(); ++si) {
        for (const auto &xi : l.summands()[si].frame.roots()) {
            Vec a = zero_vec(2 * m), b = zero_vec(2 * m);
            for (std::size_t j = 0; j < m; ++j) {
                a[j] = xi[j];
                b[m + j] = xi[j];
            }
            copies[si].emplace_back(add_root(a), add_root(b));
        }
    }

    // Split each d_max between the two factors according to Phi's transversal poles.
    const InnerProduct gperp2 = lsub2.perp_ip();
    std::vector<std::optional<PoleIndex>> choice;
    for (std::size_t si = 0; si < l.summands().size(); ++si) {
        const auto &s = l.summands()[si];
        Vec tt = s.support;
        tt.insert(tt.end(), s.support.begin(), s.support.end());
        const Point at = lsub2.center() + lsub2.perp_vector(tt);
        const RootFrame frame2(gperp2, roots);
        PoleIndex first(roots.size(), 0);
        for (const auto &[h, p] : phi.denominator()) {
            if (!lsub2.in_perp(h.normal()) || !h.contains(dbl, at)) {
                continue;
            }
            // Transversal root of h: the t-vector whose form matches <normal, N t>.
            const Vec xi = gperp2.vector_of(matvec(transpose(from_columns(lsub2.perp_basis(), 2 * n)),
                                                   dbl.covector(h.normal())));
            if (auto hit = frame2.find(xi)) {
                first[hit->first] += p;
            }
        }
        PoleIndex d(roots.size(), 0);
        for (std::size_t r = 0; r < s.frame.size(); ++r) {
            const auto [ia, ib] = copies[si][r];
            const unsigned e1 = std::min(first[ia], s.d_max[r]);
            d[ia] = e1;
            d[ib] = s.d_max[r] - e1;
        }
        choice.push_back(std::move(d));
    }
    const LaurentFunctional pushed = lf_pushforward(iota, gperp2, roots, l, choice);
    const RationalFn psi = laurent_operator_apply(pushed, cfg2, phi, lsub2);

    // Diagonal s -> (c + B s, c + B s) in the direction coordinates of lsub2.
    const std::size_t k = lsub.dim();
    if (k == 0) {
        return psi.pullback(AffineMap{Vec{}, Matrix{}}, lsub.direction_ip());
    }
    const Matrix b2 = from_columns(lsub2.direction_basis(), 2 * n);
    const Matrix proj = matmul(inverse(lsub2.direction_ip().gram()), matmul(transpose(b2), dbl.gram()));
    Vec cc = lsub.center();
    cc.insert(cc.end(), lsub.center().begin(), lsub.center().end());
    const Matrix b = from_columns(lsub.direction_basis(), n);
    Matrix bb = b;
    bb.insert(bb.end(), b.begin(), b.end());
    return psi.pullback(AffineMap{matvec(proj, cc - lsub2.center()), matmul(proj, bb)}, lsub.direction_ip());
}

} // namespace lc
