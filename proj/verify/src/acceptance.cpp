#include <laurentcalc/verify/acceptance.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <laurentcalc/error.hpp>
#include <laurentcalc/exp_series.hpp>
#include <laurentcalc/laurent.hpp>
#include <laurentcalc/laurent_operator.hpp>
#include <laurentcalc/rootsys.hpp>
#include <laurentcalc/verify/oracles.hpp>
#include <laurentcalc/verify/random.hpp>

namespace lc::verify
{

namespace
{

struct Tally {
    long checks = 0;
    long failures = 0;
    long nonzero = 0;
    std::string first;

    // Exact comparison of a computed value against its reference.
    void same(const Scalar &got, const Scalar &want, const std::string &what)
    {
        nonzero += want.is_zero() ? 0 : 1;
        check(got == want, what);
    }

    void check(bool ok, const std::string &what)
    {
        ++checks;
        if (!ok) {
            if (failures == 0) {
                first = what;
            }
            ++failures;
        }
    }
};

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome finish(const Tally &t, std::string summary)
{
    if (t.nonzero > 0) {
        summary += ", " + std::to_string(t.nonzero) + " of " + std::to_string(t.checks) + " values nonzero";
    }
    if (t.failures == 0) {
        return {true, summary};
    }
    std::ostringstream os;
    os << summary << "; " << t.failures << " of " << t.checks << " checks failed, first: " << t.first;
    return {false, os.str()};
}

std::string instance(const char *what, int i)
{
    return std::string(what) + " #" + std::to_string(i);
}

// Runs body(i) for each instance, recording exceptions as failures.
void each(Tally &t, int count, const char *what, const std::function<void(int)> &body)
{
    for (int i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (const precondition_error &e) {
            t.check(false, instance(what, i) + " raised " + e.code() + ": " + e.what());
        } catch (const std::exception &e) {
            t.check(false, instance(what, i) + " raised " + e.what());
        }
    }
}

InnerProduct random_ip(Rng &rng, std::size_t n)
{
    return InnerProduct(rng.spd_gram(n));
}

// Dense in low degrees, sparse up to the full order.
Polynomial low_jet(Rng &rng, std::size_t n, int order)
{
    return rng.poly(n, std::min(order, 3), 10) + rng.poly(n, order, 4);
}

// 1. ---------------------------------------------------------------------

Outcome cocycle(Rng &rng, double &)
{
    Tally t;
    each(t, 500, "cocycle", [&](int i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const InnerProduct ip = random_ip(rng, n);
        const auto roots = rng.roots(n, static_cast<std::size_t>(rng.uniform(1, 3)));
        const Point a = rng.int_vec(n, 2);
        const PoleIndex d = rng.pole(roots.size(), 2);
        const PoleIndex d1 = rng.pole_below(d), d2 = rng.pole_below(d1);
        const DiffOp u = rng.diffop(n, 4, 4);
        const DiffOp lhs = j_map(j_map(u, d, d1, roots, a, ip), d1, d2, roots, a, ip);
        t.nonzero += lhs.is_zero() ? 0 : 1;
        t.check(lhs == j_map(u, d, d2, roots, a, ip), instance("cocycle", i));
    });
    return finish(t, "500 instances");
}

// 2. ---------------------------------------------------------------------

Outcome residue(Rng &rng, double &)
{
    Tally t;
    const Vec e1{Scalar(1)};
    each(t, 100, "germ", [&](int i) {
        const Scalar g(rng.uniform(1, 3), rng.uniform(1, 2));
        const InnerProduct ip(Matrix{Vec{g}});
        const unsigned m = static_cast<unsigned>(rng.uniform(0, 3));

        Dense num(5);
        for (auto &c : num) {
            c = rng.rational(5, 3);
        }
        num[0] = rng.nonzero_rational(5, 3);
        Polynomial p(1);
        for (unsigned k = 0; k < num.size(); ++k) {
            p.add_term({k}, num[k]);
        }

        // (g z)^m times factors (g z - c)^e.
        Dense den{Scalar(1)};
        std::vector<RationalFn::Factor> factors;
        if (m > 0) {
            factors.emplace_back(Hyperplane(e1, 0), m);
            for (unsigned k = 0; k < m; ++k) {
                den = dense_mul(den, Dense{Scalar(0), g});
            }
        }
        std::set<Scalar> used;
        const int nf = rng.uniform(0, 2);
        for (int f = 0; f < nf; ++f) {
            const Scalar c = rng.nonzero_rational(4, 2);
            if (!used.insert(c).second) {
                continue;
            }
            const unsigned e = static_cast<unsigned>(rng.uniform(1, 2));
            factors.emplace_back(Hyperplane(e1, c), e);
            for (unsigned k = 0; k < e; ++k) {
                den = dense_mul(den, Dense{-c, g});
            }
        }
        const RationalFn f(ip, p, factors);
        const RootFrame frame(ip, {e1});

        const unsigned mp = std::max(m, 1u) + static_cast<unsigned>(rng.uniform(0, 1));
        const Germ germ = rationalfn_germ_at(f, Vec{Scalar(0)}, static_cast<int>(mp) + 4, frame);
        for (int k = -static_cast<int>(mp); k <= 3; ++k) {
            const unsigned ord = static_cast<unsigned>(k + static_cast<int>(mp));
            DiffOp u = DiffOp::monomial({ord}, (Scalar(factorial(ord)) * pow(g, mp)).inverse());
            const LaurentFunctional l(ip, {LaurentSummand{Vec{Scalar(0)}, frame, {mp}, u}});
            t.same(lf_apply(l, germ), laurent_coefficient(num, den, k),
                    instance("germ", i) + " coefficient " + std::to_string(k));
        }
    });
    return finish(t, "100 germs");
}

// 3. ---------------------------------------------------------------------

// Root in transversal coordinates representing z -> <nu, N t>.
Vec transversal_root(const XSubspace &lsub, const Vec &nu)
{
    const auto &perp = lsub.perp_basis();
    Vec row(perp.size());
    for (std::size_t j = 0; j < perp.size(); ++j) {
        row[j] = lsub.ip().dot(nu, perp[j]);
    }
    return lsub.perp_ip().vector_of(row);
}

bool contains_translate(const XSubspace &lsub, const Hyperplane &h, const Vec &t)
{
    return lsub.in_perp(h.normal()) && h.contains(lsub.ip(), lsub.center() + lsub.perp_vector(t));
}

Outcome operator_pointwise(Rng &rng, double &)
{
    Tally t;
    long points = 0;
    each(t, 25, "instance", [&](int i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        const std::size_t k = n == 2 ? 1 : static_cast<std::size_t>(rng.uniform(1, 2));
        const InnerProduct ip = random_ip(rng, n);

        std::vector<Vec> normals;
        do {
            normals = rng.roots(n, k);
        } while (normals.size() != k || rank_of(normals) != k);
        std::vector<Hyperplane> hyps;
        for (const auto &nu : normals) {
            hyps.emplace_back(nu, rng.rational(3));
        }
        const XSubspace lsub = subspace_from(ip, hyps);

        const Vec shift = rng.nonzero_int_vec(k, 1);
        const Point shifted = lsub.center() + lsub.perp_vector(shift);
        auto add = [&](const Hyperplane &h) {
            if (std::find(hyps.begin(), hyps.end(), h) == hyps.end()) {
                hyps.push_back(h);
            }
        };
        const Vec &nu = normals[rng.index(k)];
        add(Hyperplane(nu, ip.dot(nu, shifted)));
        const int generic = rng.uniform(1, 2);
        for (int j = 0; j < generic; ++j) {
            const Vec v = rng.nonzero_int_vec(n, 2);
            if (!lsub.in_perp(v)) {
                add(Hyperplane(v, rng.rational(3)));
            }
        }
        std::vector<unsigned> mult;
        std::vector<RationalFn::Factor> den;
        for (const auto &h : hyps) {
            mult.push_back(static_cast<unsigned>(rng.uniform(1, 2)));
            const unsigned pw = static_cast<unsigned>(rng.uniform(0, static_cast<int>(mult.back())));
            if (pw > 0) {
                den.emplace_back(h, pw);
            }
        }
        const Configuration cfg(ip, hyps, mult);
        Polynomial num = rng.poly(n, 2, 3);
        if (num.is_zero()) {
            num = Polynomial::constant(n, 1);
        }
        const RationalFn f(ip, num, den);

        const InnerProduct gperp = lsub.perp_ip();
        std::vector<Vec> roots;
        PoleIndex order;
        for (std::size_t h = 0; h < hyps.size(); ++h) {
            if (!lsub.in_perp(hyps[h].normal())) {
                continue;
            }
            const Vec xi = transversal_root(lsub, hyps[h].normal());
            std::size_t j = 0;
            while (j < roots.size() && !proportionality(xi, roots[j])) {
                ++j;
            }
            if (j == roots.size()) {
                roots.push_back(xi);
                order.push_back(0);
            }
            order[j] = std::max(order[j], mult[h]);
        }
        const RootFrame frame(gperp, roots);
        std::vector<LaurentSummand> summands;
        auto extra = [&] {
            PoleIndex d = order;
            for (auto &x : d) {
                x += static_cast<unsigned>(rng.uniform(0, 1));
            }
            return d;
        };
        summands.push_back(LaurentSummand{zero_vec(k), frame, extra(), rng.diffop(k, 2, 3)});
        if (rng.chance(50)) {
            summands.push_back(LaurentSummand{shift, frame, extra(), rng.diffop(k, 2, 3)});
        }
        const LaurentFunctional l(gperp, summands);

        const RationalFn out = laurent_operator_apply(l, cfg, f, lsub);
        const Matrix nmat = from_columns(lsub.perp_basis(), n);
        int found = 0;
        for (int attempt = 0; attempt < 400 && found < 20; ++attempt) {
            const Vec s = rng.int_vec(lsub.dim(), 4);
            const Point w = lsub.point_at(s);
            const auto expected = out.try_eval(s);
            if (!expected) {
                continue;
            }
            bool regular = true;
            for (const auto &sm : summands) {
                for (const auto &h : hyps) {
                    if (!contains_translate(lsub, h, sm.support) &&
                        h.contains(ip, w + lsub.perp_vector(sm.support))) {
                        regular = false;
                    }
                }
            }
            if (!regular) {
                continue;
            }
            ++found;
            const RationalFn local = f.pullback(AffineMap{w, nmat}, gperp);
            t.same(lf_apply(l, local), *expected, instance("instance", i));
        }
        points += found;
        t.check(found == 20, instance("instance", i) + " has fewer than 20 regular sample points");
    });
    return finish(t, "25 instances, " + std::to_string(points) + " points");
}

// 4. ---------------------------------------------------------------------

Outcome pushforward(Rng &rng, double &)
{
    Tally t;
    int axis_count = 0;
    each(t, 100, "instance", [&](int i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        const std::size_t n0 = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n) - 1));
        const InnerProduct ip = random_ip(rng, n);
        Matrix iota;
        if (i % 2 == 0) {
            ++axis_count;
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng.engine());
            iota = zero_matrix(n, n0);
            for (std::size_t j = 0; j < n0; ++j) {
                iota[idx[j]][j] = Scalar(1);
            }
        } else {
            iota = rng.injective_matrix(n, n0);
        }
        const Matrix it = transpose(iota);
        const InnerProduct ip0(matmul(it, matmul(ip.gram(), iota)));

        std::vector<Vec> x;
        std::vector<Vec> projected;
        while (x.empty()) {
            for (auto &xi : rng.roots(n, static_cast<std::size_t>(rng.uniform(1, 3)))) {
                const Vec p = ip0.vector_of(matvec(it, ip.covector(xi)));
                if (!is_zero(p)) {
                    x.push_back(xi);
                    projected.push_back(p);
                }
            }
        }
        std::vector<Vec> roots0;
        std::vector<std::size_t> cls;
        for (const auto &p : projected) {
            std::size_t j = 0;
            while (j < roots0.size() && !proportionality(p, roots0[j])) {
                ++j;
            }
            if (j == roots0.size()) {
                roots0.push_back(p);
            }
            cls.push_back(j);
        }
        const PoleIndex d0 = rng.pole(roots0.size(), 2);
        const Point a0 = rng.int_vec(n0, 2);
        const DiffOp u0 = rng.diffop(n0, 2, 3);
        const LaurentFunctional l0(ip0, {LaurentSummand{a0, RootFrame(ip0, roots0), d0, u0}});

        std::vector<std::optional<PoleIndex>> choice;
        if (rng.chance(50)) {
            PoleIndex d(x.size(), 0);
            for (std::size_t j = 0; j < roots0.size(); ++j) {
                unsigned left = static_cast<unsigned>(rng.uniform(0, static_cast<int>(d0[j])));
                for (std::size_t r = 0; r < x.size() && left > 0; ++r) {
                    if (cls[r] == j) {
                        const unsigned take = static_cast<unsigned>(rng.uniform(0, static_cast<int>(left)));
                        d[r] += take;
                        left -= take;
                    }
                }
            }
            choice.push_back(d);
        }
        const LaurentFunctional pushed = lf_pushforward(iota, ip, x, l0, choice);
        const PoleIndex &d = pushed.summands()[0].d_max;
        const int order = u0.order() + static_cast<int>(total(d) + total(d0)) + 3;
        const Germ phi(matvec(iota, a0), RootFrame(ip, x), rng.pole_below(d), low_jet(rng, n, order), order);
        t.same(lf_apply(pushed, phi), lf_apply(l0, germ_pullback(phi, iota, ip0, a0)), instance("instance", i));
    });
    return finish(t, "100 instances (" + std::to_string(axis_count) + " axis, " + std::to_string(100 - axis_count) +
                         " skew)");
}

// 5. ---------------------------------------------------------------------

struct PointFunctional {
    InnerProduct ip;
    RootFrame frame;
    Point a;
    LaurentFunctional l;
};

PointFunctional random_point_functional(Rng &rng)
{
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const InnerProduct ip = random_ip(rng, n);
    const RootFrame frame(ip, rng.roots(n, static_cast<std::size_t>(rng.uniform(1, 3))));
    const Point a = rng.int_vec(n, 2);
    const LaurentFunctional l(ip, {LaurentSummand{a, frame, rng.pole(frame.size(), 2), rng.diffop(n, 2, 3)}});
    return {ip, frame, a, l};
}

Outcome actions(Rng &rng, double &)
{
    Tally t;
    each(t, 100, "multiplication", [&](int i) {
        const PointFunctional pf = random_point_functional(rng);
        const std::size_t n = pf.ip.dim();
        const auto &s = pf.l.summands()[0];
        Polynomial num = rng.poly(n, 2, 3);
        if (num.is_zero()) {
            num = Polynomial::constant(n, 1);
        }
        std::vector<RationalFn::Factor> den;
        for (std::size_t r = 0; r < pf.frame.size(); ++r) {
            const unsigned e = static_cast<unsigned>(rng.uniform(0, static_cast<int>(s.d_max[r])));
            if (e > 0) {
                const Vec &xi = pf.frame.roots()[r];
                den.emplace_back(Hyperplane(xi, pf.ip.dot(xi, pf.a)), e);
            }
        }
        const Vec off = rng.nonzero_int_vec(n, 2);
        den.emplace_back(Hyperplane(off, pf.ip.dot(off, pf.a) + rng.nonzero_rational(3)), 1);
        const RationalFn psi(pf.ip, num, den);

        const int order = std::max(s.u.order(), 0) + static_cast<int>(total(s.d_max)) + 3;
        const Germ psi_germ = rationalfn_germ_at(psi, pf.a, order, pf.frame);
        const LaurentFunctional m = i % 2 == 0 ? lf_mul_action(psi, pf.l) : lf_mul_action(psi_germ, pf.l);
        const Germ phi(pf.a, pf.frame, rng.pole_below(m.summands()[0].d_max), low_jet(rng, n, order), order);
        t.same(lf_apply(m, phi), lf_apply(pf.l, germ_mul(psi_germ, phi)), instance("multiplication", i));
    });
    each(t, 100, "derivative", [&](int i) {
        const PointFunctional pf = random_point_functional(rng);
        const std::size_t n = pf.ip.dim();
        const auto &s = pf.l.summands()[0];
        const Vec v = rng.int_vec(n, 2);
        const LaurentFunctional dl = lf_diff_action(v, pf.l);
        const int order = std::max(s.u.order(), 0) + static_cast<int>(total(s.d_max)) + 3;
        const Germ phi(pf.a, pf.frame, rng.pole_below(dl.summands()[0].d_max), low_jet(rng, n, order), order);
        t.same(lf_apply(dl, phi), lf_apply(pf.l, germ_diff(v, phi)), instance("derivative", i));
    });
    return finish(t, "100 + 100 instances");
}

// 6. ---------------------------------------------------------------------

Outcome annihilator(Rng &rng, double &)
{
    Tally t;
    each(t, 50, "singular", [&](int i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const InnerProduct ip = random_ip(rng, n);
        const RootFrame frame(ip, rng.roots(n, static_cast<std::size_t>(rng.uniform(1, 3))));
        const Point a = rng.int_vec(n, 2);
        PoleIndex e = rng.pole(frame.size(), 2);
        e[rng.index(e.size())] = static_cast<unsigned>(rng.uniform(1, 2));
        const int order = rng.uniform(2, 4);
        const Polynomial jet = rng.poly(n, order, 4) + Polynomial::constant(n, 1);
        const Germ g(a, frame, e, jet.constant_term().is_zero() ? jet + Polynomial::constant(n, 1) : jet, order);

        const auto w = lf_annihilator_witness(g);
        t.check(!w.holomorphic && w.functional, instance("singular", i) + " has no witness");
        if (!w.functional) {
            return;
        }
        t.check(!lf_apply(*w.functional, g).is_zero(), instance("singular", i) + " is not detected");
        const int hol_order = order + static_cast<int>(total(e)) + 4;
        for (int j = 0; j < 50; ++j) {
            const Germ h(a, frame, frame.zero_pole(), rng.poly(n, hol_order, 5), hol_order);
            t.check(lf_apply(*w.functional, h).is_zero(), instance("singular", i) + " holomorphic jet " +
                                                               std::to_string(j));
        }
    });
    each(t, 50, "holomorphic", [&](int i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const InnerProduct ip = random_ip(rng, n);
        const RootFrame frame(ip, rng.roots(n, static_cast<std::size_t>(rng.uniform(1, 3))));
        const Point a = rng.int_vec(n, 2);
        const int order = rng.uniform(2, 5);
        const Polynomial h = rng.poly(n, order, 4);
        Germ g;
        if (i % 2 == 0) {
            g = Germ(a, frame, frame.zero_pole(), h, order);
        } else {
            const PoleIndex e = rng.pole(frame.size(), 1);
            g = Germ(a, frame, e, (frame.pi(e) * h).truncate(order), order);
        }
        t.check(lf_annihilator_witness(g).holomorphic, instance("holomorphic", i));
    });
    return finish(t, "50 singular + 50 holomorphic germs");
}

// 7. ---------------------------------------------------------------------

const std::vector<std::pair<std::string, std::size_t>> weyl_orders{
    {"A1", 2}, {"A1xA1", 4}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}};

std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t min_size = 0)
{
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (1u << i)) {
                s.push_back(i);
            }
        }
        if (s.size() >= min_size) {
            out.push_back(s);
        }
    }
    return out;
}

Outcome weyl(Rng &, double &limit)
{
    limit = 5;
    Tally t;
    int parabolics = 0;
    for (const auto &[name, order] : weyl_orders) {
        try {
            const RootSystem rs = RootSystem::builtin(name);
            const std::size_t size = rs.weyl().size();
            t.check(size == order, name + " has " + std::to_string(size) + " elements");
            const auto simple = rs.simple_roots();
            for (const auto &dq : subsets(rs.simple().size())) {
                ++parabolics;
                const ParabolicData q = parabolic(rs, dq);
                const auto reps = min_coset_reps(rs, q);
                const auto wq = wq_subgroup(rs, q);
                std::vector<std::size_t> expect;
                for (std::size_t w = 0; w < size; ++w) {
                    bool ok = true;
                    for (auto j : dq) {
                        ok = ok && rs.is_positive_root(matvec(rs.weyl()[w].matrix, simple[j]));
                    }
                    if (ok) {
                        expect.push_back(w);
                    }
                }
                std::vector<std::size_t> got = reps;
                std::sort(got.begin(), got.end());
                t.check(got == expect, name + ": W^Q differs from its defining condition");
                std::set<std::size_t> image;
                for (auto s : reps) {
                    for (auto u : wq) {
                        const std::size_t st = rs.product(s, u);
                        image.insert(st);
                        t.check(rs.inversion_count(st) == rs.inversion_count(s) + rs.inversion_count(u),
                                name + ": l(st) != l(s) + l(t)");
                    }
                }
                t.check(image.size() == size && reps.size() * wq.size() == size,
                        name + ": W^Q x W_Q -> W is not bijective");
            }
        } catch (const std::exception &e) {
            t.check(false, name + " raised " + e.what());
        }
    }
    return finish(t, "6 systems, " + std::to_string(parabolics) + " parabolic subsets");
}

// 8. ---------------------------------------------------------------------

Outcome genericity(Rng &rng, double &, unsigned height)
{
    Tally t;
    int generic = 0, special = 0;
    const RootSystem a2 = RootSystem::builtin("A2"), b2 = RootSystem::builtin("B2");
    each(t, 200, "lambda", [&](int i) {
        const RootSystem &rs = i % 2 == 0 ? a2 : b2;
        const auto all = subsets(2);
        const ParabolicData p = parabolic(rs, all[rng.index(all.size())]);
        const ParabolicData q = parabolic(rs, all[rng.index(all.size())]);
        Vec lambda = zero_vec(2);
        for (const auto &b : q.a_qq) {
            lambda = lambda + rng.rational(4, 3) * b;
        }
        std::vector<Vec> s(static_cast<std::size_t>(rng.uniform(1, 3)));
        for (auto &x : s) {
            x = rng.int_vec(2, 2);
        }
        const auto res = is_generic(rs, p, q, s, lambda);
        if (res.generic) {
            ++generic;
            const auto hit = coset_collision(rs, p, q, s, lambda, height);
            t.check(!hit, instance("lambda", i) + " is reported generic but its cosets meet");
        } else {
            ++special;
            t.check(res.witness && res.witness->class1 != res.witness->class2 &&
                        check_witness(rs, p, s, lambda, *res.witness),
                    instance("lambda", i) + " lacks a valid witness");
        }
    });
    return finish(t, "200 parameters (" + std::to_string(generic) + " generic, " + std::to_string(special) +
                         " with witness), sampling height " + std::to_string(height));
}

// 9. ---------------------------------------------------------------------

Outcome partitions(Rng &, double &)
{
    Tally t;
    int pairs = 0;
    for (const char *name : {"A1xA1", "A2", "B2", "G2", "A3"}) {
        try {
            const RootSystem rs = RootSystem::builtin(name);
            const std::size_t r = rs.simple().size();
            for (const auto &dp : subsets(r, r - 1)) {
                for (const auto &dq : subsets(r, r - 1)) {
                    ++pairs;
                    const ParabolicData p = parabolic(rs, dp), q = parabolic(rs, dq);
                    t.check(equiv_pq(rs, p, q).classes == double_cosets(rs, p, q).classes,
                            std::string(name) + ": partitions differ");
                }
            }
        } catch (const std::exception &e) {
            t.check(false, std::string(name) + " raised " + e.what());
        }
    }
    return finish(t, std::to_string(pairs) + " parabolic pairs");
}

// 10. --------------------------------------------------------------------

ExpPolySeries random_series(Rng &rng, const std::vector<Vec> &delta, const std::vector<Vec> &leaders, int trunc)
{
    const std::size_t n = delta.size();
    std::vector<SeriesLeader> ls;
    ExpPolySeries::TermMap terms;
    for (const auto &x : leaders) {
        ls.push_back(SeriesLeader{x, trunc});
        const int count = rng.uniform(1, 4);
        for (int c = 0; c < count; ++c) {
            Vec xi = x;
            const int steps = rng.uniform(0, trunc);
            for (int s = 0; s < steps; ++s) {
                xi = xi - delta[rng.index(n)];
            }
            terms[xi] = {rng.poly(n, 2, 2)};
        }
    }
    return ExpPolySeries(n, 0, 1, delta, std::move(ls), std::move(terms));
}

Outcome series(Rng &rng, double &limit)
{
    limit = 60;
    Tally t;
    each(t, 200, "series", [&](int i) {
        const std::size_t n = static_cast<std::size_t>(i % 3 + 1);
        const auto delta = columns_of(rng.injective_matrix(n, n));
        const Matrix gram = rng.spd_gram(n);
        const int trunc = rng.uniform(0, 5);
        auto leaders = [&] {
            std::vector<Vec> xs{rng.rational_vec(n, 3, 5)};
            if (rng.chance(50)) {
                const Vec y = rng.rational_vec(n, 3, 5);
                if (!lattice_coordinates(delta, y - xs[0])) {
                    xs.push_back(y);
                }
            }
            return xs;
        };
        const auto xs = leaders();
        const ExpPolySeries f = random_series(rng, delta, xs, trunc);
        const ExpPolySeries g = random_series(rng, delta, leaders(), rng.uniform(0, 5));
        const Polynomial h = Polynomial::linear(rng.nonzero_int_vec(n, 2));
        const Polynomial u = rng.poly(n, 2, 3);
        const Pairing sc = scalar_pairing();

        const ExpPolySeries lhs = series_diffop(h, series_mul(f, g, sc));
        const ExpPolySeries rhs = series_add(series_mul(series_diffop(h, f), g, sc),
                                             series_mul(f, series_diffop(h, g), sc));
        t.check(lhs == rhs, instance("series", i) + " derivation property");
        t.check(series_diffop(h, series_diffop(u, f)) == series_diffop(h * u, f),
                instance("series", i) + " module property");

        const auto parts = series_split(f, xs);
        const auto dparts = series_split(series_diffop(u, f), xs);
        std::optional<ExpPolySeries> sum;
        for (const auto &[x, part] : parts) {
            sum = sum ? series_add(*sum, part) : part;
            t.check(dparts.at(x) == series_diffop(u, part), instance("series", i) + " split and derivative");
        }
        t.check(sum && *sum == f, instance("series", i) + " split reassembly");

        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::vector<std::size_t> q1, q2;
        for (std::size_t j = 0; j < n; ++j) {
            const int roll = rng.uniform(0, 2);
            if (roll == 0) {
                q1.push_back(j);
            }
            if (roll <= 1) {
                q2.push_back(j);
            }
        }
        if (q1.empty()) {
            q1.push_back(all[rng.index(n)]);
            if (std::find(q2.begin(), q2.end(), q1[0]) == q2.end()) {
                q2.push_back(q1[0]);
                std::sort(q2.begin(), q2.end());
            }
        }
        const WallExpansion once = series_restrict(f, q2, gram);
        const WallExpansion twice = series_restrict_nested(f, q1, q2, gram);
        t.check(wall_reindex(twice, once.w, once.c) == once, instance("series", i) + " restriction transitivity");
        t.check(wall_flatten(once, n, 0) == f.terms(), instance("series", i) + " restriction reassembly");
    });
    return finish(t, "200 series");
}

using Runner = std::function<Outcome(Rng &, double &)>;

struct Entry {
    const char *name;
    Runner run;
};

std::vector<Entry> entries(const SuiteOptions &opts)
{
    return {
        {"j-cocycle", cocycle},
        {"residue oracle", residue},
        {"Laurent operator pointwise", operator_pointwise},
        {"push-forward", pushforward},
        {"multiplication and derivative actions", actions},
        {"annihilator", annihilator},
        {"Weyl regression", weyl},
        {"genericity", [h = opts.sample_height](Rng &r, double &l) { return genericity(r, l, h); }},
        {"P|Q equivalence vs double cosets", partitions},
        {"series algebra", series},
    };
}

} // namespace

std::string criterion_name(int id)
{
    const auto e = entries({});
    return id >= 1 && id <= criterion_count ? e[static_cast<std::size_t>(id - 1)].name : "";
}

CriterionResult run_criterion(int id, const SuiteOptions &opts)
{
    CriterionResult r;
    r.id = id;
    if (id < 1 || id > criterion_count) {
        r.detail = "no such criterion";
        return r;
    }
    const auto e = entries(opts)[static_cast<std::size_t>(id - 1)];
    r.name = e.name;
    Rng rng(opts.seed + static_cast<std::uint64_t>(id));
    double limit = id == 1 ? 10 : 0;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = e.run(rng, limit);
    } catch (const std::exception &ex) {
        o = {false, std::string("raised ") + ex.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = o.detail;
    if (limit > 0 && r.seconds >= limit) {
        r.passed = false;
        r.detail += "; exceeded " + std::to_string(static_cast<int>(limit)) + " s";
    }
    return r;
}

std::vector<CriterionResult> run_all(const SuiteOptions &opts)
{
    std::vector<CriterionResult> out;
    double elapsed = 0;
    for (int id = 1; id <= criterion_count; ++id) {
        out.push_back(run_criterion(id, opts));
        elapsed += out.back().seconds;
    }
    auto &last = out.back();
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "; suite total " << elapsed << " s";
    last.detail += os.str();
    if (elapsed >= 60) {
        last.passed = false;
        last.detail += " exceeds 60 s";
    }
    return out;
}

std::string format_line(const CriterionResult &r)
{
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": " << r.detail << " ["
       << r.seconds << " s]";
    return os.str();
}

} // namespace lc::verify
