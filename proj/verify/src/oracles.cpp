#include <laurentcalc/verify/oracles.hpp>

#include <map>
#include <set>

#include <laurentcalc/laurent_operator.hpp>

namespace lc::verify
{

namespace
{

void trim(Dense &a)
{
    while (!a.empty() && a.back().is_zero()) {
        a.pop_back();
    }
}

Scalar at(const Dense &a, long i)
{
    return i >= 0 && static_cast<std::size_t>(i) < a.size() ? a[static_cast<std::size_t>(i)] : Scalar(0);
}

} // namespace

Dense dense_mul(const Dense &a, const Dense &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Dense c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    trim(c);
    return c;
}

std::pair<Dense, Dense> dense_divide(const Dense &a, const Dense &b)
{
    Dense r = a, d = b;
    trim(r);
    trim(d);
    if (r.size() < d.size()) {
        return {{}, r};
    }
    Dense q(r.size() - d.size() + 1);
    const Scalar lead = d.back().inverse();
    for (std::size_t i = q.size(); i-- > 0;) {
        const Scalar c = r[i + d.size() - 1] * lead;
        q[i] = c;
        for (std::size_t j = 0; j < d.size(); ++j) {
            r[i + j] -= c * d[j];
        }
    }
    trim(q);
    trim(r);
    return {q, r};
}

Dense dense_inverse(const Dense &b, std::size_t count)
{
    Dense inv(count);
    if (count == 0) {
        return inv;
    }
    const Scalar b0 = b.at(0).inverse();
    inv[0] = b0;
    for (std::size_t n = 1; n < count; ++n) {
        Scalar s;
        for (std::size_t j = 1; j <= n && j < b.size(); ++j) {
            s += b[j] * inv[n - j];
        }
        inv[n] = -s * b0;
    }
    return inv;
}

Scalar laurent_coefficient(const Dense &num, const Dense &den, int k)
{
    Dense d = den;
    trim(d);
    std::size_t v = 0;
    while (d.at(v).is_zero()) {
        ++v;
    }
    const Dense r(d.begin() + static_cast<long>(v), d.end());
    // num / r = q + rem / r, q a polynomial.
    const auto [q, rem] = dense_divide(num, r);
    const long want = static_cast<long>(k) + static_cast<long>(v);
    if (want < 0) {
        return Scalar(0);
    }
    const Dense inv = dense_inverse(r, static_cast<std::size_t>(want) + 1);
    Scalar c = at(q, want);
    for (long j = 0; j <= want; ++j) {
        c += at(rem, j) * inv[static_cast<std::size_t>(want - j)];
    }
    return c;
}

std::optional<CosetCollision> coset_collision(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q,
                                              const std::vector<Vec> &s, const Vec &lambda, unsigned height)
{
    const auto &weyl = rs.weyl();
    // Signature of s on a_Qq^*: images of the a_qq basis restricted to a_Pq.
    std::map<std::vector<Vec>, std::size_t> sig_class;
    std::vector<std::size_t> cls(weyl.size());
    for (std::size_t w = 0; w < weyl.size(); ++w) {
        std::vector<Vec> sig;
        for (const auto &b : q.a_qq) {
            sig.push_back(restrict_weight(rs, p, matvec(weyl[w].matrix, b)));
        }
        cls[w] = sig_class.emplace(sig, sig_class.size()).first->second;
    }

    const std::size_t r = p.delta_r_restricted.size();
    const std::size_t k = p.a_qq.size();
    std::vector<Vec> shifts;
    std::vector<unsigned> n(r, 0);
    for (;;) {
        Vec v = zero_vec(k);
        for (std::size_t i = 0; i < r; ++i) {
            v = v + Scalar(static_cast<long>(n[i])) * p.delta_r_restricted[i];
        }
        shifts.push_back(v);
        std::size_t i = 0;
        unsigned sum = 0;
        for (auto x : n) {
            sum += x;
        }
        while (i < r) {
            if (sum < height) {
                ++n[i];
                break;
            }
            sum -= n[i];
            n[i] = 0;
            ++i;
        }
        if (i == r) {
            break;
        }
    }

    std::map<Vec, std::pair<std::size_t, std::size_t>> seen; // point -> (class, Weyl index)
    for (std::size_t w = 0; w < weyl.size(); ++w) {
        const Vec base = restrict_weight(rs, p, matvec(weyl[w].matrix, lambda));
        for (const auto &x : s) {
            const Vec bx = base + restrict_weight(rs, p, x);
            for (const auto &sh : shifts) {
                Vec pt = bx - sh;
                auto [it, fresh] = seen.emplace(pt, std::make_pair(cls[w], w));
                if (!fresh && it->second.first != cls[w]) {
                    return CosetCollision{it->second.second, w, std::move(pt)};
                }
            }
        }
    }
    return std::nullopt;
}

RationalFn diagonal_by_pullback(const LaurentFunctional &l, const Configuration &cfg, const RationalFn &phi,
                                const XSubspace &lsub)
{
    const std::size_t n = cfg.dim();
    Matrix diag = zero_matrix(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i][i] = diag[n + i][i] = Scalar(1);
    }
    const RationalFn f = phi.pullback(AffineMap{zero_vec(2 * n), diag}, cfg.ip());
    return laurent_operator_apply(l, cfg, f, lsub);
}

} // namespace lc::verify
