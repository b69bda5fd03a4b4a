#include <laurentcalc/exp_series.hpp>

#include <algorithm>

#include <laurentcalc/error.hpp>
#include <laurentcalc/rootsys.hpp>

namespace lc
{

namespace
{

// Height of v if v lies in NDelta.
std::optional<long> cone_height(const std::vector<Vec> &delta, const Vec &v)
{
    auto n = lattice_coordinates(delta, v);
    if (!n) {
        return std::nullopt;
    }
    long h = 0;
    for (const auto &z : *n) {
        if (sgn(z) < 0) {
            return std::nullopt;
        }
        h += z.get_si();
    }
    return h;
}

bool coefficient_zero(const ExpPolySeries::Coefficient &c)
{
    return std::all_of(c.begin(), c.end(), [](const Polynomial &p) { return p.is_zero(); });
}

// Row vector times matrix.
Vec row_times(const Vec &row, const Matrix &m)
{
    return matvec(transpose(m), row);
}

std::vector<SeriesLeader> merge_leaders(std::vector<SeriesLeader> leaders)
{
    std::map<Vec, int> best;
    for (auto &l : leaders) {
        auto [it, inserted] = best.try_emplace(l.exponent, l.trunc);
        if (!inserted) {
            it->second = std::min(it->second, l.trunc);
        }
    }
    std::vector<SeriesLeader> out;
    for (auto &[x, t] : best) {
        out.push_back(SeriesLeader{x, t});
    }
    return out;
}

void check_compatible(const ExpPolySeries &f, const ExpPolySeries &g)
{
    if (f.dim() != g.dim() || f.params() != g.params() || f.delta() != g.delta()) {
        throw precondition_error("arity_mismatch", "series over different spaces or Delta");
    }
}

} // namespace

std::optional<mpz_class> delta_height(const std::vector<Vec> &delta, const Vec &v)
{
    auto n = lattice_coordinates(delta, v);
    if (!n) {
        return std::nullopt;
    }
    mpz_class h = 0;
    for (const auto &z : *n) {
        h += z;
    }
    return h;
}

ExpPolySeries::ExpPolySeries(std::size_t dim, std::size_t params, std::size_t coeff_dim, std::vector<Vec> delta,
                             std::vector<SeriesLeader> leaders, TermMap terms)
    : m_dim(dim), m_params(params), m_coeff_dim(coeff_dim), m_delta(std::move(delta))
{
    for (const auto &d : m_delta) {
        if (d.size() != m_dim) {
            throw precondition_error("arity_mismatch", "Delta vector of wrong dimension");
        }
    }
    if (rank_of(m_delta) != m_delta.size()) {
        throw precondition_error("dependent_delta", "Delta must be linearly independent");
    }
    for (const auto &l : leaders) {
        if (l.exponent.size() != m_dim) {
            throw precondition_error("arity_mismatch", "leader of wrong dimension");
        }
    }
    m_leaders = merge_leaders(std::move(leaders));
    for (auto &[xi, c] : terms) {
        if (xi.size() != m_dim || c.size() != m_coeff_dim) {
            throw precondition_error("arity_mismatch", "term exponent or coefficient of wrong dimension");
        }
        for (const auto &p : c) {
            if (p.dim() != m_dim + m_params) {
                throw precondition_error("arity_mismatch", "coefficient polynomial in the wrong number of variables");
            }
        }
        if (coefficient_zero(c)) {
            continue;
        }
        if (!known(xi)) {
            throw precondition_error("invalid_series", "term outside the truncation window of the leaders");
        }
        m_terms.emplace(xi, std::move(c));
    }
}

int ExpPolySeries::trunc() const
{
    int t = 0;
    bool first = true;
    for (const auto &l : m_leaders) {
        t = first ? l.trunc : std::min(t, l.trunc);
        first = false;
    }
    return t;
}

int ExpPolySeries::degree() const
{
    int d = -1;
    for (const auto &[xi, c] : m_terms) {
        for (const auto &p : c) {
            d = std::max(d, p.total_degree());
        }
    }
    return d;
}

bool ExpPolySeries::known(const Vec &xi) const
{
    bool below = false;
    for (const auto &l : m_leaders) {
        if (auto h = cone_height(m_delta, l.exponent - xi)) {
            below = true;
            if (*h > l.trunc) {
                return false;
            }
        }
    }
    return below;
}

ExpPolySeries::Coefficient ExpPolySeries::coefficient(const Vec &xi) const
{
    if (!known(xi)) {
        throw precondition_error("beyond_truncation", "coefficient outside the known window");
    }
    auto it = m_terms.find(xi);
    if (it != m_terms.end()) {
        return it->second;
    }
    return Coefficient(m_coeff_dim, Polynomial(m_dim + m_params));
}

bool operator==(const ExpPolySeries &a, const ExpPolySeries &b)
{
    if (a.m_dim != b.m_dim || a.m_params != b.m_params || a.m_coeff_dim != b.m_coeff_dim || a.m_delta != b.m_delta ||
        a.m_terms != b.m_terms || a.m_leaders.size() != b.m_leaders.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.m_leaders.size(); ++i) {
        if (a.m_leaders[i].exponent != b.m_leaders[i].exponent || a.m_leaders[i].trunc != b.m_leaders[i].trunc) {
            return false;
        }
    }
    return true;
}

SeriesExponents series_exponents(const ExpPolySeries &f)
{
    SeriesExponents out;
    for (const auto &[xi, c] : f.terms()) {
        out.exponents.push_back(xi);
    }
    for (const auto &xi : out.exponents) {
        bool maximal = true;
        for (const auto &eta : out.exponents) {
            if (eta != xi && cone_height(f.delta(), eta - xi)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            out.leading.push_back(xi);
        }
    }
    return out;
}

ExpPolySeries series_add(const ExpPolySeries &f, const ExpPolySeries &g)
{
    check_compatible(f, g);
    if (f.coeff_dim() != g.coeff_dim()) {
        throw precondition_error("arity_mismatch", "coefficient dimensions differ");
    }
    std::vector<SeriesLeader> leaders = f.leaders();
    leaders.insert(leaders.end(), g.leaders().begin(), g.leaders().end());
    ExpPolySeries::TermMap terms = f.terms();
    for (const auto &[xi, c] : g.terms()) {
        auto [it, inserted] = terms.try_emplace(xi, c);
        if (!inserted) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                it->second[i] += c[i];
            }
        }
    }
    ExpPolySeries probe(f.dim(), f.params(), f.coeff_dim(), f.delta(), leaders, {});
    ExpPolySeries::TermMap kept;
    for (auto &[xi, c] : terms) {
        if (probe.known(xi)) {
            kept.emplace(xi, std::move(c));
        }
    }
    return ExpPolySeries(f.dim(), f.params(), f.coeff_dim(), f.delta(), std::move(leaders), std::move(kept));
}

ExpPolySeries series_scale(const Scalar &c, const ExpPolySeries &f)
{
    ExpPolySeries::TermMap terms;
    for (const auto &[xi, q] : f.terms()) {
        auto r = q;
        for (auto &p : r) {
            p *= c;
        }
        terms.emplace(xi, std::move(r));
    }
    return ExpPolySeries(f.dim(), f.params(), f.coeff_dim(), f.delta(), f.leaders(), std::move(terms));
}

ExpPolySeries series_diffop(const Polynomial &u, const ExpPolySeries &f)
{
    if (u.dim() != f.dim()) {
        throw precondition_error("arity_mismatch", "operator and series dimensions differ");
    }
    ExpPolySeries::TermMap terms;
    for (const auto &[xi, q] : f.terms()) {
        ExpPolySeries::Coefficient out(q.size(), Polynomial(f.dim() + f.params()));
        for (const auto &[m, c] : u.terms()) {
            for (std::size_t k = 0; k < q.size(); ++k) {
                Polynomial p = q[k];
                for (std::size_t i = 0; i < m.size(); ++i) {
                    for (unsigned e = 0; e < m[i]; ++e) {
                        p = xi[i] * p + p.partial(i);
                    }
                }
                out[k] += c * p;
            }
        }
        terms.emplace(xi, std::move(out));
    }
    return ExpPolySeries(f.dim(), f.params(), f.coeff_dim(), f.delta(), f.leaders(), std::move(terms));
}

Pairing scalar_pairing()
{
    return Pairing{{Vec{Scalar(1)}}};
}

ExpPolySeries series_mul(const ExpPolySeries &f, const ExpPolySeries &g, const Pairing &pairing)
{
    check_compatible(f, g);
    if (pairing.size() != f.coeff_dim() || pairing.empty()) {
        throw precondition_error("arity_mismatch", "pairing table does not match the first coefficient space");
    }
    const std::size_t w = pairing[0].empty() ? 0 : pairing[0][0].size();
    for (const auto &row : pairing) {
        if (row.size() != g.coeff_dim()) {
            throw precondition_error("arity_mismatch", "pairing table does not match the second coefficient space");
        }
        for (const auto &v : row) {
            if (v.size() != w) {
                throw precondition_error("arity_mismatch", "pairing values of inconsistent dimension");
            }
        }
    }
    std::vector<SeriesLeader> leaders;
    for (const auto &a : f.leaders()) {
        for (const auto &b : g.leaders()) {
            leaders.push_back(SeriesLeader{a.exponent + b.exponent, std::min(a.trunc, b.trunc)});
        }
    }
    const std::size_t nv = f.dim() + f.params();
    ExpPolySeries probe(f.dim(), f.params(), w, f.delta(), leaders, {});
    ExpPolySeries::TermMap terms;
    for (const auto &[xi, p] : f.terms()) {
        for (const auto &[eta, q] : g.terms()) {
            const Vec nu = xi + eta;
            if (!probe.known(nu)) {
                continue;
            }
            auto [it, inserted] = terms.try_emplace(nu, ExpPolySeries::Coefficient(w, Polynomial(nv)));
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i].is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < q.size(); ++j) {
                    if (q[j].is_zero()) {
                        continue;
                    }
                    const Polynomial pq = p[i] * q[j];
                    for (std::size_t k = 0; k < w; ++k) {
                        if (!pairing[i][j][k].is_zero()) {
                            it->second[k] += pairing[i][j][k] * pq;
                        }
                    }
                }
            }
        }
    }
    return ExpPolySeries(f.dim(), f.params(), w, f.delta(), std::move(leaders), std::move(terms));
}

std::map<Vec, ExpPolySeries> series_split(const ExpPolySeries &f, const std::vector<Vec> &leaders)
{
    for (std::size_t i = 0; i < leaders.size(); ++i) {
        if (leaders[i].size() != f.dim()) {
            throw precondition_error("arity_mismatch", "split leader of wrong dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (delta_height(f.delta(), leaders[i] - leaders[j])) {
                throw precondition_error("equivalent_leaders", "split leaders must be pairwise Z Delta-inequivalent");
            }
        }
    }
    std::vector<ExpPolySeries::TermMap> parts(leaders.size());
    for (const auto &[xi, c] : f.terms()) {
        bool placed = false;
        for (std::size_t i = 0; i < leaders.size() && !placed; ++i) {
            if (cone_height(f.delta(), leaders[i] - xi)) {
                parts[i].emplace(xi, c);
                placed = true;
            }
        }
        if (!placed) {
            throw precondition_error("not_in_cosets", "an exponent lies in no coset s - NDelta");
        }
    }
    std::map<Vec, ExpPolySeries> out;
    for (std::size_t i = 0; i < leaders.size(); ++i) {
        std::vector<SeriesLeader> own;
        for (const auto &l : f.leaders()) {
            if (delta_height(f.delta(), l.exponent - leaders[i])) {
                own.push_back(l);
            }
        }
        out.emplace(leaders[i], ExpPolySeries(f.dim(), f.params(), f.coeff_dim(), f.delta(), std::move(own),
                                              std::move(parts[i])));
    }
    return out;
}

namespace
{

struct WallFrame {
    Matrix w, c;
    std::vector<std::size_t> outer_idx, inner_idx;
    std::vector<Vec> outer_delta, inner_delta;
};

WallFrame wall_frame(const ExpPolySeries &f, std::vector<std::size_t> delta_q, const Matrix &gram)
{
    if (gram.size() != f.dim()) {
        throw precondition_error("arity_mismatch", "Gram matrix of wrong size");
    }
    const InnerProduct ip(gram);
    std::sort(delta_q.begin(), delta_q.end());
    delta_q.erase(std::unique(delta_q.begin(), delta_q.end()), delta_q.end());
    WallFrame fr;
    Matrix rows;
    std::vector<Vec> coroots;
    for (std::size_t i = 0; i < f.delta().size(); ++i) {
        if (std::binary_search(delta_q.begin(), delta_q.end(), i)) {
            fr.inner_idx.push_back(i);
            rows.push_back(f.delta()[i]);
            coroots.push_back(ip.vector_of(f.delta()[i]));
        } else {
            fr.outer_idx.push_back(i);
        }
    }
    if (fr.inner_idx.size() != delta_q.size()) {
        throw precondition_error("invalid_input", "Delta_Q index out of range");
    }
    fr.w = rows.empty() ? identity_matrix(f.dim()) : from_columns(nullspace(rows, f.dim()), f.dim());
    fr.c = from_columns(coroots, f.dim());
    return fr;
}

void fill_deltas(const ExpPolySeries &f, WallFrame &fr)
{
    fr.outer_delta.clear();
    fr.inner_delta.clear();
    for (auto i : fr.outer_idx) {
        fr.outer_delta.push_back(row_times(f.delta()[i], fr.w));
    }
    for (auto i : fr.inner_idx) {
        fr.inner_delta.push_back(row_times(f.delta()[i], fr.c));
    }
}

std::vector<SeriesLeader> inner_leaders(const ExpPolySeries &f, const WallFrame &fr, const Vec &eta)
{
    std::vector<SeriesLeader> out;
    for (const auto &l : f.leaders()) {
        auto n = lattice_coordinates(fr.outer_delta, row_times(l.exponent, fr.w) - eta);
        if (!n || std::any_of(n->begin(), n->end(), [](const mpz_class &z) { return sgn(z) < 0; })) {
            continue;
        }
        Vec x = l.exponent;
        long h = 0;
        for (std::size_t k = 0; k < n->size(); ++k) {
            x = x - Scalar(Rational((*n)[k])) * f.delta()[fr.outer_idx[k]];
            h += (*n)[k].get_si();
        }
        out.push_back(SeriesLeader{row_times(x, fr.c), static_cast<int>(l.trunc - h)});
    }
    return out;
}

// Linear substitution polynomials: variable i of the source becomes sum_j m[i][j] target_{offset+j}.
Polynomial linear_form(const Vec &row, std::size_t offset, std::size_t target_dim)
{
    Vec coeffs = zero_vec(target_dim);
    for (std::size_t j = 0; j < row.size(); ++j) {
        coeffs[offset + j] = row[j];
    }
    return Polynomial::linear(coeffs);
}

std::vector<Vec> sorted(std::vector<Vec> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

WallExpansion assemble(const ExpPolySeries &f, const WallFrame &fr,
                       const std::map<Vec, ExpPolySeries::TermMap> &grouped)
{
    WallExpansion e{fr.w, fr.c, sorted(fr.outer_delta), sorted(fr.inner_delta), {}};
    const std::size_t k = cols(fr.w), m = fr.inner_idx.size();
    for (const auto &[eta, terms] : grouped) {
        e.outer.emplace(eta, ExpPolySeries(m, k + f.params(), f.coeff_dim(), e.inner_delta,
                                           inner_leaders(f, fr, eta), terms));
    }
    return e;
}

} // namespace

WallExpansion series_restrict(const ExpPolySeries &f, const std::vector<std::size_t> &delta_q, const Matrix &gram)
{
    WallFrame fr = wall_frame(f, delta_q, gram);
    fill_deltas(f, fr);
    const std::size_t k = cols(fr.w), m = fr.inner_idx.size();
    const std::size_t nv = m + k + f.params();
    // X = w x + c y with variables ordered (y, x, params).
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        subs.push_back(linear_form(fr.c[i], 0, nv) + linear_form(fr.w[i], m, nv));
    }
    for (std::size_t p = 0; p < f.params(); ++p) {
        subs.push_back(Polynomial::variable(nv, m + k + p));
    }
    std::map<Vec, ExpPolySeries::TermMap> grouped;
    for (const auto &[xi, c] : f.terms()) {
        ExpPolySeries::Coefficient q;
        for (const auto &p : c) {
            q.push_back(p.compose(subs));
        }
        grouped[row_times(xi, fr.w)].emplace(row_times(xi, fr.c), std::move(q));
    }
    return assemble(f, fr, grouped);
}

WallExpansion series_restrict_nested(const ExpPolySeries &f, const std::vector<std::size_t> &delta_q1,
                                     const std::vector<std::size_t> &delta_q2, const Matrix &gram)
{
    for (auto i : delta_q1) {
        if (std::find(delta_q2.begin(), delta_q2.end(), i) == delta_q2.end()) {
            throw precondition_error("not_nested", "Delta_Q1 must be contained in Delta_Q2");
        }
    }
    const WallExpansion e1 = series_restrict(f, delta_q1, gram);
    WallFrame fr1 = wall_frame(f, delta_q1, gram);
    fill_deltas(f, fr1);
    // Second stage on a_Q1q in x1 coordinates.
    const std::size_t k1 = cols(e1.w);
    const Matrix g1 = k1 == 0 ? Matrix{} : matmul(transpose(e1.w), matmul(gram, e1.w));
    const InnerProduct ip1(g1);
    Matrix rows;
    std::vector<Vec> coroots;
    for (std::size_t j = 0; j < fr1.outer_idx.size(); ++j) {
        if (std::find(delta_q2.begin(), delta_q2.end(), fr1.outer_idx[j]) != delta_q2.end()) {
            rows.push_back(fr1.outer_delta[j]);
            coroots.push_back(ip1.vector_of(fr1.outer_delta[j]));
        }
    }
    const Matrix w2 = rows.empty() ? identity_matrix(k1) : from_columns(nullspace(rows, k1), k1);
    const Matrix c2 = from_columns(coroots, k1);
    const std::size_t k2 = cols(w2), m2 = coroots.size(), m1 = delta_q1.size();
    // Inner variables (y', y1, x2, params); source variables (y1, x1, params).
    const std::size_t nv = m2 + m1 + k2 + f.params();
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < m1; ++i) {
        subs.push_back(Polynomial::variable(nv, m2 + i));
    }
    for (std::size_t i = 0; i < k1; ++i) {
        subs.push_back(linear_form(c2[i], 0, nv) + linear_form(w2[i], m2 + m1, nv));
    }
    for (std::size_t p = 0; p < f.params(); ++p) {
        subs.push_back(Polynomial::variable(nv, m2 + m1 + k2 + p));
    }
    std::map<Vec, ExpPolySeries::TermMap> grouped;
    for (const auto &[eta1, inner] : e1.outer) {
        const Vec eta2 = row_times(eta1, w2);
        const Vec zeta2 = row_times(eta1, c2);
        for (const auto &[zeta1, c] : inner.terms()) {
            Vec zeta = zeta2;
            zeta.insert(zeta.end(), zeta1.begin(), zeta1.end());
            ExpPolySeries::Coefficient q;
            for (const auto &p : c) {
                q.push_back(p.compose(subs));
            }
            grouped[eta2].emplace(std::move(zeta), std::move(q));
        }
    }
    // Combined frame: w = w1 w2, c = [w1 c2 | c1].
    WallFrame fr;
    fr.w = matmul(e1.w, w2);
    const Matrix w1c2 = matmul(e1.w, c2);
    fr.c = zero_matrix(f.dim(), m2 + m1);
    for (std::size_t i = 0; i < f.dim(); ++i) {
        for (std::size_t j = 0; j < m2; ++j) {
            fr.c[i][j] = w1c2[i][j];
        }
        for (std::size_t j = 0; j < m1; ++j) {
            fr.c[i][m2 + j] = e1.c[i][j];
        }
    }
    std::vector<std::size_t> q2(delta_q2.begin(), delta_q2.end());
    std::sort(q2.begin(), q2.end());
    q2.erase(std::unique(q2.begin(), q2.end()), q2.end());
    // Inner ordering follows the columns: Delta_Q2 \ Delta_Q1 first, then Delta_Q1.
    for (auto i : fr1.outer_idx) {
        if (std::binary_search(q2.begin(), q2.end(), i)) {
            fr.inner_idx.push_back(i);
        } else {
            fr.outer_idx.push_back(i);
        }
    }
    fr.inner_idx.insert(fr.inner_idx.end(), fr1.inner_idx.begin(), fr1.inner_idx.end());
    fill_deltas(f, fr);
    return assemble(f, fr, grouped);
}

namespace
{

Matrix change_of_basis(const Matrix &from, const Matrix &to)
{
    const std::size_t n = from.size();
    std::vector<Vec> columns;
    for (const auto &col : columns_of(to)) {
        auto t = solve(from, col);
        if (!t) {
            throw precondition_error("invalid_input", "reindexing bases span different subspaces");
        }
        columns.push_back(std::move(*t));
    }
    if (rank_of(columns) != cols(from)) {
        throw precondition_error("invalid_input", "reindexing basis is not a basis");
    }
    return from_columns(columns, n == 0 ? 0 : cols(from));
}

} // namespace

WallExpansion wall_reindex(const WallExpansion &e, const Matrix &w, const Matrix &c)
{
    if (cols(w) != cols(e.w) || cols(c) != cols(e.c) || w.size() != e.w.size() || c.size() != e.c.size()) {
        throw precondition_error("arity_mismatch", "reindexing bases of wrong shape");
    }
    const Matrix tw = change_of_basis(e.w, w);
    const Matrix tc = change_of_basis(e.c, c);
    const std::size_t k = cols(w), m = cols(c);
    WallExpansion out{w, c, {}, {}, {}};
    for (const auto &d : e.outer_delta) {
        out.outer_delta.push_back(row_times(d, tw));
    }
    for (const auto &d : e.inner_delta) {
        out.inner_delta.push_back(row_times(d, tc));
    }
    out.outer_delta = sorted(std::move(out.outer_delta));
    out.inner_delta = sorted(std::move(out.inner_delta));
    for (const auto &[eta, inner] : e.outer) {
        const std::size_t nv = m + k + inner.params() - k;
        const std::size_t extra = inner.params() - k;
        std::vector<Polynomial> subs;
        for (std::size_t i = 0; i < m; ++i) {
            subs.push_back(linear_form(tc[i], 0, nv));
        }
        for (std::size_t i = 0; i < k; ++i) {
            subs.push_back(linear_form(tw[i], m, nv));
        }
        for (std::size_t p = 0; p < extra; ++p) {
            subs.push_back(Polynomial::variable(nv, m + k + p));
        }
        std::vector<SeriesLeader> leaders;
        for (const auto &l : inner.leaders()) {
            leaders.push_back(SeriesLeader{row_times(l.exponent, tc), l.trunc});
        }
        ExpPolySeries::TermMap terms;
        for (const auto &[zeta, q] : inner.terms()) {
            ExpPolySeries::Coefficient r;
            for (const auto &p : q) {
                r.push_back(p.compose(subs));
            }
            terms.emplace(row_times(zeta, tc), std::move(r));
        }
        out.outer.emplace(row_times(eta, tw), ExpPolySeries(m, inner.params(), inner.coeff_dim(), out.inner_delta,
                                                            std::move(leaders), std::move(terms)));
    }
    return out;
}

ExpPolySeries::TermMap wall_flatten(const WallExpansion &e, std::size_t dim, std::size_t params)
{
    const std::size_t k = cols(e.w), m = cols(e.c);
    if (k + m != dim) {
        throw precondition_error("arity_mismatch", "wall coordinates do not span the space");
    }
    // (x; y) = minv X, and xi = (eta, zeta) minv.
    Matrix full = zero_matrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            full[i][j] = e.w[i][j];
        }
        for (std::size_t j = 0; j < m; ++j) {
            full[i][k + j] = e.c[i][j];
        }
    }
    const Matrix minv = inverse(full);
    const std::size_t nv = dim + params;
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < m; ++i) {
        subs.push_back(linear_form(minv[k + i], 0, nv));
    }
    for (std::size_t i = 0; i < k; ++i) {
        subs.push_back(linear_form(minv[i], 0, nv));
    }
    for (std::size_t p = 0; p < params; ++p) {
        subs.push_back(Polynomial::variable(nv, dim + p));
    }
    ExpPolySeries::TermMap out;
    for (const auto &[eta, inner] : e.outer) {
        for (const auto &[zeta, q] : inner.terms()) {
            Vec both = eta;
            both.insert(both.end(), zeta.begin(), zeta.end());
            ExpPolySeries::Coefficient r;
            for (const auto &p : q) {
                r.push_back(p.compose(subs));
            }
            out.emplace(row_times(both, minv), std::move(r));
        }
    }
    return out;
}

} // namespace lc
