#include <laurentcalc/rootsys.hpp>

#include <algorithm>
#include <deque>
#include <set>

#include <laurentcalc/error.hpp>

namespace lc
{

namespace
{

Matrix gram_for(const std::string &name)
{
    auto m = [](std::initializer_list<std::initializer_list<long>> rows) {
        Matrix out;
        for (auto r : rows) {
            Vec v;
            for (auto x : r) {
                v.push_back(Scalar(x));
            }
            out.push_back(std::move(v));
        }
        return out;
    };
    if (name == "A1") {
        return m({{2}});
    }
    if (name == "A1xA1") {
        return m({{2, 0}, {0, 2}});
    }
    if (name == "A2") {
        return m({{2, -1}, {-1, 2}});
    }
    if (name == "B2") {
        return m({{2, -1}, {-1, 1}});
    }
    if (name == "G2") {
        return m({{2, -3}, {-3, 6}});
    }
    if (name == "A3") {
        return m({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    }
    throw precondition_error("unknown_system", "unknown built-in root system '" + name + "'");
}

bool is_nonneg_integer(const Scalar &x)
{
    return x.is_integer() && sgn(x.re()) >= 0;
}

} // namespace

RootSystem::RootSystem(InnerProduct ip, std::vector<Vec> roots, std::optional<std::vector<std::size_t>> positive)
    : m_ip(std::move(ip)), m_roots(std::move(roots))
{
    const std::size_t n = dim();
    for (std::size_t i = 0; i < m_roots.size(); ++i) {
        const auto &r = m_roots[i];
        if (r.size() != n || !is_real(r) || is_zero(r)) {
            throw precondition_error("invalid_root_system", "roots must be nonzero real vectors of the space dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (m_roots[j] == r) {
                throw precondition_error("invalid_root_system", "duplicate root");
            }
        }
    }
    for (const auto &a : m_roots) {
        const Matrix s = reflection(a);
        for (const auto &b : m_roots) {
            if (!index_of(matvec(s, b))) {
                throw precondition_error("invalid_root_system", "root set is not closed under reflections");
            }
        }
    }
    if (positive) {
        m_positive = *positive;
        std::sort(m_positive.begin(), m_positive.end());
        for (auto i : m_positive) {
            if (i >= m_roots.size()) {
                throw precondition_error("invalid_root_system", "positive root index out of range");
            }
        }
    } else {
        for (std::size_t i = 0; i < m_roots.size(); ++i) {
            const auto &r = m_roots[i];
            std::size_t k = 0;
            while (r[k].is_zero()) {
                ++k;
            }
            if (sgn(r[k].re()) > 0) {
                m_positive.push_back(i);
            }
        }
    }
    std::vector<bool> pos(m_roots.size(), false);
    for (auto i : m_positive) {
        pos[i] = true;
    }
    for (std::size_t i = 0; i < m_roots.size(); ++i) {
        const auto neg = index_of(-m_roots[i]);
        if (!neg || pos[i] == pos[*neg]) {
            throw precondition_error("invalid_root_system", "positive roots do not split the root set into +/- halves");
        }
    }
    for (auto i : m_positive) {
        bool decomposable = false;
        for (auto j : m_positive) {
            for (auto k : m_positive) {
                if (m_roots[j] + m_roots[k] == m_roots[i]) {
                    decomposable = true;
                }
            }
        }
        if (!decomposable) {
            m_simple.push_back(i);
        }
    }
    const auto simple = simple_roots();
    if (rank_of(simple) != simple.size()) {
        throw precondition_error("invalid_root_system", "simple roots are linearly dependent");
    }
    for (auto i : m_positive) {
        auto c = solve(from_columns(simple, n), m_roots[i]);
        if (!c) {
            throw precondition_error("invalid_root_system", "a positive root is not in the span of the simple roots");
        }
        for (const auto &x : *c) {
            if (!is_nonneg_integer(x)) {
                throw precondition_error("invalid_root_system",
                                         "a positive root is not a nonnegative integer combination of simple roots");
            }
        }
    }
    m_weyl = weyl_enumerate(*this);
    for (std::size_t i = 0; i < m_weyl.size(); ++i) {
        m_weyl_index.emplace(m_weyl[i].matrix, i);
    }
}

RootSystem RootSystem::builtin(const std::string &name)
{
    const Matrix g = gram_for(name);
    const InnerProduct ip(g);
    const std::size_t n = g.size();
    std::vector<Vec> roots;
    for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(unit_vec(n, i));
    }
    auto refl = [&](const Vec &a, const Vec &v) {
        const Scalar c = Scalar(2) * ip.dot(a, v) / ip.dot(a, a);
        return v - c * a;
    };
    for (std::size_t k = 0; k < roots.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec r = refl(unit_vec(n, i), roots[k]);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
                roots.push_back(std::move(r));
            }
        }
    }
    // Positive roots by height, then their negatives in the same order.
    std::vector<std::pair<Scalar, Vec>> positive;
    for (const auto &r : roots) {
        Scalar h;
        for (const auto &x : r) {
            h += x;
        }
        if (sgn(h.re()) > 0) {
            positive.emplace_back(h, r);
        }
    }
    std::sort(positive.begin(), positive.end());
    std::vector<Vec> all;
    for (const auto &[h, r] : positive) {
        all.push_back(r);
    }
    for (const auto &[h, r] : positive) {
        all.push_back(-r);
    }
    return RootSystem(ip, std::move(all));
}

std::vector<Vec> RootSystem::simple_roots() const
{
    std::vector<Vec> out;
    for (auto i : m_simple) {
        out.push_back(m_roots[i]);
    }
    return out;
}

std::optional<std::size_t> RootSystem::index_of(const Vec &v) const
{
    for (std::size_t i = 0; i < m_roots.size(); ++i) {
        if (m_roots[i] == v) {
            return i;
        }
    }
    return std::nullopt;
}

bool RootSystem::is_positive_root(const Vec &v) const
{
    auto i = index_of(v);
    return i && std::binary_search(m_positive.begin(), m_positive.end(), *i);
}

Matrix RootSystem::reflection(const Vec &alpha) const
{
    const std::size_t n = dim();
    const Vec cov = m_ip.covector(alpha);
    const Scalar c = Scalar(2) / m_ip.dot(alpha, alpha);
    Matrix s = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s[i][j] -= c * alpha[i] * cov[j];
        }
    }
    return s;
}

std::size_t RootSystem::weyl_index(const Matrix &m) const
{
    auto it = m_weyl_index.find(m);
    if (it == m_weyl_index.end()) {
        throw precondition_error("not_in_weyl_group", "matrix is not an element of the Weyl group");
    }
    return it->second;
}

std::size_t RootSystem::product(std::size_t a, std::size_t b) const
{
    return weyl_index(matmul(m_weyl.at(a).matrix, m_weyl.at(b).matrix));
}

std::size_t RootSystem::inverse_of(std::size_t a) const
{
    return weyl_index(lc::inverse(m_weyl.at(a).matrix));
}

unsigned RootSystem::inversion_count(std::size_t w) const
{
    unsigned c = 0;
    for (auto i : m_positive) {
        if (!is_positive_root(matvec(m_weyl.at(w).matrix, m_roots[i]))) {
            ++c;
        }
    }
    return c;
}

std::vector<WeylElement> weyl_enumerate(const RootSystem &rs)
{
    constexpr std::size_t limit = 100000;
    std::vector<Matrix> gens;
    for (const auto &a : rs.simple_roots()) {
        gens.push_back(rs.reflection(a));
    }
    std::vector<WeylElement> out;
    std::map<Matrix, std::size_t> seen;
    out.push_back(WeylElement{identity_matrix(rs.dim()), 0, {}});
    seen.emplace(out[0].matrix, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Matrix m = matmul(gens[i], out[k].matrix);
            if (seen.count(m)) {
                continue;
            }
            if (out.size() >= limit) {
                throw precondition_error("invalid_root_system", "reflection group closure does not terminate");
            }
            std::vector<std::size_t> word{i};
            word.insert(word.end(), out[k].word.begin(), out[k].word.end());
            seen.emplace(m, out.size());
            out.push_back(WeylElement{std::move(m), out[k].length + 1, std::move(word)});
        }
    }
    return out;
}

ParabolicData parabolic(const RootSystem &rs, const std::vector<std::size_t> &delta_q)
{
    ParabolicData q;
    q.delta_q = delta_q;
    std::sort(q.delta_q.begin(), q.delta_q.end());
    q.delta_q.erase(std::unique(q.delta_q.begin(), q.delta_q.end()), q.delta_q.end());
    const auto simple = rs.simple_roots();
    Matrix rows;
    for (auto i : q.delta_q) {
        if (i >= simple.size()) {
            throw precondition_error("invalid_parabolic", "simple root index out of range");
        }
        rows.push_back(rs.ip().covector(simple[i]));
    }
    q.a_qq = rows.empty() ? identity_matrix(rs.dim()) : nullspace(rows, rs.dim());
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (!std::binary_search(q.delta_q.begin(), q.delta_q.end(), i)) {
            q.delta_r.push_back(i);
            q.delta_r_restricted.push_back(restrict_weight(rs, q, simple[i]));
        }
    }
    if (rank_of(q.delta_r_restricted) != q.delta_r_restricted.size()) {
        throw precondition_error("internal", "restricted simple roots are linearly dependent");
    }
    std::vector<Vec> dq;
    for (auto i : q.delta_q) {
        dq.push_back(simple[i]);
    }
    for (auto i : rs.positive()) {
        const auto &r = rs.roots()[i];
        std::vector<Vec> with = dq;
        with.push_back(r);
        if (dq.empty() || rank_of(with) > dq.size()) {
            q.sigma_q.push_back(i);
        }
    }
    return q;
}

Vec restrict_weight(const RootSystem &rs, const ParabolicData &q, const Vec &mu)
{
    Vec out;
    for (const auto &b : q.a_qq) {
        out.push_back(rs.ip().dot(mu, b));
    }
    return out;
}

std::vector<std::size_t> wq_subgroup(const RootSystem &rs, const ParabolicData &q)
{
    std::vector<std::size_t> centralizer;
    for (std::size_t w = 0; w < rs.weyl().size(); ++w) {
        bool fixes = true;
        for (const auto &b : q.a_qq) {
            if (!(matvec(rs.weyl()[w].matrix, b) == b)) {
                fixes = false;
                break;
            }
        }
        if (fixes) {
            centralizer.push_back(w);
        }
    }
    std::set<std::size_t> generated{rs.identity_index()};
    std::deque<std::size_t> queue{rs.identity_index()};
    std::vector<std::size_t> gens;
    for (auto i : q.delta_q) {
        gens.push_back(rs.weyl_index(rs.reflection(rs.roots()[rs.simple()[i]])));
    }
    while (!queue.empty()) {
        const std::size_t w = queue.front();
        queue.pop_front();
        for (auto g : gens) {
            const std::size_t x = rs.product(g, w);
            if (generated.insert(x).second) {
                queue.push_back(x);
            }
        }
    }
    if (std::vector<std::size_t>(generated.begin(), generated.end()) != centralizer) {
        throw precondition_error("invalid_input", "centralizer and reflection subgroup of a_Qq disagree");
    }
    return centralizer;
}

namespace
{

bool in_wq_upper(const RootSystem &rs, const ParabolicData &q, std::size_t s)
{
    const auto &m = rs.weyl()[s].matrix;
    for (auto i : q.delta_q) {
        if (!rs.is_positive_root(matvec(m, rs.roots()[rs.simple()[i]]))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::size_t> min_coset_reps(const RootSystem &rs, const ParabolicData &q)
{
    std::vector<std::size_t> reps;
    for (std::size_t s = 0; s < rs.weyl().size(); ++s) {
        if (in_wq_upper(rs, q, s)) {
            reps.push_back(s);
        }
    }
    const auto sub = wq_subgroup(rs, q);
    std::vector<bool> hit(rs.weyl().size(), false);
    for (auto s : reps) {
        for (auto t : sub) {
            const std::size_t st = rs.product(s, t);
            if (hit[st]) {
                throw precondition_error("internal", "multiplication W^Q x W_Q -> W is not injective");
            }
            hit[st] = true;
            if (rs.weyl()[st].length != rs.weyl()[s].length + rs.weyl()[t].length) {
                throw precondition_error("internal", "lengths are not additive on W^Q x W_Q");
            }
        }
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        throw precondition_error("internal", "multiplication W^Q x W_Q -> W is not surjective");
    }
    return reps;
}

std::pair<bool, bool> wq_invariance_check(const RootSystem &rs, const ParabolicData &q, std::size_t s,
                                          std::size_t alpha, std::size_t t)
{
    if (s >= rs.weyl().size() || t >= rs.weyl().size() || alpha >= rs.simple().size()) {
        throw precondition_error("invalid_input", "index out of range");
    }
    const auto sub = wq_subgroup(rs, q);
    if (!std::binary_search(sub.begin(), sub.end(), t)) {
        throw precondition_error("invalid_input", "t is not an element of W_Q");
    }
    const Vec &a = rs.roots()[rs.simple()[alpha]];
    const Vec v = matvec(rs.weyl()[rs.inverse_of(s)].matrix, a);
    if (is_zero(restrict_weight(rs, q, v))) {
        throw precondition_error("hypothesis_violated", "s^{-1} alpha vanishes on a_Qq");
    }
    const std::size_t tinv = rs.inverse_of(t);
    const std::size_t sa = rs.weyl_index(rs.reflection(a));
    const bool first = in_wq_upper(rs, q, rs.product(s, tinv));
    const bool second = in_wq_upper(rs, q, rs.product(rs.product(sa, s), tinv));
    return {first, second};
}

namespace
{

Matrix signature(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q, std::size_t s)
{
    Matrix m;
    for (const auto &qb : q.a_qq) {
        m.push_back(restrict_weight(rs, p, matvec(rs.weyl()[s].matrix, qb)));
    }
    return m;
}

Partition from_labels(const std::vector<std::size_t> &label)
{
    Partition out;
    out.class_of.assign(label.size(), 0);
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t w = 0; w < label.size(); ++w) {
        auto [it, inserted] = renumber.try_emplace(label[w], out.classes.size());
        if (inserted) {
            out.classes.emplace_back();
        }
        out.classes[it->second].push_back(w);
        out.class_of[w] = it->second;
    }
    return out;
}

} // namespace

Partition equiv_pq(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q)
{
    std::map<Matrix, std::size_t> sigs;
    std::vector<std::size_t> label;
    for (std::size_t w = 0; w < rs.weyl().size(); ++w) {
        auto [it, inserted] = sigs.try_emplace(signature(rs, p, q, w), w);
        label.push_back(it->second);
    }
    Partition out = from_labels(label);
    const auto wp = wq_subgroup(rs, p), wq = wq_subgroup(rs, q);
    for (std::size_t w = 0; w < rs.weyl().size(); ++w) {
        for (auto x : wp) {
            if (out.class_of[rs.product(x, w)] != out.class_of[w]) {
                throw precondition_error("internal", "~_{P|Q} classes are not left W_P-invariant");
            }
        }
        for (auto y : wq) {
            if (out.class_of[rs.product(w, y)] != out.class_of[w]) {
                throw precondition_error("internal", "~_{P|Q} classes are not right W_Q-invariant");
            }
        }
    }
    return out;
}

Partition double_cosets(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q)
{
    const auto wp = wq_subgroup(rs, p), wq = wq_subgroup(rs, q);
    const std::size_t none = rs.weyl().size();
    std::vector<std::size_t> label(rs.weyl().size(), none);
    for (std::size_t w = 0; w < rs.weyl().size(); ++w) {
        if (label[w] != none) {
            continue;
        }
        for (auto x : wp) {
            for (auto y : wq) {
                label[rs.product(rs.product(x, w), y)] = w;
            }
        }
    }
    return from_labels(label);
}

namespace
{

void check_in_aqq(const RootSystem &rs, const ParabolicData &q, const Vec &lambda)
{
    if (lambda.size() != rs.dim()) {
        throw precondition_error("arity_mismatch", "weight dimension differs from the root system dimension");
    }
    for (auto i : q.delta_q) {
        if (!rs.ip().dot(rs.roots()[rs.simple()[i]], lambda).is_zero()) {
            throw precondition_error("invalid_input", "lambda is not orthogonal to Delta_Q");
        }
    }
}

std::optional<std::vector<mpz_class>> restricted_lattice(const ParabolicData &p, const Vec &v)
{
    if (p.delta_r_restricted.empty()) {
        if (is_zero(v)) {
            return std::vector<mpz_class>{};
        }
        return std::nullopt;
    }
    return lattice_coordinates(p.delta_r_restricted, v);
}

} // namespace

GenericityResult is_generic(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q,
                            const std::vector<Vec> &s, const Vec &lambda)
{
    check_in_aqq(rs, q, lambda);
    const Partition part = equiv_pq(rs, p, q);
    std::vector<Vec> images;
    for (const auto &c : part.classes) {
        images.push_back(restrict_weight(rs, p, matvec(rs.weyl()[c[0]].matrix, lambda)));
    }
    for (std::size_t c1 = 0; c1 < part.classes.size(); ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < part.classes.size(); ++c2) {
            const Vec eta = images[c1] - images[c2];
            for (std::size_t x = 0; x < s.size(); ++x) {
                for (std::size_t y = 0; y < s.size(); ++y) {
                    const Vec v = eta - restrict_weight(rs, p, s[x] - s[y]);
                    if (auto n = restricted_lattice(p, v)) {
                        GenericityWitness w{c1, c2, part.classes[c1][0], part.classes[c2][0], x, y, std::move(*n)};
                        return {false, std::move(w)};
                    }
                }
            }
        }
    }
    return {true, std::nullopt};
}

bool check_witness(const RootSystem &rs, const ParabolicData &p, const std::vector<Vec> &s, const Vec &lambda,
                   const GenericityWitness &w)
{
    const Vec lhs = restrict_weight(rs, p, matvec(rs.weyl()[w.s1].matrix, lambda) -
                                               matvec(rs.weyl()[w.s2].matrix, lambda));
    Vec rhs = restrict_weight(rs, p, s.at(w.x) - s.at(w.y));
    if (w.coefficients.size() != p.delta_r_restricted.size()) {
        return false;
    }
    for (std::size_t k = 0; k < w.coefficients.size(); ++k) {
        rhs = rhs + Scalar(Rational(w.coefficients[k])) * p.delta_r_restricted[k];
    }
    return lhs == rhs;
}

Classification exponent_classify(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q,
                                 const std::vector<Vec> &s, const Vec &lambda, const Vec &xi)
{
    check_in_aqq(rs, q, lambda);
    const Partition part = equiv_pq(rs, p, q);
    const Vec target = restrict_weight(rs, p, xi);
    Classification out;
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        const Vec image = restrict_weight(rs, p, matvec(rs.weyl()[part.classes[c][0]].matrix, lambda));
        for (const auto &x : s) {
            // xi = sigma lambda + x - sum n_k alpha_k on a_Pq, n in N
            const Vec v = image + restrict_weight(rs, p, x) - target;
            auto n = restricted_lattice(p, v);
            if (n && std::all_of(n->begin(), n->end(), [](const mpz_class &z) { return sgn(z) >= 0; })) {
                out.candidates.push_back(c);
                break;
            }
        }
    }
    if (out.candidates.empty()) {
        throw precondition_error("no_coset", "xi lies in no exponent coset");
    }
    return out;
}

std::optional<std::vector<mpz_class>> lattice_coordinates(const std::vector<Vec> &delta, const Vec &v)
{
    if (delta.empty()) {
        return is_zero(v) ? std::optional<std::vector<mpz_class>>(std::vector<mpz_class>{}) : std::nullopt;
    }
    auto c = solve(from_columns(delta, v.size()), v);
    if (!c) {
        return std::nullopt;
    }
    std::vector<mpz_class> out;
    for (const auto &x : *c) {
        if (!x.is_integer()) {
            return std::nullopt;
        }
        out.push_back(x.re().get_num());
    }
    return out;
}

bool preceq_delta(const std::vector<Vec> &delta, const Vec &xi1, const Vec &xi2)
{
    if (rank_of(delta) != delta.size()) {
        throw precondition_error("dependent_delta", "Delta must be linearly independent");
    }
    auto n = lattice_coordinates(delta, xi2 - xi1);
    return n && std::all_of(n->begin(), n->end(), [](const mpz_class &z) { return sgn(z) >= 0; });
}

Vec class_lub(const std::vector<Vec> &delta, const std::vector<Vec> &omega)
{
    if (omega.empty()) {
        throw precondition_error("empty_class", "least upper bound of an empty class");
    }
    if (rank_of(delta) != delta.size()) {
        throw precondition_error("dependent_delta", "Delta must be linearly independent");
    }
    std::vector<mpz_class> top(delta.size(), 0);
    for (const auto &w : omega) {
        auto n = lattice_coordinates(delta, w - omega[0]);
        if (!n) {
            throw precondition_error("not_equivalent", "weights are not Z Delta-equivalent");
        }
        for (std::size_t k = 0; k < top.size(); ++k) {
            top[k] = std::max(top[k], (*n)[k]);
        }
    }
    Vec out = omega[0];
    for (std::size_t k = 0; k < top.size(); ++k) {
        out = out + Scalar(Rational(top[k])) * delta[k];
    }
    return out;
}

namespace
{

// Smallest integer >= sqrt(x) for rational x >= 0.
mpz_class ceil_sqrt(const Rational &x)
{
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
    if (r * r < c) {
        ++r;
    }
    return r;
}

mpz_class floor_of(const Rational &x)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

Vec aqq_coordinates(const RootSystem &rs, const ParabolicData &q, const Vec &lambda)
{
    return rs.ip().restrict_to(q.a_qq).vector_of(restrict_weight(rs, q, lambda));
}

} // namespace

std::vector<ExcludedSubspace> excluded_subspaces(const RootSystem &rs, const ParabolicData &p,
                                                 const ParabolicData &q, const std::vector<Vec> &s,
                                                 const Vec &center, const Rational &radius2)
{
    check_in_aqq(rs, q, center);
    const Partition part = equiv_pq(rs, p, q);
    const InnerProduct gq = rs.ip().restrict_to(q.a_qq);
    const Matrix gq_inv = inverse(gq.gram());
    const Vec yc = aqq_coordinates(rs, q, center);
    const std::size_t r = p.delta_r_restricted.size();
    const std::size_t dp = p.a_qq.size();
    // Left inverse of the lattice basis matrix R.
    Matrix left;
    if (r > 0) {
        const Matrix rm = from_columns(p.delta_r_restricted, dp);
        left = matmul(inverse(matmul(transpose(rm), rm)), transpose(rm));
    }
    std::vector<ExcludedSubspace> out;
    for (std::size_t c1 = 0; c1 < part.classes.size(); ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < part.classes.size(); ++c2) {
            Matrix m;
            for (std::size_t j = 0; j < q.a_qq.size(); ++j) {
                const Vec img = matvec(rs.weyl()[part.classes[c1][0]].matrix, q.a_qq[j]) -
                                matvec(rs.weyl()[part.classes[c2][0]].matrix, q.a_qq[j]);
                m.push_back(restrict_weight(rs, p, img));
            }
            m = transpose(m);
            const Vec mc = matvec(m, yc);
            const Matrix k = matmul(m, matmul(gq_inv, transpose(m)));
            for (std::size_t x = 0; x < s.size(); ++x) {
                for (std::size_t y = 0; y < s.size(); ++y) {
                    const Vec base = restrict_weight(rs, p, s[x] - s[y]);
                    // Range of each lattice coefficient over the ball.
                    std::vector<mpz_class> lo(r), hi(r);
                    for (std::size_t i = 0; i < r; ++i) {
                        const Scalar mid = plain_dot(left[i], mc - base);
                        const Vec wv = matvec(transpose(m), left[i]);
                        const Rational b2 = radius2 * plain_dot(wv, matvec(gq_inv, wv)).re();
                        const mpz_class b = ceil_sqrt(b2) + 1;
                        lo[i] = floor_of(mid.re()) - b;
                        hi[i] = floor_of(mid.re()) + 1 + b;
                    }
                    std::vector<mpz_class> n = lo;
                    for (;;) {
                        Vec rhs = base;
                        for (std::size_t i = 0; i < r; ++i) {
                            rhs = rhs + Scalar(Rational(n[i])) * p.delta_r_restricted[i];
                        }
                        if (auto z = solve(k, rhs - mc)) {
                            const Vec e = rhs - mc;
                            Scalar d2;
                            for (std::size_t i = 0; i < e.size(); ++i) {
                                d2 += (*z)[i].conj() * e[i];
                            }
                            if (d2.re() < radius2) {
                                out.push_back(ExcludedSubspace{c1, c2, x, y, n, m, rhs});
                            }
                        }
                        std::size_t i = 0;
                        while (i < r && n[i] == hi[i]) {
                            n[i] = lo[i];
                            ++i;
                        }
                        if (i == r) {
                            break;
                        }
                        ++n[i];
                    }
                }
            }
        }
    }
    return out;
}

bool lies_on(const RootSystem &rs, const ParabolicData &q, const ExcludedSubspace &a, const Vec &lambda)
{
    return matvec(a.map, aqq_coordinates(rs, q, lambda)) == a.rhs;
}

} // namespace lc
