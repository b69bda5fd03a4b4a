#include <doctest.h>

#include <algorithm>

#include <laurentcalc/error.hpp>
#include <laurentcalc/rootsys.hpp>

#include "helpers.hpp"

using namespace lc;
using th::vec;

namespace
{

const char *const systems[] = {"A1", "A1xA1", "A2", "B2", "G2", "A3"};

std::vector<std::vector<std::size_t>> subsets(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                s.push_back(i);
            }
        }
        out.push_back(s);
    }
    return out;
}

// Weight with prescribed <lambda, alpha_i^vee> in simple-root coordinates.
Vec weight_from_coroots(const RootSystem &rs, const Vec &pairings)
{
    Vec rhs;
    for (std::size_t i = 0; i < pairings.size(); ++i) {
        const Vec &a = rs.roots()[rs.simple()[i]];
        rhs.push_back(pairings[i] * rs.ip().dot(a, a) / Scalar(2));
    }
    return *solve(rs.ip().gram(), rhs);
}

} // namespace

TEST_CASE("weyl group orders")
{
    const std::size_t expected[] = {2, 4, 6, 8, 12, 24};
    for (std::size_t i = 0; i < 6; ++i) {
        const RootSystem rs = RootSystem::builtin(systems[i]);
        CHECK(rs.weyl().size() == expected[i]);
        for (std::size_t w = 0; w < rs.weyl().size(); ++w) {
            const auto &m = rs.weyl()[w].matrix;
            CHECK(matmul(transpose(m), matmul(rs.ip().gram(), m)) == rs.ip().gram());
            CHECK(rs.weyl()[w].length == rs.inversion_count(w));
            CHECK(rs.weyl()[w].word.size() == rs.weyl()[w].length);
        }
    }
    CHECK(RootSystem::builtin("G2").roots().size() == 12);
    CHECK(RootSystem::builtin("A3").positive().size() == 6);
    CHECK_THROWS_AS(RootSystem::builtin("E9"), precondition_error);
}

TEST_CASE("root system validation")
{
    const InnerProduct ip = InnerProduct::identity(1);
    CHECK_THROWS_AS(RootSystem(ip, {vec({1})}), precondition_error);
    const RootSystem bc1(ip, {vec({1}), vec({2}), vec({-1}), vec({-2})});
    CHECK(bc1.weyl().size() == 2);
    CHECK(bc1.simple().size() == 1);
}

TEST_CASE("wq_subgroup")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    CHECK(wq_subgroup(a2, parabolic(a2, {})) == std::vector<std::size_t>{0});
    CHECK(wq_subgroup(a2, parabolic(a2, {0, 1})).size() == 6);
    const auto sub = wq_subgroup(a2, parabolic(a2, {0}));
    REQUIRE(sub.size() == 2);
    CHECK(a2.weyl()[sub[1]].matrix == a2.reflection(a2.roots()[a2.simple()[0]]));
}

TEST_CASE("min_coset_reps")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    CHECK(min_coset_reps(a2, parabolic(a2, {})).size() == 6);
    CHECK(min_coset_reps(a2, parabolic(a2, {0})).size() == 3);
    CHECK(min_coset_reps(a2, parabolic(a2, {0, 1})) == std::vector<std::size_t>{0});
    for (const char *name : systems) {
        const RootSystem rs = RootSystem::builtin(name);
        for (const auto &q : subsets(rs.simple().size())) {
            const auto pq = parabolic(rs, q);
            CHECK(min_coset_reps(rs, pq).size() * wq_subgroup(rs, pq).size() == rs.weyl().size());
        }
    }
}

TEST_CASE("parabolic data")
{
    const RootSystem a3 = RootSystem::builtin("A3");
    const auto q = parabolic(a3, {1});
    CHECK(q.a_qq.size() == 2);
    CHECK(q.delta_r == std::vector<std::size_t>{0, 2});
    CHECK(q.sigma_q.size() == 5);
}

TEST_CASE("wq_invariance_check sweeps")
{
    for (const char *name : {"A2", "B2"}) {
        const RootSystem rs = RootSystem::builtin(name);
        for (const auto &dq : subsets(2)) {
            const auto q = parabolic(rs, dq);
            for (auto t : wq_subgroup(rs, q)) {
                for (std::size_t s = 0; s < rs.weyl().size(); ++s) {
                    for (std::size_t a = 0; a < 2; ++a) {
                        const Vec v = matvec(rs.weyl()[rs.inverse_of(s)].matrix, rs.roots()[rs.simple()[a]]);
                        if (is_zero(restrict_weight(rs, q, v))) {
                            CHECK_THROWS_AS(wq_invariance_check(rs, q, s, a, t), precondition_error);
                            continue;
                        }
                        const auto [x, y] = wq_invariance_check(rs, q, s, a, t);
                        CHECK(x == y);
                    }
                }
            }
        }
    }
    const RootSystem a2 = RootSystem::builtin("A2");
    CHECK_THROWS_AS(wq_invariance_check(a2, parabolic(a2, {0}), 0, 0), precondition_error);
}

TEST_CASE("equiv_pq examples")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    const auto minimal = parabolic(a2, {});
    const auto qa = parabolic(a2, {0});
    // P minimal: classes are the cosets s W_Q.
    const Partition left = equiv_pq(a2, minimal, qa);
    CHECK(left.classes.size() == 3);
    for (const auto &c : left.classes) {
        CHECK(c.size() == 2);
        const auto wq = wq_subgroup(a2, qa);
        for (auto y : wq) {
            CHECK(std::binary_search(c.begin(), c.end(), a2.product(c[0], y)));
        }
    }
    // P = Q = minimal: the identity partition.
    CHECK(equiv_pq(a2, minimal, minimal).classes.size() == 6);
    // a_Pq = ker alpha, Q minimal: W_P \ W.
    const Partition right = equiv_pq(a2, qa, minimal);
    CHECK(right.classes.size() == 3);
    CHECK(double_cosets(a2, qa, minimal).classes == right.classes);
}

TEST_CASE("equiv_pq coincides with double cosets in codimension at most one")
{
    for (const char *name : {"A1xA1", "A2", "B2", "G2", "A3"}) {
        const RootSystem rs = RootSystem::builtin(name);
        const std::size_t r = rs.simple().size();
        for (const auto &dp : subsets(r)) {
            for (const auto &dq : subsets(r)) {
                const auto p = parabolic(rs, dp), q = parabolic(rs, dq);
                const Partition e = equiv_pq(rs, p, q), d = double_cosets(rs, p, q);
                // Double cosets always refine the equivalence.
                for (const auto &c : d.classes) {
                    for (auto w : c) {
                        CHECK(e.class_of[w] == e.class_of[c[0]]);
                    }
                }
                if (r - dp.size() <= 1 || r - dq.size() <= 1) {
                    CHECK(e.classes == d.classes);
                }
            }
        }
    }
}

TEST_CASE("is_generic examples")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    const auto minimal = parabolic(a2, {});
    const std::vector<Vec> s0{vec({0, 0})};

    const auto zero = is_generic(a2, minimal, minimal, s0, vec({0, 0}));
    CHECK_FALSE(zero.generic);
    REQUIRE(zero.witness.has_value());
    CHECK(check_witness(a2, minimal, s0, vec({0, 0}), *zero.witness));

    const Vec lambda = weight_from_coroots(a2, vec({Scalar(1, 3), Scalar(1, 5)}));
    CHECK(lambda == vec({Scalar(13, 45), Scalar(11, 45)}));
    CHECK(is_generic(a2, minimal, minimal, s0, lambda).generic);

    // <lambda, alpha^vee> = 1 puts lambda on an excluded hyperplane.
    const Vec bad = weight_from_coroots(a2, vec({1, Scalar(1, 5)}));
    const auto r = is_generic(a2, minimal, minimal, s0, bad);
    CHECK_FALSE(r.generic);
    REQUIRE(r.witness.has_value());
    CHECK(check_witness(a2, minimal, s0, bad, *r.witness));
    CHECK_FALSE(check_witness(a2, minimal, s0, lambda, *r.witness));
}

TEST_CASE("exponent_classify")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    const auto minimal = parabolic(a2, {});
    const std::vector<Vec> s{vec({0, 0}), vec({Scalar(1, 2), 0})};
    const Vec lambda = weight_from_coroots(a2, vec({Scalar(1, 3), Scalar(1, 5)}));
    REQUIRE(is_generic(a2, minimal, minimal, s, lambda).generic);
    const Partition part = equiv_pq(a2, minimal, minimal);
    const auto c = exponent_classify(a2, minimal, minimal, s, lambda, lambda + s[1]);
    REQUIRE(c.candidates.size() == 1);
    CHECK(c.candidates[0] == part.class_of[a2.identity_index()]);
    CHECK_FALSE(c.ambiguous());

    const auto c2 = exponent_classify(a2, minimal, minimal, s, lambda, lambda - vec({2, 1}));
    CHECK(c2.candidates == c.candidates);

    const Vec bad = weight_from_coroots(a2, vec({1, Scalar(1, 5)}));
    CHECK(exponent_classify(a2, minimal, minimal, s, bad, bad - vec({1, 0})).ambiguous());

    CHECK_THROWS_AS(exponent_classify(a2, minimal, minimal, s, lambda, lambda + vec({1, 0})), precondition_error);
}

TEST_CASE("preceq_delta and class_lub")
{
    const std::vector<Vec> delta{vec({1, 0}), vec({0, 1})};
    const Vec x0 = vec({Scalar(1, 3), Scalar(2, 7)});
    CHECK(preceq_delta(delta, x0, x0 + vec({1, 2})));
    CHECK_FALSE(preceq_delta(delta, x0, x0 - vec({1, 0})));
    CHECK_FALSE(preceq_delta(delta, x0, x0 + vec({Scalar(1, 2), 0})));
    CHECK_THROWS_AS(preceq_delta({vec({1, 0}), vec({2, 0})}, x0, x0), precondition_error);

    CHECK(class_lub(delta, {x0}) == x0);
    CHECK(class_lub(delta, {x0, x0 + vec({1, -1})}) == x0 + vec({1, 0}));
    CHECK(class_lub(delta, {x0, x0 + vec({1, 0}), x0 + vec({0, 1})}) == x0 + vec({1, 1}));
    CHECK_THROWS_AS(class_lub(delta, {x0, x0 + vec({Scalar(1, 2), 0})}), precondition_error);
}

TEST_CASE("excluded subspaces near a non-generic point")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    const auto minimal = parabolic(a2, {});
    const std::vector<Vec> s0{vec({0, 0})};
    const Vec bad = weight_from_coroots(a2, vec({1, Scalar(1, 5)}));
    const auto found = excluded_subspaces(a2, minimal, minimal, s0, bad, Rational(1, 4));
    CHECK(std::any_of(found.begin(), found.end(), [&](const ExcludedSubspace &a) { return lies_on(a2, minimal, a, bad); }));
    const Vec good = weight_from_coroots(a2, vec({Scalar(1, 3), Scalar(1, 5)}));
    CHECK(std::none_of(found.begin(), found.end(), [&](const ExcludedSubspace &a) { return lies_on(a2, minimal, a, good); }));
}
