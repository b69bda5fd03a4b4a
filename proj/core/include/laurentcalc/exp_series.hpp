#ifndef LAURENTCALC_EXP_SERIES_HPP
#define LAURENTCALC_EXP_SERIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <laurentcalc/linalg.hpp>
#include <laurentcalc/polynomial.hpp>

namespace lc
{

// Exponents are covectors on a in dual coordinates: xi(H) = sum xi_i H_i.
struct SeriesLeader {
    Vec exponent;
    int trunc = 0; // NDelta-height retained below the leader
};

// Truncated sum over xi of a^xi q_xi(log a), q_xi with values in Q(i)^coeff_dim.
// A coefficient at xi is known when xi lies below some leader and, for every leader x
// with xi in x - NDelta, the height of x - xi is at most that leader's trunc.
// Known exponents without a stored term carry zero.
class ExpPolySeries
{
public:
    using Coefficient = std::vector<Polynomial>;
    using TermMap = std::map<Vec, Coefficient>;

    ExpPolySeries(std::size_t dim, std::size_t params, std::size_t coeff_dim, std::vector<Vec> delta,
                  std::vector<SeriesLeader> leaders, TermMap terms);

    std::size_t dim() const
    {
        return m_dim;
    }
    // Extra polynomial variables after the dim log variables; derivatives do not act on them.
    std::size_t params() const
    {
        return m_params;
    }
    std::size_t coeff_dim() const
    {
        return m_coeff_dim;
    }
    const std::vector<Vec> &delta() const
    {
        return m_delta;
    }
    const std::vector<SeriesLeader> &leaders() const
    {
        return m_leaders;
    }
    const TermMap &terms() const
    {
        return m_terms;
    }
    int trunc() const;
    int degree() const;
    bool known(const Vec &xi) const;
    Coefficient coefficient(const Vec &xi) const;

    friend bool operator==(const ExpPolySeries &a, const ExpPolySeries &b);

private:
    std::size_t m_dim, m_params, m_coeff_dim;
    std::vector<Vec> m_delta;
    std::vector<SeriesLeader> m_leaders; // sorted by exponent, distinct
    TermMap m_terms;
};

// Integer NDelta-height of v over delta, if v lies in Z Delta.
std::optional<mpz_class> delta_height(const std::vector<Vec> &delta, const Vec &v);

struct SeriesExponents {
    std::vector<Vec> exponents;
    std::vector<Vec> leading;
};
SeriesExponents series_exponents(const ExpPolySeries &f);

ExpPolySeries series_add(const ExpPolySeries &f, const ExpPolySeries &g);
ExpPolySeries series_scale(const Scalar &c, const ExpPolySeries &f);
// u is a polynomial in dim variables, variable i standing for the basis vector e_i of a.
ExpPolySeries series_diffop(const Polynomial &u, const ExpPolySeries &f);

// pairing[i][j] is the image of (e_i, e_j) in Q(i)^w.
using Pairing = std::vector<std::vector<Vec>>;
Pairing scalar_pairing();
ExpPolySeries series_mul(const ExpPolySeries &f, const ExpPolySeries &g, const Pairing &pairing);

std::map<Vec, ExpPolySeries> series_split(const ExpPolySeries &f, const std::vector<Vec> &leaders);

// Rearrangement along a wall: log a = w x + c y with x on a_Qq and y on the
// complement spanned by G^{-1} Delta_Q. Inner series live in y with
// parameters (x, original params); outer exponents are xi w.
struct WallExpansion {
    Matrix w; // dim x k
    Matrix c; // dim x |Delta_Q|
    std::vector<Vec> outer_delta;
    std::vector<Vec> inner_delta;
    std::map<Vec, ExpPolySeries> outer;

    friend bool operator==(const WallExpansion &a, const WallExpansion &b) = default;
};

// delta_q indexes f.delta(); gram is the inner product on a in log coordinates.
WallExpansion series_restrict(const ExpPolySeries &f, const std::vector<std::size_t> &delta_q, const Matrix &gram);
// Restricts to delta_q1 and then, inside a_Q1q, to delta_q2 (a superset of delta_q1).
WallExpansion series_restrict_nested(const ExpPolySeries &f, const std::vector<std::size_t> &delta_q1,
                                     const std::vector<std::size_t> &delta_q2, const Matrix &gram);
// Re-expresses e in the coordinates (w, c) spanning the same subspaces.
WallExpansion wall_reindex(const WallExpansion &e, const Matrix &w, const Matrix &c);
// Reassembles the original series terms.
ExpPolySeries::TermMap wall_flatten(const WallExpansion &e, std::size_t dim, std::size_t params);

} // namespace lc

#endif
