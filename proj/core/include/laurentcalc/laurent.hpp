#ifndef LAURENTCALC_LAURENT_HPP
#define LAURENTCALC_LAURENT_HPP

#include <optional>
#include <vector>

#include <laurentcalc/diffop.hpp>
#include <laurentcalc/germ.hpp>
#include <laurentcalc/rational_function.hpp>

namespace lc
{

// One point of the support: phi -> u_{d_phi}(pi_{a,d_phi} phi)(a) with
// u_{d_phi} = j_{d_phi, d_max}(u), defined for poles d_phi <= d_max.
struct LaurentSummand {
    Point support;
    RootFrame frame;
    PoleIndex d_max;
    DiffOp u;
};

class LaurentFunctional
{
public:
    LaurentFunctional() = default;
    LaurentFunctional(InnerProduct ip, std::vector<LaurentSummand> summands);

    const InnerProduct &ip() const
    {
        return m_ip;
    }
    std::size_t dim() const
    {
        return m_ip.dim();
    }
    const std::vector<LaurentSummand> &summands() const
    {
        return m_summands;
    }
    const LaurentSummand *summand_at(const Point &a) const;

private:
    InnerProduct m_ip;
    std::vector<LaurentSummand> m_summands;
};

// Value of one summand on a germ based at its support point.
Scalar summand_apply(const LaurentSummand &s, const Germ &g, bool normalize = true);
// Summands supported away from g.base() contribute zero.
Scalar lf_apply(const LaurentFunctional &l, const Germ &g, bool normalize = true);
// Localizes f at every support point.
Scalar lf_apply(const LaurentFunctional &l, const RationalFn &f);

// u = prod_xi d_xi^{d(xi)} scaled so that u(pi_{a,d} h)(a) = h(a).
LaurentFunctional lf_from_evaluation(const InnerProduct &ip, const Point &a, const std::vector<Vec> &roots,
                                     const PoleIndex &d_max);

// Transport along an isometric embedding iota: V0 -> V (columns of iota are the images
// of the basis of V0). `roots` is the root list X on V used by every summand; d_choice
// optionally fixes d_max per summand (requires p_*(d) <= d0_max).
LaurentFunctional lf_pushforward(const Matrix &iota, const InnerProduct &ip, const std::vector<Vec> &roots,
                                 const LaurentFunctional &l0,
                                 const std::vector<std::optional<PoleIndex>> &d_choice = {});

// m_psi^*(L)(phi) = L(psi phi)
LaurentFunctional lf_mul_action(const RationalFn &psi, const LaurentFunctional &l);
LaurentFunctional lf_mul_action(const Germ &psi, const LaurentFunctional &l);
// d_v^*(L)(phi) = L(v phi)
LaurentFunctional lf_diff_action(const Vec &v, const LaurentFunctional &l);

struct AnnihilatorWitness {
    bool holomorphic = false;
    std::optional<LaurentFunctional> functional;
};
AnnihilatorWitness lf_annihilator_witness(const Germ &g);

} // namespace lc

#endif
