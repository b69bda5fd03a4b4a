#ifndef LAURENTCALC_ROOTSYS_HPP
#define LAURENTCALC_ROOTSYS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <laurentcalc/linalg.hpp>

namespace lc
{

struct WeylElement {
    Matrix matrix;
    unsigned length = 0;
    std::vector<std::size_t> word; // indices of simple reflections, leftmost first
};

// Finite root system in (V, <.,.>), with a positive system, its basis, and the Weyl group.
class RootSystem
{
public:
    RootSystem(InnerProduct ip, std::vector<Vec> roots, std::optional<std::vector<std::size_t>> positive = {});
    // A1, A1xA1, A2, B2, G2, A3, realized in simple-root coordinates.
    static RootSystem builtin(const std::string &name);

    std::size_t dim() const
    {
        return m_ip.dim();
    }
    const InnerProduct &ip() const
    {
        return m_ip;
    }
    const std::vector<Vec> &roots() const
    {
        return m_roots;
    }
    const std::vector<std::size_t> &positive() const
    {
        return m_positive;
    }
    const std::vector<std::size_t> &simple() const
    {
        return m_simple;
    }
    std::vector<Vec> simple_roots() const;
    std::optional<std::size_t> index_of(const Vec &v) const;
    bool is_positive_root(const Vec &v) const;
    Matrix reflection(const Vec &alpha) const;

    const std::vector<WeylElement> &weyl() const
    {
        return m_weyl;
    }
    std::size_t weyl_index(const Matrix &m) const;
    std::size_t identity_index() const
    {
        return 0;
    }
    std::size_t product(std::size_t a, std::size_t b) const;
    std::size_t inverse_of(std::size_t a) const;
    // Number of positive roots sent to negative ones.
    unsigned inversion_count(std::size_t w) const;

private:
    InnerProduct m_ip;
    std::vector<Vec> m_roots;
    std::vector<std::size_t> m_positive;
    std::vector<std::size_t> m_simple;
    std::vector<WeylElement> m_weyl;
    std::map<Matrix, std::size_t> m_weyl_index;
};

std::vector<WeylElement> weyl_enumerate(const RootSystem &rs);

// Standard parabolic data for a subset of the simple roots (indices into rs.simple()).
struct ParabolicData {
    std::vector<std::size_t> delta_q;
    std::vector<Vec> a_qq;             // basis of the common kernel of Delta_Q
    std::vector<std::size_t> delta_r;  // indices into rs.simple() of Delta \ Delta_Q
    std::vector<Vec> delta_r_restricted; // <alpha, b_k> over the basis of a_qq
    std::vector<std::size_t> sigma_q;  // indices of positive roots not in N Delta_Q
};

ParabolicData parabolic(const RootSystem &rs, const std::vector<std::size_t> &delta_q);
// Coordinates (<mu, b_k>)_k of the restriction of mu to a_qq.
Vec restrict_weight(const RootSystem &rs, const ParabolicData &q, const Vec &mu);

// Indices into rs.weyl(); both characterizations are computed and compared.
std::vector<std::size_t> wq_subgroup(const RootSystem &rs, const ParabolicData &q);
// W^Q, after checking that W^Q x W_Q -> W is bijective with additive lengths.
std::vector<std::size_t> min_coset_reps(const RootSystem &rs, const ParabolicData &q);

// (s in W^Q t, s_alpha s in W^Q t); alpha is an index into rs.simple(), t must lie in W_Q.
std::pair<bool, bool> wq_invariance_check(const RootSystem &rs, const ParabolicData &q, std::size_t s,
                                          std::size_t alpha, std::size_t t = 0);

struct Partition {
    std::vector<std::vector<std::size_t>> classes; // sorted, ordered by smallest member
    std::vector<std::size_t> class_of;
};

// s ~ t iff s lambda and t lambda agree on a_Pq for every lambda in a_Qq^*.
Partition equiv_pq(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q);
Partition double_cosets(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q);

struct GenericityWitness {
    std::size_t class1 = 0, class2 = 0;
    std::size_t s1 = 0, s2 = 0; // Weyl indices
    std::size_t x = 0, y = 0;   // indices into S
    std::vector<mpz_class> coefficients; // over Delta_r(P)
};

struct GenericityResult {
    bool generic = true;
    std::optional<GenericityWitness> witness;
};

// lambda must be orthogonal to Delta_Q.
GenericityResult is_generic(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q,
                            const std::vector<Vec> &s, const Vec &lambda);
// Checks a witness: (s1 l - s2 l)|_{a_Pq} = (x - y)|_{a_Pq} + sum n_k alpha_k|_{a_Pq}.
bool check_witness(const RootSystem &rs, const ParabolicData &p, const std::vector<Vec> &s, const Vec &lambda,
                   const GenericityWitness &w);

struct Classification {
    std::vector<std::size_t> candidates; // class indices of equiv_pq
    bool ambiguous() const
    {
        return candidates.size() > 1;
    }
};
Classification exponent_classify(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q,
                                 const std::vector<Vec> &s, const Vec &lambda, const Vec &xi);

// xi1 <= xi2 iff xi2 - xi1 lies in N Delta.
bool preceq_delta(const std::vector<Vec> &delta, const Vec &xi1, const Vec &xi2);
// Integer coordinates of v over delta, if v lies in Z Delta.
std::optional<std::vector<mpz_class>> lattice_coordinates(const std::vector<Vec> &delta, const Vec &v);
Vec class_lub(const std::vector<Vec> &delta, const std::vector<Vec> &omega);

// A_{sigma,xi}: the affine subspace { lambda : (s1 - s2) lambda |_{a_Pq} = rhs } of a_Qq^*.
struct ExcludedSubspace {
    std::size_t class1 = 0, class2 = 0;
    std::size_t x = 0, y = 0;
    std::vector<mpz_class> coefficients;
    Matrix map; // rows over the a_Pq basis, columns over the a_Qq basis
    Vec rhs;
};

// All A_{sigma,xi} meeting the open ball |lambda - center|^2 < radius2 in a_Qq^* (complexified).
std::vector<ExcludedSubspace> excluded_subspaces(const RootSystem &rs, const ParabolicData &p,
                                                 const ParabolicData &q, const std::vector<Vec> &s,
                                                 const Vec &center, const Rational &radius2);
bool lies_on(const RootSystem &rs, const ParabolicData &q, const ExcludedSubspace &a, const Vec &lambda);

} // namespace lc

#endif
