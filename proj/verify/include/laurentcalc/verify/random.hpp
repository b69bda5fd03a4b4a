#ifndef LAURENTCALC_VERIFY_RANDOM_HPP
#define LAURENTCALC_VERIFY_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <laurentcalc/diffop.hpp>
#include <laurentcalc/germ.hpp>
#include <laurentcalc/linalg.hpp>
#include <laurentcalc/polynomial.hpp>

namespace lc::verify
{

// Seeded source of small exact test data.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : m_engine(seed) {}

    int uniform(int lo, int hi);
    bool chance(int percent);
    std::size_t index(std::size_t n);

    // num / den with |num| <= num_bound and 1 <= den <= den_bound.
    Scalar rational(int num_bound, int den_bound = 1);
    Scalar nonzero_rational(int num_bound, int den_bound = 1);
    Vec int_vec(std::size_t n, int bound);
    Vec nonzero_int_vec(std::size_t n, int bound);
    Vec rational_vec(std::size_t n, int num_bound, int den_bound);

    // Up to `count` pairwise non-proportional nonzero integer vectors.
    std::vector<Vec> roots(std::size_t n, std::size_t count, int bound = 2);
    // B^T B + c I with small integer B.
    Matrix spd_gram(std::size_t n);
    // Full column rank integer n x k matrix.
    Matrix injective_matrix(std::size_t n, std::size_t k, int bound = 2);

    Polynomial poly(std::size_t dim, int degree, std::size_t terms, int bound = 4);
    DiffOp diffop(std::size_t dim, int order, std::size_t terms = 3);
    PoleIndex pole(std::size_t size, unsigned max_entry);
    // Componentwise uniform in [0, d].
    PoleIndex pole_below(const PoleIndex &d);

    std::mt19937_64 &engine()
    {
        return m_engine;
    }

private:
    std::mt19937_64 m_engine;
};

} // namespace lc::verify

#endif
