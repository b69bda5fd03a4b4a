#include <laurentcalc/verify/random.hpp>

#include <laurentcalc/configuration.hpp>

namespace lc::verify
{

int Rng::uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(m_engine);
}

bool Rng::chance(int percent)
{
    return uniform(1, 100) <= percent;
}

std::size_t Rng::index(std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(m_engine);
}

Scalar Rng::rational(int num_bound, int den_bound)
{
    const int num = uniform(-num_bound, num_bound);
    const int den = uniform(1, den_bound);
    return Scalar(num, den);
}

Scalar Rng::nonzero_rational(int num_bound, int den_bound)
{
    Scalar x;
    do {
        x = rational(num_bound, den_bound);
    } while (x.is_zero());
    return x;
}

Vec Rng::int_vec(std::size_t n, int bound)
{
    Vec v(n);
    for (auto &x : v) {
        x = Scalar(uniform(-bound, bound));
    }
    return v;
}

Vec Rng::nonzero_int_vec(std::size_t n, int bound)
{
    Vec v;
    do {
        v = int_vec(n, bound);
    } while (is_zero(v));
    return v;
}

Vec Rng::rational_vec(std::size_t n, int num_bound, int den_bound)
{
    Vec v(n);
    for (auto &x : v) {
        x = rational(num_bound, den_bound);
    }
    return v;
}

std::vector<Vec> Rng::roots(std::size_t n, std::size_t count, int bound)
{
    std::vector<Vec> out;
    for (int attempt = 0; out.size() < count && attempt < 100; ++attempt) {
        Vec v = nonzero_int_vec(n, bound);
        bool fresh = true;
        for (const auto &w : out) {
            if (proportionality(v, w)) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

Matrix Rng::spd_gram(std::size_t n)
{
    Matrix b(n, Vec(n));
    for (auto &row : b) {
        row = int_vec(n, 1);
    }
    Matrix g = matmul(transpose(b), b);
    const int c = uniform(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] += Scalar(c);
    }
    return g;
}

Matrix Rng::injective_matrix(std::size_t n, std::size_t k, int bound)
{
    for (;;) {
        Matrix m(n, Vec(k));
        for (auto &row : m) {
            row = int_vec(k, bound);
        }
        if (rank(m) == k) {
            return m;
        }
    }
}

Polynomial Rng::poly(std::size_t dim, int degree, std::size_t terms, int bound)
{
    Polynomial p(dim);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(dim, 0);
        int left = uniform(0, degree);
        for (int k = 0; k < left && dim > 0; ++k) {
            ++m[index(dim)];
        }
        p.add_term(m, rational(bound, 2));
    }
    return p;
}

DiffOp Rng::diffop(std::size_t dim, int order, std::size_t terms)
{
    return DiffOp(poly(dim, order, terms));
}

PoleIndex Rng::pole(std::size_t size, unsigned max_entry)
{
    PoleIndex d(size);
    for (auto &x : d) {
        x = static_cast<unsigned>(uniform(0, static_cast<int>(max_entry)));
    }
    return d;
}

PoleIndex Rng::pole_below(const PoleIndex &d)
{
    PoleIndex e(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        e[i] = static_cast<unsigned>(uniform(0, static_cast<int>(d[i])));
    }
    return e;
}

} // namespace lc::verify
