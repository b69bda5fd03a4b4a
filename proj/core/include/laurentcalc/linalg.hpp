#ifndef LAURENTCALC_LINALG_HPP
#define LAURENTCALC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <laurentcalc/scalar.hpp>

namespace lc
{

// Dense matrix stored as a list of rows.
using Matrix = std::vector<Vec>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Matrix identity_matrix(std::size_t n);
Matrix zero_matrix(std::size_t rows, std::size_t cols);

std::size_t cols(const Matrix &m);
Matrix transpose(const Matrix &m);
Matrix matmul(const Matrix &a, const Matrix &b);
Vec matvec(const Matrix &m, const Vec &v);
// Builds the matrix whose columns are the given vectors.
Matrix from_columns(const std::vector<Vec> &columns, std::size_t rows);
std::vector<Vec> columns_of(const Matrix &m);

Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator-(const Vec &a);
Vec operator*(const Scalar &c, const Vec &v);
Scalar plain_dot(const Vec &a, const Vec &b);

bool is_zero(const Vec &v);
bool is_real(const Vec &v);
bool is_real(const Matrix &m);

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form over Q(i).
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix &m);
std::size_t rank_of(const std::vector<Vec> &vectors);
// Basis of {x : m x = 0}; real whenever m is real.
std::vector<Vec> nullspace(const Matrix &m, std::size_t ncols);
// Some solution of a x = b (free variables set to zero), if any.
std::optional<Vec> solve(const Matrix &a, const Vec &b);
// Throws precondition_error when singular.
Matrix inverse(const Matrix &a);
// Indices of a maximal linearly independent prefix-greedy subset.
std::vector<std::size_t> independent_subset(const std::vector<Vec> &vectors);

// Symmetric positive-definite rational form on V, extended bilinearly to V_C.
class InnerProduct
{
public:
    InnerProduct() = default;
    explicit InnerProduct(Matrix gram);
    static InnerProduct identity(std::size_t n);

    std::size_t dim() const
    {
        return m_gram.size();
    }
    const Matrix &gram() const
    {
        return m_gram;
    }
    Scalar dot(const Vec &u, const Vec &v) const;
    // Coefficients of the linear form z -> <v, z>.
    Vec covector(const Vec &v) const;
    // Vector v with <v, z> = row . z for all z.
    Vec vector_of(const Vec &row) const;
    // Pulled-back form on the column space of `basis` (columns), i.e. B^T G B.
    InnerProduct restrict_to(const std::vector<Vec> &basis) const;

    friend bool operator==(const InnerProduct &a, const InnerProduct &b)
    {
        return a.m_gram == b.m_gram;
    }

private:
    Matrix m_gram;
    Matrix m_inverse;
};

Matrix block_diagonal(const Matrix &a, const Matrix &b);

} // namespace lc

#endif
