#include <laurentcalc/linalg.hpp>

#include <laurentcalc/error.hpp>

namespace lc
{

Vec zero_vec(std::size_t n)
{
    return Vec(n, Scalar(0));
}

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v = zero_vec(n);
    v[i] = Scalar(1);
    return v;
}

Matrix identity_matrix(std::size_t n)
{
    Matrix m;
    for (std::size_t i = 0; i < n; ++i) {
        m.push_back(unit_vec(n, i));
    }
    return m;
}

Matrix zero_matrix(std::size_t rows, std::size_t ncols)
{
    return Matrix(rows, zero_vec(ncols));
}

std::size_t cols(const Matrix &m)
{
    return m.empty() ? 0 : m[0].size();
}

Matrix transpose(const Matrix &m)
{
    const std::size_t r = m.size(), c = cols(m);
    Matrix t = zero_matrix(c, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            t[j][i] = m[i][j];
        }
    }
    return t;
}

Matrix matmul(const Matrix &a, const Matrix &b)
{
    if (cols(a) != b.size()) {
        throw precondition_error("dimension_mismatch", "matrix product of incompatible shapes");
    }
    const std::size_t r = a.size(), k = b.size(), c = cols(b);
    Matrix out = zero_matrix(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < c; ++j) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

Vec matvec(const Matrix &m, const Vec &v)
{
    if (cols(m) != v.size() && !m.empty()) {
        throw precondition_error("dimension_mismatch", "matrix-vector product of incompatible shapes");
    }
    Vec out = zero_vec(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i] = plain_dot(m[i], v);
    }
    return out;
}

Matrix from_columns(const std::vector<Vec> &columns, std::size_t rows)
{
    Matrix m = zero_matrix(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            m[i][j] = columns[j][i];
        }
    }
    return m;
}

std::vector<Vec> columns_of(const Matrix &m)
{
    return transpose(m);
}

Vec operator+(const Vec &a, const Vec &b)
{
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

Vec operator-(const Vec &a, const Vec &b)
{
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

Vec operator-(const Vec &a)
{
    Vec out(a);
    for (auto &x : out) {
        x = -x;
    }
    return out;
}

Vec operator*(const Scalar &c, const Vec &v)
{
    Vec out(v);
    for (auto &x : out) {
        x *= c;
    }
    return out;
}

Scalar plain_dot(const Vec &a, const Vec &b)
{
    if (a.size() != b.size()) {
        throw precondition_error("dimension_mismatch", "dot product of vectors of different length");
    }
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i] * b[i];
        }
    }
    return s;
}

bool is_zero(const Vec &v)
{
    for (const auto &x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool is_real(const Vec &v)
{
    for (const auto &x : v) {
        if (!x.is_real()) {
            return false;
        }
    }
    return true;
}

bool is_real(const Matrix &m)
{
    for (const auto &row : m) {
        if (!is_real(row)) {
            return false;
        }
    }
    return true;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    const std::size_t r = m.size(), c = cols(m);
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && m[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == r) {
            continue;
        }
        std::swap(m[piv], m[row]);
        const Scalar inv = m[row][col].inverse();
        for (std::size_t j = col; j < c; ++j) {
            m[row][j] *= inv;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col].is_zero()) {
                continue;
            }
            const Scalar f = m[i][col];
            for (std::size_t j = col; j < c; ++j) {
                if (!m[row][j].is_zero()) {
                    m[i][j] -= f * m[row][j];
                }
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix &m)
{
    return row_reduce(m).pivots.size();
}

std::size_t rank_of(const std::vector<Vec> &vectors)
{
    return rank(vectors);
}

std::vector<Vec> nullspace(const Matrix &m, std::size_t ncols)
{
    const auto re = row_reduce(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : re.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vec v = zero_vec(ncols);
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < re.pivots.size(); ++k) {
            v[re.pivots[k]] = -re.reduced[k][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix &a, const Vec &b)
{
    const std::size_t n = cols(a);
    if (a.size() != b.size()) {
        throw precondition_error("dimension_mismatch", "linear system with mismatched right-hand side");
    }
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != n) {
            aug[i].resize(n);
        }
        aug[i].push_back(b[i]);
    }
    const auto re = row_reduce(std::move(aug));
    if (!re.pivots.empty() && re.pivots.back() == n) {
        return std::nullopt;
    }
    Vec x = zero_vec(n);
    for (std::size_t k = 0; k < re.pivots.size(); ++k) {
        x[re.pivots[k]] = re.reduced[k][n];
    }
    return x;
}

Matrix inverse(const Matrix &a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return {};
    }
    Matrix aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) {
            throw precondition_error("dimension_mismatch", "inverse of non-square matrix");
        }
        for (std::size_t j = 0; j < n; ++j) {
            aug[i].push_back(Scalar(i == j ? 1 : 0));
        }
    }
    const auto re = row_reduce(std::move(aug));
    if (re.pivots.size() < n || re.pivots[n - 1] != n - 1) {
        throw precondition_error("singular_matrix", "matrix is singular");
    }
    Matrix inv = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv[i][j] = re.reduced[i][n + j];
        }
    }
    return inv;
}

std::vector<std::size_t> independent_subset(const std::vector<Vec> &vectors)
{
    std::vector<std::size_t> idx;
    std::vector<Vec> chosen;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        chosen.push_back(vectors[i]);
        if (rank(chosen) == chosen.size()) {
            idx.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    return idx;
}

InnerProduct::InnerProduct(Matrix gram) : m_gram(std::move(gram))
{
    const std::size_t n = m_gram.size();
    for (const auto &row : m_gram) {
        if (row.size() != n) {
            throw precondition_error("invalid_inner_product", "Gram matrix is not square");
        }
    }
    if (!is_real(m_gram)) {
        throw precondition_error("invalid_inner_product", "Gram matrix must be real");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!(m_gram[i][j] == m_gram[j][i])) {
                throw precondition_error("invalid_inner_product", "Gram matrix is not symmetric");
            }
        }
    }
    // Sylvester: all leading pivots of Gaussian elimination without swaps are positive.
    Matrix m = m_gram;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m[k][k].re()) <= 0) {
            throw precondition_error("invalid_inner_product", "Gram matrix is not positive definite");
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Scalar f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    m_inverse = inverse(m_gram);
}

InnerProduct InnerProduct::identity(std::size_t n)
{
    return InnerProduct(identity_matrix(n));
}

Scalar InnerProduct::dot(const Vec &u, const Vec &v) const
{
    return plain_dot(u, covector(v));
}

Vec InnerProduct::covector(const Vec &v) const
{
    if (v.size() != dim()) {
        throw precondition_error("dimension_mismatch", "vector length differs from the space dimension");
    }
    return matvec(m_gram, v);
}

Vec InnerProduct::vector_of(const Vec &row) const
{
    return matvec(m_inverse, row);
}

InnerProduct InnerProduct::restrict_to(const std::vector<Vec> &basis) const
{
    const Matrix b = from_columns(basis, dim());
    return InnerProduct(matmul(transpose(b), matmul(m_gram, b)));
}

Matrix block_diagonal(const Matrix &a, const Matrix &b)
{
    const std::size_t n = a.size(), m = b.size();
    Matrix out = zero_matrix(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = a[i][j];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out[n + i][n + j] = b[i][j];
        }
    }
    return out;
}

} // namespace lc
