#include "tabord/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tabord {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
}

int PrimeField::inv(int a) const
{
    a = reduce(a);
    if (a == 0)
        throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2).
    long long result = 1;
    long long base = a;
    for (int e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<int>(result);
}

std::vector<int> rref(Matrix& rows, const PrimeField& f)
{
    std::vector<int> pivots;
    if (rows.empty())
        return pivots;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        const int scale = f.inv(rows[r][col]);
        for (auto& x : rows[r])
            x = f.mul(x, scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0)
                continue;
            const int factor = rows[i][col];
            for (std::size_t c = col; c < n; ++c)
                rows[i][c] = f.sub(rows[i][c], f.mul(factor, rows[r][c]));
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

int rank(Matrix rows, const PrimeField& f)
{
    return static_cast<int>(rref(rows, f).size());
}

Matrix null_space(const Matrix& rows, int n, const PrimeField& f)
{
    Matrix m = rows;
    const auto pivots = rref(m, f);
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = 1;
    Matrix basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        Vec v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = f.neg(m[i][static_cast<std::size_t>(free)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec mat_vec(const Matrix& m, const Vec& x, const PrimeField& f)
{
    Vec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            acc += static_cast<long long>(m[i][j]) * x[j];
        y[i] = f.reduce(acc);
    }
    return y;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const PrimeField& f)
{
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    Matrix c(a.size(), Vec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long long acc = 0;
            for (std::size_t k = 0; k < inner; ++k)
                acc += static_cast<long long>(a[i][k]) * b[k][j];
            c[i][j] = f.reduce(acc);
        }
    return c;
}

Subspace::Subspace(int ambient_dim, const PrimeField& f, Matrix spanning)
    : n_(ambient_dim), field_(f), basis_(std::move(spanning))
{
    for (auto& row : basis_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("subspace: vector length differs from ambient dimension");
        for (auto& x : row)
            x = field_.reduce(x);
    }
    pivots_ = rref(basis_, field_);
}

bool Subspace::contains(const Vec& v) const
{
    Vec w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto col = static_cast<std::size_t>(pivots_[i]);
        const int factor = w[col];
        if (factor == 0)
            continue;
        for (std::size_t c = 0; c < w.size(); ++c)
            w[c] = field_.sub(w[c], field_.mul(factor, basis_[i][c]));
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const
{
    return std::all_of(other.basis().begin(), other.basis().end(), [&](const Vec& v) { return contains(v); });
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    if (!(u.field() == v.field()))
        throw std::invalid_argument("subspaces live over different fields");
}

} // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v)
{
    require_compatible(u, v);
    Matrix rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace(u.ambient_dim(), u.field(), std::move(rows));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v)
{
    require_compatible(u, v);
    // Zassenhaus: echelonize [u | u] over [v | 0]; rows with vanishing left
    // half carry the intersection on the right.
    const auto n = static_cast<std::size_t>(u.ambient_dim());
    Matrix rows;
    for (const auto& x : u.basis()) {
        Vec row(x);
        row.insert(row.end(), x.begin(), x.end());
        rows.push_back(std::move(row));
    }
    for (const auto& x : v.basis()) {
        Vec row(x);
        row.resize(2 * n, 0);
        rows.push_back(std::move(row));
    }
    rref(rows, u.field());
    Matrix meet;
    for (const auto& row : rows)
        if (std::all_of(row.begin(), row.begin() + static_cast<long>(n), [](int x) { return x == 0; }))
            meet.emplace_back(row.begin() + static_cast<long>(n), row.end());
    return Subspace(u.ambient_dim(), u.field(), std::move(meet));
}

Matrix annihilator(const Subspace& u)
{
    return null_space(u.basis(), u.ambient_dim(), u.field());
}

Subspace image(const Matrix& m, int target_dim, const Subspace& u)
{
    Matrix rows;
    for (const auto& x : u.basis())
        rows.push_back(mat_vec(m, x, u.field()));
    return Subspace(target_dim, u.field(), std::move(rows));
}

} // namespace tabord
