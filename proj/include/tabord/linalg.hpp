#pragma once

#include <vector>

namespace tabord {

// Arithmetic in Z/p for a prime p.  Elements are stored as 0..p-1.
class PrimeField {
public:
    // Throws std::invalid_argument unless p is prime.
    explicit PrimeField(int p = 2);

    int prime() const { return p_; }
    int reduce(long long x) const
    {
        const long long m = x % p_;
        return static_cast<int>(m < 0 ? m + p_ : m);
    }
    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
    int neg(int a) const { return reduce(-static_cast<long long>(a)); }
    int inv(int a) const;

    bool operator==(const PrimeField&) const = default;

private:
    int p_;
};

bool is_prime(int p);

using Vec = std::vector<int>;
using Matrix = std::vector<Vec>; // row-major

// Reduced row echelon form in place; returns pivot columns.  Zero rows are
// removed.
std::vector<int> rref(Matrix& rows, const PrimeField& f);
int rank(Matrix rows, const PrimeField& f);

// Basis of {x : rows * x = 0} (rows have n columns).
Matrix null_space(const Matrix& rows, int n, const PrimeField& f);

// y = m * x.
Vec mat_vec(const Matrix& m, const Vec& x, const PrimeField& f);
Matrix mat_mul(const Matrix& a, const Matrix& b, const PrimeField& f);

// Subspace of F_p^n held as a canonical reduced echelon basis, so equal
// subspaces compare equal.
class Subspace {
public:
    Subspace(int ambient_dim, const PrimeField& f) : n_(ambient_dim), field_(f) {}
    Subspace(int ambient_dim, const PrimeField& f, Matrix spanning);

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const PrimeField& field() const { return field_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

private:
    int n_;
    PrimeField field_;
    Matrix basis_;
    std::vector<int> pivots_;
};

// Throw std::invalid_argument on ambient or field mismatch.
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Rows spanning {q : q·s = 0 for all s in u}.
Matrix annihilator(const Subspace& u);

// Image of u under the linear map m (m has u.ambient_dim() columns).
Subspace image(const Matrix& m, int target_dim, const Subspace& u);

} // namespace tabord
