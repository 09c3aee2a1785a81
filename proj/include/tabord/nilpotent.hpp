#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tabord/linalg.hpp"
#include "tabord/partition.hpp"

namespace tabord {

// The module N_β = ⊕_j k[t]/(t^{β_j}) over a prime field.  Generator b_j
// (1-based) spans the j-th summand.  Summands keep the order they were given
// in, so direct sums need not be sorted; shape() is the sorted type.
// Coordinates are component-major and degree-minor: the coefficient of
// t^u b_j sits at offset(j) + u.
class NilpotentModule {
public:
    NilpotentModule(Partition shape, PrimeField field);
    NilpotentModule(std::vector<int> lengths, PrimeField field);

    const Partition& shape() const { return shape_; }
    const PrimeField& field() const { return field_; }
    const std::vector<int>& lengths() const { return lengths_; }
    int length(int j) const { return lengths_[static_cast<std::size_t>(j - 1)]; }
    int dim() const { return shape_.weight(); }
    int components() const { return static_cast<int>(lengths_.size()); }
    int offset(int j) const { return offsets_[static_cast<std::size_t>(j - 1)]; }
    int index(int j, int u) const { return offset(j) + u; }

    // Component (1-based) and degree of a coordinate.
    int component_of(int coord) const { return comp_of_[static_cast<std::size_t>(coord)]; }
    int degree_of(int coord) const { return coord - offset(component_of(coord)); }

    Vec zero() const { return Vec(static_cast<std::size_t>(dim()), 0); }
    // c · t^u b_j, zero when u >= β_j.
    Vec monomial(int j, int u, int c = 1) const;
    Vec generator(int j) const { return monomial(j, 0); }

    Vec add(const Vec& x, const Vec& y) const;
    Vec scale(const Vec& x, int c) const;
    Vec act_t(const Vec& x, int power = 1) const;

    // Matrix of t^power on coordinates.
    Matrix t_matrix(int power = 1) const;

    // Parses "t^2*b_1 + 2*t*b_2 - b_3"; "0" is zero.
    Vec parse(std::string_view text) const;
    std::string format(const Vec& x) const;

    bool operator==(const NilpotentModule& o) const { return lengths_ == o.lengths_ && field_ == o.field_; }

private:
    std::vector<int> lengths_;
    Partition shape_;
    PrimeField field_;
    std::vector<int> offsets_;
    std::vector<int> comp_of_;
};

// Height in B: the largest m with x ∈ t^m B; nullopt stands for infinity
// (x = 0).
using Height = std::optional<int>;
Height height(const NilpotentModule& m, const Vec& x);

// (h(x), h(tx), ...) up to the last finite entry.
std::vector<int> height_sequence(const NilpotentModule& m, const Vec& x);

std::string height_to_string(const Height& h);

// Λ-span of the generators: the k-span of all t^u g.
Subspace span_lambda(const NilpotentModule& m, const std::vector<Vec>& generators);

// t^e S for a t-invariant subspace S.
Subspace t_power(const NilpotentModule& m, const Subspace& s, int e);

// t^w B.
Subspace t_power_ambient(const NilpotentModule& m, int w);

bool is_t_invariant(const NilpotentModule& m, const Subspace& s);

// Type of the module S: transpose(λ)_w = dim t^{w-1}S - dim t^w S.  Throws
// std::invalid_argument when S is not t-invariant.
Partition module_type(const NilpotentModule& m, const Subspace& s);

// Type of B / t^e A.
Partition quotient_type(const NilpotentModule& m, const Subspace& a, int e);

// quotient_type for e = 0, 1, ... up to the first e with t^e A = 0.  The
// submodule property of a is assumed, not checked.
std::vector<Partition> quotient_chain(const NilpotentModule& m, const Subspace& a);

// dim Hom_Λ(B / t^e A, N_(ℓ)), by solving the linear constraints on the
// images of the generators.  Without a submodule this is dim Hom_Λ(B, N_(ℓ)).
int hom_dim_lambda(const NilpotentModule& b, const Subspace* a, int e, const NilpotentModule& target);

} // namespace tabord
