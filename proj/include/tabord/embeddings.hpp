#pragma once

#include <string>
#include <vector>

#include "tabord/linalg.hpp"
#include "tabord/nilpotent.hpp"
#include "tabord/orders.hpp"
#include "tabord/tableau.hpp"

namespace tabord {

// An invariant subspace A ⊆ B of the nilpotent module B = N_β, presented by
// generators of A as a Λ-module.
class Embedding {
public:
    Embedding(NilpotentModule ambient, std::vector<Vec> generators);

    const NilpotentModule& ambient() const { return ambient_; }
    const std::vector<Vec>& generators() const { return generators_; }
    const Subspace& sub() const { return sub_; }
    const PrimeField& field() const { return ambient_.field(); }

    Partition alpha() const { return module_type(ambient_, sub_); }
    const Partition& beta() const { return ambient_.shape(); }
    Partition gamma() const { return quotient_type(ambient_, sub_, 0); }

    // Smallest r with t^r A = 0.
    int loewy_length() const;

    // "(t^2*b_1 + t*b_2 in N[5,2])".
    std::string to_string() const;

    // Same ambient component order and same subspace.
    bool operator==(const Embedding& o) const { return ambient_ == o.ambient_ && sub_ == o.sub_; }

private:
    NilpotentModule ambient_;
    std::vector<Vec> generators_;
    Subspace sub_;
};

// Chain of quotient types B/t^e A, e = 0..r, validated as an LR tableau.
// Throws std::logic_error if the chain is not one.
LRTableau lr_tableau_of(const Embedding& x);

// Components of x first, then those of y.
Embedding direct_sum(const Embedding& x, const Embedding& y);
Embedding direct_sum(const std::vector<Embedding>& parts, const PrimeField& field);

// Gap indices of a strictly increasing sequence, largest first: ℓ is a gap
// when m_{ℓ+1} > m_ℓ + 1, and the last index always is.
std::vector<int> gap_indices(const std::vector<int>& m);

// Throws std::invalid_argument unless m is a nonempty strictly increasing
// sequence of nonnegative integers.
void check_height_sequence(const std::vector<int>& m);

Embedding pole(const std::vector<int>& m, const PrimeField& field);
Embedding empty_embedding(const Partition& beta, const PrimeField& field);
Embedding picket(int i, int ell, const PrimeField& field);

// D(m, n): components of P(m) followed by those of P(n).  Requires
// |m| > |n| and, for nonempty n, m_r >= n_q + 1.  D(m, ()) = P(m).
Embedding d_embedding(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field);

// Λ-linear map between ambient modules: entry (j, i) is the polynomial
// (coefficients by degree) sending generator b_i of the source into
// component j of the target.
class PolyMatrix {
public:
    PolyMatrix(NilpotentModule source, NilpotentModule target);

    const NilpotentModule& source() const { return source_; }
    const NilpotentModule& target() const { return target_; }

    // 1-based indices; coefficients are reduced into the field.
    void set(int j, int i, std::vector<int> poly);
    const std::vector<int>& at(int j, int i) const;

    // Every entry x from Λ/t^{S_i} to Λ/t^{T_j} is a multiple of
    // t^{max(T_j - S_i, 0)}.
    Diagnostic well_defined() const;

    // Coordinate matrix (dim target × dim source).
    Matrix linear() const;
    Vec apply(const Vec& x) const;

    static PolyMatrix identity(const NilpotentModule& m);
    static PolyMatrix zero(const NilpotentModule& source, const NilpotentModule& target);
    // Block diagonal map between the direct sums.
    static PolyMatrix block_sum(const PolyMatrix& a, const PolyMatrix& b);

private:
    NilpotentModule source_;
    NilpotentModule target_;
    std::vector<std::vector<std::vector<int>>> entries_;
};

struct EmbeddingMorphism {
    Embedding source;
    Embedding target;
    PolyMatrix map;
};

Diagnostic morphism_validate(const EmbeddingMorphism& phi);

struct ShortExactSequence {
    Embedding left;
    Embedding middle;
    Embedding right;
    PolyMatrix inject;
    PolyMatrix project;
};

// Exactness of 0 → B_L → B_M → B_R → 0 and of 0 → A_L → A_M → A_R → 0.
Diagnostic is_exact(const ShortExactSequence& seq);

// L ⊕ W → M ⊕ W → R, identity on W.
ShortExactSequence pad_left(const ShortExactSequence& seq, const Embedding& w);
// L → M ⊕ W → R ⊕ W, identity on W.
ShortExactSequence pad_right(const ShortExactSequence& seq, const Embedding& w);

// The three exact sequences with middle term D(m, n).  Each verifies
// exactness on construction and throws std::logic_error if it fails;
// precondition violations throw std::invalid_argument.
//   gap:     gap after m_{r-1}, m_r > n_q + 1 (or n empty).
//            0 → P(n, m_r) → D(m, n) → P(m_0..m_{r-1}) → 0
//   nogap1:  no gap after m_{r-1}, m_r > n_q + 1 (or n empty).
//            0 → P(n, m_r) → D(m, n) ⊕ E_(m_r) → P(m_0..m_{r-1}) → 0
//   nogap2:  gap after m_{r-1}, n nonempty, m_r = n_q + 1.
//            0 → P(n, m_r) ⊕ E_(m_r) → D(m, n) → P(m_0..m_{r-1}) → 0
ShortExactSequence ses_gap(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field);
ShortExactSequence ses_nogap1(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field);
ShortExactSequence ses_nogap2(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field);

enum class SesCase { gap, nogap1, nogap2 };
std::string ses_case_name(SesCase c);

// Which constructor applies to (m, n), or nullopt when none does.
std::optional<SesCase> ses_case(const std::vector<int>& m, const std::vector<int>& n);
ShortExactSequence ses_for(SesCase c, const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field);

// Embedding whose tableau is the given rook-strip tableau: a sum of poles,
// one per chain of entries 1, 2, ..., plus empty summands for the remaining
// columns.  Throws std::logic_error if no chain decomposition is found.
Embedding realize_rook_tableau(const LRTableau& t, const PrimeField& field);

struct ExtWitness {
    LRTableau delta;
    ShortExactSequence seq;      // padded sequence
    Embedding padding;           // X, added on the left and middle
    Embedding end_padding;       // added on the middle and right
    SesCase lemma;
    std::vector<int> i_chain;    // columns i_m < ... < i_1 (stored as i_1..i_m)
    std::vector<int> j_chain;    // columns j_1..j_{m'}
    std::vector<int> m_seq;
    std::vector<int> n_seq;
};

// Exact sequence witnessing Δ ≤ext Γ for a single entry increase.  The move
// must be an lr_increase that is legal on gamma.  Throws std::logic_error if
// the construction does not verify.
ExtWitness ext_witness_increase(const LRTableau& gamma, const MoveRecord& move, const PrimeField& field);

// dim Hom_S(X, Z).
int hom_dim_embeddings(const Embedding& x, const Embedding& z);

// [X, Z] <= [Y, Z] for every Z in the family.
bool hom_leq_over_family(const Embedding& x, const Embedding& y, const std::vector<Embedding>& family);

} // namespace tabord
