#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tabord/partition.hpp"

namespace tabord {

// A chain of partitions, each contained in the next.
using PartitionChain = std::vector<Partition>;

// Rows of a diagram, top row first.  For skew fillings the cells of the
// inner shape hold 0.
using Rows = std::vector<std::vector<int>>;

struct Diagnostic {
    bool ok = true;
    std::string message;

    static Diagnostic pass() { return {}; }
    static Diagnostic fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

// Filling of a Young diagram by 1..r, strictly increasing along rows and down
// columns.  Row i of the diagram has length transpose(shape())_i.
class StandardTableau {
public:
    StandardTableau() = default;

    // Throws std::invalid_argument with the diagnostic of check_syt.
    explicit StandardTableau(Rows rows);
    StandardTableau(std::initializer_list<std::vector<int>> rows) : StandardTableau(Rows(rows)) {}

    const Rows& rows() const { return rows_; }
    int size() const;
    Partition shape() const;

    // row_word()[e-1] is the (1-based) row holding entry e.
    std::vector<int> row_word() const;

    // Compact rendering, e.g. "{13,25,4}"; entries are separated by '.'
    // once any entry has two digits.
    std::string to_string() const;

    auto operator<=>(const StandardTableau&) const = default;

private:
    Rows rows_;
};

Diagnostic check_syt(const Rows& rows);
Diagnostic check_syt(const Rows& rows, const Partition& shape);

// [σ(1), ..., σ(r)]: σ(e) is the shape of the cells holding 1..e.
PartitionChain syt_to_chain(const StandardTableau& t);

// Inverse of syt_to_chain.  The chain must start at a single cell and grow by
// exactly one cell per step; throws std::invalid_argument otherwise.
StandardTableau chain_to_syt(const PartitionChain& chain);

// All standard tableaux of the given shape, ordered lexicographically by
// their chain encoding.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// All standard tableaux with r cells, ordered lexicographically by their
// chain encoding.
std::vector<StandardTableau> enumerate_syt_weight(int r);

// Littlewood-Richardson tableau of skew shape outer \ inner, stored as the
// chain inner = γ(0) ⊆ γ(1) ⊆ ... ⊆ γ(k) = outer where the cells of
// γ(e) \ γ(e-1) carry entry e.  The stored chain stops at the largest entry;
// step() pads with the outer shape.
class LRTableau {
public:
    // Throws std::invalid_argument unless the chain describes a valid LR
    // tableau.  Trailing repeats of the outer shape are dropped.
    explicit LRTableau(PartitionChain chain);

    static LRTableau from_filling(const Partition& outer, const Partition& inner, const Rows& rows);

    const Partition& inner() const { return chain_.front(); }
    const Partition& outer() const { return chain_.back(); }
    const PartitionChain& chain() const { return chain_; }

    // γ(e) for any e >= 0.
    const Partition& step(int e) const;

    int max_entry() const { return static_cast<int>(chain_.size()) - 1; }
    int cell_count() const { return outer().weight() - inner().weight(); }

    Rows filling() const;
    Partition content() const;
    bool is_rook_strip() const;

    auto operator<=>(const LRTableau&) const = default;

private:
    PartitionChain chain_;
};

Diagnostic check_lr_filling(const Partition& outer, const Partition& inner, const Rows& rows);
Diagnostic check_lr_chain(const PartitionChain& chain);

// Chain including γ(0) = inner.
PartitionChain lr_to_chain(const LRTableau& t);

// chain[0] must equal inner; trailing copies of the outer shape are allowed.
LRTableau lr_from_chain(const Partition& inner, const PartitionChain& chain);

Partition lr_content(const LRTableau& t);

// Entries read column by column, top-down, starting at the rightmost column.
std::vector<int> reading_word(const LRTableau& t);

// All LR tableaux of shape beta \ gamma, every content.  Requires a rook
// strip; throws std::invalid_argument otherwise.
std::vector<LRTableau> enumerate_lr_rook(const Partition& beta, const Partition& gamma);

// Row-wise union: step-wise multiset union of the chains, the shorter chain
// padded with its last step.
LRTableau tableau_union(const LRTableau& e, const LRTableau& z);

// Entry of the skew cell in each diagram column (index c-1 for column c),
// 0 for columns without a skew cell.  Requires a rook strip.
std::vector<int> column_entries(const LRTableau& t);

// Rook-strip tableau with the given per-column entries (0 = no skew cell);
// inner is derived from outer by removing the bottom cell of each column
// with a nonzero entry.
LRTableau rook_tableau(const Partition& outer, const std::vector<int>& entries_by_column);

std::string chain_to_string(const PartitionChain& chain);

} // namespace tabord
