#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tabord/tableau.hpp"

namespace tabord {

enum class MoveKind { swap, wind, lr_swap, lr_increase };

// One decreasing box move.
//   swap:        first < second are the swapped entries.
//   wind:        first = source row, second = target row, third = moved entry.
//   lr_swap:     first < second are the swapped entries, third unused.
//   lr_increase: first = diagram column, second = old entry, third = new entry.
struct MoveRecord {
    MoveKind kind = MoveKind::swap;
    int first = 0;
    int second = 0;
    int third = 0;

    std::string to_string() const;
    auto operator<=>(const MoveRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Standard tableaux

bool dom_leq_syt(const StandardTableau& pi, const StandardTableau& sigma);

// Single decreasing moves, each result validated.  With shape_preserving
// only swaps are generated (moves inside one shape class).
std::vector<std::pair<StandardTableau, MoveRecord>> box_moves_syt(const StandardTableau& sigma,
                                                                  bool shape_preserving = false);

// Result of applying the move, or nullopt when it is not a legal decreasing
// move of sigma.
std::optional<StandardTableau> apply_move_syt(const StandardTableau& sigma, const MoveRecord& move);

// Everything reachable from sigma by decreasing moves, sigma included.
std::vector<StandardTableau> box_down_set_syt(const StandardTableau& sigma, bool shape_preserving = false);

// Pi reachable from Sigma.  When witness is given and the answer is true it
// receives a shortest move path from sigma to pi.
bool box_leq_syt(const StandardTableau& pi, const StandardTableau& sigma,
                 std::vector<MoveRecord>* witness = nullptr, bool shape_preserving = false);

// Extension of a tableau with r cells to a tableau of the square shape r̄.
// Throws std::logic_error if some step is not a one-cell extension.
StandardTableau f_embed(const StandardTableau& pi);

// ---------------------------------------------------------------------------
// LR tableaux on rook strips

// Throws std::invalid_argument unless both share inner and outer shapes.
bool dom_leq_lr(const LRTableau& delta, const LRTableau& gamma);

std::vector<std::pair<LRTableau, MoveRecord>> box_moves_lr(const LRTableau& gamma);
std::optional<LRTableau> apply_move_lr(const LRTableau& gamma, const MoveRecord& move);
std::vector<LRTableau> box_down_set_lr(const LRTableau& gamma);
bool box_leq_lr(const LRTableau& delta, const LRTableau& gamma, std::vector<MoveRecord>* witness = nullptr);

// Row i of phi(Γ) lists the reading positions carrying entry i.
StandardTableau phi(const LRTableau& gamma);

// Throws std::invalid_argument when the reconstructed filling is not an LR
// tableau of shape beta \ gamma.
LRTableau phi_inverse(const StandardTableau& t, const Partition& beta, const Partition& gamma);

// ---------------------------------------------------------------------------
// Finite relations

struct RelationTable {
    int size = 0;
    std::vector<std::vector<char>> leq; // leq[i][j]: element i <= element j

    bool operator()(int i, int j) const { return leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0; }
    bool operator==(const RelationTable&) const = default;
};

template <typename T>
RelationTable relation_table(const std::vector<T>& elements, const std::function<bool(const T&, const T&)>& leq)
{
    RelationTable table;
    table.size = static_cast<int>(elements.size());
    table.leq.assign(elements.size(), std::vector<char>(elements.size(), 0));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            table.leq[i][j] = leq(elements[i], elements[j]) ? 1 : 0;
    return table;
}

// Table built from down-sets: row j of down_sets lists the indices i with
// element i <= element j.
RelationTable relation_from_down_sets(int size, const std::vector<std::vector<int>>& down_sets);

// Reflexive, antisymmetric and transitive.
Diagnostic check_poset(const RelationTable& table);

// Cover relations (lower, upper), sorted.  Throws std::invalid_argument on a
// non-poset.
std::vector<std::pair<int, int>> hasse(const RelationTable& table);

struct RelationComparison {
    bool equal = true;
    int first = -1;  // first differing pair in row-major order
    int second = -1;
};

RelationComparison relations_equal(const RelationTable& a, const RelationTable& b);

std::string move_kind_name(MoveKind kind);

} // namespace tabord
