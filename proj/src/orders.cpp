#include "tabord/orders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tabord {

std::string move_kind_name(MoveKind kind)
{
    switch (kind) {
    case MoveKind::swap:
        return "swap";
    case MoveKind::wind:
        return "wind";
    case MoveKind::lr_swap:
        return "lr_swap";
    case MoveKind::lr_increase:
        return "lr_increase";
    }
    return "?";
}

std::string MoveRecord::to_string() const
{
    switch (kind) {
    case MoveKind::swap:
    case MoveKind::lr_swap:
        return move_kind_name(kind) + " " + std::to_string(first) + "<->" + std::to_string(second);
    case MoveKind::wind:
        return "wind " + std::to_string(third) + " row " + std::to_string(first) + "->" + std::to_string(second);
    case MoveKind::lr_increase:
        return "lr_increase column " + std::to_string(first) + " " + std::to_string(second) + "->" +
               std::to_string(third);
    }
    return "?";
}

namespace {

// Breadth-first search down the move graph.  Returns the visited set; when
// target is reached and path is requested, fills it.
template <typename T, typename Moves>
std::vector<T> down_set(const T& start, Moves moves)
{
    std::set<T> seen{start};
    std::deque<T> queue{start};
    while (!queue.empty()) {
        T cur = std::move(queue.front());
        queue.pop_front();
        for (auto& [next, move] : moves(cur))
            if (seen.insert(next).second)
                queue.push_back(next);
    }
    return {seen.begin(), seen.end()};
}

template <typename T, typename Moves>
bool reach(const T& target, const T& start, Moves moves, std::vector<MoveRecord>* witness)
{
    if (target == start) {
        if (witness)
            witness->clear();
        return true;
    }
    std::map<T, std::pair<T, MoveRecord>> parent;
    std::deque<T> queue{start};
    std::set<T> seen{start};
    while (!queue.empty()) {
        T cur = std::move(queue.front());
        queue.pop_front();
        for (auto& [next, move] : moves(cur)) {
            if (!seen.insert(next).second)
                continue;
            parent.emplace(next, std::make_pair(cur, move));
            if (next == target) {
                if (witness) {
                    witness->clear();
                    T node = next;
                    while (node != start) {
                        const auto& [prev, m] = parent.at(node);
                        witness->push_back(m);
                        node = prev;
                    }
                    std::reverse(witness->begin(), witness->end());
                }
                return true;
            }
            queue.push_back(next);
        }
    }
    return false;
}

std::pair<int, int> locate(const Rows& rows, int entry)
{
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < rows[i].size(); ++c)
            if (rows[i][c] == entry)
                return {static_cast<int>(i), static_cast<int>(c)};
    return {-1, -1};
}

} // namespace

// ---------------------------------------------------------------------------
// Standard tableaux

bool dom_leq_syt(const StandardTableau& pi, const StandardTableau& sigma)
{
    if (pi.size() != sigma.size())
        throw std::invalid_argument("dominance order: tableaux of different weight");
    const auto a = syt_to_chain(pi);
    const auto b = syt_to_chain(sigma);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!nat_leq_same_weight(a[i], b[i]))
            return false;
    return true;
}

std::optional<StandardTableau> apply_move_syt(const StandardTableau& sigma, const MoveRecord& move)
{
    Rows rows = sigma.rows();
    if (move.kind == MoveKind::swap) {
        if (move.first >= move.second)
            return std::nullopt;
        const auto [rx, cx] = locate(rows, move.first);
        const auto [ry, cy] = locate(rows, move.second);
        if (rx < 0 || ry < 0 || !(rx < ry))
            return std::nullopt;
        std::swap(rows[static_cast<std::size_t>(rx)][static_cast<std::size_t>(cx)],
                  rows[static_cast<std::size_t>(ry)][static_cast<std::size_t>(cy)]);
    } else if (move.kind == MoveKind::wind) {
        const int src = move.first;
        const int dst = move.second;
        if (src < 1 || src > static_cast<int>(rows.size()) || dst <= src ||
            dst > static_cast<int>(rows.size()) + 1)
            return std::nullopt;
        auto& from = rows[static_cast<std::size_t>(src - 1)];
        if (from.back() != move.third)
            return std::nullopt;
        from.pop_back();
        if (dst > static_cast<int>(rows.size()))
            rows.emplace_back();
        rows[static_cast<std::size_t>(dst - 1)].push_back(move.third);
    } else {
        return std::nullopt;
    }
    if (!check_syt(rows))
        return std::nullopt;
    return StandardTableau(std::move(rows));
}

std::vector<std::pair<StandardTableau, MoveRecord>> box_moves_syt(const StandardTableau& sigma, bool shape_preserving)
{
    std::vector<std::pair<StandardTableau, MoveRecord>> out;
    const auto word = sigma.row_word();
    const int r = sigma.size();
    for (int x = 1; x <= r; ++x)
        for (int y = x + 1; y <= r; ++y) {
            if (word[static_cast<std::size_t>(x - 1)] >= word[static_cast<std::size_t>(y - 1)])
                continue;
            MoveRecord m{MoveKind::swap, x, y, 0};
            if (auto t = apply_move_syt(sigma, m))
                out.emplace_back(std::move(*t), m);
        }
    if (shape_preserving)
        return out;
    const int rows = static_cast<int>(sigma.rows().size());
    for (int i = 1; i <= rows; ++i) {
        const int e = sigma.rows()[static_cast<std::size_t>(i - 1)].back();
        for (int j = i + 1; j <= rows + 1; ++j) {
            MoveRecord m{MoveKind::wind, i, j, e};
            if (auto t = apply_move_syt(sigma, m))
                out.emplace_back(std::move(*t), m);
        }
    }
    return out;
}

std::vector<StandardTableau> box_down_set_syt(const StandardTableau& sigma, bool shape_preserving)
{
    return down_set(sigma, [&](const StandardTableau& t) { return box_moves_syt(t, shape_preserving); });
}

bool box_leq_syt(const StandardTableau& pi, const StandardTableau& sigma, std::vector<MoveRecord>* witness,
                 bool shape_preserving)
{
    if (pi.size() != sigma.size())
        return false;
    if (shape_preserving && pi.shape() != sigma.shape())
        return false;
    return reach(pi, sigma, [&](const StandardTableau& t) { return box_moves_syt(t, shape_preserving); }, witness);
}

StandardTableau f_embed(const StandardTableau& pi)
{
    const int r = pi.size();
    PartitionChain chain = syt_to_chain(pi);
    if (r == 0)
        return pi;
    for (int s = 1; s <= r * r - r; ++s) {
        const Partition& current = chain.back();
        std::vector<int> rows = transpose(current).vec();
        rows.resize(static_cast<std::size_t>(r), 0);
        int j = 0;
        for (int idx = 1; idx <= r - 1; ++idx)
            if (rows[static_cast<std::size_t>(idx - 1)] == r)
                j = idx;
        const auto full_rows = std::count(rows.begin(), rows.end(), r);
        if (full_rows != j)
            throw std::logic_error("f_embed: maximal full row index " + std::to_string(j) +
                                   " disagrees with the number of full rows at step " + std::to_string(s));
        if (j >= r)
            throw std::logic_error("f_embed: no row left to extend at step " + std::to_string(s));
        rows[static_cast<std::size_t>(j)] += 1;
        if (rows[static_cast<std::size_t>(j)] > r || (j > 0 && rows[static_cast<std::size_t>(j)] >
                                                                 rows[static_cast<std::size_t>(j - 1)]))
            throw std::logic_error("f_embed: step " + std::to_string(s) + " leaves the partitions");
        std::erase(rows, 0);
        Partition next = transpose(Partition(rows));
        if (next.weight() != current.weight() + 1 || !contains(next, current))
            throw std::logic_error("f_embed: step " + std::to_string(s) + " is not a one-cell extension");
        chain.push_back(std::move(next));
    }
    if (chain.back() != square(r))
        throw std::logic_error("f_embed: final shape is not square");
    return chain_to_syt(chain);
}

// ---------------------------------------------------------------------------
// LR tableaux

bool dom_leq_lr(const LRTableau& delta, const LRTableau& gamma)
{
    if (delta.inner() != gamma.inner() || delta.outer() != gamma.outer())
        throw std::invalid_argument("dominance order on LR tableaux requires equal inner and outer shapes");
    const int n = std::max(delta.max_entry(), gamma.max_entry());
    for (int e = 0; e <= n; ++e)
        if (!nat_leq(delta.step(e), gamma.step(e)))
            return false;
    return true;
}

namespace {

std::optional<LRTableau> try_rook(const Partition& outer, const Partition& inner, const std::vector<int>& entries)
{
    Rows rows;
    const Partition outer_rows = transpose(outer);
    for (int i = 1; i <= outer_rows.length(); ++i)
        rows.emplace_back(static_cast<std::size_t>(outer_rows.part(i)), 0);
    for (int c = 1; c <= outer.length(); ++c)
        if (entries[static_cast<std::size_t>(c - 1)] > 0)
            rows[static_cast<std::size_t>(outer.part(c) - 1)][static_cast<std::size_t>(c - 1)] =
                entries[static_cast<std::size_t>(c - 1)];
    if (!check_lr_filling(outer, inner, rows))
        return std::nullopt;
    return LRTableau::from_filling(outer, inner, rows);
}

void require_rook(const LRTableau& t)
{
    if (!t.is_rook_strip())
        throw std::invalid_argument("box moves on LR tableaux require a rook strip");
}

} // namespace

std::optional<LRTableau> apply_move_lr(const LRTableau& gamma, const MoveRecord& move)
{
    require_rook(gamma);
    std::vector<int> entries = column_entries(gamma);
    const Partition& outer = gamma.outer();
    if (move.kind == MoveKind::lr_swap) {
        if (move.first >= move.second || move.first < 1)
            return std::nullopt;
        auto a = std::find(entries.begin(), entries.end(), move.first);
        auto b = std::find(entries.begin(), entries.end(), move.second);
        if (a == entries.end() || b == entries.end())
            return std::nullopt;
        const int row_a = outer.part(static_cast<int>(a - entries.begin()) + 1);
        const int row_b = outer.part(static_cast<int>(b - entries.begin()) + 1);
        if (!(row_a < row_b))
            return std::nullopt;
        std::swap(*a, *b);
    } else if (move.kind == MoveKind::lr_increase) {
        if (move.first < 1 || move.first > outer.length())
            return std::nullopt;
        int& v = entries[static_cast<std::size_t>(move.first - 1)];
        if (v == 0 || v != move.second || move.third <= move.second)
            return std::nullopt;
        v = move.third;
    } else {
        return std::nullopt;
    }
    return try_rook(outer, gamma.inner(), entries);
}

std::vector<std::pair<LRTableau, MoveRecord>> box_moves_lr(const LRTableau& gamma)
{
    require_rook(gamma);
    std::vector<std::pair<LRTableau, MoveRecord>> out;
    const std::vector<int> entries = column_entries(gamma);
    const Partition& outer = gamma.outer();
    const int cells = gamma.cell_count();
    const int ncols = static_cast<int>(entries.size());
    for (int a = 0; a < ncols; ++a)
        for (int b = 0; b < ncols; ++b) {
            const int x = entries[static_cast<std::size_t>(a)];
            const int y = entries[static_cast<std::size_t>(b)];
            if (x == 0 || y == 0 || x >= y || outer.part(a + 1) >= outer.part(b + 1))
                continue;
            std::vector<int> next = entries;
            std::swap(next[static_cast<std::size_t>(a)], next[static_cast<std::size_t>(b)]);
            if (auto t = try_rook(outer, gamma.inner(), next))
                out.emplace_back(std::move(*t), MoveRecord{MoveKind::lr_swap, x, y, 0});
        }
    for (int c = 0; c < ncols; ++c) {
        const int v = entries[static_cast<std::size_t>(c)];
        if (v == 0)
            continue;
        for (int w = v + 1; w <= cells; ++w) {
            std::vector<int> next = entries;
            next[static_cast<std::size_t>(c)] = w;
            if (auto t = try_rook(outer, gamma.inner(), next))
                out.emplace_back(std::move(*t), MoveRecord{MoveKind::lr_increase, c + 1, v, w});
        }
    }
    return out;
}

std::vector<LRTableau> box_down_set_lr(const LRTableau& gamma)
{
    return down_set(gamma, [](const LRTableau& t) { return box_moves_lr(t); });
}

bool box_leq_lr(const LRTableau& delta, const LRTableau& gamma, std::vector<MoveRecord>* witness)
{
    if (delta.inner() != gamma.inner() || delta.outer() != gamma.outer())
        return false;
    return reach(delta, gamma, [](const LRTableau& t) { return box_moves_lr(t); }, witness);
}

StandardTableau phi(const LRTableau& gamma)
{
    if (!gamma.is_rook_strip())
        throw std::invalid_argument("phi requires a rook strip");
    const auto word = reading_word(gamma);
    Rows rows;
    for (std::size_t j = 0; j < word.size(); ++j) {
        const auto row = static_cast<std::size_t>(word[j]);
        if (rows.size() < row)
            rows.resize(row);
        rows[row - 1].push_back(static_cast<int>(j) + 1);
    }
    return StandardTableau(std::move(rows));
}

LRTableau phi_inverse(const StandardTableau& t, const Partition& beta, const Partition& gamma)
{
    const SkewShape shape(beta, gamma);
    if (!is_rook_strip(shape))
        throw std::invalid_argument("phi_inverse requires a rook strip");
    if (shape.size() != t.size())
        throw std::invalid_argument("phi_inverse: tableau weight differs from the strip size");
    const auto word = t.row_word();
    std::vector<int> entries(static_cast<std::size_t>(beta.length()), 0);
    std::size_t pos = 0;
    for (int c = beta.length(); c >= 1; --c)
        if (beta.part(c) > gamma.part(c))
            entries[static_cast<std::size_t>(c - 1)] = word[pos++];
    Rows rows;
    const Partition outer_rows = transpose(beta);
    for (int i = 1; i <= outer_rows.length(); ++i)
        rows.emplace_back(static_cast<std::size_t>(outer_rows.part(i)), 0);
    for (int c = 1; c <= beta.length(); ++c)
        if (entries[static_cast<std::size_t>(c - 1)] > 0)
            rows[static_cast<std::size_t>(beta.part(c) - 1)][static_cast<std::size_t>(c - 1)] =
                entries[static_cast<std::size_t>(c - 1)];
    if (auto d = check_lr_filling(beta, gamma, rows); !d)
        throw std::invalid_argument("phi_inverse: " + t.to_string() + " has no preimage of shape " +
                                    beta.to_string() + " \\ " + gamma.to_string() + ": " + d.message);
    return LRTableau::from_filling(beta, gamma, rows);
}

// ---------------------------------------------------------------------------
// Relations

RelationTable relation_from_down_sets(int size, const std::vector<std::vector<int>>& down_sets)
{
    RelationTable table;
    table.size = size;
    table.leq.assign(static_cast<std::size_t>(size), std::vector<char>(static_cast<std::size_t>(size), 0));
    for (std::size_t j = 0; j < down_sets.size(); ++j)
        for (int i : down_sets[j])
            table.leq[static_cast<std::size_t>(i)][j] = 1;
    return table;
}

Diagnostic check_poset(const RelationTable& t)
{
    for (int i = 0; i < t.size; ++i)
        if (!t(i, i))
            return Diagnostic::fail("not reflexive at element " + std::to_string(i));
    for (int i = 0; i < t.size; ++i)
        for (int j = i + 1; j < t.size; ++j)
            if (t(i, j) && t(j, i))
                return Diagnostic::fail("not antisymmetric at elements " + std::to_string(i) + ", " +
                                        std::to_string(j));
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j) {
            if (!t(i, j))
                continue;
            for (int k = 0; k < t.size; ++k)
                if (t(j, k) && !t(i, k))
                    return Diagnostic::fail("not transitive at elements " + std::to_string(i) + ", " +
                                            std::to_string(j) + ", " + std::to_string(k));
        }
    return Diagnostic::pass();
}

std::vector<std::pair<int, int>> hasse(const RelationTable& t)
{
    if (auto d = check_poset(t); !d)
        throw std::invalid_argument("hasse: " + d.message);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j) {
            if (i == j || !t(i, j))
                continue;
            bool cover = true;
            for (int k = 0; k < t.size && cover; ++k)
                if (k != i && k != j && t(i, k) && t(k, j))
                    cover = false;
            if (cover)
                edges.emplace_back(i, j);
        }
    return edges;
}

RelationComparison relations_equal(const RelationTable& a, const RelationTable& b)
{
    if (a.size != b.size)
        return {false, std::min(a.size, b.size), -1};
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < a.size; ++j)
            if (a(i, j) != b(i, j))
                return {false, i, j};
    return {};
}

} // namespace tabord
