#include "tabord/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tabord {

namespace {

std::string cell_name(std::size_t row, std::size_t col)
{
    return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

// Column heights of the diagram whose row lengths are given.
std::vector<int> column_heights(const std::vector<int>& row_lengths)
{
    std::vector<int> heights(row_lengths.empty() ? 0 : static_cast<std::size_t>(row_lengths.front()), 0);
    for (std::size_t i = 0; i < row_lengths.size(); ++i)
        for (int c = 0; c < row_lengths[i]; ++c)
            heights[static_cast<std::size_t>(c)] = static_cast<int>(i) + 1;
    return heights;
}

template <typename T>
std::vector<T> sorted_by_chain(std::vector<T> items, PartitionChain (*to_chain)(const T&))
{
    std::vector<std::pair<PartitionChain, T>> keyed;
    keyed.reserve(items.size());
    for (auto& t : items)
        keyed.emplace_back(to_chain(t), std::move(t));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<T> out;
    out.reserve(keyed.size());
    for (auto& [chain, t] : keyed)
        out.push_back(std::move(t));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Standard tableaux

Diagnostic check_syt(const Rows& rows)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty())
            return Diagnostic::fail("row " + std::to_string(i + 1) + " is empty");
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            return Diagnostic::fail("row " + std::to_string(i + 1) + " is longer than the row above");
        total += rows[i].size();
    }
    std::vector<bool> seen(total + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            const int v = rows[i][c];
            if (v < 1 || static_cast<std::size_t>(v) > total || seen[static_cast<std::size_t>(v)])
                return Diagnostic::fail("cell " + cell_name(i, c) + " holds " + std::to_string(v) +
                                        ", entries must be exactly 1.." + std::to_string(total));
            seen[static_cast<std::size_t>(v)] = true;
            if (c > 0 && rows[i][c - 1] >= v)
                return Diagnostic::fail("row not increasing at cell " + cell_name(i, c));
            if (i > 0 && rows[i - 1][c] >= v)
                return Diagnostic::fail("column not increasing at cell " + cell_name(i, c));
        }
    }
    return Diagnostic::pass();
}

Diagnostic check_syt(const Rows& rows, const Partition& shape)
{
    auto d = check_syt(rows);
    if (!d)
        return d;
    const Partition row_lengths = transpose(shape);
    if (static_cast<int>(rows.size()) != row_lengths.length())
        return Diagnostic::fail("row count does not match shape " + shape.to_string());
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (static_cast<int>(rows[i].size()) != row_lengths.part(static_cast<int>(i) + 1))
            return Diagnostic::fail("row " + std::to_string(i + 1) + " length does not match shape " +
                                    shape.to_string());
    return d;
}

StandardTableau::StandardTableau(Rows rows) : rows_(std::move(rows))
{
    if (auto d = check_syt(rows_); !d)
        throw std::invalid_argument("not a standard tableau: " + d.message);
}

int StandardTableau::size() const
{
    int n = 0;
    for (const auto& row : rows_)
        n += static_cast<int>(row.size());
    return n;
}

Partition StandardTableau::shape() const
{
    std::vector<int> lengths;
    for (const auto& row : rows_)
        lengths.push_back(static_cast<int>(row.size()));
    return Partition(column_heights(lengths));
}

std::vector<int> StandardTableau::row_word() const
{
    std::vector<int> word(static_cast<std::size_t>(size()), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int v : rows_[i])
            word[static_cast<std::size_t>(v - 1)] = static_cast<int>(i) + 1;
    return word;
}

std::string StandardTableau::to_string() const
{
    const bool wide = size() >= 10;
    std::string out = "{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            out += ',';
        for (std::size_t c = 0; c < rows_[i].size(); ++c) {
            if (wide && c)
                out += '.';
            out += std::to_string(rows_[i][c]);
        }
    }
    return out + "}";
}

PartitionChain syt_to_chain(const StandardTableau& t)
{
    PartitionChain chain;
    std::vector<int> heights;
    std::vector<int> row_len;
    for (int row : t.row_word()) {
        const auto r = static_cast<std::size_t>(row - 1);
        if (row_len.size() <= r)
            row_len.resize(r + 1, 0);
        const auto col = static_cast<std::size_t>(row_len[r]++);
        if (heights.size() <= col)
            heights.resize(col + 1, 0);
        heights[col] = row;
        chain.emplace_back(heights);
    }
    return chain;
}

StandardTableau chain_to_syt(const PartitionChain& chain)
{
    Rows rows;
    Partition previous;
    for (std::size_t e = 0; e < chain.size(); ++e) {
        const Partition& next = chain[e];
        if (next.weight() != previous.weight() + 1 || !contains(next, previous))
            throw std::invalid_argument("chain is not saturated at step " + std::to_string(e + 1));
        int added_row = 0;
        for (int c = 1; c <= next.length(); ++c)
            if (next.part(c) != previous.part(c))
                added_row = next.part(c);
        if (rows.size() < static_cast<std::size_t>(added_row))
            rows.resize(static_cast<std::size_t>(added_row));
        rows[static_cast<std::size_t>(added_row - 1)].push_back(static_cast<int>(e) + 1);
        previous = next;
    }
    return StandardTableau(std::move(rows));
}

namespace {

void syt_rec(int next, int total, const std::vector<int>& target, std::vector<int>& len, Rows& rows,
             std::vector<StandardTableau>& out)
{
    if (next > total) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (len[i] >= target[i])
            continue;
        if (i > 0 && len[i - 1] <= len[i])
            continue;
        rows[i].push_back(next);
        ++len[i];
        syt_rec(next + 1, total, target, len, rows, out);
        --len[i];
        rows[i].pop_back();
    }
}

} // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape)
{
    const Partition row_lengths = transpose(shape);
    std::vector<int> target(row_lengths.vec());
    std::vector<int> len(target.size(), 0);
    Rows rows(target.size());
    std::vector<StandardTableau> out;
    syt_rec(1, shape.weight(), target, len, rows, out);
    return sorted_by_chain<StandardTableau>(std::move(out), &syt_to_chain);
}

std::vector<StandardTableau> enumerate_syt_weight(int r)
{
    std::vector<StandardTableau> out;
    for (const auto& shape : partitions_of(r)) {
        auto part = enumerate_syt(shape);
        out.insert(out.end(), part.begin(), part.end());
    }
    return sorted_by_chain<StandardTableau>(std::move(out), &syt_to_chain);
}

// ---------------------------------------------------------------------------
// LR tableaux

Diagnostic check_lr_filling(const Partition& outer, const Partition& inner, const Rows& rows)
{
    if (!contains(outer, inner))
        return Diagnostic::fail("inner shape " + inner.to_string() + " not contained in outer " +
                                outer.to_string());
    const Partition outer_rows = transpose(outer);
    const Partition inner_rows = transpose(inner);
    if (static_cast<int>(rows.size()) != outer_rows.length())
        return Diagnostic::fail("row count does not match outer shape " + outer.to_string());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int row = static_cast<int>(i) + 1;
        if (static_cast<int>(rows[i].size()) != outer_rows.part(row))
            return Diagnostic::fail("row " + std::to_string(row) + " length does not match outer shape");
        int last = 0;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            const int v = rows[i][c];
            const bool in_inner = static_cast<int>(c) < inner_rows.part(row);
            if (in_inner && v != 0)
                return Diagnostic::fail("inner cell " + cell_name(i, c) + " must be empty");
            if (in_inner)
                continue;
            if (v < 1)
                return Diagnostic::fail("skew cell " + cell_name(i, c) + " has no positive entry");
            if (v < last)
                return Diagnostic::fail("row not weakly increasing at cell " + cell_name(i, c));
            last = v;
            if (i > 0 && static_cast<int>(c) >= inner_rows.part(row - 1) && rows[i - 1][c] >= v)
                return Diagnostic::fail("column not strictly increasing at cell " + cell_name(i, c));
        }
    }
    std::map<int, int> count;
    for (int c = outer.length(); c >= 1; --c) {
        for (int w = inner.part(c) + 1; w <= outer.part(c); ++w) {
            const int v = rows[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(c - 1)];
            ++count[v];
            if (v > 1 && count[v] > count[v - 1])
                return Diagnostic::fail("lattice property fails at column " + std::to_string(c) + " for entry " +
                                        std::to_string(v));
        }
    }
    return Diagnostic::pass();
}

namespace {

Rows filling_from_chain(const PartitionChain& chain)
{
    const Partition& outer = chain.back();
    const Partition outer_rows = transpose(outer);
    Rows rows;
    for (int i = 1; i <= outer_rows.length(); ++i)
        rows.emplace_back(static_cast<std::size_t>(outer_rows.part(i)), 0);
    for (std::size_t e = 1; e < chain.size(); ++e)
        for (int c = 1; c <= outer.length(); ++c)
            for (int w = chain[e - 1].part(c) + 1; w <= chain[e].part(c); ++w)
                rows[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(c - 1)] = static_cast<int>(e);
    return rows;
}

PartitionChain chain_from_filling(const Partition& outer, const Partition& inner, const Rows& rows)
{
    int max_entry = 0;
    for (const auto& row : rows)
        for (int v : row)
            max_entry = std::max(max_entry, v);
    PartitionChain chain{inner};
    for (int e = 1; e <= max_entry; ++e) {
        std::vector<int> heights;
        for (int c = 1; c <= outer.length(); ++c) {
            int h = inner.part(c);
            while (h < outer.part(c) && rows[static_cast<std::size_t>(h)][static_cast<std::size_t>(c - 1)] <= e)
                ++h;
            heights.push_back(h);
        }
        chain.push_back(Partition::from_multiset(heights));
    }
    return chain;
}

} // namespace

Diagnostic check_lr_chain(const PartitionChain& chain)
{
    if (chain.empty())
        return Diagnostic::fail("empty chain");
    for (std::size_t e = 1; e < chain.size(); ++e)
        if (!contains(chain[e], chain[e - 1]))
            return Diagnostic::fail("chain step " + std::to_string(e) + " does not contain step " +
                                    std::to_string(e - 1));
    for (std::size_t e = 1; e < chain.size(); ++e)
        if (!is_horizontal_strip(SkewShape(chain[e], chain[e - 1])))
            return Diagnostic::fail("entries " + std::to_string(e) + " repeat in a column");
    return check_lr_filling(chain.back(), chain.front(), filling_from_chain(chain));
}

LRTableau::LRTableau(PartitionChain chain) : chain_(std::move(chain))
{
    while (chain_.size() >= 2 && chain_[chain_.size() - 1] == chain_[chain_.size() - 2])
        chain_.pop_back();
    if (auto d = check_lr_chain(chain_); !d)
        throw std::invalid_argument("not an LR tableau: " + d.message);
}

LRTableau LRTableau::from_filling(const Partition& outer, const Partition& inner, const Rows& rows)
{
    if (auto d = check_lr_filling(outer, inner, rows); !d)
        throw std::invalid_argument("not an LR tableau: " + d.message);
    return LRTableau(chain_from_filling(outer, inner, rows));
}

const Partition& LRTableau::step(int e) const
{
    if (e < 0)
        throw std::out_of_range("LR chain index must be nonnegative");
    return e <= max_entry() ? chain_[static_cast<std::size_t>(e)] : chain_.back();
}

Rows LRTableau::filling() const
{
    return filling_from_chain(chain_);
}

Partition LRTableau::content() const
{
    std::vector<int> counts;
    for (std::size_t e = 1; e < chain_.size(); ++e)
        counts.push_back(chain_[e].weight() - chain_[e - 1].weight());
    return transpose(Partition(counts));
}

bool LRTableau::is_rook_strip() const
{
    return tabord::is_rook_strip(SkewShape(outer(), inner()));
}

PartitionChain lr_to_chain(const LRTableau& t)
{
    return t.chain();
}

LRTableau lr_from_chain(const Partition& inner, const PartitionChain& chain)
{
    if (chain.empty() || chain.front() != inner)
        throw std::invalid_argument("chain must start at the inner shape " + inner.to_string());
    return LRTableau(chain);
}

Partition lr_content(const LRTableau& t)
{
    return t.content();
}

std::vector<int> reading_word(const LRTableau& t)
{
    const Rows rows = t.filling();
    std::vector<int> word;
    for (int c = t.outer().length(); c >= 1; --c)
        for (int w = t.inner().part(c) + 1; w <= t.outer().part(c); ++w)
            word.push_back(rows[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(c - 1)]);
    return word;
}

std::vector<int> column_entries(const LRTableau& t)
{
    if (!t.is_rook_strip())
        throw std::invalid_argument("column_entries requires a rook strip");
    const Rows rows = t.filling();
    std::vector<int> entries;
    for (int c = 1; c <= t.outer().length(); ++c) {
        const int h = t.outer().part(c);
        entries.push_back(h > t.inner().part(c) ? rows[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(c - 1)]
                                                : 0);
    }
    return entries;
}

LRTableau rook_tableau(const Partition& outer, const std::vector<int>& entries_by_column)
{
    if (static_cast<int>(entries_by_column.size()) != outer.length())
        throw std::invalid_argument("rook_tableau: one entry per column expected");
    std::vector<int> inner_parts;
    for (int c = 1; c <= outer.length(); ++c)
        inner_parts.push_back(outer.part(c) - (entries_by_column[static_cast<std::size_t>(c - 1)] > 0 ? 1 : 0));
    const Partition inner = Partition::from_multiset(inner_parts);
    if (!contains(outer, inner) || Partition::from_multiset(inner_parts).vec() != [&] {
            std::vector<int> v;
            for (int x : inner_parts)
                if (x > 0)
                    v.push_back(x);
            return v;
        }())
        throw std::invalid_argument("rook_tableau: removed cells do not leave a partition");
    Rows rows = filling_from_chain({inner, outer});
    for (int c = 1; c <= outer.length(); ++c) {
        const int v = entries_by_column[static_cast<std::size_t>(c - 1)];
        if (v > 0)
            rows[static_cast<std::size_t>(outer.part(c) - 1)][static_cast<std::size_t>(c - 1)] = v;
    }
    return LRTableau::from_filling(outer, inner, rows);
}

namespace {

void lr_rook_rec(std::size_t pos, const std::vector<std::pair<int, int>>& cells, std::vector<int>& count,
                 Rows& rows, const Partition& beta, const Partition& gamma, std::vector<LRTableau>& out)
{
    if (pos == cells.size()) {
        out.push_back(LRTableau::from_filling(beta, gamma, rows));
        return;
    }
    const auto [row, col] = cells[pos];
    for (std::size_t e = 1; e <= cells.size(); ++e) {
        if (e > 1 && count[e - 1] == 0)
            break;
        if (e > 1 && count[e] >= count[e - 1])
            continue;
        ++count[e];
        rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = static_cast<int>(e);
        lr_rook_rec(pos + 1, cells, count, rows, beta, gamma, out);
        --count[e];
    }
}

} // namespace

std::vector<LRTableau> enumerate_lr_rook(const Partition& beta, const Partition& gamma)
{
    const SkewShape shape(beta, gamma);
    if (!is_rook_strip(shape))
        throw std::invalid_argument("enumerate_lr_rook: " + beta.to_string() + " \\ " + gamma.to_string() +
                                    " is not a rook strip");
    // Reading order: rightmost column first.
    std::vector<std::pair<int, int>> cells;
    for (int c = beta.length(); c >= 1; --c)
        if (beta.part(c) > gamma.part(c))
            cells.emplace_back(beta.part(c), c);
    Rows rows = filling_from_chain({gamma, beta});
    std::vector<int> count(cells.size() + 2, 0);
    std::vector<LRTableau> out;
    lr_rook_rec(0, cells, count, rows, beta, gamma, out);
    return sorted_by_chain<LRTableau>(std::move(out), &lr_to_chain);
}

LRTableau tableau_union(const LRTableau& e, const LRTableau& z)
{
    const int n = std::max(e.max_entry(), z.max_entry());
    PartitionChain chain;
    for (int i = 0; i <= n; ++i)
        chain.push_back(union_rowwise(e.step(i), z.step(i)));
    return LRTableau(std::move(chain));
}

std::string chain_to_string(const PartitionChain& chain)
{
    std::string out = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i)
            out += ',';
        out += chain[i].to_string();
    }
    return out + "]";
}

} // namespace tabord
