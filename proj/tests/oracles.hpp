#pragma once

// Independent reference computations for the tests.  Nothing here calls
// into the library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;
using RowsT = std::vector<std::vector<int>>;

// I(n) = I(n-1) + (n-1) I(n-2): number of standard tableaux with n cells.
inline long long involutions(int n)
{
    long long a = 1, b = 1; // I(0), I(1)
    if (n == 0)
        return 1;
    for (int k = 2; k <= n; ++k) {
        const long long c = b + (k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

inline Parts conjugate(const Parts& p)
{
    Parts out;
    for (int j = 1;; ++j) {
        int c = 0;
        for (int x : p)
            c += x >= j ? 1 : 0;
        if (c == 0)
            return out;
        out.push_back(c);
    }
}

inline int at(const Parts& p, std::size_t i)
{
    return i < p.size() ? p[i] : 0;
}

// Natural order on arbitrary partitions: conjugate prefix sums.
inline bool nat(const Parts& a, const Parts& b)
{
    const Parts ca = conjugate(a), cb = conjugate(b);
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(ca.size(), cb.size()); ++i) {
        sa += at(ca, i);
        sb += at(cb, i);
        if (sa > sb)
            return false;
    }
    return true;
}

// Hook length count of standard tableaux of a shape given by column
// heights.
inline long long hook_count(const Parts& columns)
{
    const Parts rows = conjugate(columns);
    int n = 0;
    for (int x : columns)
        n += x;
    long long num = 1;
    for (int k = 2; k <= n; ++k)
        num *= k;
    long long den = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            const int arm = rows[i] - j - 1;
            const int leg = columns[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            den *= arm + leg + 1;
        }
    return num / den;
}

// Column heights of the cells holding 1..e, for e = 1..n.
inline std::vector<Parts> chain_of_rows(const RowsT& rows)
{
    int n = 0;
    for (const auto& r : rows)
        n += static_cast<int>(r.size());
    std::vector<Parts> chain;
    for (int e = 1; e <= n; ++e) {
        Parts cols;
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c)
                if (r[c] <= e) {
                    if (cols.size() <= c)
                        cols.resize(c + 1, 0);
                    ++cols[c];
                }
        while (!cols.empty() && cols.back() == 0)
            cols.pop_back();
        chain.push_back(cols);
    }
    return chain;
}

inline bool dominance(const RowsT& pi, const RowsT& sigma)
{
    const auto a = chain_of_rows(pi), b = chain_of_rows(sigma);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!nat(a[i], b[i]))
            return false;
    return true;
}

inline bool is_syt(const RowsT& rows)
{
    std::vector<int> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty() || (i > 0 && rows[i].size() > rows[i - 1].size()))
            return false;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            if (c > 0 && rows[i][c] <= rows[i][c - 1])
                return false;
            if (i > 0 && rows[i][c] <= rows[i - 1][c])
                return false;
            seen.push_back(rows[i][c]);
        }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (seen[k] != static_cast<int>(k) + 1)
            return false;
    return true;
}

// All single decreasing moves on the row representation.
inline std::vector<RowsT> moves(const RowsT& s)
{
    std::vector<RowsT> out;
    std::map<int, std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t c = 0; c < s[i].size(); ++c)
            where[s[i][c]] = {i, c};
    for (const auto& [x, px] : where)
        for (const auto& [y, py] : where)
            if (x < y && px.first < py.first) {
                RowsT t = s;
                std::swap(t[px.first][px.second], t[py.first][py.second]);
                if (is_syt(t))
                    out.push_back(t);
            }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j <= s.size(); ++j) {
            RowsT t = s;
            const int e = t[i].back();
            t[i].pop_back();
            if (j == t.size())
                t.emplace_back();
            t[j].push_back(e);
            if (t[i].empty())
                continue;
            if (is_syt(t))
                out.push_back(t);
        }
    return out;
}

inline std::set<RowsT> down_set(const RowsT& s)
{
    std::set<RowsT> seen{s};
    std::vector<RowsT> stack{s};
    while (!stack.empty()) {
        RowsT cur = stack.back();
        stack.pop_back();
        for (auto& t : moves(cur))
            if (seen.insert(t).second)
                stack.push_back(t);
    }
    return seen;
}

// All standard tableaux with n cells, as rows, by inserting n into every
// corner of the tableaux with n - 1 cells.
inline std::vector<RowsT> all_syt(int n)
{
    std::vector<RowsT> cur{RowsT{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<RowsT> next;
        for (const auto& t : cur)
            for (std::size_t i = 0; i <= t.size(); ++i) {
                RowsT u = t;
                if (i == u.size())
                    u.emplace_back();
                if (i > 0 && u[i].size() + 1 > u[i - 1].size())
                    continue;
                u[i].push_back(k);
                next.push_back(u);
            }
        cur = next;
    }
    return cur;
}

// The extension f on row lengths: at each step add a cell to row j + 1,
// where j counts the rows of length r.
inline RowsT f_rows(const RowsT& pi)
{
    RowsT t = pi;
    int r = 0;
    for (const auto& row : t)
        r += static_cast<int>(row.size());
    t.resize(static_cast<std::size_t>(r));
    for (int s = 1; s <= r * r - r; ++s) {
        std::size_t j = 0;
        while (j < t.size() && static_cast<int>(t[j].size()) == r)
            ++j;
        t[j].push_back(r + s);
    }
    return t;
}

// Krylov dimension of a vector under a nilpotent shift: number of nonzero
// iterates.  Components are coefficient arrays of lengths given.
inline int krylov_length(std::vector<std::vector<int>> comps)
{
    int k = 0;
    auto nonzero = [&] {
        for (const auto& c : comps)
            for (int x : c)
                if (x != 0)
                    return true;
        return false;
    };
    while (nonzero()) {
        ++k;
        for (auto& c : comps) {
            for (std::size_t u = c.size(); u-- > 1;)
                c[u] = c[u - 1];
            if (!c.empty())
                c[0] = 0;
        }
    }
    return k;
}

// dim Hom(N_beta, N_(ell)) = sum_j min(beta_j, ell).
inline int hom_sum_min(const Parts& beta, int ell)
{
    int s = 0;
    for (int b : beta)
        s += std::min(b, ell);
    return s;
}

} // namespace oracle
