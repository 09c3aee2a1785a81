#include "tabord/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tabord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiset(std::vector<int> parts)
{
    std::erase_if(parts, [](int x) { return x == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("partition must be written as [a,b,...]");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("bad partition part: '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape))
{
    if (!contains(outer, inner))
        throw std::invalid_argument("skew shape " + outer.to_string() + " \\ " + inner.to_string() +
                                    ": inner not contained in outer");
}

Partition transpose(const Partition& alpha)
{
    if (alpha.empty())
        return {};
    std::vector<int> result(static_cast<std::size_t>(alpha.part(1)), 0);
    for (int part : alpha.parts())
        for (int j = 0; j < part; ++j)
            ++result[static_cast<std::size_t>(j)];
    return Partition(std::move(result));
}

bool nat_leq(const Partition& alpha, const Partition& beta)
{
    const Partition a = transpose(alpha);
    const Partition b = transpose(beta);
    const int n = std::max(a.length(), b.length());
    int sa = 0;
    int sb = 0;
    for (int c = 1; c <= n; ++c) {
        sa += a.part(c);
        sb += b.part(c);
        if (sa > sb)
            return false;
    }
    return true;
}

bool nat_leq_same_weight(const Partition& alpha, const Partition& beta)
{
    if (alpha.weight() != beta.weight())
        throw std::invalid_argument("natural order: weights differ (" + alpha.to_string() + " vs " +
                                    beta.to_string() + ")");
    const int n = std::max(alpha.length(), beta.length());
    int sa = 0;
    int sb = 0;
    for (int c = 1; c <= n; ++c) {
        sa += alpha.part(c);
        sb += beta.part(c);
        if (sa < sb)
            return false;
    }
    return true;
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

bool is_horizontal_strip(const SkewShape& s)
{
    for (int i = 1; i <= s.outer.length(); ++i)
        if (s.outer.part(i) > s.inner.part(i) + 1)
            return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s)
{
    return is_horizontal_strip(SkewShape(transpose(s.outer), transpose(s.inner)));
}

bool is_rook_strip(const SkewShape& s)
{
    return is_horizontal_strip(s) && is_vertical_strip(s);
}

Partition union_rowwise(const Partition& alpha, const Partition& beta)
{
    std::vector<int> parts(alpha.vec());
    parts.insert(parts.end(), beta.vec().begin(), beta.vec().end());
    return Partition::from_multiset(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

Partition square(int r)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(r, 0)), r));
}

} // namespace tabord
