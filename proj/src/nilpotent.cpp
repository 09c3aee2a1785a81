#include "tabord/nilpotent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "tabord/hom.hpp"

namespace tabord {

NilpotentModule::NilpotentModule(Partition shape, PrimeField field)
    : NilpotentModule(shape.vec(), field)
{
}

NilpotentModule::NilpotentModule(std::vector<int> lengths, PrimeField field)
    : lengths_(std::move(lengths)), shape_(Partition::from_multiset(lengths_)), field_(field)
{
    int off = 0;
    for (int j = 1; j <= components(); ++j) {
        if (length(j) < 1)
            throw std::invalid_argument("module components must have positive length");
        offsets_.push_back(off);
        for (int u = 0; u < length(j); ++u)
            comp_of_.push_back(j);
        off += length(j);
    }
}

Vec NilpotentModule::monomial(int j, int u, int c) const
{
    if (j < 1 || j > components())
        throw std::out_of_range("generator b_" + std::to_string(j) + " does not exist");
    Vec x = zero();
    if (u >= 0 && u < length(j))
        x[static_cast<std::size_t>(index(j, u))] = field_.reduce(c);
    return x;
}

Vec NilpotentModule::add(const Vec& x, const Vec& y) const
{
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = field_.add(x[i], y[i]);
    return z;
}

Vec NilpotentModule::scale(const Vec& x, int c) const
{
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = field_.mul(x[i], field_.reduce(c));
    return z;
}

Vec NilpotentModule::act_t(const Vec& x, int power) const
{
    Vec y = zero();
    for (int j = 1; j <= components(); ++j)
        for (int u = 0; u + power < length(j); ++u)
            y[static_cast<std::size_t>(index(j, u + power))] = x[static_cast<std::size_t>(index(j, u))];
    return y;
}

Matrix NilpotentModule::t_matrix(int power) const
{
    Matrix m(static_cast<std::size_t>(dim()), Vec(static_cast<std::size_t>(dim()), 0));
    for (int j = 1; j <= components(); ++j)
        for (int u = 0; u + power < length(j); ++u)
            m[static_cast<std::size_t>(index(j, u + power))][static_cast<std::size_t>(index(j, u))] = 1;
    return m;
}

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad module element '" + std::string(whole) + "'");
    return value;
}

} // namespace

Vec NilpotentModule::parse(std::string_view text) const
{
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            compact += ch;
    if (compact.empty())
        throw std::invalid_argument("empty module element");
    Vec result = zero();
    if (compact == "0")
        return result;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        int sign = 1;
        if (compact[pos] == '+' || compact[pos] == '-') {
            sign = compact[pos] == '-' ? -1 : 1;
            ++pos;
        }
        const std::size_t end = compact.find_first_of("+-", pos);
        const std::string_view term =
            std::string_view(compact).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? compact.size() : end;
        long long coef = sign;
        int degree = 0;
        int component = 0;
        std::size_t start = 0;
        while (start <= term.size()) {
            const std::size_t star = term.find('*', start);
            const std::string_view factor = term.substr(start, star == std::string_view::npos ? term.npos : star - start);
            if (factor.empty())
                throw std::invalid_argument("bad module element '" + std::string(text) + "'");
            if (factor == "t") {
                degree += 1;
            } else if (factor.starts_with("t^")) {
                degree += parse_int(factor.substr(2), text);
            } else if (factor.starts_with("b_")) {
                if (component != 0)
                    throw std::invalid_argument("term with two generators in '" + std::string(text) + "'");
                component = parse_int(factor.substr(2), text);
            } else {
                coef *= parse_int(factor, text);
            }
            if (star == std::string_view::npos)
                break;
            start = star + 1;
        }
        if (component == 0)
            throw std::invalid_argument("term without generator in '" + std::string(text) + "'");
        result = add(result, monomial(component, degree, field_.reduce(coef)));
    }
    return result;
}

std::string NilpotentModule::format(const Vec& x) const
{
    std::string out;
    for (int j = 1; j <= components(); ++j)
        for (int u = 0; u < length(j); ++u) {
            const int c = x[static_cast<std::size_t>(index(j, u))];
            if (c == 0)
                continue;
            if (!out.empty())
                out += " + ";
            if (c != 1)
                out += std::to_string(c) + "*";
            if (u == 1)
                out += "t*";
            else if (u > 1)
                out += "t^" + std::to_string(u) + "*";
            out += "b_" + std::to_string(j);
        }
    return out.empty() ? "0" : out;
}

Height height(const NilpotentModule& m, const Vec& x)
{
    Height h;
    for (int i = 0; i < m.dim(); ++i)
        if (x[static_cast<std::size_t>(i)] != 0) {
            const int d = m.degree_of(i);
            if (!h || d < *h)
                h = d;
        }
    return h;
}

std::vector<int> height_sequence(const NilpotentModule& m, const Vec& x)
{
    std::vector<int> seq;
    Vec y = x;
    while (auto h = height(m, y)) {
        seq.push_back(*h);
        y = m.act_t(y);
    }
    return seq;
}

std::string height_to_string(const Height& h)
{
    return h ? std::to_string(*h) : "inf";
}

Subspace span_lambda(const NilpotentModule& m, const std::vector<Vec>& generators)
{
    Matrix rows;
    for (const auto& g : generators) {
        Vec y = g;
        while (std::any_of(y.begin(), y.end(), [](int c) { return c != 0; })) {
            rows.push_back(y);
            y = m.act_t(y);
        }
    }
    return Subspace(m.dim(), m.field(), std::move(rows));
}

Subspace t_power(const NilpotentModule& m, const Subspace& s, int e)
{
    Matrix rows;
    for (const auto& v : s.basis())
        rows.push_back(m.act_t(v, e));
    return Subspace(m.dim(), m.field(), std::move(rows));
}

Subspace t_power_ambient(const NilpotentModule& m, int w)
{
    Matrix rows;
    for (int j = 1; j <= m.components(); ++j)
        for (int u = w; u < m.length(j); ++u)
            rows.push_back(m.monomial(j, u));
    return Subspace(m.dim(), m.field(), std::move(rows));
}

bool is_t_invariant(const NilpotentModule& m, const Subspace& s)
{
    return std::all_of(s.basis().begin(), s.basis().end(), [&](const Vec& v) { return s.contains(m.act_t(v)); });
}

Partition module_type(const NilpotentModule& m, const Subspace& s)
{
    if (!is_t_invariant(m, s))
        throw std::invalid_argument("module_type: subspace is not t-invariant");
    std::vector<int> dims{s.dim()};
    const int top = m.shape().part(1);
    for (int w = 1; w <= top; ++w)
        dims.push_back(t_power(m, s, w).dim());
    std::vector<int> rows;
    for (int w = 1; w <= top; ++w)
        if (int d = dims[static_cast<std::size_t>(w - 1)] - dims[static_cast<std::size_t>(w)]; d > 0)
            rows.push_back(d);
    return transpose(Partition(rows));
}

namespace {

// Type of B / (C + t^w B) read off one echelon form: with columns sorted by
// degree, dim of the image of C in B / t^w B is the pivot count among the
// columns of degree < w.
Partition quotient_of_span(const NilpotentModule& m, const Matrix& spanning)
{
    const int n = m.dim();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        order[static_cast<std::size_t>(c)] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return m.degree_of(x) < m.degree_of(y); });
    Matrix rows;
    for (const auto& v : spanning) {
        Vec p(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            p[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])];
        rows.push_back(std::move(p));
    }
    const auto pivots = rref(rows, m.field());
    const int top = m.shape().part(1);
    std::vector<int> rows_of_type;
    int previous = 0;
    std::size_t k = 0;
    int below = 0; // dim of B / t^w B
    for (int w = 1; w <= top; ++w) {
        for (int j = 1; j <= m.components(); ++j)
            below += m.length(j) >= w ? 1 : 0;
        while (k < pivots.size() && m.degree_of(order[static_cast<std::size_t>(pivots[k])]) < w)
            ++k;
        const int q = below - static_cast<int>(k);
        if (q - previous > 0)
            rows_of_type.push_back(q - previous);
        previous = q;
    }
    return transpose(Partition(rows_of_type));
}

} // namespace

Partition quotient_type(const NilpotentModule& m, const Subspace& a, int e)
{
    if (!is_t_invariant(m, a))
        throw std::invalid_argument("quotient_type: subspace is not a submodule");
    Matrix tea;
    for (const auto& v : a.basis())
        tea.push_back(m.act_t(v, e));
    return quotient_of_span(m, tea);
}

std::vector<Partition> quotient_chain(const NilpotentModule& m, const Subspace& a)
{
    std::vector<Partition> chain;
    Matrix tea = a.basis();
    while (true) {
        chain.push_back(quotient_of_span(m, tea));
        const bool zero = std::all_of(tea.begin(), tea.end(), [](const Vec& v) {
            return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
        });
        if (zero)
            return chain;
        for (auto& v : tea)
            v = m.act_t(v);
    }
}

int hom_dim_lambda(const NilpotentModule& b, const Subspace* a, int e, const NilpotentModule& target)
{
    HomSystem system(b, target);
    if (a) {
        const Subspace tea = t_power(b, *a, e);
        for (const auto& v : tea.basis())
            system.require_zero(v);
    }
    return system.dimension();
}

} // namespace tabord
