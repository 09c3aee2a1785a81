#include "tabord/hom.hpp"

#include <algorithm>

namespace tabord {

HomSystem::HomSystem(const NilpotentModule& source, const NilpotentModule& target)
    : source_(source), target_(target), unknowns_(source.components() * target.dim())
{
    for (int j = 1; j <= source.components(); ++j) {
        const Matrix relation = evaluate(source.monomial(j, source.length(j) - 1));
        // f(t^{S_j - 1} b_j) must be killed by t: t^{S_j} x_j = 0.
        const Matrix t = target.t_matrix();
        for (auto& row : mat_mul(t, relation, source.field()))
            if (std::any_of(row.begin(), row.end(), [](int c) { return c != 0; }))
                constraints_.push_back(std::move(row));
    }
}

Matrix HomSystem::evaluate(const Vec& v) const
{
    const auto dt = static_cast<std::size_t>(target_.dim());
    Matrix m(dt, Vec(static_cast<std::size_t>(unknowns_), 0));
    const PrimeField& f = source_.field();
    for (int coord = 0; coord < source_.dim(); ++coord) {
        const int c = v[static_cast<std::size_t>(coord)];
        if (c == 0)
            continue;
        const int j = source_.component_of(coord);
        const int u = source_.degree_of(coord);
        const int base = (j - 1) * target_.dim();
        // t^u x_j: target coordinate (i, d) of x_j moves to (i, d + u).
        for (int k = 0; k < target_.dim(); ++k) {
            const int i = target_.component_of(k);
            const int d = target_.degree_of(k);
            if (d + u >= target_.length(i))
                continue;
            auto& entry = m[static_cast<std::size_t>(target_.index(i, d + u))][static_cast<std::size_t>(base + k)];
            entry = f.add(entry, c);
        }
    }
    return m;
}

void HomSystem::require_zero(const Vec& v)
{
    for (auto& row : evaluate(v))
        if (std::any_of(row.begin(), row.end(), [](int c) { return c != 0; }))
            constraints_.push_back(std::move(row));
}

void HomSystem::require_in(const Vec& v, const Matrix& ann)
{
    if (ann.empty())
        return;
    for (auto& row : mat_mul(ann, evaluate(v), source_.field()))
        if (std::any_of(row.begin(), row.end(), [](int c) { return c != 0; }))
            constraints_.push_back(std::move(row));
}

int HomSystem::dimension() const
{
    return unknowns_ - rank(constraints_, source_.field());
}

Matrix HomSystem::solutions() const
{
    return null_space(constraints_, unknowns_, source_.field());
}

} // namespace tabord
