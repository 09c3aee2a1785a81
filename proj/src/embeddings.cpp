#include "tabord/embeddings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "tabord/hom.hpp"

namespace tabord {

namespace {

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

std::string seq_string(const std::vector<int>& m)
{
    std::string out = "(";
    for (std::size_t i = 0; i < m.size(); ++i)
        out += (i ? "," : "") + std::to_string(m[i]);
    return out + ")";
}

} // namespace

// ---------------------------------------------------------------------------
// Embeddings

Embedding::Embedding(NilpotentModule ambient, std::vector<Vec> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)), sub_(ambient_.dim(), ambient_.field())
{
    for (auto& g : generators_) {
        if (static_cast<int>(g.size()) != ambient_.dim())
            throw std::invalid_argument("generator length differs from ambient dimension");
        for (auto& c : g)
            c = ambient_.field().reduce(c);
    }
    sub_ = span_lambda(ambient_, generators_);
}

int Embedding::loewy_length() const
{
    const Partition a = alpha();
    return a.empty() ? 0 : a.part(1);
}

std::string Embedding::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out += (i ? ", " : "") + ambient_.format(generators_[i]);
    if (generators_.empty())
        out += "0";
    out += " in N[";
    for (std::size_t j = 0; j < ambient_.lengths().size(); ++j)
        out += (j ? "," : "") + std::to_string(ambient_.lengths()[j]);
    return out + "])";
}

LRTableau lr_tableau_of(const Embedding& x)
{
    PartitionChain chain = quotient_chain(x.ambient(), x.sub());
    try {
        return LRTableau(chain);
    } catch (const std::invalid_argument& err) {
        throw std::logic_error("quotient chain of " + x.to_string() + " is not an LR tableau: " + err.what());
    }
}

namespace {

Vec embed_block(const Vec& v, std::size_t offset, std::size_t total)
{
    Vec out(total, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<long>(offset));
    return out;
}

} // namespace

Embedding direct_sum(const Embedding& x, const Embedding& y)
{
    if (!(x.field() == y.field()))
        throw std::invalid_argument("direct sum of embeddings over different fields");
    std::vector<int> lengths = x.ambient().lengths();
    lengths.insert(lengths.end(), y.ambient().lengths().begin(), y.ambient().lengths().end());
    NilpotentModule ambient(lengths, x.field());
    const auto total = static_cast<std::size_t>(ambient.dim());
    std::vector<Vec> gens;
    for (const auto& g : x.generators())
        gens.push_back(embed_block(g, 0, total));
    for (const auto& g : y.generators())
        gens.push_back(embed_block(g, static_cast<std::size_t>(x.ambient().dim()), total));
    return Embedding(std::move(ambient), std::move(gens));
}

Embedding direct_sum(const std::vector<Embedding>& parts, const PrimeField& field)
{
    Embedding sum = empty_embedding(Partition(), field);
    for (const auto& p : parts)
        sum = direct_sum(sum, p);
    return sum;
}

void check_height_sequence(const std::vector<int>& m)
{
    if (m.empty())
        throw std::invalid_argument("height sequence must be nonempty");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0)
            throw std::invalid_argument("height sequence " + seq_string(m) + " has a negative entry");
        if (i > 0 && m[i] <= m[i - 1])
            throw std::invalid_argument("height sequence " + seq_string(m) + " is not strictly increasing");
    }
}

std::vector<int> gap_indices(const std::vector<int>& m)
{
    std::vector<int> gaps;
    for (int l = static_cast<int>(m.size()) - 1; l >= 0; --l) {
        const auto i = static_cast<std::size_t>(l);
        if (i + 1 == m.size() || m[i + 1] > m[i] + 1)
            gaps.push_back(l);
    }
    return gaps;
}

namespace {

struct PoleData {
    std::vector<int> lengths; // β_j
    std::vector<int> shifts;  // ℓ_j
};

PoleData pole_data(const std::vector<int>& m)
{
    check_height_sequence(m);
    PoleData d;
    for (int i : gap_indices(m)) {
        d.lengths.push_back(m[static_cast<std::size_t>(i)] + 1);
        d.shifts.push_back(m[static_cast<std::size_t>(i)] - i);
    }
    return d;
}

} // namespace

Embedding pole(const std::vector<int>& m, const PrimeField& field)
{
    const PoleData d = pole_data(m);
    NilpotentModule ambient(d.lengths, field);
    Vec a = ambient.zero();
    for (std::size_t j = 0; j < d.lengths.size(); ++j)
        a = ambient.add(a, ambient.monomial(static_cast<int>(j) + 1, d.shifts[j]));
    return Embedding(std::move(ambient), {a});
}

Embedding empty_embedding(const Partition& beta, const PrimeField& field)
{
    return Embedding(NilpotentModule(beta, field), {});
}

Embedding picket(int i, int ell, const PrimeField& field)
{
    if (ell < 1 || i < 0)
        throw std::invalid_argument("picket requires ell >= 1 and i >= 0");
    NilpotentModule ambient(Partition{ell}, field);
    Vec g = ambient.monomial(1, std::max(ell - i, 0));
    return Embedding(std::move(ambient), {g});
}

Embedding d_embedding(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field)
{
    check_height_sequence(m);
    if (n.empty())
        return pole(m, field);
    check_height_sequence(n);
    const int r = static_cast<int>(m.size()) - 1;
    const int q = static_cast<int>(n.size()) - 1;
    if (r <= q)
        throw std::invalid_argument("D(m,n) requires m longer than n");
    if (m.back() < n.back() + 1)
        throw std::invalid_argument("D(m,n) requires m_r >= n_q + 1");
    const PoleData pm = pole_data(m);
    const PoleData pn = pole_data(n);
    std::vector<int> lengths = pm.lengths;
    lengths.insert(lengths.end(), pn.lengths.begin(), pn.lengths.end());
    NilpotentModule ambient(lengths, field);
    const int s = static_cast<int>(pm.lengths.size());
    Vec a1 = ambient.zero();
    Vec a2 = ambient.zero();
    for (int j = 1; j <= s; ++j) {
        const int l = pm.shifts[static_cast<std::size_t>(j - 1)];
        a1 = ambient.add(a1, ambient.monomial(j, l));
        if (j >= 2)
            a2 = ambient.add(a2, ambient.monomial(j, l + r - q - 1));
    }
    for (std::size_t j = 0; j < pn.lengths.size(); ++j)
        a2 = ambient.add(a2, ambient.monomial(s + static_cast<int>(j) + 1, pn.shifts[j]));
    return Embedding(std::move(ambient), {a1, a2});
}

// ---------------------------------------------------------------------------
// Morphisms

PolyMatrix::PolyMatrix(NilpotentModule source, NilpotentModule target)
    : source_(std::move(source)), target_(std::move(target)),
      entries_(static_cast<std::size_t>(target_.components()),
               std::vector<std::vector<int>>(static_cast<std::size_t>(source_.components())))
{
}

void PolyMatrix::set(int j, int i, std::vector<int> poly)
{
    if (j < 1 || j > target_.components() || i < 1 || i > source_.components())
        throw std::out_of_range("PolyMatrix::set: index out of range");
    for (auto& c : poly)
        c = source_.field().reduce(c);
    entries_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = std::move(poly);
}

const std::vector<int>& PolyMatrix::at(int j, int i) const
{
    return entries_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

Diagnostic PolyMatrix::well_defined() const
{
    for (int j = 1; j <= target_.components(); ++j)
        for (int i = 1; i <= source_.components(); ++i) {
            const auto& poly = at(j, i);
            const int need = std::min(std::max(target_.length(j) - source_.length(i), 0), target_.length(j));
            for (int d = 0; d < need && d < static_cast<int>(poly.size()); ++d)
                if (poly[static_cast<std::size_t>(d)] != 0)
                    return Diagnostic::fail("entry (" + std::to_string(j) + "," + std::to_string(i) +
                                            ") is not divisible by t^" + std::to_string(need));
        }
    return Diagnostic::pass();
}

Matrix PolyMatrix::linear() const
{
    const PrimeField& f = source_.field();
    Matrix m(static_cast<std::size_t>(target_.dim()), Vec(static_cast<std::size_t>(source_.dim()), 0));
    for (int coord = 0; coord < source_.dim(); ++coord) {
        const int i = source_.component_of(coord);
        const int u = source_.degree_of(coord);
        for (int j = 1; j <= target_.components(); ++j) {
            const auto& poly = at(j, i);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                const int deg = u + static_cast<int>(d);
                if (poly[d] == 0 || deg >= target_.length(j))
                    continue;
                auto& entry = m[static_cast<std::size_t>(target_.index(j, deg))][static_cast<std::size_t>(coord)];
                entry = f.add(entry, poly[d]);
            }
        }
    }
    return m;
}

Vec PolyMatrix::apply(const Vec& x) const
{
    return mat_vec(linear(), x, source_.field());
}

PolyMatrix PolyMatrix::identity(const NilpotentModule& m)
{
    PolyMatrix id(m, m);
    for (int j = 1; j <= m.components(); ++j)
        id.set(j, j, {1});
    return id;
}

PolyMatrix PolyMatrix::zero(const NilpotentModule& source, const NilpotentModule& target)
{
    return PolyMatrix(source, target);
}

namespace {

NilpotentModule module_sum(const NilpotentModule& a, const NilpotentModule& b)
{
    std::vector<int> lengths = a.lengths();
    lengths.insert(lengths.end(), b.lengths().begin(), b.lengths().end());
    return NilpotentModule(lengths, a.field());
}

// Copy the entries of src into dst with component offsets.
void copy_block(PolyMatrix& dst, const PolyMatrix& src, int row_offset, int col_offset)
{
    for (int j = 1; j <= src.target().components(); ++j)
        for (int i = 1; i <= src.source().components(); ++i)
            if (!src.at(j, i).empty())
                dst.set(j + row_offset, i + col_offset, src.at(j, i));
}

} // namespace

PolyMatrix PolyMatrix::block_sum(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(module_sum(a.source(), b.source()), module_sum(a.target(), b.target()));
    copy_block(out, a, 0, 0);
    copy_block(out, b, a.target().components(), a.source().components());
    return out;
}

Diagnostic morphism_validate(const EmbeddingMorphism& phi)
{
    if (!(phi.map.source() == phi.source.ambient()) || !(phi.map.target() == phi.target.ambient()))
        return Diagnostic::fail("map does not match the ambient modules");
    if (auto d = phi.map.well_defined(); !d)
        return d;
    const Matrix lin = phi.map.linear();
    for (const auto& g : phi.source.generators())
        if (!phi.target.sub().contains(mat_vec(lin, g, phi.source.field())))
            return Diagnostic::fail("image of generator " + phi.source.ambient().format(g) +
                                    " leaves the target submodule");
    return Diagnostic::pass();
}

Diagnostic is_exact(const ShortExactSequence& seq)
{
    if (auto d = morphism_validate({seq.left, seq.middle, seq.inject}); !d)
        return Diagnostic::fail("inject: " + d.message);
    if (auto d = morphism_validate({seq.middle, seq.right, seq.project}); !d)
        return Diagnostic::fail("project: " + d.message);
    const PrimeField& f = seq.middle.field();
    const Matrix in = seq.inject.linear();
    const Matrix pr = seq.project.linear();
    const int dl = seq.left.ambient().dim();
    const int dm = seq.middle.ambient().dim();
    const int dr = seq.right.ambient().dim();
    const int rank_in = rank(in, f);
    const int rank_pr = rank(pr, f);
    if (rank_in != dl)
        return Diagnostic::fail("ambient level: inject is not injective");
    if (rank_pr != dr)
        return Diagnostic::fail("ambient level: project is not surjective");
    if (dm > 0 && dl > 0) {
        for (const auto& row : mat_mul(pr, in, f))
            if (!is_zero(row))
                return Diagnostic::fail("ambient level: project after inject is not zero");
    }
    if (rank_in + rank_pr != dm)
        return Diagnostic::fail("ambient level: image of inject differs from kernel of project");
    const Subspace image_am = image(pr, dr, seq.middle.sub());
    if (image_am.dim() != seq.right.sub().dim())
        return Diagnostic::fail("submodule level: project is not onto the right submodule");
    if (seq.middle.sub().dim() - image_am.dim() != seq.left.sub().dim())
        return Diagnostic::fail("submodule level: kernel of project differs from the image of inject");
    return Diagnostic::pass();
}

ShortExactSequence pad_left(const ShortExactSequence& seq, const Embedding& w)
{
    const Embedding left = direct_sum(seq.left, w);
    const Embedding middle = direct_sum(seq.middle, w);
    PolyMatrix inject = PolyMatrix::block_sum(seq.inject, PolyMatrix::identity(w.ambient()));
    PolyMatrix project(middle.ambient(), seq.right.ambient());
    copy_block(project, seq.project, 0, 0);
    return {left, middle, seq.right, std::move(inject), std::move(project)};
}

ShortExactSequence pad_right(const ShortExactSequence& seq, const Embedding& w)
{
    const Embedding middle = direct_sum(seq.middle, w);
    const Embedding right = direct_sum(seq.right, w);
    PolyMatrix inject(seq.left.ambient(), middle.ambient());
    copy_block(inject, seq.inject, 0, 0);
    PolyMatrix project = PolyMatrix::block_sum(seq.project, PolyMatrix::identity(w.ambient()));
    return {seq.left, middle, right, std::move(inject), std::move(project)};
}

// ---------------------------------------------------------------------------
// The three exact sequences

namespace {

struct SesInput {
    int r;
    int q;
    int mr;
    PoleData pm;
    PoleData pn;
    std::vector<int> m_head; // m_0..m_{r-1}
    std::vector<int> n_ext;  // n_0..n_q, m_r
};

SesInput ses_input(const std::vector<int>& m, const std::vector<int>& n)
{
    check_height_sequence(m);
    if (!n.empty())
        check_height_sequence(n);
    SesInput in;
    in.r = static_cast<int>(m.size()) - 1;
    in.q = static_cast<int>(n.size()) - 1;
    in.mr = m.back();
    if (in.r < 1)
        throw std::invalid_argument("exact sequence needs m of length at least 2");
    if (in.r <= in.q)
        throw std::invalid_argument("exact sequence needs m longer than n");
    in.pm = pole_data(m);
    in.pn = n.empty() ? PoleData{} : pole_data(n);
    in.m_head.assign(m.begin(), m.end() - 1);
    in.n_ext = n;
    in.n_ext.push_back(in.mr);
    return in;
}

bool gap_before_last(const std::vector<int>& m)
{
    return m[m.size() - 1] > m[m.size() - 2] + 1;
}

ShortExactSequence finish(ShortExactSequence seq, const std::string& name)
{
    if (auto d = is_exact(seq); !d)
        throw std::logic_error(name + " sequence is not exact: " + d.message);
    return seq;
}

void require_lengths(const Embedding& e, const std::vector<int>& expected, const std::string& what)
{
    if (e.ambient().lengths() != expected)
        throw std::logic_error(what + ": unexpected ambient component lengths");
}

} // namespace

ShortExactSequence ses_gap(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field)
{
    const SesInput in = ses_input(m, n);
    if (!gap_before_last(m))
        throw std::invalid_argument("ses_gap needs a gap after m_{r-1}");
    if (!n.empty() && !(in.mr > n.back() + 1))
        throw std::invalid_argument("ses_gap needs m_r > n_q + 1");
    const Embedding middle = d_embedding(m, n, field);
    const Embedding left = pole(in.n_ext, field);
    const Embedding right = pole(in.m_head, field);
    const int s = static_cast<int>(in.pm.lengths.size());
    const int t = static_cast<int>(in.pn.lengths.size());

    std::vector<int> left_lengths{in.mr + 1};
    left_lengths.insert(left_lengths.end(), in.pn.lengths.begin(), in.pn.lengths.end());
    require_lengths(left, left_lengths, "ses_gap left term");
    require_lengths(right, std::vector<int>(in.pm.lengths.begin() + 1, in.pm.lengths.end()), "ses_gap right term");

    PolyMatrix inject(left.ambient(), middle.ambient());
    inject.set(1, 1, {-1});
    for (int j = 1; j <= t; ++j)
        inject.set(s + j, 1 + j, {1});
    PolyMatrix project(middle.ambient(), right.ambient());
    for (int j = 2; j <= s; ++j)
        project.set(j - 1, j, {1});
    return finish({left, middle, right, inject, project}, "ses_gap");
}

ShortExactSequence ses_nogap1(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field)
{
    const SesInput in = ses_input(m, n);
    if (gap_before_last(m))
        throw std::invalid_argument("ses_nogap1 needs no gap after m_{r-1}");
    if (!n.empty() && !(in.mr > n.back() + 1))
        throw std::invalid_argument("ses_nogap1 needs m_r > n_q + 1");
    const Embedding d = d_embedding(m, n, field);
    const Embedding middle = direct_sum(d, empty_embedding(Partition{in.mr}, field));
    const Embedding left = pole(in.n_ext, field);
    const Embedding right = pole(in.m_head, field);
    const int s = static_cast<int>(in.pm.lengths.size());
    const int t = static_cast<int>(in.pn.lengths.size());
    const int e = s + t + 1;

    std::vector<int> left_lengths{in.mr + 1};
    left_lengths.insert(left_lengths.end(), in.pn.lengths.begin(), in.pn.lengths.end());
    require_lengths(left, left_lengths, "ses_nogap1 left term");
    std::vector<int> right_lengths{in.mr};
    right_lengths.insert(right_lengths.end(), in.pm.lengths.begin() + 1, in.pm.lengths.end());
    require_lengths(right, right_lengths, "ses_nogap1 right term");

    PolyMatrix inject(left.ambient(), middle.ambient());
    inject.set(1, 1, {-1});
    inject.set(e, 1, {1});
    for (int j = 1; j <= t; ++j)
        inject.set(s + j, 1 + j, {1});
    PolyMatrix project(middle.ambient(), right.ambient());
    project.set(1, 1, {1});
    for (int j = 2; j <= s; ++j)
        project.set(j, j, {1});
    project.set(1, e, {1});
    if (t > 0) {
        const int c = in.mr - n.back() - 1;
        std::vector<int> tc(static_cast<std::size_t>(c) + 1, 0);
        tc.back() = 1;
        project.set(1, s + 1, tc);
        tc.back() = -1;
        inject.set(e, 2, tc);
    }
    return finish({left, middle, right, inject, project}, "ses_nogap1");
}

ShortExactSequence ses_nogap2(const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field)
{
    const SesInput in = ses_input(m, n);
    if (!gap_before_last(m))
        throw std::invalid_argument("ses_nogap2 needs a gap after m_{r-1}");
    if (n.empty() || in.mr != n.back() + 1)
        throw std::invalid_argument("ses_nogap2 needs nonempty n with m_r = n_q + 1");
    if (in.mr - (in.q + 1) != n.back() - in.q)
        throw std::logic_error("ses_nogap2: shift identity fails");
    const Embedding middle = d_embedding(m, n, field);
    const Embedding p = pole(in.n_ext, field);
    const Embedding left = direct_sum(p, empty_embedding(Partition{in.mr}, field));
    const Embedding right = pole(in.m_head, field);
    const int s = static_cast<int>(in.pm.lengths.size());
    const int t = static_cast<int>(in.pn.lengths.size());

    std::vector<int> p_lengths{in.mr + 1};
    p_lengths.insert(p_lengths.end(), in.pn.lengths.begin() + 1, in.pn.lengths.end());
    require_lengths(p, p_lengths, "ses_nogap2 left pole");
    require_lengths(right, std::vector<int>(in.pm.lengths.begin() + 1, in.pm.lengths.end()),
                    "ses_nogap2 right term");

    PolyMatrix inject(left.ambient(), middle.ambient());
    inject.set(1, 1, {-1});
    inject.set(s + 1, 1, {1});
    for (int j = 2; j <= t; ++j)
        inject.set(s + j, j, {1});
    inject.set(s + 1, t + 1, {1});
    PolyMatrix project(middle.ambient(), right.ambient());
    for (int j = 2; j <= s; ++j)
        project.set(j - 1, j, {1});
    return finish({left, middle, right, inject, project}, "ses_nogap2");
}

std::string ses_case_name(SesCase c)
{
    switch (c) {
    case SesCase::gap:
        return "gap";
    case SesCase::nogap1:
        return "nogap1";
    case SesCase::nogap2:
        return "nogap2";
    }
    return "?";
}

std::optional<SesCase> ses_case(const std::vector<int>& m, const std::vector<int>& n)
{
    if (m.size() < 2 || m.size() <= n.size())
        return std::nullopt;
    const bool gap = gap_before_last(m);
    const bool above = n.empty() || m.back() > n.back() + 1;
    if (gap && above)
        return SesCase::gap;
    if (!gap && above)
        return SesCase::nogap1;
    if (gap && !n.empty() && m.back() == n.back() + 1)
        return SesCase::nogap2;
    return std::nullopt;
}

ShortExactSequence ses_for(SesCase c, const std::vector<int>& m, const std::vector<int>& n, const PrimeField& field)
{
    switch (c) {
    case SesCase::gap:
        return ses_gap(m, n, field);
    case SesCase::nogap1:
        return ses_nogap1(m, n, field);
    case SesCase::nogap2:
        return ses_nogap2(m, n, field);
    }
    throw std::logic_error("unknown sequence case");
}

// ---------------------------------------------------------------------------
// Realizing rook-strip tableaux

Embedding realize_rook_tableau(const LRTableau& t, const PrimeField& field)
{
    if (!t.is_rook_strip())
        throw std::invalid_argument("realize_rook_tableau requires a rook strip");
    const std::vector<int> entries = column_entries(t);
    const Partition& outer = t.outer();
    std::vector<int> empty_heights;
    std::map<int, std::vector<int>> rows_by_entry;
    for (int c = 1; c <= outer.length(); ++c) {
        const int e = entries[static_cast<std::size_t>(c - 1)];
        if (e == 0)
            empty_heights.push_back(outer.part(c));
        else
            rows_by_entry[e].push_back(outer.part(c));
    }
    std::vector<std::vector<int>> chains; // rows of the cells, entry order
    for (auto& [e, rows] : rows_by_entry) {
        std::sort(rows.begin(), rows.end());
        if (e == 1) {
            for (int row : rows)
                chains.push_back({row});
            continue;
        }
        std::vector<std::size_t> open;
        for (std::size_t k = 0; k < chains.size(); ++k)
            if (static_cast<int>(chains[k].size()) == e - 1)
                open.push_back(k);
        std::vector<char> used(open.size(), 0);
        for (int row : rows) {
            std::optional<std::size_t> best;
            for (std::size_t k = 0; k < open.size(); ++k)
                if (!used[k] && chains[open[k]].back() < row &&
                    (!best || chains[open[k]].back() > chains[open[*best]].back()))
                    best = k;
            if (!best)
                throw std::logic_error("rook tableau has no decomposition into pole chains");
            used[*best] = 1;
            chains[open[*best]].push_back(row);
        }
    }
    std::vector<Embedding> parts;
    for (const auto& chain : chains) {
        std::vector<int> m;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            m.push_back(chain[k] - 1);
            if (k + 1 < chain.size() && chain[k + 1] == chain[k] + 1)
                empty_heights.push_back(chain[k]);
        }
        parts.push_back(pole(m, field));
    }
    parts.push_back(empty_embedding(Partition::from_multiset(empty_heights), field));
    Embedding x = direct_sum(parts, field);
    if (lr_tableau_of(x) != t)
        throw std::logic_error("pole decomposition does not reproduce the tableau");
    return x;
}

// ---------------------------------------------------------------------------
// Ext witness for an entry increase

namespace {

// Rook-strip tableau on the listed diagram columns (ascending), or nullopt
// when the restriction is not an LR tableau.
std::optional<LRTableau> restrict_columns(const Partition& beta, const std::vector<int>& entries,
                                          const std::vector<int>& columns)
{
    std::vector<int> heights;
    std::vector<int> sub_entries;
    for (int c : columns) {
        heights.push_back(beta.part(c));
        sub_entries.push_back(entries[static_cast<std::size_t>(c - 1)]);
    }
    try {
        return rook_tableau(Partition(heights), sub_entries);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::vector<int> columns_without(int ncols, const std::vector<int>& removed)
{
    std::vector<int> out;
    for (int c = 1; c <= ncols; ++c)
        if (std::find(removed.begin(), removed.end(), c) == removed.end())
            out.push_back(c);
    return out;
}

// All chains c_{top} < ... < c_1 (returned as c_1..c_top) with
// entries[c_t] == t, c_top fixed, drawn from the allowed columns; nearest
// columns are tried first.
void chains_from(int top, int fixed, const std::vector<int>& entries, const std::vector<int>& allowed,
                 const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> chain(static_cast<std::size_t>(top), 0);
    chain[static_cast<std::size_t>(top - 1)] = fixed;
    bool stop = false;
    std::function<void(int)> rec = [&](int t) {
        if (stop)
            return;
        if (t == 0) {
            stop = visit(chain);
            return;
        }
        const int prev = chain[static_cast<std::size_t>(t)];
        for (int c : allowed) {
            if (c <= prev || entries[static_cast<std::size_t>(c - 1)] != t)
                continue;
            chain[static_cast<std::size_t>(t - 1)] = c;
            rec(t - 1);
            if (stop)
                return;
        }
    };
    rec(top - 1);
}

} // namespace

ExtWitness ext_witness_increase(const LRTableau& gamma, const MoveRecord& move, const PrimeField& field)
{
    if (move.kind != MoveKind::lr_increase)
        throw std::invalid_argument("ext_witness_increase expects an lr_increase move");
    const auto delta_opt = apply_move_lr(gamma, move);
    if (!delta_opt)
        throw std::invalid_argument("move " + move.to_string() + " is not legal on the tableau");
    const LRTableau& delta = *delta_opt;
    const Partition& beta = gamma.outer();
    const int ncols = beta.length();
    const int col = move.first;
    const int m_old = move.second;
    const int m_new = move.third;
    const std::vector<int> eg = column_entries(gamma);
    const std::vector<int> ed = column_entries(delta);
    std::vector<int> all_columns = columns_without(ncols, {});

    std::optional<ExtWitness> result;
    std::string last_failure = "no admissible column chains";

    chains_from(m_new, col, ed, all_columns, [&](const std::vector<int>& ichain) {
        const auto rest_i = columns_without(ncols, ichain);
        if (!restrict_columns(beta, ed, rest_i))
            return false;
        const std::vector<int> ihead(ichain.begin(), ichain.end() - 1);
        const auto gamma_prime_cols = columns_without(ncols, ihead);
        if (!restrict_columns(beta, eg, gamma_prime_cols))
            return false;
        bool done = false;
        chains_from(m_old, col, eg, gamma_prime_cols, [&](const std::vector<int>& jchain) {
            std::vector<int> used = ichain;
            used.insert(used.end(), jchain.begin(), jchain.end() - 1);
            const auto rest = columns_without(ncols, used);
            const auto gamma2 = restrict_columns(beta, eg, rest);
            if (!gamma2)
                return false;
            std::vector<int> m_seq;
            std::vector<int> n_seq;
            for (int c : ichain)
                m_seq.push_back(beta.part(c) - 1);
            for (std::size_t k = 0; k + 1 < jchain.size(); ++k)
                n_seq.push_back(beta.part(jchain[k]) - 1);
            const auto which = ses_case(m_seq, n_seq);
            if (!which) {
                last_failure = "excluded case for m=" + seq_string(m_seq) + " n=" + seq_string(n_seq);
                return false;
            }
            try {
                const ShortExactSequence core = ses_for(*which, m_seq, n_seq, field);
                std::vector<int> pad = [&] {
                    std::vector<int> h;
                    for (int c : used)
                        h.push_back(beta.part(c));
                    return h;
                }();
                for (int len : core.middle.ambient().lengths()) {
                    auto it = std::find(pad.begin(), pad.end(), len);
                    if (it == pad.end())
                        throw std::logic_error("middle term does not fit the selected columns");
                    pad.erase(it);
                }
                const Embedding end_pad = empty_embedding(Partition::from_multiset(pad), field);
                const Embedding x = realize_rook_tableau(*gamma2, field);
                ShortExactSequence full = pad_right(pad_left(core, x), end_pad);
                if (auto d = is_exact(full); !d)
                    throw std::logic_error("padded sequence is not exact: " + d.message);
                if (lr_tableau_of(full.middle) != delta)
                    throw std::logic_error("middle term tableau differs from the increased tableau");
                if (lr_tableau_of(direct_sum(full.left, full.right)) != gamma)
                    throw std::logic_error("end terms tableau differs from the original tableau");
                result = ExtWitness{delta, std::move(full), x, end_pad, *which, ichain, jchain, m_seq, n_seq};
                done = true;
                return true;
            } catch (const std::logic_error& err) {
                last_failure = err.what();
                return false;
            }
        });
        return done;
    });
    if (!result)
        throw std::logic_error("no ext witness for " + move.to_string() + ": " + last_failure);
    return std::move(*result);
}

// ---------------------------------------------------------------------------
// Hom dimensions

int hom_dim_embeddings(const Embedding& x, const Embedding& z)
{
    if (!(x.field() == z.field()))
        throw std::invalid_argument("hom between embeddings over different fields");
    HomSystem system(x.ambient(), z.ambient());
    const Matrix ann = annihilator(z.sub());
    for (const auto& a : x.sub().basis())
        system.require_in(a, ann);
    return system.dimension();
}

bool hom_leq_over_family(const Embedding& x, const Embedding& y, const std::vector<Embedding>& family)
{
    return std::all_of(family.begin(), family.end(),
                       [&](const Embedding& z) { return hom_dim_embeddings(x, z) <= hom_dim_embeddings(y, z); });
}

} // namespace tabord
