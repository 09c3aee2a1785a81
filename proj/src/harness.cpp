#include "tabord/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tabord/embeddings.hpp"

namespace tabord {

void RunConfig::validate() const
{
    if (field_primes.empty())
        throw std::invalid_argument("at least one field characteristic is required");
    for (int p : field_primes)
        if (!is_prime(p))
            throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    const std::pair<const char*, int> bounds[] = {
        {"min_weight_r", min_weight_r},       {"max_weight_r", max_weight_r},
        {"f_map_max_r", f_map_max_r},         {"f_map_box_max_r", f_map_box_max_r},
        {"max_beta_weight", max_beta_weight}, {"phi_max_r", phi_max_r},
        {"ext_max_beta_weight", ext_max_beta_weight}, {"max_height", max_height},
        {"hom_max_index", hom_max_index},     {"workers", workers},
    };
    for (const auto& [name, value] : bounds)
        if (value < 1)
            throw std::invalid_argument(std::string(name) + " must be positive");
    if (min_weight_r > max_weight_r)
        throw std::invalid_argument("min_weight_r exceeds max_weight_r");
    if (output_format != "text" && output_format != "json" && output_format != "dot")
        throw std::invalid_argument("output format must be text, json or dot");
}

int default_workers()
{
    if (const char* env = std::getenv("TABLEAU_ORDERS_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Json CheckReport::to_json() const
{
    Json j;
    j["check"] = name;
    j["pass"] = pass;
    j["instances"] = instances;
    j["seconds"] = seconds;
    Json parts_json = Json::array();
    for (const auto& p : parts) {
        Json pj;
        pj["name"] = p.name;
        pj["pass"] = p.pass;
        pj["instances"] = p.instances;
        if (p.counterexample)
            pj["counterexample"] = *p.counterexample;
        parts_json.push_back(pj);
    }
    j["parts"] = parts_json;
    if (!field_digests.empty()) {
        Json d;
        for (const auto& [p, digest] : field_digests)
            d[std::to_string(p)] = digest;
        j["field_digests"] = d;
    }
    if (!notes.empty())
        j["notes"] = notes;
    if (counterexample)
        j["counterexample"] = *counterexample;
    return j;
}

std::string CheckReport::to_text() const
{
    std::ostringstream out;
    out << "check " << name << ": " << (pass ? "PASS" : "FAIL") << " (" << instances << " instances, "
        << seconds << " s)\n";
    for (const auto& p : parts)
        out << "  " << p.name << ": " << (p.pass ? "pass" : "FAIL") << " (" << p.instances << ")\n";
    for (const auto& [p, digest] : field_digests)
        out << "  digest p=" << p << ": " << digest << "\n";
    for (const auto& n : notes)
        out << "  note: " << n << "\n";
    if (counterexample)
        out << "  counterexample: " << counterexample->dump() << "\n";
    return out.str();
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{"box-eq-dom",   "f-map",         "phi-orders",
                                                "pole-tableau", "dmn-tableau",   "ses-exactness",
                                                "ext-witness",  "hom-formula",   "field-independence"};
    return names;
}

// ---------------------------------------------------------------------------
// Enumeration helpers

std::vector<std::pair<Partition, Partition>> rook_strip_pairs(int max_weight, int max_r)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (int n = 1; n <= max_weight; ++n)
        for (const auto& beta : partitions_of(n)) {
            // The bottom cell of the rightmost column of each distinct height
            // may be removed.
            std::vector<int> rightmost;
            for (int c = 1; c <= beta.length(); ++c)
                if (beta.part(c + 1) != beta.part(c))
                    rightmost.push_back(c);
            const auto k = rightmost.size();
            for (unsigned mask = 1; mask < (1u << k); ++mask) {
                if (std::popcount(mask) > max_r)
                    continue;
                std::vector<int> parts = beta.vec();
                for (std::size_t b = 0; b < k; ++b)
                    if (mask & (1u << b))
                        parts[static_cast<std::size_t>(rightmost[b] - 1)] -= 1;
                out.emplace_back(beta, Partition::from_multiset(parts));
            }
        }
    return out;
}

std::vector<std::vector<int>> increasing_sequences(int max_entry)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        for (int v = from; v <= max_entry; ++v) {
            cur.push_back(v);
            out.push_back(cur);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> dmn_pairs(int max_height)
{
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& m : increasing_sequences(max_height)) {
        out.emplace_back(m, std::vector<int>{});
        if (m.back() < 1)
            continue;
        for (const auto& n : increasing_sequences(m.back() - 1))
            if (n.size() < m.size())
                out.emplace_back(m, n);
    }
    return out;
}

std::vector<Embedding> hom_fixtures(const PrimeField& field, int min_count)
{
    std::vector<Embedding> out;
    for (const auto& m : increasing_sequences(5))
        out.push_back(pole(m, field));
    for (int n = 1; n <= 5; ++n)
        for (const auto& beta : partitions_of(n))
            out.push_back(empty_embedding(beta, field));
    for (const auto& [m, n] : dmn_pairs(4))
        if (!n.empty())
            out.push_back(d_embedding(m, n, field));
    const auto small = increasing_sequences(2);
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = a; b < small.size(); ++b)
            out.push_back(direct_sum(pole(small[a], field), pole(small[b], field)));
    for (const auto& m : increasing_sequences(3))
        out.push_back(direct_sum(pole(m, field), empty_embedding(Partition{2, 1}, field)));
    if (static_cast<int>(out.size()) < min_count)
        throw std::logic_error("hom fixture family has only " + std::to_string(out.size()) + " members");
    return out;
}

namespace {

template <typename T>
std::map<T, int> index_of(const std::vector<T>& elems)
{
    std::map<T, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i)
        idx.emplace(elems[i], static_cast<int>(i));
    return idx;
}

template <typename T, typename DownSet>
RelationTable box_table(const std::vector<T>& elems, int workers, DownSet down)
{
    const auto idx = index_of(elems);
    auto sets = parallel_map<std::vector<int>>(elems.size(), workers, [&](std::size_t j) {
        std::vector<int> below;
        for (const auto& t : down(elems[j])) {
            auto it = idx.find(t);
            if (it == idx.end())
                throw std::logic_error("box move left the element set");
            below.push_back(it->second);
        }
        return below;
    });
    return relation_from_down_sets(static_cast<int>(elems.size()), sets);
}

} // namespace

RelationTable box_table_syt(const std::vector<StandardTableau>& elems, int workers)
{
    return box_table(elems, workers, [](const StandardTableau& t) { return box_down_set_syt(t); });
}

RelationTable box_table_lr(const std::vector<LRTableau>& elems, int workers)
{
    return box_table(elems, workers, [](const LRTableau& t) { return box_down_set_lr(t); });
}

RelationTable dom_table_syt(const std::vector<StandardTableau>& elems)
{
    return relation_table<StandardTableau>(elems, dom_leq_syt);
}

RelationTable dom_table_lr(const std::vector<LRTableau>& elems)
{
    return relation_table<LRTableau>(elems, dom_leq_lr);
}

std::string hasse_dot(const RelationTable& table, const std::vector<std::string>& json_keys,
                      const std::vector<std::string>& labels)
{
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < table.size; ++i)
        out << "  n" << i << " [label=\"" << hex64(fnv1a(json_keys[static_cast<std::size_t>(i)])) << " "
            << labels[static_cast<std::size_t>(i)] << "\"];\n";
    for (const auto& [lo, hi] : hasse(table))
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct PartOutcome {
    long long instances = 0;
    std::optional<Json> failure;

    void fail(Json why)
    {
        if (!failure)
            failure = std::move(why);
    }
};

// Outcome of one work item.
struct ItemOutcome {
    std::vector<PartOutcome> parts;
    std::map<int, std::string> digest;
};

using Clock = std::chrono::steady_clock;

SubResult named_part(std::string name)
{
    SubResult s;
    s.name = std::move(name);
    return s;
}

// Runs items in parallel and merges outcomes in index order, so the
// reported counterexample is the first failing item whatever the pool size.
CheckReport run_items(const std::string& name, const std::vector<std::string>& part_names, std::size_t count,
                      int workers, const std::function<void(std::size_t, ItemOutcome&)>& item)
{
    const auto start = Clock::now();
    auto outcomes = parallel_map<ItemOutcome>(count, workers, [&](std::size_t i) {
        ItemOutcome out;
        out.parts.resize(part_names.size());
        try {
            item(i, out);
        } catch (const std::exception& err) {
            Json j;
            j["item"] = i;
            j["exception"] = err.what();
            out.parts[0].fail(j);
        }
        return out;
    });
    CheckReport report;
    report.name = name;
    std::map<int, std::string> joined;
    for (std::size_t p = 0; p < part_names.size(); ++p) {
        SubResult sub;
        sub.name = part_names[p];
        for (const auto& o : outcomes) {
            sub.instances += o.parts[p].instances;
            if (o.parts[p].failure && sub.pass) {
                sub.pass = false;
                sub.counterexample = o.parts[p].failure;
            }
        }
        if (!sub.pass && report.pass) {
            report.pass = false;
            report.counterexample = sub.counterexample;
        }
        report.parts.push_back(std::move(sub));
    }
    for (const auto& o : outcomes)
        for (const auto& [p, text] : o.digest)
            joined[p] += text;
    for (const auto& [p, text] : joined)
        report.field_digests[p] = hex64(fnv1a(text));
    report.instances = report.parts.empty() ? 0 : report.parts.front().instances;
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

Json seq_json(const std::vector<int>& m)
{
    return Json(m);
}

// ---- box-eq-dom ----------------------------------------------------------

CheckReport check_box_eq_dom(const RunConfig& cfg)
{
    const auto start = Clock::now();
    CheckReport report;
    report.name = "box-eq-dom";
    SubResult equal = named_part("relation-equality");
    SubResult poset = named_part("poset-axioms");
    SubResult strict = named_part("moves-decrease-dominance");
    for (int r = cfg.min_weight_r; r <= cfg.max_weight_r; ++r) {
        const auto elems = enumerate_syt_weight(r);
        const auto box = box_table_syt(elems, cfg.workers);
        const auto dom = dom_table_syt(elems);
        const auto n = static_cast<long long>(elems.size());
        equal.instances += n * n;
        const auto cmp = relations_equal(box, dom);
        if (!cmp.equal && equal.pass) {
            equal.pass = false;
            Json j;
            j["r"] = r;
            j["pi"] = syt_to_json(elems[static_cast<std::size_t>(cmp.first)]);
            j["sigma"] = syt_to_json(elems[static_cast<std::size_t>(cmp.second)]);
            j["box"] = box(cmp.first, cmp.second);
            j["dom"] = dom(cmp.first, cmp.second);
            equal.counterexample = j;
        }
        poset.instances += 2;
        for (const auto* t : {&box, &dom})
            if (auto d = check_poset(*t); !d && poset.pass) {
                poset.pass = false;
                poset.counterexample = Json{{"r", r}, {"reason", d.message}};
            }
        for (const auto& sigma : elems)
            for (const auto& [pi, move] : box_moves_syt(sigma)) {
                ++strict.instances;
                if ((!dom_leq_syt(pi, sigma) || pi == sigma) && strict.pass) {
                    strict.pass = false;
                    strict.counterexample =
                        Json{{"sigma", syt_to_json(sigma)}, {"move", move.to_string()}, {"pi", syt_to_json(pi)}};
                }
            }
        report.notes.push_back("r=" + std::to_string(r) + ": " + std::to_string(n) + " elements, " +
                               std::to_string(n * n) + " ordered pairs");
    }
    report.parts = {equal, poset, strict};
    for (const auto& p : report.parts)
        if (!p.pass && report.pass) {
            report.pass = false;
            report.counterexample = p.counterexample;
        }
    report.instances = equal.instances;
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

// ---- f-map -----------------------------------------------------------------

CheckReport check_f_map(const RunConfig& cfg)
{
    const auto start = Clock::now();
    CheckReport report;
    report.name = "f-map";
    SubResult valid = named_part("image-is-square-tableau");
    SubResult dom = named_part("dominance-preserved-and-reflected");
    SubResult box = named_part("square-box-implies-box");
    long long converse_hits = 0;
    long long converse_total = 0;
    for (int r = 1; r <= cfg.f_map_max_r; ++r) {
        const auto elems = enumerate_syt_weight(r);
        std::vector<std::optional<StandardTableau>> images(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            ++valid.instances;
            try {
                StandardTableau f = f_embed(elems[i]);
                if (f.shape() != square(r))
                    throw std::logic_error("image shape " + f.shape().to_string());
                images[i] = std::move(f);
            } catch (const std::exception& err) {
                if (valid.pass) {
                    valid.pass = false;
                    valid.counterexample = Json{{"pi", syt_to_json(elems[i])}, {"error", err.what()}};
                }
            }
        }
        if (!valid.pass)
            break;
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b) {
                ++dom.instances;
                const bool lhs = dom_leq_syt(elems[a], elems[b]);
                const bool rhs = dom_leq_syt(*images[a], *images[b]);
                if (lhs != rhs && dom.pass) {
                    dom.pass = false;
                    dom.counterexample = Json{{"pi", syt_to_json(elems[a])}, {"sigma", syt_to_json(elems[b])},
                                              {"dom", lhs}, {"dom_of_images", rhs}};
                }
            }
        if (r > cfg.f_map_box_max_r)
            continue;
        const auto box_r = box_table_syt(elems, cfg.workers);
        const auto square_down = parallel_map<std::vector<StandardTableau>>(
            elems.size(), cfg.workers, [&](std::size_t b) { return box_down_set_syt(*images[b], true); });
        for (std::size_t b = 0; b < elems.size(); ++b)
            for (std::size_t a = 0; a < elems.size(); ++a) {
                ++box.instances;
                const auto& down = square_down[b];
                const bool image_rel = std::binary_search(down.begin(), down.end(), *images[a]);
                if (box_r(static_cast<int>(a), static_cast<int>(b))) {
                    ++converse_total;
                    converse_hits += image_rel ? 1 : 0;
                }
                if (image_rel && !box_r(static_cast<int>(a), static_cast<int>(b)) && box.pass) {
                    box.pass = false;
                    box.counterexample = Json{{"pi", syt_to_json(elems[a])}, {"sigma", syt_to_json(elems[b])}};
                }
            }
    }
    report.notes.push_back("box pairs whose images are box related in the square shape: " +
                           std::to_string(converse_hits) + " of " + std::to_string(converse_total));
    report.parts = {valid, dom, box};
    for (const auto& p : report.parts)
        if (!p.pass && report.pass) {
            report.pass = false;
            report.counterexample = p.counterexample;
        }
    report.instances = dom.instances;
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

// ---- phi-orders -------------------------------------------------------------

struct SytOrders {
    std::vector<StandardTableau> elems;
    std::map<StandardTableau, int> index;
    RelationTable box;
    RelationTable dom;
};

CheckReport check_phi_orders(const RunConfig& cfg)
{
    std::vector<SytOrders> orders(static_cast<std::size_t>(cfg.phi_max_r) + 1);
    for (int r = 1; r <= cfg.phi_max_r; ++r) {
        auto& o = orders[static_cast<std::size_t>(r)];
        o.elems = enumerate_syt_weight(r);
        o.index = index_of(o.elems);
        o.box = box_table_syt(o.elems, cfg.workers);
        o.dom = dom_table_syt(o.elems);
    }
    const auto pairs = rook_strip_pairs(cfg.max_beta_weight, cfg.phi_max_r);
    auto report = run_items(
        "phi-orders",
        {"bijection", "dominance", "box", "content", "moves-decrease-dominance", "reversed-content-violations"}, pairs.size(),
        cfg.workers, [&](std::size_t k, ItemOutcome& out) {
            const auto& [beta, gamma] = pairs[k];
            const int r = beta.weight() - gamma.weight();
            const auto& o = orders[static_cast<std::size_t>(r)];
            const auto elems = enumerate_lr_rook(beta, gamma);
            auto ctx = [&](Json j) {
                j["beta"] = partition_to_json(beta);
                j["gamma"] = partition_to_json(gamma);
                return j;
            };
            std::vector<int> img;
            std::vector<char> hit(o.elems.size(), 0);
            auto& bij = out.parts[0];
            for (const auto& t : elems) {
                ++bij.instances;
                const StandardTableau s = phi(t);
                const auto it = o.index.find(s);
                if (it == o.index.end() || hit[static_cast<std::size_t>(it->second)] ||
                    phi_inverse(s, beta, gamma) != t) {
                    bij.fail(ctx({{"tableau", lr_to_json(t)}, {"image", s.to_string()}}));
                    return;
                }
                hit[static_cast<std::size_t>(it->second)] = 1;
                img.push_back(it->second);
            }
            if (elems.size() != o.elems.size()) {
                bij.fail(ctx({{"reason", "image is not all of T_r"},
                              {"count", elems.size()},
                              {"expected", o.elems.size()}}));
                return;
            }
            const auto dom = dom_table_lr(elems);
            const auto box = box_table_lr(elems, 1);
            for (std::size_t a = 0; a < elems.size(); ++a)
                for (std::size_t b = 0; b < elems.size(); ++b) {
                    const int ia = img[a];
                    const int ib = img[b];
                    const bool d = dom(static_cast<int>(a), static_cast<int>(b));
                    ++out.parts[1].instances;
                    if (d != o.dom(ia, ib))
                        out.parts[1].fail(ctx({{"delta", lr_to_json(elems[a])}, {"gamma_tableau", lr_to_json(elems[b])},
                                               {"dom", d}}));
                    ++out.parts[2].instances;
                    if (box(static_cast<int>(a), static_cast<int>(b)) != o.box(ia, ib))
                        out.parts[2].fail(ctx({{"delta", lr_to_json(elems[a])}, {"gamma_tableau", lr_to_json(elems[b])},
                                               {"box", box(static_cast<int>(a), static_cast<int>(b))}}));
                    ++out.parts[3].instances;
                    if (d && !nat_leq(elems[a].content(), elems[b].content()))
                        out.parts[3].fail(ctx({{"delta", lr_to_json(elems[a])}, {"gamma_tableau", lr_to_json(elems[b])}}));
                    if (d && !nat_leq(elems[b].content(), elems[a].content()))
                        ++out.parts[5].instances;
                }
            for (const auto& t : elems)
                for (const auto& [s, move] : box_moves_lr(t)) {
                    ++out.parts[4].instances;
                    if (!dom_leq_lr(s, t) || s == t)
                        out.parts[4].fail(ctx({{"tableau", lr_to_json(t)}, {"move", move.to_string()}}));
                }
        });
    // The last part only counts dominance pairs whose contents are not
    // related the other way round; it is informational.
    SubResult reversed = report.parts.back();
    report.parts.pop_back();
    report.notes.push_back(std::to_string(pairs.size()) + " rook-strip shapes");
    report.notes.push_back(std::to_string(reversed.instances) +
                           " dominance pairs with content(gamma) not below content(delta)");
    return report;
}

// ---- pole-tableau -----------------------------------------------------------

std::string pole_violation(const Embedding& p, const std::vector<int>& m)
{
    const LRTableau t = lr_tableau_of(p);
    const Rows rows = t.filling();
    const Partition inner_rows = transpose(t.inner());
    std::vector<int> row_of(m.size() + 1, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = static_cast<std::size_t>(inner_rows.part(static_cast<int>(i) + 1)); c < rows[i].size();
             ++c) {
            const int e = rows[i][c];
            if (e < 1 || e > static_cast<int>(m.size()) || row_of[static_cast<std::size_t>(e)] != 0)
                return "entry " + std::to_string(e) + " is out of range or repeated";
            row_of[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
        }
    for (std::size_t e = 1; e <= m.size(); ++e)
        if (row_of[e] != m[e - 1] + 1)
            return "entry " + std::to_string(e) + " sits in row " + std::to_string(row_of[e]);
    if (height_sequence(p.ambient(), p.generators().front()) != m)
        return "generator height sequence differs";
    return {};
}

CheckReport check_pole_tableau(const RunConfig& cfg)
{
    const auto seqs = increasing_sequences(cfg.max_height);
    return run_items("pole-tableau", {"rows-and-heights"}, seqs.size(), cfg.workers,
                     [&](std::size_t k, ItemOutcome& out) {
                         const auto& m = seqs[k];
                         for (int p : cfg.field_primes) {
                             const PrimeField field(p);
                             const Embedding x = pole(m, field);
                             ++out.parts[0].instances;
                             if (auto why = pole_violation(x, m); !why.empty())
                                 out.parts[0].fail({{"m", seq_json(m)}, {"field", p}, {"reason", why}});
                             out.digest[p] += chain_to_string(lr_tableau_of(x).chain()) + "\n";
                         }
                     });
}

// ---- dmn-tableau ------------------------------------------------------------

CheckReport check_dmn_tableau(const RunConfig& cfg)
{
    const auto pairs = dmn_pairs(cfg.max_height);
    auto report = run_items("dmn-tableau", {"same-tableau"}, pairs.size(), cfg.workers,
                            [&](std::size_t k, ItemOutcome& out) {
                                const auto& [m, n] = pairs[k];
                                for (int p : cfg.field_primes) {
                                    const PrimeField field(p);
                                    const LRTableau d = lr_tableau_of(d_embedding(m, n, field));
                                    const Embedding sum =
                                        n.empty() ? pole(m, field) : direct_sum(pole(m, field), pole(n, field));
                                    const LRTableau s = lr_tableau_of(sum);
                                    ++out.parts[0].instances;
                                    if (d != s)
                                        out.parts[0].fail({{"m", seq_json(m)},
                                                           {"n", seq_json(n)},
                                                           {"field", p},
                                                           {"d_chain", chain_to_string(d.chain())},
                                                           {"sum_chain", chain_to_string(s.chain())}});
                                    out.digest[p] += chain_to_string(d.chain()) + "\n";
                                }
                            });
    long long boundary = 0;
    for (const auto& [m, n] : pairs)
        if (!n.empty() && m.back() == n.back() + 1)
            ++boundary;
    report.notes.push_back(std::to_string(boundary) + " pairs on the boundary m_r = n_q + 1");
    return report;
}

// ---- ses-exactness ----------------------------------------------------------

std::string ses_summary(const ShortExactSequence& s)
{
    return chain_to_string(lr_tableau_of(s.left).chain()) + chain_to_string(lr_tableau_of(s.middle).chain()) +
           chain_to_string(lr_tableau_of(s.right).chain());
}

// The two worked sequences: 0 → P(4) → D((1,2,4),()) → P(1,2) → 0 and
// 0 → P(3,5,6) ⊕ E_(6) → D((1,2,4,6),(3,5)) → P(1,2,4) → 0.
std::string worked_examples_violation(const PrimeField& field)
{
    const auto first = ses_gap({1, 2, 4}, {}, field);
    if (!(first.left == pole({4}, field)) || !(first.middle == pole({1, 2, 4}, field)) ||
        !(first.right == pole({1, 2}, field)))
        return "first sequence terms differ";
    const auto second = ses_nogap2({1, 2, 4, 6}, {3, 5}, field);
    if (!(second.left == direct_sum(pole({3, 5, 6}, field), empty_embedding(Partition{6}, field))) ||
        !(second.middle == d_embedding({1, 2, 4, 6}, {3, 5}, field)) || !(second.right == pole({1, 2, 4}, field)))
        return "second sequence terms differ";
    return {};
}

CheckReport check_ses_exactness(const RunConfig& cfg)
{
    std::vector<std::tuple<std::vector<int>, std::vector<int>, SesCase>> items;
    for (const auto& [m, n] : dmn_pairs(cfg.max_height))
        if (auto c = ses_case(m, n))
            items.emplace_back(m, n, *c);
    auto report = run_items(
        "ses-exactness", {"exact", "end-tableaux", "worked-examples", "equal-tableaux"}, items.size() + 1, cfg.workers,
        [&](std::size_t k, ItemOutcome& out) {
            if (k == items.size()) {
                for (int p : cfg.field_primes) {
                    ++out.parts[2].instances;
                    if (auto why = worked_examples_violation(PrimeField(p)); !why.empty())
                        out.parts[2].fail({{"field", p}, {"reason", why}});
                }
                return;
            }
            const auto& [m, n, c] = items[k];
            for (int p : cfg.field_primes) {
                const PrimeField field(p);
                ++out.parts[0].instances;
                Json ctx{{"m", seq_json(m)}, {"n", seq_json(n)}, {"case", ses_case_name(c)}, {"field", p}};
                std::optional<ShortExactSequence> s;
                try {
                    s = ses_for(c, m, n, field);
                } catch (const std::logic_error& err) {
                    ctx["error"] = err.what();
                    out.parts[0].fail(ctx);
                    continue;
                }
                ++out.parts[1].instances;
                const LRTableau mid = lr_tableau_of(s->middle);
                const LRTableau ends = lr_tableau_of(direct_sum(s->left, s->right));
                if (mid == ends)
                    ++out.parts[3].instances;
                if (mid.outer() != ends.outer() || mid.inner() != ends.inner() || !dom_leq_lr(mid, ends)) {
                    ctx["middle"] = chain_to_string(mid.chain());
                    ctx["ends"] = chain_to_string(ends.chain());
                    out.parts[1].fail(ctx);
                }
                out.digest[p] += ses_case_name(c) + ses_summary(*s) + "\n";
            }
        });
    const SubResult equal = report.parts.back();
    report.parts.pop_back();
    report.notes.push_back(std::to_string(equal.instances) + " sequences whose middle and end tableaux coincide");
    std::map<std::string, int> per_case;
    for (const auto& item : items)
        ++per_case[ses_case_name(std::get<2>(item))];
    for (const auto& [name, count] : per_case)
        report.notes.push_back(name + ": " + std::to_string(count) + " (m, n) pairs");
    return report;
}

// ---- ext-witness --------------------------------------------------------------

std::vector<Embedding> picket_family(int max_index, const PrimeField& field)
{
    std::vector<Embedding> family;
    for (int ell = 1; ell <= max_index; ++ell)
        for (int i = 0; i <= ell; ++i)
            family.push_back(picket(i, ell, field));
    return family;
}

CheckReport check_ext_witness(const RunConfig& cfg)
{
    const auto pairs = rook_strip_pairs(cfg.ext_max_beta_weight, cfg.ext_max_beta_weight);
    std::map<int, std::vector<Embedding>> families;
    for (int p : cfg.field_primes)
        families.emplace(p, picket_family(cfg.ext_max_beta_weight, PrimeField(p)));
    auto report = run_items(
        "ext-witness", {"witness", "ext-hom-dom"}, pairs.size(), cfg.workers, [&](std::size_t k, ItemOutcome& out) {
            const auto& [beta, gamma] = pairs[k];
            for (const auto& t : enumerate_lr_rook(beta, gamma))
                for (const auto& [delta, move] : box_moves_lr(t)) {
                    if (move.kind != MoveKind::lr_increase)
                        continue;
                    for (int p : cfg.field_primes) {
                        const PrimeField field(p);
                        Json ctx{{"tableau", lr_to_json(t)}, {"move", move.to_string()}, {"field", p}};
                        ++out.parts[0].instances;
                        std::optional<ExtWitness> w;
                        try {
                            w = ext_witness_increase(t, move, field);
                        } catch (const std::logic_error& err) {
                            ctx["error"] = err.what();
                            out.parts[0].fail(ctx);
                            continue;
                        }
                        ++out.parts[1].instances;
                        const Embedding ends = direct_sum(w->seq.left, w->seq.right);
                        std::string dims;
                        const int top = beta.part(1);
                        for (const auto& z : families.at(p)) {
                            if (z.ambient().length(1) > top)
                                break;
                            const int hm = hom_dim_embeddings(w->seq.middle, z);
                            const int he = hom_dim_embeddings(ends, z);
                            dims += std::to_string(hm) + "/" + std::to_string(he) + ",";
                            if (hm > he) {
                                ctx["picket"] = embedding_to_json(z);
                                out.parts[1].fail(ctx);
                            }
                        }
                        if (!dom_leq_lr(lr_tableau_of(w->seq.middle), lr_tableau_of(ends))) {
                            ctx["reason"] = "middle tableau does not lie below the end tableau";
                            out.parts[1].fail(ctx);
                        }
                        out.digest[p] += ses_case_name(w->lemma) + Json(w->m_seq).dump() + Json(w->n_seq).dump() +
                                         chain_to_string(delta.chain()) + dims + "\n";
                    }
                }
        });
    report.notes.push_back(std::to_string(pairs.size()) + " rook-strip shapes");
    return report;
}

// ---- hom-formula ----------------------------------------------------------------

CheckReport check_hom_formula(const RunConfig& cfg)
{
    const std::size_t count = hom_fixtures(PrimeField(cfg.field_primes.front()), cfg.hom_min_fixtures).size();
    std::map<int, std::vector<Embedding>> fixtures;
    std::map<int, std::vector<std::vector<Embedding>>> pickets;
    for (int p : cfg.field_primes) {
        const PrimeField field(p);
        fixtures.emplace(p, hom_fixtures(field, cfg.hom_min_fixtures));
        std::vector<std::vector<Embedding>> grid;
        for (int i = 0; i <= cfg.hom_max_index; ++i) {
            grid.emplace_back();
            for (int ell = 1; ell <= cfg.hom_max_index; ++ell)
                grid.back().push_back(picket(i, ell, field));
        }
        pickets.emplace(p, std::move(grid));
    }
    auto report = run_items(
        "hom-formula", {"identity"}, count, cfg.workers, [&](std::size_t k, ItemOutcome& out) {
            for (int p : cfg.field_primes) {
                const Embedding& x = fixtures.at(p)[k];
                const PrimeField field(p);
                for (int i = 0; i <= cfg.hom_max_index; ++i) {
                    const Partition q = quotient_type(x.ambient(), x.sub(), i);
                    const Partition qt = transpose(q);
                    int prefix = 0;
                    for (int ell = 1; ell <= cfg.hom_max_index; ++ell) {
                        prefix += qt.part(ell);
                        const NilpotentModule target(Partition{ell}, field);
                        const int lam = hom_dim_lambda(x.ambient(), &x.sub(), i, target);
                        const int emb = hom_dim_embeddings(
                            x, pickets.at(p)[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell - 1)]);
                        ++out.parts[0].instances;
                        if (prefix != lam || lam != emb)
                            out.parts[0].fail({{"embedding", embedding_to_json(x)},
                                               {"i", i},
                                               {"ell", ell},
                                               {"formula", prefix},
                                               {"hom_lambda", lam},
                                               {"hom_embedding", emb}});
                        out.digest[p] += std::to_string(lam) + ",";
                    }
                }
                out.digest[p] += "\n";
            }
        });
    report.notes.push_back(std::to_string(count) + " fixture embeddings");
    return report;
}

// ---- field-independence -------------------------------------------------------

CheckReport check_field_independence(const RunConfig& cfg)
{
    const auto start = Clock::now();
    CheckReport report;
    report.name = "field-independence";
    if (cfg.field_primes.size() < 2)
        report.notes.push_back("only one characteristic configured");
    for (const char* name : {"pole-tableau", "dmn-tableau", "ses-exactness", "ext-witness", "hom-formula"}) {
        const CheckReport sub = run_check(name, cfg);
        SubResult part = named_part(name);
        part.instances = static_cast<long long>(sub.field_digests.size());
        std::set<std::string> distinct;
        for (const auto& [p, digest] : sub.field_digests)
            distinct.insert(digest);
        if (distinct.size() != 1 || sub.field_digests.size() != cfg.field_primes.size()) {
            part.pass = false;
            Json d;
            for (const auto& [p, digest] : sub.field_digests)
                d[std::to_string(p)] = digest;
            part.counterexample = Json{{"check", name}, {"digests", d}};
        }
        report.parts.push_back(std::move(part));
    }
    for (const auto& p : report.parts) {
        report.instances += p.instances;
        if (!p.pass && report.pass) {
            report.pass = false;
            report.counterexample = p.counterexample;
        }
    }
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

} // namespace

CheckReport run_check(const std::string& name, const RunConfig& config)
{
    config.validate();
    if (name == "box-eq-dom")
        return check_box_eq_dom(config);
    if (name == "f-map")
        return check_f_map(config);
    if (name == "phi-orders")
        return check_phi_orders(config);
    if (name == "pole-tableau")
        return check_pole_tableau(config);
    if (name == "dmn-tableau")
        return check_dmn_tableau(config);
    if (name == "ses-exactness")
        return check_ses_exactness(config);
    if (name == "ext-witness")
        return check_ext_witness(config);
    if (name == "hom-formula")
        return check_hom_formula(config);
    if (name == "field-independence")
        return check_field_independence(config);
    throw std::invalid_argument("unknown check '" + name + "'");
}

} // namespace tabord
