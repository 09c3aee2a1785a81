#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tabord/io.hpp"
#include "tabord/orders.hpp"

namespace tabord {

// Every exhaustive bound used by the checks.
struct RunConfig {
    std::vector<int> field_primes{2, 3, 5};
    int min_weight_r = 1;         // box-eq-dom runs r = min..max
    int max_weight_r = 6;
    int f_map_max_r = 5;          // f preserves and reflects dominance
    int f_map_box_max_r = 4;      // box comparison inside the square shape
    int max_beta_weight = 10;     // phi-orders
    int phi_max_r = 5;
    int ext_max_beta_weight = 9;  // ext-witness
    int max_height = 8;           // pole-tableau, dmn-tableau, ses-exactness
    int hom_max_index = 8;        // hom-formula: i, ell <= this
    int hom_min_fixtures = 200;
    int workers = 1;
    std::string output_format = "text";

    // Throws std::invalid_argument on nonpositive bounds or non-prime fields.
    void validate() const;
};

// Worker count from the environment variable TABLEAU_ORDERS_WORKERS, else
// the hardware concurrency.
int default_workers();

struct SubResult {
    std::string name;
    long long instances = 0;
    bool pass = true;
    std::optional<Json> counterexample;
};

struct CheckReport {
    std::string name;
    long long instances = 0;
    bool pass = true;
    std::optional<Json> counterexample;
    double seconds = 0;
    std::vector<SubResult> parts;
    // Hash of the canonical per-field output, keyed by characteristic.
    std::map<int, std::string> field_digests;
    std::vector<std::string> notes;

    Json to_json() const;
    std::string to_text() const;
};

const std::vector<std::string>& check_names();

// Throws std::invalid_argument for an unknown check name.
CheckReport run_check(const std::string& name, const RunConfig& config);

// ---------------------------------------------------------------------------
// Enumeration helpers shared with tests and the CLI.

// All (β, γ) with β \ γ a nonempty rook strip, |β| <= max_weight and
// |β| - |γ| <= max_r, in a fixed order.
std::vector<std::pair<Partition, Partition>> rook_strip_pairs(int max_weight, int max_r);

// Nonempty strictly increasing sequences with entries in 0..max_entry, in
// lexicographic order.
std::vector<std::vector<int>> increasing_sequences(int max_entry);

// Pairs (m, n) accepted by d_embedding with m_r <= max_height; n may be empty.
std::vector<std::pair<std::vector<int>, std::vector<int>>> dmn_pairs(int max_height);

// Fixture embeddings for the Hom identity: poles, empties, D(m, n) and sums
// of two poles; at least min_count of them.
std::vector<Embedding> hom_fixtures(const PrimeField& field, int min_count);

// Box relation on a list of tableaux via down-sets, parallel over elements.
RelationTable box_table_syt(const std::vector<StandardTableau>& elems, int workers);
RelationTable box_table_lr(const std::vector<LRTableau>& elems, int workers);
RelationTable dom_table_syt(const std::vector<StandardTableau>& elems);
RelationTable dom_table_lr(const std::vector<LRTableau>& elems);

// Graphviz rendering of the cover relations.  Node label: FNV-1a hash of the
// element's JSON encoding plus its readable form.
std::string hasse_dot(const RelationTable& table, const std::vector<std::string>& json_keys,
                      const std::vector<std::string>& labels);

// Run fn(i) for i in [0, n) on a bounded pool; results keep index order.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t n, int workers, F fn)
{
    std::vector<R> out(n);
    const auto pool = static_cast<std::size_t>(std::max(1, workers));
    if (pool == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < std::min(pool, n); ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                out[i] = fn(i);
        });
    for (auto& t : threads)
        t.join();
    return out;
}

} // namespace tabord
