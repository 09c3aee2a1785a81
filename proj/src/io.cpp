#include "tabord/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace tabord {

Json partition_to_json(const Partition& p)
{
    Json j = Json::array();
    for (int x : p.parts())
        j.push_back(x);
    return j;
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

Json syt_to_json(const StandardTableau& t)
{
    Json j;
    j["shape"] = partition_to_json(t.shape());
    j["rows"] = t.rows();
    return j;
}

StandardTableau syt_from_json(const Json& j)
{
    StandardTableau t(j.at("rows").get<Rows>());
    if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape())
        throw std::invalid_argument("tableau rows do not match the stated shape");
    return t;
}

Json lr_to_json(const LRTableau& t)
{
    Json j;
    j["inner"] = partition_to_json(t.inner());
    Json chain = Json::array();
    for (const auto& p : t.chain())
        chain.push_back(partition_to_json(p));
    j["chain"] = chain;
    return j;
}

LRTableau lr_from_json(const Json& j)
{
    PartitionChain chain;
    for (const auto& p : j.at("chain"))
        chain.push_back(partition_from_json(p));
    return lr_from_chain(partition_from_json(j.at("inner")), chain);
}

Json embedding_to_json(const Embedding& x)
{
    Json j;
    j["field"] = x.field().prime();
    j["ambient"] = x.ambient().lengths();
    Json gens = Json::array();
    for (const auto& g : x.generators())
        gens.push_back(x.ambient().format(g));
    j["generators"] = gens;
    return j;
}

Embedding embedding_from_json(const Json& j)
{
    const PrimeField field(j.at("field").get<int>());
    NilpotentModule ambient(j.at("ambient").get<std::vector<int>>(), field);
    std::vector<Vec> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(ambient.parse(g.get<std::string>()));
    return Embedding(std::move(ambient), std::move(gens));
}

Json poly_matrix_to_json(const PolyMatrix& m)
{
    Json rows = Json::array();
    for (int j = 1; j <= m.target().components(); ++j) {
        Json row = Json::array();
        for (int i = 1; i <= m.source().components(); ++i)
            row.push_back(m.at(j, i));
        rows.push_back(row);
    }
    return rows;
}

Json ses_to_json(const ShortExactSequence& s)
{
    Json j;
    j["left"] = embedding_to_json(s.left);
    j["middle"] = embedding_to_json(s.middle);
    j["right"] = embedding_to_json(s.right);
    j["inject"] = poly_matrix_to_json(s.inject);
    j["project"] = poly_matrix_to_json(s.project);
    return j;
}

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace tabord
