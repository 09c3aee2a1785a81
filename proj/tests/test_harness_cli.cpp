#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tabord/harness.hpp"

using namespace tabord;

#ifndef TABORD_CLI_PATH
#error "TABORD_CLI_PATH must name the CLI binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(TABORD_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

int count_prefix(const std::string& dot, const std::string& needle)
{
    int c = 0;
    for (std::size_t pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1))
        ++c;
    return c;
}

RunConfig small_config(int workers)
{
    RunConfig cfg;
    cfg.max_weight_r = 4;
    cfg.f_map_max_r = 3;
    cfg.f_map_box_max_r = 3;
    cfg.max_beta_weight = 7;
    cfg.phi_max_r = 4;
    cfg.ext_max_beta_weight = 6;
    cfg.max_height = 5;
    cfg.hom_max_index = 4;
    cfg.hom_min_fixtures = 200;
    cfg.workers = workers;
    return cfg;
}

Json without_timing(Json j)
{
    j.erase("seconds");
    return j;
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("tabord_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST_CASE("rook strip pairs")
{
    const auto pairs = rook_strip_pairs(6, 6);
    CHECK_FALSE(pairs.empty());
    std::set<std::pair<Partition, Partition>> seen;
    for (const auto& [b, g] : pairs) {
        CHECK(b.weight() <= 6);
        CHECK(contains(b, g));
        CHECK(b.weight() > g.weight());
        CHECK(is_rook_strip(SkewShape(b, g)));
        CHECK(seen.insert({b, g}).second);
    }
    // Brute force over all containments of weight at most 6.
    std::size_t expect = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& b : partitions_of(n))
            for (int k = 0; k < n; ++k)
                for (const auto& g : partitions_of(k))
                    if (contains(b, g) && is_rook_strip(SkewShape(b, g)))
                        ++expect;
    CHECK(pairs.size() == expect);
    for (const auto& [b, g] : rook_strip_pairs(8, 2))
        CHECK(b.weight() - g.weight() <= 2);
}

TEST_CASE("increasing sequences and D(m,n) pairs")
{
    const auto seqs = increasing_sequences(4);
    CHECK(seqs.size() == 31); // nonempty subsets of {0..4}
    for (std::size_t i = 1; i < seqs.size(); ++i)
        CHECK(seqs[i - 1] < seqs[i]);
    for (const auto& [m, n] : dmn_pairs(5)) {
        CHECK(m.back() <= 5);
        CHECK(m.size() > n.size());
        if (!n.empty())
            CHECK(m.back() >= n.back() + 1);
    }
}

TEST_CASE("hom fixtures")
{
    const auto fx = hom_fixtures(PrimeField(2), 200);
    CHECK(fx.size() >= 200);
    bool has_empty = false, has_sum = false;
    for (const auto& x : fx) {
        has_empty = has_empty || x.sub().dim() == 0;
        has_sum = has_sum || x.generators().size() >= 2;
    }
    CHECK(has_empty);
    CHECK(has_sum);
}

TEST_CASE("parallel map keeps index order")
{
    const auto out = parallel_map<int>(1000, 6, [](std::size_t i) { return static_cast<int>(i * i % 97); });
    for (std::size_t i = 0; i < out.size(); ++i)
        CHECK(out[i] == static_cast<int>(i * i % 97));
}

TEST_CASE("configuration validation")
{
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.field_primes = {2, 4};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.max_height = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_THROWS_AS(run_check("no-such-check", RunConfig{}), std::invalid_argument);
}

TEST_CASE("every check passes on small bounds and is independent of the worker count")
{
    for (const auto& name : check_names()) {
        CAPTURE(name);
        const CheckReport one = run_check(name, small_config(1));
        const CheckReport four = run_check(name, small_config(4));
        CHECK(one.pass);
        CHECK(one.instances > 0);
        CHECK(without_timing(one.to_json()) == without_timing(four.to_json()));
        CHECK(one.to_text().find(name) != std::string::npos);
    }
}

TEST_CASE("field digests agree across characteristics")
{
    const CheckReport r = run_check("dmn-tableau", small_config(2));
    REQUIRE(r.field_digests.size() == 3);
    CHECK(r.field_digests.at(2) == r.field_digests.at(3));
    CHECK(r.field_digests.at(3) == r.field_digests.at(5));
}

TEST_CASE("relation tables and DOT export")
{
    const auto t3 = enumerate_syt_weight(3);
    const auto table = dom_table_syt(t3);
    CHECK(table == box_table_syt(t3, 3));
    std::vector<std::string> keys, labels;
    for (const auto& t : t3) {
        keys.push_back(syt_to_json(t).dump());
        labels.push_back(t.to_string());
    }
    const std::string dot = hasse_dot(table, keys, labels);
    CHECK(dot.rfind("digraph hasse {", 0) == 0);
    CHECK(count_prefix(dot, "[label=") == 4);
    // T_3 is a chain in dominance.
    CHECK(count_prefix(dot, " -> ") == 3);
}

TEST_CASE("CLI enumerate")
{
    auto r = run_cli("enumerate syt-weight --r 3");
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls.size() == 4);
    for (const auto& l : ls)
        CHECK(Json::parse(l).contains("rows"));
    CHECK(lines(run_cli("enumerate syt-weight --r 5").out).size() == static_cast<std::size_t>(oracle::involutions(5)));
    r = run_cli("enumerate syt-shape --beta [3,2,2] --format text");
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == static_cast<std::size_t>(oracle::hook_count({3, 2, 2})));
    r = run_cli("enumerate lr-rook --beta [5,4,3,2,1] --gamma [4,3,2,1] --format text");
    CHECK(r.code == 0);
    const auto lr = lines(r.out);
    CHECK(lr.size() == static_cast<std::size_t>(oracle::involutions(5)));
    CHECK(std::find(lr.begin(), lr.end(), "[[4,3,2,1],[4,3,3,1,1],[5,3,3,2,1],[5,4,3,2,1]]") != lr.end());
    CHECK(std::find(lr.begin(), lr.end(), "[[4,3,2,1],[4,3,3,2,1],[5,4,3,2,1]]") != lr.end());
}

TEST_CASE("CLI hasse")
{
    auto r = run_cli("hasse syt --r 3 --order dom");
    CHECK(r.code == 0);
    CHECK(count_prefix(r.out, "[label=") == 4);
    r = run_cli("hasse syt --r 1 --order box");
    CHECK(count_prefix(r.out, "[label=") == 1);
    CHECK(count_prefix(r.out, " -> ") == 0);
    for (int n = 1; n <= 6; ++n) {
        const auto box = run_cli("hasse syt --r " + std::to_string(n) + " --order box --workers 2");
        const auto dom = run_cli("hasse syt --r " + std::to_string(n) + " --order dom");
        CHECK(box.code == 0);
        CHECK(box.out == dom.out);
    }
    const auto lbox = run_cli("hasse lr-rook --beta [5,4,3,2,1] --gamma [4,3,2,1] --order box");
    const auto ldom = run_cli("hasse lr-rook --beta [5,4,3,2,1] --gamma [4,3,2,1] --order dom");
    CHECK(lbox.out == ldom.out);
    CHECK(count_prefix(lbox.out, "[label=") == 26);
}

TEST_CASE("CLI check and exit codes")
{
    auto r = run_cli("check box-eq-dom --r 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    r = run_cli("check pole-tableau --max-height 5 --format json --workers 3");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["check"] == "pole-tableau");
    CHECK(j["pass"] == true);
    CHECK(run_cli("check no-such-check").code == 2);
    CHECK(run_cli("check box-eq-dom --field 2,4").code == 2);
    CHECK(run_cli("check box-eq-dom --max-height -3 --r 0").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("enumerate lr-rook --beta [2] --gamma []").code == 2);
    CHECK(run_cli("enumerate syt-shape --beta [1,2]").code == 2);
    CHECK(run_cli("hom /nonexistent/a.json /nonexistent/b.json").code == 2);
}

TEST_CASE("CLI --out writes the file")
{
    const auto path = scratch("enum.txt");
    CHECK(run_cli("enumerate syt-weight --r 4 --format text --out " + path.string()).code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(lines(buf.str()).size() == 10);
    std::filesystem::remove(path);
}

TEST_CASE("CLI hom")
{
    const PrimeField f(3);
    const auto x = scratch("x.json"), z = scratch("z.json"), w = scratch("w.json");
    std::ofstream(x) << embedding_to_json(pole({1, 3, 4}, f)).dump();
    std::ofstream(z) << embedding_to_json(picket(2, 3, f)).dump();
    std::ofstream(w) << embedding_to_json(pole({1, 3, 4}, PrimeField(2))).dump();
    auto r = run_cli("hom " + x.string() + " " + z.string());
    CHECK(r.code == 0);
    CHECK(std::stoi(r.out) == hom_dim_embeddings(pole({1, 3, 4}, f), picket(2, 3, f)));
    CHECK(run_cli("hom " + x.string() + " " + z.string() + " --field 3").code == 0);
    CHECK(run_cli("hom " + x.string() + " " + z.string() + " --field 5").code == 2);
    CHECK(run_cli("hom " + x.string() + " " + w.string()).code == 2);
    for (const auto& p : {x, z, w})
        std::filesystem::remove(p);
}
