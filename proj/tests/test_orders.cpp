#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tabord/harness.hpp"
#include "tabord/orders.hpp"

using namespace tabord;

namespace {

const StandardTableau pi5({{1, 3}, {2, 5}, {4}});
const StandardTableau sigma5({{1, 2, 3}, {4, 5}});
const Partition stair5{5, 4, 3, 2, 1};
const Partition stair6{6, 5, 4, 3, 2, 1};
const Partition stair9{9, 8, 7, 6, 5, 4, 3, 2, 1};

bool has_result(const std::vector<std::pair<StandardTableau, MoveRecord>>& moves, const StandardTableau& t)
{
    return std::any_of(moves.begin(), moves.end(), [&](const auto& m) { return m.first == t; });
}

bool has_result(const std::vector<std::pair<LRTableau, MoveRecord>>& moves, const LRTableau& t)
{
    return std::any_of(moves.begin(), moves.end(), [&](const auto& m) { return m.first == t; });
}

} // namespace

TEST_CASE("dominance on the five-cell example")
{
    CHECK(dom_leq_syt(pi5, sigma5));
    CHECK(dom_leq_syt(sigma5, sigma5));
    CHECK_FALSE(dom_leq_syt(sigma5, pi5));
    CHECK_THROWS_AS(dom_leq_syt(pi5, StandardTableau({{1}})), std::invalid_argument);
}

TEST_CASE("single box moves")
{
    const auto moves = box_moves_syt(sigma5);
    CHECK(has_result(moves, StandardTableau({{1, 2, 4}, {3, 5}})));
    const auto next = box_moves_syt(StandardTableau({{1, 2, 4}, {3, 5}}));
    CHECK(has_result(next, StandardTableau({{1, 2}, {3, 5}, {4}})));
    CHECK(box_moves_syt(StandardTableau({{1}})).empty());
}

TEST_CASE("the three-move path from sigma to pi")
{
    const auto a = apply_move_syt(sigma5, {MoveKind::swap, 3, 4, 0});
    REQUIRE(a);
    CHECK(a->to_string() == "{124,35}");
    const auto b = apply_move_syt(*a, {MoveKind::wind, 1, 3, 4});
    REQUIRE(b);
    CHECK(b->to_string() == "{12,35,4}");
    const auto c = apply_move_syt(*b, {MoveKind::swap, 2, 3, 0});
    REQUIRE(c);
    CHECK(*c == pi5);
    CHECK(c->to_string() == "{13,25,4}");

    std::vector<MoveRecord> witness;
    CHECK(box_leq_syt(pi5, sigma5, &witness));
    CHECK(witness.size() == 3);
    StandardTableau cur = sigma5;
    for (const auto& m : witness) {
        auto next = apply_move_syt(cur, m);
        REQUIRE(next);
        cur = *next;
    }
    CHECK(cur == pi5);
    CHECK(box_leq_syt(sigma5, sigma5));
    CHECK_FALSE(box_leq_syt(sigma5, pi5));
    CHECK_FALSE(apply_move_syt(sigma5, {MoveKind::swap, 4, 3, 0}));
}

TEST_CASE("moves agree with an independent move generator for r <= 5")
{
    for (int r = 1; r <= 5; ++r)
        for (const auto& sigma : enumerate_syt_weight(r)) {
            std::set<oracle::RowsT> lib;
            for (const auto& [t, m] : box_moves_syt(sigma)) {
                lib.insert(t.rows());
                CHECK(apply_move_syt(sigma, m) == t);
            }
            const auto ref = oracle::moves(sigma.rows());
            CHECK(lib == std::set<oracle::RowsT>(ref.begin(), ref.end()));
        }
}

TEST_CASE("every move strictly lowers dominance")
{
    for (int r = 1; r <= 6; ++r)
        for (const auto& sigma : enumerate_syt_weight(r))
            for (const auto& [t, m] : box_moves_syt(sigma)) {
                CHECK(oracle::dominance(t.rows(), sigma.rows()));
                CHECK(t != sigma);
            }
}

TEST_CASE("dominance matches the chain oracle")
{
    for (int r = 1; r <= 5; ++r) {
        const auto all = enumerate_syt_weight(r);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(dom_leq_syt(a, b) == oracle::dominance(a.rows(), b.rows()));
    }
}

TEST_CASE("box equals dominance, with an independent closure for r <= 5")
{
    for (int r = 1; r <= 5; ++r) {
        const auto all = enumerate_syt_weight(r);
        for (const auto& sigma : all) {
            const auto down = oracle::down_set(sigma.rows());
            for (const auto& pi : all) {
                const bool in_closure = down.count(pi.rows()) > 0;
                CHECK(in_closure == oracle::dominance(pi.rows(), sigma.rows()));
                CHECK(in_closure == box_leq_syt(pi, sigma));
            }
        }
    }
    for (int r = 1; r <= 6; ++r) {
        const auto all = enumerate_syt_weight(r);
        const auto box = box_table_syt(all, 2);
        const auto dom = dom_table_syt(all);
        CHECK(relations_equal(box, dom).equal);
        CHECK(check_poset(box));
    }
}

TEST_CASE("f for r = 2 by hand")
{
    const StandardTableau column({{1}, {2}});
    const StandardTableau row({{1, 2}});
    CHECK(syt_to_chain(f_embed(column)) == PartitionChain{{1}, {2}, {2, 1}, {2, 2}});
    CHECK(syt_to_chain(f_embed(row)) == PartitionChain{{1}, {1, 1}, {2, 1}, {2, 2}});
    CHECK(f_embed(StandardTableau({{1}})) == StandardTableau({{1}}));
}

TEST_CASE("f agrees with the row-length oracle and lands in the square shape")
{
    for (int r = 1; r <= 5; ++r)
        for (const auto& pi : enumerate_syt_weight(r)) {
            const StandardTableau f = f_embed(pi);
            CHECK(f.shape() == square(r));
            CHECK(f.rows() == oracle::f_rows(pi.rows()));
        }
    CHECK(enumerate_syt_weight(4).size() == 10);
}

TEST_CASE("f preserves and reflects dominance for r <= 4")
{
    for (int r = 1; r <= 4; ++r) {
        const auto all = enumerate_syt_weight(r);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(dom_leq_syt(a, b) == dom_leq_syt(f_embed(a), f_embed(b)));
    }
}

TEST_CASE("LR dominance and box order on the staircase example")
{
    const LRTableau delta = rook_tableau(stair5, {2, 3, 1, 2, 1});
    const LRTableau gamma = rook_tableau(stair5, {2, 2, 1, 1, 1});
    const LRTableau middle = rook_tableau(stair5, {2, 1, 1, 2, 1});
    CHECK(dom_leq_lr(delta, gamma));
    CHECK(dom_leq_lr(gamma, gamma));
    CHECK_FALSE(dom_leq_lr(gamma, delta));
    CHECK(has_result(box_moves_lr(gamma), middle));
    CHECK(has_result(box_moves_lr(middle), delta));
    CHECK(box_leq_lr(delta, gamma));
    CHECK_FALSE(box_leq_lr(gamma, delta));
    CHECK_THROWS_AS(dom_leq_lr(delta, rook_tableau(stair6, {1, 1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("single moves of the seven-column example")
{
    const Partition stair7{7, 6, 5, 4, 3, 2, 1};
    const LRTableau gamma = rook_tableau(stair7, {3, 2, 1, 1, 2, 1, 1});
    const LRTableau gamma_hat = rook_tableau(stair7, {3, 2, 3, 1, 2, 1, 1});
    const LRTableau delta = rook_tableau(stair7, {4, 2, 3, 1, 2, 1, 1});
    CHECK(has_result(box_moves_lr(gamma), gamma_hat));
    CHECK(has_result(box_moves_lr(gamma_hat), delta));
    CHECK(box_leq_lr(delta, gamma));
}

TEST_CASE("a lone cell admits no move")
{
    CHECK(box_moves_lr(rook_tableau(Partition{1}, {1})).empty());
    CHECK(box_moves_lr(rook_tableau(Partition{4, 1}, {0, 1})).empty());
}

TEST_CASE("content under dominance")
{
    // Dominance bounds the prefix counts of entries, so the lower tableau has
    // the smaller content.
    for (const auto& [beta, gamma] : rook_strip_pairs(8, 8)) {
        const auto all = enumerate_lr_rook(beta, gamma);
        for (const auto& d : all)
            for (const auto& g : all)
                if (dom_leq_lr(d, g))
                    CHECK(nat_leq(d.content(), g.content()));
    }
    // The reversed implication fails on the smallest instance.
    const LRTableau d = lr_from_chain(Partition{1}, {{1}, {1, 1}, {2, 1}});
    const LRTableau g = lr_from_chain(Partition{1}, {{1}, {2, 1}});
    CHECK(dom_leq_lr(d, g));
    CHECK(d.content() == Partition{2});
    CHECK(g.content() == Partition{1, 1});
    CHECK_FALSE(nat_leq(g.content(), d.content()));
}

TEST_CASE("phi on the six-row and nine-box examples")
{
    const LRTableau delta6 = rook_tableau(stair6, {1, 3, 2, 2, 1, 1});
    const LRTableau gamma6 = rook_tableau(stair6, {2, 3, 2, 1, 1, 1});
    CHECK(phi(delta6).to_string() == "{126,34,5}");
    CHECK(phi(gamma6).to_string() == "{123,46,5}");
    CHECK(phi_inverse(StandardTableau({{1, 2, 6}, {3, 4}, {5}}), stair6, delta6.inner()) == delta6);
    CHECK(box_leq_lr(delta6, gamma6));
    CHECK(box_leq_syt(phi(delta6), phi(gamma6)));

    const LRTableau gamma9 = rook_tableau(stair9, {1, 1, 1, 3, 2, 1, 1, 2, 1});
    const LRTableau delta9 = rook_tableau(stair9, {1, 1, 1, 3, 2, 1, 3, 2, 1});
    CHECK(phi(gamma9).to_string() == "{134789,25,6}");
    CHECK(phi(delta9).to_string() == "{14789,25,36}");
    CHECK(has_result(box_moves_lr(gamma9), delta9));
    CHECK(box_leq_syt(phi(delta9), phi(gamma9)));

    CHECK(phi_inverse(StandardTableau({{1}}), Partition{1}, Partition{}) == rook_tableau(Partition{1}, {1}));
}

TEST_CASE("phi rows list the reading positions of each entry")
{
    for (const auto& [beta, gamma] : rook_strip_pairs(8, 8))
        for (const auto& t : enumerate_lr_rook(beta, gamma)) {
            const auto word = reading_word(t);
            oracle::RowsT rows;
            for (std::size_t j = 0; j < word.size(); ++j) {
                const auto row = static_cast<std::size_t>(word[j] - 1);
                if (rows.size() <= row)
                    rows.resize(row + 1);
                rows[row].push_back(static_cast<int>(j) + 1);
            }
            const StandardTableau s = phi(t);
            CHECK(s.rows() == rows);
            CHECK(s.shape() == t.content());
            CHECK(phi_inverse(s, beta, gamma) == t);
        }
}

TEST_CASE("phi preserves and reflects both orders")
{
    for (const auto& [beta, gamma] : rook_strip_pairs(8, 4)) {
        const auto all = enumerate_lr_rook(beta, gamma);
        for (const auto& d : all)
            for (const auto& g : all) {
                CHECK(dom_leq_lr(d, g) == oracle::dominance(phi(d).rows(), phi(g).rows()));
                CHECK(box_leq_lr(d, g) == box_leq_syt(phi(d), phi(g)));
            }
    }
}

TEST_CASE("phi_inverse rejects tableaux of the wrong size")
{
    CHECK_THROWS(phi_inverse(StandardTableau({{1, 2}}), Partition{1}, Partition{}));
}

TEST_CASE("LR moves strictly lower dominance")
{
    for (const auto& [beta, gamma] : rook_strip_pairs(9, 9))
        for (const auto& t : enumerate_lr_rook(beta, gamma))
            for (const auto& [s, m] : box_moves_lr(t)) {
                CHECK(dom_leq_lr(s, t));
                CHECK(s != t);
                CHECK(apply_move_lr(t, m) == s);
            }
}

TEST_CASE("relation tables and Hasse diagrams")
{
    const auto single = relation_table<int>({7}, [](int a, int b) { return a <= b; });
    CHECK(single.size == 1);
    CHECK(single(0, 0));
    CHECK(hasse(single).empty());

    const auto chain3 = relation_table<int>({1, 2, 3}, [](int a, int b) { return a <= b; });
    CHECK(hasse(chain3).size() == 2);
    CHECK(check_poset(chain3));

    const auto all3 = enumerate_syt_weight(3);
    CHECK(relations_equal(box_table_syt(all3, 1), dom_table_syt(all3)).equal);

    auto broken = chain3;
    broken.leq[2][0] = 1;
    CHECK_FALSE(check_poset(broken));
    const auto cmp = relations_equal(chain3, broken);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.first == 2);
    CHECK(cmp.second == 0);

    const auto down = relation_from_down_sets(3, {{0}, {0, 1}, {0, 1, 2}});
    CHECK(down == chain3);
}
