#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tabord/embeddings.hpp"
#include "tabord/harness.hpp"
#include "tabord/nilpotent.hpp"

using namespace tabord;

namespace {

const PrimeField f2(2);

// Coefficient arrays per component, for the Krylov oracle.
std::vector<std::vector<int>> components(const NilpotentModule& m, const Vec& x)
{
    std::vector<std::vector<int>> out;
    for (int j = 1; j <= m.components(); ++j)
        out.emplace_back(x.begin() + m.offset(j), x.begin() + m.offset(j) + m.length(j));
    return out;
}

Subspace random_subspace(int n, int gens, const PrimeField& f, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coeff(0, f.prime() - 1);
    Matrix rows;
    for (int g = 0; g < gens; ++g) {
        Vec v(static_cast<std::size_t>(n));
        for (auto& c : v)
            c = coeff(rng);
        rows.push_back(v);
    }
    return Subspace(n, f, rows);
}

} // namespace

TEST_CASE("prime fields")
{
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    const PrimeField f5(5);
    for (int a = 1; a < 5; ++a)
        CHECK(f5.mul(a, f5.inv(a)) == 1);
    CHECK(f5.reduce(-7) == 3);
}

TEST_CASE("multiplication by t")
{
    const NilpotentModule n5(Partition{5}, f2);
    CHECK(n5.act_t(n5.generator(1)) == n5.monomial(1, 1));
    CHECK(n5.act_t(n5.generator(1), 5) == n5.zero());
    const NilpotentModule n52(Partition{5, 2}, f2);
    const Vec a = n52.parse("t^2*b_1 + t*b_2");
    CHECK(n52.act_t(a) == n52.parse("t^3*b_1"));
    CHECK(n52.format(n52.act_t(a)) == "t^3*b_1");
    CHECK(n52.format(a) == "t^2*b_1 + t*b_2");
    CHECK(n52.format(n52.zero()) == "0");
    CHECK(n52.parse("0") == n52.zero());
}

TEST_CASE("element text round trip")
{
    const PrimeField f5(5);
    const NilpotentModule m(Partition{4, 3, 1}, f5);
    for (const char* text : {"b_1", "2*t*b_2 + b_3", "4*t^3*b_1", "t^2*b_1 + 3*t^2*b_2"})
        CHECK(m.format(m.parse(text)) == text);
    CHECK(m.parse("b_1 - b_3") == m.parse("b_1 + 4*b_3"));
    CHECK_THROWS_AS(m.parse("b_4"), std::out_of_range);
    CHECK_THROWS_AS(m.parse("t^^b_1"), std::invalid_argument);
}

TEST_CASE("Lambda spans")
{
    for (int n = 1; n <= 6; ++n) {
        const NilpotentModule m(Partition{n}, f2);
        CHECK(span_lambda(m, {m.generator(1)}).dim() == n);
    }
    const NilpotentModule n52(Partition{5, 2}, f2);
    const Vec a = n52.parse("t^2*b_1 + t*b_2");
    const int krylov = oracle::krylov_length(components(n52, a));
    CHECK(krylov == 3);
    CHECK(span_lambda(n52, {a}).dim() == krylov);
    CHECK(span_lambda(n52, {}).dim() == 0);
}

TEST_CASE("Lambda span dimension agrees with the Krylov oracle for cyclic spans")
{
    std::mt19937 rng(7);
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        const NilpotentModule m(Partition{4, 3, 3, 1}, f);
        std::uniform_int_distribution<int> coeff(0, p - 1);
        for (int trial = 0; trial < 60; ++trial) {
            Vec x(static_cast<std::size_t>(m.dim()));
            for (auto& c : x)
                c = coeff(rng);
            const Subspace s = span_lambda(m, {x});
            CHECK(is_t_invariant(m, s));
            CHECK(s.dim() == oracle::krylov_length(components(m, x)));
            CHECK(module_type(m, s) == (s.dim() == 0 ? Partition{} : Partition{s.dim()}));
        }
    }
}

TEST_CASE("sum and intersection obey the modular law")
{
    std::mt19937 rng(11);
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 80; ++trial) {
            const int n = 3 + trial % 6;
            const Subspace u = random_subspace(n, trial % 4, f, rng);
            const Subspace v = random_subspace(n, (trial / 3) % 5, f, rng);
            CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
            CHECK(subspace_sum(u, u) == u);
            CHECK(subspace_intersect(u, u) == u);
            CHECK(subspace_sum(u, v).contains(u));
            CHECK(u.contains(subspace_intersect(u, v)));
        }
    }
    CHECK_THROWS_AS(subspace_sum(Subspace(3, f2), Subspace(4, f2)), std::invalid_argument);
}

TEST_CASE("powers of t on the ambient")
{
    const NilpotentModule m(Partition{4, 2, 1}, f2);
    CHECK(t_power_ambient(m, 0).dim() == 7);
    CHECK(t_power_ambient(m, 1).dim() == 4);
    CHECK(t_power_ambient(m, 4).dim() == 0);
    CHECK(t_power_ambient(m, 9).dim() == 0);
}

TEST_CASE("module and quotient types")
{
    const NilpotentModule m(Partition{4, 2, 1}, f2);
    const Subspace full = t_power_ambient(m, 0);
    CHECK(module_type(m, full) == Partition{4, 2, 1});
    CHECK(module_type(m, Subspace(m.dim(), f2)) == Partition{});
    CHECK(quotient_type(m, full, 0) == Partition{});
    CHECK(quotient_type(m, full, 4) == Partition{4, 2, 1});
    CHECK(quotient_type(m, t_power_ambient(m, 1), 0) == Partition{1, 1, 1});
    Subspace not_invariant(m.dim(), f2, {m.generator(1)});
    CHECK_THROWS_AS(module_type(m, not_invariant), std::invalid_argument);
    CHECK(quotient_chain(m, full).back() == Partition{4, 2, 1});
}

TEST_CASE("quotient chain of the pole with heights (1,3,4)")
{
    const NilpotentModule n52(Partition{5, 2}, f2);
    const Subspace a = span_lambda(n52, {n52.parse("t^2*b_1 + t*b_2")});
    CHECK(module_type(n52, a) == Partition{3});
    const auto chain = quotient_chain(n52, a);
    REQUIRE(chain.size() == 4);
    CHECK(chain[0] == Partition{3, 1});
    CHECK(chain[3] == Partition{5, 2});
    // Entry e is added in diagram row m_{e-1} + 1, i.e. rows 2, 4, 5.
    const int rows[] = {2, 4, 5};
    for (std::size_t e = 1; e < chain.size(); ++e) {
        const auto before = transpose(chain[e - 1]).vec(), after = transpose(chain[e]).vec();
        int changed = 0;
        for (std::size_t i = 0; i < after.size(); ++i)
            if (oracle::at(after, i) != oracle::at(before, i)) {
                CHECK(after[i] - oracle::at(before, i) == 1);
                changed = static_cast<int>(i) + 1;
            }
        CHECK(changed == rows[e - 1]);
    }
}

TEST_CASE("quotient chains increase and stop at the ambient type")
{
    std::mt19937 rng(3);
    for (int p : {2, 3}) {
        const PrimeField f(p);
        const NilpotentModule m(Partition{5, 3, 2, 2}, f);
        std::uniform_int_distribution<int> coeff(0, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Vec> gens;
            for (int g = 0; g < 1 + trial % 3; ++g) {
                Vec x(static_cast<std::size_t>(m.dim()));
                for (auto& c : x)
                    c = coeff(rng);
                gens.push_back(x);
            }
            const Subspace a = span_lambda(m, gens);
            const auto chain = quotient_chain(m, a);
            CHECK(chain.back() == m.shape());
            CHECK(chain.front().weight() + module_type(m, a).weight() == m.dim());
            for (std::size_t e = 1; e < chain.size(); ++e) {
                CHECK(contains(chain[e], chain[e - 1]));
                CHECK(chain[e] == quotient_type(m, a, static_cast<int>(e)));
            }
        }
    }
}

TEST_CASE("heights")
{
    const NilpotentModule n52(Partition{5, 2}, f2);
    const Vec a = n52.parse("t^2*b_1 + t*b_2");
    CHECK(height_sequence(n52, a) == std::vector<int>{1, 3, 4});
    CHECK_FALSE(height(n52, n52.zero()).has_value());
    CHECK(height_to_string(height(n52, n52.zero())) == "inf");
    CHECK(height(n52, n52.generator(1)) == 0);
    CHECK(height(n52, n52.monomial(1, 3)) == 3);
}

TEST_CASE("Hom dimensions against the min formula")
{
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 6; ++b)
                CHECK(hom_dim_lambda(NilpotentModule(Partition{a}, f), nullptr, 0, NilpotentModule(Partition{b}, f)) ==
                      std::min(a, b));
        for (int n = 0; n <= 6; ++n)
            for (const auto& beta : partitions_of(n))
                for (int ell = 1; ell <= 5; ++ell) {
                    const NilpotentModule b(beta, f);
                    const int got = hom_dim_lambda(b, nullptr, 0, NilpotentModule(Partition{ell}, f));
                    CHECK(got == oracle::hom_sum_min(beta.vec(), ell));
                    const auto bt = transpose(beta).vec();
                    int prefix = 0;
                    for (int w = 0; w < ell; ++w)
                        prefix += oracle::at(bt, static_cast<std::size_t>(w));
                    CHECK(got == prefix);
                }
    }
}

TEST_CASE("Hom from a quotient follows the prefix sums of its type")
{
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (const auto& m : {std::vector<int>{1, 3, 4}, std::vector<int>{0, 2, 3, 6}, std::vector<int>{2, 5}}) {
            const Embedding x = pole(m, f);
            for (int e = 0; e <= 4; ++e) {
                const auto qt = transpose(quotient_type(x.ambient(), x.sub(), e)).vec();
                int prefix = 0;
                for (int ell = 1; ell <= 7; ++ell) {
                    prefix += oracle::at(qt, static_cast<std::size_t>(ell - 1));
                    CHECK(hom_dim_lambda(x.ambient(), &x.sub(), e, NilpotentModule(Partition{ell}, f)) == prefix);
                }
            }
        }
    }
}

TEST_CASE("types do not depend on the characteristic")
{
    for (const auto& m : increasing_sequences(6)) {
        const auto base = quotient_chain(pole(m, f2).ambient(), pole(m, f2).sub());
        for (int p : {3, 5}) {
            const Embedding x = pole(m, PrimeField(p));
            CHECK(quotient_chain(x.ambient(), x.sub()) == base);
            CHECK(height_sequence(x.ambient(), x.generators().front()) == m);
        }
    }
}
