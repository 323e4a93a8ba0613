#include "oracle.hpp"

#include <ctc/constructions.hpp>
#include <ctc/error.hpp>
#include <ctc/generators.hpp>
#include <ctc/latin.hpp>

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ctc;

namespace {

bool oracle_valid(const HalfEdgeGraph & g, const CircularColouring & c)
{
    const auto t = oracle::total(g);
    if (static_cast<std::size_t>(t.size()) != c.size())
        return false;
    std::vector<int> colours;
    for (const auto & l : t.labels) {
        if (!c.contains(l))
            return false;
        colours.push_back(c.colour(l));
    }
    return oracle::valid(t, colours, c.p(), c.q());
}

LatinSquare random_latin(int k, std::mt19937 & rng)
{
    std::vector<int> rows(static_cast<std::size_t>(k)), cols(rows), syms(rows);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::iota(syms.begin(), syms.end(), 1);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::shuffle(syms.begin(), syms.end(), rng);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                syms[static_cast<std::size_t>((rows[static_cast<std::size_t>(i)] + cols[static_cast<std::size_t>(j)]) % k)];
    return LatinSquare(out);
}

} // namespace

TEST_CASE("back-circulant Latin square")
{
    const auto l = back_circulant(4);
    CHECK(l.order() == 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            CHECK(l.at(i, j) == (i + j - 2) % 4 + 1);
    CHECK(back_circulant(1).at(1, 1) == 1);
    CHECK_THROWS_AS(back_circulant(0), Error);
}

TEST_CASE("constrained Latin square")
{
    for (int k = 2; k <= 7; ++k)
        for (int second = 2; second <= k; ++second) {
            const auto l = constrained_latin(k, second);
            CHECK(l.at(1, 1) == 1);
            CHECK(l.at(2, 1) == second);
        }
    CHECK_THROWS_AS(constrained_latin(4, 1), Error);
    CHECK_THROWS_AS(constrained_latin(4, 5), Error);
    CHECK_THROWS_AS(constrained_latin(1), Error);
}

TEST_CASE("Latin square validation")
{
    CHECK_THROWS_AS(LatinSquare({{1, 2}, {1, 2}}), Error);
    CHECK_THROWS_AS(LatinSquare({{1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(LatinSquare({{1, 2}, {2}}), Error);
    CHECK_THROWS_AS(LatinSquare({{1, 3}, {3, 1}}), Error);
    CHECK_THROWS_AS(LatinSquare({}), Error);
    CHECK_NOTHROW(LatinSquare({{2, 1}, {1, 2}}));
}

TEST_CASE("colour_all0 is valid for any Latin square and gives all half-edges colour 0")
{
    std::mt19937 rng(3);
    for (int k = 2; k <= 7; ++k)
        for (int trial = 0; trial < 10; ++trial) {
            const auto c = colour_all0(k, trial == 0 ? back_circulant(k) : random_latin(k, rng));
            CHECK(c.p() == k + 1);
            CHECK(c.q() == 1);
            CHECK(oracle_valid(gen_Hk(k), c));
            for (int i = 1; i <= k; ++i)
                CHECK(c.colour("e" + std::to_string(i)) == 0);
        }
    CHECK_THROWS_AS(colour_all0(3, back_circulant(4)), Error);
    CHECK_THROWS_AS(colour_all0(1, back_circulant(1)), Error);
}

TEST_CASE("colour_tweak")
{
    const auto c = colour_tweak(3, 2);
    CHECK(c.p() == 9);
    CHECK(c.q() == 2);
    CHECK(oracle_valid(gen_Hk(3), c));
    CHECK(boundary_profile(c, {1, 2}) == BoundaryProfile{0, 1, 3, 7});
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 6; ++n) {
            const auto t = colour_tweak(k, n);
            CHECK(t.p() == n * (k + 1) + 1);
            CHECK(oracle_valid(gen_Hk(k), t));
            CHECK(boundary_profile(t, {1, 2}) == BoundaryProfile{0, 1, n + 1, n * k + 1});
        }
    CHECK_THROWS_AS(colour_tweak(3, 0), Error);
}

TEST_CASE("colour_refine gives the (21,4)-colouring of H_4")
{
    const auto c = colour_refine(4, 4);
    CHECK(c.p() == 21);
    CHECK(c.q() == 4);
    CHECK(oracle_valid(gen_Hk(4), c));
    CHECK(boundary_profile(c, {4, 1}) == BoundaryProfile{0, 2, 17, 6});
    for (int k = 2; k <= 6; ++k)
        for (int q = 1; q <= 6; ++q) {
            const auto r = colour_refine(k, q);
            CHECK(oracle_valid(gen_Hk(k), r));
            CHECK(boundary_profile(r, {k, 1}) == BoundaryProfile{0, 2, q * k + 1, q + 2});
        }
    CHECK_THROWS_AS(colour_refine(1, 2), Error);
}

TEST_CASE("permuting x-vertices is an automorphism")
{
    const auto c = colour_all0(4, back_circulant(4));
    const std::vector<int> perm{3, 1, 4, 2};
    const auto p = permute_x(c, 4, perm);
    CHECK(oracle_valid(gen_Hk(4), p));
    CHECK(p.colour("x3") == c.colour("x1"));
    CHECK(p.colour("x3y2") == c.colour("x1y2"));
    const std::vector<int> not_perm{1, 1, 2, 3};
    CHECK_THROWS_AS(permute_x(c, 4, not_perm), Error);
    const std::vector<int> short_perm{1, 2};
    CHECK_THROWS_AS(permute_x(c, 4, short_perm), Error);
}

TEST_CASE("chain assemblies certify their bounds")
{
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 4; ++n) {
            const auto a = assemble_thm_lim(k, n);
            CHECK(a.colouring.ratio() == Fraction(n * (k + 1) + 1, n));
            CHECK(oracle_valid(gen_Gkn(k, n), a.colouring));
        }
    for (int k = 4; k <= 6; ++k)
        for (int n = 1; n <= 3; ++n) {
            const auto a = assemble_thm_improve(k, n);
            CHECK(a.colouring.ratio() == Fraction(2 * n * (k + 1) + 1, 2 * n));
            CHECK(oracle_valid(gen_Gkn(k, n), a.colouring));
        }
    for (int n = 1; n <= 4; ++n) {
        const auto a = assemble_k3(n);
        CHECK(a.colouring.p() == 8 * n - 3);
        CHECK(a.colouring.q() == 2 * n - 1);
        CHECK(oracle_valid(gen_Gkn(3, n), a.colouring));
        CHECK_FALSE(a.notes.empty());
    }
    CHECK_THROWS_AS(assemble_thm_lim(1, 1), Error);
    CHECK_THROWS_AS(assemble_thm_improve(3, 1), Error);
    CHECK_THROWS_AS(assemble_k3(0), Error);
    CHECK_THROWS_AS(assemble_k3(17), Error);
}
