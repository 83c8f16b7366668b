#include <catch2/catch_amalgamated.hpp>

#include <polygram/dirichlet.hpp>

using namespace polygram;

namespace {
OrderedSetPartition make_partition(int k, std::vector<std::vector<int>> blocks) {
    OrderedSetPartition p;
    p.ground_size = k;
    p.blocks = std::move(blocks);
    return p;
}
}  // namespace

TEST_CASE("zeta term construction from single partitions") {
    ZetaTerm t1 = zeta_term_from_partition(make_partition(2, {{1}, {2}}), 2);
    REQUIRE(t1.depth() == 2);
    CHECK(t1.arguments[0] == LinearExponent{{1}, 0});
    CHECK(t1.arguments[1] == LinearExponent{{2}, 1});

    ZetaTerm t2 = zeta_term_from_partition(make_partition(2, {{2}, {1}}), 2);
    CHECK(t2.arguments[0] == LinearExponent{{2}, 0});
    CHECK(t2.arguments[1] == LinearExponent{{1}, 1});

    ZetaTerm t3 = zeta_term_from_partition(make_partition(2, {{1, 2}}), 2);
    REQUIRE(t3.depth() == 1);
    CHECK(t3.arguments[0] == LinearExponent{{1, 2}, 1});

    // positions 1 and 3 share the top block; the middle position sits below
    // both neighbours and absorbs both offsets
    ZetaTerm t4 = zeta_term_from_partition(make_partition(3, {{1, 3}, {2}}), 3);
    REQUIRE(t4.depth() == 2);
    CHECK(t4.arguments[0] == LinearExponent{{1, 3}, 0});
    CHECK(t4.arguments[1] == LinearExponent{{2}, 2});
}

TEST_CASE("zeta term construction validates the partition") {
    CHECK_THROWS_AS(zeta_term_from_partition(make_partition(3, {{1}, {3}}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(zeta_term_from_partition(make_partition(2, {{1, 2}, {2}}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(zeta_term_from_partition(make_partition(2, {{1, 2}}), 3),
                    std::invalid_argument);
}

TEST_CASE("expansion term counts are Fubini numbers and offsets total k-1") {
    for (int k = 1; k <= 6; ++k) {
        ZetaExpansion e = dgf_expansion(k);
        CHECK(e.width == k);
        CHECK(BigInt(e.terms.size()) == fubini(k));
        for (const ZetaTerm& t : e.terms) {
            int offsets = 0;
            int vars = 0;
            for (const LinearExponent& a : t.arguments) {
                offsets += a.offset;
                vars += static_cast<int>(a.variables.size());
            }
            CHECK(offsets == k - 1);
            CHECK(vars == k);
        }
    }
}

TEST_CASE("expansion width cap") {
    CHECK_THROWS_AS(dgf_expansion(0), std::invalid_argument);
    CHECK_THROWS_AS(dgf_expansion(9), std::invalid_argument);
    CHECK_NOTHROW(dgf_expansion(5, 5));
    CHECK_THROWS_AS(dgf_expansion(6, 5), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(render(LinearExponent{{2}, 0}) == "x2");
    CHECK(render(LinearExponent{{1, 3}, 2}) == "x1+x3-2");
    CHECK(render(dgf_expansion(1)) == "zeta(x1)");
    CHECK(render(dgf_expansion(2)) == "zeta(x1, x2-1) + zeta(x2, x1-1) + zeta(x1+x2-1)");
}

TEST_CASE("width-3 expansion starts and ends as expected") {
    ZetaExpansion e = dgf_expansion(3);
    REQUIRE(e.terms.size() == 13);
    // first term: all singleton blocks in natural order
    CHECK(render(e.terms.front()) == "zeta(x1, x2-1, x3-1)");
    // last term: the single-block partition
    CHECK(render(e.terms.back()) == "zeta(x1+x2+x3-2)");
}

TEST_CASE("truncated Dirichlet sums are exact rationals") {
    CHECK(truncated_dgf(1, {2}, 3) == Rational(49, 36));
    CHECK(truncated_dgf(2, {3, 3}, 2) == Rational(41, 32));
    CHECK(truncated_dgf(2, {0, 0}, 2) == 5);
    Rational q = truncated_dgf(1, {2}, 3);
    CHECK(numerator(q) == 49);
    CHECK(denominator(q) == 36);
    CHECK_THROWS_AS(truncated_dgf(2, {1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(truncated_dgf(1, {1}, 0), std::invalid_argument);
}

TEST_CASE("truncated zeta terms") {
    ZetaExpansion e = dgf_expansion(2);
    // zeta(x1, x2-1) at x = (3,3), N = 2: only (m1, m2) = (2, 1) contributes
    CHECK(truncated_zeta_term(e.terms[0], {3, 3}, 2) == Rational(1, 8));
    // zeta(x1+x2-1) at x = (3,3), N = 2: 1 + 2^-5
    CHECK(truncated_zeta_term(e.terms[2], {3, 3}, 2) == Rational(33, 32));
    // depth beyond the truncation: empty sum
    ZetaTerm deep = dgf_expansion(3).terms.front();
    CHECK(truncated_zeta_term(deep, {2, 2, 2}, 2) == 0);
}

TEST_CASE("expansion identity holds exactly on a small battery") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<std::int64_t> x(static_cast<std::size_t>(k));
        for (std::int64_t a = 2; a <= 3; ++a)
            for (std::int64_t b = 2; b <= 3; ++b) {
                for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = (i % 2 == 0) ? a : b;
                for (int limit = 1; limit <= 6; ++limit) {
                    ExpansionCheck c = verify_expansion(k, x, limit);
                    REQUIRE(c.ok);
                    Rational sum = 0;
                    for (const Rational& v : c.term_values) sum += v;
                    CHECK(sum == c.expanded_total);
                }
            }
    }
}

TEST_CASE("dirichlet power coefficients") {
    CHECK(dirichlet_power_coefficient({6}, 3) == 4);
    CHECK(dirichlet_power_coefficient({2, 2}, 3) == 6);
    CHECK(dirichlet_power_coefficient({4}, 4) == 6);
    CHECK(dirichlet_power_coefficient({2}, 4) == 3);
    // dimension 2 is the plain fixed-height count
    CHECK(dirichlet_power_coefficient({2, 3, 2}, 2) == count_fixed_columns({2, 3, 2}));
    CHECK_THROWS_AS(dirichlet_power_coefficient({2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(dirichlet_power_coefficient({2}, 7), std::invalid_argument);
    CHECK_THROWS_AS(dirichlet_power_coefficient({}, 3), std::invalid_argument);
}
