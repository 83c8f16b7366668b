#include <catch2/catch_amalgamated.hpp>

#include <polygram/series.hpp>

using namespace polygram;

TEST_CASE("series construction and degree") {
    Series s(4);
    CHECK(s.order() == 4);
    CHECK(s.degree() == -1);
    s[2] = 7;
    CHECK(s.degree() == 2);
    CHECK_THROWS_AS(Series(-1), std::invalid_argument);
}

TEST_CASE("series multiplication truncates") {
    Series a(3);
    a[0] = 1;
    a[1] = 1;  // 1 + x
    Series p = mul(a, a, 2);
    CHECK(p[0] == 1);
    CHECK(p[1] == 2);
    CHECK(p[2] == 1);

    Series cut = mul(a, a, 1);  // truncation drops x^2
    CHECK(cut.order() == 1);
    CHECK(cut[1] == 2);
}

TEST_CASE("(1-x)^e expansion") {
    Series s = one_minus_x_pow(3, 5);
    CHECK(s[0] == 1);
    CHECK(s[1] == -3);
    CHECK(s[2] == 3);
    CHECK(s[3] == -1);
    CHECK(s[4] == 0);
    CHECK(s[5] == 0);
    CHECK_THROWS_AS(one_minus_x_pow(-1, 3), std::invalid_argument);

    // (1-x)^2 * (1-x)^3 == (1-x)^5 under truncation
    Series p = mul(one_minus_x_pow(2, 6), one_minus_x_pow(3, 6), 6);
    CHECK(p == one_minus_x_pow(5, 6));
}

TEST_CASE("geometric series times (1-x) telescopes") {
    Series geo(6);
    for (int i = 0; i <= 6; ++i) geo[i] = 1;  // 1/(1-x) truncated
    Series p = mul(geo, one_minus_x_pow(1, 6), 6);
    CHECK(p[0] == 1);
    for (int i = 1; i <= 6; ++i) CHECK(p[i] == 0);
}

TEST_CASE("bivariate outer product") {
    Series a(2);
    a[1] = 2;
    a[2] = 3;
    Series b(1);
    b[0] = 5;
    b[1] = 7;
    BivariateSeries s = BivariateSeries::outer(a, b);
    CHECK(s.order_x() == 2);
    CHECK(s.order_y() == 1);
    CHECK(s.at(1, 0) == 10);
    CHECK(s.at(1, 1) == 14);
    CHECK(s.at(2, 0) == 15);
    CHECK(s.at(2, 1) == 21);
    CHECK(s.at(0, 0) == 0);
    CHECK_THROWS_AS(BivariateSeries(-1, 2), std::invalid_argument);
}
