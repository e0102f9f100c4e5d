#include <catch2/catch_amalgamated.hpp>

#include "tutte/series.hpp"

using namespace tutte;

namespace {

const Variable X("x");

TruncatedSeries geometric(int cap) {
    auto s = TruncatedSeries::with_total_cap({X}, cap);
    for (int k = 0; k <= cap; ++k) s.set_coeff({k}, MultiPoly(1));
    return s;
}

TruncatedSeries exponential(int cap) {
    auto s = TruncatedSeries::with_total_cap({X}, cap);
    for (int k = 0; k <= cap; ++k)
        s.set_coeff({k}, MultiPoly(make_rational(Integer(1), factorial(k))));
    return s;
}

}  // namespace

TEST_CASE("series coefficients and caps") {
    auto s = TruncatedSeries::with_total_cap({X}, 3);
    s.set_coeff({2}, MultiPoly::var("q"));
    CHECK(s.coeff({2}) == MultiPoly::var("q"));
    CHECK(s.coeff({1}).is_zero());
    CHECK_THROWS_AS(s.coeff({4}), std::out_of_range);
    CHECK_THROWS_AS(s.set_coeff({4}, MultiPoly(1)), std::out_of_range);
    CHECK_THROWS_AS(s.set_coeff({1}, MultiPoly::var("x")), std::invalid_argument);
}

TEST_CASE("series arithmetic respects truncation") {
    auto a = geometric(5);
    auto b = geometric(3);
    auto sum = a + b;
    CHECK(sum.coeff({3}) == MultiPoly(2));
    CHECK_THROWS_AS(sum.coeff({4}), std::out_of_range);

    // (1/(1-x)) * (1-x) == 1
    auto one_minus = TruncatedSeries::with_total_cap({X}, 5);
    one_minus.set_coeff({0}, MultiPoly(1));
    one_minus.set_coeff({1}, MultiPoly(-1));
    auto prod = a * one_minus;
    CHECK(prod.coeff({0}) == MultiPoly(1));
    for (int k = 1; k <= 5; ++k) CHECK(prod.coeff({k}).is_zero());

    auto diff = a - a;
    for (int k = 0; k <= 5; ++k) CHECK(diff.coeff({k}).is_zero());
}

TEST_CASE("log and exp invert each other") {
    auto g = geometric(6);
    auto lg = g.log();
    for (int k = 1; k <= 6; ++k)
        CHECK(lg.coeff({k}) == MultiPoly(make_rational(1, k)));
    CHECK(lg.exp() == g);

    auto e = exponential(6);
    auto le = e.log();
    CHECK(le.coeff({1}) == MultiPoly(1));
    for (int k = 2; k <= 6; ++k) CHECK(le.coeff({k}).is_zero());

    CHECK_THROWS_AS(e.exp(), std::invalid_argument);
    CHECK_THROWS_AS(lg.log(), std::invalid_argument);
}

TEST_CASE("symbolic power gives binomial coefficients") {
    auto one_plus_x = TruncatedSeries::with_total_cap({X}, 5);
    one_plus_x.set_coeff({0}, MultiPoly(1));
    one_plus_x.set_coeff({1}, MultiPoly(1));
    MultiPoly q = MultiPoly::var("q");
    auto pw = one_plus_x.pow_symbolic(q);
    for (int n = 0; n <= 5; ++n) {
        MultiPoly expect =
            MultiPoly(make_rational(Integer(1), factorial(n))) * falling_factorial(q, n);
        CHECK(pw.coeff({n}) == expect);
    }

    auto eq = exponential(5).pow_symbolic(q);
    for (int n = 0; n <= 5; ++n)
        CHECK(eq.coeff({n}) ==
              MultiPoly(make_rational(Integer(1), factorial(n))) * q.pow(n));
}

TEST_CASE("bivariate symbolic power") {
    Variable x1("x:1"), x2("x:2");
    auto s = TruncatedSeries::with_var_caps({x1, x2}, {1, 1});
    s.set_coeff({0, 0}, MultiPoly(1));
    s.set_coeff({1, 0}, MultiPoly(1));
    s.set_coeff({0, 1}, MultiPoly(1));
    MultiPoly q = MultiPoly::var("q");
    auto pw = s.pow_symbolic(q);
    CHECK(pw.coeff({1, 1}) == q * q - q);
    CHECK(pw.coeff({1, 0}) == q);
    CHECK(extract_coeff(pw, {1, 1}) == q * q - q);
}

TEST_CASE("integer power matches repeated product") {
    auto g = geometric(4);
    CHECK(g.pow(3) == g * g * g);
    CHECK(g.pow(0).coeff({0}) == MultiPoly(1));
    CHECK_THROWS_AS(g.pow(-2), std::invalid_argument);
}

TEST_CASE("composition with exact inverse pair") {
    // exp(log(1+x)) == 1+x within truncation
    auto one_plus_x = TruncatedSeries::with_total_cap({X}, 6);
    one_plus_x.set_coeff({0}, MultiPoly(1));
    one_plus_x.set_coeff({1}, MultiPoly(1));
    auto lg = one_plus_x.log();
    auto composed = exponential(6).compose1(lg);
    CHECK(composed == one_plus_x);

    CHECK_THROWS_AS(exponential(6).compose1(one_plus_x), std::invalid_argument);
}

TEST_CASE("scaling by polynomials") {
    auto g = geometric(3);
    MultiPoly q = MultiPoly::var("q");
    auto sc = g.scaled(q);
    for (int k = 0; k <= 3; ++k) CHECK(sc.coeff({k}) == q);
    CHECK_THROWS_AS(g.scaled(MultiPoly::var("x")), std::invalid_argument);
}

TEST_CASE("shifting multiplies by a power of the variable") {
    auto g = geometric(4);
    auto sh = g.shifted(0, 2);
    CHECK(sh.coeff({0}).is_zero());
    CHECK(sh.coeff({1}).is_zero());
    for (int k = 2; k <= 4; ++k) CHECK(sh.coeff({k}) == MultiPoly(1));
}

TEST_CASE("implicit tree equation reproduces known coefficient data") {
    // w = a(x * w^t) with a = exp and t = 1: n! [x^n] w = (n+1)^(n-1)
    auto w = implicit_knuth_solve(exponential(5), MultiPoly(1));
    long expect[] = {1, 1, 3, 16, 125, 1296};
    for (int n = 0; n <= 5; ++n) {
        MultiPoly c = MultiPoly(Integer(factorial(n))) * w.coeff({n});
        CHECK(c == MultiPoly(expect[n]));
    }

    // t = 0 collapses to w = a(x)
    auto w0 = implicit_knuth_solve(exponential(5), MultiPoly(0));
    CHECK(w0 == exponential(5));
}

TEST_CASE("series equality notices shape differences") {
    auto a = TruncatedSeries::with_total_cap({X}, 3);
    auto b = TruncatedSeries::with_total_cap({X}, 4);
    CHECK(a != b);
    auto c = TruncatedSeries::with_total_cap({X}, 3);
    CHECK(a == c);
    c.set_coeff({1}, MultiPoly(2));
    CHECK(a != c);
}
