#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tutte/multipoly.hpp"

using namespace tutte;

TEST_CASE("rational construction canonicalizes") {
    CHECK(parse_rational("2/6") == make_rational(1, 3));
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(parse_rational("-3") == make_rational(-3));
    CHECK(rational_str(parse_rational("2/6") + parse_rational("2/6")) == "2/3");
    CHECK(rational_str(make_rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("binomial and factorial helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
}

TEST_CASE("variable ordering puts parameters before edge weights") {
    auto lt = [](const char* a, const char* b) { return Variable(a) < Variable(b); };
    CHECK(lt("q", "q1"));
    CHECK(lt("q1", "q2"));
    CHECK(lt("q3", "t"));
    CHECK(lt("t", "y"));
    CHECK(lt("y", "r"));
    CHECK(lt("s", "lambda"));
    CHECK(lt("lambda", "a"));
    CHECK(lt("q", "v:0"));
    CHECK(lt("v:0", "v:1"));
    CHECK(lt("v:1", "v:10"));
    CHECK(lt("v:10", "v:2"));
    CHECK_FALSE(lt("q", "q"));
    CHECK(Variable("v:3") == Variable("v:3"));
}

namespace {

MultiPoly random_poly(std::mt19937& rng) {
    static const char* names[] = {"q", "v:0", "v:1"};
    std::uniform_int_distribution<int> nterms(0, 4), coef(-3, 3), expo(0, 2);
    MultiPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        MultiPoly term(coef(rng));
        for (const char* v : names) {
            int e = expo(rng);
            if (e > 0) term = term * MultiPoly::var(v, e);
        }
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial ring laws hold on random samples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * MultiPoly(1) == a);
        CHECK((a * MultiPoly(0)).is_zero());
    }
}

TEST_CASE("canonical text rendering") {
    MultiPoly q = MultiPoly::var("q");
    CHECK(falling_factorial(q, 3).str() == "q^3 - 3*q^2 + 2*q");
    CHECK(rising_factorial(q, 3).str() == "q^3 + 3*q^2 + 2*q");
    CHECK(MultiPoly(0).str() == "0");
    CHECK(MultiPoly(make_rational(-5, 3)).str() == "-5/3");
    CHECK((q * q + q * MultiPoly::var("v:0")).str() == "q^2 + q*v:0");
    CHECK((MultiPoly(1) - q).str() == "-q + 1");
    CHECK((MultiPoly(2) * q).str() == "2*q");

    MultiPoly prod(1);
    for (const char* v : {"v:0", "v:1", "v:2"})
        prod = prod * (MultiPoly(1) + MultiPoly::var(v));
    CHECK(prod.str() ==
          "v:0*v:1*v:2 + v:0*v:1 + v:0*v:2 + v:1*v:2 + v:0 + v:1 + v:2 + 1");
}

TEST_CASE("degrees and variable queries") {
    MultiPoly q = MultiPoly::var("q"), v = MultiPoly::var("v:0");
    MultiPoly p = q * q * v + q;
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(Variable("q")) == 2);
    CHECK(p.degree_in(Variable("v:0")) == 1);
    CHECK(p.degree_in(Variable("v:1")) == 0);
    CHECK(p.has_var(Variable("q")));
    CHECK_FALSE(p.has_var(Variable("t")));
    CHECK(MultiPoly(0).total_degree() == -1);
    CHECK(p.vars() == std::vector<Variable>{Variable("q"), Variable("v:0")});
}

TEST_CASE("substitution expands correctly") {
    MultiPoly q = MultiPoly::var("q"), v = MultiPoly::var("v:0");
    MultiPoly z = q * q + q * v;
    MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2");
    MultiPoly sub = z.substitute(Variable("q"), q1 + q2);
    CHECK(sub == (q1 + q2) * (q1 + q2) + (q1 + q2) * v);
    CHECK(z.substitute(Variable("v:0"), make_rational(-1)) == q * q - q);
    CHECK(z.substitute(Variable("t"), MultiPoly(7)) == z);
}

TEST_CASE("derivative and evaluation") {
    MultiPoly q = MultiPoly::var("q");
    MultiPoly p = falling_factorial(q, 3);
    CHECK(p.derivative(Variable("q")) ==
          MultiPoly(3) * q * q - MultiPoly(6) * q + MultiPoly(2));
    CHECK(p.derivative(Variable("v:0")).is_zero());

    std::map<Variable, Rational> at{{Variable("q"), make_rational(5)}};
    CHECK(p.eval(at) == make_rational(60));
    MultiPoly z = q + MultiPoly::var("v:0");
    CHECK_THROWS_AS(z.eval(at), std::invalid_argument);
}

TEST_CASE("json form is stable and aligned") {
    MultiPoly q = MultiPoly::var("q"), v = MultiPoly::var("v:0");
    MultiPoly p = q * q + q * v;
    auto j = p.to_json();
    CHECK(j["vars"] == nlohmann::json({"q", "v:0"}));
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0] == nlohmann::json({{"c", "1"}, {"e", {2, 0}}}));
    CHECK(j["terms"][1] == nlohmann::json({{"c", "1"}, {"e", {1, 1}}}));
    CHECK(p.to_json().dump() == p.to_json().dump());
    CHECK(MultiPoly(0).to_json()["terms"].empty());
}

TEST_CASE("power and falling factorial basics") {
    MultiPoly q = MultiPoly::var("q");
    CHECK(q.pow(0) == MultiPoly(1));
    CHECK(q.pow(4) == q * q * q * q);
    CHECK_THROWS_AS(q.pow(-1), std::invalid_argument);
    CHECK(falling_factorial(q, 0) == MultiPoly(1));
    CHECK(falling_factorial(q, 1) == q);
    std::map<Variable, Rational> at{{Variable("q"), make_rational(7)}};
    CHECK(falling_factorial(q, 3).eval(at) == make_rational(7 * 6 * 5));
    CHECK(rising_factorial(q, 3).eval(at) == make_rational(7 * 8 * 9));
}
