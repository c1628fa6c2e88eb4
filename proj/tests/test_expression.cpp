#include <doctest.h>

#include "folia/error.hpp"
#include "folia/expression.hpp"
#include "folia/selftest.hpp"

using namespace folia;

namespace {

const Variables xyz = Variables::defaults(3);

std::size_t offset_of(const std::string& text, bool form = false) {
    try {
        if (form) {
            parse_form(text, xyz);
        } else {
            parse_poly(text, xyz);
        }
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for " << text);
    return 0;
}

} // namespace

TEST_CASE("parse_poly examples") {
    const Poly fermat = parse_poly("x^3 + y^3 + z^3", xyz);
    CHECK(fermat.term_count() == 3);
    CHECK(fermat == pow(Poly::variable(3, 0), 3) + pow(Poly::variable(3, 1), 3) + pow(Poly::variable(3, 2), 3));

    const Poly frac = parse_poly("3/2*x*y - z^2", xyz);
    CHECK(frac.coefficient(Monomial::variable(3, 0) * Monomial::variable(3, 1)) == Scalar::fraction(3, 2));
    CHECK(frac.coefficient(Monomial::variable(3, 2) * Monomial::variable(3, 2)) == Scalar(-1));

    CHECK(offset_of("x + q") == 4);
    CHECK_THROWS_AS(parse_poly("x + q", xyz), ParseError);
}

TEST_CASE("gaussian and fraction literals") {
    CHECK(parse_scalar("1+2*i") == Scalar(1, 2));
    CHECK(parse_scalar("-3/4") == Scalar::fraction(-3, 4));
    CHECK(parse_scalar("(1 - i)^2") == Scalar(0, -2));
    CHECK(parse_scalar("i/2") == Scalar(0, mpq_class(1, 2)));
    CHECK(parse_poly("(1+2*i)*x", xyz) == Scalar(1, 2) * Poly::variable(3, 0));
    CHECK(parse_poly("x/3 - x/3", xyz).is_zero());
}

TEST_CASE("parse errors carry offsets") {
    CHECK(offset_of("x / 0") == 4);
    CHECK(offset_of("x / y") == 4);
    CHECK(offset_of("2x") == 1);
    CHECK(offset_of("(x + y") == 6);
    CHECK(offset_of("x +") == 3);
    CHECK(offset_of("x ^ y") == 4);
    CHECK(offset_of("x $ y") == 2);
    CHECK(offset_of("x + dy") == 4);
}

TEST_CASE("parse_form examples") {
    const Form rational = parse_form("x*dy - 2*y*dx", xyz);
    CHECK(rational.coefficient(1) == Poly::variable(3, 0));
    CHECK(rational.coefficient(0) == Scalar(-2) * Poly::variable(3, 1));

    const Form log = parse_form("(y*z)*dx + (2*x*z)*dy + (5*x*y)*dz", xyz);
    CHECK(log.coefficient(2) == Scalar(5) * Poly::variable(3, 0) * Poly::variable(3, 1));

    CHECK(parse_form("dx", xyz) == Form::differential(3, 0));
    CHECK(parse_form("0", xyz) == Form(3, 1));
    CHECK(parse_form("dx*x", xyz) == parse_form("x*dx", xyz));
    CHECK(parse_form("-(x + y)*dz", xyz) == parse_form("-x*dz - y*dz", xyz));

    CHECK(offset_of("dx*dy", true) == 3);
    CHECK(offset_of("x + dy", true) == 2);
    CHECK(offset_of("dx^2", true) == 0);
    CHECK(offset_of("x/dy", true) == 2);
    CHECK(offset_of("x*y", true) == 0);
    CHECK(offset_of("x*dq", true) == 2);
}

TEST_CASE("variables") {
    CHECK(Variables::defaults(4).names() == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(Variables::defaults(12).name(11) == "x12");
    CHECK(Variables::defaults(3).extended().name(3) == "w");
    CHECK(Variables::parse_list("a, b,c").names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(Variables({"u", "v"}).extended().name(2) == "x");
    CHECK(*Variables::defaults(3).index_of("z") == 2);
    CHECK_FALSE(Variables::defaults(3).index_of("w").has_value());
    CHECK_THROWS_AS(Variables({"x", "x"}), PreconditionError);
    CHECK_THROWS_AS(Variables({"i"}), PreconditionError);
    CHECK_THROWS_AS(Variables({"dx"}), PreconditionError);
    CHECK_THROWS_AS(Variables({"2a"}), PreconditionError);
    CHECK_THROWS_AS(Variables::parse_list("x,,y"), PreconditionError);
}

TEST_CASE("custom variable names") {
    const Variables v({"a", "b"});
    const Form f = parse_form("a*db - b*da", v);
    CHECK(render(f, v) == "-b*da + a*db");
    CHECK_THROWS_AS(parse_poly("x", v), ParseError);
}

TEST_CASE("rendering is canonical") {
    CHECK(render(parse_poly("z^2 + 2*x*y - x^2", xyz), xyz) == "-x^2 + 2*x*y + z^2");
    CHECK(render(parse_poly("0", xyz), xyz) == "0");
    CHECK(render(parse_poly("-1", xyz), xyz) == "-1");
    CHECK(render(parse_poly("i*x - 3/2*i*y + (1+i)", xyz), xyz) == "i*x - 3/2*i*y + (1+i)");
    CHECK(render(parse_form("x*dy - 2*y*dx", xyz), xyz) == "-2*y*dx + x*dy");
    CHECK(render(parse_form("(x + y)*dz + dx", xyz), xyz) == "dx + (x + y)*dz");
    CHECK(render(parse_form("(1+i)*x*dy", xyz), xyz) == "(1+i)*x*dy");
    CHECK(render(Form::differential(3, 0), xyz) == "dx");
    const Form two = wedge(Form::differential(3, 0), Form::differential(3, 1));
    CHECK(render(two, xyz) == "dx*dy");
    CHECK_THROWS_AS(render(parse_poly("x", xyz), Variables::defaults(4)), DimensionMismatch);
}

TEST_CASE("parse after render is the identity") {
    Rng rng(71);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
        const Variables v = Variables::defaults(n);
        const Poly p = random_homogeneous(n, static_cast<int>(rng.uniform(0, 4)), rng, 6) +
                       random_homogeneous(n, static_cast<int>(rng.uniform(0, 2)), rng, 2);
        CHECK(parse_poly(render(p, v), v) == p);
        const Form f = random_form(n, 1, static_cast<int>(rng.uniform(0, 3)), rng, 4);
        CHECK(parse_form(render(f, v), v) == f);
        CHECK(render(parse_form(render(f, v), v), v) == render(f, v));
    }
}
