#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sv/json_io.hpp"

using namespace sv;

TEST_CASE("involution pack json round trip") {
    auto plus = InvolutionParams::plus(GaussRat(2), GaussRat(Rat(1), Rat(1)),
                                       GaussRat(Rat(3, 5), Rat(4, 5)));
    Json jp = involution_to_json(plus);
    CHECK(jp["type"] == "plus");
    CHECK(jp["rho"] == "2");
    CHECK(jp["beta"] == "1/1+1/1*i");
    CHECK(jp["nu"] == "3/5+4/5*i");
    auto back = involution_from_json(jp);
    CHECK(back.is_plus());
    CHECK(back.plus_params().rho == plus.plus_params().rho);
    CHECK(back.plus_params().beta == plus.plus_params().beta);
    CHECK(back.plus_params().nu == plus.plus_params().nu);

    auto minus = InvolutionParams::minus(GaussRat(Rat(3, 5), Rat(4, 5)), Rat(1), Rat(-2),
                                         GaussRat::i());
    Json jm = involution_to_json(minus);
    CHECK(jm["type"] == "minus");
    CHECK(jm["r1"] == "1");
    CHECK(jm["r2"] == "-2");
    auto mback = involution_from_json(jm);
    CHECK_FALSE(mback.is_plus());
    CHECK(mback.minus_params().sigma == minus.minus_params().sigma);
    CHECK(mback.minus_params().tau == minus.minus_params().tau);

    CHECK_THROWS_AS((void)involution_from_json(Json{{"type", "other"}}), invalid_parameters);
}

TEST_CASE("compact involution spec") {
    auto p = parse_involution_spec("plus:rho=1,beta=1+1*i,nu=3/5+4/5*i");
    CHECK(p.is_plus());
    CHECK(p.plus_params().beta == GaussRat(Rat(1), Rat(1)));
    auto m = parse_involution_spec("minus:tau=1,r1=1,r2=0,sigma=i");
    CHECK_FALSE(m.is_plus());
    CHECK(m.minus_params().sigma == GaussRat::i());
    CHECK(m.mu() == GaussRat(1));
    CHECK_THROWS_AS((void)parse_involution_spec("plus:rho=1"), invalid_parameters);
    CHECK_THROWS_AS((void)parse_involution_spec("nonsense"), invalid_parameters);
}

TEST_CASE("series and verma spec json") {
    SeriesSpec s = SeriesSpec::aab(GaussRat(Rat(1, 4)), GaussRat(Rat(1, 2), Rat(1)));
    Json js = series_to_json(s);
    CHECK(js["series"]["kind"] == "Aab");
    SeriesSpec back = series_from_json(js);
    CHECK(back.kind == SeriesKind::Aab);
    CHECK(back.a == s.a);
    CHECK(back.b == s.b);

    Weight wt{Rat(-1), Rat(0), Rat(2)};
    Json jv = verma_spec_to_json(wt, 4);
    CHECK(jv["verma"]["h"] == "-1");
    auto [wback, depth] = verma_spec_from_json(jv);
    CHECK(wback.h == wt.h);
    CHECK(wback.m == wt.m);
    CHECK(wback.z == wt.z);
    CHECK(depth == 4);
}

TEST_CASE("window invariant") {
    CHECK_THROWS_AS(Window(1), invalid_parameters);
    CHECK_THROWS_AS(Window(-4), invalid_parameters);
    CHECK(Window(2).l_bound() == 1);
    CHECK(Window(16).l_bound() == 8);
}
