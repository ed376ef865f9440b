#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "thetaq/json_io.hpp"

using namespace thetaq;

TEST_CASE("scalar round trip") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const CycloScalar s = testutil::random_small_scalar(4, rng, true);
        CHECK(scalar_from_json(scalar_to_json(s)) == s);
    }
    const CycloScalar half = CycloScalar::n_power(2, -1);
    const std::string js = scalar_to_json(half);
    CHECK(js.find("\"nExp\":\"-1/2\"") != std::string::npos);
    CHECK(scalar_from_json(js) == half);
    CHECK_THROWS_AS(scalar_from_json("{\"coeffs\":[\"1\"]}"), JsonError);
}

TEST_CASE("group element round trip") {
    const HeisElement x{{1, 0}, {2, 3}, 5};
    CHECK(heis_from_json(heis_to_json(x)) == x);
    CHECK(heis_to_json(x) == "{\"p\":[1,0],\"q\":[2,3],\"k\":5}");
}

TEST_CASE("theta vector round trip keeps sparse coefficients") {
    ThetaVector v(2, 2);
    v.coeff({1, 0}) = t_power(2, 3);
    v.coeff({0, 1}) = CycloScalar::n_power(2, -1);
    const ThetaVector back = theta_vector_from_json(theta_vector_to_json(v));
    CHECK(back == v);
    CHECK(theta_vector_to_json(v).find("\"[1,0]\"") != std::string::npos);
}

TEST_CASE("operator round trip") {
    const CycloMatrix m = heis_operator_matrix({1}, {1}, 0, 4);
    const CycloMatrix back = operator_from_json(operator_to_json(m, 4));
    CHECK(back == m);
}

TEST_CASE("diagram round trip") {
    const char* text =
        "N 4\ncup 1 at 0\ncup* 2 at 2\ntw+ at 1\nx- at 1\nx+ at 1\ntw- at 1\n"
        "cap* at 2\ncap at 0\n";
    const SliceDiagram d = parse_diagram(text);
    const SliceDiagram back = diagram_from_json(diagram_to_json(d));
    REQUIRE(back.events.size() == d.events.size());
    CHECK(evaluate(back) == evaluate(d));
    CHECK(diagram_to_json(back) == diagram_to_json(d));
}
