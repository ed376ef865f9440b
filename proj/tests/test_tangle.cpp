#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "thetaq/tangle.hpp"
#include "thetaq/zmod.hpp"

using namespace thetaq;

namespace {

CycloScalar eval_text(const std::string& text) {
    return evaluate(parse_diagram(text));
}

const char* kUnknot = "N 2\ncup 1 at 0\ncap at 0\n";
const char* kTwistedUnknot = "N 2\ncup 1 at 0\ntw+ at 0\ncap at 0\n";

std::string hopf(long N, long m, long n, bool positive) {
    const char* x = positive ? "x+" : "x-";
    std::ostringstream os;
    os << "N " << N << "\n"
       << "cup " << m << " at 0\n"
       << "cup " << n << " at 1\n"
       << x << " at 0\n"
       << x << " at 2\n"
       << "cap at 1\n"
       << "cap at 0\n";
    return os.str();
}

std::string trefoil(long N, long k, bool positive) {
    const char* x = positive ? "x+" : "x-";
    std::ostringstream os;
    os << "N " << N << "\n"
       << "cup " << k << " at 0\n"
       << "cup " << k << " at 1\n";
    for (int i = 0; i < 3; ++i) os << x << " at 0\n";
    os << "cap at 1\ncap at 0\n";
    return os.str();
}

}  // namespace

TEST_CASE("parser handles the smallest closed diagrams") {
    const SliceDiagram d = parse_diagram(kUnknot);
    CHECK(d.N == 2);
    CHECK(d.events.size() == 2);
    CHECK(d.events[0].kind == EventKind::Cup);
    CHECK(d.events[0].color == 1);

    CHECK(parse_diagram(kTwistedUnknot).events.size() == 3);
    CHECK(parse_diagram("N 2 # comment\n# whole line\ncup 0 at 0\ncap at 0\n")
              .events.size() == 2);
}

TEST_CASE("parser reports errors") {
    CHECK_THROWS_AS(parse_diagram("N 2\ncup 1 at 0\ncap at 1\n"), BadPosition);
    CHECK_THROWS_AS(parse_diagram("N 2\ncup 1 at 0\n"), OpenStrands);
    CHECK_THROWS_AS(parse_diagram("N 3\ncup 1 at 0\ncap at 0\n"), BadN);
    CHECK_THROWS_AS(parse_diagram("N 2\nfrob 1 at 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_diagram("N 2\ncup 1 at zero\n"), SyntaxError);
    CHECK_THROWS_AS(parse_diagram("cup 1 at 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_diagram(
                        "N 2\ncup 1 at 0\ncup 2 at 2\ncap at 1\ncap at 0\n"),
                    ColorMismatch);
    // Two downward strands cannot be capped.
    CHECK_THROWS_AS(parse_diagram(
                        "N 2\ncup 1 at 0\ncup 1 at 2\nx+ at 1\ncap at 0\n"
                        "cap at 0\n"),
                    ColorMismatch);
}

TEST_CASE("evaluation of unknots and twists") {
    CHECK(eval_text(kUnknot) == CycloScalar::one(2));
    CHECK(eval_text(kTwistedUnknot) == t_power(2, 1));
    CHECK(eval_text("N 4\ncup 3 at 0\ncap at 0\n") == CycloScalar::one(4));
    // Twist scalars square the strand weight, so the dual strand gives the
    // same factor.
    CHECK(eval_text("N 4\ncup 1 at 0\ntw+ at 1\ncap at 0\n") == t_power(4, 1));
    CHECK(eval_text("N 4\ncup 2 at 0\ntw- at 0\ncap at 0\n") == t_power(4, -4));
    // Opposite kinks cancel.
    CHECK(eval_text("N 4\ncup 1 at 0\ntw+ at 0\ntw- at 0\ncap at 0\n") ==
          CycloScalar::one(4));
}

TEST_CASE("evaluation of Hopf links") {
    CHECK(eval_text(hopf(2, 1, 1, true)) == t_power(2, 2));
    CHECK(eval_text(hopf(4, 1, 2, true)) == t_power(4, 4));
    CHECK(eval_text(hopf(4, 1, 1, false)) == t_power(4, -2));
    CHECK(eval_text(hopf(4, 1, 3, true)) == t_power(4, 6));
    // Color zero kills the linking contribution.
    CHECK(eval_text(hopf(4, 0, 3, true)) == CycloScalar::one(4));
}

TEST_CASE("evaluation of a trefoil-like writhe-3 knot") {
    CHECK(eval_text(trefoil(2, 1, true)) == t_power(2, 3));
    CHECK(eval_text(trefoil(4, 1, true)) == t_power(4, 3));
    CHECK(eval_text(trefoil(4, 1, false)) == t_power(4, -3));
}

TEST_CASE("strand tracing recovers the link data") {
    {
        const LinkData ld = trace_strands(parse_diagram(kTwistedUnknot));
        REQUIRE(ld.components.size() == 1);
        CHECK(ld.components[0].color == 1);
        CHECK(ld.components[0].framing == 1);
    }
    {
        const LinkData ld = trace_strands(parse_diagram(hopf(2, 1, 1, true)));
        REQUIRE(ld.components.size() == 2);
        CHECK(ld.lk.at(0, 1) == 1);
        CHECK(ld.lk.at(1, 0) == 1);
        CHECK(ld.components[0].framing == 0);
    }
    {
        // Two disjoint unknots: no linking.
        const LinkData ld = trace_strands(parse_diagram(
            "N 2\ncup 1 at 0\ncap at 0\ncup 1 at 0\ncap at 0\n"));
        REQUIRE(ld.components.size() == 2);
        CHECK(ld.lk.at(0, 1) == 0);
    }
    {
        // The trefoil has one component of framing 3.
        const LinkData ld = trace_strands(parse_diagram(trefoil(4, 1, true)));
        REQUIRE(ld.components.size() == 1);
        CHECK(ld.components[0].framing == 3);
    }
}

TEST_CASE("linking oracle closed form") {
    LinkData single;
    single.N = 4;
    single.components = {{3, 1}};
    single.lk = IntMat(1, 1);
    CHECK(linking_oracle(single, 4) == t_power(4, 9));

    LinkData pair;
    pair.N = 4;
    pair.components = {{1, 0}, {2, 0}};
    pair.lk = IntMat(2, 2);
    pair.lk.at(0, 1) = 1;
    pair.lk.at(1, 0) = 1;
    CHECK(linking_oracle(pair, 4) == t_power(4, 4));

    LinkData zeros;
    zeros.N = 4;
    zeros.components = {{0, 5}, {0, -2}};
    zeros.lk = IntMat(2, 2);
    zeros.lk.at(0, 1) = 7;
    zeros.lk.at(1, 0) = 7;
    CHECK(linking_oracle(zeros, 4) == CycloScalar::one(4));
}

TEST_CASE("oracle equivalence on random diagrams") {
    std::mt19937_64 rng(20240817);
    for (long N : {2L, 4L}) {
        for (int i = 0; i < 200; ++i) {
            const SliceDiagram d = random_diagram(N, rng);
            CHECK(evaluate(d) == linking_oracle(trace_strands(d), N));
        }
    }
}

TEST_CASE("color reduction leaves the oracle value unchanged") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const SliceDiagram d = random_diagram(4, rng);
        const LinkData ld = trace_strands(d);
        const LinkData reduced = color_reduce(ld, 4);
        for (const auto& c : reduced.components) {
            CHECK(c.color >= 0);
            CHECK(c.color < 4);
        }
        CHECK(linking_oracle(ld, 4) == linking_oracle(reduced, 4));
    }
}

TEST_CASE("color shift by N leaves the invariant unchanged") {
    std::mt19937_64 rng(7);
    for (long N : {2L, 4L}) {
        for (int i = 0; i < 40; ++i) {
            const SliceDiagram d = random_diagram(N, rng);
            CHECK(evaluate(d) == evaluate(color_shifted(d, N)));
        }
    }
}

TEST_CASE("whole-link arrow reversal leaves the invariant unchanged") {
    std::mt19937_64 rng(31);
    for (long N : {2L, 4L}) {
        for (int i = 0; i < 40; ++i) {
            const SliceDiagram d = random_diagram(N, rng);
            CHECK(evaluate(d) == evaluate(arrow_reversed(d)));
        }
    }
    // Reversing a single component is a different oriented link: the Hopf
    // link with one reversed component evaluates to the inverse power.
    const std::string reversed_hopf =
        "N 4\ncup 1 at 0\ncup* 1 at 1\nx+ at 0\nx+ at 2\ncap at 1\ncap* at 0\n";
    CHECK(eval_text(reversed_hopf) == t_power(4, -2));
    CHECK(eval_text(hopf(4, 1, 1, true)) == t_power(4, 2));
    // Reversing a component is the same as recoloring it by the dual
    // label 2N - k.
    CHECK(eval_text(reversed_hopf) == eval_text(hopf(4, 1, 7, true)));
}

TEST_CASE("isotopy spot checks") {
    // Reidemeister II: opposite crossings cancel.
    const std::string rii =
        "N 4\ncup 1 at 0\ncup 2 at 2\nx+ at 1\nx- at 1\ncap at 2\ncap at 0\n";
    const std::string rii_flat =
        "N 4\ncup 1 at 0\ncup 2 at 2\ncap at 2\ncap at 0\n";
    CHECK(eval_text(rii) == eval_text(rii_flat));

    // Reidemeister III: sliding a strand across a crossing.
    const std::string riii_a =
        "N 4\ncup 1 at 0\ncup 2 at 2\ncup 3 at 4\n"
        "x+ at 1\nx+ at 0\nx+ at 1\n"
        "x- at 1\nx- at 0\nx- at 1\n"
        "cap at 4\ncap at 2\ncap at 0\n";
    const std::string riii_b =
        "N 4\ncup 1 at 0\ncup 2 at 2\ncup 3 at 4\n"
        "x+ at 0\nx+ at 1\nx+ at 0\n"
        "x- at 0\nx- at 1\nx- at 0\n"
        "cap at 4\ncap at 2\ncap at 0\n";
    CHECK(eval_text(riii_a) == eval_text(riii_b));

    // Distant events commute.
    const std::string far_a =
        "N 2\ncup 1 at 0\ncup 1 at 2\ntw+ at 0\ntw- at 3\ncap at 2\ncap at 0\n";
    const std::string far_b =
        "N 2\ncup 1 at 0\ncup 1 at 2\ntw- at 3\ntw+ at 0\ncap at 2\ncap at 0\n";
    CHECK(eval_text(far_a) == eval_text(far_b));
}

TEST_CASE("cabling of colored cores to handlebody vectors") {
    CHECK(cable_to_skein({1}, 2) == HandlebodyVector::basis_vector(2, 1, {1}));
    CHECK(cable_to_skein({0, 0}, 2) ==
          HandlebodyVector::basis_vector(2, 2, {0, 0}));
    CHECK(cable_to_skein({1, 1}, 2) ==
          HandlebodyVector::basis_vector(2, 2, {1, 1}));
    // Colors reduce mod N.
    CHECK(cable_to_skein({3}, 2) == HandlebodyVector::basis_vector(2, 1, {1}));
}

TEST_CASE("colored core action matches the Schroedinger action") {
    // Gamma(p,q) acting through the skein module, rescaled by t^{k - p.q},
    // equals the group element action on theta vectors.
    const long N = 2;
    for (const auto& p : zng_all(N, 1)) {
        for (const auto& q : zng_all(N, 1)) {
            for (long k = 0; k < 2 * N; ++k) {
                const HeisElement x{p, q, k};
                SkeinElement gamma(N, 1);
                gamma.add_term(p, q, CycloScalar::one(2));
                for (const auto& mu : zng_all(N, 1)) {
                    const ThetaVector theta = ThetaVector::basis_vector(N, 1, mu);
                    const ThetaVector via_schrodinger =
                        theta.applied(schrodinger_matrix(x, N));
                    const ThetaVector via_gamma =
                        act_on_handlebody(gamma, theta)
                            .scaled(t_power(2, x.k - dot(p, q)));
                    CHECK(via_schrodinger == via_gamma);
                }
            }
        }
    }
}

TEST_CASE("colored Gram matrices") {
    {
        // All colors in Z_4 at N=2, g=1: rank is N^g = 2.
        const auto family = zng_all(4, 1);
        const ColoredGram cg = colored_gram(2, 1, family);
        CHECK(cg.gram.rows() == 4);
        CHECK(cg.rank == 2);
    }
    {
        // The {0,1} family reproduces the theta Gram exactly.
        const ColoredGram cg = colored_gram(2, 1, {{0}, {1}});
        CHECK(cg.rank == 2);
        CHECK(cg.gram.at(0, 0) == CycloScalar::one(2));
        CHECK(cg.gram.at(0, 1) == CycloScalar::one(2));
        CHECK(cg.gram.at(1, 0) == CycloScalar::one(2));
        CHECK(cg.gram.at(1, 1) == -CycloScalar::one(2));
    }
    {
        // Genus 2, all 16 colorings: rank 4.
        const ColoredGram cg = colored_gram(2, 2, zng_all(4, 2));
        CHECK(cg.gram.rows() == 16);
        CHECK(cg.rank == 4);
    }
}

TEST_CASE("random diagrams are reproducible for a fixed seed") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 10; ++i) {
        const SliceDiagram da = random_diagram(4, a);
        const SliceDiagram db = random_diagram(4, b);
        REQUIRE(da.events.size() == db.events.size());
        CHECK(evaluate(da) == evaluate(db));
    }
}
