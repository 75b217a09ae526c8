#include "ncgqw/reps.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ncgqw;

namespace {

ParamScalar ips() { return ParamScalar::i(); }
ParamScalar sym(Param p, int e = 1) { return ParamScalar::symbol(p, e); }

void require_all_pass(const VerificationReport& report) {
    for (const auto& c : report.claims) {
        INFO(c.label << " residual: " << c.residual.to_string());
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("every Bopp shift reproduces the flat-space algebra exactly") {
    require_all_pass(verify_algebra(rep_bopp_x(), flat_relations()));
    require_all_pass(verify_algebra(rep_bopp_y(), flat_relations()));
    require_all_pass(verify_algebra(rep_bopp_sym(), flat_relations()));
}

TEST_CASE("the flat realization satisfies the position-dependent algebra") {
    auto report = verify_algebra(rep_posdep_in_flat(), posdep_relations());
    require_all_pass(report);
    CHECK(report.claims.size() == 6);
}

TEST_CASE("the composed canonical realization satisfies the same algebra") {
    require_all_pass(
        verify_algebra(rep_posdep_in_canonical_composed(), posdep_relations()));
}

TEST_CASE("a degenerate realization is reported, not thrown") {
    const auto& h = heisenberg_context();
    RepMap zero{"zero", h, h,
                {OpExpr::zero(h), OpExpr::zero(h), OpExpr::zero(h), OpExpr::zero(h)}};
    auto report = verify_algebra(zero, heisenberg_relations());
    // [x_s, p_xs] claim fails with residual -i hbar
    const Claim& claim = report.claims.at(1);
    CHECK_FALSE(claim.pass);
    CHECK(claim.residual == OpExpr::scalar(h, -(ips() * sym(Param::hbar))));
    CHECK_FALSE(report.must_pass_ok());
}

TEST_CASE("hermiticity of the flat realization, including the counterterm") {
    require_all_pass(verify_hermiticity(rep_posdep_in_flat()));
    require_all_pass(verify_hermiticity(rep_bopp_sym()));
    require_all_pass(verify_hermiticity(rep_bopp_x()));
    require_all_pass(verify_hermiticity(rep_bopp_y()));

    // dropping the i theta tau y0 counterterm from x breaks self-adjointness
    // by exactly the reordering defect of tau y0^2 x0: residual +2 i theta tau y0
    const auto& f = flat_nc_context();
    OpExpr y0 = OpExpr::generator(f, 1);
    OpExpr broken = OpExpr::generator(f, 0) + (y0 * y0 * OpExpr::generator(f, 0)) * sym(Param::tau);
    OpExpr residual = broken.adjoint() - broken;
    CHECK(residual ==
          y0 * (ParamScalar::integer(2) * ips() * sym(Param::theta) * sym(Param::tau)));
}

TEST_CASE("hermiticity of the composed canonical realization") {
    require_all_pass(verify_hermiticity(rep_posdep_in_canonical_composed()));
}

TEST_CASE("jacobi identity for contexts and realized images") {
    require_all_pass(verify_jacobi(heisenberg_context()));
    require_all_pass(verify_jacobi(flat_nc_context()));
    auto report = verify_jacobi(rep_posdep_in_flat());
    require_all_pass(report);
    CHECK(report.claims.size() == 4);  // all four triples of four images
}

TEST_CASE("composed vs direct canonical realization: the exact residual") {
    auto report = compare_reps(rep_posdep_in_canonical_composed(),
                               rep_posdep_in_canonical_direct());
    REQUIRE(report.claims.size() == 4);

    // y, p_x and p_y agree exactly
    CHECK(report.claims[1].pass);
    CHECK(report.claims[2].pass);
    CHECK(report.claims[3].pass);

    // x differs by (i theta^2 tau / 2 hbar)(p_xs - p_ys): the direct form
    // carries its imaginary theta^2 tau correction on p_ys where composition
    // generates it on p_xs.
    const auto& h = heisenberg_context();
    ParamScalar w = ParamScalar::rational(1, 2) * ips() * sym(Param::theta, 2) *
                    sym(Param::tau) * sym(Param::hbar, -1);
    OpExpr expected = (OpExpr::generator(h, 2) - OpExpr::generator(h, 3)) * w;
    CHECK_FALSE(report.claims[0].pass);
    CHECK(report.claims[0].residual == expected);

    // report-only rows never trip the must-pass gate
    CHECK(report.must_pass_ok());
}

TEST_CASE("the direct transcription is not self-adjoint in its x variable") {
    auto report = verify_hermiticity(rep_posdep_in_canonical_direct());
    CHECK_FALSE(report.claims[0].pass);  // x picks up the transcribed slip
    CHECK(report.claims[1].pass);
    CHECK(report.claims[2].pass);
    CHECK(report.claims[3].pass);
}

TEST_CASE("a realization compared against itself vanishes") {
    auto report = compare_reps(rep_posdep_in_flat(), rep_posdep_in_flat());
    for (const auto& c : report.claims) CHECK(c.residual.is_zero());
}

TEST_CASE("compare_reps rejects mismatched contexts") {
    CHECK_THROWS_AS(compare_reps(rep_posdep_in_flat(), rep_bopp_sym()),
                    std::invalid_argument);
}

TEST_CASE("truncating the composed x to first order in theta recovers the Bopp shift") {
    OpExpr x = rep_posdep_in_canonical_composed().image(0);
    OpExpr truncated = x.truncated(DegreeCaps{}.cap(Param::theta, 1).cap(Param::tau, 0));
    const auto& h = heisenberg_context();
    OpExpr expected =
        OpExpr::generator(h, 0) -
        OpExpr::generator(h, 3) *
            (ParamScalar::rational(1, 2) * sym(Param::theta) * sym(Param::hbar, -1));
    CHECK(truncated == expected);
}

TEST_CASE("composition plumbing rejects mismatched chains") {
    CHECK_THROWS_AS(compose(rep_bopp_sym(), rep_posdep_in_flat(), "bad"),
                    std::invalid_argument);
}
