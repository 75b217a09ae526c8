#include "ncgqw/spectrum.hpp"

#include "ncgqw/bounds.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace ncgqw;

namespace {

ParamScalar sym(Param p, int e = 1) { return ParamScalar::symbol(p, e); }

OpExpr commutative_hamiltonian() {
    const auto& h = heisenberg_context();
    const ParamScalar half_over_m = ParamScalar::rational(1, 2) * sym(Param::mass, -1);
    return OpExpr::monomial(h, {0, 0, 2, 0}, half_over_m) +
           OpExpr::monomial(h, {0, 0, 0, 2}, half_over_m) +
           OpExpr::generator(h, 0) * (sym(Param::mass) * sym(Param::gravity));
}

OpExpr theta_momentum_term() {
    const auto& h = heisenberg_context();
    return OpExpr::generator(h, 3) *
           (ParamScalar::rational(1, 2) * sym(Param::theta) * sym(Param::hbar, -1) *
            sym(Param::mass) * sym(Param::gravity));
}

}  // namespace

TEST_CASE("ground level at zero wavenumber") {
    Constants c;
    const double e1 = energy_level(1, 0.0, c);
    CHECK_THAT(e1, Catch::Matchers::WithinRel(2.26e-31, 0.005));       // 3-figure value
    CHECK_THAT(e1, Catch::Matchers::WithinRel(2.260664122299402e-31, 1e-10));
    CHECK_THROWS_AS(energy_level(0, 0.0, c), std::domain_error);
}

TEST_CASE("transverse kinetic term adds hbar^2 k^2 / 2m") {
    Constants c;
    Experiment e;
    const double k = wavenumber(c, e);
    const double kinetic = energy_level(1, k, c) - energy_level(1, 0.0, c);
    // equals m v^2 / 2 because k = m v / hbar
    CHECK_THAT(kinetic, Catch::Matchers::WithinRel(3.5384375e-26, 1e-9));
}

TEST_CASE("free-particle limit as gravity vanishes") {
    Constants c;
    c.g_accel = 1e-30;
    const double k = 1e8;
    const double expected = c.hbar * c.hbar * k * k / (2.0 * c.mass);
    CHECK_THAT(energy_level(1, k, c), Catch::Matchers::WithinRel(expected, 1e-15));
}

TEST_CASE("flat-space shift formula") {
    Constants c;
    Experiment e;
    const double k = wavenumber(c, e);

    CHECK(shift_flat_nc(k, DeformationParams{0.0, 0.0}, c) == 0.0);

    // coefficient m g k / 2
    const double coeff = -shift_flat_nc(k, DeformationParams{1.0, 0.0}, c);
    CHECK_THAT(coeff, Catch::Matchers::WithinRel(8.46e-19, 0.005));

    // the engine theta bound saturates the measured resolution exactly
    const double theta_star = theta_upper(c, e);
    CHECK_THAT(shift_flat_nc(k, DeformationParams{theta_star, 0.0}, c),
               Catch::Matchers::WithinRel(-6.55e-32, 1e-9));

    CHECK_THROWS_AS(shift_flat_nc(k, DeformationParams{-1e-15, 0.0}, c), std::domain_error);
}

TEST_CASE("position-dependent shift pair") {
    Constants c;
    Experiment e;
    const double k = wavenumber(c, e);

    auto zero = shift_posdep(k, DeformationParams{0.0, 0.0}, c);
    CHECK(zero.first == 0.0);
    CHECK(zero.second == 0.0);

    // tau coefficient hbar^2 / 2m
    auto unit_tau = shift_posdep(k, DeformationParams{0.0, 1.0}, c);
    CHECK_THAT(-unit_tau.second, Catch::Matchers::WithinRel(3.34e-42, 0.005));

    auto at_bound = shift_posdep(k, DeformationParams{0.0, 6.26e8}, c);
    CHECK(at_bound.first == 0.0);
    CHECK_THAT(at_bound.second, Catch::Matchers::WithinRel(-2.0956630029850746e-33, 1e-12));

    // theta part always equals the flat-space shift
    for (double theta : {0.0, 1e-14, 7.7e-14}) {
        for (double kk : {0.0, 1e7, 2.3e8}) {
            CHECK(shift_posdep(kk, DeformationParams{theta, 1e8}, c).first ==
                  shift_flat_nc(kk, DeformationParams{theta, 0.0}, c));
        }
    }
}

TEST_CASE("reduced Hamiltonian of the composed realization, exactly") {
    OpExpr reduced = reduce_hamiltonian(rep_posdep_in_canonical_composed(),
                                        NeglectPolicy::leading_order());
    const auto& h = heisenberg_context();
    OpExpr expected = commutative_hamiltonian() - theta_momentum_term() -
                      OpExpr::scalar(h, ParamScalar::rational(1, 2) * sym(Param::hbar, 2) *
                                            sym(Param::tau) * sym(Param::mass, -1));
    CHECK(reduced == expected);
}

TEST_CASE("reduced Hamiltonian of the symmetric Bopp shift, exactly") {
    OpExpr expected = commutative_hamiltonian() - theta_momentum_term();
    CHECK(reduce_hamiltonian(rep_bopp_sym(), NeglectPolicy::leading_order()) == expected);
    // the flat case needs no approximation: the full expansion is identical
    CHECK(reduce_hamiltonian(rep_bopp_sym(), NeglectPolicy::none()) == expected);
}

TEST_CASE("undeformed limit of the unfiltered expansion") {
    OpExpr full = reduce_hamiltonian(rep_posdep_in_canonical_composed(),
                                     NeglectPolicy::none());
    OpExpr at_zero =
        full.truncated(DegreeCaps{}.cap(Param::theta, 0).cap(Param::tau, 0));
    CHECK(at_zero == commutative_hamiltonian());
}

TEST_CASE("reduction requires a canonical-target realization") {
    CHECK_THROWS_AS(
        reduce_hamiltonian(rep_posdep_in_flat(), NeglectPolicy::leading_order()),
        std::invalid_argument);
}

TEST_CASE("neglect policy description strings") {
    CHECK(NeglectPolicy::leading_order().describe() ==
          "drop monomials containing y_s; drop terms of total degree >= 2 in {theta, tau}");
    CHECK(NeglectPolicy::none().describe() == "none");
}

TEST_CASE("spectrum table invariants") {
    Constants c;
    Experiment e;
    const double k = wavenumber(c, e);
    const DeformationParams p{7.754526223934625e-14, 0.0};

    auto rows = spectrum_table(4, k, p, c);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.e_total == r.e_commutative + r.shift_theta + r.shift_tau);
        CHECK(r.shift_theta <= 0.0);
        CHECK(r.shift_tau <= 0.0);
        CHECK(r.k == k);
        // shifts carry no n dependence
        CHECK(r.shift_theta == rows.front().shift_theta);
        CHECK(r.shift_tau == rows.front().shift_tau);
    }
    // saturating theta shifts every level down by the measured resolution
    CHECK_THAT(rows[0].e_total - rows[0].e_commutative,
               Catch::Matchers::WithinRel(-6.55e-32, 1e-9));

    // commutative levels are strictly increasing
    auto plain = spectrum_table(8, 0.0, DeformationParams{}, c);
    for (std::size_t i = 1; i < plain.size(); ++i)
        CHECK(plain[i].e_commutative > plain[i - 1].e_commutative);

    // level gap from the first two zeros
    CHECK_THAT(plain[1].e_commutative - plain[0].e_commutative,
               Catch::Matchers::WithinRel(1.6918833957393083e-31, 1e-10));
    CHECK_THAT(plain[1].e_commutative - plain[0].e_commutative,
               Catch::Matchers::WithinRel(1.68e-31, 0.01));

    CHECK_THROWS_AS(spectrum_table(0, k, p, c), std::domain_error);
}
