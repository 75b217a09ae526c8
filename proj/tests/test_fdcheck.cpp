#include "ncgqw/fdcheck.hpp"

#include "ncgqw/spectrum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace ncgqw;

TEST_CASE("ground level matches the Airy value on the documented grid") {
    Constants c;
    const Grid1D grid{6e-5, 4000};
    const auto fd = fd_eigenvalues(1, grid, c);
    const double reference = energy_level(1, 0.0, c);
    CHECK_THAT(fd[0], Catch::Matchers::WithinRel(reference, 1e-4));
    CHECK_THAT(fd[0], Catch::Matchers::WithinRel(2.26e-31, 0.005));
}

TEST_CASE("three levels at the acceptance resolution") {
    Constants c;
    const Grid1D grid{9e-5, 4000};
    const auto fd = fd_eigenvalues(3, grid, c);
    for (int n = 1; n <= 3; ++n) {
        INFO("n = " << n);
        CHECK_THAT(fd[n - 1], Catch::Matchers::WithinRel(energy_level(n, 0.0, c), 1e-4));
    }
    // ascending order comes with the Sturm bisection
    CHECK(fd[0] < fd[1]);
    CHECK(fd[1] < fd[2]);
}

TEST_CASE("box limit: negligible gravity reproduces particle-in-a-box levels") {
    Constants c;
    c.g_accel = 1e-30;
    const Grid1D grid{6e-5, 4001};
    const auto fd = fd_eigenvalues(3, grid, c);
    for (int n = 1; n <= 3; ++n) {
        const double expected = c.hbar * c.hbar * std::numbers::pi * std::numbers::pi * n * n /
                                (2.0 * c.mass * grid.x_max * grid.x_max);
        INFO("n = " << n);
        CHECK_THAT(fd[n - 1], Catch::Matchers::WithinRel(expected, 1e-5));
    }
}

TEST_CASE("halving the spacing divides the error by about four") {
    Constants c;
    const double reference = energy_level(1, 0.0, c);
    const auto coarse = fd_eigenvalues(1, Grid1D{6e-5, 2001}, c);
    const auto fine = fd_eigenvalues(1, Grid1D{6e-5, 4001}, c);
    const double err_coarse = std::abs(coarse[0] - reference);
    const double err_fine = std::abs(fine[0] - reference);
    const double ratio = err_coarse / err_fine;
    CHECK(ratio > 3.3);
    CHECK(ratio < 4.7);
}

TEST_CASE("eigenvector oscillation count identifies the level") {
    Constants c;
    const Grid1D grid{9e-5, 2000};
    const auto fd = fd_eigenvalues(4, grid, c);
    for (int n = 1; n <= 4; ++n) {
        const auto v = fd_eigenvector(grid, c, fd[n - 1]);
        INFO("n = " << n);
        CHECK(count_sign_changes(v) == n - 1);
    }
}

TEST_CASE("level count below the wall potential matches the Airy prediction") {
    Constants c;
    const Grid1D grid{9e-5, 2000};
    const double v_wall = c.mass * c.g_accel * grid.x_max;
    const auto fd = fd_eigenvalues(5, grid, c);
    for (int n = 1; n <= 5; ++n) {
        const double airy_value = energy_level(n, 0.0, c);
        CHECK((fd[n - 1] < v_wall) == (airy_value < v_wall));
        CHECK(fd[n - 1] < v_wall);
        CHECK_THAT(fd[n - 1], Catch::Matchers::WithinRel(airy_value, 1e-3));
    }
}

TEST_CASE("grid validation") {
    Constants c;
    CHECK_THROWS_AS(fd_eigenvalues(1, Grid1D{6e-5, 150}, c), std::invalid_argument);
    CHECK_THROWS_AS(fd_eigenvalues(0, Grid1D{6e-5, 1000}, c), std::invalid_argument);
    CHECK_THROWS_AS(fd_eigenvalues(1, Grid1D{-1.0, 1000}, c), std::invalid_argument);
    // level 3 tunnels past a 60 um wall; the validator refuses it
    CHECK_THROWS_AS(fd_eigenvalues(3, Grid1D{6e-5, 4000}, c), std::invalid_argument);
    // but fits comfortably inside 90 um
    CHECK_NOTHROW(fd_eigenvalues(3, Grid1D{9e-5, 1000}, c));
}
