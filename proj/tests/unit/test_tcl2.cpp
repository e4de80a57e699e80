#include <cmath>
#include <limits>

#include <doctest.h>

#include "oracles.hpp"
#include "sbflow/bath.hpp"
#include "sbflow/errors.hpp"
#include "sbflow/nonmarkov.hpp"
#include "sbflow/specfun.hpp"
#include "sbflow/tcl2.hpp"

using namespace sbflow;

namespace {

const bath::BathParams kDefaultBath{0.1, 0.4, 1.0};

tcl2::SystemParams system_at(double sys_temp) {
    tcl2::SystemParams s;
    s.sys_temp = sys_temp;
    return s;
}

} // namespace

TEST_CASE("gibbs initial state") {
    CHECK(tcl2::QubitState::gibbs(system_at(5.0)).p0 ==
          doctest::Approx(1.0 / (1.0 + std::exp(-0.2))).epsilon(1e-15));
    CHECK(tcl2::QubitState::gibbs(system_at(std::numeric_limits<double>::infinity())).p0 == 0.5);
    CHECK_THROWS_AS(tcl2::QubitState::gibbs(system_at(-1.0)), DomainError);
}

TEST_CASE("time grid validation") {
    CHECK_THROWS_AS((tcl2::TimeGrid{0.0, 0.01}.validate()), DomainError);
    CHECK_THROWS_AS((tcl2::TimeGrid{1.0, 2.0}.validate()), DomainError);
    CHECK_THROWS_AS((tcl2::TimeGrid{1.0, 0.3}.validate()), DomainError);
    CHECK_NOTHROW((tcl2::TimeGrid{1.0, 0.25}.validate()));
    CHECK(tcl2::TimeGrid{100.0, 0.01}.step_count() == 10000);
}

TEST_CASE("coefficient derivatives at t = 0") {
    tcl2::SystemParams s;
    const double d1_zero = bath::noise_kernel(0.0, kDefaultBath);
    const tcl2::CoefficientRates r = tcl2::coefficient_derivatives(0.0, kDefaultBath, s);
    CHECK(r.b_z == 0.0);
    CHECK(r.a_zz == doctest::Approx(-2.0 * d1_zero).epsilon(1e-15));
    CHECK(r.a_minus == doctest::Approx(-d1_zero).epsilon(1e-15));
    CHECK(r.a_plus == doctest::Approx(-d1_zero).epsilon(1e-15));
    CHECK(r.A.real() == doctest::Approx(d1_zero).epsilon(1e-15));
    CHECK(r.A.imag() == 0.0);
    const double d2dot_zero = 4.0 * 0.1 * std::pow(0.4, 3);
    CHECK(r.w_plus == doctest::Approx(-d2dot_zero).epsilon(1e-14));
    CHECK(r.w_minus == doctest::Approx(-d2dot_zero).epsilon(1e-14));
}

TEST_CASE("accumulated w coefficients satisfy the integration-by-parts identities") {
    tcl2::SystemParams s;
    const tcl2::Trajectory traj =
        tcl2::propagate(kDefaultBath, s, tcl2::QubitState::gibbs(s), {20.0, 0.01});
    // check at 10 interior sample times, including t = 3
    for (std::size_t i = 300; i < traj.size(); i += 200) {
        const tcl2::TrajectoryPoint& pt = traj[i];
        const double sinw = std::sin(pt.t);
        const double cosw = std::cos(pt.t);
        const double lhs_diff = pt.coeffs.w_plus - pt.coeffs.w_minus;
        const double rhs_diff = 2.0 * pt.d1 * sinw + pt.coeffs.a_zz;
        CHECK(std::abs(lhs_diff - rhs_diff) < 1e-6);

        const double rhs_plus = pt.d1 * sinw - pt.d2 * cosw + pt.coeffs.a_minus;
        CHECK(std::abs(pt.coeffs.w_plus - rhs_plus) < 1e-6);
    }
}

TEST_CASE("decoupled system stays frozen") {
    bath::BathParams off{0.0, 0.4, 1.0};
    tcl2::SystemParams s;
    const tcl2::QubitState init = tcl2::QubitState::from_bloch(0.3, -0.2, 0.4);
    const tcl2::Trajectory traj = tcl2::propagate(off, s, init, {10.0, 0.01});
    for (const tcl2::TrajectoryPoint& pt : traj.points) {
        CHECK(pt.state.p0 == init.p0);
        CHECK(pt.state.coh == init.coh);
        CHECK(pt.coeffs.a_zz == 0.0);
        CHECK(pt.coeffs.w_plus == 0.0);
    }
}

TEST_CASE("population derivative vanishes at t = 0") {
    tcl2::SystemParams s;
    for (double p0 : {0.1, 0.5, 0.9}) {
        tcl2::QubitState init;
        init.p0 = p0;
        const tcl2::Trajectory traj = tcl2::propagate(kDefaultBath, s, init, {0.1, 0.01});
        // quadratic start: the first step moves by O(dt^2), not O(rate * dt)
        CHECK(std::abs(traj[1].state.p0 - p0) < 1e-5);
    }
}

TEST_CASE("trace and hermiticity preserved exactly") {
    tcl2::SystemParams s;
    const tcl2::QubitState init = tcl2::QubitState::from_bloch(0.3, 0.4, 0.2);
    const tcl2::Trajectory traj = tcl2::propagate(kDefaultBath, s, init, {20.0, 0.01});
    for (const tcl2::TrajectoryPoint& pt : traj.points) {
        CHECK(pt.state.p0 + pt.state.p1() == 1.0);
        CHECK(pt.state.bloch_norm() <= 1.0 + 1e-9);
    }
}

TEST_CASE("coefficient identities hold along the trajectory") {
    tcl2::SystemParams s;
    const tcl2::Trajectory traj =
        tcl2::propagate(kDefaultBath, s, tcl2::QubitState::gibbs(s), {20.0, 0.01});
    for (const tcl2::TrajectoryPoint& pt : traj.points) {
        CHECK(std::abs(pt.coeffs.a_zz - (pt.coeffs.a_plus + pt.coeffs.a_minus)) < 1e-12);
        CHECK(std::abs(pt.coeffs.a_minus - 0.5 * (pt.coeffs.a_zz + pt.coeffs.b_z)) < 1e-10);
    }
}

TEST_CASE("population approaches the Born-Markov curve at long times") {
    tcl2::SystemParams s = system_at(5.0);
    const tcl2::QubitState init = tcl2::QubitState::gibbs(s);
    const tcl2::Trajectory traj = tcl2::propagate(kDefaultBath, s, init, {100.0, 0.01});
    double max_dev = 0.0;
    for (const tcl2::TrajectoryPoint& pt : traj.points) {
        if (pt.t < 80.0) continue;
        const double reference = tcl2::born_markov_population(pt.t, kDefaultBath, s, init.p0);
        max_dev = std::max(max_dev, std::abs(pt.state.p0 - reference));
    }
    CHECK(max_dev < 0.01);
}

TEST_CASE("born markov population") {
    tcl2::SystemParams s;
    CHECK(tcl2::born_markov_population(0.0, kDefaultBath, s, 0.37) == doctest::Approx(0.37));

    const double n = specfun::bose_occupation(1.0, kDefaultBath.temp);
    const double stationary = (1.0 + n) / (1.0 + 2.0 * n);
    CHECK(tcl2::born_markov_population(1e6, kDefaultBath, s, 0.37) ==
          doctest::Approx(stationary).epsilon(1e-12));

    // zero-temperature limit decays to the ground state
    bath::BathParams cold{0.1, 0.4, 1e-4};
    const double gamma = bath::markov_rate(cold, 1.0);
    const double expected = 1.0 + (0.37 - 1.0) * std::exp(-gamma * 3.0);
    CHECK(tcl2::born_markov_population(3.0, cold, s, 0.37) ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(tcl2::born_markov_population(-1.0, kDefaultBath, s, 0.5), DomainError);
}

TEST_CASE("markov limit coefficients") {
    tcl2::SystemParams s;
    const tcl2::Coefficients lt = tcl2::markov_limit_coefficients(kDefaultBath, s);
    const double gamma = bath::markov_rate(kDefaultBath, 1.0);
    const double n = specfun::bose_occupation(1.0, kDefaultBath.temp);

    CHECK(lt.a_zz == doctest::Approx(lt.a_plus + lt.a_minus).epsilon(1e-15));
    CHECK(lt.w_plus - lt.w_minus == doctest::Approx(lt.a_zz).epsilon(1e-15));
    CHECK(lt.a_zz == doctest::Approx(-gamma * (1.0 + 2.0 * n)));
    CHECK(lt.b_z == doctest::Approx(-gamma));
    CHECK(lt.a_minus == doctest::Approx(-gamma * (1.0 + n)));
    CHECK(lt.a_plus == doctest::Approx(-gamma * n));
    CHECK(lt.w_plus == doctest::Approx(-gamma * (1.0 + n)));
    CHECK(lt.w_minus == doctest::Approx(gamma * n));

    // accumulated a_zz reaches its limit within 1% by t = 200
    const tcl2::Trajectory traj =
        tcl2::propagate(kDefaultBath, s, tcl2::QubitState::gibbs(s), {200.0, 0.01});
    CHECK(traj.points.back().coeffs.a_zz == doctest::Approx(lt.a_zz).epsilon(0.01));
}

TEST_CASE("step halving keeps rho00(t_max) stable and shows fourth-order decay") {
    tcl2::SystemParams s = system_at(5.0);
    const tcl2::QubitState init = tcl2::QubitState::gibbs(s);

    const double coarse =
        tcl2::propagate(kDefaultBath, s, init, {100.0, 0.01}).points.back().state.p0;
    const double half =
        tcl2::propagate(kDefaultBath, s, init, {100.0, 0.005}).points.back().state.p0;
    CHECK(std::abs(coarse - half) < 1e-7);

    // order check at steps where truncation still dominates round-off
    const double e1 = tcl2::propagate(kDefaultBath, s, init, {20.0, 0.2}).points.back().state.p0;
    const double e2 = tcl2::propagate(kDefaultBath, s, init, {20.0, 0.1}).points.back().state.p0;
    const double e3 = tcl2::propagate(kDefaultBath, s, init, {20.0, 0.05}).points.back().state.p0;
    const double d12 = std::abs(e1 - e2);
    const double d23 = std::abs(e2 - e3);
    if (d23 > 1e-12) {
        CHECK(d12 / d23 > 8.0);
        CHECK(d12 / d23 < 40.0);
    }
}

TEST_CASE("propagated population matches the formal solution by nested quadrature") {
    bath::BathParams p{0.1, 0.4, 1.0};
    tcl2::SystemParams s = system_at(1.0);
    const tcl2::QubitState init = tcl2::QubitState::gibbs(s);
    const tcl2::Trajectory traj = tcl2::propagate(p, s, init, {100.0, 0.01});
    for (double t_eval : {1.0, 10.0, 100.0}) {
        const std::size_t idx = static_cast<std::size_t>(std::llround(t_eval / 0.01));
        const double oracle = testoracle::rho00_formal_solution(p, s, init.p0, t_eval, 0.0005);
        CHECK(std::abs(traj[idx].state.p0 - oracle) < 1e-6);
    }
}

TEST_CASE("canonical-pair trace distance matches the reduced-system oracle pointwise") {
    bath::BathParams p{0.1, 0.4, 0.5};
    tcl2::SystemParams s;
    const tcl2::TimeGrid grid{30.0, 0.01};
    const tcl2::QubitState plus = tcl2::QubitState::from_bloch(0.0, 1.0, 0.0);
    const tcl2::QubitState minus = tcl2::QubitState::from_bloch(0.0, -1.0, 0.0);
    const std::vector<tcl2::Trajectory> pair = tcl2::propagate_joint(p, s, {plus, minus}, grid);
    const nonmarkov::BLPResult oracle = nonmarkov::blp_closed_form(p, grid);
    REQUIRE(oracle.distance_trace.size() == pair[0].size());
    for (std::size_t i = 0; i < pair[0].size(); ++i) {
        const double dx = pair[0][i].state.bloch_x() - pair[1][i].state.bloch_x();
        const double dy = pair[0][i].state.bloch_y() - pair[1][i].state.bloch_y();
        const double dz = pair[0][i].state.bloch_z() - pair[1][i].state.bloch_z();
        const double distance = 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
        CHECK(std::abs(distance - oracle.distance_trace[i]) < 1e-6);
    }
}

TEST_CASE("blown-up dynamics reports a numerics failure") {
    bath::BathParams wild{1e6, 5.0, 5.0};
    tcl2::SystemParams s;
    CHECK_THROWS_AS(tcl2::propagate(wild, s, tcl2::QubitState::gibbs(s), {100.0, 0.01}),
                    NumericsError);
}
