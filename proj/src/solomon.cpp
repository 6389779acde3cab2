#include "hbac/solomon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hbac/errors.hpp"

namespace hbac {

SolomonParams::SolomonParams(double rho1, double rho2, double sigma, double s1_eq, double s2_eq)
    : rho1_(rho1), rho2_(rho2), sigma_(sigma), s1_eq_(s1_eq), s2_eq_(s2_eq) {
    if (!(rho1 > 0.0) || !std::isfinite(rho1) || !(rho2 > 0.0) || !std::isfinite(rho2)) {
        throw std::invalid_argument("SolomonParams: relaxation rates must be positive and finite");
    }
    if (!std::isfinite(sigma) || rho1 * rho2 < sigma * sigma) {
        throw std::invalid_argument(
            "SolomonParams: need rho1 * rho2 >= sigma^2 for a relaxing system");
    }
    if (!(std::abs(s1_eq) <= 1.0) || !(std::abs(s2_eq) <= 1.0)) {
        throw std::invalid_argument("SolomonParams: equilibrium expectations must be in [-1, 1]");
    }
}

SpinDerivatives solomon_rhs(const SolomonParams& params, double s1, double s2, bool saturated) {
    if (saturated) {
        s2 = 0.0;
    }
    const double ds1 = -params.rho1() * (s1 - params.s1_eq()) - params.sigma() * (s2 - params.s2_eq());
    if (saturated) {
        return {ds1, 0.0};
    }
    const double ds2 = -params.rho2() * (s2 - params.s2_eq()) - params.sigma() * (s1 - params.s1_eq());
    return {ds1, ds2};
}

namespace {

struct SpinPair {
    double s1;
    double s2;
};

SpinPair rk4_step(const SolomonParams& params, SpinPair y, double h, bool saturated) {
    const auto k1 = solomon_rhs(params, y.s1, y.s2, saturated);
    const auto k2 = solomon_rhs(params, y.s1 + 0.5 * h * k1.ds1_dt, y.s2 + 0.5 * h * k1.ds2_dt, saturated);
    const auto k3 = solomon_rhs(params, y.s1 + 0.5 * h * k2.ds1_dt, y.s2 + 0.5 * h * k2.ds2_dt, saturated);
    const auto k4 = solomon_rhs(params, y.s1 + h * k3.ds1_dt, y.s2 + h * k3.ds2_dt, saturated);
    return {y.s1 + h / 6.0 * (k1.ds1_dt + 2.0 * k2.ds1_dt + 2.0 * k3.ds1_dt + k4.ds1_dt),
            y.s2 + h / 6.0 * (k1.ds2_dt + 2.0 * k2.ds2_dt + 2.0 * k3.ds2_dt + k4.ds2_dt)};
}

}  // namespace

SpinTrajectory integrate(const SolomonParams& params, double s1_0, double s2_0, double t_end,
                         double dt, bool saturated) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("integrate: dt must be positive and finite");
    }
    if (!(t_end >= dt) || !std::isfinite(t_end)) {
        throw std::invalid_argument("integrate: t_end must be >= dt and finite");
    }
    const double max_rate = std::max({params.rho1(), params.rho2(), std::abs(params.sigma())});
    const double guard = 0.1 / max_rate;
    if (dt > guard) {
        throw StepTooLarge("integrate: dt = " + std::to_string(dt) +
                           " exceeds the stability guard 0.1 / max rate = " + std::to_string(guard));
    }

    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    SpinTrajectory traj;
    traj.spin2_saturated = saturated;
    traj.t.reserve(steps + 1);
    traj.s1.reserve(steps + 1);
    traj.s2.reserve(steps + 1);

    SpinPair y{s1_0, saturated ? 0.0 : s2_0};
    traj.t.push_back(0.0);
    traj.s1.push_back(y.s1);
    traj.s2.push_back(y.s2);
    for (std::size_t i = 1; i <= steps; ++i) {
        const double t = (i == steps) ? t_end : static_cast<double>(i) * dt;
        const double h = t - traj.t.back();
        y = rk4_step(params, y, h, saturated);
        traj.t.push_back(t);
        traj.s1.push_back(y.s1);
        traj.s2.push_back(y.s2);
    }
    return traj;
}

double steady_state_saturated(const SolomonParams& params) {
    return params.s1_eq() + (params.sigma() / params.rho1()) * params.s2_eq();
}

}  // namespace hbac
