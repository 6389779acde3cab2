#pragma once

#include <vector>

namespace hbac {

/// Two-spin cross-relaxation rates and equilibrium expectations.
///
/// Validity requires rho1 > 0, rho2 > 0 and rho1 * rho2 >= sigma^2 so the
/// relaxation matrix has non-negative eigenvalues and free evolution decays
/// to equilibrium.
class SolomonParams {
public:
    SolomonParams(double rho1, double rho2, double sigma, double s1_eq, double s2_eq);

    double rho1() const { return rho1_; }
    double rho2() const { return rho2_; }
    double sigma() const { return sigma_; }
    double s1_eq() const { return s1_eq_; }
    double s2_eq() const { return s2_eq_; }

private:
    double rho1_;
    double rho2_;
    double sigma_;
    double s1_eq_;
    double s2_eq_;
};

struct SpinDerivatives {
    double ds1_dt;
    double ds2_dt;
};

/// Coupled relaxation of <S_z^1>, <S_z^2>:
///   ds1/dt = -rho1 (s1 - s1_eq) - sigma (s2 - s2_eq)
///   ds2/dt = -rho2 (s2 - s2_eq) - sigma (s1 - s1_eq)
/// With `saturated` the second spin is clamped to 0: its value is taken as 0
/// and ds2/dt is reported as 0.
SpinDerivatives solomon_rhs(const SolomonParams& params, double s1, double s2, bool saturated);

struct SpinTrajectory {
    std::vector<double> t;
    std::vector<double> s1;
    std::vector<double> s2;
    bool spin2_saturated;
};

/// Classical fixed-step 4th-order integration of solomon_rhs. Samples at
/// every step boundary including t = 0; the last step is shortened to land
/// exactly on t_end. Requires dt <= 0.1 / max(rho1, rho2, |sigma|).
SpinTrajectory integrate(const SolomonParams& params, double s1_0, double s2_0, double t_end,
                         double dt, bool saturated);

/// Steady state of spin 1 while spin 2 is held saturated:
/// s1_eq + (sigma / rho1) * s2_eq.
double steady_state_saturated(const SolomonParams& params);

}  // namespace hbac
