#include "qmaps/constructions.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmaps {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

double TwoQubitParams::theta(double t) const {
    return std::sqrt(j * t * j * t + h_minus() * t * h_minus() * t);
}

void ThreeQubitParams::validate() const {
    if (std::abs(b3) > 1.0)
        throw std::invalid_argument("ThreeQubitParams: |b3| > 1");
    if (f1 * f1 + f2 * f2 + f3 * f3 > 1.0 + default_tols().structural_zero)
        throw std::invalid_argument("ThreeQubitParams: resource Bloch norm exceeds 1");
}

AffineMap phi_pc(double j, double h, double b3, double t) {
    if (std::abs(b3) > 1.0) throw std::invalid_argument("phi_pc: |b3| > 1");
    const double th = j * t, hp = 2.0 * h * t;
    const double s = std::sin(th), c = std::cos(th);
    const double sp = std::sin(hp), cp = std::cos(hp);
    AffineMap m;
    m.tau = {0.0, 0.0, b3 * s * s};
    m.T << c * cp, -c * sp, 0.0,
           c * sp,  c * cp, 0.0,
           0.0,     0.0,    c * c;
    return m;
}

AffineMap phi_env_coherent(double j, double h, const BlochVector& b, double t) {
    if (b.norm() > 1.0 + default_tols().structural_zero)
        throw std::invalid_argument("phi_env_coherent: |b| > 1");
    const double th = j * t, hp = 2.0 * h * t;
    const double s = std::sin(th), c = std::cos(th);
    const double sp = std::sin(hp), cp = std::cos(hp);
    const double s2 = std::sin(2.0 * th);
    AffineMap m;
    m.tau = {0.0, 0.0, b.a3 * s * s};
    m.T << c * cp, -c * sp, s * (b.a1 * sp + b.a2 * cp),
           c * sp,  c * cp, s * (b.a2 * sp - b.a1 * cp),
           -0.5 * b.a2 * s2, 0.5 * b.a1 * s2, c * c;
    return m;
}

AffineMap phi_correlated(double j, double h, double b3, double c31, double c32,
                         double c_asym, double t) {
    if (std::abs(b3) > 1.0) throw std::invalid_argument("phi_correlated: |b3| > 1");
    const double th = j * t, hp = 2.0 * h * t;
    const double s = std::sin(th), c = std::cos(th);
    const double sp = std::sin(hp), cp = std::cos(hp);
    AffineMap m;
    m.tau = {s * (c31 * sp + c32 * cp),
             s * (c32 * sp - c31 * cp),
             b3 * s * s + c_asym * std::sin(2.0 * th)};
    m.T << c * cp, -c * sp, 0.0,
           c * sp,  c * cp, 0.0,
           0.0,     0.0,    c * c;
    return m;
}

FineTunedGp phi_gp_finetuned(double j, double h, const BlochVector& b, double r_g,
                             double t) {
    if (std::abs(r_g) > 1.0) throw std::invalid_argument("phi_gp_finetuned: |r_G| > 1");
    const double th = j * t;
    if (std::abs(std::sin(th) * std::cos(th)) < default_tols().structural_zero)
        throw std::domain_error("phi_gp_finetuned: theta = J*t = " + std::to_string(th) +
                                " is a multiple of pi/2; correlation terms are singular");

    AffineMap m = phi_env_coherent(j, h, b, t);
    m.tau = {-r_g * m.T(0, 2), -r_g * m.T(1, 2), r_g * (1.0 - m.T(2, 2))};

    CorrelationMatrix corr = CorrelationMatrix::Zero();
    corr(2, 0) = -b.a1 * r_g;  // c31
    corr(2, 1) = -b.a2 * r_g;  // c32
    const double c_asym = 0.5 * std::tan(th) * (r_g - b.a3);
    corr(1, 0) = c_asym;   // c21
    corr(0, 1) = -c_asym;  // c12
    return FineTunedGp{m, corr};
}

AffineMap phi_E_general(const TwoQubitParams& p, const BlochVector& b,
                        const CorrelationMatrix& c, double t) {
    const double jt = p.j * t, hm = p.h_minus() * t, hp = p.h_plus() * t;
    const double th = std::sqrt(jt * jt + hm * hm);
    const double co = std::cos(th);
    const double sp = std::sin(hp), cp = std::cos(hp);
    const double snc = sinc(th);  // sin(theta) / theta, regular at theta = 0

    AffineMap m;
    m.tau[0] = jt * snc * (c(2, 0) * sp + c(2, 1) * cp);
    m.tau[1] = jt * snc * (c(2, 1) * sp - c(2, 0) * cp);
    m.tau[2] = jt * jt * b.a3 * snc * snc +
               jt * hm * (c(0, 0) + c(1, 1)) * snc * snc +
               jt * (c(1, 0) - c(0, 1)) * snc * co;

    m.T(0, 0) = m.T(1, 1) = co * cp - hm * snc * sp;
    m.T(0, 1) = -(hm * snc * cp + co * sp);
    m.T(1, 0) = -m.T(0, 1);
    m.T(0, 2) = jt * snc * (b.a1 * sp + b.a2 * cp);
    m.T(1, 2) = jt * snc * (b.a2 * sp - b.a1 * cp);
    m.T(2, 0) = jt * (b.a1 * hm * snc * snc - b.a2 * co * snc);
    m.T(2, 1) = jt * (b.a1 * co * snc + b.a2 * hm * snc * snc);
    m.T(2, 2) = (th == 0.0) ? 1.0 : (hm * hm + jt * jt * co * co) / (th * th);
    return m;
}

AffineMap phi_gp_3qubit(const ThreeQubitParams& p, double t) {
    p.validate();
    const double a = kSqrt2 * p.j * t;
    const double s_j = std::sin(a), c_j = std::cos(a);
    const double s2j = std::sin(2.0 * a), c2j = std::cos(2.0 * a);
    const double s4j = std::sin(4.0 * a), c4j = std::cos(4.0 * a);
    const double s2h = std::sin(2.0 * p.h * t), c2h = std::cos(2.0 * p.h * t);

    const double bigA = 4.0 * (p.b3 * p.f3 + 1.0) * c2j - (p.b3 * p.f3 - 1.0) * (c4j + 3.0);
    const double omega1 = p.f1 * s2h + p.f2 * c2h;
    const double omega2 = p.f2 * s2h - p.f1 * c2h;
    const double b1 = kSqrt2 * p.b3 * s_j * s_j * s_j * c_j;
    const double b2 = kSqrt2 * s_j * c_j * c_j * c_j;
    const double phi_plus = c2h / 8.0, phi_minus = s2h / 8.0;

    AffineMap m;
    m.tau = {b1 * omega1, b1 * omega2, 0.5 * (p.b3 + p.f3) * s2j * s2j};
    m.T << bigA * phi_plus, -bigA * phi_minus, b2 * omega1,
           bigA * phi_minus, bigA * phi_plus,  b2 * omega2,
           -p.f2 * s4j / (2.0 * kSqrt2), p.f1 * s4j / (2.0 * kSqrt2), c2j * c2j;
    return m;
}

AffineMap phi_appD_general(double phi0, double phi1, double phi2, double alpha,
                           double theta, const BlochVector& b) {
    const double xi = 0.5 * (2.0 * alpha - phi0 - 2.0 * phi1 + phi2);
    const double psi_p = alpha - phi0 + phi1;
    const double psi_m = alpha + phi1 + phi2;
    const double chi = 0.5 * (phi0 + phi2);
    const double s = std::sin(theta / 2.0), c = std::cos(theta / 2.0);
    const double b1 = b.a1, b2 = b.a2, b3 = b.a3;

    AffineMap m;
    m.tau[0] = s * std::sin(chi) * (b1 * std::sin(xi) + b2 * std::cos(xi));
    m.tau[1] = s * std::sin(chi) * (b2 * std::sin(xi) - b1 * std::cos(xi));
    m.tau[2] = b3 * s * s;

    m.T(0, 0) = m.T(1, 1) =
        0.5 * c * ((b3 + 1.0) * std::cos(psi_p) - (b3 - 1.0) * std::cos(psi_m));
    m.T(0, 1) = 0.5 * c * ((b3 - 1.0) * std::sin(psi_m) - (b3 + 1.0) * std::sin(psi_p));
    m.T(1, 0) = -m.T(0, 1);
    m.T(0, 2) = s * std::cos(chi) * (b1 * std::cos(xi) - b2 * std::sin(xi));
    m.T(1, 2) = s * std::cos(chi) * (b1 * std::sin(xi) + b2 * std::cos(xi));
    m.T(2, 0) = -0.5 * std::sin(theta) * (b1 * std::cos(2.0 * phi1) + b2 * std::sin(2.0 * phi1));
    m.T(2, 1) = 0.5 * std::sin(theta) * (b1 * std::sin(2.0 * phi1) - b2 * std::cos(2.0 * phi1));
    m.T(2, 2) = c * c;
    return m;
}

std::string GpSolution::reason_str() const {
    switch (reason) {
        case Reason::sign_conflict: return "sign_conflict";
        case Reason::resource_norm_exceeded: return "resource_norm_exceeded";
        default: return "none";
    }
}

std::string GpSolution::to_json() const {
    nlohmann::json jn;
    jn["J"] = j;
    jn["f3"] = f3;
    jn["feasible"] = feasible;
    jn["infeasibility_reason"] = reason_str();
    return jn.dump();
}

GpSolution solve_gp_constraints(double b3, double r_g) {
    if (std::abs(b3) > 1.0 || std::abs(r_g) > 1.0)
        throw std::invalid_argument("solve_gp_constraints: |b3| and |r_G| must be <= 1");
    if (b3 == 0.0)
        throw std::invalid_argument("solve_gp_constraints: b3 = 0 leaves the coupling "
                                    "equation undefined");
    GpSolution sol;
    sol.f3 = 2.0 * r_g - b3;
    if (b3 * r_g >= 0.0) {
        sol.feasible = false;
        sol.reason = GpSolution::Reason::sign_conflict;
        return sol;
    }
    sol.j = std::atan(std::sqrt(-r_g / b3)) / kSqrt2;
    if (std::abs(sol.f3) > 1.0) {
        sol.feasible = false;
        sol.reason = GpSolution::Reason::resource_norm_exceeded;
        return sol;
    }
    sol.feasible = true;
    return sol;
}

}  // namespace qmaps
