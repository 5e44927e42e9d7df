#include "zzi/wetting.hpp"

#include <cmath>
#include <string>

#include "zzi/angles.hpp"
#include "zzi/errors.hpp"
#include "zzi/layered.hpp"
#include "zzi/logdet.hpp"

namespace zzi::wetting {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

WettingModel WettingModel::from_q_r(double q, double r) {
    if (!(q > 0.0) || !(q < 1.0))
        throw domain_error("wetting model requires q = tan(theta) in (0, 1)");
    if (!(r > -q * q) || !(r < 1.0))
        throw domain_error("wetting model requires r in (-q^2, 1)");
    WettingModel m;
    m.q = q;
    m.r = r;
    m.theta = std::atan(q);
    const double c2 = (1.0 - r) * std::cos(m.theta) * std::cos(m.theta);
    m.theta1 = std::acos(std::sqrt(c2));
    return m;
}

WettingModel WettingModel::from_angles(double theta, double theta1) {
    check_angle(theta, 2);
    check_angle(theta1, 1);
    if (!(theta < kPi / 4.0))
        throw domain_error(
            "wetting model requires a subcritical bulk angle theta < pi/4");
    WettingModel m;
    m.theta = theta;
    m.theta1 = theta1;
    m.q = std::tan(theta);
    const double ct = std::cos(theta);
    const double c1 = std::cos(theta1);
    m.r = 1.0 - (c1 * c1) / (ct * ct);
    if (!(m.r > -m.q * m.q) || !(m.r < 1.0))
        throw domain_error("first-column angle puts r outside (-q^2, 1)");
    return m;
}

double WettingModel::zeta0() const {
    if (!(r > 0.0))
        throw domain_error("zeta0 is defined only for r > 0");
    return q * q / r;
}

double WettingModel::c_coefficient() const {
    const double q2 = q * q;
    if (!(r > q2))
        throw domain_error("c is defined only for r > q^2");
    return (r * r - q2 * q2) * std::pow(r, -1.5) /
           std::sqrt(r - q2 * q2);
}

double WettingModel::w(double t) const {
    const double q2 = q * q;
    return std::sqrt(1.0 - 2.0 * q2 * std::cos(t) + q2 * q2);
}

std::complex<double> WettingModel::xi(std::complex<double> z) const {
    const double q2 = q * q;
    if (std::fabs(r - q2) < 1e-14) {
        // Cancelled form: the z = 1 pole is removable at r = q^2.
        return (q2 * z - 1.0) / (z - q2);
    }
    if (std::fabs(r + q2) < 1e-14) {
        // Cancelled form for the removable z = -1 pole at r = -q^2.
        return -(q2 * z - 1.0) / (z - q2);
    }
    return (r * z - q2) * (q2 * z - 1.0) / ((z - q2) * (q2 * z - r));
}

FourierBank wetting_coefficients(const WettingModel& model,
                                 std::size_t s_max) {
    FourierBank bank;
    bank.alpha.assign(s_max + 1, 0.0);
    bank.beta.assign(s_max + 1, 0.0);
    bank.gamma.assign(s_max + 1, 0.0);

    std::size_t M = 1024;
    while (M < 8 * (s_max + 1))
        M *= 2;
    std::vector<double> prev_a, prev_b;
    for (;; M *= 2) {
        std::vector<double> ca(s_max + 1, 0.0), cb(s_max + 1, 0.0);
        std::vector<double> ci(s_max + 1, 0.0);
        for (std::size_t j = 0; j < M; ++j) {
            const double t = 2.0 * kPi * static_cast<double>(j) /
                             static_cast<double>(M);
            const std::complex<double> z(std::cos(t), std::sin(t));
            const double wv = model.w(t);
            const std::complex<double> xw = model.xi(z) * wv;
            for (std::size_t s = 0; s <= s_max; ++s) {
                const double cs = std::cos(static_cast<double>(s) * t);
                const double sn = std::sin(static_cast<double>(s) * t);
                ca[s] += wv * cs;
                // e^{-ist} xi(z) w: the real part integrates to beta_s;
                // the imaginary part cancels by the t -> -t symmetry and
                // is kept only as a consistency diagnostic.
                cb[s] += xw.real() * cs + xw.imag() * sn;
                ci[s] += xw.imag() * cs - xw.real() * sn;
            }
        }
        double imag_max = 0.0;
        for (std::size_t s = 0; s <= s_max; ++s) {
            ca[s] /= static_cast<double>(M);
            cb[s] /= static_cast<double>(M);
            imag_max = std::max(imag_max,
                                std::fabs(ci[s]) / static_cast<double>(M));
        }
        if (!prev_a.empty()) {
            double worst = 0.0;
            for (std::size_t s = 0; s <= s_max; ++s)
                worst = std::max({worst, std::fabs(ca[s] - prev_a[s]),
                                  std::fabs(cb[s] - prev_b[s])});
            if (worst <= 1e-11) {
                bank.alpha = std::move(ca);
                bank.beta = std::move(cb);
                bank.beta_imag_max = imag_max;
                break;
            }
        }
        prev_a = std::move(ca);
        prev_b = std::move(cb);
        if (M >= (1u << 20))
            throw numeric_error(
                "wetting_coefficients: circle quadrature did not converge");
    }

    if (model.r > model.q * model.q) {
        const double c = model.c_coefficient();
        const double z0 = model.zeta0();
        double pw = c;
        for (std::size_t s = 0; s <= s_max; ++s) {
            bank.gamma[s] = pw;
            pw *= z0;
        }
    }
    return bank;
}

double wetting_determinant(const FourierBank& bank, std::size_t m, double r,
                           bool proof_variant, double c_coeff, double zeta0) {
    if (m == 0)
        return 1.0;
    const double pref = std::pow(1.0 - r, 1.5);
    std::vector<double> a(m * m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t n = 0; n < m; ++n) {
            const std::size_t diff = k > n ? k - n : n - k;
            const std::size_t sum = k + n;
            double entry = bank.alpha[diff];
            if (proof_variant) {
                entry += bank.beta[sum];
                if (c_coeff != 0.0)
                    entry += pref * c_coeff *
                             std::pow(zeta0,
                                      static_cast<double>(sum) - 1.0);
            } else {
                entry -= bank.beta[sum];
                entry += pref * bank.gamma[sum];
            }
            a[k * m + n] = entry;
        }
    const LogDet ld = dense_logdet(std::move(a), m);
    return ld.value() / pref;
}

WettingReport wetting_magnetization(const WettingModel& model, std::size_t m,
                                    double tol) {
    if (m < 1)
        throw domain_error("wetting_magnetization requires m >= 1");
    if (m > 24)
        throw domain_error(
            "wetting determinants are limited to m <= 24 (conditioning)");

    const FourierBank bank = wetting_coefficients(model, 2 * m - 1);
    const bool bound_state = model.r > model.q * model.q;
    const double c = bound_state ? model.c_coefficient() : 0.0;
    const double z0 = bound_state ? model.zeta0() : 0.0;

    WettingReport rep;
    rep.variant_a = wetting_determinant(bank, m, model.r, false, c, z0);
    rep.variant_b = wetting_determinant(bank, m, model.r, true, c, z0);

    const AngleSequence seq =
        AngleSequence::homogeneous_with_first(model.theta1, model.theta);
    rep.reference =
        layered::magnetization(seq, m, layered::Method::Sqrt, 1e-8).value;

    const double err_a = std::fabs(rep.variant_a - rep.reference);
    const double err_b = std::fabs(rep.variant_b - rep.reference);
    if (err_a <= tol && err_a <= err_b) {
        rep.variant = 'A';
        rep.value = rep.variant_a;
        rep.mismatch = err_a;
    } else if (err_b <= tol) {
        rep.variant = 'B';
        rep.value = rep.variant_b;
        rep.mismatch = err_b;
    } else {
        std::string msg =
            "neither determinant variant matches the layered engine: "
            "A = " + std::to_string(rep.variant_a) +
            ", B = " + std::to_string(rep.variant_b) +
            ", reference = " + std::to_string(rep.reference);
        throw consistency_error(msg);
    }
    return rep;
}

CriticalFieldReport critical_field(double q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw domain_error("critical_field requires q in (0, 1)");
    const double theta = std::atan(q);
    const double c2 =
        (1.0 - q * q) * std::cos(theta) * std::cos(theta);
    CriticalFieldReport rep;
    rep.theta1 = std::acos(std::sqrt(c2));
    rep.r = q * q;
    rep.h = -std::log(std::tan(0.5 * rep.theta1));
    return rep;
}

} // namespace zzi::wetting
