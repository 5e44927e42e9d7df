#include "zzi/homogeneous.hpp"

#include <cmath>
#include <string>

#include "zzi/angles.hpp"
#include "zzi/errors.hpp"

namespace zzi::homogeneous {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_angles(double th, double tv) {
    check_angle(th, 1);
    check_angle(tv, 2);
}

bool is_critical(double th, double tv) {
    return std::fabs(th + tv - kPi / 2.0) < 1e-12;
}

void require_subcritical(double th, double tv, const char* what) {
    if (!(th + tv < kPi / 2.0))
        throw domain_error(std::string(what) +
                           " requires the subcritical regime th + tv < pi/2");
}

} // namespace

double CircleWeight::operator()(double t) const {
    const double u = 1.0 - std::sin(th) * std::cos(tv) * std::cos(t);
    const double v = std::cos(th) * std::sin(tv);
    const double sq = u * u - v * v;
    const double w = std::sqrt(sq > 0.0 ? sq : 0.0);
    return dual ? 1.0 / w : w;
}

CircleWeight make_weight(double th, double tv, bool dual) {
    check_angles(th, tv);
    if (dual && is_critical(th, tv))
        throw domain_error(
            "reciprocal weight is not integrable at th + tv = pi/2");
    return CircleWeight{th, tv, dual};
}

double q_minus_sq(double th, double tv) {
    return std::tan(0.5 * th) * std::tan(kPi / 4.0 - 0.5 * tv);
}

double q_plus_sq(double th, double tv) {
    return std::tan(0.5 * th) * std::tan(kPi / 4.0 + 0.5 * tv);
}

double weight_scale_C(double th, double tv) {
    const double c = std::cos(0.5 * th);
    return c * c * std::cos(tv);
}

std::vector<double> fourier_moments(const std::function<double(double)>& f,
                                    std::size_t S) {
    std::size_t M = 512;
    while (M < 4 * (S + 1))
        M *= 2;
    std::vector<double> prev;
    for (; M <= (1u << 21); M *= 2) {
        std::vector<double> c(S + 1, 0.0);
        for (std::size_t j = 0; j < M; ++j) {
            const double t = 2.0 * kPi * static_cast<double>(j) /
                             static_cast<double>(M);
            const double fv = f(t);
            for (std::size_t s = 0; s <= S; ++s)
                c[s] += fv * std::cos(static_cast<double>(s) * t);
        }
        for (std::size_t s = 0; s <= S; ++s)
            c[s] /= static_cast<double>(M);
        if (!prev.empty()) {
            double worst = 0.0;
            for (std::size_t s = 0; s <= S; ++s)
                worst = std::max(worst, std::fabs(c[s] - prev[s]));
            if (worst <= 1e-13)
                return c;
        }
        prev = std::move(c);
    }
    throw numeric_error(
        "fourier_moments: trapezoid rule did not stabilize to 1e-13");
}

std::vector<double> weight_fourier_moments(const CircleWeight& w,
                                           std::size_t S) {
    if (w.dual && is_critical(w.th, w.tv))
        throw domain_error(
            "reciprocal weight is not integrable at th + tv = pi/2");
    return fourier_moments([&w](double t) { return w(t); }, S);
}

OPUCState verblunsky(const std::vector<double>& c, std::size_t n) {
    if (c.size() < n + 1)
        throw size_error("verblunsky: need cosine coefficients up to order " +
                         std::to_string(n));
    if (!(c[0] > 0.0))
        throw conditioning_error("verblunsky: c_0 must be positive");

    OPUCState st;
    st.alpha.resize(n);
    st.beta.resize(n + 1);
    st.beta[0] = c[0];

    // Monic Phi_k stored as real coefficient vectors; the inner product is
    // <z^j, z^k> = c_{|j-k|}.
    std::vector<double> phi{1.0};
    for (std::size_t k = 0; k < n; ++k) {
        double num = 0.0; // <z Phi_k, 1> = sum_j phi_j c_{j+1}
        for (std::size_t j = 0; j <= k; ++j)
            num += phi[j] * c[j + 1];
        const double alpha = num / st.beta[k];
        const double gap = 1.0 - alpha * alpha;
        if (gap < 1e-13)
            throw conditioning_error(
                "verblunsky recursion lost positivity at step " +
                std::to_string(k) + " (1 - alpha^2 = " + std::to_string(gap) +
                ")");
        st.alpha[k] = alpha;
        st.beta[k + 1] = st.beta[k] * gap;
        // Phi_{k+1} = z Phi_k - alpha Phi_k^* (reversed coefficients).
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t j = 0; j <= k + 1; ++j) {
            double v = j >= 1 ? phi[j - 1] : 0.0;
            if (j <= k)
                v -= alpha * phi[k - j];
            next[j] = v;
        }
        phi = std::move(next);
    }
    return st;
}

SubcriticalProducts subcritical_product(double th, double tv,
                                        std::size_t m_max) {
    check_angles(th, tv);
    require_subcritical(th, tv, "subcritical_product");

    const std::size_t n_primal = 2 * m_max; // beta_0..beta_{2m-1}
    const std::size_t n_dual = 2 * m_max + 2;
    const CircleWeight w = make_weight(th, tv, false);
    const CircleWeight wd = make_weight(th, tv, true);
    const OPUCState primal =
        verblunsky(weight_fourier_moments(w, n_primal + 1), n_primal);
    const OPUCState dual =
        verblunsky(weight_fourier_moments(wd, n_dual + 1), n_dual);

    SubcriticalProducts out;
    out.L0 = std::cos(tv);
    out.L0star = std::sin(th);
    const double factor = out.L0 * out.L0 - out.L0star * out.L0star;
    out.values.resize(m_max + 1);

    double prod_dual = 1.0; // prod_{k=0}^{2m+1} beta#_k
    for (std::size_t k = 0; k <= 1; ++k)
        prod_dual *= dual.beta[k];
    double prod_primal = 1.0; // prod_{k=0}^{2m-1} beta_k (empty at m = 0)
    out.values[0] = prod_dual * prod_primal * factor;
    for (std::size_t m = 1; m <= m_max; ++m) {
        prod_dual *= dual.beta[2 * m] * dual.beta[2 * m + 1];
        prod_primal *= primal.beta[2 * m - 2] * primal.beta[2 * m - 1];
        out.values[m] = prod_dual * prod_primal * factor;
    }
    out.limit = out.values[m_max];
    return out;
}

double koy_magnetization(double th, double tv) {
    check_angles(th, tv);
    const double k = std::tan(th) * std::tan(tv);
    if (!(k < 1.0))
        throw domain_error(
            "spontaneous magnetization vanishes for tan(th) tan(tv) >= 1");
    return std::pow(1.0 - k * k, 0.125);
}

double szego_G(double th, double tv) {
    check_angles(th, tv);
    require_subcritical(th, tv, "szego_G");
    const double qm = q_minus_sq(th, tv);
    const double qp = q_plus_sq(th, tv);
    const double prod = (1.0 - qm * qm) * (1.0 - qp * qp) *
                        (1.0 - qm * qp) * (1.0 - qm * qp);
    return std::pow(prod, -0.25);
}

double szego_G_trig(double th, double tv) {
    check_angles(th, tv);
    require_subcritical(th, tv, "szego_G");
    const double ch = std::cos(0.5 * th);
    return ch * ch * std::sqrt(std::cos(tv) / std::cos(th)) *
           std::pow(std::cos(th + tv) * std::cos(th - tv), -0.25);
}

double szego_G_expsum(double th, double tv) {
    check_angles(th, tv);
    require_subcritical(th, tv, "szego_G");
    const double qm = q_minus_sq(th, tv);
    const double qp = q_plus_sq(th, tv);
    double sum = 0.0;
    double pm = 1.0, pp = 1.0; // q_-^{2k}, q_+^{2k}
    for (std::size_t k = 1; k <= 100000; ++k) {
        pm *= qm;
        pp *= qp;
        const double term = (pm + pp) * (pm + pp) / (4.0 * k);
        sum += term;
        if (term < 1e-18)
            break;
    }
    // exp[+sum]: expanding -1/4 log[(1-q_-^4)(1-q_+^4)(1-q_-^2 q_+^2)^2]
    // in powers of q gives +(q_-^{2k} + q_+^{2k})^2 / (4k) termwise.
    return std::exp(sum);
}

double energy_density(double th, double tv) {
    check_angles(th, tv);
    if (is_critical(th, tv))
        throw domain_error(
            "energy density needs the reciprocal weight, which is not "
            "integrable at th + tv = pi/2");
    const CircleWeight wd = make_weight(th, tv, true);
    const OPUCState dual = verblunsky(weight_fourier_moments(wd, 2), 1);
    return dual.beta[0] * (std::cos(tv) - dual.alpha[0] * std::sin(th));
}

} // namespace zzi::homogeneous
