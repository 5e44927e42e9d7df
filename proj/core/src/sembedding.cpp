#include "zzi/sembedding.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "zzi/errors.hpp"
#include "zzi/layered.hpp"

namespace zzi::sembedding {

namespace {

void require_critical(const std::vector<double>& block) {
    const auto rep = layered::periodic_criticality(block);
    if (!rep.critical)
        throw precondition_error(
            "s-embedding needs a critical period block (prod tan(theta) = " +
            std::to_string(rep.product) + ")");
}

} // namespace

std::vector<double> solve_slopes(const std::vector<double>& block) {
    require_critical(block);
    const std::size_t L = block.size(); // 2n

    // tan(phi_k) = tan(phi_0) prod_{p<=k} tan^2(theta_p); the balance
    // condition fixes tan^2(phi_0) = (sum of cot products)/(sum of tan
    // products).
    std::vector<double> tan_prod(L, 1.0);
    double run = 1.0;
    for (std::size_t k = 1; k < L; ++k) {
        const double t = std::tan(block[k - 1]);
        run *= t * t;
        tan_prod[k] = run;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        num += 1.0 / tan_prod[k];
        den += tan_prod[k];
    }
    const double tan_phi0 = std::sqrt(num / den);

    std::vector<double> phi(L);
    for (std::size_t k = 0; k < L; ++k)
        phi[k] = std::atan(tan_phi0 * tan_prod[k]);
    return phi;
}

Embedding embed(const std::vector<double>& block, std::size_t K,
                double anchor) {
    const std::size_t L = block.size();
    if (K < L)
        throw size_error("embed: need at least one full period of columns");
    const std::vector<double> base = solve_slopes(block);

    Embedding e;
    e.block = block;
    e.phi.resize(K + 1);
    for (std::size_t k = 0; k <= K; ++k)
        e.phi[k] = base[k % L];

    e.t_circ.resize(K + 1);
    e.t_bullet.resize(K + 1);
    e.t_circ[0] = anchor;
    e.t_bullet[0] = anchor - 1.0 / std::tan(2.0 * e.phi[0]);
    for (std::size_t k = 0; k < K; ++k) {
        const double tn = std::tan(e.phi[k + 1]) + std::tan(e.phi[k]);
        const double ct =
            1.0 / std::tan(e.phi[k + 1]) + 1.0 / std::tan(e.phi[k]);
        e.t_bullet[k + 1] = e.t_circ[k] + 0.5 * tn;
        e.t_circ[k + 1] = e.t_bullet[k] + 0.5 * ct;
    }
    return e;
}

WidthReport period_width(const std::vector<double>& block) {
    const std::vector<double> phi = solve_slopes(block);
    const Embedding e = embed(block, block.size());
    WidthReport rep;
    rep.coordinate_diff = e.t_bullet[block.size()] - e.t_bullet[0];
    double sum_tan = 0.0, sum_cot = 0.0;
    for (double p : phi) {
        sum_tan += std::tan(p);
        sum_cot += 1.0 / std::tan(p);
    }
    rep.half_sum = 0.5 * (sum_tan + sum_cot);
    rep.geometric_mean = std::sqrt(sum_tan * sum_cot);
    rep.value = rep.half_sum;
    return rep;
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_csv(const Embedding& e, std::ostream& os) {
    os << "k,kind,x,phi\n";
    for (std::size_t k = 0; k < e.t_bullet.size(); ++k) {
        os << k << ",bullet," << num(-e.t_bullet[k]) << "," << num(e.phi[k])
           << "\n";
        os << k << ",circ," << num(-e.t_circ[k]) << "," << num(e.phi[k])
           << "\n";
    }
}

void write_svg(const Embedding& e, std::ostream& os) {
    double lo = 1e300, hi = -1e300;
    for (std::size_t k = 0; k < e.t_bullet.size(); ++k) {
        lo = std::min({lo, -e.t_bullet[k], -e.t_circ[k]});
        hi = std::max({hi, -e.t_bullet[k], -e.t_circ[k]});
    }
    const double scale = 60.0;
    const double pad = 1.0;
    const double w = (hi - lo + 2 * pad) * scale;
    const double h = 4.0 * scale;
    auto X = [&](double x) { return (x - lo + pad) * scale; };
    auto Y = [&](double y) { return h - (y + 1.5) * scale; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w)
       << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w) << " "
       << num(h) << "\">\n";
    for (std::size_t k = 0; k + 1 < e.t_bullet.size(); ++k) {
        const double cx =
            -0.25 * (e.t_bullet[k] + e.t_circ[k] + e.t_bullet[k + 1] +
                     e.t_circ[k + 1]);
        os << "  <circle cx=\"" << num(X(cx)) << "\" cy=\"" << num(Y(0.5))
           << "\" r=\"" << num(0.5 * scale)
           << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t k = 0; k < e.t_bullet.size(); ++k) {
        os << "  <circle cx=\"" << num(X(-e.t_bullet[k])) << "\" cy=\""
           << num(Y(1.0))
           << "\" r=\"4\" fill=\"#000\"/>\n";
        os << "  <circle cx=\"" << num(X(-e.t_circ[k])) << "\" cy=\""
           << num(Y(0.0))
           << "\" r=\"4\" fill=\"none\" stroke=\"#000\" "
              "stroke-width=\"1.5\"/>\n";
    }
    os << "</svg>\n";
}

} // namespace zzi::sembedding
