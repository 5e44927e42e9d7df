#include "zzi/oracle.hpp"

#include <cmath>
#include <string>

#include "zzi/errors.hpp"

namespace zzi::oracle {

StripSpec StripSpec::from_angles(const AngleSequence& angles,
                                 std::size_t width, std::size_t height) {
    if (width < 2 || height < 1)
        throw size_error("strip needs width >= 2 and height >= 1");
    StripSpec spec;
    spec.width = width;
    spec.height = height;
    spec.couplings.resize(width);
    for (std::size_t p = 0; p < width; ++p)
        spec.couplings[p] = betaj_from_theta(angles.theta(p + 1));
    return spec;
}

namespace {

void check_spec(const StripSpec& spec, std::size_t col, std::size_t row) {
    if (spec.width < 2 || spec.height < 1)
        throw size_error("strip needs width >= 2 and height >= 1");
    if (spec.couplings.size() != spec.width)
        throw size_error("strip needs one coupling per column gap");
    for (std::size_t p = 0; p < spec.width; ++p)
        if (!(spec.couplings[p] > 0.0) || !std::isfinite(spec.couplings[p]))
            throw domain_error("coupling for gap " + std::to_string(p) +
                               " must be finite and positive");
    if (col < 1 || col >= spec.width)
        throw size_error("measured column must be interior (1..width-1)");
    if (row >= spec.height)
        throw size_error("measured row out of range");
    if (spec.boundary_spin != 1 && spec.boundary_spin != -1)
        throw domain_error("boundary spin must be +1 or -1");
}

} // namespace

double enumerate_magnetization(const StripSpec& spec, std::size_t col,
                               std::size_t row) {
    check_spec(spec, col, row);
    const std::size_t W = spec.width, H = spec.height;
    const std::size_t free_spins = (W - 1) * H;
    if (free_spins > 24)
        throw size_error("enumeration limited to 24 free spins, got " +
                         std::to_string(free_spins));

    const long long b = spec.boundary_spin;
    auto spin = [&](unsigned long long cfg, long long p, long long i) -> double {
        if (p <= 0 || p >= static_cast<long long>(W) || i < 0 ||
            i >= static_cast<long long>(H))
            return static_cast<double>(b);
        const std::size_t idx =
            static_cast<std::size_t>(p - 1) * H + static_cast<std::size_t>(i);
        return (cfg >> idx) & 1ull ? 1.0 : -1.0;
    };

    auto energy = [&](unsigned long long cfg) {
        double e = 0.0;
        for (std::size_t p = 0; p < W; ++p) {
            const double K = spec.couplings[p];
            const long long pp = static_cast<long long>(p);
            if (p % 2 == 0) {
                // (p+1, i) couples (p, i) and (p, i+1).
                for (long long i = 0; i < static_cast<long long>(H); ++i) {
                    const double s_new = spin(cfg, pp + 1, i);
                    e += K * s_new * spin(cfg, pp, i);
                    e += K * s_new * spin(cfg, pp, i + 1);
                }
                e += K * b * spin(cfg, pp, 0); // fixed (p+1, -1) to (p, 0)
            } else {
                // (p+1, i) couples (p, i-1) and (p, i).
                for (long long i = 0; i < static_cast<long long>(H); ++i) {
                    const double s_new = spin(cfg, pp + 1, i);
                    e += K * s_new * spin(cfg, pp, i - 1);
                    e += K * s_new * spin(cfg, pp, i);
                }
                e += K * b * spin(cfg, pp, H - 1); // fixed (p+1, H) to (p, H-1)
            }
        }
        return e;
    };

    const unsigned long long all = 1ull << free_spins;
    const unsigned long long ref_cfg = b > 0 ? all - 1 : 0ull;
    const double e0 = energy(ref_cfg);
    double num = 0.0, den = 0.0;
    for (unsigned long long cfg = 0; cfg < all; ++cfg) {
        const double wgt = std::exp(energy(cfg) - e0);
        den += wgt;
        num += wgt * spin(cfg, static_cast<long long>(col),
                          static_cast<long long>(row));
    }
    return num / den;
}

namespace {

double bit_spin(std::size_t cfg, std::size_t i) {
    return (cfg >> i) & 1u ? 1.0 : -1.0;
}

void normalize(std::vector<double>& v) {
    double peak = 0.0;
    for (double x : v)
        peak = std::max(peak, std::fabs(x));
    if (peak > 0.0)
        for (double& x : v)
            x /= peak;
}

// One column step of the directional transfer product across gap p.  For
// rightward steps the vector over column-p configurations becomes the vector
// over column-(p+1) configurations; rows are replaced one at a time in the
// order that keeps the needed old-column partner spins untouched.
void column_step(std::vector<double>& v, std::size_t H, double K, double bsp,
                 std::size_t p, bool rightward) {
    const std::size_t size = v.size();
    const bool even = p % 2 == 0;

    // Bond between the fixed out-of-range spin of the new column and an
    // interior spin of the old column.
    const std::size_t pref_row = rightward == even ? 0 : H - 1;
    for (std::size_t cfg = 0; cfg < size; ++cfg)
        v[cfg] *= std::exp(K * bsp * bit_spin(cfg, pref_row));

    // Partner offset: rightward even and leftward odd read the old spin one
    // row above; rightward odd and leftward even read one row below.
    const bool partner_above = rightward ? even : !even;
    const bool ascending = partner_above;

    for (std::size_t step = 0; step < H; ++step) {
        const std::size_t i = ascending ? step : H - 1 - step;
        const std::size_t bit = 1u << i;
        for (std::size_t cfg = 0; cfg < size; ++cfg) {
            if (cfg & bit)
                continue;
            const std::size_t cfg1 = cfg | bit;
            double partner;
            if (partner_above)
                partner = i + 1 < H ? bit_spin(cfg, i + 1) : bsp;
            else
                partner = i > 0 ? bit_spin(cfg, i - 1) : bsp;
            const double v0 = v[cfg];
            const double v1 = v[cfg1];
            const double lo = v0 * std::exp(-K * (partner - 1.0)) +
                              v1 * std::exp(-K * (partner + 1.0));
            const double hi = v0 * std::exp(K * (partner - 1.0)) +
                              v1 * std::exp(K * (partner + 1.0));
            v[cfg] = lo;
            v[cfg1] = hi;
        }
    }
    normalize(v);
}

} // namespace

double transfer_matrix_magnetization(const StripSpec& spec, std::size_t col,
                                     std::size_t row) {
    check_spec(spec, col, row);
    const std::size_t H = spec.height;
    if (H > 14)
        throw size_error("transfer matrix limited to height <= 14");
    const std::size_t size = 1u << H;
    const double bsp = static_cast<double>(spec.boundary_spin);

    // Fixed boundary column: the configuration vector is an indicator.
    const std::size_t fixed_cfg = spec.boundary_spin > 0 ? size - 1 : 0;

    std::vector<double> left(size, 0.0);
    left[fixed_cfg] = 1.0;
    for (std::size_t p = 0; p < col; ++p)
        column_step(left, H, spec.couplings[p], bsp, p, true);

    std::vector<double> right(size, 0.0);
    right[fixed_cfg] = 1.0;
    for (std::size_t p = spec.width; p-- > col;)
        column_step(right, H, spec.couplings[p], bsp, p, false);

    double num = 0.0, den = 0.0;
    for (std::size_t cfg = 0; cfg < size; ++cfg) {
        const double wgt = left[cfg] * right[cfg];
        den += wgt;
        num += wgt * bit_spin(cfg, row);
    }
    if (den == 0.0)
        throw numeric_error("transfer product collapsed to zero weight");
    return num / den;
}

} // namespace zzi::oracle
