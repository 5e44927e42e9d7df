#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

namespace zzi::sembedding {

// Tangential-quad slopes phi_0..phi_{2n-1} of the canonical embedding of a
// critical period block, from tan(phi_{k+1}) = tan^2(theta_{k+1}) tan(phi_k)
// and the balance condition sum tan(phi) = sum cot(phi).
std::vector<double> solve_slopes(const std::vector<double>& block);

// Horizontal coordinates of the two vertex families, anchored at
// t_circ[0] = anchor; t_circ[k] - t_bullet[k] = -cot(2 phi_k).
struct Embedding {
    std::vector<double> block;
    std::vector<double> phi;      // phi_0..phi_K (extended periodically)
    std::vector<double> t_bullet; // index 0..K
    std::vector<double> t_circ;   // index 0..K
};

Embedding embed(const std::vector<double>& block, std::size_t K,
                double anchor = 0.0);

// Period width through three equivalent expressions.
struct WidthReport {
    double coordinate_diff = 0.0; // t_bullet[2n] - t_bullet[0]
    double half_sum = 0.0;        // (sum tan + sum cot) / 2
    double geometric_mean = 0.0;  // sqrt(sum tan * sum cot)
    double value = 0.0;
};

WidthReport period_width(const std::vector<double>& block);

// CSV columns: k, kind in {bullet, circ}, x, phi.
void write_csv(const Embedding& e, std::ostream& os);

// Self-contained SVG: the two vertex tracks plus the inscribed circles of
// the tangential quads (radius 1/2 per the unit vertical spacing).
void write_svg(const Embedding& e, std::ostream& os);

} // namespace zzi::sembedding
