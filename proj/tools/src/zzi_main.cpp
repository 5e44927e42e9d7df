// Command-line front end: every library computation behind one binary with
// deterministic CSV output and a JSON provenance sidecar.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zzi/angles.hpp"
#include "zzi/critical.hpp"
#include "zzi/errors.hpp"
#include "zzi/exact.hpp"
#include "zzi/homogeneous.hpp"
#include "zzi/layered.hpp"
#include "zzi/oracle.hpp"
#include "zzi/sembedding.hpp"
#include "zzi/wetting.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::string base;
    ordered_json provenance;

    explicit Output(const std::string& sub, const std::string& out_base)
        : base(out_base) {
        provenance["schema"] = 1;
        provenance["subcommand"] = sub;
        provenance["inputs"] = ordered_json::object();
        provenance["tolerances"] = ordered_json::object();
        provenance["truncations"] = ordered_json::object();
        provenance["diagnostics"] = ordered_json::object();
    }

    void write_csv(const std::string& header,
                   const std::vector<std::string>& rows) const {
        std::ofstream os(base + ".csv", std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot write " + base + ".csv");
        os << header << "\n";
        for (const auto& r : rows)
            os << r << "\n";
    }

    void write_sidecar() const {
        std::ofstream os(base + ".json", std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot write " + base + ".json");
        os << provenance.dump(2) << "\n";
    }
};

struct AngleOpts {
    std::vector<double> theta_list;
    std::vector<double> x_list;
    std::string theta_file;
    double theta_const = -1.0;
    double x_const = -1.0;
    double first = -1.0;
    bool repeat = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--theta-const", theta_const,
                        "homogeneous angle theta (radians)");
        cmd->add_option("--theta-list", theta_list,
                        "explicit angle list (radians)")
            ->delimiter(',');
        cmd->add_option("--theta-file", theta_file,
                        "file with one angle per line (radians)");
        cmd->add_option("--x-const", x_const,
                        "homogeneous weight x = tan(theta/2)");
        cmd->add_option("--x-list", x_list, "explicit weight list")
            ->delimiter(',');
        cmd->add_option("--first", first,
                        "override for the first angle (radians)");
        cmd->add_flag("--repeat", repeat,
                      "treat the list as a periodic block instead of a "
                      "finite sequence");
    }

    zzi::AngleSequence build() const {
        double tc = theta_const;
        std::vector<double> tl = theta_list;
        if (x_const >= 0.0)
            tc = zzi::theta_from_x(x_const);
        if (!x_list.empty()) {
            tl.clear();
            for (double x : x_list)
                tl.push_back(zzi::theta_from_x(x));
        }
        if (!theta_file.empty()) {
            std::ifstream is(theta_file);
            if (!is)
                throw zzi::size_error("cannot read angle file " + theta_file);
            tl.clear();
            double v;
            while (is >> v)
                tl.push_back(v);
        }
        if (tc >= 0.0) {
            if (first >= 0.0)
                return zzi::AngleSequence::homogeneous_with_first(first, tc);
            return zzi::AngleSequence::homogeneous(tc);
        }
        if (!tl.empty()) {
            if (repeat)
                return zzi::AngleSequence::periodic(tl);
            return zzi::AngleSequence::explicit_list(tl);
        }
        throw zzi::size_error(
            "no angles given: use --theta-const, --theta-list, --theta-file, "
            "--x-const or --x-list");
    }

    ordered_json describe() const {
        ordered_json j;
        if (theta_const >= 0.0)
            j["theta_const"] = theta_const;
        if (!theta_list.empty())
            j["theta_list"] = theta_list;
        if (!theta_file.empty())
            j["theta_file"] = theta_file;
        if (x_const >= 0.0)
            j["x_const"] = x_const;
        if (!x_list.empty())
            j["x_list"] = x_list;
        if (first >= 0.0)
            j["first"] = first;
        j["repeat"] = repeat;
        return j;
    }
};

int thread_cap() {
    const char* env = std::getenv("ZZI_THREADS");
    if (!env)
        return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument(
            "ZZI_THREADS must be a positive integer, got '" +
            std::string(env) + "'");
    return static_cast<int>(v);
}

// ---------------------------------------------------------------- commands

struct MagnetizationCmd {
    AngleOpts angles;
    std::size_t m_max = 4;
    long long m_single = -1;
    std::string method = "sqrt";
    double tol = 1e-8;
    std::size_t n_trunc = 0;
    std::string out = "zzi-magnetization";

    int run() const {
        Output o("magnetization", out);
        o.provenance["inputs"] = angles.describe();
        o.provenance["inputs"]["m_max"] = m_max;
        o.provenance["inputs"]["method"] = method;
        o.provenance["tolerances"]["tol"] = tol;
        const zzi::AngleSequence seq = angles.build();

        std::vector<zzi::layered::Method> methods;
        if (method == "sqrt")
            methods = {zzi::layered::Method::Sqrt};
        else if (method == "polar")
            methods = {zzi::layered::Method::Polar};
        else if (method == "hankel")
            methods = {zzi::layered::Method::Hankel};
        else if (method == "all")
            methods = {zzi::layered::Method::Sqrt,
                       zzi::layered::Method::Hankel,
                       zzi::layered::Method::Polar};
        else
            throw CLI::ValidationError("--method",
                                       "must be sqrt, polar, hankel or all");

        std::vector<std::string> rows;
        std::size_t max_n = 0;
        const std::size_t lo = m_single >= 0 ? m_single : 0;
        const std::size_t hi = m_single >= 0 ? m_single : m_max;
        for (std::size_t m = lo; m <= hi; ++m)
            for (auto meth : methods) {
                const auto rep =
                    zzi::layered::magnetization(seq, m, meth, tol, n_trunc);
                max_n = std::max(max_n, rep.truncation);
                rows.push_back(std::to_string(m) + "," + fmt(rep.value) +
                               "," + zzi::layered::method_name(meth) + "," +
                               std::to_string(rep.truncation) + "," +
                               fmt(rep.est_error));
            }
        o.provenance["truncations"]["max_N"] = max_n;
        o.write_csv("m,value,method,truncation,est_error", rows);
        o.write_sidecar();
        std::cout << "wrote " << out << ".csv and " << out << ".json\n";
        return 0;
    }
};

struct HomogeneousCmd {
    double th = -1.0, tv = -1.0;
    std::size_t m_max = 100;
    std::string out = "zzi-homogeneous";

    int run() const {
        Output o("homogeneous", out);
        o.provenance["inputs"]["th"] = th;
        o.provenance["inputs"]["tv"] = tv;
        o.provenance["inputs"]["m_max"] = m_max;

        namespace h = zzi::homogeneous;
        const auto prod = h::subcritical_product(th, tv, m_max);
        std::vector<std::string> rows;
        for (std::size_t m = 0; m < prod.values.size(); ++m)
            rows.push_back(std::to_string(m) + "," + fmt(prod.values[m]));
        o.write_csv("m,telescoped_product", rows);

        const double koy = h::koy_magnetization(th, tv);
        auto& d = o.provenance["diagnostics"];
        d["koy_magnetization"] = koy;
        d["telescoped_limit"] = prod.limit;
        d["limit_fourth_root"] = std::pow(prod.limit, 0.25);
        d["koy_fourth_power"] = std::pow(koy, 4.0);
        d["szego_G_product"] = h::szego_G(th, tv);
        d["szego_G_trig"] = h::szego_G_trig(th, tv);
        d["szego_G_expsum"] = h::szego_G_expsum(th, tv);
        d["energy_density"] = h::energy_density(th, tv);
        o.write_sidecar();
        std::cout << "KOY magnetization " << fmt(koy) << "; wrote " << out
                  << ".csv and " << out << ".json\n";
        return 0;
    }
};

struct CriticalChainCmd {
    double theta = -1.0;
    std::size_t n_max = 30;
    std::string out = "zzi-critical-chain";

    int run() const {
        Output o("critical-chain", out);
        o.provenance["inputs"]["theta"] = theta;
        o.provenance["inputs"]["n_max"] = n_max;

        const auto ch = zzi::critical::critical_correlations(theta, n_max);
        const double cs = zzi::critical::c_sigma();
        std::vector<std::string> rows;
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::string row = std::to_string(n) + "," + fmt(ch.d[n]) + "," +
                              fmt(ch.l[n]) + ",";
            row += n < n_max ? fmt(ch.a[n]) : std::string();
            row += ",";
            row += n >= 1 ? fmt(ch.b[n]) : std::string();
            row += ",";
            row += n >= 1 ? fmt(ch.d_tilde[n]) : std::string();
            row += ",";
            if (n >= 1) {
                const double ratio =
                    ch.d[n] *
                    std::pow(2.0 * static_cast<double>(n) * std::cos(theta),
                             0.25) /
                    (cs * cs);
                row += fmt(ratio);
            }
            rows.push_back(row);
        }
        o.write_csv("n,D,L,A,B,D_tilde,asymptote_ratio", rows);
        o.provenance["diagnostics"]["c_sigma"] = cs;
        o.write_sidecar();
        std::cout << "wrote " << out << ".csv and " << out << ".json\n";
        return 0;
    }
};

struct ExactCriticalCmd {
    std::size_t n_max = 10;
    std::string out = "zzi-exact-critical";

    int run() const {
        Output o("exact-critical", out);
        o.provenance["inputs"]["n_max"] = n_max;
        namespace e = zzi::exact;
        std::vector<std::string> rows;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const double mhalf = e::half_integer_magnetization(
                2 * static_cast<long long>(n) - 1);
            rows.push_back(std::to_string(n) + "," + fmt(e::wu_diagonal(n)) +
                           "," + fmt(e::zigzag_magnetization_exact(n)) + "," +
                           fmt(mhalf));
        }
        o.write_csv("n,D,M,M_minus_half", rows);
        o.write_sidecar();
        std::cout << "wrote " << out << ".csv and " << out << ".json\n";
        return 0;
    }
};

struct WettingCmd {
    double q = -1.0, r = 0.0;
    std::size_t m_max = 5;
    double tol = 1e-5;
    std::string out = "zzi-wetting";

    int run() const {
        Output o("wetting", out);
        o.provenance["inputs"]["q"] = q;
        o.provenance["inputs"]["r"] = r;
        o.provenance["inputs"]["m_max"] = m_max;
        o.provenance["tolerances"]["tol"] = tol;

        const auto model = zzi::wetting::WettingModel::from_q_r(q, r);
        std::vector<std::string> rows;
        for (std::size_t m = 1; m <= m_max; ++m) {
            const auto rep = zzi::wetting::wetting_magnetization(model, m, tol);
            rows.push_back(std::to_string(m) + "," + fmt(rep.value) + "," +
                           std::string(1, rep.variant) + "," +
                           fmt(rep.variant_a) + "," + fmt(rep.variant_b) +
                           "," + fmt(rep.reference) + "," +
                           fmt(rep.mismatch));
        }
        o.write_csv("m,value,variant,variant_a,variant_b,reference,mismatch",
                    rows);
        const auto cf = zzi::wetting::critical_field(q);
        auto& d = o.provenance["diagnostics"];
        d["theta"] = model.theta;
        d["theta1"] = model.theta1;
        d["critical_field_h"] = cf.h;
        d["critical_field_r"] = cf.r;
        o.write_sidecar();
        std::cout << "wrote " << out << ".csv and " << out << ".json\n";
        return 0;
    }
};

struct IdsCmd {
    std::vector<double> block;
    std::size_t periods = 128;
    double lambda_max = 0.05;
    std::size_t grid_size = 640;
    std::string out = "zzi-ids";

    int run() const {
        Output o("ids", out);
        o.provenance["inputs"]["block"] = block;
        o.provenance["inputs"]["periods"] = periods;
        o.provenance["inputs"]["lambda_max"] = lambda_max;
        o.provenance["inputs"]["grid_size"] = grid_size;

        std::vector<double> grid(grid_size);
        for (std::size_t j = 0; j < grid_size; ++j)
            grid[j] = lambda_max * static_cast<double>(j + 1) /
                      static_cast<double>(grid_size);
        const auto rep = zzi::layered::ids_empirical(block, periods, grid);
        std::vector<std::string> rows;
        for (std::size_t j = 0; j < grid.size(); ++j)
            rows.push_back(fmt(rep.lambdas[j]) + "," + fmt(rep.ids[j]));
        o.write_csv("lambda,ids", rows);

        const double cj = zzi::layered::cj_constant(block);
        auto& d = o.provenance["diagnostics"];
        d["fitted_slope"] = rep.slope;
        d["cj_constant"] = cj;
        d["slope_over_cj"] = rep.slope / cj;
        o.write_sidecar();
        std::cout << "fitted slope " << fmt(rep.slope) << " (C_J = "
                  << fmt(cj) << "); wrote " << out << ".csv and " << out
                  << ".json\n";
        return 0;
    }
};

struct SembeddingCmd {
    std::vector<double> block;
    std::size_t columns = 0;
    std::string out = "zzi-sembedding";

    int run() const {
        Output o("sembedding", out);
        o.provenance["inputs"]["block"] = block;
        const std::size_t K = columns ? columns : 4 * block.size();
        o.provenance["inputs"]["columns"] = K;

        const auto e = zzi::sembedding::embed(block, K);
        std::ostringstream csv;
        zzi::sembedding::write_csv(e, csv);
        {
            std::ofstream os(out + ".csv", std::ios::binary);
            os << csv.str();
        }
        {
            std::ofstream os(out + ".svg", std::ios::binary);
            zzi::sembedding::write_svg(e, os);
        }
        const auto w = zzi::sembedding::period_width(block);
        auto& d = o.provenance["diagnostics"];
        d["width_coordinate_diff"] = w.coordinate_diff;
        d["width_half_sum"] = w.half_sum;
        d["width_geometric_mean"] = w.geometric_mean;
        d["n_times_cj"] = static_cast<double>(block.size() / 2) *
                          zzi::layered::cj_constant(block);
        o.write_sidecar();
        std::cout << "period width " << fmt(w.value) << "; wrote " << out
                  << ".csv, " << out << ".svg and " << out << ".json\n";
        return 0;
    }
};

struct OracleCmd {
    AngleOpts angles;
    std::size_t width = 20;
    std::size_t height = 10;
    std::size_t col = 2;
    long long row = -1;
    std::vector<std::size_t> h_scan;
    std::string out = "zzi-oracle";

    int run() const {
        Output o("oracle", out);
        o.provenance["inputs"] = angles.describe();
        o.provenance["inputs"]["width"] = width;
        o.provenance["inputs"]["col"] = col;

        const zzi::AngleSequence seq = angles.build();
        std::vector<std::size_t> heights =
            h_scan.empty() ? std::vector<std::size_t>{height} : h_scan;
        std::vector<std::string> rows;
        double last = 0.0;
        for (std::size_t H : heights) {
            const std::size_t rr =
                row >= 0 ? static_cast<std::size_t>(row) : H / 2;
            const auto spec =
                zzi::oracle::StripSpec::from_angles(seq, width, H);
            last = zzi::oracle::transfer_matrix_magnetization(spec, col, rr);
            rows.push_back(std::to_string(H) + "," + std::to_string(width) +
                           "," + std::to_string(col) + "," +
                           std::to_string(rr) + "," + fmt(last));
        }
        o.write_csv("height,width,col,row,value", rows);

        auto& d = o.provenance["diagnostics"];
        d["last_value"] = last;
        if (col % 2 == 0 &&
            seq.kind() != zzi::AngleKind::ExplicitList) {
            const auto rep = zzi::layered::magnetization(
                seq, col / 2, zzi::layered::Method::Sqrt, 1e-8);
            d["layered_reference"] = rep.value;
            d["deviation"] = std::fabs(rep.value - last);
        }
        o.write_sidecar();
        std::cout << "wrote " << out << ".csv and " << out << ".json\n";
        return 0;
    }
};

struct CrosscheckCmd {
    std::string suite = "keystone";
    std::size_t m_max = 6;
    std::size_t count = 5;
    unsigned seed = 12345;
    double q = 0.5, r = 0.3;
    double tol = 1e-4;
    bool tol_set = false;
    std::string out = "zzi-crosscheck";

    int run() const {
        Output o("crosscheck", out);
        o.provenance["inputs"]["suite"] = suite;
        o.provenance["inputs"]["m_max"] = m_max;

        std::vector<std::string> rows;
        bool all_ok = true;
        if (suite == "keystone") {
            const double use_tol = tol_set ? tol : 1e-4;
            o.provenance["tolerances"]["tol"] = use_tol;
            const auto seq = zzi::AngleSequence::homogeneous(
                0.78539816339744831);
            for (std::size_t m = 0; m <= m_max; ++m) {
                const double lhs = zzi::layered::magnetization(
                                       seq, m, zzi::layered::Method::Sqrt,
                                       1e-6)
                                       .value;
                const double rhs = zzi::exact::zigzag_magnetization_exact(m);
                const bool ok = std::fabs(lhs - rhs) <= use_tol;
                all_ok = all_ok && ok;
                rows.push_back(std::to_string(m) + "," + fmt(lhs) + "," +
                               fmt(rhs) + "," + fmt(std::fabs(lhs - rhs)) +
                               "," + (ok ? "1" : "0"));
            }
            o.write_csv("m,spectral,closed_form,abs_diff,ok", rows);
        } else if (suite == "methods") {
            const double use_tol = tol_set ? tol : 1e-6;
            o.provenance["tolerances"]["tol"] = use_tol;
            o.provenance["inputs"]["count"] = count;
            o.provenance["inputs"]["seed"] = seed;
            std::mt19937 rng(seed);
            std::uniform_real_distribution<double> dist(0.15, 1.42);
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<double> block(4);
                for (double& th : block)
                    th = dist(rng);
                const auto seq = zzi::AngleSequence::periodic(block);
                std::uniform_int_distribution<std::size_t> mdist(1, m_max);
                const std::size_t m = mdist(rng);
                const double vs = zzi::layered::magnetization(
                                      seq, m, zzi::layered::Method::Sqrt,
                                      1e-7)
                                      .value;
                const double vh = zzi::layered::magnetization(
                                      seq, m, zzi::layered::Method::Hankel,
                                      1e-7)
                                      .value;
                const double vp = zzi::layered::magnetization(
                                      seq, m, zzi::layered::Method::Polar,
                                      1e-7)
                                      .value;
                const double spread =
                    std::max({std::fabs(vs - vh), std::fabs(vs - vp),
                              std::fabs(vh - vp)});
                const bool ok = spread <= use_tol;
                all_ok = all_ok && ok;
                rows.push_back(std::to_string(i) + "," + std::to_string(m) +
                               "," + fmt(vs) + "," + fmt(vh) + "," + fmt(vp) +
                               "," + fmt(spread) + "," + (ok ? "1" : "0"));
            }
            o.write_csv("trial,m,sqrt,hankel,polar,max_spread,ok", rows);
        } else if (suite == "wetting") {
            const double use_tol = tol_set ? tol : 1e-5;
            o.provenance["tolerances"]["tol"] = use_tol;
            o.provenance["inputs"]["q"] = q;
            o.provenance["inputs"]["r"] = r;
            const auto model = zzi::wetting::WettingModel::from_q_r(q, r);
            for (std::size_t m = 1; m <= m_max; ++m) {
                const auto rep =
                    zzi::wetting::wetting_magnetization(model, m, use_tol);
                const bool ok = rep.mismatch <= use_tol;
                all_ok = all_ok && ok;
                rows.push_back(std::to_string(m) + "," + fmt(rep.value) +
                               "," + fmt(rep.reference) + "," +
                               fmt(rep.mismatch) + "," + (ok ? "1" : "0"));
            }
            o.write_csv("m,determinant,layered,abs_diff,ok", rows);
        } else {
            throw CLI::ValidationError(
                "--suite", "must be keystone, methods or wetting");
        }
        o.provenance["diagnostics"]["all_ok"] = all_ok;
        o.write_sidecar();
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED")
                  << "; wrote " << out << ".csv and " << out << ".json\n";
        if (!all_ok)
            throw zzi::consistency_error("crosscheck suite '" + suite +
                                         "' failed");
        return 0;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"layered Ising magnetization and correlation toolkit"};
    app.require_subcommand(1);

    MagnetizationCmd mag;
    auto* c_mag = app.add_subcommand(
        "magnetization", "column magnetization of a layered half-plane");
    mag.angles.attach(c_mag);
    c_mag->add_option("--m-max", mag.m_max, "largest column index m");
    c_mag->add_option("--m", mag.m_single, "single column index");
    c_mag->add_option("--method", mag.method, "sqrt | polar | hankel | all");
    c_mag->add_option("--tol", mag.tol, "truncation tolerance");
    c_mag->add_option("--n-trunc", mag.n_trunc, "fixed truncation override");
    c_mag->add_option("--out", mag.out, "output base path");

    HomogeneousCmd hom;
    auto* c_hom = app.add_subcommand(
        "homogeneous", "straight-lattice subcritical products and KOY");
    c_hom->add_option("--th", hom.th, "horizontal angle")->required();
    c_hom->add_option("--tv", hom.tv, "vertical angle")->required();
    c_hom->add_option("--m-max", hom.m_max, "telescoped product length");
    c_hom->add_option("--out", hom.out, "output base path");

    CriticalChainCmd cch;
    auto* c_cch = app.add_subcommand("critical-chain",
                                     "critical-line correlation chain");
    c_cch->add_option("--theta", cch.theta, "critical-line angle")->required();
    c_cch->add_option("--n-max", cch.n_max, "chain length");
    c_cch->add_option("--out", cch.out, "output base path");

    ExactCriticalCmd exc;
    auto* c_exc = app.add_subcommand("exact-critical",
                                     "closed-form factorial values");
    c_exc->add_option("--n-max", exc.n_max, "largest index");
    c_exc->add_option("--out", exc.out, "output base path");

    WettingCmd wet;
    auto* c_wet =
        app.add_subcommand("wetting", "boundary-field magnetization");
    c_wet->add_option("--q", wet.q, "bulk parameter q = tan(theta)")
        ->required();
    c_wet->add_option("--r", wet.r, "boundary parameter r")->required();
    c_wet->add_option("--m-max", wet.m_max, "largest column index");
    c_wet->add_option("--tol", wet.tol, "cross-engine tolerance");
    c_wet->add_option("--out", wet.out, "output base path");

    IdsCmd ids;
    auto* c_ids = app.add_subcommand(
        "ids", "integrated density of states of a critical periodic block");
    c_ids->add_option("--block", ids.block, "period block angles")
        ->required()
        ->delimiter(',');
    c_ids->add_option("--periods", ids.periods, "number of periods");
    c_ids->add_option("--lambda-max", ids.lambda_max, "grid upper end");
    c_ids->add_option("--grid-size", ids.grid_size, "grid resolution");
    c_ids->add_option("--out", ids.out, "output base path");

    SembeddingCmd sem;
    auto* c_sem =
        app.add_subcommand("sembedding", "canonical embedding coordinates");
    c_sem->add_option("--block", sem.block, "critical period block")
        ->required()
        ->delimiter(',');
    c_sem->add_option("--columns", sem.columns, "columns to generate");
    c_sem->add_option("--out", sem.out, "output base path");

    OracleCmd orc;
    auto* c_orc = app.add_subcommand(
        "oracle", "finite-strip transfer-matrix magnetization");
    orc.angles.attach(c_orc);
    c_orc->add_option("--width", orc.width, "number of column gaps");
    c_orc->add_option("--height", orc.height, "spins per column");
    c_orc->add_option("--col", orc.col, "measured column");
    c_orc->add_option("--row", orc.row, "measured row (default mid)");
    c_orc->add_option("--h-scan", orc.h_scan, "heights for a convergence scan")
        ->delimiter(',');
    c_orc->add_option("--out", orc.out, "output base path");

    CrosscheckCmd crs;
    auto* c_crs = app.add_subcommand(
        "crosscheck", "cross-path agreement suites (exit 4 on mismatch)");
    c_crs->add_option("--suite", crs.suite, "keystone | methods | wetting");
    c_crs->add_option("--m-max", crs.m_max, "largest column index");
    c_crs->add_option("--count", crs.count, "number of random trials");
    c_crs->add_option("--seed", crs.seed, "random seed");
    c_crs->add_option("--q", crs.q, "wetting q");
    c_crs->add_option("--r", crs.r, "wetting r");
    c_crs->add_option("--tol", crs.tol, "agreement tolerance")
        ->each([&crs](const std::string&) { crs.tol_set = true; });
    c_crs->add_option("--out", crs.out, "output base path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        (void)thread_cap(); // validated; computations are single-threaded
        if (c_mag->parsed())
            return mag.run();
        if (c_hom->parsed())
            return hom.run();
        if (c_cch->parsed())
            return cch.run();
        if (c_exc->parsed())
            return exc.run();
        if (c_wet->parsed())
            return wet.run();
        if (c_ids->parsed())
            return ids.run();
        if (c_sem->parsed())
            return sem.run();
        if (c_orc->parsed())
            return orc.run();
        if (c_crs->parsed())
            return crs.run();
    } catch (const zzi::consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 4;
    } catch (const zzi::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const zzi::conditioning_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const zzi::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const zzi::size_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const zzi::precondition_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
