#include "graphband/csv.hpp"

#include <cstdio>

#include "graphband/errors.hpp"

namespace graphband {

std::string fmt_num(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_band_summary(std::ostream& out, const BandSpectrum& b) {
    out << "n,lambda_minus,lambda_plus,flat\n";
    for (int n = 0; n < b.nu; ++n)
        out << (n + 1) << ',' << fmt_num(b.lo[n]) << ',' << fmt_num(b.hi[n]) << ','
            << (b.flat[n] ? 1 : 0) << '\n';
}

void write_grid_table(std::ostream& out, const BandSpectrum& b) {
    if (b.table.empty())
        throw ValidationError("grid table was not retained by the sweep");
    for (int s = 0; s < b.dim; ++s) out << "theta_" << (s + 1) << ',';
    for (int n = 0; n < b.nu; ++n) out << "lambda_" << (n + 1) << (n + 1 < b.nu ? "," : "");
    out << '\n';
    for (long p = 0; p < b.num_points(); ++p) {
        const auto theta = b.theta_of(p);
        for (int s = 0; s < b.dim; ++s) out << fmt_num(theta[s]) << ',';
        for (int n = 0; n < b.nu; ++n)
            out << fmt_num(b.table[p][n]) << (n + 1 < b.nu ? "," : "");
        out << '\n';
    }
}

namespace {

void write_report(std::ostream& out, const BracketReport& report, const char* bound_name) {
    out << "n,J_lo,J_hi,K_lo,K_hi,cap_lo,cap_hi,band_lo,band_hi,included,flat_forced\n";
    for (std::size_t n = 0; n < report.bands.size(); ++n) {
        const auto& v = report.bands[n];
        out << (n + 1) << ',' << fmt_num(v.J.lo) << ',' << fmt_num(v.J.hi) << ','
            << fmt_num(v.K.lo) << ',' << fmt_num(v.K.hi) << ',' << fmt_num(v.cap.lo) << ','
            << fmt_num(v.cap.hi) << ',' << fmt_num(v.band.lo) << ',' << fmt_num(v.band.hi)
            << ',' << (v.included ? 1 : 0) << ',' << (v.flat_forced ? 1 : 0) << '\n';
    }
    out << "# " << bound_name << ',' << report.bound_case << ',' << fmt_num(report.bound)
        << '\n';
}

}  // namespace

void write_bracket_report(std::ostream& out, const BracketReport& report) {
    write_report(out, report, "total_length_bound");
}

void write_metric_report(std::ostream& out, const BracketReport& report) {
    write_report(out, report, "measure_bound");
}

void write_unfolded(std::ostream& out, const UnfoldedSpectrum& u) {
    out << "lo,hi,kind\n";
    for (const auto& iv : u.bands)
        out << fmt_num(iv.lo) << ',' << fmt_num(iv.hi) << ",band\n";
    for (double z : u.flat_points) out << fmt_num(z) << ',' << fmt_num(z) << ",flat\n";
}

void write_matrix(std::ostream& out, const Eigen::MatrixXcd& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << '"' << fmt_num(m(r, c).real()) << ',' << fmt_num(m(r, c).imag()) << '"'
                << (c + 1 < m.cols() ? "," : "");
        out << '\n';
    }
}

}  // namespace graphband
