#ifndef GRAPHBAND_CSV_HPP
#define GRAPHBAND_CSV_HPP

#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "graphband/bracketing.hpp"
#include "graphband/cattaneo.hpp"
#include "graphband/spectra.hpp"

namespace graphband {

// 12 significant digits, '.' decimal point, no locale dependence
std::string fmt_num(double x);

// n,lambda_minus,lambda_plus,flat
void write_band_summary(std::ostream& out, const BandSpectrum& b);

// theta_1..theta_d,lambda_1..lambda_nu (requires a kept table)
void write_grid_table(std::ostream& out, const BandSpectrum& b);

// n,J_lo,J_hi,K_lo,K_hi,cap_lo,cap_hi,band_lo,band_hi,included,flat_forced
// plus a trailing comment line with the total-length bound
void write_bracket_report(std::ostream& out, const BracketReport& report);

// z-variable mirror of the bracket report
void write_metric_report(std::ostream& out, const BracketReport& report);

// lo,hi,kind(band|flat)
void write_unfolded(std::ostream& out, const UnfoldedSpectrum& u);

// row-major "re,im" cells, for debugging
void write_matrix(std::ostream& out, const Eigen::MatrixXcd& m);

}  // namespace graphband

#endif
