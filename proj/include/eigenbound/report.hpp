#pragma once

#include <string>

#include "eigenbound/barrier.hpp"
#include "eigenbound/bounds.hpp"
#include "eigenbound/solver.hpp"
#include "eigenbound/verifier.hpp"

namespace eigenbound {

/// Every number in CSV and report output goes through this single "%.17g"
/// format: 17 significant digits reproduce the double exactly, which keeps
/// identical inputs byte-identical on output.
std::string format_real(double value);

/// RFC-4180 style escaping: a field containing a comma, quote, or newline is
/// wrapped in double quotes with embedded quotes doubled; anything else
/// passes through untouched.
std::string csv_escape(const std::string& field);

/// Solution profile as CSV: a `# key = value` preamble carrying lambda,
/// d_tilde, method, and grid size, then `r,v,v_prime` rows. LF endings.
std::string to_csv(const RadialEigenSolution& solution);

/// Property suite as CSV: id,equation_tag,worst,threshold,passed after a
/// preamble with the grid size and tolerance.
std::string to_csv(const XiReport& report);

/// Sweep table as CSV in the fixed column order
///   label,n,K,R,d_tilde,mean_curvature,lambda_shooting,lambda_fd,
///   reilly,zhong_yang,yang,ling,
///   margin_reilly,margin_zhong_yang,margin_yang,margin_ling,
///   hyp_curvature,hyp_boundary,
///   agreement,lichnerowicz,gradient_estimate,barrier_domination,
///   integral_chain,main_theorem,error
std::string to_csv(const SweepTable& table);

/// One property per line (id, equation tag, worst, threshold, status), then
/// a PASS/FAIL summary line.
std::string to_text(const XiReport& report);

/// One check per line: id, equation tag, margin, threshold, status, note.
std::string to_text(const VerificationReport& report);

/// One sweep row per line plus a summary.
std::string to_text(const SweepTable& table);

/// The closed-form bounds applicable to the given geometry, one per line,
/// followed by the best one. Throws invalid_input for unusable geometry.
std::string bounds_report(const GeometryData& geometry);

}  // namespace eigenbound
