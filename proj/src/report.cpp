#include "eigenbound/report.hpp"

#include <cstdio>

namespace eigenbound {

namespace {

const char* status_of(bool passed, bool skipped) {
    if (skipped) return "skip";
    return passed ? "pass" : "fail";
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(const RadialEigenSolution& solution) {
    std::string out;
    out += "# lambda = " + format_real(solution.lambda) + "\n";
    out += "# d_tilde = " + format_real(solution.d_tilde) + "\n";
    out += "# method = " + std::string(to_string(solution.method)) + "\n";
    out += "# grid = " + std::to_string(solution.r_grid.size()) + "\n";
    out += "r,v,v_prime\n";
    for (std::size_t i = 0; i < solution.r_grid.size(); ++i) {
        out += format_real(solution.r_grid[i]);
        out += ',';
        out += format_real(solution.v[i]);
        out += ',';
        out += format_real(solution.v_prime[i]);
        out += '\n';
    }
    return out;
}

std::string to_csv(const XiReport& report) {
    std::string out;
    out += "# grid_size = " + std::to_string(report.grid_size) + "\n";
    out += "# tol = " + format_real(report.tol) + "\n";
    out += "id,equation_tag,worst,threshold,passed\n";
    for (const auto& p : report.properties) {
        out += csv_escape(p.id) + ',' + csv_escape(p.equation_tag) + ',' +
               format_real(p.worst) + ',' + format_real(p.threshold) + ',' +
               (p.passed ? "true" : "false") + '\n';
    }
    return out;
}

std::string to_csv(const SweepTable& table) {
    std::string out =
        "label,n,K,R,d_tilde,mean_curvature,lambda_shooting,lambda_fd,"
        "reilly,zhong_yang,yang,ling,"
        "margin_reilly,margin_zhong_yang,margin_yang,margin_ling,"
        "hyp_curvature,hyp_boundary,"
        "agreement,lichnerowicz,gradient_estimate,barrier_domination,"
        "integral_chain,main_theorem,error\n";
    for (const auto& row : table.rows) {
        out += csv_escape(row.label) + ',';
        out += std::to_string(row.n) + ',';
        out += format_real(row.k) + ',';
        out += format_real(row.radius) + ',';
        out += format_real(row.d_tilde) + ',';
        out += format_real(row.mean_curvature) + ',';
        out += format_real(row.lambda_shooting) + ',';
        out += format_real(row.lambda_fd) + ',';
        out += format_real(row.reilly) + ',';
        out += format_real(row.zhong_yang) + ',';
        out += format_real(row.yang) + ',';
        out += format_real(row.ling) + ',';
        out += format_real(row.margin_reilly) + ',';
        out += format_real(row.margin_zhong_yang) + ',';
        out += format_real(row.margin_yang) + ',';
        out += format_real(row.margin_ling) + ',';
        out += std::string(bool_name(row.hyp_curvature)) + ',';
        out += std::string(bool_name(row.hyp_boundary)) + ',';
        out += row.outcome_agreement + ',';
        out += row.outcome_lichnerowicz + ',';
        out += row.outcome_gradient + ',';
        out += row.outcome_domination + ',';
        out += row.outcome_chain + ',';
        out += row.outcome_main + ',';
        out += csv_escape(row.error) + '\n';
    }
    return out;
}

std::string to_text(const XiReport& report) {
    std::string out;
    out += "grid_size: " + std::to_string(report.grid_size) + "\n";
    out += "tol: " + format_real(report.tol) + "\n";
    for (const auto& p : report.properties) {
        out += "property " + p.id + " tag=" + p.equation_tag +
               " worst=" + format_real(p.worst) +
               " threshold=" + format_real(p.threshold) +
               " status=" + (p.passed ? "pass" : "fail") + "\n";
    }
    out += std::string("result: ") + (report.all_passed() ? "PASS" : "FAIL") +
           "\n";
    return out;
}

std::string to_text(const VerificationReport& report) {
    std::string out;
    out += "model: " + report.model_label + "\n";
    out += "lambda: " + format_real(report.lambda) + "\n";
    out += "lambda_fd: " + format_real(report.lambda_fd) + "\n";
    out += "delta: " + format_real(report.delta) + "\n";
    for (const auto& e : report.entries) {
        out += "check " + e.id + " tag=" + e.equation_tag +
               " margin=" + format_real(e.margin) +
               " threshold=" + format_real(e.threshold) +
               " status=" + status_of(e.passed, e.skipped);
        if (!e.note.empty()) out += " note=" + e.note;
        out += "\n";
    }
    out += std::string("result: ") + (report.all_passed() ? "PASS" : "FAIL") +
           "\n";
    return out;
}

std::string to_text(const SweepTable& table) {
    std::string out;
    for (const auto& row : table.rows) {
        out += "row " + (row.label.empty() ? "?" : row.label);
        if (!row.error.empty()) {
            out += " error=" + row.error + "\n";
            continue;
        }
        out += " lambda=" + format_real(row.lambda_shooting) +
               " ling=" + format_real(row.ling) +
               " margin_ling=" + format_real(row.margin_ling) +
               " agreement=" + row.outcome_agreement +
               " lichnerowicz=" + row.outcome_lichnerowicz +
               " gradient=" + row.outcome_gradient +
               " domination=" + row.outcome_domination +
               " chain=" + row.outcome_chain + " main=" + row.outcome_main +
               "\n";
    }
    out += std::string("result: ") + (table.all_passed() ? "PASS" : "FAIL") +
           "\n";
    return out;
}

std::string bounds_report(const GeometryData& geometry) {
    geometry.validate();
    if (!geometry.diameter && !geometry.in_diameter)
        throw invalid_input(
            "bounds: need at least one of the diameter d or in-diameter d~");
    std::string out;
    out += "n: " + std::to_string(geometry.n) + "\n";
    out += "K: " + format_real(geometry.k) + "\n";
    if (geometry.diameter) out += "d: " + format_real(*geometry.diameter) + "\n";
    if (geometry.in_diameter)
        out += "d_tilde: " + format_real(*geometry.in_diameter) + "\n";
    if (geometry.k > 0.0) {
        out += "bound reilly value=" +
               format_real(reilly_bound(geometry.n, geometry.k)) + "\n";
    }
    if (geometry.diameter) {
        out += "bound zhong_yang value=" +
               format_real(zhong_yang_bound(*geometry.diameter)) + "\n";
    }
    if (geometry.in_diameter) {
        out += "bound yang value=" +
               format_real(
                   yang_bound(geometry.n, geometry.k, *geometry.in_diameter)) +
               "\n";
        out += "bound ling value=" +
               format_real(
                   ling_bound(geometry.n, geometry.k, *geometry.in_diameter)) +
               "\n";
    }
    const BoundResult best = best_bound(geometry);
    out += "best: " + std::string(to_string(best.name)) + " = " +
           format_real(best.value) + "\n";
    return out;
}

}  // namespace eigenbound
