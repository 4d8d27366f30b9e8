#include "shadowlab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace shadowlab::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json ext_complex_to_json(const ExtComplex& z) {
    if (z.infinite) return json("inf");
    return complex_to_json(z.value);
}

json moebius_to_json(const MoebiusMap& m) {
    return json{{"a", complex_to_json(m.a())},
                {"b", complex_to_json(m.b())},
                {"c", complex_to_json(m.c())},
                {"d", complex_to_json(m.d())}};
}

MoebiusMap moebius_from_json(const json& j) {
    auto get = [&](const char* key) {
        const auto& v = j.at(key);
        return cplx(v.at(0).get<double>(), v.at(1).get<double>());
    };
    return MoebiusMap::make(get("a"), get("b"), get("c"), get("d"));
}

json taylor_to_json(const TaylorPoly& f) {
    json arr = json::array();
    for (int n = 0; n <= f.truncation(); ++n) arr.push_back(complex_to_json(f.coeff(n)));
    return arr;
}

std::string taylor_to_csv(const TaylorPoly& f) {
    std::string out = "n,re,im\n";
    for (int n = 0; n <= f.truncation(); ++n) {
        out += std::to_string(n) + ',' + format_double(f.coeff(n).real()) + ',' +
               format_double(f.coeff(n).imag()) + '\n';
    }
    return out;
}

std::string matrix_to_csv(const OperatorMatrix& op) {
    std::string out = "row,col,re,im\n";
    for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
            const cplx v = op.entries(r, c);
            if (std::abs(v) <= 1e-15) continue;
            out += std::to_string(r) + ',' + std::to_string(c) + ',' +
                   format_double(v.real()) + ',' + format_double(v.imag()) + '\n';
        }
    }
    return out;
}

json matrix_summary_json(const OperatorMatrix& op, const SpectralEstimate& est) {
    return json{{"norm", est.norm},
                {"spectral_radius", est.spectral_radius},
                {"truncation", op.truncation}};
}

std::string orbit_to_csv(const PseudoOrbit& orbit, const std::vector<cplx>& value_at_alpha,
                         const std::vector<double>& lower_bounds) {
    std::string out = "n,residual,value_at_alpha_re,value_at_alpha_im,lower_bound\n";
    for (size_t i = 0; i < orbit.states.size(); ++i) {
        const double residual = (i + 1 < orbit.states.size()) ? orbit.residuals[i] : 0.0;
        const cplx v = i < value_at_alpha.size() ? value_at_alpha[i] : cplx{};
        const double lb = i < lower_bounds.size() ? lower_bounds[i] : 0.0;
        out += std::to_string(i + 1) + ',' + format_double(residual) + ',' +
               format_double(v.real()) + ',' + format_double(v.imag()) + ',' +
               format_double(lb) + '\n';
    }
    return out;
}

json shadow_report_to_json(const ShadowReport& report) {
    return json{{"epsilon", report.epsilon},
                {"sup_error", report.sup_error},
                {"verdict", report.shadowed ? "shadowed" : "failed"},
                {"condition_estimate", report.condition_estimate}};
}

std::string spectral_rows_to_csv(const std::vector<SpectralBoundsRow>& rows) {
    std::string out = "n,measured_W,bound_W,measured_V,bound_V,root_W,root_V\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + format_double(r.measured_W) + ',' +
               format_double(r.bound_W) + ',' + format_double(r.measured_V) + ',' +
               format_double(r.bound_V) + ',' + format_double(r.root_W) + ',' +
               format_double(r.root_V) + '\n';
    }
    return out;
}

json gh_report_to_json(double a, const GhShadowReport& report) {
    return json{{"a", a},
                {"delta", report.delta},
                {"K", report.K},
                {"sup_error", report.sup_error}};
}

void atomic_write(const std::string& path, const std::string& content) {
    if (path.empty()) throw InvalidParameter("atomic_write: empty output path");
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidParameter("atomic_write: cannot open " + tmp.string());
        out << content;
        if (!out.good()) throw InvalidParameter("atomic_write: write failed");
    }
    fs::rename(tmp, target);
}

} // namespace shadowlab::io
