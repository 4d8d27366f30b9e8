#pragma once

#include <string>
#include <vector>

#include "shadowlab/comp_op.hpp"
#include "shadowlab/halfplane.hpp"
#include "shadowlab/hardy.hpp"
#include "shadowlab/lft.hpp"
#include "shadowlab/shadowing.hpp"

// Single-header nlohmann json lives in vendor/
#include <json.hpp>

namespace shadowlab::io {

using json = nlohmann::json;

json complex_to_json(cplx z);                 // [re, im]
json ext_complex_to_json(const ExtComplex& z); // [re, im] or "inf"

json moebius_to_json(const MoebiusMap& m); // {"a":[re,im], ...}
MoebiusMap moebius_from_json(const json& j);

json taylor_to_json(const TaylorPoly& f); // array of [re, im]
std::string taylor_to_csv(const TaylorPoly& f); // "n,re,im"

std::string matrix_to_csv(const OperatorMatrix& op); // "row,col,re,im", |entry| > 1e-15
json matrix_summary_json(const OperatorMatrix& op, const SpectralEstimate& est);

/// "n,residual,value_at_alpha_re,value_at_alpha_im,lower_bound"
std::string orbit_to_csv(const PseudoOrbit& orbit, const std::vector<cplx>& value_at_alpha,
                         const std::vector<double>& lower_bounds);

json shadow_report_to_json(const ShadowReport& report);

std::string spectral_rows_to_csv(const std::vector<SpectralBoundsRow>& rows);

json gh_report_to_json(double a, const GhShadowReport& report);

/// Writes via a temporary file and rename so failures leave no partial file.
void atomic_write(const std::string& path, const std::string& content);

std::string format_double(double v); // shortest round-trip style, stable

} // namespace shadowlab::io
