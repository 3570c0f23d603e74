#pragma once

// JSON and CSV serialization of parameters, fields and reports. Object keys
// are emitted in sorted order, so equal inputs give byte-identical output.

#include <ostream>

#include "convexdom/bounds.hpp"
#include "convexdom/dominants.hpp"
#include "convexdom/verify.hpp"
#include "json.hpp"

namespace convexdom {

using Json = nlohmann::json;

Json complex_json(Complex z);
Json params_json(const ParamSet& p);
Json target_json(const AnalyticTarget& t);
Json bound_json(const BoundReport& r);
Json report_json(const VerificationReport& r);
/// a0, center gap, branch flags and grid shape of a field.
Json field_json(const DominantField& f);

/// Header r,theta,re_q,im_q,re_dq,im_dq,re_ddq,im_ddq; one row per grid point.
void write_grid_csv(const DominantField& f, std::ostream& out);
/// Header r,min_re,argmin_theta.
void write_sharpness_csv(const std::vector<SharpnessRow>& rows, std::ostream& out);

}  // namespace convexdom
