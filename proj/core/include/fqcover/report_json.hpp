// Copyright 2026 The fqcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FQCOVER_REPORT_JSON_HPP
#define FQCOVER_REPORT_JSON_HPP

#include <string>

#include "fqcover/bounds.hpp"
#include "fqcover/covering.hpp"
#include "fqcover/distortion.hpp"

namespace fqcover {

// JSON renderings of the report structures. Rationals are emitted as
// {"num": "...", "den": "...", "decimal": "..."} with the num/den
// strings exact and the decimal informative (12 significant digits).
// Output is deterministic: keys are sorted and all values are exact,
// so identical inputs produce byte-identical reports.

std::string cover_report_json(const CoverReport& report);
std::string distortion_report_json(const DistortionReport& report, bool include_trace);
std::string bound_certificate_json(const BoundCertificate& cert);
std::string optimize_result_json(const OptimizeResult& result);

}  // namespace fqcover

#endif  // FQCOVER_REPORT_JSON_HPP
