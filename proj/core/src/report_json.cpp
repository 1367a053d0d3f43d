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

#include "fqcover/report_json.hpp"

#include <json.hpp>

#include "fqcover/poly_text.hpp"

namespace fqcover {

using nlohmann::json;

namespace {

json rat_json(const Rat& value) {
    return json{{"num", numerator(value).str()},
                {"den", denominator(value).str()},
                {"decimal", decimal_string(value)}};
}

const char* mode_name(PiMode mode) {
    return mode == PiMode::ExactPolynomialCounts ? "fqx" : "gff";
}

}  // namespace

std::string cover_report_json(const CoverReport& report) {
    json j;
    j["covers"] = report.covers;
    j["witness"] = report.witness ? json(to_text(*report.witness)) : json(nullptr);
    j["multiplicity"] = report.multiplicity;
    j["covered_fraction"] = rat_json(report.covered_fraction);
    j["Q"] = to_text(report.lcm);
    return j.dump(2);
}

std::string distortion_report_json(const DistortionReport& report, bool include_trace) {
    json j;
    j["Q"] = to_text(report.lcm);
    j["steps"] = json::array();
    for (const auto& s : report.steps) {
        j["steps"].push_back(json{{"step", s.step},
                                  {"prime", to_text(s.prime)},
                                  {"exponent", s.exponent},
                                  {"norm", s.norm},
                                  {"delta", rat_json(s.delta)},
                                  {"first_moment", rat_json(s.first_moment)},
                                  {"second_moment", rat_json(s.second_moment)},
                                  {"weight", rat_json(s.weight)}});
    }
    j["weighted_sum"] = rat_json(report.weighted_sum);
    j["certified_noncover"] = report.certified_noncover;
    j["uncovered_mass"] = rat_json(report.uncovered_mass);
    j["witness"] = report.witness ? json(to_text(*report.witness)) : json(nullptr);
    if (include_trace) {
        j["trace"] = json::array();
        for (const auto& state : report.trace) {
            json weights = json::array();
            for (const auto& w : state.weights) weights.push_back(rat_json(w));
            j["trace"].push_back(json{{"step", state.step}, {"weights", weights}});
        }
    }
    return j.dump(2);
}

std::string bound_certificate_json(const BoundCertificate& cert) {
    json j;
    j["params"] = json{{"q", cert.params.q},
                       {"genus", cert.params.genus},
                       {"s", cert.params.multiplicity},
                       {"t1", rat_json(cert.params.deltas.deg1)},
                       {"t2", rat_json(cert.params.deltas.deg2)},
                       {"t_rest", rat_json(cert.params.deltas.rest)},
                       {"truncation", cert.params.truncation},
                       {"mode", mode_name(cert.params.mode)}};
    j["n1_term"] = rat_json(cert.first_term.value);
    j["head_terms"] = rat_json(cert.head.value);
    j["tail"] = rat_json(cert.tail.value);
    j["total"] = rat_json(cert.total.value);
    j["passes"] = cert.passes;
    return j.dump(2);
}

std::string optimize_result_json(const OptimizeResult& result) {
    json j;
    j["t_star"] = rat_json(result.t_star);
    j["value"] = rat_json(result.value.value);
    return j.dump(2);
}

}  // namespace fqcover
