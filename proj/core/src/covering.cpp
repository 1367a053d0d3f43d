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

#include "fqcover/covering.hpp"

#include <map>
#include <sstream>

#include "fqcover/errors.hpp"
#include "fqcover/poly_text.hpp"

namespace fqcover {

Congruence make_congruence(const FqPoly& residue, const FqPoly& modulus) {
    if (modulus.is_zero()) throw DivisionByZeroPoly("congruence modulus must be nonzero");
    if (degree_nonzero(modulus) < 1)
        throw ConstantPolynomial("congruence modulus must have degree >= 1; a unit modulus covers trivially");
    FqPoly m = monic(modulus);
    return Congruence{rem(residue, m), m};
}

CoveringInstance make_instance(Field field, std::vector<Congruence> congruences) {
    if (congruences.empty()) throw DomainError("a covering instance needs at least one congruence");
    for (const auto& c : congruences) {
        if (!same_field(*c.modulus.field(), *field))
            throw DomainError("congruence field does not match the instance field");
    }
    return CoveringInstance{std::move(field), std::move(congruences)};
}

FqPoly lcm_modulus(const CoveringInstance& instance) {
    FqPoly acc = FqPoly::one(instance.field);
    for (const auto& c : instance.congruences) acc = lcm_monic(acc, c.modulus);
    return acc;
}

int multiplicity(const CoveringInstance& instance) {
    std::map<std::vector<FqElem>, int> counts;
    int best = 0;
    for (const auto& c : instance.congruences) best = std::max(best, ++counts[c.modulus.coeffs()]);
    return best;
}

namespace {

// Marks every residue index mod Q hit by the congruence. Residues in
// the class a + (m) are a + t*m for t ranging over all polynomials of
// degree < deg Q - deg m.
void mark_covered(const Congruence& c, const FqPoly& q_poly, std::vector<bool>& covered) {
    const Field& field = q_poly.field();
    int free_deg = degree_nonzero(q_poly) - degree_nonzero(c.modulus);
    std::uint64_t t_count = 1;
    for (int i = 0; i < free_deg; ++i) t_count *= field->q;
    for (std::uint64_t t_idx = 0; t_idx < t_count; ++t_idx) {
        FqPoly t = poly_from_index(field, t_idx);
        FqPoly r = add(c.residue, mul(t, c.modulus));
        covered[poly_index(r)] = true;
    }
}

std::vector<bool> covered_table(const Field& field, const std::vector<Congruence>& congruences,
                                const FqPoly& q_poly, std::uint64_t budget) {
    std::uint64_t count = residue_count(q_poly, budget);
    std::vector<bool> covered(count, false);
    for (const auto& c : congruences) mark_covered(c, q_poly, covered);
    return covered;
}

}  // namespace

CoverReport check_cover_exhaustive(const CoveringInstance& instance, std::uint64_t budget) {
    CoverReport report;
    report.lcm = lcm_modulus(instance);
    report.multiplicity = multiplicity(instance);

    std::vector<bool> covered = covered_table(instance.field, instance.congruences, report.lcm, budget);
    std::uint64_t hits = 0;
    std::optional<std::uint64_t> first_miss;
    for (std::uint64_t i = 0; i < covered.size(); ++i) {
        if (covered[i]) {
            ++hits;
        } else if (!first_miss) {
            first_miss = i;
        }
    }
    report.covers = !first_miss.has_value();
    if (first_miss) report.witness = poly_from_index(instance.field, *first_miss);
    report.covered_fraction = Rat(BigInt(hits), BigInt(covered.size()));
    return report;
}

Rat uncovered_density(const Field& field, const std::vector<Congruence>& congruences,
                      std::uint64_t budget) {
    if (congruences.empty()) return Rat(1);
    CoverReport r = check_cover_exhaustive(make_instance(field, congruences), budget);
    return Rat(1) - r.covered_fraction;
}

namespace {

std::uint64_t parse_header_int(const std::string& line, const std::string& key, std::size_t& pos) {
    auto at = line.find(key + "=", pos);
    if (at == std::string::npos) throw ParseError("line 1: missing '" + key + "=' in instance header");
    at += key.size() + 1;
    std::uint64_t v = 0;
    bool any = false;
    while (at < line.size() && line[at] >= '0' && line[at] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(line[at] - '0');
        ++at;
        any = true;
    }
    if (!any) throw ParseError("line 1: malformed integer for '" + key + "' in instance header");
    pos = at;
    return v;
}

// Recovers p from q = p^k; throws if q is not an exact k-th power of a prime.
std::uint64_t base_prime(std::uint64_t q, std::uint32_t k) {
    if (k == 1) return q;
    for (std::uint64_t p = 2; ; ++p) {
        std::uint64_t power = checked_pow_u64(p, k, std::uint64_t{1} << 62);
        if (power == 0 || power > q) break;
        if (power == q) return p;
    }
    throw ParseError("line 1: q=" + std::to_string(q) + " is not a k-th power with k=" + std::to_string(k));
}

}  // namespace

CoveringInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Field field;
    std::vector<Congruence> congruences;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed;
        for (char c : line)
            if (c != '\r') trimmed += c;
        std::size_t first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        if (!field) {
            std::size_t pos = 0;
            std::uint64_t q = parse_header_int(trimmed, "q", pos);
            std::uint64_t k = parse_header_int(trimmed, "k", pos);
            if (k < 1 || k > 16) throw ParseError("line 1: extension degree k out of range");
            std::uint64_t p = base_prime(q, static_cast<std::uint32_t>(k));
            try {
                field = field_make(p, static_cast<std::uint32_t>(k));
            } catch (const Error& e) {
                throw ParseError("line 1: " + std::string(e.what()));
            }
            continue;
        }
        auto percent = trimmed.find('%');
        if (percent == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'residue % modulus'");
        try {
            FqPoly residue = parse_poly(field, std::string_view(trimmed).substr(0, percent));
            FqPoly modulus = parse_poly(field, std::string_view(trimmed).substr(percent + 1));
            congruences.push_back(make_congruence(residue, modulus));
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!field) throw ParseError("instance file has no 'q=... k=...' header");
    if (congruences.empty()) throw ParseError("instance file has no congruences");
    return make_instance(std::move(field), std::move(congruences));
}

std::string format_instance(const CoveringInstance& instance) {
    std::string out = "q=" + std::to_string(instance.field->q) + " k=" + std::to_string(instance.field->k) + "\n";
    for (const auto& c : instance.congruences) {
        out += to_text(c.residue) + " % " + to_text(c.modulus) + "\n";
    }
    return out;
}

}  // namespace fqcover
