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

#include "fqcover/poly_text.hpp"

#include <cctype>
#include <vector>

#include "fqcover/errors.hpp"

namespace fqcover {

namespace {

std::string coeff_text(const FieldConfig& fc, FqElem c) {
    if (fc.k == 1) return std::to_string(c);
    std::string out = "[";
    for (std::uint32_t i = 0; i < fc.k; ++i) {
        if (i) out += ",";
        out += std::to_string(c % fc.p);
        c /= fc.p;
    }
    out += "]";
    return out;
}

class TermParser {
  public:
    TermParser(const Field& field, std::string_view text) : field_(field), s_(text) {}

    FqPoly parse() {
        std::vector<FqElem> coeffs;
        const auto& fc = *field_;
        bool first = true;
        while (first || !at_end()) {
            if (!first) expect('+');
            first = false;
            auto [c, e] = term();
            if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
            coeffs[e] = fq_add(fc, coeffs[e], c);
        }
        return FqPoly::from_coeffs(field_, std::move(coeffs));
    }

  private:
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos_) + " in polynomial");
        ++pos_;
    }

    std::uint64_t integer() {
        skip_space();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an integer at position " + std::to_string(pos_) + " in polynomial");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (std::uint64_t{1} << 62)) throw ParseError("integer literal too large in polynomial");
            ++pos_;
        }
        return v;
    }

    FqElem bracket_coeff() {
        const auto& fc = *field_;
        expect('[');
        std::vector<std::uint64_t> digits;
        digits.push_back(integer() % fc.p);
        while (peek() == ',') {
            ++pos_;
            digits.push_back(integer() % fc.p);
        }
        expect(']');
        if (digits.size() > fc.k)
            throw ParseError("coefficient has more than k=" + std::to_string(fc.k) + " entries");
        return fq_from_coeffs(fc, digits);
    }

    // One term: coefficient and exponent.
    std::pair<FqElem, std::size_t> term() {
        const auto& fc = *field_;
        FqElem c = 1;
        bool have_coeff = false;
        char ch = peek();
        if (ch == '[') {
            c = bracket_coeff();
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            c = fq_from_int(fc, integer());
            have_coeff = true;
        }
        if (have_coeff) {
            if (peek() == '*') {
                ++pos_;
            } else if (peek() != 'x') {
                return {c, 0};  // constant term
            }
        }
        if (peek() != 'x') throw ParseError("expected 'x' at position " + std::to_string(pos_) + " in polynomial");
        ++pos_;
        std::size_t e = 1;
        if (peek() == '^') {
            ++pos_;
            e = static_cast<std::size_t>(integer());
            if (e > 4096) throw ParseError("polynomial exponent too large");
        }
        return {c, e};
    }

    Field field_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const FqPoly& f) {
    if (f.is_zero()) return "0";
    const auto& fc = *f.field();
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        FqElem c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += coeff_text(fc, c);
            continue;
        }
        if (c != 1) out += coeff_text(fc, c) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

FqPoly parse_poly(const Field& field, std::string_view text) {
    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) throw ParseError("empty polynomial text");
    // "0" (or a sum reducing to zero) parses to the zero polynomial.
    return TermParser(field, text).parse();
}

}  // namespace fqcover
