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

#ifndef FQCOVER_POLY_TEXT_HPP
#define FQCOVER_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "fqcover/poly.hpp"

namespace fqcover {

// Textual polynomial format used by instance files and every CLI
// surface. Terms "c*x^e" joined by "+"; prime-field coefficients are
// decimal integers reduced mod p, extension-field coefficients are
// bracketed digit lists "[c0,c1,...]". The parser accepts forms like
//   x^2+x+1     2*x^3+1     [1,1]*x^2+[0,1]
// Serialization always emits canonical descending-degree form with unit
// coefficients elided in front of x-powers.

std::string to_text(const FqPoly& f);

/// Throws ParseError on malformed input.
FqPoly parse_poly(const Field& field, std::string_view text);

}  // namespace fqcover

#endif  // FQCOVER_POLY_TEXT_HPP
