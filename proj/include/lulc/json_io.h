// Copyright 2026 The lulc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LULC_JSON_IO_H
#define LULC_JSON_IO_H

#include "json.hpp"
#include "lulc/equiv.h"
#include "lulc/purify.h"
#include "lulc/quadform.h"
#include "lulc/search.h"
#include "lulc/stabilizer.h"
#include "lulc/standard_form.h"
#include "lulc/statevec.h"

namespace lulc {

using Json = nlohmann::ordered_json;

/// {"n": 2, "generators": ["+XX", "+ZZ"]}
Json group_to_json(const StabilizerGroup &s);
StabilizerGroup group_from_json(const Json &j);

/// {"n": 1, "amps": [[re, im], ...]}; entries may also be plain numbers.
/// Input amplitudes are rescaled to unit norm.
Json state_to_json(const StateVector &psi);
StateVector state_from_json(const Json &j);

Json quadratic_form_to_json(const QuadraticForm &q);
QuadraticForm quadratic_form_from_json(const Json &theta, const Json &lambda, size_t m);

/// {"S": [...], "t": "...", "mu": "...", "theta": [...], "lambda": "..."}
Json standard_form_to_json(const StandardForm &sf);
StandardForm standard_form_from_json(const Json &j);

/// {"S": [...], "theta": [...], "lambda": "..."} with θ and λ on the ambient
/// space GF(2)^n, n = length of the S rows (or "n" when S is empty).
PhaseSystem phase_system_from_json(const Json &j);
Json phase_system_to_json(const PhaseSystem &ps);

Json phase_assignment_to_json(const PhaseAssignment &p);
Json rationals_to_json(const std::vector<Rational> &a);

Json invariants_to_json(const InvariantReport &r, const PiSubgroup &pi, bool is_2m_code);
Json purification_to_json(const Purification &p);

/// 2×2 matrix as [[a, b], [c, d]] with complex entries [re, im] or numbers.
Mat2 matrix_from_json(const Json &j);
Json matrix_to_json(const Mat2 &m);

Json dlu_verdict_to_json(const DluVerdict &v);
Json search_report_to_json(const SearchReport &r, bool include_timing = true);

}  // namespace lulc

#endif
