// Copyright 2026 The qbochner Authors. All Rights Reserved.
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

// File formats.
//
//   Quaternion            [q0, q1, q2, q3]
//   ImaginaryQuaternion   [x1, x2, x3]
//   Gamma                 {"atoms": [{"x": [x1, x2, x3], "w": w}, ...]}
//   Slice measure         {"atoms": [{"r": r, "v": [q0, q1, q2, q3]}, ...]}
//   Matrix                row-major nested arrays of quaternions
//   phi / samples CSV     t,q0,q1,q2,q3
//   Ensemble CSV          path,t,q0,q1,q2,q3
//   Autocovariance CSV    lag,q0,q1,q2,q3
//
// CSV files may start with '#' comment lines (provenance); readers skip them
// and an optional header row. Numbers are written with 17 significant digits.

#ifndef QBOCHNER_IO_HPP
#define QBOCHNER_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbochner/estimate.hpp"
#include "qbochner/measures.hpp"
#include "qbochner/process.hpp"
#include "qbochner/qlinalg.hpp"

namespace qbochner::io {

using Json = nlohmann::json;

Json to_json(const Quaterniond& q);
Json to_json(const ImaginaryQuaterniond& x);
Json to_json(const ImaginaryAtomicMeasure& gamma);
Json to_json(const SliceMeasure& mu);
Json to_json(const QMatrixd& a);
Json to_json(const QVectord& x);

// Readers throw Error(InvalidInput) on schema mismatches.
Quaterniond quaternion_from_json(const Json& j);
ImaginaryQuaterniond imaginary_from_json(const Json& j);
ImaginaryAtomicMeasure gamma_from_json(const Json& j);
SliceMeasure slice_from_json(const Json& j);
QMatrixd qmatrix_from_json(const Json& j);
QVectord qvector_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// "%.17g".
std::string format_double(double x);

/// Parses "a,b,c" and "a,b,...,z" (the ellipsis continues the arithmetic
/// progression set by the two preceding values up to z inclusive).
std::vector<double> parse_number_list(const std::string& text);

void write_samples_csv(std::ostream& os, const std::vector<FitSample>& samples, const std::string& comment = "");
std::vector<FitSample> read_samples_csv(std::istream& is);
void write_ensemble_csv(std::ostream& os, const ProcessEnsemble& ens, const std::string& comment = "");
void write_autocov_csv(std::ostream& os, const std::vector<AutocovPoint>& points, const std::string& comment = "");

}  // namespace qbochner::io

#endif  // QBOCHNER_IO_HPP
