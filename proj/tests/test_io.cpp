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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "qbochner/io.hpp"
#include "test_util.hpp"
#include "throws_code.hpp"

namespace qbochner {
namespace {

using testing::Rng;
using testing::ThrowsCode;

TEST(ParseNumberList, PlainAndProgression) {
  EXPECT_EQ(io::parse_number_list("1,2.5, -3"), (std::vector<double>{1.0, 2.5, -3.0}));
  EXPECT_EQ(io::parse_number_list("0,0.5,...,2"), (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
  EXPECT_EQ(io::parse_number_list("0,1,...,1"), (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(io::parse_number_list("0,1,...,3,10"), (std::vector<double>{0.0, 1.0, 2.0, 3.0, 10.0}));
  EXPECT_EQ(io::parse_number_list("0,0.5,...,5").size(), 11u);
}

TEST(ParseNumberList, RejectsMalformedInput) {
  for (const char* bad : {"", "a", "1,,2", "1,...,3", "0,1,...", "0,1,...,2.5", "2,1,...,0", "1e999", "nan"})
    EXPECT_TRUE(ThrowsCode([&] { io::parse_number_list(bad); }, ErrorCode::InvalidInput)) << bad;
}

TEST(FormatDouble, SeventeenSignificantDigitsRoundTrip) {
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const double x = testing::normal(rng) * std::pow(10.0, testing::uniform_int(rng, -20, 20));
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  }
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(Json, QuaternionAndMeasureRoundTrip) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_gamma(rng, 5);
    const auto g2 = io::gamma_from_json(io::Json::parse(io::to_json(g).dump()));
    ASSERT_EQ(g2.atoms.size(), g.atoms.size());
    for (std::size_t k = 0; k < g.atoms.size(); ++k) {
      EXPECT_EQ(g2.atoms[k].x, g.atoms[k].x);
      EXPECT_EQ(g2.atoms[k].w, g.atoms[k].w);
    }
    const auto mu = testing::random_cone_measure(rng, 5);
    const auto mu2 = io::slice_from_json(io::Json::parse(io::to_json(mu).dump()));
    EXPECT_EQ(max_atom_deviation(mu, mu2, 0.0), 0.0);
  }
}

TEST(Json, SchemaShapes) {
  const ImaginaryAtomicMeasure g{{{{2, 0, 0}, 1.0}}};
  EXPECT_EQ(io::to_json(g), io::Json::parse(R"({"atoms":[{"x":[2.0,0.0,0.0],"w":1.0}]})"));
  const SliceMeasure mu{{{2.0, Quaterniond(1, 1, 0, 0)}}};
  EXPECT_EQ(io::to_json(mu), io::Json::parse(R"({"atoms":[{"r":2.0,"v":[1.0,1.0,0.0,0.0]}]})"));
  QMatrixd a(1, 2);
  a << Quaterniond::I1(), Quaterniond(2.0);
  EXPECT_EQ(io::to_json(a), io::Json::parse("[[[0.0,1.0,0.0,0.0],[2.0,0.0,0.0,0.0]]]"));
}

TEST(Json, MatrixRoundTrip) {
  Rng rng(3);
  const QMatrixd a = testing::random_qmatrix(rng, 3, 4);
  EXPECT_EQ(max_abs<double>(io::qmatrix_from_json(io::Json::parse(io::to_json(a).dump())) - a), 0.0);
  const QVectord x = testing::random_qvector(rng, 5);
  EXPECT_EQ(vnorm<double>(io::qvector_from_json(io::Json::parse(io::to_json(x).dump())) - x), 0.0);
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_TRUE(ThrowsCode([] { io::quaternion_from_json(io::Json::parse("[1,2,3]")); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([] { io::gamma_from_json(io::Json::parse(R"({"atoms":[{"x":[1,0,0]}]})")); },
                         ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([] { io::slice_from_json(io::Json::parse(R"({"items":[]})")); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([] { io::qmatrix_from_json(io::Json::parse("[[[1,0,0,0]],[]]")); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([] { io::read_json_file("/nonexistent/dir/x.json"); }, ErrorCode::InvalidInput));
}

TEST(Json, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "qbochner_io_test.json").string();
  const SliceMeasure mu{{{0.0, Quaterniond(1.0)}, {1.5, Quaterniond(0.5, 0.1, 0.2, 0.3)}}};
  io::write_json_file(path, io::to_json(mu));
  EXPECT_EQ(max_atom_deviation(io::slice_from_json(io::read_json_file(path)), mu, 0.0), 0.0);
  std::remove(path.c_str());
}

TEST(Csv, SamplesRoundTripWithComment) {
  std::vector<FitSample> samples{{0.0, Quaterniond(1, 0, 0, 0)}, {0.1, Quaterniond(0.3, -0.2, 1e-300, 7)}};
  std::stringstream ss;
  io::write_samples_csv(ss, samples, "tool=qbochner");
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("# tool=qbochner\nt,q0,q1,q2,q3\n", 0), 0u);
  const auto back = io::read_samples_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(back[k].t, samples[k].t);
    EXPECT_EQ(back[k].value, samples[k].value);
  }
}

TEST(Csv, ReaderAcceptsHeaderlessAndRejectsGarbage) {
  std::istringstream ok("1,2,3,4,5\n\n2,0,0,0,0\n");
  EXPECT_EQ(io::read_samples_csv(ok).size(), 2u);
  std::istringstream bad("t,q0,q1,q2,q3\n1,2,3\n");
  EXPECT_TRUE(ThrowsCode([&] { io::read_samples_csv(bad); }, ErrorCode::InvalidInput));
}

TEST(Csv, EnsembleAndAutocovLayout) {
  ProcessEnsemble ens;
  ens.spec.times = {0.0, 0.5};
  ens.values = QArray::Constant(2, 2, Quaterniond(1.0));
  std::stringstream ss;
  io::write_ensemble_csv(ss, ens);
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "path,t,q0,q1,q2,q3");
  int rows = 0;
  for (std::string line; std::getline(ss, line);) ++rows;
  EXPECT_EQ(rows, 4);

  std::stringstream sa;
  io::write_autocov_csv(sa, {{0.5, Quaterniond::I1(), 3}}, "x");
  EXPECT_EQ(sa.str(), "# x\nlag,q0,q1,q2,q3\n0.5,0,1,0,0\n");
}

}  // namespace
}  // namespace qbochner
