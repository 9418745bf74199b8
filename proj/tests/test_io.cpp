// Copyright 2026 The gpt-gtt Authors
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

#include <gtest/gtest.h>

#include "gpt/gallery.hpp"
#include "gpt/io.hpp"
#include "test_util.hpp"

using namespace gpt;
using gpt::testing::q;
using gpt::testing::v;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::EmptyInput;
}

std::string reexport(const std::string &text) {
    Json j = Json::parse(text);
    if (auto f = family_from_json(j)) return family_to_json(*f).dump(2);
    return system_to_json(build_system(raw_system_from_json(j))).dump(2);
}

}  // namespace

TEST(JsonRational, Forms) {
    EXPECT_EQ(rational_from_json(Json("3/6")), q(1, 2));
    EXPECT_EQ(rational_from_json(Json(-4)), -4);
    EXPECT_EQ(rational_from_json(Json("-7")), -7);
    EXPECT_EQ(rational_to_json(q(-2, 4)), Json("-1/2"));
    EXPECT_EQ(rational_to_json(3), Json("3"));
    EXPECT_EQ(code_of([] { rational_from_json(Json(0.5)); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { rational_from_json(Json("1/0")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { rational_from_json(Json("x")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { rational_from_json(Json::array()); }), ErrorCode::ParseError);
}

TEST(JsonRoundtrip, EveryGalleryEntryIsByteStable) {
    for (const auto &name : gallery_names()) {
        std::string once = entry_to_json(load(name)).dump(2);
        std::string twice = reexport(once);
        EXPECT_EQ(once, twice) << name;
        EXPECT_EQ(twice, reexport(twice)) << name;
    }
}

TEST(JsonRoundtrip, ImportedSystemMatches) {
    for (const auto &name : gallery_names()) {
        GalleryEntry e = load(name);
        if (!e.is_polytopic()) continue;
        GptSystem back = build_system(raw_system_from_json(entry_to_json(e)));
        EXPECT_TRUE(set_equal(back.states().body(), e.polytopic().states().body())) << name;
        EXPECT_TRUE(set_equal(back.effects().body(), e.polytopic().effects().body())) << name;
        EXPECT_EQ(back.unit(), e.polytopic().unit());
        EXPECT_EQ(classify(back).tag, e.expected.tag) << name;
    }
}

TEST(RawSystem, Parsing) {
    Json j = Json::parse(R"({
      "name": "b", "dimension": 2,
      "states": {"vertices": [["0", "1"], [1, 1]]},
      "effects": {"vertices": [[0, 0], [0, 1], [1, 0], ["-1", 1]]},
      "observables": [{"label": "D", "outcomes": [["1", 0], [-1, 1]]}]
    })");
    RawSystem raw = raw_system_from_json(j);
    EXPECT_EQ(raw.dimension, 2u);
    ASSERT_EQ(raw.observables.size(), 1u);
    EXPECT_EQ(raw.observables[0].label, "D");
    EXPECT_TRUE(check_raw(raw).ok());
    EXPECT_EQ(classify(build_system(raw)).tag, Tag::Unrestricted);

    Json mismatch = j;
    mismatch["states"]["vertices"][0] = Json::array({0, 1, 1});
    EXPECT_EQ(code_of([&] { raw_system_from_json(mismatch); }), ErrorCode::DimensionMismatch);
    Json floats = j;
    floats["effects"]["vertices"][2] = Json::array({0.5, 0});
    EXPECT_EQ(code_of([&] { raw_system_from_json(floats); }), ErrorCode::ParseError);
    Json missing = j;
    missing.erase("effects");
    EXPECT_EQ(code_of([&] { raw_system_from_json(missing); }), ErrorCode::ParseError);
}

TEST(RawSystem, InvalidSystemReportsAxioms) {
    Json j = Json::parse(R"({"dimension": 2, "states": {"vertices": [[0, 1], [1, 1]]},
                             "effects": {"vertices": [[0, 0], [0, 1], [1, 0]]}})");
    RawSystem raw = raw_system_from_json(j);
    ValidationReport r = check_raw(raw);
    EXPECT_FALSE(r.ok());
    EXPECT_NE(r.str().find("NotComplementClosed"), std::string::npos) << r.str();
    EXPECT_THROW(build_system(raw), ValidationError);
}

TEST(Samples, Roundtrip) {
    FrameSamples s;
    s.pairs = {{v({0, 1}), 1}, {QVec{q(1, 2), q(1, 2)}, q(1, 3)}};
    Json j = samples_to_json(s);
    EXPECT_EQ(j.dump(), R"({"samples":[{"effect":["0","1"],"value":"1"},{"effect":["1/2","1/2"],"value":"1/3"}]})");
    FrameSamples back = samples_from_json(j);
    ASSERT_EQ(back.pairs.size(), 2u);
    EXPECT_EQ(back.pairs[1].effect, s.pairs[1].effect);
    EXPECT_EQ(back.pairs[1].value, q(1, 3));
    EXPECT_EQ(code_of([] { samples_from_json(Json::parse(R"({"samples": [{"value": "1"}]})")); }),
              ErrorCode::ParseError);
}

TEST(Pipeline, WorkedExample) {
    Json j = Json::parse(R"({
      "observables": {
        "E": [["1/4", 0, "1/4"], [0, "1/4", "1/4"], ["-1/4", "-1/4", "1/2"]],
        "F": [["-1/2", 0, "1/2"], [0, 0, 0], ["1/2", 0, "1/2"]]
      },
      "steps": [
        {"mix": [{"observable": "E", "weight": "1/3"}, {"observable": "F", "weight": "2/3"}]},
        {"coarse": [[0, 1], [2]]}
      ]
    })");
    Observable g = run_pipeline(pipeline_from_json(j));
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.outcomes[0], (QVec{q(-1, 4), q(1, 12), q(1, 2)}));
    EXPECT_EQ(g.total(), (QVec{0, 0, 1}));
}

TEST(Pipeline, NoisyKernelAndErrors) {
    Json j = Json::parse(R"({
      "observables": {"D": [[1, 0], [-1, 1]]},
      "start": "D",
      "steps": [{"noisy": "1/2"}, {"kernel": [[1, 0, 0], [0, 1, 1]]}]
    })");
    Observable o = run_pipeline(pipeline_from_json(j));
    EXPECT_EQ(o.outcomes, (std::vector<QVec>{QVec{q(1, 2), 0}, QVec{q(-1, 2), 1}}));

    Json unknown = j;
    unknown["start"] = "Z";
    EXPECT_EQ(code_of([&] { run_pipeline(pipeline_from_json(unknown)); }), ErrorCode::UnknownName);
    Json bad_step = j;
    bad_step["steps"] = Json::parse(R"([{"rotate": 1}])");
    EXPECT_EQ(code_of([&] { pipeline_from_json(bad_step); }), ErrorCode::ParseError);
}

TEST(Files, Errors) {
    EXPECT_EQ(code_of([] { read_json_file("/nonexistent/x.json"); }), ErrorCode::IoError);
    std::string path = ::testing::TempDir() + "gpt_io_bad.json";
    write_text_file(path, "{ not json");
    EXPECT_EQ(code_of([&] { read_json_file(path); }), ErrorCode::ParseError);
    write_text_file(path, R"({"a": "1/2"})");
    EXPECT_EQ(read_json_file(path)["a"], "1/2");
}
