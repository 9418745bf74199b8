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

#include <filesystem>
#include <sstream>

#include "gpt/cli.hpp"
#include "gpt/gallery.hpp"
#include "gpt/io.hpp"

using namespace gpt;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "gpt-gtt");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text) {
    std::string path = ::testing::TempDir() + name;
    write_text_file(path, text);
    return path;
}

std::string first_line(const std::string &s) {
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST(Cli, ClassifySpekkensFile) {
    std::string path = temp_file("spekkens.json", entry_to_json(load("spekkens")).dump(2));
    Result r = run({"classify", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(first_line(r.out), "NotAlmostNu; admits GTT: no; witness: (1/2,1/2,1/2,1/2)");
    Result by_flag = run({"classify", "--input", path});
    EXPECT_EQ(by_flag.out, r.out);
}

TEST(Cli, ClassifyAgreesWithLibrary) {
    for (const auto &name : gallery_names()) {
        GalleryEntry e = load(name);
        Tag tag = e.is_polytopic() ? classify(e.polytopic()).tag
                                   : smooth_classify(std::get<SmoothFamily>(e.system)).classification.tag;
        Result by_name = run({"classify", name});
        EXPECT_EQ(by_name.code, 0) << name << by_name.err;
        std::string expect = std::string(to_string(tag)) + "; admits GTT: " + (admits_gtt(tag) ? "yes" : "no");
        EXPECT_EQ(first_line(by_name.out).substr(0, expect.size()), expect) << name;

        std::string path = temp_file("entry-" + name + ".json", entry_to_json(e).dump(2));
        Result by_file = run({"classify", path});
        EXPECT_EQ(first_line(by_file.out), first_line(by_name.out)) << name;
    }
}

TEST(Cli, EmapBitIsTheParallelogram) {
    std::string path = temp_file("bit.json", entry_to_json(load("bit")).dump(2));
    Result r = run({"emap", path});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    std::vector<QVec> vs;
    for (const auto &x : j.at("vertices")) vs.push_back(qvec_from_json(x));
    std::sort(vs.begin(), vs.end());
    EXPECT_EQ(vs, (std::vector<QVec>{QVec{-1, 1}, QVec{0, 0}, QVec{0, 1}, QVec{1, 0}}));
}

TEST(Cli, WmapWritesOutputFile) {
    std::string out = ::testing::TempDir() + "we.json";
    std::filesystem::remove(out);
    Result r = run({"wmap", "notch-bit", "--output", out});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = read_json_file(out);
    std::vector<QVec> vs;
    for (const auto &x : j.at("vertices")) vs.push_back(qvec_from_json(x));
    EXPECT_EQ(vs, (std::vector<QVec>{QVec{1, 1}, QVec{-3, 1}}));
    Result fv = run({"wmap", "bit", "--float-view"});
    EXPECT_NE(fv.out.find("decimal"), std::string::npos);
}

TEST(Cli, Validate) {
    EXPECT_EQ(run({"validate", "squit"}).code, 0);
    std::string bad = temp_file("bad.json", R"({"name": "broken", "dimension": 2,
        "states": {"vertices": [[0, 1], [1, 1]]}, "effects": {"vertices": [[0, 0], [0, 1], [1, 0]]}})");
    Result r = run({"validate", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE((r.out + r.err).find("NotComplementClosed"), std::string::npos) << r.out << r.err;
    EXPECT_EQ(run({"classify", bad}).code, 2);
}

TEST(Cli, ParseAndIoErrors) {
    EXPECT_EQ(run({"classify", "no-such-entry"}).code, 3);
    std::string floats = temp_file("floats.json", R"({"dimension": 2,
        "states": {"vertices": [[0, 1], [1, 1]]}, "effects": {"vertices": [[0.5, 0], [0, 1]]}})");
    EXPECT_EQ(run({"classify", floats}).code, 3);
    std::string garbage = temp_file("garbage.json", "{ nope");
    EXPECT_EQ(run({"emap", garbage}).code, 3);
    EXPECT_EQ(run({"classify", "--input", "/nonexistent/dir/s.json"}).code, 3);
    EXPECT_EQ(run({"frobnicate"}).code, 3);
    EXPECT_EQ(run({"wmap", "bit", "--output", "/nonexistent/dir/out.json"}).code, 3);
}

TEST(Cli, Recover) {
    std::string ok = temp_file("samples.json", R"({"samples": [
        {"effect": [0, 1], "value": "1"},
        {"effect": ["1/2", "1/2"], "value": "1/4"},
        {"effect": ["-1/2", "1/2"], "value": "3/4"}]})");
    Result r = run({"recover", "bit-transformed", ok});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("(-1/2,1)"), std::string::npos) << r.out;

    std::string bad = temp_file("samples-bad.json", R"({"samples": [
        {"effect": [0, 1], "value": "1"},
        {"effect": ["1/2", "1/2"], "value": "1/4"},
        {"effect": ["-1/2", "1/2"], "value": "1/4"}]})");
    Result e = run({"recover", "bit-transformed", "--samples", bad});
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.err.find("InconsistentSamples"), std::string::npos) << e.err;

    std::string under = temp_file("samples-under.json", R"({"samples": [{"effect": [0, 1], "value": "1"}]})");
    Result u = run({"recover", "bit-transformed", under});
    EXPECT_EQ(u.code, 2);
    EXPECT_NE(u.err.find("UnderDetermined"), std::string::npos) << u.err;
}

TEST(Cli, Simulate) {
    std::string p = temp_file("pipe.json", R"({
      "observables": {"D": [[1, 0], [-1, 1]], "T": [[0, 1]]},
      "steps": [{"mix": [{"observable": "D", "weight": "1/2"}, {"observable": "T", "weight": "1/2"}]},
                {"coarse": [[0, 1]]}]})");
    Result r = run({"simulate", "bit", p});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"0\""), std::string::npos) << r.out;

    std::string bad = temp_file("pipe-bad.json", R"({
      "observables": {"D": [[1, 0], [-1, 1]]},
      "steps": [{"mix": [{"observable": "D", "weight": "1/2"}]}]})");
    EXPECT_EQ(run({"simulate", "bit", bad}).code, 2);
}

TEST(Cli, Plot) {
    Result r = run({"plot", "bit-transformed"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
    EXPECT_NE(r.out.find("</svg>"), std::string::npos);
    EXPECT_NE(r.out.find("<line"), std::string::npos);

    std::string out = ::testing::TempDir() + "spek.svg";
    EXPECT_EQ(run({"plot", "spekkens", "--output", out, "--slice", "1/2"}).code, 0);
    EXPECT_NE(read_text_file(out).find("</svg>"), std::string::npos);
    EXPECT_EQ(run({"plot", "rebit", "--n", "16"}).code, 0);
}

TEST(Cli, Gallery) {
    Result all = run({"gallery"});
    EXPECT_EQ(all.code, 0) << all.out << all.err;
    for (const auto &name : gallery_names()) EXPECT_NE(all.out.find(name), std::string::npos) << name;

    Result exp = run({"gallery", "--export", "noisy-bit", "--p", "1/3"});
    ASSERT_EQ(exp.code, 0) << exp.err;
    EXPECT_EQ(Json::parse(exp.out), entry_to_json(load("noisy-bit", Rational(1, 3))));
    EXPECT_EQ(run({"gallery", "nonsense"}).code, 3);
}

TEST(Cli, SmoothFamilyFlags) {
    Result r = run({"classify", "--family", "noisy-rebit", "--p", "1/3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(first_line(r.out), "NoisyUnrestricted; admits GTT: yes");
    Result d = run({"classify", "--family", "rebit", "--n", "8"});
    EXPECT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(first_line(d.out).substr(0, 12), "Unrestricted");
    EXPECT_EQ(run({"classify", "--family", "noisy-rebit", "--p", "2"}).code, 2);
}
