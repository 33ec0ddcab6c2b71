#include "lipnorm_cli/commands.hpp"
#include "lipnorm_cli/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lipnorm;
using namespace lipnorm::cli;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("lipnorm_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        unsetenv("LIPNORM_CAP");
    }
    void TearDown() override {
        fs::remove_all(dir_);
        unsetenv("LIPNORM_CAP");
    }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return run_cli(args, out_, err_);
    }

    Json out() const { return Json::parse(out_.str()); }
    Json err() const { return Json::parse(err_.str()); }

    fs::path dir_;
    std::ostringstream out_, err_;
};

const char* kTwoPoints = R"({"labels": ["x", "y"], "dist": [["0", "2"], ["2", "0"]]})";

}  // namespace

TEST_F(Cli, NormOfDipole) {
    write("space.json", kTwoPoints);
    const auto m = write("m.json", R"({"space": "space.json", "weights": {"x": "1", "1": -1}})");
    ASSERT_EQ(run({"norm", "--kind", "bl", m}), 0) << err_.str();
    const Json doc = out();
    EXPECT_EQ(doc["kind"], "BL");
    EXPECT_EQ(doc["value"], "1");
    EXPECT_EQ(doc["witness"], Json({"1/2", "-1/2"}));
    EXPECT_EQ(doc["witness_extended"], Json({"1/2", "-1/2"}));
    ASSERT_EQ(run({"norm", m, "--kind", "fm", "--decimal", "3"}), 0);
    EXPECT_EQ(out()["value"], "2");
    EXPECT_EQ(out()["value_decimal"], "2.000");
}

TEST_F(Cli, MalformedRationalIsParseError) {
    const auto f = write("f.json", R"({"space": {"dist": [["0", "1/0"], ["1/0", "0"]]}, "values": ["0", "0"]})");
    EXPECT_EQ(run({"extreme-check", f}), 2);
    const Json e = err();
    EXPECT_EQ(e["error"]["type"], "parse");
    EXPECT_EQ(e["error"]["field"], "space.dist[0][1]");
    EXPECT_NE(e["error"]["message"].get<std::string>().find("1/0"), std::string::npos);
}

TEST_F(Cli, FloatNumbersAreRejected) {
    const auto f = write("f.json", R"({"space": {"line": [0, 1.5]}, "values": ["0", "0"]})");
    EXPECT_EQ(run({"johnson-check", f}), 2);
    EXPECT_EQ(err()["error"]["field"], "space.line[1]");
}

TEST_F(Cli, MissingFileIsIoError) {
    EXPECT_EQ(run({"norm", (dir_ / "absent.json").string()}), 2);
    EXPECT_EQ(err()["error"]["type"], "io");
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"norm"}), 2);
    EXPECT_EQ(run({"norm", "x.json", "--kind", "tv"}), 2);
    EXPECT_EQ(run({"--help"}), 0);
    EXPECT_NE(out_.str().find("enum-extremes"), std::string::npos);
}

TEST_F(Cli, ValidateReportsViolation) {
    const auto bad = write("bad.json", R"({"dist": [[0, 1, 5], [1, 0, 1], [5, 1, 0]]})");
    EXPECT_EQ(run({"validate", bad}), 1);
    const Json doc = out();
    EXPECT_EQ(doc["valid"], false);
    EXPECT_EQ(doc["violation"]["kind"], "triangle");
    EXPECT_EQ(doc["violation"]["k"], 1);
    const auto good = write("good.json", kTwoPoints);
    EXPECT_EQ(run({"validate", good}), 0);
    EXPECT_EQ(out()["valid"], true);
}

TEST_F(Cli, InvalidMetricInFunctionIsDomainError) {
    const auto f = write("f.json", R"({"space": {"dist": [[0, 1], [2, 0]]}, "values": [0, 0]})");
    EXPECT_EQ(run({"extreme-check", f}), 1);
    EXPECT_EQ(err()["error"]["type"], "domain");
}

TEST_F(Cli, ExtremeCheckEmitsWitness) {
    const auto f = write("f.json", R"({"space": {"line": ["0", "1.5", "2", "4"]}, "values": ["0.5", "-0.25", "0", "-0.5"]})");
    ASSERT_EQ(run({"extreme-check", "--kind", "bl", f}), 0) << err_.str();
    const Json doc = out();
    EXPECT_EQ(doc["verdict"], "not-extreme");
    EXPECT_EQ(doc["witness"].size(), 4u);
    EXPECT_EQ(doc["witness_check"]["both_in_ball"], true);

    const auto g = write("g.json", R"({"space": {"line": ["0", "1.5", "2.5", "4"]}, "values": ["1/2", "-1/4", "1/4", "-1/2"]})");
    ASSERT_EQ(run({"extreme-check", g}), 0);
    EXPECT_EQ(out()["verdict"], "extreme");
    EXPECT_EQ(out()["class"], "non-trivial");
    EXPECT_FALSE(out().contains("witness"));

    const auto outside = write("o.json", R"({"space": {"line": ["0", "1"]}, "values": ["1", "-1"]})");
    EXPECT_EQ(run({"extreme-check", outside}), 1);
}

TEST_F(Cli, ExtendAndRoundTrip) {
    const auto e = write("e.json", R"({"space": {"line": ["0", "1", "3"]}, "subset": [0, 2], "values": [0, 3], "variant": "mcshane"})");
    ASSERT_EQ(run({"extend", e}), 0) << err_.str();
    Json doc = out();
    EXPECT_EQ(doc["values"], Json({"0", "1", "3"}));
    EXPECT_EQ(doc["variant"], "mcshane");

    // emitted function document parses back and re-emits identically
    doc.erase("variant");
    const Emitter emit;
    const LipFunction f = parse_function(doc, dir_);
    EXPECT_EQ(emit.function(f), doc);
    EXPECT_EQ(emit.function(parse_function(emit.function(f), dir_)), emit.function(f));

    const MolecularMeasure mu = parse_measure(Json::parse(R"({"space": {"line": ["0", "1/2"]}, "weights": {"1": "-2/6"}})"), dir_);
    EXPECT_EQ(emit.measure(parse_measure(emit.measure(mu), dir_)), emit.measure(mu));

    const auto bad = write("v.json", R"({"space": {"line": ["0", "1"]}, "subset": [0], "values": [1], "variant": "kirszbraun"})");
    EXPECT_EQ(run({"extend", bad}), 2);
    EXPECT_EQ(err()["error"]["field"], "variant");
}

TEST_F(Cli, EnumAndInductive) {
    const auto s = write("s.json", R"({"line": ["0", "1.5", "2.5", "4"]})");
    ASSERT_EQ(run({"enum-extremes", "--kind", "bl", s}), 0);
    const Json doc = out();
    EXPECT_EQ(doc["count"], doc["extremes"].size());
    EXPECT_EQ(doc["trivial"], 2);
    ASSERT_EQ(run({"inductive-set", s}), 0);
    const Json ind = out();
    EXPECT_LT(ind["count"].get<std::size_t>(), doc["non_trivial"].get<std::size_t>());
    for (const auto& f : ind["functions"]) EXPECT_NE(f["values"], Json({"1/2", "-1/4", "1/4", "-1/2"}));

    EXPECT_EQ(run({"enum-extremes", "--cap", "3", s}), 1);
    EXPECT_EQ(err()["error"]["type"], "cap");
}

TEST_F(Cli, EnvironmentCap) {
    const auto s = write("s.json", kTwoPoints);
    setenv("LIPNORM_CAP", "1", 1);
    EXPECT_EQ(run({"enum-extremes", s}), 1);
    EXPECT_EQ(run({"enum-extremes", "--cap", "2", s}), 0);
    setenv("LIPNORM_CAP", "zero", 1);
    EXPECT_EQ(run({"enum-extremes", s}), 2);
    EXPECT_EQ(err()["error"]["field"], "LIPNORM_CAP");
}

TEST_F(Cli, JohnsonCheck) {
    const auto f = write("f.json", R"({"space": {"line": ["0", "1", "3"]}, "values": ["1/4", "0", "0"]})");
    ASSERT_EQ(run({"johnson-check", f}), 0);
    EXPECT_EQ(out()["member"], false);
    EXPECT_EQ(out()["failed_clause"], "norm");
}

TEST_F(Cli, ReproduceModes) {
    EXPECT_EQ(run({"reproduce"}), 0) << out_.str();
    EXPECT_EQ(out()["summary"], "3/3 PASS");
    EXPECT_EQ(run({"reproduce", "--cap", "2"}), 0);
    const Json capped = out();
    EXPECT_EQ(capped["items"][0]["status"], "SKIPPED-CAP");
    EXPECT_EQ(capped["items"][1]["status"], "SKIPPED-CAP");
    EXPECT_EQ(capped["items"][2]["status"], "PASS");
    EXPECT_NE(run({"reproduce", "--corrupt"}), 0);
    EXPECT_EQ(out()["status"], "FAIL");
}

TEST_F(Cli, OutputFile) {
    const auto target = (dir_ / "report.json").string();
    ASSERT_EQ(run({"reproduce", "--output", target}), 0);
    EXPECT_TRUE(out_.str().empty());
    std::ifstream in(target);
    EXPECT_EQ(Json::parse(in)["summary"], "3/3 PASS");
    EXPECT_EQ(run({"reproduce", "--output", (dir_ / "no" / "such" / "dir.json").string()}), 2);
}

TEST_F(Cli, SelftestIsDeterministic) {
    ASSERT_EQ(run({"selftest", "--seed", "3", "--instances", "4"}), 0) << out_.str();
    const std::string first = out_.str();
    EXPECT_EQ(out()["status"], "PASS");
    ASSERT_EQ(run({"selftest", "--instances", "4", "--seed", "3"}), 0);
    EXPECT_EQ(out_.str(), first);
}
