#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "test_support.hpp"

namespace emodetect {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "emodetect");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("emodetect_cli_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()
                                              ->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    t1 = write("t1.ont", std::string(testing::kT1));
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  fs::path dir;
  std::string t1;
};

TEST_F(Cli, DetectJsonFromStdin) {
  const auto r = run({"detect", "--ontology", t1, "--format", "json", "-"},
                     "I feel joy today.");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["label"], "Joy");
  EXPECT_EQ(j["source"], "-");
  EXPECT_EQ(j["scores"][1][0], "Joy");
  EXPECT_EQ(j["scores"][1][1], "1.000000");
  EXPECT_EQ(r.out.back(), '\n');
}

TEST_F(Cli, DetectNegatedIsNeutral) {
  const auto r = run({"detect"}, "I am not happy.");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["label"], "Neutral");
}

TEST_F(Cli, DetectAffinityMode) {
  const auto lex = write("acc.lex", "accident\tSadness\t0.8\n");
  const auto input = write("doc.txt", "I met my girlfriend by accident.");
  const auto r = run({"detect", "--mode", "affinity", "--affinity", lex, input});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["label"], "Sadness");
  EXPECT_EQ(j["mode"], "affinity");
  EXPECT_EQ(j["source"], input);
}

TEST_F(Cli, TextFormatShowsCounterPairs) {
  const auto pairs = write("pairs.tsv", "Joy\tSadness\n");
  const auto r = run({"detect", "--format", "text", "--pairs", pairs}, "so sad");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Joy vs Sadness: Sadness"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("Love vs Anger"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"detect", "--mode", "telepathy"}).code, 1);
  EXPECT_EQ(run({"detect", "--negation-window", "-2"}).code, 1);
  EXPECT_EQ(run({"detect", "--mode", "hybrid"}).code, 1);
  EXPECT_EQ(run({"batch"}).code, 1);
  EXPECT_EQ(run({"eval"}).code, 1);
  EXPECT_EQ(run({"detect", "--help"}).code, 0);
}

TEST_F(Cli, LoadErrorsExitTwoWithLocation) {
  const auto bad = write("bad.ont", "Love\nLove/A/B/C\n");
  const auto r = run({"detect", "--ontology", bad}, "x");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad.ont:2:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("DepthExceeded"), std::string::npos) << r.err;

  EXPECT_EQ(run({"detect", "--ontology", (dir / "missing.ont").string()}, "x").code, 2);
  const auto cues = write("cues.txt", "not\nNOT\n");
  const auto c = run({"detect", "--negation", cues}, "x");
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("cues.txt:2:"), std::string::npos) << c.err;
  EXPECT_EQ(run({"detect", (dir / "missing.txt").string()}).code, 2);
}

TEST_F(Cli, NegationWindowAndWeightingFlags) {
  const auto wide = run({"detect", "--ontology", t1, "--negation-window", "5"},
                        "not that I was happy");
  EXPECT_EQ(nlohmann::json::parse(wide.out)["label"], "Neutral");
  const auto narrow = run({"detect", "--ontology", t1}, "not that I was happy");
  EXPECT_EQ(nlohmann::json::parse(narrow.out)["label"], "Joy");

  const auto prop = run({"detect", "--ontology", t1, "--depth-weighting", "proportional"},
                        "adoration");
  EXPECT_EQ(nlohmann::json::parse(prop.out)["scores"][0][1], "3.000000");
}

TEST_F(Cli, ConfigFileUnderFlags) {
  write("conf/t1.ont", std::string(testing::kT1));
  const auto config = write("conf/settings.json",
                            R"({"ontology": "t1.ont", "format": "text", "negation_window": 0})");
  const auto r = run({"detect", "--config", config}, "not happy");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("label:    Joy"), std::string::npos) << r.out;

  const auto flags = run({"detect", "--config", config, "--format", "json",
                          "--negation-window", "3"},
                         "not happy");
  ASSERT_EQ(flags.code, 0) << flags.err;
  EXPECT_EQ(nlohmann::json::parse(flags.out)["label"], "Neutral");

  const auto broken = write("broken.json", "{nope");
  EXPECT_EQ(run({"detect", "--config", broken}, "x").code, 2);
}

TEST_F(Cli, BatchDirectoryInFileNameOrder) {
  write("docs/b.txt", "rage.");
  write("docs/a.txt", "happy.");
  write("docs/notes.md", "happy.");
  const auto out = (dir / "out.jsonl").string();
  const auto r = run({"batch", "--ontology", t1, "--dir", (dir / "docs").string(),
                      "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2 documents\n");
  std::ifstream in(out);
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(in, line)) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0]["source"], "a.txt");
  EXPECT_EQ(records[0]["label"], "Joy");
  EXPECT_EQ(records[1]["source"], "b.txt");
  EXPECT_EQ(records[1]["label"], "Anger");
}

TEST_F(Cli, BatchEmptyDirectory) {
  fs::create_directories(dir / "empty");
  const auto out = (dir / "out.jsonl").string();
  const auto r = run({"batch", "--dir", (dir / "empty").string(), "--out", out});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 documents\n");
  EXPECT_EQ(fs::file_size(out), 0u);
}

TEST_F(Cli, BatchSkipsUnreadableFiles) {
  write("docs/a.txt", "happy.");
  fs::create_symlink(dir / "nowhere.txt", dir / "docs" / "broken.txt");
  const auto r = run({"batch", "--dir", (dir / "docs").string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_NE(r.err.find("warning:"), std::string::npos);
  EXPECT_NE(r.err.find("1 documents, 1 warnings"), std::string::npos) << r.err;
}

TEST_F(Cli, BatchUnreadableInputExitsTwo) {
  EXPECT_EQ(run({"batch", "--dir", (dir / "nope").string()}).code, 2);
  EXPECT_EQ(run({"batch", "--lines", (dir / "nope.txt").string()}).code, 2);
}

TEST_F(Cli, BatchIdenticalDocumentsAndThreads) {
  const auto lines_file = write("lines.txt", [] {
    std::string s;
    for (int i = 0; i < 1000; ++i) s += "I am very happy but not afraid.\n";
    return s;
  }());
  const auto single = run({"batch", "--lines", lines_file});
  const auto threaded = run({"batch", "--lines", lines_file, "--jobs", "4"});
  ASSERT_EQ(single.code, 0);
  EXPECT_EQ(single.out, threaded.out);
  std::istringstream records(single.out);
  std::string line;
  std::set<std::string> bodies;
  std::size_t count = 0;
  while (std::getline(records, line)) {
    auto j = nlohmann::json::parse(line);
    j.erase("source");
    bodies.insert(j.dump());
    ++count;
  }
  EXPECT_EQ(count, 1000u);
  EXPECT_EQ(bodies.size(), 1u);
  EXPECT_EQ(single.err, "1000 documents\n");
}

TEST_F(Cli, EvalPerfectAndNeutral) {
  const auto corpus = write("gold.tsv",
                            "Love\tfondness.\nJoy\thooray.\nAnger\thate.\n"
                            "Sadness\thurt.\nFear\thorror.\nSurprise\tamazed.\n");
  const auto r = run({"eval", "--ontology", t1, "--corpus", corpus});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(report["accuracy"], "1.000000");
  EXPECT_EQ(report["total"], 6);
  EXPECT_NE(r.out.find("gold \\ predicted"), std::string::npos);

  const auto none = write("none.tsv", "Joy\tnothing here.\n");
  const auto n = run({"eval", "--ontology", t1, "--corpus", none});
  const auto nj = nlohmann::json::parse(n.out.substr(0, n.out.find('\n')));
  EXPECT_EQ(nj["accuracy"], "0.000000");
  EXPECT_EQ(nj["confusion"]["rows"][1][6], 1);
}

TEST_F(Cli, EvalErrors) {
  const auto empty = write("empty.tsv", "");
  const auto r = run({"eval", "--corpus", empty});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("empty corpus"), std::string::npos);

  const auto bad = write("bad.tsv", "Joy\thappy\nCalm\tquiet\n");
  const auto b = run({"eval", "--corpus", bad});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("bad.tsv:2:"), std::string::npos) << b.err;
}

}  // namespace
}  // namespace emodetect
