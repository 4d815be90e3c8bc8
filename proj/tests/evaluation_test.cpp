#include <gtest/gtest.h>

#include <sstream>

#include "emodetect/evaluation.hpp"
#include "test_support.hpp"

namespace emodetect {
namespace {

class Evaluation : public ::testing::Test {
 protected:
  EmotionOntology t1 = EmotionOntology::parse(testing::kT1);
};

TEST_F(Evaluation, ParseCorpus) {
  std::istringstream in("# gold\nJoy\thappy.\n\nneutral\tnothing\nSadness \ttext\twith tab\n");
  const auto corpus = parse_corpus(in, "c.tsv", t1);
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus[1].label, "Neutral");
  EXPECT_EQ(corpus[2].label, "Sadness");
  EXPECT_EQ(corpus[2].text, "text\twith tab");
  EXPECT_EQ(corpus[2].line, 5u);
}

TEST_F(Evaluation, ParseCorpusErrors) {
  std::istringstream no_tab("Joy\thappy\nJoy happy\n");
  try {
    parse_corpus(no_tab, "c.tsv", t1);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream unknown("Rage\thappy\n");
  EXPECT_THROW(parse_corpus(unknown, "c.tsv", t1), DataError);
  std::istringstream empty("# only comments\n\n");
  try {
    parse_corpus(empty, "c.tsv", t1);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("empty corpus"), std::string::npos);
  }
}

// One line per primary, each carrying a keyword unique to that primary;
// traced by hand: every line yields exactly one hit on its own subtree.
TEST_F(Evaluation, PerfectCorpus) {
  std::vector<LabeledDocument> corpus = {
      {"Love", "fondness.", 1},  {"Joy", "hooray.", 2},   {"Anger", "hate.", 3},
      {"Sadness", "hurt.", 4},   {"Fear", "horror.", 5},  {"Surprise", "amazed.", 6}};
  const auto report = evaluate(corpus, t1, {});
  EXPECT_EQ(report.total(), 6u);
  EXPECT_EQ(report.accuracy(), 1.0);
  for (const auto& gold : report.classes()) {
    for (const auto& pred : report.classes()) {
      EXPECT_EQ(report.confusion(gold, pred), (gold == pred && gold != "Neutral") ? 1u : 0u);
    }
  }
  EXPECT_EQ(report.metrics("Joy").precision, 1.0);
  EXPECT_EQ(report.metrics("Neutral").support, 0u);
}

TEST_F(Evaluation, KeywordlessLineIsNeutral) {
  const auto report = evaluate({{"Joy", "nothing here.", 1}}, t1, {});
  EXPECT_EQ(report.accuracy(), 0.0);
  EXPECT_EQ(report.confusion("Joy", "Neutral"), 1u);
  EXPECT_EQ(report.metrics("Joy").recall, 0.0);
  EXPECT_EQ(report.metrics("Joy").precision, 0.0);
}

TEST_F(Evaluation, ReportInvariants) {
  EvalReport report({"A", "B", "Neutral"});
  report.add("A", "A");
  report.add("A", "B");
  report.add("B", "B");
  report.add("Neutral", "A");
  EXPECT_DOUBLE_EQ(report.accuracy(), 0.5);
  EXPECT_DOUBLE_EQ(report.metrics("A").precision, 0.5);
  EXPECT_DOUBLE_EQ(report.metrics("A").recall, 0.5);
  EXPECT_EQ(report.metrics("A").support, 2u);
  EXPECT_THROW(report.add("C", "A"), std::invalid_argument);

  EXPECT_EQ(report.to_json(),
            R"({"total":4,"correct":2,"accuracy":"0.500000","per_class":{)"
            R"("A":{"precision":"0.500000","recall":"0.500000","support":2},)"
            R"("B":{"precision":"0.500000","recall":"1.000000","support":1},)"
            R"("Neutral":{"precision":"0.000000","recall":"0.000000","support":1}},)"
            R"("confusion":{"labels":["A","B","Neutral"],"rows":[[1,1,0],[0,1,0],[1,0,0]]}})");
  EXPECT_NE(report.confusion_text().find("accuracy 0.500000 (2/4)"), std::string::npos);
}

}  // namespace
}  // namespace emodetect
