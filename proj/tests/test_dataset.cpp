#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tweetiment/dataset.hpp"
#include "tweetiment/error.hpp"

using namespace tweetiment;

namespace {

template <typename F>
std::string failure(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

std::vector<LabeledRecord> labeled(const std::string& text, bool lenient = false) {
  std::istringstream in(text);
  return parse_labeled_csv(in, CsvOptions{lenient});
}

}  // namespace

TEST_CASE("labeled csv parsing") {
  const auto rows = labeled(
      "ItemID,Sentiment,SentimentText\n"
      "1,0,is so sad\n"
      "\n"
      "2,1,\"hello, \"\"world\"\"\"\r\n"
      "3,1,\"two\nlines\"\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == LabeledRecord{1, Sentiment::negative, "is so sad"});
  CHECK(rows[1] == LabeledRecord{2, Sentiment::positive, "hello, \"world\""});
  CHECK(rows[2].text == "two\nlines");

  // no header is fine too
  CHECK(labeled("7,1,x\n").size() == 1);
  CHECK(labeled("").empty());
}

TEST_CASE("csv errors carry codes and line numbers") {
  CHECK(failure([] { labeled("id,s,t\n1,0,a\n2,5,b\n"); }) ==
        "invalid label: line 3: sentiment must be 0 or 1, got '5'");
  CHECK(failure([] { labeled("1,0,a\n1,1,b\n"); }).starts_with("duplicate tweet id: line 2"));
  CHECK(failure([] { labeled("1,0,a\nx,1,b\n"); }).starts_with("malformed row: line 2"));
  CHECK(failure([] { labeled("1,0,a\n2,1,b,c\n"); }).starts_with("malformed row: line 2"));
  CHECK(failure([] { labeled("1,0,a\n2,1\n"); }).starts_with("malformed row: line 2"));
  CHECK(failure([] { labeled("1,0,\"open\n2,1,b\n"); }).starts_with("malformed row: line 1"));
  CHECK(failure([] { labeled("1,0,a \"quoted\" b\n"); }).starts_with("malformed row: line 1"));
}

TEST_CASE("lenient mode keeps unquoted commas in the tweet") {
  const auto rows = labeled("1,0,well, that was bad\n2,1,\"quoted, fine\"\n3,1,a \"b\" c\n", true);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].text == "well, that was bad");
  CHECK(rows[1].text == "quoted, fine");
  CHECK(rows[2].text == "a \"b\" c");
  CHECK(failure([] { labeled("1,0\n", true); }).starts_with("malformed row: line 1"));
}

TEST_CASE("unlabeled csv and writers round-trip") {
  std::istringstream in("tweet_id,tweet\n10,hi there\n11,\"a,b\"\n");
  const auto rows = parse_unlabeled_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == UnlabeledRecord{11, "a,b"});

  std::ostringstream out;
  write_unlabeled_csv(out, rows);
  CHECK(out.str() == "tweet_id,tweet\n10,\"hi there\"\n11,\"a,b\"\n");

  const std::vector<LabeledRecord> recs = {{1, Sentiment::positive, "say \"hi\",\nbye"},
                                           {-4, Sentiment::negative, ""}};
  std::ostringstream lout;
  write_labeled_csv(lout, recs);
  std::istringstream back(lout.str());
  CHECK(parse_labeled_csv(back) == recs);
}

TEST_CASE("split sizes") {
  CHECK(split_point(10, 0.8) == 8);
  CHECK(split_point(10, 0.9) == 9);
  CHECK(split_point(10, 0.7) == 7);
  CHECK(split_point(3, 0.5) == 1);
  CHECK_THROWS_AS(split_point(10, 1.0), Error);
  CHECK_THROWS_AS(split_point(10, 0.0), Error);
  CHECK_THROWS_AS(split_point(1, 0.8), Error);
  CHECK_THROWS_AS(split_point(4, 0.1), Error);
}

TEST_CASE("split_dataset is deterministic, disjoint and exhaustive") {
  std::vector<int> ids(200);
  std::iota(ids.begin(), ids.end(), 0);
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
    for (double ratio : {0.8, 0.9, 0.5}) {
      const auto [train, test] = split_dataset(ids, ratio, seed);
      CHECK(train.size() == split_point(ids.size(), ratio));
      CHECK(train.size() + test.size() == ids.size());
      std::set<int> all(train.begin(), train.end());
      all.insert(test.begin(), test.end());
      CHECK(all.size() == ids.size());
      const auto again = split_dataset(ids, ratio, seed);
      CHECK(again.first == train);
      CHECK(again.second == test);
    }
  }
  CHECK(split_dataset(ids, 0.8, 1).first != split_dataset(ids, 0.8, 2).first);
}

TEST_CASE("deterministic_shuffle pins a permutation") {
  std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto a = v, b = v;
  deterministic_shuffle(a, 7);
  deterministic_shuffle(b, 7);
  CHECK(a == b);
  std::sort(a.begin(), a.end());
  CHECK(a == v);
}
