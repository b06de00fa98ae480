#include <doctest.h>

#include "fixtures.hpp"
#include "naijavar/error.hpp"
#include "naijavar/g2p.hpp"

using namespace naijavar;

namespace {

const PhonemeInventory& inventory() {
  static const auto inv = PhonemeInventory::load(fixtures::data("inventory.tsv"));
  return inv;
}

}  // namespace

TEST_SUITE("g2p") {
  TEST_CASE("lexicon hit wins and is case-insensitive") {
    const auto& p = fixtures::shipped();
    const auto t = p.transcribe("Anything");
    CHECK(t.phonemes == std::vector<std::string>{"ɛ", "n", "ɪ", "θ", "ɪ", "ŋ"});
    CHECK(t.provenance == Provenance::lexicon);
  }

  TEST_CASE("fallback covers words outside the lexicon") {
    const auto& p = fixtures::shipped();
    const auto t = p.transcribe("bikos");
    CHECK(t.provenance == Provenance::fallback);
    CHECK(t.phonemes == std::vector<std::string>{"b", "ɪ", "k", "ɔ", "s"});
    CHECK(p.transcribe("ting").phonemes == std::vector<std::string>{"t", "ɪ", "ŋ"});
  }

  TEST_CASE("longest match, earlier line on ties, anchors") {
    const auto fb = FallbackTable::parse(
        "a\tæ\n"
        "ai\teɪ\n"
        "ai\taɪ\n"
        "e$\t\n"
        "^e\tiː\n"
        "e\tɛ\n"
        "t\tt\n"
        "k\tk\n",
        inventory());
    CHECK(fb.apply("tai") == std::vector<std::string>{"t", "eɪ"});
    CHECK(fb.apply("take") == std::vector<std::string>{"t", "æ", "k"});
    CHECK(fb.apply("et") == std::vector<std::string>{"iː", "t"});
    CHECK(fb.apply("tet") == std::vector<std::string>{"t", "ɛ", "t"});
    CHECK_THROWS_WITH_AS(fb.apply("tq"), doctest::Contains("'q'"), ValidationError);
  }

  TEST_CASE("fallback and lexicon reject unknown phonemes") {
    CHECK_THROWS_AS(FallbackTable::parse("a\tQQ\n", inventory()), ValidationError);
    CHECK_THROWS_AS(PronunciationLexicon::parse("word\tw QQ\n", inventory()), ValidationError);
    CHECK_THROWS_AS(PronunciationLexicon::parse("a\tæ\na\tɑ\n", inventory()), ValidationError);
    CHECK_NOTHROW(PronunciationLexicon::parse("a\tæ\nA\tæ\n", inventory()));
  }

  TEST_CASE("errors") {
    const auto& p = fixtures::shipped();
    CHECK_THROWS_WITH_AS(p.transcribe(""), doctest::Contains("empty word"), ValidationError);
    CHECK_THROWS_AS(p.transcribe("123"), ValidationError);
    CHECK_THROWS_AS(p.transcribe("'"), ValidationError);
  }

  TEST_CASE("batch transcription reports every failing index") {
    const auto& p = fixtures::shipped();
    const std::vector<std::string> ok{"come", "kom", "dey"};
    const auto out = transcribe_batch(ok, p.lexicon(), p.fallback());
    REQUIRE(out.size() == 3);
    CHECK(out[1].provenance == Provenance::fallback);
    const std::vector<std::string> bad{"come", "", "99"};
    try {
      transcribe_batch(bad, p.lexicon(), p.fallback());
      FAIL("expected an error");
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("1") != std::string::npos);
      CHECK(msg.find("2") != std::string::npos);
    }
  }

  TEST_CASE("every shipped lexicon word transcribes from the lexicon") {
    const auto& p = fixtures::shipped();
    CHECK(p.lexicon().size() >= 1500);
    for (const auto& w : p.lexicon().words()) CHECK(p.transcribe(w).provenance == Provenance::lexicon);
  }
}
