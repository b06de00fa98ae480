#include <doctest.h>

#include "fixtures.hpp"
#include "naijavar/error.hpp"
#include "naijavar/phonology.hpp"

using namespace naijavar;

namespace {

const char* kSmall =
    "p\tconsonant\tvoicing=voiceless,place=bilabial,manner=plosive\n"
    "b\tconsonant\tvoicing=voiced,place=bilabial,manner=plosive\n"
    "t\tconsonant\tvoicing=voiceless,place=alveolar,manner=plosive\n"
    "i\tvowel\theight=close,backness=front,roundness=unrounded,length=short\n"
    "u\tvowel\theight=close,backness=back,roundness=rounded,length=short\n";

}  // namespace

TEST_SUITE("phonology") {
  TEST_CASE("feature distance is a normalized Hamming distance") {
    const auto inv = PhonemeInventory::parse(kSmall);
    CHECK(feature_distance("p", "p", inv) == 0.0);
    CHECK(feature_distance("p", "b", inv) == doctest::Approx(1.0 / 3));
    CHECK(feature_distance("b", "t", inv) == doctest::Approx(2.0 / 3));
    CHECK(feature_distance("i", "u", inv) == doctest::Approx(0.5));
    CHECK(feature_distance("p", "i", inv) == 1.0);
    CHECK(feature_distance("p", "b", inv) == feature_distance("b", "p", inv));
  }

  TEST_CASE("feature weights and overrides") {
    auto inv = PhonemeInventory::parse(std::string(kSmall) + "!weight\tvoicing\t0\n!override\tp\tt\t0.05\n");
    CHECK(feature_distance("p", "b", inv) == 0.0);
    CHECK(feature_distance("t", "p", inv) == doctest::Approx(0.05));
    inv.set_override("i", "u", 0.9);
    CHECK(feature_distance("u", "i", inv) == doctest::Approx(0.9));
    CHECK_THROWS_AS(inv.set_override("i", "i", 0.1), ValidationError);
    CHECK_THROWS_AS(inv.set_override("i", "u", 1.5), ValidationError);
    CHECK_THROWS_AS(inv.set_override("i", "zz", 0.5), ValidationError);
  }

  TEST_CASE("malformed inventories are rejected with line numbers") {
    CHECK_THROWS_WITH_AS(PhonemeInventory::parse("p\tconsonant\tvoicing=voiceless,place=bilabial\n"),
                         doctest::Contains(":1:"), ValidationError);
    CHECK_THROWS_AS(PhonemeInventory::parse(std::string(kSmall) + "p\tconsonant\tvoicing=voiced,place=x,manner=y\n"),
                    ValidationError);
    CHECK_THROWS_AS(PhonemeInventory::parse("a\tvowel\tvoicing=voiced,height=open,backness=front,roundness=unrounded,"
                                            "length=short\n"),
                    ValidationError);
    CHECK_THROWS_AS(PhonemeInventory::parse("a\tliquid\theight=open\n"), ValidationError);
    CHECK_THROWS_AS(PhonemeInventory::parse(std::string(kSmall) + "!override\tp\tq\t0.1\n"), ValidationError);
    CHECK_THROWS_AS(PhonemeInventory::parse(std::string(kSmall) + "!weight\tvoicing\t-1\n"), ValidationError);
  }

  TEST_CASE("weight matrix") {
    const auto inv = PhonemeInventory::parse(kSmall);
    const auto w = build_weight_matrix(inv);
    CHECK(w.size() == 5);
    CHECK(w.indel_cost() == doctest::Approx(0.6));
    CHECK(w.cost("b", "p") == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(w.cost("b", "zz"), Error);
    const auto ib = *w.index_of("b"), it = *w.index_of("t");
    const auto w2 = w.with_cost(ib, it, 0.1);
    CHECK(w2.cost(it, ib) == doctest::Approx(0.1));
    CHECK(w.cost(it, ib) == doctest::Approx(2.0 / 3));
    CHECK_THROWS_AS(build_weight_matrix(inv, 0.0), ValidationError);
    CHECK_THROWS_AS(build_weight_matrix(inv, 1.5), ValidationError);
  }

  TEST_CASE("shipped inventory: matrix symmetric, zero diagonal, costs in [0,1]") {
    const auto inv = PhonemeInventory::load(fixtures::data("inventory.tsv"));
    const auto w = build_weight_matrix(inv);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w.cost(i, i) == 0.0);
      for (std::size_t j = 0; j < w.size(); ++j) {
        CHECK(w.cost(i, j) == w.cost(j, i));
        CHECK(w.cost(i, j) >= 0.0);
        CHECK(w.cost(i, j) <= 1.0);
      }
    }
    CHECK(w.cost("θ", "t") < w.cost("θ", "k"));
  }
}
