#include <doctest.h>

#include <cmath>
#include <set>

#include "naijavar/error.hpp"
#include "naijavar/sampler.hpp"

using namespace naijavar;

namespace {

VariantCandidate scored(std::string s, double d) {
  VariantCandidate c;
  c.surface = std::move(s);
  c.distance = d;
  return c;
}

}  // namespace

TEST_SUITE("sampler") {
  TEST_CASE("generator follows the standard 64-bit Mersenne Twister") {
    Rng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = rng.next();
    CHECK(x == 9981545732273789042ULL);
  }

  TEST_CASE("uniform and bounded draws") {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
      CHECK(rng.below(7) < 7);
      CHECK(rng.below(1) == 0);
    }
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  }

  TEST_CASE("derived seeds differ per stream and are stable") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(7, s));
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
    CHECK(derive_seed(7, 3) != derive_seed(8, 3));
  }

  TEST_CASE("inverse-distance probabilities") {
    const std::vector<double> d{1.0, 3.0};
    const auto p = inverse_distance_probabilities(d);
    CHECK(p[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.25).epsilon(1e-12));
    const std::vector<double> zero{0.0, 1.0};
    const auto pz = inverse_distance_probabilities(zero, 1e-4);
    CHECK(pz[0] == doctest::Approx(1e4 / (1e4 + 1.0)));
    const std::vector<double> single{2.5};
    CHECK(inverse_distance_probabilities(single)[0] == 1.0);
  }

  TEST_CASE("candidate distribution validation") {
    CHECK_THROWS_AS(candidate_probabilities({}), ValidationError);
    std::vector<VariantCandidate> unscored{VariantCandidate{"x", {}, {}, {}, {}}};
    CHECK_THROWS_AS(candidate_probabilities(unscored), ValidationError);
    std::vector<VariantCandidate> ok{scored("a", 1.0)};
    CHECK_THROWS_AS(candidate_probabilities(ok, 0.0), ValidationError);
    const auto dist = candidate_probabilities(ok);
    CHECK(*dist.candidates[0].probability == 1.0);
  }

  TEST_CASE("sampling frequencies follow the distribution") {
    const auto dist = candidate_probabilities({scored("a", 1.0), scored("b", 3.0)});
    Rng rng(123);
    int a = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) a += sample_variant(dist, rng).surface == "a" ? 1 : 0;
    CHECK(std::abs(static_cast<double>(a) / n - 0.75) <= 0.01);
  }
}
