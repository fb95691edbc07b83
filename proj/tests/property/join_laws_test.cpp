#include <gtest/gtest.h>

#include <random>

#include "types/sem_type.hpp"

namespace recipe::types {
namespace {

SemType random_type(std::mt19937_64& rng) {
  static const char* kLiterals[] = {"up", "down", "left", "right", "a", "b", "c", "d", "e", "f"};
  switch (std::uniform_int_distribution<int>(0, 10)(rng)) {
    case 0: return SemType::never();
    case 1: return SemType::any();
    case 2: return SemType::boolean();
    case 3: return SemType::string_any();
    case 4: return SemType::nonneg_real();
    case 5: return SemType::real();
    case 6: return SemType::posn();
    case 7: return SemType::image();
    case 8: return SemType::alias_of(std::uniform_int_distribution<int>(0, 1)(rng) ? "rocket" : "world");
    default: {
      std::set<std::string> lits;
      int n = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int i = 0; i < n; ++i) lits.insert(kLiterals[std::uniform_int_distribution<int>(0, 9)(rng)]);
      return SemType::string_enum(lits);
    }
  }
}

class JoinLaws : public ::testing::Test {
 protected:
  std::mt19937_64 rng{8675309};
  static constexpr int kCases = 2000;
};

TEST_F(JoinLaws, Commutative) {
  for (int i = 0; i < kCases; ++i) {
    SemType a = random_type(rng), b = random_type(rng);
    ASSERT_EQ(join(a, b), join(b, a)) << render_type(a) << " " << render_type(b);
  }
}

TEST_F(JoinLaws, Associative) {
  for (int i = 0; i < kCases; ++i) {
    SemType a = random_type(rng), b = random_type(rng), c = random_type(rng);
    ASSERT_EQ(join(join(a, b), c), join(a, join(b, c)))
        << render_type(a) << " " << render_type(b) << " " << render_type(c);
  }
}

TEST_F(JoinLaws, Idempotent) {
  for (int i = 0; i < kCases; ++i) {
    SemType a = random_type(rng);
    ASSERT_EQ(join(a, a), a) << render_type(a);
  }
}

TEST_F(JoinLaws, NeverIsIdentityAndAnyAbsorbs) {
  for (int i = 0; i < kCases; ++i) {
    SemType a = random_type(rng);
    ASSERT_EQ(join(SemType::never(), a), a);
    ASSERT_EQ(join(SemType::any(), a), SemType::any());
  }
}

TEST_F(JoinLaws, JoinIsTheLeastUpperBound) {
  for (int i = 0; i < kCases; ++i) {
    SemType a = random_type(rng), b = random_type(rng), c = random_type(rng);
    SemType j = join(a, b);
    ASSERT_TRUE(subtype(a, j));
    ASSERT_TRUE(subtype(b, j));
    if (subtype(a, c) && subtype(b, c)) {
      ASSERT_TRUE(subtype(j, c)) << render_type(a) << " " << render_type(b) << " " << render_type(c);
    }
  }
}

TEST_F(JoinLaws, SubtypeIsAPartialOrder) {
  for (int i = 0; i < kCases; ++i) {
    SemType a = random_type(rng), b = random_type(rng), c = random_type(rng);
    ASSERT_TRUE(subtype(a, a));
    if (subtype(a, b) && subtype(b, a)) {
      ASSERT_EQ(a, b);
    }
    if (subtype(a, b) && subtype(b, c)) {
      ASSERT_TRUE(subtype(a, c));
    }
  }
}

}  // namespace
}  // namespace recipe::types
