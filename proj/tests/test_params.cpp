#include <algorithm>
#include <numeric>

#include "belyi/params.hpp"
#include "doctest.h"

using namespace belyi;

namespace {

std::vector<Integer> values(const std::vector<Residue>& rs) {
  std::vector<Integer> out;
  for (const Residue& r : rs) out.push_back(r.value());
  return out;
}

}  // namespace

TEST_CASE("residues are canonical") {
  CHECK(Residue(7, 5).value() == 2);
  CHECK(Residue(-1, 5).value() == 4);
  CHECK(Residue(-10, 5).value() == 0);
  CHECK(Residue(3, 5) + Residue(4, 5) == Residue(2, 5));
  CHECK(Residue(3, 5) - Residue(4, 5) == Residue(4, 5));
  CHECK(Residue(3, 5) * Residue(4, 5) == Residue(2, 5));
  CHECK(-Residue(1, 5) == Residue(4, 5));
  CHECK(Residue(3, 5).inverse() == Residue(2, 5));
  CHECK_THROWS_AS(Residue(3, 6).inverse(), NotCoprimeError);
  CHECK_THROWS_AS(Residue(1, 5) + Residue(1, 7), RangeError);
  CHECK_THROWS_AS(Residue(1, 0), RangeError);
}

TEST_CASE("validate: worked examples") {
  const CurveParams p51 = validate(5, 1);
  CHECK(p51.c() == 3);
  CHECK(p51.genus() == 2);
  CHECK(p51.inertia()[0].value() == 1);
  CHECK(p51.inertia()[1].value() == 1);
  CHECK(p51.inertia()[2].value() == 3);

  const CurveParams p116 = validate(11, 6);
  CHECK(p116.c() == 8);
  CHECK(p116.genus() == 5);
  CHECK(values({p116.inertia().begin(), p116.inertia().end()}) == std::vector<Integer>{1, 6, 4});

  CHECK(validate(11, 7).c() == 7);
}

TEST_CASE("validate: errors") {
  CHECK_THROWS_AS(validate(2, 1), RangeError);
  CHECK_THROWS_AS(validate(5, 0), RangeError);
  CHECK_THROWS_AS(validate(5, 4), RangeError);
  try {
    validate(6, 1);
    FAIL("expected RamificationError");
  } catch (const RamificationError& e) {
    CHECK(e.gcd() == 2);
    CHECK(std::string(e.what()).find("gcd") != std::string::npos);
    CHECK(std::string(e.what()).find("odd") != std::string::npos);
  }
  CHECK_THROWS_AS(validate(9, 2), RamificationError);
}

TEST_CASE("validate accepts exactly the admissible pairs for n <= 101") {
  for (Integer n = -2; n <= 101; ++n) {
    for (Integer k = -2; k <= n + 2; ++k) {
      const bool expected = n >= 3 && k >= 1 && k <= n - 2 && std::gcd(n, k * (k + 1)) == 1;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(is_valid(n, k) == expected);
      if (expected) {
        const CurveParams p = validate(n, k);
        CHECK(n % 2 == 1);
        CHECK(mod(p.c() * (k + 1), n) == 1);
        CHECK(p.c() >= 1);
        CHECK(p.c() <= n - 1);
        CHECK(p.genus() == (n - 1) / 2);
        const auto& in = p.inertia();
        CHECK((in[0] + in[1] + in[2]).value() == 0);
        CHECK(static_cast<Integer>(s_set(p).size()) == p.c() - 1);
      } else {
        CHECK_THROWS_AS(validate(n, k), Error);
      }
    }
  }
}

TEST_CASE("valid_pairs counts") {
  // odd n in {3,5,7,9,11}: 1 + 3 + 5 + 3 + 9
  CHECK(valid_pairs(11).size() == 21);
  CHECK(valid_pairs(2).empty());
}

TEST_CASE("s_set examples") {
  std::vector<Integer> s51 = values(s_set(validate(5, 1)));
  std::sort(s51.begin(), s51.end());
  CHECK(s51 == std::vector<Integer>{2, 4});
  CHECK(values(s_set(validate(5, 2))) == std::vector<Integer>{3});
  CHECK(values(s_set(validate(11, 6))) == std::vector<Integer>{7, 3, 10, 6, 2, 9, 5});
}

TEST_CASE("s_set is injective") {
  for (const CurveParams& p : valid_pairs(61)) {
    auto s = values(s_set(p));
    std::sort(s.begin(), s.end());
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    CHECK(std::find(s.begin(), s.end(), 0) == s.end());
  }
}

TEST_CASE("fermat_auto_image") {
  const CurveParams p = validate(5, 2);
  CHECK(fermat_auto_image(p, p.residue(1), p.residue(0)).value() == 1);
  CHECK(fermat_auto_image(p, p.residue(1), p.residue(2)).value() == 0);
  CHECK(fermat_auto_image(p, p.residue(0), p.residue(1)).value() == 2);
}

TEST_CASE("fermat_auto_image is a homomorphism with the stated kernel") {
  for (const CurveParams& p : valid_pairs(23)) {
    const Integer n = p.n();
    const Residue h_j = p.residue(-p.k_inverse());
    CHECK(fermat_auto_image(p, p.residue(1), h_j).value() == 0);
    Integer kernel_size = 0;
    for (Integer i = 0; i < n; ++i) {
      for (Integer j = 0; j < n; ++j) {
        const Residue img = fermat_auto_image(p, p.residue(i), p.residue(j));
        for (Integer a = 0; a < n; a += 3) {
          const Residue sum = fermat_auto_image(p, p.residue(i + a), p.residue(j + 2 * a));
          CHECK(sum == img + fermat_auto_image(p, p.residue(a), p.residue(2 * a)));
        }
        if (img.value() == 0) {
          ++kernel_size;
          // kernel element is a multiple of (1, -k^{-1})
          CHECK(p.residue(j) == i * h_j);
        }
      }
    }
    CHECK(kernel_size == n);
  }
}
