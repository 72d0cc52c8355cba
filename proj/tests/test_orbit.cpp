#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "orbdet/orbit.hpp"

using namespace orbdet;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do
    out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
  return std::set<Permutation>(v.begin(), v.end());
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("canonical representative fixes 1 and is reachable by rotation") {
  CHECK(canonical_representative(Permutation({3, 2, 4, 1})) == Permutation({1, 3, 2, 4}));
  CHECK(canonical_representative(Permutation({2, 4, 1, 3})) == Permutation({1, 3, 2, 4}));
  CHECK(canonical_representative(Permutation::identity(5)) == Permutation::identity(5));
  for (const Permutation& p : all_permutations(6)) {
    Permutation c = canonical_representative(p);
    CHECK(c.fixes_first());
    bool reachable = false;
    for (int r = 0; r < 6; ++r) reachable = reachable || rotate(c, r) == p;
    CHECK(reachable);
  }
}

TEST_CASE("cyclic orbit of a seed") {
  Orbit o = Orbit::cyclic(Permutation({2, 4, 1, 3}));
  CHECK(o.kind() == OrbitKind::cyclic);
  CHECK(o.canonical() == Permutation({1, 3, 2, 4}));
  CHECK(o.elements().size() == 4);
  CHECK(as_set(o.elements()) == as_set({Permutation({1, 3, 2, 4}), Permutation({3, 2, 4, 1}),
                                        Permutation({2, 4, 1, 3}), Permutation({4, 1, 3, 2})}));
  for (int r = 0; r < 4; ++r) {
    CHECK(o.elements()[static_cast<size_t>(r)] == rotate(o.canonical(), r));
    CHECK(o.sign_at(r) == o.elements()[static_cast<size_t>(r)].sign());
  }
  CHECK(o.index_of(Permutation({2, 4, 1, 3})).value() == 2);
  CHECK(!o.index_of(Permutation({1, 2, 3, 4})).has_value());
}

TEST_CASE("orbit is seed independent") {
  for (const Permutation& p : all_permutations(6)) {
    Orbit o = Orbit::cyclic(p);
    CHECK(as_set(o.elements()) == as_set(Orbit::cyclic(o.canonical()).elements()));
    CHECK(o.index_of(p).has_value());
  }
}

TEST_CASE("orbit elements are distinct: the stabilizer is trivial") {
  for (int n = 2; n <= 7; ++n)
    for (const Permutation& base : base_monomials(n))
      CHECK(as_set(Orbit::cyclic(base).elements()).size() == static_cast<size_t>(n));
}

TEST_CASE("orbit sign pattern alternates for even order, is constant for odd") {
  for (int n = 3; n <= 7; ++n)
    for (const Permutation& base : base_monomials(n)) {
      Orbit o = Orbit::cyclic(base);
      for (int r = 0; r + 1 < n; ++r) {
        if (n % 2 == 0)
          CHECK(o.sign_at(r) * o.sign_at(r + 1) == Sign::minus());
        else
          CHECK(o.sign_at(r) == o.sign_at(r + 1));
      }
    }
}

TEST_CASE("base monomials: count, order, lexicography") {
  CHECK(base_monomials(3) ==
        std::vector<Permutation>{Permutation({1, 2, 3}), Permutation({1, 3, 2})});
  std::vector<Permutation> b4 = base_monomials(4);
  REQUIRE(b4.size() == 6);
  CHECK(b4[0] == Permutation({1, 2, 3, 4}));
  CHECK(b4[1] == Permutation({1, 2, 4, 3}));
  CHECK(b4[2] == Permutation({1, 3, 2, 4}));
  CHECK(b4[3] == Permutation({1, 3, 4, 2}));
  CHECK(b4[4] == Permutation({1, 4, 2, 3}));
  CHECK(b4[5] == Permutation({1, 4, 3, 2}));
  std::vector<Permutation> b5 = base_monomials(5);
  CHECK(b5.size() == 24);
  CHECK(std::is_sorted(b5.begin(), b5.end()));
  for (const Permutation& b : b5) CHECK(b.fixes_first());
  CHECK_THROWS_AS(base_monomials(11), std::invalid_argument);
}

TEST_CASE("base monomial table values") {
  // inversions 0,1,1,2,2,3 with alternating orbit sign patterns
  std::vector<Permutation> b4 = base_monomials(4);
  std::vector<long long> inv;
  std::vector<char> sign;
  for (const Permutation& b : b4) {
    inv.push_back(b.inversions());
    sign.push_back(b.sign().symbol());
  }
  CHECK(inv == std::vector<long long>{0, 1, 1, 2, 2, 3});
  CHECK(sign == std::vector<char>{'+', '-', '-', '+', '+', '-'});
}

TEST_CASE("partition covers S_n exactly once") {
  for (int n = 2; n <= 6; ++n) {
    OrbitPartition part = OrbitPartition::build(n);
    CHECK(part.orbits().size() == static_cast<size_t>(factorial(n - 1)));
    std::set<Permutation> seen;
    for (const Orbit& o : part.orbits()) {
      CHECK(o.elements().size() == static_cast<size_t>(n));
      for (const Permutation& p : o.elements()) CHECK(seen.insert(p).second);
    }
    CHECK(seen.size() == static_cast<size_t>(factorial(n)));
    CHECK(seen == as_set(all_permutations(n)));
  }
}

TEST_CASE("increment shifts values cyclically") {
  CHECK(increment(Permutation({1, 2, 4, 3}), 1) == Permutation({2, 3, 1, 4}));
  CHECK(increment(Permutation({1, 2, 4, 3}), 2) == Permutation({3, 4, 2, 1}));
  CHECK(increment(Permutation({3, 1, 2}), 3) == Permutation({3, 1, 2}));
  CHECK(increment(Permutation({3, 1, 2}), -1) == increment(Permutation({3, 1, 2}), 2));
}

TEST_CASE("additive orbit") {
  Orbit o = Orbit::additive(Permutation({1, 2, 4, 3}));
  CHECK(o.kind() == OrbitKind::additive);
  CHECK(o.canonical() == Permutation({1, 2, 4, 3}));
  CHECK(as_set(o.elements()) == as_set({Permutation({1, 2, 4, 3}), Permutation({2, 3, 1, 4}),
                                        Permutation({3, 4, 2, 1}), Permutation({4, 1, 3, 2})}));
  // canonical even from an off-base seed
  Orbit o2 = Orbit::additive(Permutation({3, 4, 2, 1}));
  CHECK(o2.canonical() == Permutation({1, 2, 4, 3}));
  CHECK(as_set(o2.elements()) == as_set(o.elements()));
}

TEST_CASE("additive and cyclic orbits of the same base share only the base") {
  Orbit cyc = Orbit::cyclic(Permutation({1, 2, 4, 3}));
  Orbit add = Orbit::additive(Permutation({1, 2, 4, 3}));
  std::set<Permutation> c = as_set(cyc.elements()), a = as_set(add.elements());
  std::vector<Permutation> common;
  std::set_intersection(c.begin(), c.end(), a.begin(), a.end(), std::back_inserter(common));
  CHECK(common == std::vector<Permutation>{Permutation({1, 2, 4, 3})});
  // for the identity the two orbits coincide element by element
  Orbit ic = Orbit::cyclic(Permutation::identity(4));
  Orbit ia = Orbit::additive(Permutation::identity(4));
  CHECK(ic.elements() == ia.elements());
}

TEST_CASE("additive partition covers S_n exactly once") {
  for (int n = 2; n <= 6; ++n) {
    OrbitPartition part = OrbitPartition::build(n, OrbitKind::additive);
    std::set<Permutation> seen;
    for (const Orbit& o : part.orbits())
      for (const Permutation& p : o.elements()) CHECK(seen.insert(p).second);
    CHECK(seen.size() == static_cast<size_t>(factorial(n)));
  }
}
