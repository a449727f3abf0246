#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "symres/partition.hpp"

using namespace symres;

TEST_CASE("partitions_of: order and small values") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) ==
        std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
  CHECK(partitions_of(6).size() == 11);  // frozen from the composition-dedup oracle
}

TEST_CASE("partitions_of agrees with brute-force enumeration") {
  for (int k = 0; k <= 9; ++k) {
    auto ours = partitions_of(k);
    auto brute = oracles::brute_partitions(k);
    REQUIRE(ours.size() == brute.size());
    std::set<std::vector<int>> seen;
    for (const Partition& p : ours) {
      CHECK(p.size() == k);
      seen.insert(p.parts());
    }
    CHECK(seen.size() == ours.size());  // no duplicates
    CHECK(std::set<std::vector<int>>(brute.begin(), brute.end()) == seen);
  }
}

TEST_CASE("conjugate") {
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{5}.conjugate() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("conjugation is an involution up to size 12") {
  for (int k = 0; k <= 12; ++k)
    for (const Partition& p : partitions_of(k)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("pad") {
  CHECK(pad(Partition{}, 4) == Partition{4});
  CHECK(pad(Partition{2, 1}, 6) == Partition{3, 2, 1});
  CHECK_THROWS_AS(pad(Partition{2}, 3), std::invalid_argument);
  for (int s = 0; s <= 5; ++s)
    for (const Partition& mu : partitions_of(s))
      for (int n = mu.size() + mu.part(0); n <= 12; ++n) {
        Partition padded = pad(mu, n);
        CHECK(padded.size() == n);
        if (padded.length() >= 2) CHECK(padded.part(0) >= padded.part(1));
      }
}

TEST_CASE("horizontal and vertical strips") {
  CHECK(is_horizontal_strip(Partition{3, 1}, Partition{2, 1}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1}));
  CHECK(is_horizontal_strip(Partition{4, 2}, Partition{4, 2}));
  CHECK(is_vertical_strip(Partition{2, 1}, Partition{2}));
  CHECK_FALSE(is_vertical_strip(Partition{3}, Partition{1}));
  CHECK(is_vertical_strip(Partition{1, 1}, Partition{}));
}

TEST_CASE("vertical strip matches direct row-gain definition up to size 6") {
  auto direct_vertical = [](const Partition& mu, const Partition& nu) {
    for (int i = 0; i < std::max(mu.length(), nu.length()); ++i) {
      int gain = mu.part(i) - nu.part(i);
      if (gain < 0 || gain > 1) return false;
    }
    return true;
  };
  for (int a = 0; a <= 6; ++a)
    for (const Partition& mu : partitions_of(a))
      for (int b = 0; b <= 6; ++b)
        for (const Partition& nu : partitions_of(b)) {
          CHECK(is_vertical_strip(mu, nu) == direct_vertical(mu, nu));
          CHECK(is_vertical_strip(mu, nu) ==
                is_horizontal_strip(mu.conjugate(), nu.conjugate()));
        }
}

TEST_CASE("strip subpartition enumeration") {
  auto hs = horizontal_strip_subpartitions(Partition{2});
  CHECK(hs == std::vector<Partition>{Partition{}, Partition{1}, Partition{2}});
  auto vs = vertical_strip_subpartitions(Partition{2});
  CHECK(vs == std::vector<Partition>{Partition{1}, Partition{2}});
  for (int s = 0; s <= 5; ++s)
    for (const Partition& mu : partitions_of(s)) {
      for (const Partition& nu : horizontal_strip_subpartitions(mu))
        CHECK(is_horizontal_strip(mu, nu));
      for (const Partition& nu : vertical_strip_subpartitions(mu))
        CHECK(is_vertical_strip(mu, nu));
    }
}

TEST_CASE("z_of: examples from brute-force centralizers") {
  CHECK(z_of(Partition{1, 1, 1}) == 6);
  // centralizer orders in S_3 by direct count
  for (const auto& perm : oracles::all_permutations(3)) {
    auto type = oracles::cycle_type(perm);
    CHECK(to_int64(z_of(Partition(type))) == oracles::centralizer_order(perm));
  }
  CHECK(z_of(Partition{3}) == 3);
  CHECK(z_of(Partition{2, 1}) == 2);
}

TEST_CASE("class sizes partition the group for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    Integer total = 0;
    for (const Partition& rho : partitions_of(n)) total += factorial(n) / z_of(rho);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("text form: parse and round trip") {
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
  CHECK(Partition::parse("3,2,1").to_text() == "3,2,1");
  CHECK_THROWS_AS(Partition::parse("2,1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
}

TEST_CASE("table order is by size then reverse-lexicographic") {
  CHECK(table_less(Partition{3}, Partition{2, 1}));
  CHECK(table_less(Partition{2, 1}, Partition{1, 1, 1}));
  CHECK(table_less(Partition{1, 1, 1}, Partition{4}));  // smaller size first
  CHECK_FALSE(table_less(Partition{2, 1}, Partition{3}));
}
