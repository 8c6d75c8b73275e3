#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "semiconj/census.hpp"

using namespace semiconj;
using nlohmann::json;

namespace {
  std::size_t class_total(CensusReport const& r) {
    std::size_t total = 0;
    for (auto const& c : r.classes) {
      total += c.size;
    }
    return total;
  }

  // Class counts recorded from the first run; regression snapshots.
  struct Snapshot {
    Family      family;
    std::size_t n;
    std::size_t classes;
  };
  constexpr Snapshot snapshots[] = {
      {Family::px, 1, 2},  {Family::px, 2, 4},  {Family::px, 3, 7},
      {Family::tx, 1, 1},  {Family::tx, 2, 2},  {Family::tx, 3, 3},
      {Family::tx, 4, 4},  {Family::sym, 1, 1}, {Family::sym, 2, 2},
      {Family::sym, 3, 3}, {Family::sym, 4, 5}, {Family::sym, 5, 7},
      {Family::ix, 1, 2},  {Family::ix, 2, 5},  {Family::ix, 3, 10},
  };
}  // namespace

TEST_CASE("family sizes") {
  CHECK(family_size(Family::px, 1) == 2);
  CHECK(family_size(Family::px, 3) == 64);
  CHECK(family_size(Family::tx, 2) == 4);
  CHECK(family_size(Family::sym, 3) == 6);
  CHECK(family_size(Family::ix, 2) == 7);
  CHECK(family_size(Family::ix, 3) == 34);
}

TEST_CASE("enumerate") {
  CHECK(enumerate(Family::px, 1).size() == 2);
  CHECK(enumerate(Family::tx, 2).size() == 4);
  CHECK(enumerate(Family::sym, 3).size() == 6);

  for (auto f : {Family::px, Family::tx, Family::ix, Family::sym}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto elts = enumerate(f, n);
      REQUIRE(elts.size() == family_size(f, n));
      REQUIRE(std::is_sorted(elts.begin(), elts.end()));
      REQUIRE(std::adjacent_find(elts.begin(), elts.end()) == elts.end());
      for (auto const& a : elts) {
        REQUIRE(member_of(f, a));
      }
    }
  }
  auto p2 = enumerate(Family::px, 2);
  CHECK(p2.front().is_zero());
  CHECK(p2.back() == PartialTransformation(2, {1, 1}));

  CHECK_THROWS_AS(enumerate(Family::px, 7), Error);
  CHECK_THROWS_AS(enumerate(Family::tx, 0), Error);
  EnumerationCaps caps;
  caps.tx = 2;
  CHECK_THROWS_AS(enumerate(Family::tx, 3, caps), Error);
  CHECK(family_size(Family::px, 6) == 117649);
}

TEST_CASE("census examples") {
  auto p2 = census(Family::px, 2, CensusMode::both);
  CHECK(p2.total_elements == 9);
  CHECK(p2.class_count_invariant == std::size_t{4});
  CHECK(p2.class_count_bruteforce == std::size_t{4});
  CHECK(p2.partitions_identical == true);
  CHECK(p2.classes.front().representative.is_zero());
  CHECK(p2.classes.front().size == 1);

  auto t2 = census(Family::tx, 2, CensusMode::invariant);
  CHECK(t2.class_count_invariant == std::size_t{2});
  CHECK_FALSE(t2.class_count_bruteforce);
  std::set<std::vector<std::size_t>> cs;
  for (auto const& c : t2.classes) {
    cs.insert(c.invariant.cs);
  }
  CHECK(cs == std::set<std::vector<std::size_t>>{{1}, {2}});

  auto s3 = census(Family::sym, 3, CensusMode::both);
  CHECK(s3.class_count_invariant == std::size_t{3});
  CHECK(s3.partitions_identical == true);
  for (auto const& c : s3.classes) {
    CHECK(c.cycle_type.has_value());
  }
}

TEST_CASE("census bounds and errors") {
  CHECK_THROWS_AS(census(Family::ix, 2, CensusMode::invariant), Error);
  CHECK_THROWS_AS(census(Family::px, 4, CensusMode::bruteforce), Error);
  CHECK_THROWS_AS(census(Family::tx, 5, CensusMode::both), Error);
  CHECK_THROWS_AS(census(Family::sym, 6, CensusMode::bruteforce), Error);
  CHECK_THROWS_AS(parse_mode("fast"), Error);
  CHECK(parse_mode("both") == CensusMode::both);

  auto i2 = census(Family::ix, 2, CensusMode::both);
  CHECK_FALSE(i2.class_count_invariant);
  CHECK_FALSE(i2.partitions_identical);
  CHECK(i2.class_count_bruteforce.has_value());
}

TEST_CASE("census partitions agree for P and T") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = census(Family::px, n, CensusMode::both);
    REQUIRE(r.partitions_identical == true);
    REQUIRE(class_total(r) == r.total_elements);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = census(Family::tx, n, CensusMode::both);
    REQUIRE(r.partitions_identical == true);
    REQUIRE(class_total(r) == r.total_elements);
  }
}

TEST_CASE("table and oracle engines agree") {
  for (auto f : {Family::px, Family::tx, Family::ix, Family::sym}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      CensusOptions table, search;
      table.engine  = BruteforceEngine::table;
      search.engine = BruteforceEngine::oracle;
      auto a = census(f, n, CensusMode::bruteforce, table);
      auto b = census(f, n, CensusMode::bruteforce, search);
      REQUIRE(a.bruteforce_partition == b.bruteforce_partition);
    }
  }
}

TEST_CASE("class count snapshots and monotonicity") {
  std::map<Family, std::size_t> last;
  for (auto const& s : snapshots) {
    auto mode = s.family == Family::ix ? CensusMode::bruteforce : CensusMode::both;
    auto r    = census(s.family, s.n, mode);
    auto got  = s.family == Family::ix ? *r.class_count_bruteforce
                                       : *r.class_count_invariant;
    CHECK_MESSAGE(got == s.classes, family_name(s.family), "(", s.n, ")");
    CHECK(got >= last[s.family]);
    last[s.family] = got;
  }
  // invariant mode alone reaches further
  CHECK(*census(Family::tx, 5, CensusMode::invariant).class_count_invariant == 6);
  CHECK(*census(Family::sym, 6, CensusMode::invariant).class_count_invariant == 11);
}

TEST_CASE("census is deterministic across thread counts") {
  CensusOptions one, many;
  one.threads  = 1;
  many.threads = 4;
  json a = census(Family::px, 3, CensusMode::both, one);
  json b = census(Family::px, 3, CensusMode::both, many);
  CHECK(a.dump() == b.dump());
  json c = census(Family::ix, 3, CensusMode::bruteforce, one);
  CensusOptions many_oracle = many;
  many_oracle.engine        = BruteforceEngine::oracle;
  json d = census(Family::ix, 3, CensusMode::bruteforce, many_oracle);
  CHECK(c.dump() == d.dump());
}

TEST_CASE("census json") {
  json j = census(Family::sym, 3, CensusMode::both);
  CHECK(j["family"] == "sym");
  CHECK(j["n"] == 3);
  CHECK(j["total_elements"] == 6);
  CHECK(j["classes"].size() == 3);
  CHECK(j["classes"][0]["cycle_type"] == json::parse(R"({"1":3})"));
  CHECK(j["partitions_identical"] == true);
}

TEST_CASE("I(X) census is an equivalence with the zero alone") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto elts = enumerate(Family::ix, n);
    auto r    = oracle_relation(Family::ix, elts, 1);
    REQUIRE(r.is_equivalence());
    auto rep  = census(Family::ix, n, CensusMode::bruteforce);
    REQUIRE(rep.classes.front().representative.is_zero());
    REQUIRE(rep.classes.front().size == 1);
    REQUIRE(class_total(rep) == elts.size());
  }
}
