#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "semiconj/census.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/semigroup.hpp"

using namespace semiconj;
using nlohmann::json;
using index_t = FiniteSemigroup::index;

namespace {
  FiniteSemigroup from_rows(std::vector<std::vector<std::size_t>> const& rows,
                            std::optional<index_t> zero = std::nullopt) {
    std::vector<index_t> t;
    for (auto const& r : rows) {
      for (auto v : r) {
        t.push_back(static_cast<index_t>(v));
      }
    }
    return FiniteSemigroup(rows.size(), t, zero);
  }

  // {a, 0} with aa = 0: element 0 is the zero, 1 is a
  FiniteSemigroup null2() {
    return from_rows({{0, 0}, {0, 0}});
  }

  std::vector<std::vector<std::size_t>> rows_of(FiniteSemigroup const& s) {
    std::vector<std::vector<std::size_t>> t(s.order(),
                                            std::vector<std::size_t>(s.order()));
    for (index_t a = 0; a < s.order(); ++a) {
      for (index_t b = 0; b < s.order(); ++b) {
        t[a][b] = s.product(a, b);
      }
    }
    return t;
  }

  FiniteSemigroup sym3() {
    auto gens = enumerate(Family::sym, 3);
    return from_generators(gens).semigroup;
  }

  void check_group_relations(FiniteSemigroup const& g) {
    auto expected = oracle::group_conjugacy(rows_of(g));
    auto c        = relation(g, RelationKind::c);
    CHECK(c == relation(g, RelationKind::o));
    CHECK(c == relation(g, RelationKind::l));
    for (index_t a = 0; a < g.order(); ++a) {
      for (index_t b = 0; b < g.order(); ++b) {
        REQUIRE(c(a, b) == expected[a][b]);
      }
    }
  }
}  // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(from_rows({}), Error);
  CHECK_THROWS_AS(from_rows({{0, 2}, {0, 0}}), Error);
  CHECK_THROWS_WITH_AS(from_rows({{1, 0}, {0, 0}}),
                       doctest::Contains("not associative"), Error);
  CHECK_THROWS_AS(FiniteSemigroup(2, std::vector<index_t>{0, 0, 0}), Error);
  CHECK_THROWS_AS(from_rows({{0, 0}, {0, 0}}, index_t{1}), Error);

  auto s = from_rows({{0, 0}, {0, 0}}, index_t{0});
  CHECK(s.zero() == index_t{0});
  CHECK_FALSE(s.identity());
  CHECK(s.is_commutative());
  CHECK_FALSE(s.is_cancellative());

  auto c3 = from_rows(oracle::cyclic_group(3));
  CHECK_FALSE(c3.zero());
  CHECK(c3.identity() == index_t{0});
  CHECK(c3.is_group());
  CHECK(c3.product(c3.one(), 2) == 2);
  CHECK(c3.product(1, c3.one()) == 1);
}

TEST_CASE("from_generators") {
  auto p2 = enumerate(Family::px, 2);
  auto s  = from_generators(p2);
  CHECK(s.semigroup.order() == 9);
  CHECK(s.semigroup.zero().has_value());
  CHECK(s.elements[*s.semigroup.zero()].is_zero());

  std::vector<PartialTransformation> id{PartialTransformation::identity(3)};
  CHECK(from_generators(id).semigroup.order() == 1);

  std::vector<PartialTransformation> cyc{make_cycle({0, 1, 2}, 3)};
  auto c = from_generators(cyc);
  CHECK(c.semigroup.order() == 3);
  CHECK(c.semigroup.is_group());
  CHECK(c.semigroup.is_commutative());
  auto where = c.index_of(PartialTransformation::identity(3));
  REQUIRE(where);
  CHECK(c.semigroup.identity() == *where);
  CHECK_FALSE(c.index_of(PartialTransformation(3)));

  auto t3 = enumerate(Family::tx, 3);
  CHECK_THROWS_AS(from_generators(t3, 10), Error);
  CHECK_THROWS_AS(from_generators(std::vector<PartialTransformation>{}), Error);
  std::vector<PartialTransformation> mixed{PartialTransformation(2),
                                           PartialTransformation(3)};
  CHECK_THROWS_AS(from_generators(mixed), Error);
}

TEST_CASE("p_set") {
  auto c3 = from_rows(oracle::cyclic_group(3));
  for (index_t a = 0; a < 3; ++a) {
    CHECK(p_set(c3, a) == std::vector<index_t>{0, 1, 2});
  }
  auto n = null2();
  CHECK(p_set(n, 0) == std::vector<index_t>{0});
  CHECK(p_set(n, 1).empty());
  CHECK_THROWS_AS(p_set(n, 2), Error);

  auto p2 = from_generators(enumerate(Family::px, 2)).semigroup;
  CHECK(p_set(p2, *p2.zero()) == std::vector<index_t>{*p2.zero()});
}

TEST_CASE("relations on small tables") {
  auto one = from_rows({{0}});
  for (auto k : {RelationKind::l, RelationKind::o, RelationKind::p,
                 RelationKind::pstar, RelationKind::c}) {
    auto r = relation(one, k);
    CHECK(r.count() == 1);
    CHECK(r(0, 0));
  }
  CHECK(classes(one, RelationKind::c).size() == 1);

  auto n = null2();
  CHECK(relation(n, RelationKind::c).is_diagonal());
  CHECK(relation(n, RelationKind::o).is_universal());

  auto s3 = sym3();
  auto cls = classes(s3, RelationKind::c);
  CHECK(cls.size() == 3);
  check_group_relations(s3);
}

TEST_CASE("classes require an equivalence") {
  // with a zero, g = 0 makes ~l universal
  auto p2 = from_generators(enumerate(Family::px, 2)).semigroup;
  CHECK(relation(p2, RelationKind::l).is_universal());
  CHECK(classes(p2, RelationKind::o).size() == 1);
  CHECK(classes(p2, RelationKind::c).size() == 4);

  auto t2 = from_generators(enumerate(Family::tx, 2)).semigroup;
  REQUIRE_FALSE(t2.zero());
  REQUIRE_FALSE(relation(t2, RelationKind::l).is_symmetric());
  CHECK_THROWS_WITH_AS(classes(t2, RelationKind::l),
                       doctest::Contains("not an equivalence"), Error);
  CHECK(classes(t2, RelationKind::c) == classes(t2, RelationKind::o));
}

TEST_CASE("check_axioms examples") {
  auto s3 = check_axioms(sym3());
  CHECK(s3.all_passed());
  CHECK_FALSE(s3.c_is_diagonal);
  CHECK(s3.find("c_trivial_iff_commutative_cancellative").status
        == CheckStatus::pass);

  auto c3 = check_axioms(from_rows(oracle::cyclic_group(3)));
  CHECK(c3.all_passed());
  CHECK(c3.c_is_diagonal);

  auto n = check_axioms(null2());
  CHECK(n.all_passed());
  CHECK(n.find("zero_class_singleton").status == CheckStatus::pass);
  CHECK(n.find("c_trivial_iff_commutative_cancellative").status
        == CheckStatus::skipped);
  CHECK(n.find("zero_free_c_equals_o").status == CheckStatus::skipped);
  CHECK_THROWS_AS(n.find("nonsense"), Error);

  json j = n;
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == 6);
}

TEST_CASE("text format") {
  std::istringstream in("# nilpotent\n2\nzero=0\n0 0\n\n0 0\n");
  auto               s = read_cayley_text(in);
  CHECK(s.order() == 2);
  CHECK(s.zero() == index_t{0});
  CHECK(write_cayley_text(s) == "2\nzero=0\n0 0\n0 0\n");

  std::istringstream round(write_cayley_text(sym3()));
  CHECK(read_cayley_text(round).table() == sym3().table());

  auto bad = [](char const* text) {
    std::istringstream is(text);
    return read_cayley_text(is);
  };
  CHECK_THROWS_WITH_AS(bad(""), doctest::Contains("order"), Error);
  CHECK_THROWS_WITH_AS(bad("x\n"), doctest::Contains("order"), Error);
  CHECK_THROWS_WITH_AS(bad("2\n0 0\n"), doctest::Contains("rows"), Error);
  CHECK_THROWS_WITH_AS(bad("2\n0 0\n0\n"), doctest::Contains("row 1"), Error);
  CHECK_THROWS_WITH_AS(bad("2\n0 0\n0 5\n"), doctest::Contains("row 1 entry 1"),
                       Error);
  CHECK_THROWS_WITH_AS(bad("1\n0\n0\n"), doctest::Contains("more than"), Error);
  CHECK_THROWS_WITH_AS(bad("2\nzero=q\n0 0\n0 0\n"), doctest::Contains("zero"),
                       Error);
  CHECK_THROWS_AS(bad("2\nzero=1\n0 0\n0 0\n"), Error);
}

TEST_CASE("json format") {
  auto s = cayley_from_json(json::parse(R"({"order":2,"table":[[0,0],[0,0]],"zero":0})"));
  CHECK(s.zero() == index_t{0});
  json j = s;
  CHECK(j == json::parse(R"({"order":2,"table":[[0,0],[0,0]],"zero":0})"));
  CHECK_THROWS_WITH_AS(cayley_from_json(json::parse(R"({"table":[[0]]})")),
                       doctest::Contains("\"order\""), Error);
  CHECK_THROWS_WITH_AS(cayley_from_json(json::parse(R"({"order":2,"table":[[0,0]]})")),
                       doctest::Contains("\"table\""), Error);
  CHECK_THROWS_WITH_AS(
      cayley_from_json(json::parse(R"({"order":2,"table":[[0,0],[0,7]]})")),
      doctest::Contains("\"table\"[1][1]"), Error);
  CHECK_THROWS_WITH_AS(
      cayley_from_json(json::parse(R"({"order":1,"table":[[0]],"zero":"a"})")),
      doctest::Contains("\"zero\""), Error);
}

TEST_CASE("property: axioms on random transformation semigroups") {
  std::mt19937 rng(67);
  int          checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t                        n = 2 + rng() % 2;
    std::vector<PartialTransformation> gens;
    std::size_t                        k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      gens.emplace_back(n, oracle::random_image(rng, n, 0.3));
    }
    auto s = from_generators(gens, 200).semigroup;
    auto rep = check_axioms(s);
    REQUIRE(rep.all_passed());
    REQUIRE(relation(s, RelationKind::pstar).is_equivalence());
    REQUIRE(relation(s, RelationKind::p).subset_of(relation(s, RelationKind::pstar)));
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("property: P-transitivity of conjugating elements") {
  std::mt19937 rng(71);
  int tested = 0;
  while (tested < 15) {
    std::vector<PartialTransformation> gens;
    for (int i = 0; i < 2; ++i) {
      gens.emplace_back(3, oracle::random_image(rng, 3, 0.3));
    }
    FiniteSemigroup s;
    try {
      s = from_generators(gens, 60).semigroup;
    } catch (Error const&) {
      continue;
    }
    ++tested;
    auto const m = static_cast<index_t>(s.order());
    std::vector<std::vector<bool>> in_p(m, std::vector<bool>(m + 1, false));
    for (index_t a = 0; a < m; ++a) {
      for (auto g : p_set(s, a)) {
        in_p[a][g] = true;
      }
      in_p[a][m] = true;  // the adjoined identity
    }
    for (index_t a = 0; a < m; ++a) {
      for (index_t g1 = 0; g1 <= m; ++g1) {
        if (!in_p[a][g1]) {
          continue;
        }
        for (index_t b = 0; b < m; ++b) {
          if (s.product(a, g1) != s.product(g1, b)) {
            continue;
          }
          for (index_t g2 = 0; g2 <= m; ++g2) {
            if (!in_p[b][g2]) {
              continue;
            }
            index_t bg2 = s.product(b, g2);
            for (index_t c = 0; c < m; ++c) {
              if (bg2 == s.product(g2, c)) {
                REQUIRE(in_p[a][s.product(g1, g2)]);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("property: group tables") {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto g = from_rows(oracle::cyclic_group(k));
    check_group_relations(g);
    CHECK(relation(g, RelationKind::c).is_diagonal());
  }
  check_group_relations(sym3());
  auto s4 = from_generators(enumerate(Family::sym, 4)).semigroup;
  check_group_relations(s4);
  CHECK(classes(s4, RelationKind::c).size() == 5);
}

TEST_CASE("property: Cayley table of P(n) matches the invariant decider") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto elts = enumerate(Family::px, n);
    auto ts   = from_generators(elts);
    auto c    = relation(ts.semigroup, RelationKind::c);
    for (index_t i = 0; i < ts.elements.size(); ++i) {
      for (index_t j = 0; j < ts.elements.size(); ++j) {
        REQUIRE(c(i, j) == conj_p_finite(ts.elements[i], ts.elements[j]).conjugate);
      }
    }
  }
}

TEST_CASE("identity adjoined even when S is a monoid") {
  // P(1) = {0, id}: adjoining a fresh identity leaves relations unchanged
  auto s = from_rows({{0, 0}, {0, 1}});
  CHECK(s.identity() == index_t{1});
  CHECK(classes(s, RelationKind::c).size() == 2);
  CHECK(p_set(s, 1) == std::vector<index_t>{1});
}
