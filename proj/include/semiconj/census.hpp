#ifndef SEMICONJ_CENSUS_HPP
#define SEMICONJ_CENSUS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "semiconj/conjugacy.hpp"
#include "semiconj/digraph.hpp"
#include "semiconj/semigroup.hpp"
#include "semiconj/transform.hpp"

namespace semiconj {

  struct EnumerationCaps {
    std::size_t px  = 6;
    std::size_t tx  = 7;
    std::size_t ix  = 7;
    std::size_t sym = 8;

    std::size_t for_family(Family f) const noexcept;
  };

  // |P(n)| = (n+1)^n, |T(n)| = n^n, |I(n)| = sum_k C(n,k)^2 k!, |Sym(n)| = n!
  std::size_t family_size(Family f, std::size_t n);

  // Every element of the family on n points, once each, in lexicographic
  // image order (undefined before 0).
  void for_each_element(Family                                            f,
                        std::size_t                                       n,
                        std::function<void(PartialTransformation const&)> fn,
                        EnumerationCaps const& caps = {});

  std::vector<PartialTransformation> enumerate(Family f, std::size_t n,
                                               EnumerationCaps const& caps = {});

  enum class CensusMode { invariant, bruteforce, both };

  std::string_view mode_name(CensusMode m);
  CensusMode       parse_mode(std::string_view s);

  // How bruteforce mode obtains ~c: over the Cayley table of the whole
  // family, or by rp-homomorphism search on each pair.
  enum class BruteforceEngine { automatic, table, oracle };

  struct CensusOptions {
    BruteforceEngine engine  = BruteforceEngine::automatic;
    std::size_t      threads = 0;    // 0: hardware concurrency
    std::size_t      table_limit = 256;
    EnumerationCaps  caps;
  };

  struct CensusClass {
    PartialTransformation representative;  // least member
    std::size_t           size = 0;
    ConjInvariant         invariant;       // of the representative
    std::size_t           distinct_invariants = 1;
    std::optional<std::map<std::size_t, std::size_t>> cycle_type;  // Sym only
  };

  struct CensusReport {
    Family                     family = Family::px;
    std::size_t                n      = 0;
    CensusMode                 mode   = CensusMode::invariant;
    std::size_t                total_elements = 0;
    std::optional<std::size_t> class_count_invariant;
    std::optional<std::size_t> class_count_bruteforce;
    std::optional<bool>        partitions_identical;
    std::vector<CensusClass>   classes;  // ordered by representative

    // Member lists, as indices into enumerate(family, n); ordered like
    // `classes` and sorted within.
    std::vector<std::vector<std::size_t>> invariant_partition;
    std::vector<std::vector<std::size_t>> bruteforce_partition;
  };

  // Largest n accepted by bruteforce mode for the family.
  std::size_t bruteforce_bound(Family f) noexcept;

  // Groups by (cs, s), or by cycle type for Sym, in invariant mode, and by
  // ~c-classes in bruteforce mode.  Invariant mode is unavailable for I(X);
  // `both` on I(X) runs bruteforce only.
  CensusReport census(Family f, std::size_t n, CensusMode mode,
                      CensusOptions const& opts = {});

  // ~c on the enumerated family by rp-homomorphism search on every pair.
  RelationMatrix oracle_relation(Family                                    f,
                                 std::vector<PartialTransformation> const& elts,
                                 std::size_t threads = 0);

  void to_json(nlohmann::json& j, CensusReport const& r);

}  // namespace semiconj

#endif
