#include "semiconj/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace semiconj {

  std::size_t EnumerationCaps::for_family(Family f) const noexcept {
    switch (f) {
      case Family::px:
        return px;
      case Family::tx:
        return tx;
      case Family::ix:
        return ix;
      case Family::sym:
        return sym;
    }
    return 0;
  }

  std::size_t family_size(Family f, std::size_t n) {
    auto ipow = [](std::size_t b, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    };
    auto fact = [](std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        r *= i;
      }
      return r;
    };
    switch (f) {
      case Family::px:
        return ipow(n + 1, n);
      case Family::tx:
        return ipow(n, n);
      case Family::sym:
        return fact(n);
      case Family::ix: {
        std::size_t total = 0;
        for (std::size_t k = 0; k <= n; ++k) {
          std::size_t choose = fact(n) / (fact(k) * fact(n - k));
          total += choose * choose * fact(k);
        }
        return total;
      }
    }
    return 0;
  }

  namespace {
    void check_cap(Family f, std::size_t n, EnumerationCaps const& caps) {
      if (n == 0) {
        throw Error("enumerate: n must be positive");
      }
      if (n > caps.for_family(f)) {
        throw Error("enumerate: n = " + std::to_string(n) + " exceeds the cap of "
                    + std::to_string(caps.for_family(f)) + " for "
                    + std::string(family_name(f)) + "(X)");
      }
    }

    bool injective_prefix(std::vector<point> const& img) {
      std::vector<bool> hit(img.size(), false);
      for (point y : img) {
        if (y == diamond) {
          continue;
        }
        if (hit[y]) {
          return false;
        }
        hit[y] = true;
      }
      return true;
    }
  }  // namespace

  void for_each_element(Family                                            f,
                        std::size_t                                       n,
                        std::function<void(PartialTransformation const&)> fn,
                        EnumerationCaps const&                            caps) {
    check_cap(f, n, caps);
    if (f == Family::sym) {
      std::vector<point> img(n);
      std::iota(img.begin(), img.end(), point{0});
      do {
        fn(PartialTransformation(n, img));
      } while (std::next_permutation(img.begin(), img.end()));
      return;
    }
    bool const partial   = f == Family::px || f == Family::ix;
    bool const injective = f == Family::ix;
    // digit d encodes diamond as 0 and point p as p + 1 for partial families
    std::size_t const  base = partial ? n + 1 : n;
    std::vector<std::size_t> digits(n, 0);
    std::vector<point>       img(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = partial ? (digits[i] == 0 ? diamond : point(digits[i] - 1))
                         : point(digits[i]);
      }
      if (!injective || injective_prefix(img)) {
        fn(PartialTransformation(n, img));
      }
      std::size_t i = n;
      while (i > 0 && ++digits[i - 1] == base) {
        digits[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return;
      }
    }
  }

  std::vector<PartialTransformation> enumerate(Family f, std::size_t n,
                                               EnumerationCaps const& caps) {
    std::vector<PartialTransformation> out;
    for_each_element(
        f, n, [&out](PartialTransformation const& a) { out.push_back(a); }, caps);
    return out;
  }

  std::string_view mode_name(CensusMode m) {
    switch (m) {
      case CensusMode::invariant:
        return "invariant";
      case CensusMode::bruteforce:
        return "bruteforce";
      case CensusMode::both:
        return "both";
    }
    return "?";
  }

  CensusMode parse_mode(std::string_view s) {
    if (s == "invariant") {
      return CensusMode::invariant;
    }
    if (s == "bruteforce") {
      return CensusMode::bruteforce;
    }
    if (s == "both") {
      return CensusMode::both;
    }
    throw Error("unknown census mode \"" + std::string(s)
                + "\" (expected invariant, bruteforce or both)");
  }

  std::size_t bruteforce_bound(Family f) noexcept {
    switch (f) {
      case Family::px:
        return 3;
      case Family::tx:
      case Family::ix:
        return 4;
      case Family::sym:
        return 5;
    }
    return 0;
  }

  namespace {
    std::size_t thread_count(std::size_t requested, std::size_t work) {
      std::size_t t = requested;
      if (t == 0) {
        t = std::max<std::size_t>(1, std::thread::hardware_concurrency());
      }
      return std::max<std::size_t>(1, std::min(t, work));
    }

    // Runs fn(begin, end) on disjoint contiguous chunks of [0, count).
    template <typename Fn>
    void parallel_chunks(std::size_t count, std::size_t threads, Fn fn) {
      std::size_t const t = thread_count(threads, count);
      if (t <= 1) {
        fn(std::size_t{0}, count);
        return;
      }
      std::vector<std::thread> pool;
      std::size_t const        chunk = (count + t - 1) / t;
      for (std::size_t begin = 0; begin < count; begin += chunk) {
        pool.emplace_back(fn, begin, std::min(count, begin + chunk));
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    using ClassKey = std::pair<ConjInvariant, std::map<std::size_t, std::size_t>>;

    ClassKey key_of(Family f, PartialTransformation const& a) {
      ClassKey k{invariant(a), {}};
      if (f == Family::sym) {
        k.second = cycle_type(a);
      }
      return k;
    }

    FiniteSemigroup family_table(std::vector<PartialTransformation> const& elts) {
      std::size_t const m = elts.size();
      std::vector<FiniteSemigroup::index> table(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          auto prod = compose(elts[i], elts[j]);
          auto it   = std::lower_bound(elts.begin(), elts.end(), prod);
          if (it == elts.end() || *it != prod) {
            throw std::logic_error("family_table: family is not closed");
          }
          table[i * m + j] = static_cast<FiniteSemigroup::index>(it - elts.begin());
        }
      }
      return FiniteSemigroup(m, std::move(table));
    }

    std::vector<std::vector<std::size_t>>
    widen(std::vector<std::vector<FiniteSemigroup::index>> const& parts) {
      std::vector<std::vector<std::size_t>> out;
      for (auto const& p : parts) {
        out.emplace_back(p.begin(), p.end());
      }
      return out;
    }
  }  // namespace

  RelationMatrix oracle_relation(Family                                    f,
                                 std::vector<PartialTransformation> const& elts,
                                 std::size_t                               threads) {
    std::size_t const m = elts.size();
    RelationMatrix    r(m);
    auto const        c = constraint_for(f);
    // hom[i*m + j]: an rp-homomorphism from elts[i] to elts[j] exists
    std::vector<std::uint8_t> hom(m * m, 0);
    parallel_chunks(m, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          hom[i * m + j] = search_rp_hom(elts[i], elts[j], c).has_value() ? 1 : 0;
        }
      }
    });
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        r.set(i, j, hom[i * m + j] && hom[j * m + i]);
      }
    }
    return r;
  }

  CensusReport census(Family f, std::size_t n, CensusMode mode,
                      CensusOptions const& opts) {
    if (f == Family::ix && mode == CensusMode::invariant) {
      throw Error("census: invariant mode is not available for i(X)");
    }
    bool const want_invariant = mode != CensusMode::bruteforce && f != Family::ix;
    bool const want_brute     = mode != CensusMode::invariant;
    if (want_brute && n > bruteforce_bound(f)) {
      throw Error("census: bruteforce mode supports n <= "
                  + std::to_string(bruteforce_bound(f)) + " for "
                  + std::string(family_name(f)) + "(X), got "
                  + std::to_string(n));
    }

    auto const elts = enumerate(f, n, opts.caps);
    std::size_t const m = elts.size();

    std::vector<ClassKey> keys(m);
    parallel_chunks(m, opts.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        keys[i] = key_of(f, elts[i]);
      }
    });

    CensusReport rep;
    rep.family         = f;
    rep.n              = n;
    rep.mode           = mode;
    rep.total_elements = m;

    if (want_invariant) {
      std::map<ClassKey, std::size_t> slot;
      for (std::size_t i = 0; i < m; ++i) {
        auto [it, fresh] = slot.emplace(keys[i], rep.invariant_partition.size());
        if (fresh) {
          rep.invariant_partition.emplace_back();
        }
        rep.invariant_partition[it->second].push_back(i);
      }
      rep.class_count_invariant = rep.invariant_partition.size();
    }

    if (want_brute) {
      bool use_table = opts.engine == BruteforceEngine::table
                       || (opts.engine == BruteforceEngine::automatic
                           && m <= opts.table_limit);
      RelationMatrix r = use_table
                             ? relation(family_table(elts), RelationKind::c)
                             : oracle_relation(f, elts, opts.threads);
      if (!r.is_equivalence()) {
        throw std::logic_error("census: ~c is not an equivalence");
      }
      rep.bruteforce_partition   = widen(partition_of(r));
      rep.class_count_bruteforce = rep.bruteforce_partition.size();
    }

    if (want_invariant && want_brute) {
      rep.partitions_identical = rep.invariant_partition == rep.bruteforce_partition;
    }

    auto const& parts = want_brute ? rep.bruteforce_partition : rep.invariant_partition;
    for (auto const& members : parts) {
      CensusClass cls;
      cls.representative = elts[members.front()];
      cls.size           = members.size();
      cls.invariant      = keys[members.front()].first;
      std::set<ClassKey> distinct;
      for (auto i : members) {
        distinct.insert(keys[i]);
      }
      cls.distinct_invariants = distinct.size();
      if (f == Family::sym) {
        cls.cycle_type = keys[members.front()].second;
      }
      rep.classes.push_back(std::move(cls));
    }
    return rep;
  }

  void to_json(nlohmann::json& j, CensusReport const& r) {
    j = nlohmann::json{{"family", family_name(r.family)},
                       {"n", r.n},
                       {"mode", mode_name(r.mode)},
                       {"total_elements", r.total_elements}};
    if (r.class_count_invariant) {
      j["class_count_invariant"] = *r.class_count_invariant;
    }
    if (r.class_count_bruteforce) {
      j["class_count_bruteforce"] = *r.class_count_bruteforce;
    }
    if (r.partitions_identical) {
      j["partitions_identical"] = *r.partitions_identical;
    }
    auto classes = nlohmann::json::array();
    for (auto const& c : r.classes) {
      nlohmann::json cj{{"representative", c.representative},
                        {"size", c.size},
                        {"cs", c.invariant.cs},
                        {"s", c.invariant.s},
                        {"distinct_invariants", c.distinct_invariants}};
      if (c.cycle_type) {
        auto ct = nlohmann::json::object();
        for (auto [len, count] : *c.cycle_type) {
          ct[std::to_string(len)] = count;
        }
        cj["cycle_type"] = std::move(ct);
      }
      classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
  }

}  // namespace semiconj
