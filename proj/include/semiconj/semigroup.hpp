#ifndef SEMICONJ_SEMIGROUP_HPP
#define SEMICONJ_SEMIGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiconj/transform.hpp"

namespace semiconj {

  // An abstract finite semigroup given by its Cayley table.  Elements are
  // 0..order()-1; the identity adjoined to form S^1 is addressed as order().
  class FiniteSemigroup {
   public:
    using index = std::uint32_t;

    static constexpr std::size_t max_order = 1000;

    FiniteSemigroup() = default;

    // Row-major table, entry (i, j) = i * j.  Validates ranges and
    // associativity.  The zero is detected; a declared zero must agree.
    FiniteSemigroup(std::size_t          order,
                    std::vector<index>   table,
                    std::optional<index> declared_zero = std::nullopt);

    std::size_t order() const noexcept {
      return _order;
    }

    index one() const noexcept {
      return static_cast<index>(_order);
    }

    // Product in S^1: one() acts as the adjoined identity.
    index product(index a, index b) const noexcept {
      if (a == one()) {
        return b;
      }
      if (b == one()) {
        return a;
      }
      return _table[std::size_t(a) * _order + b];
    }

    std::optional<index> zero() const noexcept {
      return _zero;
    }
    // An identity element of S itself, if S is a monoid.
    std::optional<index> identity() const noexcept {
      return _identity;
    }

    bool is_commutative() const;
    bool is_cancellative() const;
    bool is_group() const;

    std::vector<index> const& table() const noexcept {
      return _table;
    }

   private:
    std::size_t          _order = 0;
    std::vector<index>   _table;
    std::optional<index> _zero;
    std::optional<index> _identity;
  };

  // A semigroup of transformations together with its Cayley table.
  struct TransformationSemigroup {
    std::vector<PartialTransformation> elements;  // BFS discovery order
    FiniteSemigroup                    semigroup;
    std::vector<FiniteSemigroup::index> sorted;   // indices in element order

    std::optional<FiniteSemigroup::index>
    index_of(PartialTransformation const& a) const;
  };

  // Closure of the generators under composition; throws once more than
  // `cap` elements appear.
  TransformationSemigroup
  from_generators(std::span<PartialTransformation const> gens,
                  std::size_t cap = FiniteSemigroup::max_order);

  // P(a): the g with (ma)g != 0 for every nonzero ma in S^1 a.  P(0) = {0},
  // and P(a) = S when S has no zero.  Sorted ascending.
  std::vector<FiniteSemigroup::index> p_set(FiniteSemigroup const& s,
                                            FiniteSemigroup::index a);

  enum class RelationKind { l, o, p, pstar, c };

  std::string_view relation_name(RelationKind k);
  RelationKind     parse_relation(std::string_view s);

  class RelationMatrix {
   public:
    RelationMatrix() = default;
    explicit RelationMatrix(std::size_t m) : _m(m), _bits(m * m, 0) {}

    std::size_t size() const noexcept {
      return _m;
    }
    bool operator()(std::size_t i, std::size_t j) const noexcept {
      return _bits[i * _m + j] != 0;
    }
    void set(std::size_t i, std::size_t j, bool v = true) noexcept {
      _bits[i * _m + j] = v ? 1 : 0;
    }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool is_equivalence() const {
      return is_reflexive() && is_symmetric() && is_transitive();
    }
    bool is_diagonal() const;
    bool is_universal() const;
    bool subset_of(RelationMatrix const& other) const;
    std::size_t count() const;

    friend bool operator==(RelationMatrix const&, RelationMatrix const&)
        = default;

   private:
    std::size_t               _m = 0;
    std::vector<std::uint8_t> _bits;
  };

  // l: ag = gb for some g in S^1
  // o: l both ways
  // p: a = uv, b = vu for some u, v in S^1
  // pstar: transitive closure of p
  // c: ag = gb, bh = ha with g in P^1(a), h in P^1(b)
  RelationMatrix relation(FiniteSemigroup const& s, RelationKind kind);

  // Equivalence classes ordered by least element.  Throws if the relation is
  // not an equivalence on s (possible for l and p).
  std::vector<std::vector<FiniteSemigroup::index>>
  classes(FiniteSemigroup const& s, RelationKind kind);

  std::vector<std::vector<FiniteSemigroup::index>>
  partition_of(RelationMatrix const& r);

  enum class CheckStatus { pass, fail, skipped };

  struct AxiomCheck {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
  };

  struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool                    has_zero         = false;
    bool                    commutative      = false;
    bool                    cancellative     = false;
    bool                    c_is_diagonal    = false;
    std::size_t             c_class_count    = 0;

    bool all_passed() const;
    AxiomCheck const& find(std::string_view name) const;
  };

  // c is an equivalence; c <= o <= l; p <= o; zero-free implies c = o; the
  // zero's c-class is {0}; zero-free: c trivial iff commutative and
  // cancellative.
  AxiomReport check_axioms(FiniteSemigroup const& s);

  // Text format: a line "m", an optional line "zero=z", then m rows of m
  // space-separated entries.  Blank lines and lines starting with '#' are
  // ignored; "zero=z" may also precede the "m" line.
  FiniteSemigroup read_cayley_text(std::istream& in);
  std::string     write_cayley_text(FiniteSemigroup const& s);

  // {"order": m, "table": [[...], ...], "zero": z}
  FiniteSemigroup cayley_from_json(nlohmann::json const& j);
  void            to_json(nlohmann::json& j, FiniteSemigroup const& s);
  void            to_json(nlohmann::json& j, AxiomReport const& r);

}  // namespace semiconj

#endif
