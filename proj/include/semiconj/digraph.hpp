#ifndef SEMICONJ_DIGRAPH_HPP
#define SEMICONJ_DIGRAPH_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "semiconj/transform.hpp"

namespace semiconj {

  // Component containing exactly one cycle, of the given length, and no
  // terminal vertex.
  struct CycleType {
    std::size_t length = 0;

    friend bool operator==(CycleType const&, CycleType const&) = default;
  };

  // Component without cycles ("chains only"); it is an in-tree hanging from
  // its unique terminal vertex.
  struct ChoType {
    point       root      = diamond;
    std::size_t root_rank = 0;

    friend bool operator==(ChoType const&, ChoType const&) = default;
  };

  using ComponentKind = std::variant<CycleType, ChoType>;

  // One connected component of Gamma(alpha).
  struct Component {
    std::vector<point>    vertices;     // sorted; equals span(restriction)
    PartialTransformation restriction;  // alpha restricted to the component
    ComponentKind         kind;

    bool is_cycle_type() const noexcept {
      return std::holds_alternative<CycleType>(kind);
    }
    bool is_cho_type() const noexcept {
      return std::holds_alternative<ChoType>(kind);
    }
    std::size_t cycle_length() const {
      return std::get<CycleType>(kind).length;
    }
    ChoType const& cho() const {
      return std::get<ChoType>(kind);
    }
  };

  // Well-founded rank of every vertex of a cycle-free component.
  class RankTable {
   public:
    RankTable() = default;
    explicit RankTable(std::size_t n) : _ranks(n, unranked) {}

    static constexpr std::size_t unranked = static_cast<std::size_t>(-1);

    bool has(point x) const noexcept {
      return x < _ranks.size() && _ranks[x] != unranked;
    }
    // Throws if x is not a vertex of the component.
    std::size_t at(point x) const;
    void        set(point x, std::size_t r) {
      _ranks[x] = r;
    }
    std::size_t size() const noexcept {
      return _ranks.size();
    }

   private:
    std::vector<std::size_t> _ranks;
  };

  // (cs(alpha), s(alpha)).  Two elements of a finite P(X) are conjugate iff
  // these agree.
  struct ConjInvariant {
    std::vector<std::size_t> cs;  // ascending
    std::size_t              s = 0;

    friend bool operator==(ConjInvariant const&, ConjInvariant const&)
        = default;
    friend auto operator<=>(ConjInvariant const&, ConjInvariant const&)
        = default;
  };

  // Components in order of their least vertex.  Isolated vertices belong to
  // no component; the zero map has none.
  std::vector<Component> decompose(PartialTransformation const& alpha);

  // Kind of a connected transformation (one component).
  ComponentKind classify(PartialTransformation const& component);

  inline ComponentKind classify(Component const& c) {
    return classify(c.restriction);
  }

  // Ranks over the span of a cycle-free transformation; throws if a cycle is
  // present.  Sources get rank 0, every other vertex one more than the
  // largest rank among its preimages.
  RankTable rank(PartialTransformation const& component);

  inline RankTable rank(Component const& c) {
    return rank(c.restriction);
  }

  // Lengths of all cycles of alpha, ascending.
  std::vector<std::size_t> cycle_lengths(PartialTransformation const& alpha);

  // Number of cycles of each length.
  std::map<std::size_t, std::size_t>
  cycle_type(PartialTransformation const& alpha);

  // Standard antichain: scan ascending, keep m iff no kept element divides it.
  std::vector<std::size_t> sac(std::span<std::size_t const> values);

  ConjInvariant invariant(PartialTransformation const& alpha);

  std::string to_dot(PartialTransformation const& alpha,
                     bool                         show_isolated = false);

  void to_json(nlohmann::json& j, ConjInvariant const& inv);
  void to_json(nlohmann::json& j, Component const& c);

}  // namespace semiconj

#endif
