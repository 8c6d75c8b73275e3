#ifndef SEMICONJ_RP_HOM_HPP
#define SEMICONJ_RP_HOM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semiconj/digraph.hpp"
#include "semiconj/transform.hpp"

namespace semiconj {

  // A partial mapping from {0..n_src-1} to {0..n_dst-1}.
  class PartialMap {
   public:
    PartialMap() = default;
    PartialMap(std::size_t n_src, std::size_t n_dst);
    PartialMap(std::size_t n_src, std::size_t n_dst, std::vector<point> entries);

    std::size_t source_size() const noexcept {
      return _entries.size();
    }
    std::size_t target_size() const noexcept {
      return _n_dst;
    }

    point operator[](point x) const noexcept {
      return x < _entries.size() ? _entries[x] : diamond;
    }
    bool defined_at(point x) const noexcept {
      return (*this)[x] != diamond;
    }
    void set(point x, point y);

    std::vector<point> domain() const;
    bool               is_total() const noexcept;
    bool               is_injective() const;

    std::vector<point> const& entries() const noexcept {
      return _entries;
    }

    // Only when source and target sizes agree.
    PartialTransformation as_transformation() const;

    friend bool operator==(PartialMap const&, PartialMap const&) = default;

   private:
    std::vector<point> _entries;
    std::size_t        _n_dst = 0;
  };

  // What the ambient semigroup demands of a witness: P(X) any partial map,
  // T(X) total maps, I(X) injective partial maps, Sym(X) bijections.
  enum class WitnessConstraint {
    any_partial,
    total,
    injective_partial,
    injective_total
  };

  bool satisfies(PartialMap const& phi, WitnessConstraint c);

  // Conditions of a restrictive partial homomorphism Gamma(alpha) ->
  // Gamma(beta): (a) every arc x -> y has x, y in dom(phi) and x phi -> y phi
  // an arc; (b) defined terminal vertices go to terminal vertices.
  bool verify_rp_hom(PartialMap const&            phi,
                     PartialTransformation const& alpha,
                     PartialTransformation const& beta);

  // alpha phi = phi beta and span(alpha) within dom(phi).
  bool verify_intertwining(PartialMap const&            phi,
                           PartialTransformation const& alpha,
                           PartialTransformation const& beta);

  // Backtracking search for an rp-homomorphism with dom(phi) = span(alpha)
  // (all of X under the total constraints).  Vertices are assigned in
  // ascending order and candidates tried in ascending order, so the result is
  // deterministic.
  std::optional<PartialMap> search_rp_hom(PartialTransformation const& alpha,
                                          PartialTransformation const& beta,
                                          WitnessConstraint            c
                                          = WitnessConstraint::any_partial);

  // Cycle component onto cycle component: x -> y_{(-p_x) mod m} where p_x is
  // the distance from x to the least cycle vertex of the source and y_i
  // walks the target cycle from its least vertex.  Empty unless m | k.
  std::optional<PartialMap> build_cycle_hom(Component const& source,
                                            Component const& target);

  // Cho component into cho component, root to root, descending the in-trees
  // and sending each preimage branch into a preimage branch of at least the
  // same rank.  Empty iff the source root rank exceeds the target's.
  std::optional<PartialMap> build_cho_hom(Component const& source,
                                          Component const& target);

  // Join of one map per component of alpha; throws if a component is not
  // covered, if two maps overlap, or if the join is not an rp-homomorphism.
  PartialMap assemble_hom(PartialTransformation const& alpha,
                          PartialTransformation const& beta,
                          std::span<PartialMap const>  per_component);

  // {"map": {"0": 3, "1": 4}}
  void to_json(nlohmann::json& j, PartialMap const& phi);

  // Needs the sizes, which the wire format does not carry.
  PartialMap partial_map_from_json(nlohmann::json const& j,
                                   std::size_t           n_src,
                                   std::size_t           n_dst);

}  // namespace semiconj

#endif
