#ifndef SEMICONJ_CONJUGACY_HPP
#define SEMICONJ_CONJUGACY_HPP

#include <optional>
#include <string>
#include <string_view>

#include "semiconj/digraph.hpp"
#include "semiconj/rp_hom.hpp"
#include "semiconj/transform.hpp"

namespace semiconj {

  // The transformation semigroups on a finite X: partial maps P(X), full
  // maps T(X), partial injections I(X), and permutations Sym(X).
  enum class Family { px, tx, ix, sym };

  bool member_of(Family f, PartialTransformation const& a);

  // The witnesses allowed in S^1 for the family.
  WitnessConstraint constraint_for(Family f);

  std::string_view family_name(Family f);
  // Accepts "p", "t", "i", "sym" (and the long forms "px", "tx", "ix").
  Family parse_family(std::string_view s);

  struct ConjugacyVerdict {
    bool                      conjugate = false;
    std::optional<PartialMap> witness_forward;   // alpha phi = phi beta
    std::optional<PartialMap> witness_backward;  // beta psi = psi alpha
    ConjInvariant             invariants_src;
    ConjInvariant             invariants_dst;
  };

  // Finite P(X): conjugate iff (cs, s) agree.  With witnesses, every cycle
  // component goes to the shortest cycle of beta whose length divides its
  // own and every cho component to the cho component of beta of largest root
  // rank.
  ConjugacyVerdict conj_p_finite(PartialTransformation const& alpha,
                                 PartialTransformation const& beta,
                                 bool with_witnesses = false);

  // Finite T(X): conjugate iff the cycle sets agree.  Witnesses are total.
  ConjugacyVerdict conj_t_finite(PartialTransformation const& alpha,
                                 PartialTransformation const& beta,
                                 bool with_witnesses = false);

  // Sym(X): conjugate iff the cycle types agree.  The witness is the
  // bijection lining up cycles of equal length.
  ConjugacyVerdict conj_sym_finite(PartialTransformation const& alpha,
                                   PartialTransformation const& beta,
                                   bool with_witnesses = false);

  // Searches rp-homomorphisms in both directions under the family's
  // constraint; conjugate iff both exist.  The only decider for I(X).
  ConjugacyVerdict conj_oracle(PartialTransformation const& alpha,
                               PartialTransformation const& beta,
                               Family                       family);

  // The invariant decider for the family, or the oracle for I(X).
  ConjugacyVerdict decide(PartialTransformation const& alpha,
                          PartialTransformation const& beta,
                          Family                       family,
                          bool                         with_witnesses = false);

  // {conjugate, cs_src, s_src, cs_dst, s_dst, witness_forward?,
  //  witness_backward?}
  void to_json(nlohmann::json& j, ConjugacyVerdict const& v);

}  // namespace semiconj

#endif
