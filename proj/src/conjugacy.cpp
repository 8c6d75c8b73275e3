#include "semiconj/conjugacy.hpp"

#include <algorithm>

namespace semiconj {

  bool member_of(Family f, PartialTransformation const& a) {
    switch (f) {
      case Family::px:
        return true;
      case Family::tx:
        return a.is_full();
      case Family::ix:
        return a.is_injective();
      case Family::sym:
        return a.is_full() && a.is_injective();
    }
    return false;
  }

  WitnessConstraint constraint_for(Family f) {
    switch (f) {
      case Family::px:
        return WitnessConstraint::any_partial;
      case Family::tx:
        return WitnessConstraint::total;
      case Family::ix:
        return WitnessConstraint::injective_partial;
      case Family::sym:
        return WitnessConstraint::injective_total;
    }
    return WitnessConstraint::any_partial;
  }

  std::string_view family_name(Family f) {
    switch (f) {
      case Family::px:
        return "p";
      case Family::tx:
        return "t";
      case Family::ix:
        return "i";
      case Family::sym:
        return "sym";
    }
    return "?";
  }

  Family parse_family(std::string_view s) {
    if (s == "p" || s == "px" || s == "P") {
      return Family::px;
    }
    if (s == "t" || s == "tx" || s == "T") {
      return Family::tx;
    }
    if (s == "i" || s == "ix" || s == "I") {
      return Family::ix;
    }
    if (s == "sym" || s == "Sym" || s == "s") {
      return Family::sym;
    }
    throw Error("unknown family \"" + std::string(s)
                + "\" (expected p, t, i or sym)");
  }

  namespace {
    void require_same_degree(PartialTransformation const& a,
                             PartialTransformation const& b) {
      if (a.degree() != b.degree()) {
        throw Error("conjugacy: degree mismatch (" + std::to_string(a.degree())
                    + " vs " + std::to_string(b.degree()) + ")");
      }
    }

    void require_member(Family f, PartialTransformation const& a) {
      if (!member_of(f, a)) {
        throw Error("conjugacy: " + a.to_string() + " is not an element of "
                    + std::string(family_name(f)) + "(X)");
      }
    }

    // One rp-homomorphism per component of alpha, joined.  Requires
    // invariant(alpha) == invariant(beta).
    PartialMap component_scheme(PartialTransformation const& alpha,
                                PartialTransformation const& beta) {
      auto const              targets = decompose(beta);
      std::vector<PartialMap> maps;
      for (auto const& c : decompose(alpha)) {
        Component const* best = nullptr;
        if (c.is_cycle_type()) {
          std::size_t k = c.cycle_length();
          for (auto const& d : targets) {
            if (d.is_cycle_type() && k % d.cycle_length() == 0
                && (best == nullptr
                    || d.cycle_length() < best->cycle_length())) {
              best = &d;
            }
          }
        } else {
          for (auto const& d : targets) {
            if (d.is_cho_type()
                && (best == nullptr
                    || d.cho().root_rank > best->cho().root_rank)) {
              best = &d;
            }
          }
        }
        if (best == nullptr) {
          throw std::logic_error("component_scheme: no target component");
        }
        auto phi = c.is_cycle_type() ? build_cycle_hom(c, *best)
                                     : build_cho_hom(c, *best);
        if (!phi) {
          throw std::logic_error("component_scheme: builder failed");
        }
        maps.push_back(std::move(*phi));
      }
      return assemble_hom(alpha, beta, maps);
    }

    // Cycles listed from their least point, ordered by (length, least point).
    std::vector<std::vector<point>> canonical_cycles(
        PartialTransformation const& a) {
      std::vector<std::vector<point>> cycles;
      std::vector<bool>               seen(a.degree(), false);
      for (point x = 0; x < a.degree(); ++x) {
        if (seen[x]) {
          continue;
        }
        std::vector<point> cyc;
        for (point y = x; !seen[y]; y = a[y]) {
          seen[y] = true;
          cyc.push_back(y);
        }
        cycles.push_back(std::move(cyc));
      }
      std::stable_sort(cycles.begin(), cycles.end(), [](auto const& u, auto const& v) {
        return u.size() < v.size();
      });
      return cycles;
    }

    PartialMap conjugating_bijection(PartialTransformation const& alpha,
                                     PartialTransformation const& beta) {
      auto const from = canonical_cycles(alpha);
      auto const to   = canonical_cycles(beta);
      PartialMap phi(alpha.degree(), beta.degree());
      for (std::size_t c = 0; c < from.size(); ++c) {
        for (std::size_t i = 0; i < from[c].size(); ++i) {
          phi.set(from[c][i], to[c][i]);
        }
      }
      return phi;
    }
  }  // namespace

  ConjugacyVerdict conj_p_finite(PartialTransformation const& alpha,
                                 PartialTransformation const& beta,
                                 bool                         with_witnesses) {
    require_same_degree(alpha, beta);
    ConjugacyVerdict v;
    v.invariants_src = invariant(alpha);
    v.invariants_dst = invariant(beta);
    v.conjugate      = v.invariants_src == v.invariants_dst;
    if (v.conjugate && with_witnesses) {
      v.witness_forward  = component_scheme(alpha, beta);
      v.witness_backward = component_scheme(beta, alpha);
    }
    return v;
  }

  ConjugacyVerdict conj_t_finite(PartialTransformation const& alpha,
                                 PartialTransformation const& beta,
                                 bool                         with_witnesses) {
    require_same_degree(alpha, beta);
    require_member(Family::tx, alpha);
    require_member(Family::tx, beta);
    ConjugacyVerdict v;
    v.invariants_src = invariant(alpha);
    v.invariants_dst = invariant(beta);
    v.conjugate      = v.invariants_src.cs == v.invariants_dst.cs;
    if (v.conjugate && with_witnesses) {
      // span = X for full maps, so the component scheme is already total
      v.witness_forward  = component_scheme(alpha, beta);
      v.witness_backward = component_scheme(beta, alpha);
      if (!v.witness_forward->is_total() || !v.witness_backward->is_total()) {
        throw std::logic_error("conj_t_finite: witness is not total");
      }
    }
    return v;
  }

  ConjugacyVerdict conj_sym_finite(PartialTransformation const& alpha,
                                   PartialTransformation const& beta,
                                   bool with_witnesses) {
    require_same_degree(alpha, beta);
    require_member(Family::sym, alpha);
    require_member(Family::sym, beta);
    ConjugacyVerdict v;
    v.invariants_src = invariant(alpha);
    v.invariants_dst = invariant(beta);
    v.conjugate      = cycle_type(alpha) == cycle_type(beta);
    if (v.conjugate && with_witnesses) {
      v.witness_forward  = conjugating_bijection(alpha, beta);
      v.witness_backward = conjugating_bijection(beta, alpha);
    }
    return v;
  }

  ConjugacyVerdict conj_oracle(PartialTransformation const& alpha,
                               PartialTransformation const& beta,
                               Family                       family) {
    require_same_degree(alpha, beta);
    require_member(family, alpha);
    require_member(family, beta);
    ConjugacyVerdict v;
    v.invariants_src = invariant(alpha);
    v.invariants_dst = invariant(beta);
    auto const c     = constraint_for(family);
    v.witness_forward = search_rp_hom(alpha, beta, c);
    if (v.witness_forward) {
      v.witness_backward = search_rp_hom(beta, alpha, c);
    }
    v.conjugate = v.witness_forward && v.witness_backward;
    if (!v.conjugate) {
      v.witness_forward.reset();
      v.witness_backward.reset();
    }
    return v;
  }

  ConjugacyVerdict decide(PartialTransformation const& alpha,
                          PartialTransformation const& beta,
                          Family                       family,
                          bool                         with_witnesses) {
    switch (family) {
      case Family::px:
        return conj_p_finite(alpha, beta, with_witnesses);
      case Family::tx:
        return conj_t_finite(alpha, beta, with_witnesses);
      case Family::sym:
        return conj_sym_finite(alpha, beta, with_witnesses);
      case Family::ix:
        break;
    }
    auto v = conj_oracle(alpha, beta, family);
    if (!with_witnesses) {
      v.witness_forward.reset();
      v.witness_backward.reset();
    }
    return v;
  }

  void to_json(nlohmann::json& j, ConjugacyVerdict const& v) {
    j = nlohmann::json{{"conjugate", v.conjugate},
                       {"cs_src", v.invariants_src.cs},
                       {"s_src", v.invariants_src.s},
                       {"cs_dst", v.invariants_dst.cs},
                       {"s_dst", v.invariants_dst.s}};
    if (v.witness_forward) {
      j["witness_forward"] = *v.witness_forward;
    }
    if (v.witness_backward) {
      j["witness_backward"] = *v.witness_backward;
    }
  }

}  // namespace semiconj
