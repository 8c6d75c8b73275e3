#include "semiconj/rp_hom.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace semiconj {

  ////////////////////////////////////////////////////////////////////////
  // PartialMap
  ////////////////////////////////////////////////////////////////////////

  PartialMap::PartialMap(std::size_t n_src, std::size_t n_dst)
      : _entries(n_src, diamond), _n_dst(n_dst) {}

  PartialMap::PartialMap(std::size_t        n_src,
                         std::size_t        n_dst,
                         std::vector<point> entries)
      : _entries(std::move(entries)), _n_dst(n_dst) {
    if (_entries.size() != n_src) {
      throw Error("partial map: expected " + std::to_string(n_src)
                  + " entries, got " + std::to_string(_entries.size()));
    }
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      if (_entries[i] != diamond && _entries[i] >= n_dst) {
        throw Error("partial map: " + std::to_string(i) + " -> "
                    + std::to_string(_entries[i]) + " is outside [0, "
                    + std::to_string(n_dst) + ")");
      }
    }
  }

  void PartialMap::set(point x, point y) {
    if (x >= _entries.size() || (y != diamond && y >= _n_dst)) {
      throw Error("partial map: entry " + std::to_string(x) + " -> "
                  + std::to_string(y) + " is out of range");
    }
    _entries[x] = y;
  }

  std::vector<point> PartialMap::domain() const {
    std::vector<point> out;
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      if (_entries[i] != diamond) {
        out.push_back(static_cast<point>(i));
      }
    }
    return out;
  }

  bool PartialMap::is_total() const noexcept {
    return std::none_of(_entries.begin(), _entries.end(), [](point y) {
      return y == diamond;
    });
  }

  bool PartialMap::is_injective() const {
    std::vector<bool> seen(_n_dst, false);
    for (point y : _entries) {
      if (y == diamond) {
        continue;
      }
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  PartialTransformation PartialMap::as_transformation() const {
    if (_entries.size() != _n_dst) {
      throw Error("partial map: source and target sizes differ ("
                  + std::to_string(_entries.size()) + " vs "
                  + std::to_string(_n_dst) + ")");
    }
    return PartialTransformation(_n_dst, _entries);
  }

  bool satisfies(PartialMap const& phi, WitnessConstraint c) {
    switch (c) {
      case WitnessConstraint::any_partial:
        return true;
      case WitnessConstraint::total:
        return phi.is_total();
      case WitnessConstraint::injective_partial:
        return phi.is_injective();
      case WitnessConstraint::injective_total:
        return phi.is_total() && phi.is_injective();
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_sizes(PartialMap const&            phi,
                     PartialTransformation const& alpha,
                     PartialTransformation const& beta) {
      if (phi.source_size() != alpha.degree()
          || phi.target_size() != beta.degree()) {
        throw Error("rp-hom: map of shape " + std::to_string(phi.source_size())
                    + " -> " + std::to_string(phi.target_size())
                    + " does not fit digraphs on "
                    + std::to_string(alpha.degree()) + " and "
                    + std::to_string(beta.degree()) + " vertices");
      }
    }
  }  // namespace

  bool verify_rp_hom(PartialMap const&            phi,
                     PartialTransformation const& alpha,
                     PartialTransformation const& beta) {
    check_sizes(phi, alpha, beta);
    for (point x = 0; x < alpha.degree(); ++x) {
      if (alpha.defined_at(x)) {
        point y = alpha[x];
        if (!phi.defined_at(x) || !phi.defined_at(y)) {
          return false;
        }
        if (beta[phi[x]] != phi[y]) {
          return false;
        }
      } else if (phi.defined_at(x) && beta.defined_at(phi[x])) {
        return false;
      }
    }
    return true;
  }

  bool verify_intertwining(PartialMap const&            phi,
                           PartialTransformation const& alpha,
                           PartialTransformation const& beta) {
    check_sizes(phi, alpha, beta);
    auto const f = phi.as_transformation();
    for (point x : alpha.span()) {
      if (!f.defined_at(x)) {
        return false;
      }
    }
    return compose(alpha, f) == compose(f, beta);
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t infinite = std::numeric_limits<std::size_t>::max();

    // Where the forward orbit of a vertex ends: a terminal vertex after
    // `steps` arcs, or a cycle of length `cycle` (steps unused then).
    struct Fate {
      std::size_t cycle = 0;
      std::size_t steps = 0;
    };

    struct Profile {
      std::vector<Fate>               fate;
      std::vector<std::size_t>        height;  // longest in-path; infinite on cycles
      std::vector<std::vector<point>> preimages;
    };

    Profile profile_of(PartialTransformation const& a) {
      std::size_t const n = a.degree();
      Profile           p;
      p.fate.resize(n);
      p.height.assign(n, 0);
      p.preimages.resize(n);
      for (point x = 0; x < n; ++x) {
        if (a.defined_at(x)) {
          p.preimages[a[x]].push_back(x);
        }
      }

      std::vector<bool> on_cycle(n, false);
      std::vector<bool> known(n, false);
      for (point x = 0; x < n; ++x) {
        // cycle membership: x returns to itself within n steps
        point y = a[x];
        for (std::size_t i = 0; i < n && y != diamond && y != x; ++i) {
          y = a[y];
        }
        on_cycle[x] = (y == x);
      }
      for (point x = 0; x < n; ++x) {
        if (on_cycle[x]) {
          std::size_t len = 1;
          for (point y = a[x]; y != x; y = a[y]) {
            ++len;
          }
          p.fate[x]   = Fate{len, 0};
          p.height[x] = infinite;
          known[x]    = true;
        }
      }
      for (point x = 0; x < n; ++x) {
        if (known[x]) {
          continue;
        }
        std::vector<point> walk;
        point              y = x;
        while (y != diamond && !known[y]) {
          walk.push_back(y);
          y = a[y];
        }
        Fate f = (y == diamond) ? Fate{0, 0} : p.fate[y];
        if (y == diamond) {
          // the last vertex of the walk is terminal
          f.steps = 0;
          for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            p.fate[*it] = f;
            known[*it]  = true;
            ++f.steps;
          }
        } else {
          if (f.cycle == 0) {
            ++f.steps;
          }
          for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            p.fate[*it] = f;
            known[*it]  = true;
            if (f.cycle == 0) {
              ++f.steps;
            }
          }
        }
      }

      // heights of tree vertices by a topological pass from the sources
      std::vector<std::size_t> indeg(n, 0);
      for (point x = 0; x < n; ++x) {
        if (a.defined_at(x) && !on_cycle[a[x]]) {
          ++indeg[a[x]];
        }
      }
      std::vector<point> stack;
      for (point x = 0; x < n; ++x) {
        if (!on_cycle[x] && indeg[x] == 0) {
          stack.push_back(x);
        }
      }
      while (!stack.empty()) {
        point x = stack.back();
        stack.pop_back();
        point y = a[x];
        if (y == diamond || on_cycle[y]) {
          continue;
        }
        p.height[y] = std::max(p.height[y], p.height[x] + 1);
        if (--indeg[y] == 0) {
          stack.push_back(y);
        }
      }
      return p;
    }

    bool fates_compatible(Fate const& src, Fate const& dst) {
      if (src.cycle == 0) {
        return dst.cycle == 0 && dst.steps == src.steps;
      }
      return dst.cycle != 0 && src.cycle % dst.cycle == 0;
    }

    class Searcher {
     public:
      Searcher(PartialTransformation const& alpha,
               PartialTransformation const& beta,
               bool                         injective)
          : _alpha(alpha),
            _beta(beta),
            _src(profile_of(alpha)),
            _dst(profile_of(beta)),
            _injective(injective),
            _phi(alpha.degree(), diamond),
            _used(beta.degree(), false),
            _candidates(alpha.degree()) {
        for (point x = 0; x < alpha.degree(); ++x) {
          for (point y = 0; y < beta.degree(); ++y) {
            if (compatible(x, y)) {
              _candidates[x].push_back(y);
            }
          }
        }
      }

      // Extends the current assignment to every vertex of `group`.
      bool solve(std::vector<point> const& group) {
        for (point x : group) {
          if (_candidates[x].empty()) {
            return false;
          }
        }
        return dfs(group, 0);
      }

      PartialMap result() const {
        return PartialMap(_alpha.degree(), _beta.degree(), _phi);
      }

     private:
      bool compatible(point x, point y) const {
        if (_alpha.defined_at(x) != _beta.defined_at(y)) {
          return false;
        }
        if (!fates_compatible(_src.fate[x], _dst.fate[y])) {
          return false;
        }
        return _dst.height[y] == infinite
               || (_src.height[x] != infinite
                   && _src.height[x] <= _dst.height[y]);
      }

      bool dfs(std::vector<point> const& group, std::size_t i) {
        while (i < group.size() && _phi[group[i]] != diamond) {
          ++i;
        }
        if (i == group.size()) {
          return true;
        }
        point x = group[i];
        for (point y : _candidates[x]) {
          std::size_t mark = _trail.size();
          if (assign(x, y) && dfs(group, i + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      // Assigns x -> y and everything the arcs out of x force.
      bool assign(point x, point y) {
        _work.clear();
        _work.emplace_back(x, y);
        while (!_work.empty()) {
          auto [u, v] = _work.back();
          _work.pop_back();
          if (_phi[u] != diamond) {
            if (_phi[u] != v) {
              return false;
            }
            continue;
          }
          if (v == diamond || !compatible(u, v)) {
            return false;
          }
          if (_injective && _used[v]) {
            return false;
          }
          _phi[u]  = v;
          _used[v] = true;
          _trail.push_back(u);
          for (point z : _src.preimages[u]) {
            if (_phi[z] != diamond && _beta[_phi[z]] != v) {
              return false;
            }
          }
          if (_alpha.defined_at(u)) {
            _work.emplace_back(_alpha[u], _beta[v]);
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          point u = _trail.back();
          _trail.pop_back();
          _used[_phi[u]] = false;
          _phi[u]        = diamond;
        }
      }

      PartialTransformation const&       _alpha;
      PartialTransformation const&       _beta;
      Profile                            _src;
      Profile                            _dst;
      bool                               _injective;
      std::vector<point>                 _phi;
      std::vector<bool>                  _used;
      std::vector<std::vector<point>>    _candidates;
      std::vector<point>                 _trail;
      std::vector<std::pair<point, point>> _work;
    };
  }  // namespace

  std::optional<PartialMap> search_rp_hom(PartialTransformation const& alpha,
                                          PartialTransformation const& beta,
                                          WitnessConstraint            c) {
    bool const injective = c == WitnessConstraint::injective_partial
                           || c == WitnessConstraint::injective_total;
    bool const total = c == WitnessConstraint::total
                       || c == WitnessConstraint::injective_total;

    std::vector<std::vector<point>> groups;
    auto const                      mask = alpha.span_mask();
    if (injective) {
      groups.emplace_back();
      for (point x = 0; x < alpha.degree(); ++x) {
        if (mask[x] || total) {
          groups.front().push_back(x);
        }
      }
    } else {
      // Components are independent without injectivity.
      for (auto& c : decompose(alpha)) {
        groups.push_back(std::move(c.vertices));
      }
      if (total) {
        for (point x = 0; x < alpha.degree(); ++x) {
          if (!mask[x]) {
            groups.push_back({x});
          }
        }
      }
    }

    Searcher searcher(alpha, beta, injective);
    for (auto const& g : groups) {
      if (!searcher.solve(g)) {
        return std::nullopt;
      }
    }
    return searcher.result();
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructive builders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Least vertex lying on the (unique) cycle of a cycle-type component.
    point least_cycle_vertex(Component const& c) {
      std::size_t const k = c.cycle_length();
      for (point x : c.vertices) {
        point y = x;
        for (std::size_t i = 0; i < k; ++i) {
          y = c.restriction[y];
        }
        if (y == x) {
          return x;
        }
      }
      throw std::logic_error("cycle-type component without a cycle");
    }

    std::vector<std::vector<point>> preimages_of(PartialTransformation const& a) {
      std::vector<std::vector<point>> pre(a.degree());
      for (point x = 0; x < a.degree(); ++x) {
        if (a.defined_at(x)) {
          pre[a[x]].push_back(x);
        }
      }
      return pre;
    }
  }  // namespace

  std::optional<PartialMap> build_cycle_hom(Component const& source,
                                            Component const& target) {
    if (!source.is_cycle_type() || !target.is_cycle_type()) {
      throw Error("build_cycle_hom: both components must contain a cycle");
    }
    std::size_t const k = source.cycle_length();
    std::size_t const m = target.cycle_length();
    if (k % m != 0) {
      return std::nullopt;
    }
    auto const& g = source.restriction;
    auto const& d = target.restriction;

    std::vector<point> ys(m);
    ys[0] = least_cycle_vertex(target);
    for (std::size_t i = 1; i < m; ++i) {
      ys[i] = d[ys[i - 1]];
    }

    // p_x = least p with x g^p = x0, found backwards from x0
    point const              x0  = least_cycle_vertex(source);
    auto const               pre = preimages_of(g);
    std::vector<std::size_t> p(g.degree(), infinite);
    std::vector<point>       queue{x0};
    p[x0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      point x = queue[head];
      for (point z : pre[x]) {
        if (p[z] == infinite) {
          p[z] = p[x] + 1;
          queue.push_back(z);
        }
      }
    }

    PartialMap phi(g.degree(), d.degree());
    for (point x : source.vertices) {
      phi.set(x, ys[(m - p[x] % m) % m]);
    }
    return phi;
  }

  std::optional<PartialMap> build_cho_hom(Component const& source,
                                          Component const& target) {
    if (!source.is_cho_type() || !target.is_cho_type()) {
      throw Error("build_cho_hom: both components must be cycle-free");
    }
    auto const& g = source.restriction;
    auto const& d = target.restriction;
    point const x0 = source.cho().root;
    point const y0 = target.cho().root;
    if (source.cho().root_rank > target.cho().root_rank) {
      return std::nullopt;
    }
    auto const tgt_rank = rank(d);
    auto const src_pre  = preimages_of(g);
    auto const tgt_pre  = preimages_of(d);

    // The preimage of w of greatest rank (least label on ties) absorbs every
    // branch above a vertex sent to w.
    auto best_preimage = [&](point w) {
      point best = diamond;
      for (point v : tgt_pre[w]) {
        if (best == diamond || tgt_rank.at(v) > tgt_rank.at(best)) {
          best = v;
        }
      }
      return best;
    };

    PartialMap         phi(g.degree(), d.degree());
    std::vector<point> stack{x0};
    phi.set(x0, y0);
    while (!stack.empty()) {
      point z = stack.back();
      stack.pop_back();
      if (src_pre[z].empty()) {
        continue;
      }
      point w = best_preimage(phi[z]);
      if (w == diamond) {
        throw std::logic_error("build_cho_hom: rank bound violated");
      }
      for (point u : src_pre[z]) {
        phi.set(u, w);
        stack.push_back(u);
      }
    }
    return phi;
  }

  PartialMap assemble_hom(PartialTransformation const& alpha,
                          PartialTransformation const& beta,
                          std::span<PartialMap const>  per_component) {
    std::vector<point> entries(alpha.degree(), diamond);
    for (auto const& m : per_component) {
      check_sizes(m, alpha, beta);
      for (point x = 0; x < alpha.degree(); ++x) {
        if (!m.defined_at(x)) {
          continue;
        }
        if (entries[x] != diamond) {
          throw Error("assemble_hom: two maps are defined at point "
                      + std::to_string(x));
        }
        entries[x] = m[x];
      }
    }
    for (auto const& c : decompose(alpha)) {
      for (point x : c.vertices) {
        if (entries[x] == diamond) {
          throw Error("assemble_hom: no map supplied for the component "
                      "containing point "
                      + std::to_string(c.vertices.front()));
        }
      }
    }
    PartialMap phi(alpha.degree(), beta.degree(), std::move(entries));
    if (!verify_rp_hom(phi, alpha, beta)) {
      throw Error("assemble_hom: the joined map is not an rp-homomorphism");
    }
    return phi;
  }

  void to_json(nlohmann::json& j, PartialMap const& phi) {
    auto map = nlohmann::json::object();
    for (point x : phi.domain()) {
      map[std::to_string(x)] = phi[x];
    }
    j = nlohmann::json{{"map", std::move(map)}};
  }

  PartialMap partial_map_from_json(nlohmann::json const& j,
                                   std::size_t           n_src,
                                   std::size_t           n_dst) {
    if (!j.is_object() || !j.contains("map") || !j["map"].is_object()) {
      throw Error("witness: field \"map\" must be an object");
    }
    PartialMap phi(n_src, n_dst);
    for (auto const& [key, value] : j["map"].items()) {
      std::size_t pos = 0;
      unsigned long x = 0;
      try {
        x = std::stoul(key, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != key.size() || key.empty() || x >= n_src) {
        throw Error("witness: field \"map\" has invalid key \"" + key + "\"");
      }
      if (!value.is_number_unsigned() || value.get<std::uint64_t>() >= n_dst) {
        throw Error("witness: field \"map\"[\"" + key
                    + "\"] must be a point below " + std::to_string(n_dst));
      }
      phi.set(static_cast<point>(x), value.get<point>());
    }
    return phi;
  }

}  // namespace semiconj
