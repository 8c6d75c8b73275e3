#include "semiconj/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semiconj {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return;
        }
        if (_size[x] < _size[y]) {
          std::swap(x, y);
        }
        _parent[y] = x;
        _size[x] += _size[y];
      }

     private:
      std::vector<std::size_t> _parent;
      std::vector<std::size_t> _size;
    };

    // Vertex sets of the components, each sorted, ordered by least vertex.
    std::vector<std::vector<point>>
    component_vertex_sets(PartialTransformation const& alpha) {
      std::size_t const n = alpha.degree();
      UnionFind         uf(n);
      for (point x = 0; x < n; ++x) {
        if (alpha.defined_at(x)) {
          uf.unite(x, alpha[x]);
        }
      }
      auto const                      mask = alpha.span_mask();
      std::vector<std::size_t>        slot(n, std::size_t(-1));
      std::vector<std::vector<point>> groups;
      for (point x = 0; x < n; ++x) {
        if (!mask[x]) {
          continue;
        }
        auto r = uf.find(x);
        if (slot[r] == std::size_t(-1)) {
          slot[r] = groups.size();
          groups.emplace_back();
        }
        groups[slot[r]].push_back(x);
      }
      return groups;
    }

    std::size_t cycle_length_from(PartialTransformation const& g, point start) {
      std::vector<std::size_t> step(g.degree(), std::size_t(-1));
      point                    x = start;
      for (std::size_t i = 0; x != diamond; ++i) {
        if (step[x] != std::size_t(-1)) {
          return i - step[x];
        }
        step[x] = i;
        x       = g[x];
      }
      return 0;
    }
  }  // namespace

  std::size_t RankTable::at(point x) const {
    if (!has(x)) {
      throw Error("rank: point " + std::to_string(x)
                  + " is not a vertex of the component");
    }
    return _ranks[x];
  }

  std::vector<Component> decompose(PartialTransformation const& alpha) {
    std::vector<Component> result;
    for (auto& vs : component_vertex_sets(alpha)) {
      auto g = alpha.restrict_to(vs);
      auto k = classify(g);
      result.push_back(Component{std::move(vs), std::move(g), k});
    }
    return result;
  }

  ComponentKind classify(PartialTransformation const& component) {
    auto groups = component_vertex_sets(component);
    if (groups.size() != 1) {
      throw Error("classify: transformation " + component.to_string()
                  + " is not connected");
    }
    auto const&        vs = groups.front();
    std::vector<point> terminals;
    for (point x : vs) {
      if (!component.defined_at(x)) {
        terminals.push_back(x);
      }
    }
    if (terminals.empty()) {
      return CycleType{cycle_length_from(component, vs.front())};
    }
    // A connected functional digraph with a terminal vertex has exactly one
    // and no cycle.
    if (terminals.size() != 1) {
      throw std::logic_error("classify: component has "
                             + std::to_string(terminals.size())
                             + " terminal vertices");
    }
    point root = terminals.front();
    return ChoType{root, rank(component).at(root)};
  }

  RankTable rank(PartialTransformation const& component) {
    std::size_t const        n = component.degree();
    auto const               mask = component.span_mask();
    std::vector<std::size_t> indegree(n, 0);
    for (point x = 0; x < n; ++x) {
      if (component.defined_at(x)) {
        ++indegree[component[x]];
      }
    }
    RankTable          table(n);
    std::vector<point> stack;
    std::size_t        in_span = 0;
    for (point x = 0; x < n; ++x) {
      if (!mask[x]) {
        continue;
      }
      ++in_span;
      if (indegree[x] == 0) {
        table.set(x, 0);
        stack.push_back(x);
      }
    }
    std::size_t processed = 0;
    while (!stack.empty()) {
      point x = stack.back();
      stack.pop_back();
      ++processed;
      point y = component[x];
      if (y == diamond) {
        continue;
      }
      std::size_t r = table.at(x) + 1;
      if (!table.has(y) || table.at(y) < r) {
        table.set(y, r);
      }
      if (--indegree[y] == 0) {
        stack.push_back(y);
      }
    }
    if (processed != in_span) {
      throw Error("rank: transformation " + component.to_string()
                  + " contains a cycle");
    }
    return table;
  }

  std::vector<std::size_t> cycle_lengths(PartialTransformation const& alpha) {
    auto                     counts = cycle_type(alpha);
    std::vector<std::size_t> out;
    for (auto const& [len, _] : counts) {
      out.push_back(len);
    }
    return out;
  }

  std::map<std::size_t, std::size_t>
  cycle_type(PartialTransformation const& alpha) {
    // 0 = unseen, 1 = on the current walk, 2 = finished
    std::size_t const                  n = alpha.degree();
    std::vector<std::uint8_t>          colour(n, 0);
    std::vector<point>                 walk;
    std::map<std::size_t, std::size_t> counts;
    for (point start = 0; start < n; ++start) {
      if (colour[start] != 0) {
        continue;
      }
      walk.clear();
      point x = start;
      while (x != diamond && colour[x] == 0) {
        colour[x] = 1;
        walk.push_back(x);
        x = alpha[x];
      }
      if (x != diamond && colour[x] == 1) {
        auto it = std::find(walk.begin(), walk.end(), x);
        ++counts[static_cast<std::size_t>(walk.end() - it)];
      }
      for (point y : walk) {
        colour[y] = 2;
      }
    }
    return counts;
  }

  std::vector<std::size_t> sac(std::span<std::size_t const> values) {
    std::vector<std::size_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> kept;
    for (std::size_t m : sorted) {
      if (m == 0) {
        throw Error("sac: elements must be positive integers");
      }
      bool multiple = std::any_of(kept.begin(), kept.end(), [m](std::size_t d) {
        return m % d == 0;
      });
      if (!multiple) {
        kept.push_back(m);
      }
    }
    return kept;
  }

  ConjInvariant invariant(PartialTransformation const& alpha) {
    ConjInvariant inv;
    auto          lengths = cycle_lengths(alpha);
    inv.cs                = sac(lengths);
    for (auto const& c : decompose(alpha)) {
      if (c.is_cho_type()) {
        inv.s = std::max(inv.s, c.cho().root_rank);
      }
    }
    return inv;
  }

  std::string to_dot(PartialTransformation const& alpha, bool show_isolated) {
    std::ostringstream os;
    auto const         mask = alpha.span_mask();
    os << "digraph G {\n";
    for (point x = 0; x < alpha.degree(); ++x) {
      if (mask[x] || show_isolated) {
        os << "  " << x << ";\n";
      }
    }
    for (point x = 0; x < alpha.degree(); ++x) {
      if (alpha.defined_at(x)) {
        os << "  " << x << " -> " << alpha[x] << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  void to_json(nlohmann::json& j, ConjInvariant const& inv) {
    j = nlohmann::json{{"cs", inv.cs}, {"s", inv.s}};
  }

  void to_json(nlohmann::json& j, Component const& c) {
    j = nlohmann::json{{"vertices", c.vertices}};
    if (c.is_cycle_type()) {
      j["kind"]         = "cycle";
      j["cycle_length"] = c.cycle_length();
    } else {
      j["kind"]      = "cho";
      j["root"]      = c.cho().root;
      j["root_rank"] = c.cho().root_rank;
    }
  }

}  // namespace semiconj
