// Reference implementations used only by the tests.  They work on raw image
// vectors and share no code with the library.

#ifndef SEMICONJ_TESTS_ORACLES_HPP
#define SEMICONJ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

  using image_t            = std::vector<std::uint32_t>;
  constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

  inline image_t compose(image_t const& a, image_t const& b) {
    image_t out(a.size(), none);
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (a[x] != none) {
        out[x] = b[a[x]];
      }
    }
    return out;
  }

  // Keep m iff no smaller kept value divides it.
  inline std::vector<std::size_t> sac(std::vector<std::size_t> values) {
    std::sort(values.begin(), values.end());
    std::vector<std::size_t> kept;
    for (auto v : values) {
      bool divisible = false;
      for (auto k : kept) {
        divisible = divisible || v % k == 0;
      }
      if (!divisible) {
        kept.push_back(v);
      }
    }
    return kept;
  }

  // Length of the cycle through each periodic point, found by walking n
  // steps first so the walk is certainly on the cycle.
  inline std::set<std::size_t> cycle_lengths(image_t const& a) {
    std::set<std::size_t> out;
    std::size_t const     n = a.size();
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t y = static_cast<std::uint32_t>(x);
      for (std::size_t i = 0; i < n && y != none; ++i) {
        y = a[y];
      }
      if (y == none) {
        continue;
      }
      std::size_t   len = 1;
      std::uint32_t z   = a[y];
      while (z != y) {
        z = a[z];
        ++len;
      }
      out.insert(len);
    }
    return out;
  }

  inline std::vector<std::size_t> cycle_type_counts(image_t const& a) {
    // cycle length of every periodic point, divided by the length
    std::map<std::size_t, std::size_t> pts;
    for (std::size_t x = 0; x < a.size(); ++x) {
      std::uint32_t y   = static_cast<std::uint32_t>(x);
      std::size_t   len = 0;
      do {
        y = a[y];
        ++len;
      } while (y != none && y != x && len <= a.size());
      if (y == x) {
        ++pts[len];
      }
    }
    std::vector<std::size_t> out;
    for (auto [len, count] : pts) {
      for (std::size_t i = 0; i < count / len; ++i) {
        out.push_back(len);
      }
    }
    return out;
  }

  // Longest path ending at x following reversed arcs; infinite loops are
  // impossible when x lies in an acyclic part.
  inline std::size_t longest_in_path(image_t const& a, std::uint32_t x) {
    std::size_t best = 0;
    for (std::uint32_t y = 0; y < a.size(); ++y) {
      if (a[y] == x && y != x) {
        best = std::max(best, longest_in_path(a, y) + 1);
      }
    }
    return best;
  }

  inline bool in_span(image_t const& a, std::uint32_t x) {
    return a[x] != none || std::find(a.begin(), a.end(), x) != a.end();
  }

  // Max over terminal non-isolated vertices of the longest in-path.
  inline std::size_t max_root_rank(image_t const& a) {
    std::size_t s = 0;
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      if (a[x] == none && in_span(a, x)) {
        s = std::max(s, longest_in_path(a, x));
      }
    }
    return s;
  }

  inline std::pair<std::vector<std::size_t>, std::size_t>
  invariant(image_t const& a) {
    auto const lens = cycle_lengths(a);
    return {sac({lens.begin(), lens.end()}), max_root_rank(a)};
  }

  // Def of rp-homomorphism checked directly; phi has n_dst-range entries or
  // none.
  inline bool is_rp_hom(image_t const& phi, image_t const& a, image_t const& b) {
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      if (a[x] != none) {
        if (phi[x] == none || phi[a[x]] == none || b[phi[x]] != phi[a[x]]) {
          return false;
        }
      } else if (phi[x] != none && b[phi[x]] != none) {
        return false;
      }
    }
    return true;
  }

  enum class Need { any, total, injective, bijective };

  inline bool meets(image_t const& phi, Need need) {
    bool total = std::find(phi.begin(), phi.end(), none) == phi.end();
    std::set<std::uint32_t> seen;
    bool                    injective = true;
    for (auto y : phi) {
      if (y != none) {
        injective = injective && seen.insert(y).second;
      }
    }
    switch (need) {
      case Need::any:
        return true;
      case Need::total:
        return total;
      case Need::injective:
        return injective;
      case Need::bijective:
        return total && injective;
    }
    return false;
  }

  // Visits every partial map {0..n-1} -> {0..n-1}.
  inline void for_each_partial_map(std::size_t                          n,
                                   std::function<bool(image_t const&)> fn) {
    image_t                  phi(n, none);
    std::vector<std::size_t> d(n, 0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        phi[i] = d[i] == 0 ? none : std::uint32_t(d[i] - 1);
      }
      if (!fn(phi)) {
        return;
      }
      std::size_t i = n;
      while (i > 0 && ++d[i - 1] == n + 1) {
        d[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return;
      }
    }
  }

  inline bool rp_hom_exists(image_t const& a, image_t const& b, Need need) {
    bool found = false;
    for_each_partial_map(a.size(), [&](image_t const& phi) {
      found = meets(phi, need) && is_rp_hom(phi, a, b);
      return !found;
    });
    return found;
  }

  // Group conjugacy on a Cayley table: b = g^-1 a g for some g.
  inline std::vector<std::vector<bool>>
  group_conjugacy(std::vector<std::vector<std::size_t>> const& t) {
    std::size_t const m = t.size();
    std::size_t       e = m;
    for (std::size_t c = 0; c < m && e == m; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < m; ++x) {
        ok = ok && t[c][x] == x && t[x][c] == x;
      }
      if (ok) {
        e = c;
      }
    }
    std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
    for (std::size_t g = 0; g < m; ++g) {
      std::size_t inv = m;
      for (std::size_t h = 0; h < m; ++h) {
        if (t[g][h] == e) {
          inv = h;
        }
      }
      for (std::size_t a = 0; a < m; ++a) {
        r[a][t[t[inv][a]][g]] = true;
      }
    }
    return r;
  }

  inline std::vector<std::vector<std::size_t>> cyclic_group(std::size_t k) {
    std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        t[i][j] = (i + j) % k;
      }
    }
    return t;
  }

  inline image_t random_image(std::mt19937& rng, std::size_t n, double p_undef,
                              bool injective = false) {
    image_t                                      img(n, none);
    std::uniform_int_distribution<std::uint32_t> pick(0, std::uint32_t(n - 1));
    std::bernoulli_distribution                  undef(p_undef);
    if (injective) {
      image_t perm(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        perm[i] = i;
      }
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = undef(rng) ? none : perm[i];
      }
      return img;
    }
    for (auto& y : img) {
      y = undef(rng) ? none : pick(rng);
    }
    return img;
  }

}  // namespace oracle

#endif
