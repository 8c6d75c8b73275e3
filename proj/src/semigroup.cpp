#include "semiconj/semigroup.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace semiconj {

  using index = FiniteSemigroup::index;

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(std::size_t          order,
                                   std::vector<index>   table,
                                   std::optional<index> declared_zero)
      : _order(order), _table(std::move(table)) {
    if (order == 0) {
      throw Error("semigroup: order must be positive");
    }
    if (order > max_order) {
      throw Error("semigroup: order " + std::to_string(order)
                  + " exceeds the limit of " + std::to_string(max_order));
    }
    if (_table.size() != order * order) {
      throw Error("semigroup: table has " + std::to_string(_table.size())
                  + " entries, expected " + std::to_string(order * order));
    }
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] >= order) {
        throw Error("semigroup: table entry (" + std::to_string(i / order)
                    + ", " + std::to_string(i % order)
                    + ") = " + std::to_string(_table[i]) + " is out of range");
      }
    }
    auto const m = static_cast<index>(order);
    for (index a = 0; a < m; ++a) {
      for (index b = 0; b < m; ++b) {
        index ab = _table[a * order + b];
        for (index c = 0; c < m; ++c) {
          if (_table[ab * order + c] != _table[a * order + _table[b * order + c]]) {
            throw Error("semigroup: table is not associative at ("
                        + std::to_string(a) + ", " + std::to_string(b) + ", "
                        + std::to_string(c) + ")");
          }
        }
      }
    }
    for (index z = 0; z < m && !_zero; ++z) {
      bool absorbing = true;
      for (index x = 0; x < m && absorbing; ++x) {
        absorbing = product(z, x) == z && product(x, z) == z;
      }
      if (absorbing) {
        _zero = z;
      }
    }
    if (declared_zero && declared_zero != _zero) {
      throw Error("semigroup: declared zero " + std::to_string(*declared_zero)
                  + " is not an absorbing element");
    }
    for (index e = 0; e < m && !_identity; ++e) {
      bool neutral = true;
      for (index x = 0; x < m && neutral; ++x) {
        neutral = product(e, x) == x && product(x, e) == x;
      }
      if (neutral) {
        _identity = e;
      }
    }
  }

  bool FiniteSemigroup::is_commutative() const {
    for (index a = 0; a < _order; ++a) {
      for (index b = a + 1; b < _order; ++b) {
        if (product(a, b) != product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteSemigroup::is_cancellative() const {
    // left: ab = ac => b = c; right: ba = ca => b = c
    for (index a = 0; a < _order; ++a) {
      std::vector<bool> row(_order, false);
      std::vector<bool> col(_order, false);
      for (index b = 0; b < _order; ++b) {
        index l = product(a, b);
        index r = product(b, a);
        if (row[l] || col[r]) {
          return false;
        }
        row[l] = true;
        col[r] = true;
      }
    }
    return true;
  }

  bool FiniteSemigroup::is_group() const {
    return _identity.has_value() && is_cancellative();
  }

  std::optional<index>
  TransformationSemigroup::index_of(PartialTransformation const& a) const {
    auto it = std::lower_bound(
        sorted.begin(), sorted.end(), a,
        [this](index i, PartialTransformation const& x) { return elements[i] < x; });
    if (it != sorted.end() && elements[*it] == a) {
      return *it;
    }
    return std::nullopt;
  }

  TransformationSemigroup
  from_generators(std::span<PartialTransformation const> gens, std::size_t cap) {
    if (gens.empty()) {
      throw Error("from_generators: at least one generator is required");
    }
    std::size_t const n = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw Error("from_generators: generators have different degrees");
      }
    }
    cap = std::min(cap, FiniteSemigroup::max_order);

    std::vector<PartialTransformation>   elements;
    std::map<PartialTransformation, index> seen;
    auto add = [&](PartialTransformation const& x) {
      if (seen.emplace(x, static_cast<index>(elements.size())).second) {
        elements.push_back(x);
        if (elements.size() > cap) {
          throw Error("from_generators: closure exceeds " + std::to_string(cap)
                      + " elements");
        }
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(compose(elements[i], g));
      }
    }

    std::size_t const  m = elements.size();
    std::vector<index> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = seen.at(compose(elements[i], elements[j]));
      }
    }
    TransformationSemigroup result;
    result.semigroup = FiniteSemigroup(m, std::move(table));
    result.elements  = std::move(elements);
    result.sorted.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      result.sorted[i] = static_cast<index>(i);
    }
    std::sort(result.sorted.begin(), result.sorted.end(), [&](index a, index b) {
      return result.elements[a] < result.elements[b];
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // P(a) and the relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<index> p_set(FiniteSemigroup const& s, index a) {
    if (a >= s.order()) {
      throw Error("p_set: element " + std::to_string(a) + " is out of range");
    }
    auto const         m = static_cast<index>(s.order());
    std::vector<index> out;
    auto const         zero = s.zero();
    if (!zero) {
      for (index g = 0; g < m; ++g) {
        out.push_back(g);
      }
      return out;
    }
    if (a == *zero) {
      return {*zero};
    }
    // nonzero left multiples m*a, m in S^1
    std::vector<bool> is_multiple(m, false);
    is_multiple[a] = true;
    for (index x = 0; x < m; ++x) {
      is_multiple[s.product(x, a)] = true;
    }
    is_multiple[*zero] = false;
    for (index g = 0; g < m; ++g) {
      bool ok = true;
      for (index ma = 0; ma < m && ok; ++ma) {
        ok = !is_multiple[ma] || s.product(ma, g) != *zero;
      }
      if (ok) {
        out.push_back(g);
      }
    }
    return out;
  }

  std::string_view relation_name(RelationKind k) {
    switch (k) {
      case RelationKind::l:
        return "l";
      case RelationKind::o:
        return "o";
      case RelationKind::p:
        return "p";
      case RelationKind::pstar:
        return "pstar";
      case RelationKind::c:
        return "c";
    }
    return "?";
  }

  RelationKind parse_relation(std::string_view s) {
    if (s == "l") {
      return RelationKind::l;
    }
    if (s == "o") {
      return RelationKind::o;
    }
    if (s == "p") {
      return RelationKind::p;
    }
    if (s == "pstar" || s == "p*") {
      return RelationKind::pstar;
    }
    if (s == "c") {
      return RelationKind::c;
    }
    throw Error("unknown relation \"" + std::string(s)
                + "\" (expected l, o, p, pstar or c)");
  }

  bool RelationMatrix::is_reflexive() const {
    for (std::size_t i = 0; i < _m; ++i) {
      if (!(*this)(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool RelationMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < _m; ++i) {
      for (std::size_t j = i + 1; j < _m; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool RelationMatrix::is_transitive() const {
    for (std::size_t i = 0; i < _m; ++i) {
      for (std::size_t j = 0; j < _m; ++j) {
        if (!(*this)(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < _m; ++k) {
          if ((*this)(j, k) && !(*this)(i, k)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool RelationMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < _m; ++i) {
      for (std::size_t j = 0; j < _m; ++j) {
        if ((*this)(i, j) != (i == j)) {
          return false;
        }
      }
    }
    return true;
  }

  bool RelationMatrix::is_universal() const {
    return count() == _m * _m;
  }

  bool RelationMatrix::subset_of(RelationMatrix const& other) const {
    if (other._m != _m) {
      return false;
    }
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] && !other._bits[i]) {
        return false;
      }
    }
    return true;
  }

  std::size_t RelationMatrix::count() const {
    return static_cast<std::size_t>(std::count(_bits.begin(), _bits.end(), 1));
  }

  namespace {
    // ag = gb for some g in the allowed set, or a = b (g = 1)
    RelationMatrix left_conjugacy(FiniteSemigroup const&               s,
                                  std::vector<std::vector<index>> const* allowed) {
      auto const     m = static_cast<index>(s.order());
      RelationMatrix r(m);
      std::vector<index> all(m);
      for (index g = 0; g < m; ++g) {
        all[g] = g;
      }
      for (index a = 0; a < m; ++a) {
        r.set(a, a);
        auto const& gs = allowed ? (*allowed)[a] : all;
        for (index g : gs) {
          index ag = s.product(a, g);
          for (index b = 0; b < m; ++b) {
            if (!r(a, b) && s.product(g, b) == ag) {
              r.set(a, b);
            }
          }
        }
      }
      return r;
    }

    RelationMatrix both_ways(RelationMatrix const& r) {
      RelationMatrix out(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) {
          out.set(i, j, r(i, j) && r(j, i));
        }
      }
      return out;
    }

    RelationMatrix primary(FiniteSemigroup const& s) {
      auto const     m = static_cast<index>(s.order());
      RelationMatrix r(m);
      for (index u = 0; u <= m; ++u) {
        for (index v = 0; v <= m; ++v) {
          index a = s.product(u, v);
          index b = s.product(v, u);
          if (a < m && b < m) {
            r.set(a, b);
          }
        }
      }
      return r;
    }

    RelationMatrix closure(RelationMatrix const& r) {
      std::size_t const m = r.size();
      RelationMatrix    out(m);
      std::vector<std::size_t> queue;
      for (std::size_t a = 0; a < m; ++a) {
        std::vector<bool> seen(m, false);
        queue.assign(1, a);
        seen[a] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          std::size_t x = queue[head];
          for (std::size_t y = 0; y < m; ++y) {
            if (r(x, y) && !seen[y]) {
              seen[y] = true;
              queue.push_back(y);
            }
          }
        }
        for (std::size_t y : queue) {
          out.set(a, y);
        }
      }
      return out;
    }
  }  // namespace

  RelationMatrix relation(FiniteSemigroup const& s, RelationKind kind) {
    switch (kind) {
      case RelationKind::l:
        return left_conjugacy(s, nullptr);
      case RelationKind::o:
        return both_ways(left_conjugacy(s, nullptr));
      case RelationKind::p:
        return primary(s);
      case RelationKind::pstar:
        return closure(primary(s));
      case RelationKind::c: {
        std::vector<std::vector<index>> allowed(s.order());
        for (index a = 0; a < s.order(); ++a) {
          allowed[a] = p_set(s, a);
        }
        return both_ways(left_conjugacy(s, &allowed));
      }
    }
    throw std::logic_error("relation: unknown kind");
  }

  std::vector<std::vector<index>> partition_of(RelationMatrix const& r) {
    std::vector<std::vector<index>> out;
    std::vector<bool>               placed(r.size(), false);
    for (std::size_t a = 0; a < r.size(); ++a) {
      if (placed[a]) {
        continue;
      }
      std::vector<index> cls;
      for (std::size_t b = a; b < r.size(); ++b) {
        if (!placed[b] && r(a, b)) {
          placed[b] = true;
          cls.push_back(static_cast<index>(b));
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  std::vector<std::vector<index>> classes(FiniteSemigroup const& s,
                                          RelationKind           kind) {
    auto const r = relation(s, kind);
    if (!r.is_equivalence()) {
      throw Error("classes: relation \"" + std::string(relation_name(kind))
                  + "\" is not an equivalence on this semigroup");
    }
    return partition_of(r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  bool AxiomReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.status == CheckStatus::fail;
    });
  }

  AxiomCheck const& AxiomReport::find(std::string_view name) const {
    for (auto const& c : checks) {
      if (c.name == name) {
        return c;
      }
    }
    throw Error("axiom report: no check named \"" + std::string(name) + "\"");
  }

  AxiomReport check_axioms(FiniteSemigroup const& s) {
    auto const c  = relation(s, RelationKind::c);
    auto const o  = relation(s, RelationKind::o);
    auto const l  = relation(s, RelationKind::l);
    auto const pr = relation(s, RelationKind::p);

    AxiomReport rep;
    rep.has_zero      = s.zero().has_value();
    rep.commutative   = s.is_commutative();
    rep.cancellative  = s.is_cancellative();
    rep.c_is_diagonal = c.is_diagonal();
    rep.c_class_count = partition_of(c).size();

    auto add = [&rep](std::string name, CheckStatus st, std::string detail) {
      rep.checks.push_back({std::move(name), st, std::move(detail)});
    };
    auto verdict = [](bool ok) {
      return ok ? CheckStatus::pass : CheckStatus::fail;
    };

    add("c_equivalence", verdict(c.is_equivalence()),
        "~c reflexive, symmetric and transitive");
    add("c_in_o_in_l", verdict(c.subset_of(o) && o.subset_of(l)),
        "~c within ~o within ~l");
    add("p_in_o", verdict(pr.subset_of(o)), "~p within ~o");
    if (rep.has_zero) {
      add("zero_free_c_equals_o", CheckStatus::skipped, "semigroup has a zero");
      index z  = *s.zero();
      bool  ok = true;
      for (index b = 0; b < s.order(); ++b) {
        ok = ok && (c(z, b) == (b == z));
      }
      add("zero_class_singleton", verdict(ok), "[0]_c = {0}");
      add("c_trivial_iff_commutative_cancellative", CheckStatus::skipped,
          "semigroup has a zero");
    } else {
      add("zero_free_c_equals_o", verdict(c == o), "~c = ~o without zero");
      add("zero_class_singleton", CheckStatus::skipped, "semigroup has no zero");
      add("c_trivial_iff_commutative_cancellative",
          verdict(rep.c_is_diagonal == (rep.commutative && rep.cancellative)),
          "~c = diagonal iff commutative and cancellative");
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // I/O
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<index> parse_zero_line(std::string const& line) {
      std::string rest = line.substr(5);
      std::size_t pos  = 0;
      unsigned long z  = 0;
      try {
        z = std::stoul(rest, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || rest.find_first_not_of(" \t\r", pos) != std::string::npos) {
        throw Error("cayley table: malformed header \"" + line + "\"");
      }
      return static_cast<index>(z);
    }
  }  // namespace

  FiniteSemigroup read_cayley_text(std::istream& in) {
    std::optional<std::size_t> order;
    std::optional<index>       zero;
    std::vector<index>         table;
    std::string                line;
    std::size_t                row = 0;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      line = line.substr(first);
      if (line.rfind("zero=", 0) == 0) {
        if (row != 0) {
          throw Error("cayley table: \"zero=\" header after the table rows");
        }
        zero = parse_zero_line(line);
        continue;
      }
      std::istringstream ls(line);
      if (!order) {
        long long m = 0;
        std::string extra;
        if (!(ls >> m) || m <= 0 || (ls >> extra)) {
          throw Error("cayley table: first line must be the order m, got \""
                      + line + "\"");
        }
        order = static_cast<std::size_t>(m);
        if (*order > FiniteSemigroup::max_order) {
          throw Error("cayley table: order " + std::to_string(*order)
                      + " exceeds the limit of "
                      + std::to_string(FiniteSemigroup::max_order));
        }
        continue;
      }
      if (row == *order) {
        throw Error("cayley table: more than " + std::to_string(*order)
                    + " rows");
      }
      std::string tok;
      std::size_t col = 0;
      while (ls >> tok) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(tok, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos != tok.size() || v >= *order) {
          throw Error("cayley table: row " + std::to_string(row) + " entry "
                      + std::to_string(col) + " \"" + tok
                      + "\" is not an element index");
        }
        table.push_back(static_cast<index>(v));
        ++col;
      }
      if (col != *order) {
        throw Error("cayley table: row " + std::to_string(row) + " has "
                    + std::to_string(col) + " entries, expected "
                    + std::to_string(*order));
      }
      ++row;
    }
    if (!order) {
      throw Error("cayley table: missing order line");
    }
    if (row != *order) {
      throw Error("cayley table: expected " + std::to_string(*order)
                  + " rows, got " + std::to_string(row));
    }
    return FiniteSemigroup(*order, std::move(table), zero);
  }

  std::string write_cayley_text(FiniteSemigroup const& s) {
    std::ostringstream os;
    os << s.order() << '\n';
    if (s.zero()) {
      os << "zero=" << *s.zero() << '\n';
    }
    for (index a = 0; a < s.order(); ++a) {
      for (index b = 0; b < s.order(); ++b) {
        os << (b ? " " : "") << s.product(a, b);
      }
      os << '\n';
    }
    return os.str();
  }

  FiniteSemigroup cayley_from_json(nlohmann::json const& j) {
    if (!j.is_object()) {
      throw Error("cayley table: expected a JSON object");
    }
    if (!j.contains("order") || !j["order"].is_number_unsigned()) {
      throw Error("cayley table: field \"order\" must be a positive integer");
    }
    auto const m = j["order"].get<std::size_t>();
    if (m == 0 || m > FiniteSemigroup::max_order) {
      throw Error("cayley table: field \"order\" is out of range");
    }
    if (!j.contains("table") || !j["table"].is_array()
        || j["table"].size() != m) {
      throw Error("cayley table: field \"table\" must be an array of "
                  + std::to_string(m) + " rows");
    }
    std::vector<index> table;
    table.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      auto const& row = j["table"][i];
      if (!row.is_array() || row.size() != m) {
        throw Error("cayley table: field \"table\"[" + std::to_string(i)
                    + "] must have " + std::to_string(m) + " entries");
      }
      for (std::size_t k = 0; k < m; ++k) {
        if (!row[k].is_number_unsigned() || row[k].get<std::uint64_t>() >= m) {
          throw Error("cayley table: field \"table\"[" + std::to_string(i)
                      + "][" + std::to_string(k) + "] is not an element index");
        }
        table.push_back(row[k].get<index>());
      }
    }
    std::optional<index> zero;
    if (j.contains("zero") && !j["zero"].is_null()) {
      if (!j["zero"].is_number_unsigned()) {
        throw Error("cayley table: field \"zero\" must be an element index");
      }
      zero = j["zero"].get<index>();
    }
    return FiniteSemigroup(m, std::move(table), zero);
  }

  void to_json(nlohmann::json& j, FiniteSemigroup const& s) {
    auto rows = nlohmann::json::array();
    for (index a = 0; a < s.order(); ++a) {
      auto row = nlohmann::json::array();
      for (index b = 0; b < s.order(); ++b) {
        row.push_back(s.product(a, b));
      }
      rows.push_back(std::move(row));
    }
    j = nlohmann::json{{"order", s.order()}, {"table", std::move(rows)}};
    if (s.zero()) {
      j["zero"] = *s.zero();
    }
  }

  void to_json(nlohmann::json& j, AxiomReport const& r) {
    auto checks = nlohmann::json::array();
    for (auto const& c : r.checks) {
      char const* st = c.status == CheckStatus::pass   ? "pass"
                       : c.status == CheckStatus::fail ? "fail"
                                                       : "skipped";
      checks.push_back({{"name", c.name}, {"status", st}, {"detail", c.detail}});
    }
    j = nlohmann::json{{"all_passed", r.all_passed()},
                       {"has_zero", r.has_zero},
                       {"commutative", r.commutative},
                       {"cancellative", r.cancellative},
                       {"c_is_diagonal", r.c_is_diagonal},
                       {"c_class_count", r.c_class_count},
                       {"checks", std::move(checks)}};
  }

}  // namespace semiconj
