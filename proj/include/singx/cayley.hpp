#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "singx/foundation.hpp"
#include "singx/report.hpp"

// Finite semigroup service layer: multiplication tables over an explicit
// roster, the structural checks used by the verification suites, and the
// CSV/JSON exports. Rows and columns are indexed in roster order, which is
// always a canonical enumeration order, so exports are byte-stable.

namespace singx {

struct CayleyTable {
  std::vector<std::string> roster;
  std::vector<std::vector<std::uint32_t>> table;

  std::size_t size() const { return roster.size(); }
  std::uint32_t at(std::size_t i, std::size_t j) const { return table[i][j]; }
};

// code() -> roster position lookup for a fixed roster of transformations.
class TransformationIndex {
 public:
  TransformationIndex(GroundSet g, const std::vector<Transformation>& roster)
      : ground_(g) {
    detail::require(g.n <= 7, "transformation index table too large");
    long span = 1;
    for (int i = 0; i < g.n; ++i) span *= g.n;
    by_code_.assign(static_cast<std::size_t>(span), -1);
    for (std::size_t i = 0; i < roster.size(); ++i) {
      by_code_[static_cast<std::size_t>(roster[i].code())] =
          static_cast<std::int32_t>(i);
    }
  }

  std::int32_t find(const Transformation& t) const {
    detail::require_same_ground(ground_, t.ground(), "TransformationIndex");
    return by_code_[static_cast<std::size_t>(t.code())];
  }

  std::uint32_t at(const Transformation& t) const {
    std::int32_t i = find(t);
    detail::require(i >= 0, "transformation not in roster");
    return static_cast<std::uint32_t>(i);
  }

 private:
  GroundSet ground_;
  std::vector<std::int32_t> by_code_;
};

template <class Elem, class LabelFn, class ProductFn, class IndexFn>
CayleyTable make_cayley_table(const std::vector<Elem>& elems, LabelFn&& label,
                              ProductFn&& product, IndexFn&& index) {
  CayleyTable t;
  t.roster.reserve(elems.size());
  for (const Elem& e : elems) t.roster.push_back(label(e));
  t.table.assign(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      t.table[i][j] = static_cast<std::uint32_t>(index(product(elems[i], elems[j])));
    }
  }
  return t;
}

// The base object everything is compared against: Sing(X) under left-to-right
// composition, roster in lexicographic order.
inline CayleyTable build_sing_table(GroundSet g) {
  detail::require(g.n <= 5, "full Cayley table of Sing is built for n <= 5 only");
  auto elems = enumerate_sing(g);
  TransformationIndex idx(g, elems);
  return make_cayley_table(
      elems, [](const Transformation& a) { return a.to_string(); },
      [](const Transformation& a, const Transformation& b) { return compose(a, b); },
      [&](const Transformation& p) { return idx.at(p); });
}

inline Report check_associative(const CayleyTable& t) {
  Report r;
  r.title = "associativity";
  const std::size_t k = t.size();
  detail::require(k <= 1024, "associativity check too large");
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::uint32_t ab = t.table[a][b];
      for (std::size_t c = 0; c < k; ++c) {
        ++r.checks;
        if (t.table[ab][c] != t.table[a][t.table[b][c]]) {
          r.fail("(" + t.roster[a] + ")(" + t.roster[b] + ")(" + t.roster[c] + ")");
        }
      }
    }
  }
  return r;
}

inline std::vector<std::size_t> idempotents(const CayleyTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.table[i][i] == i) out.push_back(i);
  }
  return out;
}

// Every element has an inner inverse within the table: a x a = a for some x.
inline bool is_regular(const CayleyTable& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    bool found = false;
    for (std::size_t x = 0; x < t.size() && !found; ++x) {
      found = t.table[t.table[a][x]][a] == a;
    }
    if (!found) return false;
  }
  return true;
}

// Right reductive: the right-regular representation is injective, i.e. no two
// columns of the table agree everywhere.
inline bool is_right_reductive(const CayleyTable& t) {
  const std::size_t k = t.size();
  std::vector<std::vector<std::uint32_t>> cols(k, std::vector<std::uint32_t>(k));
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t a = 0; a < k; ++a) cols[a][s] = t.table[s][a];
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

// map carries roster positions of t1 to roster positions of t2.
inline Report verify_hom(const CayleyTable& t1, const CayleyTable& t2,
                         const std::vector<std::uint32_t>& map) {
  detail::require(map.size() == t1.size(), "map must cover the first roster");
  for (std::uint32_t v : map) {
    detail::require(v < t2.size(), "map target out of range");
  }
  Report r;
  r.title = "homomorphism";
  for (std::size_t i = 0; i < t1.size(); ++i) {
    for (std::size_t j = 0; j < t1.size(); ++j) {
      ++r.checks;
      if (map[t1.table[i][j]] != t2.table[map[i]][map[j]]) {
        r.fail(t1.roster[i] + " * " + t1.roster[j]);
      }
    }
  }
  return r;
}

namespace detail {

inline bool is_bijection_onto(const std::vector<std::uint32_t>& map,
                              std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (std::uint32_t v : map) {
    if (v >= target_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace detail

inline Report verify_iso(const CayleyTable& t1, const CayleyTable& t2,
                         const std::vector<std::uint32_t>& map) {
  Report r = verify_hom(t1, t2, map);
  r.title = "isomorphism";
  ++r.checks;
  if (!detail::is_bijection_onto(map, t2.size())) {
    r.fail("map is not a bijection onto the second roster");
  }
  return r;
}

inline Report verify_anti_iso(const CayleyTable& t1, const CayleyTable& t2,
                              const std::vector<std::uint32_t>& map) {
  detail::require(map.size() == t1.size(), "map must cover the first roster");
  for (std::uint32_t v : map) {
    detail::require(v < t2.size(), "map target out of range");
  }
  Report r;
  r.title = "anti-isomorphism";
  for (std::size_t i = 0; i < t1.size(); ++i) {
    for (std::size_t j = 0; j < t1.size(); ++j) {
      ++r.checks;
      if (map[t1.table[i][j]] != t2.table[map[j]][map[i]]) {
        r.fail(t1.roster[i] + " * " + t1.roster[j]);
      }
    }
  }
  ++r.checks;
  if (!detail::is_bijection_onto(map, t2.size())) {
    r.fail("map is not a bijection onto the second roster");
  }
  return r;
}

namespace detail {

inline void csv_cell(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

inline void json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace detail

// Header row of labels, then one row per element: its label followed by the
// labels of the products, all cells quoted.
inline void export_csv(const CayleyTable& t, std::ostream& os) {
  detail::csv_cell(os, "");
  for (const auto& l : t.roster) {
    os << ',';
    detail::csv_cell(os, l);
  }
  os << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    detail::csv_cell(os, t.roster[i]);
    for (std::size_t j = 0; j < t.size(); ++j) {
      os << ',';
      detail::csv_cell(os, t.roster[t.table[i][j]]);
    }
    os << '\n';
  }
}

// {"roster": [...], "table": [[...], ...]} with table entries as roster
// positions.
inline void export_json(const CayleyTable& t, std::ostream& os) {
  os << "{\"roster\":[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) os << ',';
    detail::json_string(os, t.roster[i]);
  }
  os << "],\"table\":[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j > 0) os << ',';
      os << t.table[i][j];
    }
    os << ']';
  }
  os << "]}";
}

}  // namespace singx
