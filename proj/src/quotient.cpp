#include "mdh/quotient.hpp"

#include "detail/disjoint_sets.hpp"
#include "mdh/errors.hpp"

#include <unordered_map>

namespace mdh {

QuotientResult quotient_rank(const QuotientInput& q, const Exponent& b) {
  const std::size_t n = q.vertex_count;
  auto check = [n](std::size_t i) {
    if (i >= n) throw InputError("quotient vertex " + std::to_string(i) + " out of range");
  };
  detail::DisjointSets sets(n);
  for (const auto& [u, v] : q.merges) {
    check(u);
    check(v);
    sets.unite(u, v);
  }
  if (q.tord) {
    if (q.tord->size() != n) throw InputError("tangency matrix size does not match the vertex count");
    require_ultrametric(*q.tord);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((*q.tord)[i][j] > b) sets.unite(i, j);
      }
    }
  }
  int kept = 0;
  for (const auto& e : q.edges) {
    check(e.u);
    check(e.v);
    if (e.sigma > b) {
      sets.unite(e.u, e.v);
    } else {
      ++kept;
    }
  }

  // Components of the quotient graph built from the kept edges.
  QuotientResult out;
  out.classes.resize(n);
  std::unordered_map<std::size_t, std::size_t> class_index;
  for (std::size_t i = 0; i < n; ++i) {
    out.classes[i] = sets.find(i);
    class_index.emplace(out.classes[i], class_index.size());
  }
  detail::DisjointSets quotient(class_index.size());
  for (const auto& e : q.edges) {
    if (e.sigma > b) continue;
    quotient.unite(class_index.at(out.classes[e.u]), class_index.at(out.classes[e.v]));
  }
  const int v = static_cast<int>(class_index.size());
  const int k = static_cast<int>(quotient.class_count());
  out.rank = kept - v + k;
  out.components = k;
  return out;
}

QuotientInput quotient_from_complex(const HolderComplex& c) {
  require_valid(c);
  QuotientInput q;
  q.vertex_count = c.vertex_count();
  for (const auto& e : c.edges()) {
    q.edges.push_back({*c.index_of(e.u), *c.index_of(e.v), e.sigma});
  }
  return q;
}

std::optional<std::string> ultrametric_violation(const TordMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return "tangency matrix is not square";
    if (!m[i][i].is_infinite()) return "diagonal entry " + std::to_string(i) + " is not inf";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        return "tangency matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m[a][c] < min(m[a][b], m[b][c])) {
          return "ultrametric inequality fails for (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                 std::to_string(c) + "): tord(" + std::to_string(a) + "," + std::to_string(c) + ") = " +
                 m[a][c].to_string() + " < min(" + m[a][b].to_string() + ", " + m[b][c].to_string() + ")";
        }
      }
    }
  }
  return std::nullopt;
}

void require_ultrametric(const TordMatrix& m) {
  if (auto msg = ultrametric_violation(m)) throw InputError(*msg);
}

}  // namespace mdh
