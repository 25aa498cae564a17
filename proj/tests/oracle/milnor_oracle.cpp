#include "milnor_oracle.hpp"

#include <numeric>

namespace oracle {

Poly partial(const Poly& f, std::size_t i) {
  Poly d;
  for (const auto& [e, c] : f) {
    if (e[i] == 0) continue;
    std::vector<int> e2 = e;
    e2[i] -= 1;
    d[e2] += c * e[i];
  }
  return d;
}

namespace {

void exponents(std::size_t nvars, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == nvars) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= k; ++a) {
    cur.push_back(a);
    exponents(nvars, k - a, cur, out);
    cur.pop_back();
  }
}

int degree(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

using Row = std::map<std::size_t, mpq_class>;

// Rank by reducing each row against the pivots collected so far.
int rank(const std::vector<Row>& rows) {
  std::map<std::size_t, Row> pivots;
  for (Row r : rows) {
    while (!r.empty()) {
      const auto lead = r.begin();
      const auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        pivots.emplace(lead->first, r);
        break;
      }
      const mpq_class m = lead->second / it->second.begin()->second;
      for (const auto& [c, v] : it->second) {
        mpq_class& x = r[c];
        x -= m * v;
        if (x == 0) r.erase(c);
      }
    }
  }
  return static_cast<int>(pivots.size());
}

}  // namespace

int quotient_dimension(const Poly& f, std::size_t nvars, int k) {
  std::vector<std::vector<int>> mons;
  for (int d = 0; d <= k; ++d) {
    std::vector<int> cur;
    exponents(nvars, d, cur, mons);
  }
  std::map<std::vector<int>, std::size_t> col;
  for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < nvars; ++i) {
    const Poly g = partial(f, i);
    for (const auto& m : mons) {
      Row row;
      for (const auto& [e, c] : g) {
        std::vector<int> p(nvars);
        for (std::size_t v = 0; v < nvars; ++v) p[v] = e[v] + m[v];
        if (degree(p) > k) continue;
        row[col.at(p)] += c;
      }
      std::erase_if(row, [](const auto& e) { return e.second == 0; });
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(mons.size()) - rank(rows);
}

int milnor_number(const Poly& f, std::size_t nvars, int max_k) {
  // Equal dimensions at k-1 and k give m^k in j(f) + m^{k+1}, so m^k lies in j(f).
  int prev = quotient_dimension(f, nvars, 0);
  for (int k = 1; k <= max_k; ++k) {
    const int cur = quotient_dimension(f, nvars, k);
    if (cur == prev) return cur;
    prev = cur;
  }
  return -1;
}

}  // namespace oracle
