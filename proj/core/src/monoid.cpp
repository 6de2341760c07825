#include "latk/monoid.hpp"

#include <algorithm>

#include "latk/normal_forms.hpp"

namespace latk {

Integer support_degree(const IntegerMatrix& support_forms, std::span<const Integer> x) {
  Integer s = 0;
  for (std::size_t f = 0; f < support_forms.rows(); ++f) s += dot(support_forms.row(f), x);
  return s;
}

std::vector<IntegerVector> global_reduce(std::vector<IntegerVector> candidates,
                                         const IntegerMatrix& support_forms,
                                         const std::function<Integer(std::span<const Integer>)>& order_degree) {
  struct Item {
    IntegerVector v;
    Integer deg;
    IntegerVector values;
  };
  std::vector<Item> items;
  items.reserve(candidates.size());
  for (auto& c : candidates) {
    if (is_zero(c)) continue;
    Item it{std::move(c), 0, {}};
    it.deg = order_degree(it.v);
    it.values = support_forms * std::span<const Integer>(it.v);
    items.push_back(std::move(it));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return lex_less(a.v, b.v);
  });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const Item& a, const Item& b) { return a.v == b.v; }),
              items.end());

  std::vector<const Item*> kept;
  for (const auto& y : items) {
    bool reducible = false;
    for (const Item* x : kept) {
      if (!(x->deg < y.deg)) break;
      bool below = true;
      for (std::size_t f = 0; f < y.values.size() && below; ++f)
        if (x->values[f] > y.values[f]) below = false;
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(&y);
  }
  std::vector<IntegerVector> out;
  out.reserve(kept.size());
  for (const Item* k : kept) out.push_back(k->v);
  return out;
}

std::vector<IntegerVector> minimal_module_generators(const std::vector<IntegerVector>& closed_points,
                                                     const IntegerMatrix& gens,
                                                     const IntegerMatrix& support_forms) {
  std::vector<IntegerVector> pts = closed_points;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<IntegerVector> out;
  for (const auto& y : pts) {
    bool minimal = true;
    for (std::size_t g = 0; g < gens.rows() && minimal; ++g) {
      if (is_zero(gens.row(g))) continue;
      IntegerVector diff = subtract(y, gens.row(g));
      bool inside = true;
      for (std::size_t f = 0; f < support_forms.rows() && inside; ++f)
        if (dot(support_forms.row(f), diff).sign() < 0) inside = false;
      if (inside) minimal = false;
    }
    if (minimal) out.push_back(y);
  }
  return out;
}

std::string ClassGroup::str() const {
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

ClassGroup class_group(const IntegerMatrix& support_forms) {
  ClassGroup g;
  const std::size_t s = support_forms.rows();
  if (s == 0) return g;
  SmithForm f = smith_normal_form(support_forms);
  g.free_rank = s - f.rank;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.diag[i] > Integer(1)) g.torsion.push_back(f.diag[i]);
  return g;
}

}  // namespace latk
