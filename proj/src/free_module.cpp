#include "glc/free_module.hpp"

#include "glc/errors.hpp"

namespace glc {

FreeModule twist(const FreeModule& f, const Multidegree& delta) {
  FreeModule out = f;
  for (auto& s : out.shifts) s = s - delta;
  return out;
}

void ModuleMap::validate(const GradingData& g) const {
  if (cols.size() != src.rank()) throw WrongShape("map has wrong number of columns");
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != tgt.rank()) throw WrongShape("map column has wrong rank");
    for (std::size_t i = 0; i < tgt.rank(); ++i) {
      const Polynomial& p = cols[j][i];
      if (p.is_zero()) continue;
      auto d = poly_degree(g, p);
      if (!d || *d != src.shifts[j] - tgt.shifts[i])
        throw DegreeMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not homogeneous of the required degree");
    }
  }
}

ModuleMap map_zero(FreeModule src, FreeModule tgt) {
  ModuleMap m;
  m.cols.assign(src.rank(), mod_zero(tgt.rank()));
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  return m;
}

ModuleMap map_identity(const FreeModule& f, std::size_t nvars) {
  ModuleMap m = map_zero(f, f);
  for (std::size_t i = 0; i < f.rank(); ++i) m.cols[i][i] = poly_const(nvars, 1);
  return m;
}

ModuleElement map_apply(const PrimeField& F, const ModuleMap& a, const ModuleElement& v) {
  if (v.size() != a.src.rank()) throw WrongShape("map applied to wrong-rank element");
  ModuleElement out = mod_zero(a.tgt.rank());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.tgt.rank(); ++i) {
      if (a.cols[j][i].is_zero()) continue;
      out[i] = poly_add(F, out[i], poly_mul(F, a.cols[j][i], v[j]));
    }
  }
  return out;
}

ModuleMap map_compose(const PrimeField& F, const ModuleMap& a, const ModuleMap& b) {
  if (b.tgt.rank() != a.src.rank()) throw WrongShape("composition rank mismatch");
  ModuleMap m = map_zero(b.src, a.tgt);
  for (std::size_t j = 0; j < b.src.rank(); ++j) m.cols[j] = map_apply(F, a, b.cols[j]);
  return m;
}

ModuleMap map_add(const PrimeField& F, const ModuleMap& a, const ModuleMap& b) {
  if (a.src.rank() != b.src.rank() || a.tgt.rank() != b.tgt.rank())
    throw WrongShape("map addition rank mismatch");
  ModuleMap m = a;
  for (std::size_t j = 0; j < m.cols.size(); ++j) m.cols[j] = mod_add(F, a.cols[j], b.cols[j]);
  return m;
}

ModuleMap map_scale(const PrimeField& F, Scalar c, const ModuleMap& a) {
  ModuleMap m = a;
  for (auto& col : m.cols) col = mod_scale(F, c, col);
  return m;
}

ModuleMap map_dual(const ModuleMap& a) {
  ModuleMap m;
  m.src.shifts.reserve(a.tgt.rank());
  for (const auto& s : a.tgt.shifts) m.src.shifts.push_back(-s);
  m.tgt.shifts.reserve(a.src.rank());
  for (const auto& s : a.src.shifts) m.tgt.shifts.push_back(-s);
  m.cols.assign(m.src.rank(), mod_zero(m.tgt.rank()));
  for (std::size_t i = 0; i < a.tgt.rank(); ++i)
    for (std::size_t j = 0; j < a.src.rank(); ++j) m.cols[i][j] = a.cols[j][i];
  return m;
}

}  // namespace glc
