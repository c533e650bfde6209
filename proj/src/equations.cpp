#include "pezzo/equations.hpp"

#include <numeric>

namespace pezzo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

CellLayout layout_cells(const FamilyDescriptor& f) {
  CellLayout lay;
  lay.kind = f.kind();
  lay.cell_weight = embedding_weights(f.format);
  const std::size_t ncell = lay.cell_weight.size();
  std::vector<std::int64_t> item_weight = lay.cell_weight;
  item_weight.insert(item_weight.end(), f.cones.begin(), f.cones.end());
  std::vector<char> cut(item_weight.size(), 0);
  for (auto e : f.sections) {
    bool done = false;
    for (std::size_t i = 0; i < item_weight.size() && !done; ++i)
      if (!cut[i] && item_weight[i] == e) {
        cut[i] = 1;
        done = true;
      }
    if (!done) throw Error(ErrorKind::NotQuasilinear, "section degree " + std::to_string(e));
  }
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < item_weight.size(); ++i)
    if (!cut[i]) survivors.push_back(i);
  std::stable_sort(survivors.begin(), survivors.end(),
                   [&](std::size_t x, std::size_t y) { return item_weight[x] < item_weight[y]; });
  std::vector<int> var_of(item_weight.size(), -1);
  for (std::size_t v = 0; v < survivors.size(); ++v) {
    var_of[survivors[v]] = static_cast<int>(v);
    lay.var_weight.push_back(static_cast<int>(item_weight[survivors[v]]));
    lay.var_name.push_back(std::string(1, static_cast<char>('a' + v)));
  }
  lay.cell_var.assign(var_of.begin(), var_of.begin() + static_cast<long>(ncell));
  lay.cone_var.assign(var_of.begin() + static_cast<long>(ncell), var_of.end());
  return lay;
}

}  // namespace pezzo
