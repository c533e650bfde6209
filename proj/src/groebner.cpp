#include "pezzo/groebner.hpp"

#include <bit>

namespace pezzo::alg {

template class Buchberger<PrimeField>;
template class Buchberger<RationalField>;

namespace {

std::vector<unsigned> minimal_supports(std::span<const Monomial> leading) {
  std::vector<unsigned> sup;
  for (const auto& m : leading) sup.push_back(support_mask(m));
  std::sort(sup.begin(), sup.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<unsigned> minimal;
  for (unsigned s : sup) {
    bool covered = false;
    for (unsigned t : minimal)
      if ((t & s) == t) {
        covered = true;
        break;
      }
    if (!covered) minimal.push_back(s);
  }
  return minimal;
}

}  // namespace

int krull_dimension(std::span<const Monomial> leading, int nvars) {
  auto sup = minimal_supports(leading);
  for (unsigned s : sup)
    if (s == 0) return -1;
  int best = 0;
  const unsigned full = (1u << nvars);
  for (unsigned mask = 0; mask < full; ++mask) {
    int pc = std::popcount(mask);
    if (pc <= best) continue;
    bool independent = true;
    for (unsigned s : sup)
      if ((s & mask) == s) {
        independent = false;
        break;
      }
    if (independent) best = pc;
  }
  return best;
}

bool has_all_pure_powers(std::span<const Monomial> leading, int nvars) {
  unsigned seen = 0;
  for (const auto& m : leading) {
    unsigned s = support_mask(m);
    if (s == 0) return true;
    if (std::popcount(s) == 1) seen |= s;
  }
  return seen == (1u << nvars) - 1;
}

std::optional<std::vector<Monomial>> standard_monomials(std::span<const Monomial> leading,
                                                     std::span<const int> weights, std::size_t cap) {
  const int nvars = static_cast<int>(weights.size());
  for (const auto& m : leading)
    if (m.is_one()) return std::vector<Monomial>{};
  if (!has_all_pure_powers(leading, nvars)) return std::nullopt;
  std::vector<Monomial> out;
  Monomial cur;
  bool overflow = false;
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& l : leading) {
      bool d = true;
      for (int i = 0; i < nvars; ++i)
        if (l.e[i] > m.e[i]) {
          d = false;
          break;
        }
      if (d) return true;
    }
    return false;
  };
  // depth-first over exponent vectors; divisibility is monotone so a hit prunes
  std::function<void(int)> walk = [&](int v) {
    if (overflow) return;
    if (v == nvars) {
      Monomial m = cur;
      m.deg = 0;
      for (int i = 0; i < nvars; ++i) m.deg += m.e[i] * weights[i];
      out.push_back(m);
      if (out.size() > cap) overflow = true;
      return;
    }
    for (int k = 0;; ++k) {
      cur.e[v] = static_cast<std::uint16_t>(k);
      if (in_ideal(cur)) break;
      walk(v + 1);
      if (overflow) break;
    }
    cur.e[v] = 0;
  };
  walk(0);
  if (overflow) return std::nullopt;
  return out;
}

}  // namespace pezzo::alg
