#pragma once

// The two key varieties: weighted Gr(2,5) in its Plücker embedding and
// weighted P2 x P2 in its Segre embedding, plus families built from them
// by projective cones and quasilinear sections.

#include "pezzo/arith.hpp"
#include "pezzo/hilbert.hpp"
#include "pezzo/wps.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pezzo {

enum class FormatKind { Grass, Segre };

const char* to_string(FormatKind k);
FormatKind parse_format_kind(const std::string& s);

struct GrassWeights {
  std::array<Rat, 5> w;
  Rat d() const;
};

struct SegreWeights {
  std::array<Rat, 3> a;
  std::array<Rat, 3> b;
  Rat d() const;
};

// Validating constructors: sorts, checks denominators in {1,2}, integral and
// positive pair sums.
GrassWeights make_grass(std::array<Rat, 5> w);
SegreWeights make_segre(std::array<Rat, 3> a, std::array<Rat, 3> b);

using Format = std::variant<GrassWeights, SegreWeights>;

FormatKind kind_of(const Format& f);
std::string format_str(const Format& f);

// Weights of the embedding coordinates: Plücker cells (i<j, row-major) or
// Segre cells a_i + b_j (row-major in i).
std::vector<std::int64_t> embedding_weights(const Format& f);
std::vector<std::int64_t> format_equation_degrees(const Format& f);
HilbertSeries format_series(const Format& f);

struct SyzygyMatrix {
  FormatKind kind;
  // Grass: 5x5 with entry (i,j) = w_i + w_j off the diagonal, 0 on it.
  // Segre: 3x3 with entry (i,j) = b_i + a_j, the orientation used when the
  // grid is printed row by row.
  std::vector<std::vector<std::int64_t>> entries;
  std::string render() const;  // upper triangle rows for Grass
};

SyzygyMatrix syzygy_matrix(const Format& f);

struct FamilyDescriptor {
  Format format;
  std::vector<std::int64_t> cones;
  std::vector<std::int64_t> sections;

  WeightedSpace ambient;
  std::vector<std::int64_t> equation_degrees;  // sorted
  std::int64_t fano_index = 0;
  std::int64_t canonical_degree = 0;  // -I
  HilbertSeries hilbert;

  FormatKind kind() const { return kind_of(format); }
  int codimension() const { return kind() == FormatKind::Grass ? 3 : 4; }
  std::string str() const;
};

FamilyDescriptor build_family(const Format& format, std::vector<std::int64_t> cones,
                              std::vector<std::int64_t> sections);

Rat deg_grass(const GrassWeights& w);
Rat deg_segre(const SegreWeights& s);

// -K^2 = I^2 * degree_limit(hilbert, 2); NonPositiveDegree if <= 0.
Rat anticanonical_degree(const FamilyDescriptor& f);
// h^0(-K) = coefficient of t^I.
Int anticanonical_sections(const FamilyDescriptor& f);
// Coefficient of t^1.
Int first_plurigenus(const FamilyDescriptor& f);
// True iff h^0(-K) = 0.
bool toric_obstruction(const FamilyDescriptor& f);

}  // namespace pezzo
