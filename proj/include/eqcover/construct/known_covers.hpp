#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eqcover/construct/elbow.hpp"
#include "eqcover/exact/chromatic.hpp"
#include "eqcover/graph.hpp"
#include "eqcover/orientation.hpp"
#include "eqcover/verify.hpp"

namespace eqcover {

// Size-3 orientation covering of K4 found by decide_sigma(K4, 3) and pinned.
// One string per orientation, one character per edge in index order
// (01 02 03 12 13 23); '1' means reversed.
inline OrientationCover k4_sigma_cover() {
  static constexpr std::array<const char*, 3> rows{"000110", "111000", "111111"};
  OrientationCover c{CoverKind::orientation, {}};
  for (const char* row : rows) {
    std::vector<std::uint8_t> bits;
    for (const char* p = row; *p; ++p) bits.push_back(*p == '1');
    c.orientations.emplace_back(4, std::move(bits));
  }
  return c;
}

// The five permutations of K16 as printed, pi(1..16), 1-based.
inline constexpr std::array<std::array<int, 16>, 5> kK16Table{{
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16},
    {13, 11, 10, 6, 4, 9, 5, 3, 7, 2, 12, 8, 14, 15, 16, 1},
    {14, 11, 10, 3, 8, 12, 5, 7, 2, 9, 4, 6, 15, 16, 1, 13},
    {15, 7, 8, 9, 6, 4, 3, 12, 10, 11, 5, 2, 16, 1, 13, 14},
    {16, 5, 4, 10, 11, 3, 12, 6, 9, 7, 2, 8, 1, 13, 14, 15},
}};

struct K16Table {
  EyebrowCover permutations;
  OrientationCover orientations;
};

inline K16Table k16_table_cover() {
  Graph k16 = complete_graph(16);
  K16Table t;
  t.orientations.kind = CoverKind::orientation;
  for (const auto& row : kK16Table) {
    std::vector<int> ranks;
    for (int value : row) ranks.push_back(value - 1);
    Permutation p(std::move(ranks));
    t.orientations.orientations.push_back(permutation_to_orientation(k16, p));
    t.permutations.permutations.push_back(std::move(p));
  }
  return t;
}

enum class ColoringSource { exact, greedy };

struct ColoringPullback {
  OrientationCover cover;
  Coloring coloring;   // the compacted coloring used as homomorphism onto K_c
  std::string base;    // which covering of K_c was pulled back
};

// Orientation covering of g pulled back along a proper c-coloring from the
// smallest known covering of K_c.
inline ColoringPullback cover_via_coloring(const Graph& g, const std::optional<Coloring>& supplied,
                                           ColoringSource source = ColoringSource::exact, const Budget& budget = {}) {
  Coloring coloring;
  if (supplied) {
    supplied->check_proper(g);
    coloring = supplied->compacted();
  } else if (source == ColoringSource::exact) {
    coloring = exact_chromatic(g, budget).witness.compacted();
  } else {
    coloring = greedy_coloring(g).compacted();
  }
  const int c = coloring.palette_size();
  ColoringPullback out{{CoverKind::orientation, {}}, coloring, {}};
  if (c <= 2) {
    out.cover = bipartite_orientation_cover(g);
    out.base = "bipartite";
    return out;
  }
  Graph kc;
  OrientationCover base;
  if (c <= 4) {
    kc = complete_graph(4);
    base = k4_sigma_cover();
    out.base = "k4-size3";
  } else if (c <= 16) {
    kc = complete_graph(16);
    base = k16_table_cover().orientations;
    out.base = "k16-table";
  } else {
    kc = complete_graph(c);
    base = orientation_cover_from_elbow(kc, elbow_cover_complete(c));
    out.base = "elbow-k" + std::to_string(c);
  }
  std::vector<Vertex> f(coloring.colors().begin(), coloring.colors().end());
  for (const Orientation& o : base.orientations) out.cover.orientations.push_back(pullback_orientation(g, kc, f, o));
  return out;
}

}  // namespace eqcover
