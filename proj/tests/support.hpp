#pragma once

#include <memory>
#include <random>
#include <string>

#include "hallwb/quiver.hpp"
#include "hallwb/representation.hpp"

#ifndef HALLWB_FIXTURE_DIR
#define HALLWB_FIXTURE_DIR "fixtures"
#endif

namespace testing {

inline hallwb::QuiverPtr fixture(const std::string& name) {
  return std::make_shared<const hallwb::Quiver>(
      hallwb::load_quiver(std::string(HALLWB_FIXTURE_DIR) + "/" + name + ".quiver"));
}

inline hallwb::QuiverPtr quiver_from(const std::string& text) {
  return std::make_shared<const hallwb::Quiver>(hallwb::parse_quiver(text));
}

inline hallwb::Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int p) {
  hallwb::Matrix m(rows, cols, p);
  std::uniform_int_distribution<int> d(0, p - 1);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, d(rng));
  return m;
}

inline hallwb::Representation random_rep(std::mt19937_64& rng, const hallwb::QuiverPtr& q, int p,
                                         const std::vector<int>& dims) {
  std::vector<hallwb::Matrix> maps;
  for (const auto& a : q->arrows()) maps.push_back(random_matrix(rng, dims[a.target], dims[a.source], p));
  return hallwb::Representation(q, p, dims, maps);
}

}  // namespace testing
