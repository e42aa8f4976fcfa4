#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallwb/limits.hpp"
#include "hallwb/registry.hpp"
#include "hallwb/representation.hpp"

namespace hallwb {

enum class EnumStrategy {
  Auto,        // Exhaustive when the raw tuple count is small, else Extension
  Exhaustive,  // every matrix tuple in lexicographic order; first hit represents its class
  Extension,   // every X is an extension of X/S by a simple submodule S
};

// Dimension vectors with the given number of vertices and total dimension,
// in lexicographic order.
std::vector<std::vector<int>> dimension_vectors(int vertices, int total);

bool is_simple(const Representation& m);

// All cyclic representations with dimension vector `dims` (one per pointed
// normal form; isomorphic modules may repeat).
std::vector<Representation> cyclic_representations(QuiverPtr quiver, int p, const std::vector<int>& dims,
                                                   const Limits& limits);

// Lazily built catalogue of isomorphism classes for one (quiver, p, nilpotent)
// context, backed by an IsoRegistry shared with Hall products.
class ClassCatalog {
 public:
  ClassCatalog(QuiverPtr quiver, int p, bool nilpotent_only, Limits limits = {},
               EnumStrategy strategy = EnumStrategy::Auto);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  int p() const { return p_; }
  bool nilpotent_only() const { return nilpotent_only_; }
  const Limits& limits() const { return limits_; }
  IsoRegistry& registry() { return registry_; }
  const Representation& rep(const std::string& key) const { return registry_.get(key); }
  int summand_count(const std::string& key) { return registry_.summand_count(key); }

  // Keys of every class with this dimension vector, sorted.
  const std::vector<std::string>& classes(const std::vector<int>& dims);
  // Every class of the given total dimension, ordered by (dimension vector, key).
  std::vector<std::string> classes_of_total_dim(int total);
  std::vector<std::string> classes_up_to(int max_total);
  // Simple modules with this dimension vector (registered keys).
  const std::vector<std::string>& simples(const std::vector<int>& dims);

  // Registers m (if it belongs to the context) and returns its key.
  std::string insert(const Representation& m);

 private:
  std::vector<std::string> build_exhaustive(const std::vector<int>& dims);
  std::vector<std::string> build_extension(const std::vector<int>& dims);
  bool uses_exhaustive(const std::vector<int>& dims) const;

  QuiverPtr quiver_;
  int p_;
  bool nilpotent_only_;
  Limits limits_;
  EnumStrategy strategy_;
  IsoRegistry registry_;
  std::map<std::vector<int>, std::vector<std::string>> classes_;
  std::map<std::vector<int>, std::vector<std::string>> simples_;
};

// Exactly one representative per isomorphism class with dimension vector d
// (nilpotent ones only when flagged), in canonical key order.
std::vector<Representation> enumerate_reps(QuiverPtr quiver, const std::vector<int>& dims, int p,
                                           bool nilpotent_only, const Limits& limits = {},
                                           EnumStrategy strategy = EnumStrategy::Auto);

// Every indecomposable class with total dimension in [1, max_total_dim].
std::vector<Representation> enumerate_indecomposables(QuiverPtr quiver, int max_total_dim, int p,
                                                      bool nilpotent_only, const Limits& limits = {});

}  // namespace hallwb
