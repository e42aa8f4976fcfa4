#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hallwb/decompose.hpp"
#include "hallwb/limits.hpp"
#include "hallwb/representation.hpp"

namespace hallwb {

// Isomorphism invariants, cheapest first: dimension vector, ranks of every
// path word of length <= 3, ranks of combinations of parallel arrows, ranks of
// (loop - λ)^k, Loewy-formula radical/socle dimensions, dim End.
std::string invariant_signature(const Representation& m);

// "<dims>:<invariant hash>:<representative bytes in hex>"
std::string canonical_key(const Representation& m);

// One representative per isomorphism class. Keys are canonical keys of the
// first representative registered for the class; later isomorphic inserts map
// to it.
class IsoRegistry {
 public:
  explicit IsoRegistry(Limits limits = {}) : limits_(limits) {}

  std::string insert(const Representation& m);
  std::optional<std::string> find(const Representation& m) const;
  bool contains(const std::string& key) const { return classes_.count(key) != 0; }
  const Representation& get(const std::string& key) const;
  std::size_t size() const { return classes_.size(); }
  const std::vector<std::string>& insertion_log() const { return log_; }
  const Limits& limits() const { return limits_; }

  // Cached Krull–Schmidt decomposition of a registered class.
  const DecompositionReport& decomposition(const std::string& key);
  int summand_count(const std::string& key) { return decomposition(key).s; }

 private:
  std::optional<std::string> lookup(const Representation& m, const std::string& signature) const;

  Limits limits_;
  std::map<std::string, Representation> classes_;
  std::unordered_map<std::string, std::vector<std::string>> buckets_;  // signature -> keys
  std::unordered_map<std::string, std::string> exact_;                 // bytes -> key
  std::map<std::string, DecompositionReport> decompositions_;
  std::vector<std::string> log_;
};

}  // namespace hallwb
