#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace hallwb {

struct Arrow {
  std::string label;
  int source = 0;  // vertex index
  int target = 0;  // vertex index

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A finite quiver. Vertices are identified by their declaration index;
// loops and parallel arrows are allowed.
class Quiver {
 public:
  Quiver() = default;
  // Arrows are given as (label, source id, target id). Throws InputError on
  // duplicate vertices/labels or unknown endpoints.
  Quiver(std::string name, std::vector<std::string> vertices,
         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  const std::string& name() const { return name_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  std::optional<int> vertex_index(std::string_view id) const;
  std::optional<int> arrow_index(std::string_view label) const;

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_to(int v) const;
  bool has_oriented_cycle() const;
  // Largest number of loops at a single vertex.
  int max_loops_at_vertex() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Line-oriented DSL:
//   quiver <name>
//   vertex <id> <id> ...
//   arrow <label>: <src> -> <tgt>
//   # comment
// Throws ParseError with 1-based line/column on malformed input.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);

// Same vertices and labels, every arrow reversed. The name gains (or loses)
// a "^op" suffix.
Quiver opposite(const Quiver& q);

// Components of the underlying graph, ordered by smallest vertex index. Each
// component keeps the original ids and labels and is named "<name>.<k>".
std::vector<Quiver> connected_components(const Quiver& q);

// Full subquiver on the given vertex indices (sorted), keeping every arrow
// whose endpoints both survive.
Quiver full_subquiver(const Quiver& q, const std::vector<int>& vertices, std::string name);

std::string to_json_string(const Quiver& q);
Quiver quiver_from_json_string(std::string_view text);

// ---------------------------------------------------------------------------
// Shape classification of connected quivers.

enum class ShapeKind { L, Delta, V, Lambda, Other };

struct Shape {
  ShapeKind kind = ShapeKind::Other;
  int size = 0;      // m for L/V, n for Delta/Lambda
  int position = 0;  // x for V, y for Lambda; measured from the first-declared path end
  std::string reason;

  // V(m,x) and V(m,m+1-x) name the same quiver up to relabeling (same for
  // Lambda); compare with this rather than field-by-field.
  bool same_shape(const Shape& other) const;
  std::string to_string() const;
};

// Throws InputError if the quiver is not connected.
Shape classify_shape(const Quiver& component);

struct ShapeVerdict {
  std::vector<Shape> components;
  bool ideal_all_r = true;    // D_r ideal for all r
  bool subring_r1 = true;     // D_1 subring
  bool subring_all_r = true;  // D_r subring for all r

  std::string to_string() const;
};

ShapeVerdict predict(const Quiver& q);

}  // namespace hallwb
