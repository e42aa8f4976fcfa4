#include "hallwb/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hallwb/error.hpp"
#include "json.hpp"

namespace hallwb {

Quiver::Quiver(std::string name, std::vector<std::string> vertices,
               const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InputError("duplicate vertex id in quiver '" + name_ + "'");
  std::set<std::string> labels;
  for (const auto& [label, src, tgt] : arrows) {
    if (!labels.insert(label).second) throw InputError("duplicate arrow label '" + label + "'");
    auto s = vertex_index(src);
    auto t = vertex_index(tgt);
    if (!s) throw InputError("arrow '" + label + "': unknown vertex '" + src + "'");
    if (!t) throw InputError("arrow '" + label + "': unknown vertex '" + tgt + "'");
    arrows_.push_back(Arrow{label, *s, *t});
  }
}

std::optional<int> Quiver::vertex_index(std::string_view id) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v] == id) return v;
  }
  return std::nullopt;
}

std::optional<int> Quiver::arrow_index(std::string_view label) const {
  for (int a = 0; a < arrow_count(); ++a) {
    if (arrows_[a].label == label) return a;
  }
  return std::nullopt;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a) {
    if (arrows_[a].source == v) out.push_back(a);
  }
  return out;
}

std::vector<int> Quiver::arrows_to(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a) {
    if (arrows_[a].target == v) out.push_back(a);
  }
  return out;
}

bool Quiver::has_oriented_cycle() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<int> indeg(vertex_count(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 0; v < vertex_count(); ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (const auto& a : arrows_) {
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
  }
  return removed != vertex_count();
}

int Quiver::max_loops_at_vertex() const {
  std::vector<int> loops(vertex_count(), 0);
  for (const auto& a : arrows_) {
    if (a.source == a.target) ++loops[a.source];
  }
  return loops.empty() ? 0 : *std::max_element(loops.begin(), loops.end());
}

// ---------------------------------------------------------------------------
// DSL

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  std::string ident(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < line_.size() && is_ident_char(line_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(line_.substr(start, pos_ - start));
  }

  void expect(std::string_view token) {
    skip_space();
    if (line_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_no_, column(), message); }

 private:
  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Quiver parse_quiver(std::string_view text) {
  std::optional<std::string> name;
  std::vector<std::string> vertices;
  std::set<std::string> vertex_set;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::set<std::string> labels;

  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner scan(line, line_no);
    if (scan.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    int keyword_col = scan.column();
    std::string keyword = scan.ident("a directive");
    if (keyword == "quiver") {
      if (name) throw ParseError(line_no, keyword_col, "duplicate quiver header");
      name = scan.ident("quiver name");
    } else if (!name) {
      throw ParseError(line_no, keyword_col, "expected 'quiver <name>' before '" + keyword + "'");
    } else if (keyword == "vertex") {
      do {
        int col = scan.column();
        std::string id = scan.ident("vertex id");
        if (!vertex_set.insert(id).second) throw ParseError(line_no, col, "duplicate vertex '" + id + "'");
        vertices.push_back(id);
      } while (!scan.at_end());
    } else if (keyword == "arrow") {
      scan.skip_space();
      int label_col = scan.column();
      std::string label = scan.ident("arrow label");
      scan.expect(":");
      scan.skip_space();
      int src_col = scan.column();
      std::string src = scan.ident("source vertex");
      scan.expect("->");
      scan.skip_space();
      int tgt_col = scan.column();
      std::string tgt = scan.ident("target vertex");
      if (!scan.at_end()) scan.fail("unexpected trailing input");
      if (!labels.insert(label).second) throw ParseError(line_no, label_col, "duplicate arrow label '" + label + "'");
      if (!vertex_set.count(src)) throw ParseError(line_no, src_col, "unknown vertex '" + src + "'");
      if (!vertex_set.count(tgt)) throw ParseError(line_no, tgt_col, "unknown vertex '" + tgt + "'");
      arrows.emplace_back(label, src, tgt);
      continue;
    } else {
      throw ParseError(line_no, keyword_col, "unknown directive '" + keyword + "'");
    }
    if (!scan.at_end()) scan.fail("unexpected trailing input");
    if (end == text.size()) break;
  }
  if (!name) throw ParseError(1, 1, "missing 'quiver <name>' header");
  return Quiver(*name, vertices, arrows);
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open quiver file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_quiver(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message() + " (in " + path + ")");
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::tuple<std::string, std::string, std::string>> arrow_tuples(const Quiver& q, bool reversed) {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& a : q.arrows()) {
    const auto& s = q.vertex_id(a.source);
    const auto& t = q.vertex_id(a.target);
    if (reversed) {
      out.emplace_back(a.label, t, s);
    } else {
      out.emplace_back(a.label, s, t);
    }
  }
  return out;
}

}  // namespace

Quiver opposite(const Quiver& q) {
  // "^op" toggles so that opposite(opposite(q)) == q
  const std::string& n = q.name();
  const bool has_op = n.size() > 3 && n.compare(n.size() - 3, 3, "^op") == 0;
  return Quiver(has_op ? n.substr(0, n.size() - 3) : n + "^op", q.vertices(), arrow_tuples(q, true));
}

Quiver full_subquiver(const Quiver& q, const std::vector<int>& vertices, std::string name) {
  std::vector<std::string> ids;
  for (int v : vertices) ids.push_back(q.vertex_id(v));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : q.arrows()) {
    bool keep = std::find(vertices.begin(), vertices.end(), a.source) != vertices.end() &&
                std::find(vertices.begin(), vertices.end(), a.target) != vertices.end();
    if (keep) arrows.emplace_back(a.label, q.vertex_id(a.source), q.vertex_id(a.target));
  }
  return Quiver(std::move(name), ids, arrows);
}

std::vector<Quiver> connected_components(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : q.arrows()) {
    int x = find(a.source);
    int y = find(a.target);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<Quiver> out;
  int k = 0;
  for (const auto& [root, members] : groups) {
    out.push_back(full_subquiver(q, members, q.name() + "." + std::to_string(k++)));
  }
  return out;
}

std::string to_json_string(const Quiver& q) {
  nlohmann::json j;
  j["name"] = q.name();
  j["vertices"] = q.vertices();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) {
    j["arrows"].push_back({{"label", a.label}, {"src", q.vertex_id(a.source)}, {"tgt", q.vertex_id(a.target)}});
  }
  return j.dump();
}

Quiver quiver_from_json_string(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const auto& a : j.at("arrows")) {
      arrows.emplace_back(a.at("label").get<std::string>(), a.at("src").get<std::string>(),
                          a.at("tgt").get<std::string>());
    }
    return Quiver(j.at("name").get<std::string>(), j.at("vertices").get<std::vector<std::string>>(), arrows);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("quiver JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Shapes

bool Shape::same_shape(const Shape& other) const {
  if (kind != other.kind || size != other.size) return false;
  if (kind == ShapeKind::V || kind == ShapeKind::Lambda) {
    return position == other.position || position == size + 1 - other.position;
  }
  return true;
}

std::string Shape::to_string() const {
  switch (kind) {
    case ShapeKind::L:
      return "L_" + std::to_string(size);
    case ShapeKind::Delta:
      return "Δ_" + std::to_string(size);
    case ShapeKind::V:
      return "V_{" + std::to_string(size) + "," + std::to_string(position) + "}";
    case ShapeKind::Lambda:
      return "Λ_{" + std::to_string(size) + "," + std::to_string(position) + "}";
    case ShapeKind::Other:
      break;
  }
  return "Other(" + reason + ")";
}

Shape classify_shape(const Quiver& c) {
  const int n = c.vertex_count();
  const int m = c.arrow_count();
  if (n == 0 || connected_components(c).size() != 1) {
    throw InputError("classify_shape: quiver '" + c.name() + "' is not connected");
  }
  auto other = [](std::string why) { return Shape{ShapeKind::Other, 0, 0, std::move(why)}; };

  std::vector<int> indeg(n, 0), outdeg(n, 0), degree(n, 0);
  int loops = 0;
  for (const auto& a : c.arrows()) {
    ++outdeg[a.source];
    ++indeg[a.target];
    ++degree[a.source];
    ++degree[a.target];
    if (a.source == a.target) ++loops;
  }
  if (n == 1) {
    if (m == 0) return Shape{ShapeKind::L, 1, 0, {}};
    if (m == 1) return Shape{ShapeKind::Delta, 0, 0, {}};
    return other("several loops at one vertex");
  }
  if (m == n && std::all_of(indeg.begin(), indeg.end(), [](int d) { return d == 1; }) &&
      std::all_of(outdeg.begin(), outdeg.end(), [](int d) { return d == 1; })) {
    return Shape{ShapeKind::Delta, n - 1, 0, {}};
  }
  if (loops > 0) return other("loop at a vertex with neighbours");
  std::set<std::pair<int, int>> edges;
  for (const auto& a : c.arrows()) {
    if (!edges.insert({std::min(a.source, a.target), std::max(a.source, a.target)}).second) {
      return other("two arrows between the same pair of vertices");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] >= 3) return other("branch vertex " + c.vertex_id(v));
  }
  if (m != n - 1) return other("non-oriented cycle in the underlying graph");

  // Simple path: walk from the first-declared endpoint.
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v) {
    if (degree[v] == 1) start = v;
  }
  std::vector<int> dirs;  // +1 if the arrow points along the walk
  std::vector<bool> used(m, false);
  int cur = start;
  for (int step = 0; step < n - 1; ++step) {
    for (int a = 0; a < m; ++a) {
      if (used[a]) continue;
      const auto& arr = c.arrow(a);
      if (arr.source == cur) {
        used[a] = true;
        dirs.push_back(+1);
        cur = arr.target;
        break;
      }
      if (arr.target == cur) {
        used[a] = true;
        dirs.push_back(-1);
        cur = arr.source;
        break;
      }
    }
  }
  int changes = 0;
  int change_at = 0;
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    if (dirs[i] != dirs[i - 1]) {
      ++changes;
      change_at = static_cast<int>(i) + 1;  // 1-based position of the turning vertex
    }
  }
  if (changes == 0) return Shape{ShapeKind::L, n, 0, {}};
  if (changes == 1) {
    if (dirs.front() == +1) return Shape{ShapeKind::V, n, change_at, {}};
    return Shape{ShapeKind::Lambda, n, change_at, {}};
  }
  return other("≥2 sinks and ≥2 sources");
}

std::string ShapeVerdict::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < components.size(); ++i) out << (i ? " ⊔ " : "") << components[i].to_string();
  if (components.empty()) out << "∅";
  out << "; ideal_all_r=" << (ideal_all_r ? "true" : "false") << "; subring_r1=" << (subring_r1 ? "true" : "false")
      << "; subring_all_r=" << (subring_all_r ? "true" : "false");
  return out.str();
}

ShapeVerdict predict(const Quiver& q) {
  ShapeVerdict v;
  bool all_ld = true, all_ldvl = true, all_ldv = true, all_ldl = true;
  for (const auto& comp : connected_components(q)) {
    Shape s = classify_shape(comp);
    bool ld = s.kind == ShapeKind::L || s.kind == ShapeKind::Delta;
    all_ld = all_ld && ld;
    all_ldvl = all_ldvl && (ld || s.kind == ShapeKind::V || s.kind == ShapeKind::Lambda);
    all_ldv = all_ldv && (ld || s.kind == ShapeKind::V);
    all_ldl = all_ldl && (ld || s.kind == ShapeKind::Lambda);
    v.components.push_back(std::move(s));
  }
  v.ideal_all_r = all_ld;
  v.subring_r1 = all_ldvl;
  v.subring_all_r = all_ldv || all_ldl;
  return v;
}

}  // namespace hallwb
