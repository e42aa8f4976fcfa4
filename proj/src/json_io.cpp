#include "hallwb/json_io.hpp"

#include <fstream>

#include "hallwb/error.hpp"
#include "hallwb/field.hpp"

namespace hallwb {

Json to_json(const Representation& m) {
  Json j;
  j["quiver"] = m.quiver().name();
  j["p"] = m.p();
  j["dims"] = Json::object();
  for (int v = 0; v < m.quiver().vertex_count(); ++v) j["dims"][m.quiver().vertex_id(v)] = m.dim(v);
  j["maps"] = Json::object();
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    Json rows = Json::array();
    const auto& mat = m.map(k);
    for (int r = 0; r < mat.rows(); ++r) rows.push_back(mat.row(r));
    j["maps"][m.quiver().arrow(k).label] = rows;
  }
  return j;
}

Representation representation_from_json(const Json& j, QuiverPtr quiver) {
  try {
    if (j.at("quiver").get<std::string>() != quiver->name()) {
      throw InputError("module is over quiver '" + j.at("quiver").get<std::string>() + "', expected '" +
                       quiver->name() + "'");
    }
    int p = j.at("p").get<int>();
    if (!is_supported_prime(p)) throw InputError("unsupported prime " + std::to_string(p));
    const auto& jd = j.at("dims");
    std::vector<int> dims(quiver->vertex_count(), 0);
    for (const auto& [id, d] : jd.items()) {
      auto v = quiver->vertex_index(id);
      if (!v) throw InputError("dims: unknown vertex '" + id + "'");
      dims[*v] = d.get<int>();
      if (dims[*v] < 0) throw InputError("dims: negative dimension at '" + id + "'");
    }
    const auto& jm = j.contains("maps") ? j.at("maps") : Json::object();
    for (const auto& [label, rows] : jm.items()) {
      if (!quiver->arrow_index(label)) throw InputError("maps: unknown arrow '" + label + "'");
    }
    std::vector<Matrix> maps;
    for (const auto& a : quiver->arrows()) {
      const int r = dims[a.target];
      const int c = dims[a.source];
      Matrix mat(r, c, p);
      if (jm.contains(a.label)) {
        const auto& rows = jm.at(a.label);
        if (!rows.is_array() || static_cast<int>(rows.size()) != r) {
          throw InputError("maps: arrow '" + a.label + "' needs " + std::to_string(r) + " rows");
        }
        for (int i = 0; i < r; ++i) {
          if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c) {
            throw InputError("maps: arrow '" + a.label + "' row " + std::to_string(i) + " needs " +
                             std::to_string(c) + " entries");
          }
          for (int k = 0; k < c; ++k) {
            int x = rows[i][k].get<int>();
            if (x < 0 || x >= p) throw InputError("maps: entry out of range [0,p) in arrow '" + a.label + "'");
            mat.set(i, k, x);
          }
        }
      } else if (r * c != 0) {
        throw InputError("maps: missing matrix for arrow '" + a.label + "'");
      }
      maps.push_back(std::move(mat));
    }
    return Representation(std::move(quiver), p, dims, maps);
  } catch (const Json::exception& e) {
    throw InputError(std::string("representation JSON: ") + e.what());
  }
}

Representation load_representation(const std::string& path, QuiverPtr quiver) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open module file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return representation_from_json(j, std::move(quiver));
}

Json quiver_to_json(const Quiver& q) { return Json::parse(to_json_string(q)); }

}  // namespace hallwb
