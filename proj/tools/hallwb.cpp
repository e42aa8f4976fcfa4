// hallwb: command-line front end.
//
// Exit codes: 0 success / PASS, 1 audit FAIL (or a failed construction check),
// 2 input error, 3 capacity exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hallwb/audit.hpp"
#include "hallwb/decompose.hpp"
#include "hallwb/enumerate.hpp"
#include "hallwb/error.hpp"
#include "hallwb/hall.hpp"
#include "hallwb/json_io.hpp"
#include "hallwb/loewy.hpp"
#include "hallwb/quiver.hpp"
#include "hallwb/registry.hpp"

using namespace hallwb;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct RunConfig {
  int p = 0;  // 0: take it from the inputs (default 2)
  bool nilpotent = false;
  bool json = false;
  bool timing = false;
  std::string out;
  int threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;
  Limits limits;

  int prime() const { return p == 0 ? 2 : p; }
};

void emit(const RunConfig& cfg, const std::string& text, const Json& j) {
  std::string payload = cfg.json ? j.dump(2) + "\n" : text;
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write '" + cfg.out + "'");
  f << payload;
}

QuiverPtr read_quiver(const std::string& path) { return std::make_shared<const Quiver>(load_quiver(path)); }

Representation read_module(const std::string& path, const QuiverPtr& q, const RunConfig& cfg) {
  Representation m = load_representation(path, q);
  if (cfg.p != 0 && m.p() != cfg.p) {
    throw MismatchError(path + ": module is over F_" + std::to_string(m.p()) + " but --q " + std::to_string(cfg.p) +
                        " was given");
  }
  return m;
}

int default_bound(const Quiver& q) { return q.max_loops_at_vertex() >= 2 ? 4 : 5; }

// "  a=[[..]] b=[[..]]", or nothing on a quiver without arrows.
std::string maps_line(const Representation& m) {
  std::ostringstream os;
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    os << (k ? " " : "  ") << m.quiver().arrow(k).label << "=" << m.map(k).to_string();
  }
  return os.str();
}

// --- subcommands -----------------------------------------------------------

int cmd_classify(const RunConfig& cfg, const std::string& path) {
  auto q = read_quiver(path);
  const auto verdict = predict(*q);
  Json comps = Json::array();
  auto parts = connected_components(*q);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    comps.push_back({{"name", parts[i].name()}, {"shape", verdict.components[i].to_string()}});
  }
  Json j = {{"quiver", q->name()},
            {"components", comps},
            {"ideal_all_r", verdict.ideal_all_r},
            {"subring_r1", verdict.subring_r1},
            {"subring_all_r", verdict.subring_all_r}};
  emit(cfg, verdict.to_string() + "\n", j);
  return kExitPass;
}

int cmd_product(const RunConfig& cfg, const std::string& qpath, const std::string& apath, const std::string& bpath,
                bool twisted) {
  auto q = read_quiver(qpath);
  auto a = read_module(apath, q, cfg);
  auto b = read_module(bpath, q, cfg);
  check_compatible(a, b);
  if (cfg.nilpotent && !(is_nilpotent(a) && is_nilpotent(b))) {
    throw InputError("--nilpotent given but a factor is not nilpotent");
  }
  IsoRegistry registry(cfg.limits);
  HallElement e = twisted ? twisted_product(a, b, registry, cfg.nilpotent) : hall_product(a, b, registry, cfg.nilpotent);
  emit(cfg, e.to_string(), e.to_json());
  return kExitPass;
}

int cmd_check(const RunConfig& cfg, const std::string& path, const std::string& mode, int r, int max_dim,
              const std::string& strategy) {
  auto q = read_quiver(path);
  AuditOptions o;
  o.r = r;
  o.p = cfg.prime();
  o.max_total_dim = max_dim > 0 ? max_dim : default_bound(*q);
  o.mode = parse_audit_mode(mode);
  o.nilpotent = cfg.nilpotent;
  o.limits = cfg.limits;
  o.strategy = strategy == "exhaustive" ? EnumStrategy::Exhaustive
               : strategy == "extension" ? EnumStrategy::Extension
                                         : EnumStrategy::Auto;
  const auto report = audit(q, o);
  std::string text = report.to_text();
  if (cfg.timing) text += "elapsed " + std::to_string(report.elapsed_seconds) + " s\n";
  emit(cfg, text, report.to_json(cfg.timing));
  return report.pass ? kExitPass : kExitFail;
}

int cmd_decompose(const RunConfig& cfg, const std::string& qpath, const std::string& mpath) {
  auto q = read_quiver(qpath);
  auto m = read_module(mpath, q, cfg);
  const auto d = decompose(m, cfg.limits);
  std::ostringstream os;
  os << "s = " << d.s << "\n";
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    os << "  " << s.multiplicity << " x dim " << s.module.dims_string() << maps_line(s.module) << "\n";
    summands.push_back({{"multiplicity", s.multiplicity}, {"module", to_json(s.module)}});
  }
  emit(cfg, os.str(), {{"s", d.s}, {"summands", summands}});
  return kExitPass;
}

int cmd_invariants(const RunConfig& cfg, const std::string& qpath, const std::string& mpath) {
  auto q = read_quiver(qpath);
  auto m = read_module(mpath, q, cfg);
  const bool nil = is_nilpotent(m);
  const int end_dim = hom_dim(m, m);
  const int s = decompose(m, cfg.limits).s;
  std::ostringstream os;
  Json j = {{"dims", m.dims()},
            {"total_dim", m.total_dim()},
            {"nilpotent", nil},
            {"end_dim", end_dim},
            {"s", s},
            {"key", canonical_key(m)}};
  os << "dim " << m.dims_string() << "\nnilpotent: " << (nil ? "yes" : "no") << "\nEnd dim = " << end_dim
     << "\ns = " << s << "\n";
  if (nil || !q->has_oriented_cycle()) {
    const auto loewy = loewy_data(m);
    const auto layers = radical_layer_dims(m);
    j["radical_dims"] = loewy.radical.module.dims();
    j["socle_dims"] = loewy.socle.module.dims();
    j["top_dims"] = loewy.top.dims();
    j["radical_layers"] = layers;
    j["uniserial"] = is_uniserial(m);
    os << "radical dims " << loewy.radical.module.dims_string() << "\nsocle dims " << loewy.socle.module.dims_string()
       << "\ntop dims " << loewy.top.dims_string() << "\nuniserial: " << (is_uniserial(m) ? "yes" : "no") << "\n";
  } else {
    os << "radical/socle: not available for a non-nilpotent module on a cyclic quiver\n";
  }
  os << "key " << canonical_key(m) << "\n";
  emit(cfg, os.str(), j);
  return kExitPass;
}

std::vector<int> parse_dims(const std::string& text, int vertices) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int d = std::stoi(item, &used);
      if (used != item.size() || d < 0) throw std::invalid_argument(item);
      dims.push_back(d);
    } catch (const std::logic_error&) {
      throw InputError("bad dimension vector '" + text + "'");
    }
  }
  if (static_cast<int>(dims.size()) != vertices) {
    throw InputError("dimension vector '" + text + "' needs " + std::to_string(vertices) + " entries");
  }
  return dims;
}

int cmd_enumerate(const RunConfig& cfg, const std::string& path, int total, const std::string& dims_text,
                  bool indecomposable) {
  auto q = read_quiver(path);
  ClassCatalog catalog(q, cfg.prime(), cfg.nilpotent, cfg.limits);
  std::vector<std::string> keys;
  if (!dims_text.empty()) {
    keys = catalog.classes(parse_dims(dims_text, q->vertex_count()));
  } else {
    if (total < 1) throw InputError("give --dim N (N >= 1) or --dims d1,d2,...");
    keys = catalog.classes_of_total_dim(total);
  }
  std::ostringstream body;
  Json classes = Json::array();
  int count = 0;
  for (const auto& key : keys) {
    const int s = catalog.summand_count(key);
    if (indecomposable && s != 1) continue;
    ++count;
    const auto& m = catalog.rep(key);
    body << "  dim " << m.dims_string() << " s=" << s << maps_line(m) << "\n";
    classes.push_back({{"key", key}, {"s", s}, {"module", to_json(m)}});
  }
  std::ostringstream os;
  os << count << (count == 1 ? " class" : " classes") << "\n" << body.str();
  emit(cfg, os.str(), {{"quiver", q->name()}, {"p", cfg.prime()}, {"nilpotent", cfg.nilpotent}, {"count", count},
                       {"classes", classes}});
  return kExitPass;
}

int cmd_certify(const RunConfig& cfg, const std::string& id) {
  const auto result = certify_construction(id, cfg.limits);
  emit(cfg, result.to_text(), result.to_json());
  return kExitPass;
}

int cmd_survey(const RunConfig& cfg, const std::string& path, int max_dim) {
  auto q = read_quiver(path);
  const auto report = survey_conditions(q, cfg.prime(), max_dim > 0 ? max_dim : default_bound(*q), cfg.nilpotent,
                                        cfg.limits);
  emit(cfg, report.to_text(), report.to_json());
  return kExitPass;
}

int cmd_tachikawa(const RunConfig& cfg, const std::string& path, int max_dim) {
  auto q = read_quiver(path);
  const auto report = tachikawa_check(q, cfg.prime(), max_dim, cfg.limits);
  emit(cfg, report.to_text(), report.to_json());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebra workbench: quiver representations over F_p, Hall products, D_r audits"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--q,--p", cfg.p, "field size p (2, 3, 5 or 7); default 2")->check(CLI::IsMember({2, 3, 5, 7}));
  app.add_flag("--nilpotent", cfg.nilpotent, "restrict to nilpotent representations");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--out", cfg.out, "write output to FILE");
  app.add_option("--threads", cfg.threads, "worker threads (engines currently run sequentially)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized isomorphism search phases");
  app.add_option("--cap", cfg.cap, "enumeration cap (overrides HALL_AUDIT_CAP)")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "include elapsed time in reports");

  std::string qpath, apath, bpath, mode = "subring", strategy = "auto", dims, id;
  int r = 1, max_dim = 0, total = 0;
  bool twisted = false, indecomposable = false;

  auto* classify = app.add_subcommand("classify", "shape of each component and the predicted D_r behaviour");
  classify->add_option("quiver", qpath)->required();

  auto* product = app.add_subcommand("product", "Hall product of two modules");
  product->add_option("quiver", qpath)->required();
  product->add_option("a", apath, "first factor (module JSON)")->required();
  product->add_option("b", bpath, "second factor (module JSON)")->required();
  product->add_flag("--twisted", twisted, "multiply by v^<a,b>");

  auto* check = app.add_subcommand("check", "bounded audit of D_r");
  check->add_option("quiver", qpath)->required();
  check->add_option("--mode", mode, "subring, ideal, left-ideal or right-ideal")
      ->check(CLI::IsMember({"subring", "ideal", "left-ideal", "right-ideal"}));
  check->add_option("--r", r, "level r >= 1")->check(CLI::PositiveNumber);
  check->add_option("--max-dim", max_dim, "bound on dim M + dim N (default 5, or 4 with a double loop)")
      ->check(CLI::PositiveNumber);
  check->add_option("--strategy", strategy, "class enumeration: auto, exhaustive or extension")
      ->check(CLI::IsMember({"auto", "exhaustive", "extension"}));

  auto* decomp = app.add_subcommand("decompose", "Krull-Schmidt decomposition of a module");
  decomp->add_option("quiver", qpath)->required();
  decomp->add_option("module", apath)->required();

  auto* invariants = app.add_subcommand("invariants", "Loewy data, nilpotency and End dimension of a module");
  invariants->add_option("quiver", qpath)->required();
  invariants->add_option("module", apath)->required();

  auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes of a given dimension");
  enumerate->add_option("quiver", qpath)->required();
  auto* dim_opt = enumerate->add_option("--dim", total, "total dimension")->check(CLI::PositiveNumber);
  enumerate->add_option("--dims", dims, "dimension vector, comma separated")->excludes(dim_opt);
  enumerate->add_flag("--indecomposable", indecomposable, "indecomposables only");

  auto* certify = app.add_subcommand("certify", "rebuild one of the explicit constructions (2.1, 2.3-2.7)");
  certify->add_option("id", id)->required();

  auto* survey = app.add_subcommand("survey", "simple socle / simple top conditions on indecomposables");
  survey->add_option("quiver", qpath)->required();
  survey->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);

  auto* tachikawa = app.add_subcommand("tachikawa", "Tachikawa's criterion on an acyclic quiver");
  tachikawa->add_option("quiver", qpath)->required();
  tachikawa->add_option("--max-dim", max_dim, "also cross-check by survey and audit up to this bound")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    cfg.limits = Limits::from_env();
    if (cfg.cap > 0) cfg.limits.enum_cap = cfg.limits.end_scan_cap = cfg.cap;
    if (app.count("--seed") > 0) cfg.limits.seed = cfg.seed;

    if (*classify) return cmd_classify(cfg, qpath);
    if (*product) return cmd_product(cfg, qpath, apath, bpath, twisted);
    if (*check) return cmd_check(cfg, qpath, mode, r, max_dim, strategy);
    if (*decomp) return cmd_decompose(cfg, qpath, apath);
    if (*invariants) return cmd_invariants(cfg, qpath, apath);
    if (*enumerate) return cmd_enumerate(cfg, qpath, total, dims, indecomposable);
    if (*certify) return cmd_certify(cfg, id);
    if (*survey) return cmd_survey(cfg, qpath, max_dim);
    if (*tachikawa) return cmd_tachikawa(cfg, qpath, max_dim);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
