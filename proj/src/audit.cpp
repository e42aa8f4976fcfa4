#include "hallwb/audit.hpp"

#include <chrono>
#include <sstream>

#include "hallwb/decompose.hpp"
#include "hallwb/error.hpp"

namespace hallwb {

std::string to_string(AuditMode mode) {
  switch (mode) {
    case AuditMode::Subring:
      return "subring";
    case AuditMode::LeftIdeal:
      return "left-ideal";
    case AuditMode::RightIdeal:
      return "right-ideal";
    case AuditMode::Ideal:
      return "ideal";
  }
  return "?";
}

AuditMode parse_audit_mode(const std::string& text) {
  for (auto mode : {AuditMode::Subring, AuditMode::LeftIdeal, AuditMode::RightIdeal, AuditMode::Ideal}) {
    if (to_string(mode) == text) return mode;
  }
  throw InputError("unknown mode '" + text + "' (expected subring, left-ideal, right-ideal or ideal)");
}

bool in_D_r(const Representation& m, int r, const Limits& limits) { return decompose(m, limits).s >= r + 1; }

namespace {

bool m_needs_D_r(AuditMode mode) { return mode == AuditMode::Subring || mode == AuditMode::RightIdeal; }
bool n_needs_D_r(AuditMode mode) { return mode == AuditMode::Subring || mode == AuditMode::LeftIdeal; }

std::string maps_text(const Representation& m) {
  std::ostringstream os;
  for (int k = 0; k < m.quiver().arrow_count(); ++k) {
    os << (k == 0 ? "" : " ") << m.quiver().arrow(k).label << "=" << m.map(k).to_string();
  }
  return os.str();
}

Json module_entry(const std::string& key, int s, const Representation& m) {
  return {{"key", key}, {"s", s}, {"module", to_json(m)}};
}

}  // namespace

// ---------------------------------------------------------------------------

Json Certificate::to_json() const {
  Json term = module_entry(x_key, s_x, x);
  term["hall_number"] = hall_number;
  return {{"r", r},
          {"mode", hallwb::to_string(mode)},
          {"nilpotent", nilpotent},
          {"p", m.p()},
          {"quiver", quiver_to_json(quiver())},
          {"factors", {{"M", module_entry(m_key, s_m, m)}, {"N", module_entry(n_key, s_n, n)}}},
          {"term", term}};
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "certificate: " << hallwb::to_string(mode) << ", r=" << r << ", p=" << m.p() << ", quiver "
     << quiver().name() << (nilpotent ? " (nilpotent)" : "") << "\n";
  os << "  M dim " << m.dims_string() << " s=" << s_m << "  " << maps_text(m) << "\n";
  os << "  N dim " << n.dims_string() << " s=" << s_n << "  " << maps_text(n) << "\n";
  os << "  X dim " << x.dims_string() << " s=" << s_x << "  " << maps_text(x) << "\n";
  os << "  F^X_{M,N} = " << hall_number << "\n";
  return os.str();
}

Certificate certificate_from_json(const Json& j, QuiverPtr quiver) {
  try {
    Certificate c;
    c.r = j.at("r").get<int>();
    c.mode = parse_audit_mode(j.at("mode").get<std::string>());
    c.nilpotent = j.at("nilpotent").get<bool>();
    const auto& f = j.at("factors");
    c.m = representation_from_json(f.at("M").at("module"), quiver);
    c.n = representation_from_json(f.at("N").at("module"), quiver);
    c.x = representation_from_json(j.at("term").at("module"), quiver);
    c.m_key = f.at("M").at("key").get<std::string>();
    c.n_key = f.at("N").at("key").get<std::string>();
    c.x_key = j.at("term").at("key").get<std::string>();
    c.s_m = f.at("M").at("s").get<int>();
    c.s_n = f.at("N").at("s").get<int>();
    c.s_x = j.at("term").at("s").get<int>();
    c.hall_number = j.at("term").at("hall_number").get<std::uint64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

ReplayResult replay(const Certificate& c, bool twisted, const Limits& limits) {
  ReplayResult out;
  IsoRegistry registry(limits);
  const HallElement product = twisted ? twisted_product(c.m, c.n, registry, c.nilpotent)
                                      : hall_product(c.m, c.n, registry, c.nilpotent);
  const auto key = registry.find(c.x);
  if (!key || product.coefficient(*key).is_zero()) {
    out.detail = "X is not in the support of the recomputed product";
    return out;
  }
  out.coefficient = product.coefficient(*key);
  LaurentPoly expected = LaurentPoly::monomial(static_cast<long long>(c.hall_number), twisted ? euler_form(c.m, c.n) : 0);
  if (out.coefficient != expected) {
    out.detail = "coefficient " + out.coefficient.to_string() + " differs from " + expected.to_string();
    return out;
  }
  const int s_m = decompose(c.m, limits).s;
  const int s_n = decompose(c.n, limits).s;
  const int s_x = decompose(c.x, limits).s;
  if (s_m != c.s_m || s_n != c.s_n || s_x != c.s_x) {
    out.detail = "summand counts differ from the recorded ones";
    return out;
  }
  if ((m_needs_D_r(c.mode) && s_m < c.r + 1) || (n_needs_D_r(c.mode) && s_n < c.r + 1)) {
    out.detail = "factors do not satisfy the membership required by the mode";
    return out;
  }
  if (s_x > c.r) {
    out.detail = "X lies in D_r";
    return out;
  }
  out.ok = true;
  out.detail = "ok";
  return out;
}

Certificate dual_certificate(const Certificate& c, QuiverPtr opposite_quiver, const Limits& limits) {
  Certificate d;
  d.r = c.r;
  d.nilpotent = c.nilpotent;
  d.mode = c.mode == AuditMode::LeftIdeal    ? AuditMode::RightIdeal
           : c.mode == AuditMode::RightIdeal ? AuditMode::LeftIdeal
                                             : c.mode;
  d.m = dual(c.n, opposite_quiver);
  d.n = dual(c.m, opposite_quiver);
  d.x = dual(c.x, opposite_quiver);
  d.m_key = canonical_key(d.m);
  d.n_key = canonical_key(d.n);
  d.x_key = canonical_key(d.x);
  d.s_m = decompose(d.m, limits).s;
  d.s_n = decompose(d.n, limits).s;
  d.s_x = decompose(d.x, limits).s;
  d.hall_number = hall_number(d.x, d.m, d.n, limits);
  return d;
}

// ---------------------------------------------------------------------------

Json AuditReport::to_json(bool timing) const {
  Json j = {{"quiver", quiver},
            {"p", options.p},
            {"r", options.r},
            {"mode", hallwb::to_string(options.mode)},
            {"max_total_dim", options.max_total_dim},
            {"nilpotent", options.nilpotent},
            {"verdict", pass ? "PASS" : "FAIL"},
            {"pairs_checked", pairs_checked},
            {"terms_checked", terms_checked},
            {"classes_registered", classes_enumerated}};
  j["certificate"] = certificate ? certificate->to_json() : Json(nullptr);
  if (timing) j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << quiver << ": " << hallwb::to_string(options.mode) << " r=" << options.r << " p=" << options.p
     << " bound=" << options.max_total_dim << (options.nilpotent ? " nilpotent" : "") << " -> "
     << (pass ? "PASS up to bound" : "FAIL") << " (" << pairs_checked << " pairs, " << terms_checked
     << " terms)\n";
  if (certificate) os << certificate->to_text();
  return os.str();
}

namespace {

// One-sided audit; `mode` is not Ideal.
void audit_one_sided(ClassCatalog& catalog, const AuditOptions& options, AuditMode mode, AuditReport& report) {
  const int r = options.r;
  const int min_m = m_needs_D_r(mode) ? r + 1 : 1;
  const int min_n = n_needs_D_r(mode) ? r + 1 : 1;
  IsoRegistry& registry = catalog.registry();
  for (int t = min_m + min_n; t <= options.max_total_dim; ++t) {
    for (int a = min_m; a <= t - min_n; ++a) {
      const auto ms = catalog.classes_of_total_dim(a);
      const auto ns = catalog.classes_of_total_dim(t - a);
      for (const auto& mk : ms) {
        const int s_m = catalog.summand_count(mk);
        if (m_needs_D_r(mode) && s_m < r + 1) continue;
        for (const auto& nk : ns) {
          const int s_n = catalog.summand_count(nk);
          if (n_needs_D_r(mode) && s_n < r + 1) continue;
          ++report.pairs_checked;
          const Representation m = catalog.rep(mk);
          const Representation n = catalog.rep(nk);
          for (const auto& xk : middle_terms(m, n, registry)) {
            ++report.terms_checked;
            const int s_x = registry.summand_count(xk);
            if (s_x > r) continue;
            Certificate c;
            c.r = r;
            c.mode = mode;
            c.nilpotent = options.nilpotent;
            c.m = m;
            c.n = n;
            c.x = registry.get(xk);
            c.m_key = mk;
            c.n_key = nk;
            c.x_key = xk;
            c.s_m = s_m;
            c.s_n = s_n;
            c.s_x = s_x;
            c.hall_number = hall_number(c.x, m, n, options.limits);
            report.pass = false;
            report.certificate = std::move(c);
            return;
          }
        }
      }
    }
  }
}

}  // namespace

AuditReport audit(QuiverPtr quiver, const AuditOptions& options) {
  if (options.r < 1) throw InputError("r must be at least 1");
  if (options.max_total_dim < 1) throw InputError("dimension bound must be positive");
  const auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.quiver = quiver->name();
  report.options = options;
  ClassCatalog catalog(quiver, options.p, options.nilpotent, options.limits, options.strategy);
  try {
    if (options.mode == AuditMode::Ideal) {
      audit_one_sided(catalog, options, AuditMode::LeftIdeal, report);
      if (report.pass) audit_one_sided(catalog, options, AuditMode::RightIdeal, report);
    } else {
      audit_one_sided(catalog, options, options.mode, report);
    }
  } catch (const CapacityError& e) {
    throw CapacityError(std::string(e.what()) + " (after " + std::to_string(report.pairs_checked) + " pairs, " +
                        std::to_string(report.terms_checked) + " terms)");
  }
  report.classes_enumerated = catalog.registry().size();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hallwb
