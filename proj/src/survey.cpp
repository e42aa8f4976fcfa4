#include <sstream>

#include "hallwb/audit.hpp"
#include "hallwb/decompose.hpp"
#include "hallwb/error.hpp"
#include "hallwb/loewy.hpp"

namespace hallwb {

namespace {

int total(const SubspaceTuple& u) {
  int t = 0;
  for (const auto& s : u) t += s.dim();
  return t;
}

void record(ConditionVerdict& v, bool ok, const Representation& m) {
  if (!ok && v.holds) {
    v.holds = false;
    v.witness = m;
  }
}

Json verdict_json(const ConditionVerdict& v) {
  return {{"holds", v.holds}, {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

std::string verdict_text(const std::string& label, const ConditionVerdict& v) {
  std::ostringstream os;
  os << label << ": " << (v.holds ? "holds up to bound" : "fails");
  if (v.witness) {
    os << " (witness dim " << v.witness->dims_string();
    for (int k = 0; k < v.witness->quiver().arrow_count(); ++k) {
      os << " " << v.witness->quiver().arrow(k).label << "=" << v.witness->map(k).to_string();
    }
    os << ")";
  }
  os << "\n";
  return os.str();
}

bool all_uniserial(const DecompositionReport& d) {
  for (const auto& s : d.summands) {
    if (!is_uniserial(s.module)) return false;
  }
  return true;
}

}  // namespace

SurveyReport survey_conditions(QuiverPtr quiver, int p, int max_total_dim, bool nilpotent, const Limits& limits) {
  if (quiver->has_oriented_cycle() && !nilpotent) {
    throw UnsupportedError("socle and top surveys need an acyclic quiver or the nilpotent flag");
  }
  SurveyReport report;
  report.quiver = quiver->name();
  report.p = p;
  report.max_total_dim = max_total_dim;
  report.nilpotent = nilpotent;
  ClassCatalog catalog(quiver, p, nilpotent, limits);
  for (const auto& key : catalog.classes_up_to(max_total_dim)) {
    if (catalog.summand_count(key) != 1) continue;
    ++report.indecomposables;
    const Representation& m = catalog.rep(key);
    const bool simple_socle = total(socle_spaces(m)) == 1;
    const bool simple_top = m.total_dim() - total(radical_spaces(m)) == 1;
    record(report.simple_socle, simple_socle, m);
    record(report.simple_top, simple_top, m);
    record(report.simple_top_or_socle, simple_socle || simple_top, m);
  }
  return report;
}

Json SurveyReport::to_json() const {
  return {{"quiver", quiver},
          {"p", p},
          {"max_total_dim", max_total_dim},
          {"nilpotent", nilpotent},
          {"indecomposables", indecomposables},
          {"I", verdict_json(simple_socle)},
          {"I'", verdict_json(simple_top)},
          {"II", verdict_json(simple_top_or_socle)}};
}

std::string SurveyReport::to_text() const {
  std::ostringstream os;
  os << quiver << ": " << indecomposables << " indecomposables up to dim " << max_total_dim << "\n";
  os << verdict_text("(I) simple socle", simple_socle);
  os << verdict_text("(I') simple top", simple_top);
  os << verdict_text("(II) simple top or socle", simple_top_or_socle);
  return os.str();
}

TachikawaReport tachikawa_check(QuiverPtr quiver, int p, int max_total_dim, const Limits& limits) {
  if (quiver->has_oriented_cycle()) throw UnsupportedError("the Tachikawa criterion is checked on acyclic quivers only");
  const Quiver& q = *quiver;
  TachikawaReport report;
  report.quiver = q.name();
  std::vector<ProjectiveInjective> pi;
  for (int i = 0; i < q.vertex_count(); ++i) pi.push_back(proj_inj(quiver, p, i));

  for (int i = 0; i < q.vertex_count(); ++i) {
    const std::string v = q.vertex_id(i);
    const Representation& proj = pi[i].projective;
    const Representation& inj = pi[i].injective;

    // condition 1
    const auto rad = decompose(loewy_data(proj).radical.module, limits);
    if (rad.s > 2 || !all_uniserial(rad)) {
      report.condition1 = false;
      report.witnesses.push_back("rad P(" + v + ") has " + std::to_string(rad.s) + " summands" +
                                 (all_uniserial(rad) ? "" : ", not all uniserial"));
    }
    const auto inj_loewy = loewy_data(inj);
    const auto cosoc = decompose(quotient_by(inj, inj_loewy.socle.spaces), limits);
    if (cosoc.s > 2 || !all_uniserial(cosoc)) {
      report.condition1 = false;
      report.witnesses.push_back("I(" + v + ")/soc has " + std::to_string(cosoc.s) + " summands" +
                                 (all_uniserial(cosoc) ? "" : ", not all uniserial"));
    }

    // condition 2
    const auto soc = socle_spaces(proj);
    if (total(soc) >= 2) {
      for (int j = 0; j < q.vertex_count(); ++j) {
        if (soc[j].dim() > 0 && !is_uniserial(pi[j].injective)) {
          report.condition2 = false;
          report.witnesses.push_back("soc P(" + v + ") is decomposable and I(" + q.vertex_id(j) +
                                     ") is not uniserial");
        }
      }
    }
    const Representation& top = inj_loewy.top;
    if (top.total_dim() >= 2) {
      for (int j = 0; j < q.vertex_count(); ++j) {
        if (top.dim(j) > 0 && !is_uniserial(pi[j].projective)) {
          report.condition2 = false;
          report.witnesses.push_back("top I(" + v + ") is decomposable and P(" + q.vertex_id(j) +
                                     ") is not uniserial");
        }
      }
    }
  }

  if (max_total_dim > 0) {
    report.survey_ii = survey_conditions(quiver, p, max_total_dim, false, limits).simple_top_or_socle.holds;
    AuditOptions options;
    options.r = 1;
    options.p = p;
    options.max_total_dim = max_total_dim;
    options.mode = AuditMode::Subring;
    options.limits = limits;
    report.audit_r1 = audit(quiver, options).pass;
  }
  return report;
}

Json TachikawaReport::to_json() const {
  Json j = {{"quiver", quiver},
            {"condition1", condition1},
            {"condition2", condition2},
            {"pass", pass()},
            {"witnesses", witnesses}};
  j["survey_II"] = survey_ii ? Json(*survey_ii) : Json(nullptr);
  j["audit_subring_r1"] = audit_r1 ? Json(*audit_r1) : Json(nullptr);
  return j;
}

std::string TachikawaReport::to_text() const {
  std::ostringstream os;
  os << quiver << ": Tachikawa criterion " << (pass() ? "holds" : "fails") << " (condition 1 "
     << (condition1 ? "ok" : "fails") << ", condition 2 " << (condition2 ? "ok" : "fails") << ")\n";
  for (const auto& w : witnesses) os << "  " << w << "\n";
  if (survey_ii) os << "  survey (II) up to bound: " << (*survey_ii ? "holds" : "fails") << "\n";
  if (audit_r1) os << "  subring audit r=1 up to bound: " << (*audit_r1 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace hallwb
