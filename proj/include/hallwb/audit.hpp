#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallwb/enumerate.hpp"
#include "hallwb/hall.hpp"
#include "hallwb/json_io.hpp"
#include "hallwb/limits.hpp"
#include "hallwb/representation.hpp"

namespace hallwb {

enum class AuditMode { Subring, LeftIdeal, RightIdeal, Ideal };

std::string to_string(AuditMode mode);  // "subring", "left-ideal", ...
AuditMode parse_audit_mode(const std::string& text);

// s(m) >= r + 1.
bool in_D_r(const Representation& m, int r, const Limits& limits = {});

// A product term X of [M] ⋄ [N] with s(X) <= r although the factors satisfy
// the membership required by the mode (subring: both in D_r; left ideal: N
// in D_r; right ideal: M in D_r).
struct Certificate {
  int r = 1;
  AuditMode mode = AuditMode::Subring;
  bool nilpotent = false;
  Representation m, n, x;
  std::string m_key, n_key, x_key;
  int s_m = 0, s_n = 0, s_x = 0;
  std::uint64_t hall_number = 0;

  const Quiver& quiver() const { return m.quiver(); }
  Json to_json() const;
  std::string to_text() const;
};

Certificate certificate_from_json(const Json& j, QuiverPtr quiver);

struct ReplayResult {
  bool ok = false;
  std::string detail;
  LaurentPoly coefficient;  // coefficient of [X] in the recomputed product
};

// Recomputes the product (twisted or not) and checks the certificate claims.
ReplayResult replay(const Certificate& c, bool twisted = false, const Limits& limits = {});

// Over Q^op: D X is an extension of D N by D M, so (M, N, X) becomes
// (D N, D M, D X) and left and right ideals swap.
Certificate dual_certificate(const Certificate& c, QuiverPtr opposite_quiver, const Limits& limits = {});

struct AuditOptions {
  int r = 1;
  int p = 2;
  int max_total_dim = 5;
  AuditMode mode = AuditMode::Subring;
  bool nilpotent = false;
  Limits limits;
  EnumStrategy strategy = EnumStrategy::Auto;
};

struct AuditReport {
  std::string quiver;
  AuditOptions options;
  bool pass = true;
  std::optional<Certificate> certificate;
  std::uint64_t pairs_checked = 0;
  std::uint64_t terms_checked = 0;
  std::uint64_t classes_enumerated = 0;
  double elapsed_seconds = 0;

  Json to_json(bool timing = false) const;
  std::string to_text() const;
};

// Pairs are visited by dim M + dim N, then dim M, then catalogue order of M
// and N; the first violation is reported. Ideal mode runs the left-ideal
// audit, then the right-ideal one. Capacity errors carry partial counts.
AuditReport audit(QuiverPtr quiver, const AuditOptions& options);

// ---------------------------------------------------------------------------

struct ConstructionResult {
  std::string id;
  Certificate certificate;
  std::vector<std::pair<std::string, std::string>> facts;  // label, value
  Json to_json() const;
  std::string to_text() const;
};

// The explicit constructions for ids 2.1, 2.3, 2.4, 2.5, 2.6 and 2.7 (p = 2).
// Every stated fact is recomputed; a mismatch throws Error.
ConstructionResult certify_construction(const std::string& id, const Limits& limits = {});
const std::vector<std::string>& construction_ids();

struct ConditionVerdict {
  bool holds = true;
  std::optional<Representation> witness;
};

struct SurveyReport {
  std::string quiver;
  int p = 2;
  int max_total_dim = 0;
  bool nilpotent = false;
  int indecomposables = 0;
  ConditionVerdict simple_socle;          // (I)
  ConditionVerdict simple_top;            // (I')
  ConditionVerdict simple_top_or_socle;   // (II)
  Json to_json() const;
  std::string to_text() const;
};

SurveyReport survey_conditions(QuiverPtr quiver, int p, int max_total_dim, bool nilpotent,
                               const Limits& limits = {});

struct TachikawaReport {
  std::string quiver;
  bool condition1 = true;
  bool condition2 = true;
  std::vector<std::string> witnesses;
  // Filled in when a positive bound is given.
  std::optional<bool> survey_ii;
  std::optional<bool> audit_r1;
  bool pass() const { return condition1 && condition2; }
  Json to_json() const;
  std::string to_text() const;
};

// (1) rad P(i) is a sum of at most two uniserials, dually for I(i)/soc I(i);
// (2) a decomposable soc P(i) has uniserial injective envelopes, dually for
// top I(i) and projective covers. The quiver must be acyclic.
TachikawaReport tachikawa_check(QuiverPtr quiver, int p, int max_total_dim = 0, const Limits& limits = {});

}  // namespace hallwb
