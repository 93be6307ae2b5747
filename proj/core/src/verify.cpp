#include "finsemi/verify.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "finsemi/errors.hpp"
#include "verify_internal.hpp"

namespace finsemi {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds:
      return "holds";
    case Outcome::vacuous:
      return "vacuous";
    case Outcome::fails:
      return "fails";
  }
  return "unknown";
}

VerifyContext make_context(const FiniteSemigroup& S) {
  VerifyContext ctx{S,  GreenData{}, ElementSet{}, ElementSet{},
                    {}, {},          {},           ClassificationReport{}};
  ctx.green = compute_green(S);
  ctx.idempotent_set = idempotents(S);
  ctx.group_invertible = group_invertible_set(S, ctx.green);
  ctx.sharp.reserve(S.order());
  ctx.inverse_sets.reserve(S.order());
  ctx.associate_sets.reserve(S.order());
  for (element a = 0; a < S.order(); ++a) {
    ctx.sharp.push_back(group_inverse(S, ctx.green, a));
    ctx.inverse_sets.push_back(inverses_of(S, a));
    ctx.associate_sets.push_back(associates(S, a));
  }
  ctx.classification = classify(S, ctx.green);
  return ctx;
}

namespace {

const detail::CheckerEntry& entry_of(const std::string& theorem_id) {
  for (const detail::CheckerEntry& entry : detail::checker_registry()) {
    if (theorem_id == entry.id) {
      return entry;
    }
  }
  throw UnknownTheoremError("unknown theorem id: " + theorem_id);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const detail::CheckerEntry& entry : detail::checker_registry()) {
      out.push_back(entry.id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return ids;
}

bool is_registered_theorem(const std::string& theorem_id) {
  const std::vector<std::string>& ids = theorem_ids();
  return std::binary_search(ids.begin(), ids.end(), theorem_id);
}

const std::string& theorem_summary(const std::string& theorem_id) {
  static const std::map<std::string, std::string> summaries = [] {
    std::map<std::string, std::string> out;
    for (const detail::CheckerEntry& entry : detail::checker_registry()) {
      out.emplace(entry.id, entry.summary);
    }
    return out;
  }();
  const auto it = summaries.find(theorem_id);
  if (it == summaries.end()) {
    throw UnknownTheoremError("unknown theorem id: " + theorem_id);
  }
  return it->second;
}

TheoremReport verify(const VerifyContext& ctx, const std::string& theorem_id) {
  const detail::CheckerEntry& entry = entry_of(theorem_id);
  TheoremReport report = entry.fn(ctx);
  report.theorem_id = entry.id;
  return report;
}

TheoremReport verify(const FiniteSemigroup& S, const std::string& theorem_id) {
  return verify(make_context(S), theorem_id);
}

std::vector<TheoremReport> verify_all(const VerifyContext& ctx) {
  std::vector<TheoremReport> out;
  out.reserve(theorem_ids().size());
  for (const std::string& theorem_id : theorem_ids()) {
    out.push_back(verify(ctx, theorem_id));
  }
  return out;
}

std::vector<TheoremReport> verify_all(const FiniteSemigroup& S) {
  return verify_all(make_context(S));
}

namespace {

nlohmann::ordered_json report_json(const TheoremReport& report) {
  nlohmann::ordered_json j;
  j["theorem_id"] = report.theorem_id;
  j["outcome"] = to_string(report.outcome);
  j["holds"] = report.holds();
  if (report.witness.empty()) {
    j["witness"] = nullptr;
  } else {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& [role, name] : report.witness) {
      w.push_back(nlohmann::ordered_json::array({role, name}));
    }
    j["witness"] = std::move(w);
  }
  j["detail"] = report.detail;
  return j;
}

}  // namespace

std::string to_json_string(const TheoremReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string to_json_string(const std::vector<TheoremReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TheoremReport& report : reports) {
    arr.push_back(report_json(report));
  }
  return arr.dump(2) + "\n";
}

}  // namespace finsemi
