#include "finsemi/classes.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "finsemi/congruence.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/inverses.hpp"

namespace finsemi {

ElementSet centralizer_of_idempotents(const FiniteSemigroup& S) {
  const ElementSet E = idempotents(S);
  std::vector<element> out;
  for (element x = 0; x < S.order(); ++x) {
    bool central = true;
    for (element e : E) {
      if (S.product(x, e) != S.product(e, x)) {
        central = false;
        break;
      }
    }
    if (central) {
      out.push_back(x);
    }
  }
  return ElementSet(std::move(out), S.order());
}

std::optional<std::pair<element, element>> h_commutative_witness(
    const FiniteSemigroup& S, const GreenData& G, const ElementSet& X) {
  for (element a : X) {
    for (element b : X) {
      if (!G.rel_h(S.product(a, b), S.product(b, a))) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

bool is_h_commutative_set(const FiniteSemigroup& S, const GreenData& G,
                          const ElementSet& X) {
  return !h_commutative_witness(S, G, X).has_value();
}

NagyCommutativity nagy_commutativity(const FiniteSemigroup& S,
                                     const ElementSet& X) {
  if (!is_subsemigroup(S, X)) {
    throw NotClosedError("nagy_commutativity requires a product-closed set");
  }
  NagyCommutativity out{true, true, true};
  for (element a : X) {
    for (element b : X) {
      const element ab = S.product(a, b);
      const element ba = S.product(b, a);
      if (ab != ba) {  // the unit of X^1 settles equal products
        if (out.r_commutative
            && std::none_of(X.begin(), X.end(), [&](element x) {
                 return S.product(ba, x) == ab;
               })) {
          out.r_commutative = false;
        }
        if (out.l_commutative
            && std::none_of(X.begin(), X.end(), [&](element x) {
                 return S.product(x, ba) == ab;
               })) {
          out.l_commutative = false;
        }
        if (out.h_commutative
            && std::none_of(X.begin(), X.end(), [&](element x) {
                 return S.product(S.product(b, x), a) == ab;
               })) {
          out.h_commutative = false;
        }
      }
    }
  }
  return out;
}

const std::vector<std::string>& classification_flag_names() {
  static const std::vector<std::string> names = {
      "regular",         "inverse",          "completely_regular",
      "clifford",        "e_commutative",    "e_semigroup",
      "orthodox",        "solid",            "h_commutative_HS",
      "completely_inverse", "h_orthodox",    "h_inverse_closed",
      "h_cliffordian",   "cryptic",          "combinatorial",
      "fundamental"};
  return names;
}

std::optional<bool> ClassificationReport::flag_or_null(std::string_view name) const {
  if (name == "regular") return regular;
  if (name == "inverse") return inverse;
  if (name == "completely_regular") return completely_regular;
  if (name == "clifford") return clifford;
  if (name == "e_commutative") return e_commutative;
  if (name == "e_semigroup") return e_semigroup;
  if (name == "orthodox") return orthodox;
  if (name == "solid") return solid;
  if (name == "h_commutative_HS") return h_commutative_HS;
  if (name == "completely_inverse") return completely_inverse;
  if (name == "h_orthodox") return h_orthodox;
  if (name == "h_inverse_closed") return h_inverse_closed;
  if (name == "h_cliffordian") return h_cliffordian;
  if (name == "cryptic") return cryptic;
  if (name == "combinatorial") return combinatorial;
  if (name == "fundamental") return fundamental;
  throw PreconditionError("unknown classification flag: " + std::string(name));
}

bool ClassificationReport::flag(std::string_view name) const {
  return flag_or_null(name).value_or(false);
}

namespace {

void require_implication(bool hypothesis, bool conclusion, const char* what) {
  if (hypothesis && !conclusion) {
    throw InternalInconsistencyError(std::string("classification violates: ") + what);
  }
}

void require_iff(bool lhs, bool rhs, const char* what) {
  if (lhs != rhs) {
    throw InternalInconsistencyError(std::string("classification violates: ") + what);
  }
}

}  // namespace

ClassificationReport classify(const FiniteSemigroup& S, const GreenData& G) {
  const unsigned n = S.order();
  ClassificationReport r;
  r.idempotents = idempotents(S);
  r.group_invertible = group_invertible_set(S, G);
  r.centralizer = centralizer_of_idempotents(S);
  auto witness = [&r](const std::string& flag, std::vector<element> tuple) {
    r.counterexamples.emplace(flag, std::move(tuple));
  };

  r.regular = true;
  for (element a = 0; a < n && r.regular; ++a) {
    if (associates(S, a).empty()) {
      r.regular = false;
      witness("regular", {a});
    }
  }

  r.inverse = true;
  for (element a = 0; a < n && r.inverse; ++a) {
    const ElementSet v = inverses_of(S, a);
    if (v.size() != 1) {
      r.inverse = false;
      std::vector<element> tuple = {a};
      for (std::size_t i = 0; i < std::min<std::size_t>(2, v.size()); ++i) {
        tuple.push_back(v.members()[i]);
      }
      witness("inverse", std::move(tuple));
    }
  }

  r.completely_regular = r.group_invertible.size() == n;
  if (!r.completely_regular) {
    for (element a = 0; a < n; ++a) {
      if (!r.group_invertible.contains(a)) {
        witness("completely_regular", {a});
        break;
      }
    }
  }

  r.clifford = r.inverse && r.completely_regular;
  if (!r.clifford) {
    witness("clifford", r.counterexamples.count(r.inverse ? "completely_regular" : "inverse")
                            ? r.counterexamples.at(r.inverse ? "completely_regular" : "inverse")
                            : std::vector<element>{});
  }

  r.e_commutative = true;
  for (element e : r.idempotents) {
    for (element f : r.idempotents) {
      if (S.product(e, f) != S.product(f, e)) {
        r.e_commutative = false;
        witness("e_commutative", {e, f});
        break;
      }
    }
    if (!r.e_commutative) {
      break;
    }
  }

  r.e_semigroup = true;
  for (element e : r.idempotents) {
    for (element f : r.idempotents) {
      if (!r.idempotents.contains(S.product(e, f))) {
        r.e_semigroup = false;
        witness("e_semigroup", {e, f});
        break;
      }
    }
    if (!r.e_semigroup) {
      break;
    }
  }

  r.orthodox = r.regular && r.e_semigroup;
  if (!r.orthodox) {
    witness("orthodox", r.counterexamples.count(r.regular ? "e_semigroup" : "regular")
                            ? r.counterexamples.at(r.regular ? "e_semigroup" : "regular")
                            : std::vector<element>{});
  }

  r.solid = true;
  for (element a : r.group_invertible) {
    for (element b : r.group_invertible) {
      if (!r.group_invertible.contains(S.product(a, b))) {
        r.solid = false;
        witness("solid", {a, b});
        break;
      }
    }
    if (!r.solid) {
      break;
    }
  }

  const std::optional<std::pair<element, element>> hcw =
      h_commutative_witness(S, G, r.group_invertible);
  r.h_commutative_HS = !hcw.has_value();
  r.h_cliffordian = r.h_commutative_HS;
  if (hcw.has_value()) {
    witness("h_commutative_HS", {hcw->first, hcw->second});
    witness("h_cliffordian", {hcw->first, hcw->second});
  }

  r.completely_inverse = r.regular && r.h_commutative_HS;
  if (!r.completely_inverse) {
    witness("completely_inverse",
            r.counterexamples.count(r.regular ? "h_commutative_HS" : "regular")
                ? r.counterexamples.at(r.regular ? "h_commutative_HS" : "regular")
                : std::vector<element>{});
  }

  r.h_orthodox = r.regular;
  if (r.h_orthodox) {
    for (element a = 0; a < n && r.h_orthodox; ++a) {
      for (element b = 0; b < n && r.h_orthodox; ++b) {
        const element ab = S.product(a, b);
        for (element ap = 0; ap < n && r.h_orthodox; ++ap) {
          if (!in_inverses_mod_h(S, G, ap, a)) {
            continue;
          }
          for (element bp = 0; bp < n; ++bp) {
            if (in_inverses_mod_h(S, G, bp, b)
                && !in_inverses_mod_h(S, G, S.product(bp, ap), ab)) {
              r.h_orthodox = false;
              witness("h_orthodox", {a, b, ap, bp});
              break;
            }
          }
        }
      }
    }
  } else {
    witness("h_orthodox", r.counterexamples.count("regular")
                              ? r.counterexamples.at("regular")
                              : std::vector<element>{});
  }

  r.h_inverse_closed = true;
  for (element h : r.group_invertible) {
    for (element x = 0; x < n; ++x) {
      if (in_inverses_mod_h(S, G, x, h) && !r.group_invertible.contains(x)) {
        r.h_inverse_closed = false;
        witness("h_inverse_closed", {h, x});
        break;
      }
    }
    if (!r.h_inverse_closed) {
      break;
    }
  }

  r.cryptic = true;
  for (element a = 0; a < n && r.cryptic; ++a) {
    for (element b = 0; b < n && r.cryptic; ++b) {
      if (!G.rel_h(a, b)) {
        continue;
      }
      for (element c = 0; c < n; ++c) {
        if (!G.rel_h(S.product(c, a), S.product(c, b))
            || !G.rel_h(S.product(a, c), S.product(b, c))) {
          r.cryptic = false;
          witness("cryptic", {a, b, c});
          break;
        }
      }
    }
  }

  r.combinatorial = true;
  for (element a = 0; a < n && r.combinatorial; ++a) {
    for (element b = a + 1; b < n; ++b) {
      if (G.rel_h(a, b)) {
        r.combinatorial = false;
        witness("combinatorial", {a, b});
        break;
      }
    }
  }

  if (r.inverse) {
    const Relation m = mu(S, G);
    r.fundamental = m == Relation::identity(n);
    if (!*r.fundamental) {
      for (element a = 0; a < n && r.counterexamples.count("fundamental") == 0; ++a) {
        for (element b = a + 1; b < n; ++b) {
          if (m.related(a, b)) {
            witness("fundamental", {a, b});
            break;
          }
        }
      }
    }
  }

  require_implication(r.completely_inverse, r.inverse,
                      "completely inverse implies inverse");
  require_iff(r.completely_inverse, r.inverse && r.h_orthodox,
              "completely inverse iff inverse and H-orthodox");
  require_iff(r.completely_inverse, r.inverse && r.cryptic,
              "completely inverse iff inverse and cryptic");
  require_iff(r.solid && r.regular, r.h_orthodox,
              "solid and regular iff H-orthodox");
  require_implication(r.h_orthodox, r.h_inverse_closed,
                      "H-orthodox implies H-inverse-closed");
  require_implication(r.inverse, r.h_inverse_closed,
                      "inverse implies H-inverse-closed");
  require_implication(r.completely_regular, r.h_orthodox,
                      "completely regular implies H-orthodox");
  require_implication(r.inverse, r.orthodox, "inverse implies orthodox");
  return r;
}

ClassificationReport classify(const FiniteSemigroup& S) {
  return classify(S, compute_green(S));
}

namespace {

nlohmann::ordered_json names_of(const ElementSet& set, const FiniteSemigroup& S) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (element a : set) {
    arr.push_back(S.display_name(a));
  }
  return arr;
}

}  // namespace

std::string to_json_string(const ClassificationReport& report,
                           const FiniteSemigroup& S) {
  nlohmann::ordered_json j;
  j["order"] = S.order();
  nlohmann::ordered_json flags;
  for (const std::string& name : classification_flag_names()) {
    const std::optional<bool> value = report.flag_or_null(name);
    if (value.has_value()) {
      flags[name] = *value;
    } else {
      flags[name] = nullptr;
    }
  }
  j["flags"] = std::move(flags);
  nlohmann::ordered_json witnesses;
  witnesses["E"] = names_of(report.idempotents, S);
  witnesses["H"] = names_of(report.group_invertible, S);
  witnesses["Z_E"] = names_of(report.centralizer, S);
  j["witnesses"] = std::move(witnesses);
  nlohmann::ordered_json cx;
  for (const std::string& name : classification_flag_names()) {
    const auto it = report.counterexamples.find(name);
    if (it != report.counterexamples.end()) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (element a : it->second) {
        arr.push_back(S.display_name(a));
      }
      cx[name] = std::move(arr);
    }
  }
  j["counterexamples"] = std::move(cx);
  return j.dump(2) + "\n";
}

std::string to_text(const ClassificationReport& report,
                    const FiniteSemigroup& S) {
  std::ostringstream os;
  os << "order: " << S.order() << "\n";
  auto set_line = [&](const char* label, const ElementSet& set) {
    os << label << ": {";
    bool first = true;
    for (element a : set) {
      if (!first) {
        os << ", ";
      }
      first = false;
      os << S.display_name(a);
    }
    os << "}\n";
  };
  set_line("E(S)", report.idempotents);
  set_line("H(S)", report.group_invertible);
  set_line("Z(E(S))", report.centralizer);
  for (const std::string& name : classification_flag_names()) {
    const std::optional<bool> value = report.flag_or_null(name);
    os << name << ": " << (value.has_value() ? (*value ? "true" : "false") : "null");
    const auto it = report.counterexamples.find(name);
    if (it != report.counterexamples.end() && !it->second.empty()) {
      os << "  [witness:";
      for (element a : it->second) {
        os << ' ' << S.display_name(a);
      }
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace finsemi
