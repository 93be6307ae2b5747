#include "finsemi/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "finsemi/classes.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/io.hpp"

namespace finsemi {

namespace {

constexpr unsigned kMaxOrder = 5;

void require_config(const EnumerationConfig& config) {
  if (config.order < 1 || config.order > kMaxOrder) {
    throw BoundExceededError("enumeration supports orders 1.."
                             + std::to_string(kMaxOrder) + ", got "
                             + std::to_string(config.order));
  }
  if (config.filter.has_value()) {
    // Rejects unknown flag names up front.
    ClassificationReport probe;
    (void)probe.flag_or_null(*config.filter);
  }
}

// Backtracking fill of the Cayley table in row-major order. A cell value of
// n means "not yet assigned".
class TableSearch {
 public:
  TableSearch(unsigned n, const std::function<bool(const std::vector<element>&)>& emit)
      : n_(n), table_(static_cast<std::size_t>(n) * n, n), emit_(emit) {}

  void run() { fill(0); }
  bool stopped() const { return stopped_; }

 private:
  element at(element i, element j) const {
    return table_[static_cast<std::size_t>(i) * n_ + j];
  }
  void put(element i, element j, element v) {
    table_[static_cast<std::size_t>(i) * n_ + j] = v;
  }
  bool defined(element v) const { return v < n_; }

  // True when the triple is either not fully determined yet or associative.
  bool triple_ok(element x, element y, element z) const {
    const element xy = at(x, y);
    if (!defined(xy)) {
      return true;
    }
    const element yz = at(y, z);
    if (!defined(yz)) {
      return true;
    }
    const element left = at(xy, z);
    const element right = at(x, yz);
    return !defined(left) || !defined(right) || left == right;
  }

  // Checks every triple that the assignment (i, j) may have completed.
  bool consistent_after(element i, element j) const {
    for (element z = 0; z < n_; ++z) {
      if (!triple_ok(i, j, z)) {  // (i, j) as the (x, y) cell
        return false;
      }
      if (!triple_ok(z, i, j)) {  // (i, j) as the (y, z) cell
        return false;
      }
    }
    for (element x = 0; x < n_; ++x) {
      for (element y = 0; y < n_; ++y) {
        if (at(x, y) == i && !triple_ok(x, y, j)) {  // (i, j) as (xy, z)
          return false;
        }
        if (at(x, y) == j && !triple_ok(i, x, y)) {  // (i, j) as (x, yz)
          return false;
        }
      }
    }
    return true;
  }

  void fill(unsigned pos) {
    if (stopped_) {
      return;
    }
    if (pos == table_.size()) {
      if (!emit_(table_)) {
        stopped_ = true;
      }
      return;
    }
    const element i = static_cast<element>(pos / n_);
    const element j = static_cast<element>(pos % n_);
    for (element v = 0; v < n_ && !stopped_; ++v) {
      put(i, j, v);
      if (consistent_after(i, j)) {
        fill(pos + 1);
      }
    }
    put(i, j, n_);
  }

  unsigned n_;
  std::vector<element> table_;
  const std::function<bool(const std::vector<element>&)>& emit_;
  bool stopped_ = false;
};

std::vector<element> relabeled(const std::vector<element>& flat, unsigned n,
                               const std::vector<element>& perm) {
  std::vector<element> out(flat.size());
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[flat[static_cast<std::size_t>(i) * n + j]];
    }
  }
  return out;
}

bool flat_orbit_minimal(const std::vector<element>& flat, unsigned n) {
  std::vector<element> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (relabeled(flat, n, perm) < flat) {
      return false;
    }
  }
  return true;
}

FiniteSemigroup from_flat(const std::vector<element>& flat, unsigned n) {
  std::vector<std::vector<element>> rows(n);
  for (unsigned i = 0; i < n; ++i) {
    rows[i].assign(flat.begin() + static_cast<std::size_t>(i) * n,
                   flat.begin() + static_cast<std::size_t>(i + 1) * n);
  }
  return FiniteSemigroup::from_table(rows);
}

}  // namespace

void for_each_semigroup(const EnumerationConfig& config,
                        const std::function<bool(const FiniteSemigroup&)>& visit) {
  require_config(config);
  const unsigned n = config.order;
  const std::function<bool(const std::vector<element>&)> emit =
      [&](const std::vector<element>& flat) {
        if (config.up_to_iso && !flat_orbit_minimal(flat, n)) {
          return true;
        }
        const FiniteSemigroup S = from_flat(flat, n);
        if (config.filter.has_value() && !classify(S).flag(*config.filter)) {
          return true;
        }
        return visit(S);
      };
  TableSearch search(n, emit);
  search.run();
}

std::vector<FiniteSemigroup> enumerate_semigroups(const EnumerationConfig& config) {
  std::vector<FiniteSemigroup> out;
  for_each_semigroup(config, [&](const FiniteSemigroup& S) {
    out.push_back(S);
    return true;
  });
  return out;
}

std::uint64_t count_semigroups(const EnumerationConfig& config) {
  std::uint64_t count = 0;
  for_each_semigroup(config, [&](const FiniteSemigroup&) {
    ++count;
    return true;
  });
  return count;
}

bool is_orbit_minimal(const FiniteSemigroup& S) {
  std::vector<element> flat;
  flat.reserve(static_cast<std::size_t>(S.order()) * S.order());
  for (element i = 0; i < S.order(); ++i) {
    for (element j = 0; j < S.order(); ++j) {
      flat.push_back(S.product(i, j));
    }
  }
  return flat_orbit_minimal(flat, S.order());
}

std::uint64_t SweepReport::total_failures() const {
  std::uint64_t total = 0;
  for (const auto& [id, entry] : theorems) {
    total += entry.fails;
  }
  return total;
}

void SweepReport::merge(const SweepReport& other) {
  orders.insert(orders.end(), other.orders.begin(), other.orders.end());
  fixtures.insert(fixtures.end(), other.fixtures.begin(), other.fixtures.end());
  semigroup_count += other.semigroup_count;
  for (const auto& [id, entry] : other.theorems) {
    SweepEntry& mine = theorems[id];
    mine.holds += entry.holds;
    mine.vacuous += entry.vacuous;
    mine.fails += entry.fails;
    mine.counterexamples.insert(mine.counterexamples.end(),
                                entry.counterexamples.begin(),
                                entry.counterexamples.end());
    std::sort(mine.counterexamples.begin(), mine.counterexamples.end());
  }
}

namespace {

void require_known_ids(const std::vector<std::string>& theorem_ids) {
  for (const std::string& id : theorem_ids) {
    if (!is_registered_theorem(id)) {
      throw UnknownTheoremError("unknown theorem id: " + id);
    }
  }
}

void record(SweepReport& report, const std::string& label,
            const VerifyContext& ctx, const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    const TheoremReport r = verify(ctx, id);
    SweepEntry& entry = report.theorems[id];
    switch (r.outcome) {
      case Outcome::holds:
        ++entry.holds;
        break;
      case Outcome::vacuous:
        ++entry.vacuous;
        break;
      case Outcome::fails:
        ++entry.fails;
        entry.counterexamples.push_back(
            SweepCounterexample{label, r.witness, r.detail});
        break;
    }
  }
}

void finalize(SweepReport& report, const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    SweepEntry& entry = report.theorems[id];  // materialize zero rows
    std::sort(entry.counterexamples.begin(), entry.counterexamples.end());
  }
}

}  // namespace

SweepReport sweep(const EnumerationConfig& config,
                  const std::vector<std::string>& theorem_ids) {
  require_known_ids(theorem_ids);
  SweepReport report;
  report.orders = {config.order};
  report.up_to_iso = config.up_to_iso;
  report.filter = config.filter;
  for_each_semigroup(config, [&](const FiniteSemigroup& S) {
    ++report.semigroup_count;
    record(report, to_table_text(S), make_context(S), theorem_ids);
    return true;
  });
  finalize(report, theorem_ids);
  return report;
}

SweepReport sweep_orders(const std::vector<unsigned>& orders, bool up_to_iso,
                         const std::vector<std::string>& theorem_ids) {
  SweepReport total;
  total.up_to_iso = up_to_iso;
  for (unsigned order : orders) {
    EnumerationConfig config;
    config.order = order;
    config.up_to_iso = up_to_iso;
    total.merge(sweep(config, theorem_ids));
  }
  return total;
}

SweepReport sweep_semigroups(
    const std::vector<std::pair<std::string, FiniteSemigroup>>& fixtures,
    const std::vector<std::string>& theorem_ids) {
  require_known_ids(theorem_ids);
  SweepReport report;
  for (const auto& [name, S] : fixtures) {
    report.fixtures.push_back(name);
    ++report.semigroup_count;
    record(report, name, make_context(S), theorem_ids);
  }
  finalize(report, theorem_ids);
  return report;
}

std::string to_json_string(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["orders"] = report.orders;
  j["up_to_iso"] = report.up_to_iso;
  if (report.filter.has_value()) {
    j["filter"] = *report.filter;
  } else {
    j["filter"] = nullptr;
  }
  j["fixtures"] = report.fixtures;
  j["semigroup_count"] = report.semigroup_count;
  j["total_failures"] = report.total_failures();
  nlohmann::ordered_json theorems;
  for (const auto& [id, entry] : report.theorems) {
    nlohmann::ordered_json e;
    e["holds"] = entry.holds;
    e["vacuous"] = entry.vacuous;
    e["fails"] = entry.fails;
    nlohmann::ordered_json cxs = nlohmann::ordered_json::array();
    for (const SweepCounterexample& cx : entry.counterexamples) {
      nlohmann::ordered_json one;
      one["semigroup"] = cx.semigroup;
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (const auto& [role, name] : cx.witness) {
        w.push_back(nlohmann::ordered_json::array({role, name}));
      }
      one["witness"] = std::move(w);
      one["detail"] = cx.detail;
      cxs.push_back(std::move(one));
    }
    e["counterexamples"] = std::move(cxs);
    theorems[id] = std::move(e);
  }
  j["theorems"] = std::move(theorems);
  return j.dump(2) + "\n";
}

}  // namespace finsemi
