#include "finsemi/semigroup.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "finsemi/errors.hpp"

namespace finsemi {

ElementSet::ElementSet(std::vector<element> members, unsigned parent_order)
    : members_(std::move(members)), parent_order_(parent_order) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= parent_order_) {
    throw PreconditionError("ElementSet member out of range: "
                            + std::to_string(members_.back()) + " >= "
                            + std::to_string(parent_order_));
  }
}

ElementSet ElementSet::full(unsigned parent_order) {
  std::vector<element> all(parent_order);
  for (unsigned i = 0; i < parent_order; ++i) {
    all[i] = i;
  }
  return ElementSet(std::move(all), parent_order);
}

ElementSet ElementSet::from_indicator(const std::vector<bool>& in_set) {
  std::vector<element> members;
  for (unsigned i = 0; i < in_set.size(); ++i) {
    if (in_set[i]) {
      members.push_back(i);
    }
  }
  return ElementSet(std::move(members), static_cast<unsigned>(in_set.size()));
}

bool ElementSet::contains(element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

FiniteSemigroup FiniteSemigroup::from_table(
    const std::vector<std::vector<element>>& rows,
    std::optional<std::vector<std::string>> names) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw MalformedTableError("empty table: the order must be at least 1");
  }
  std::vector<element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw MalformedTableError("table is not square: row " + std::to_string(i)
                                + " has " + std::to_string(rows[i].size())
                                + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) {
        throw MalformedTableError("entry out of range at (" + std::to_string(i)
                                  + ", " + std::to_string(j) + "): "
                                  + std::to_string(rows[i][j]));
      }
      flat.push_back(rows[i][j]);
    }
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      const element ij = flat[static_cast<std::size_t>(i) * n + j];
      for (unsigned k = 0; k < n; ++k) {
        const element jk = flat[static_cast<std::size_t>(j) * n + k];
        if (flat[static_cast<std::size_t>(ij) * n + k]
            != flat[static_cast<std::size_t>(i) * n + jk]) {
          throw NonAssociativeError(i, j, k);
        }
      }
    }
  }
  if (names.has_value()) {
    if (names->size() != n) {
      throw MalformedTableError("names list has " + std::to_string(names->size())
                                + " entries, expected " + std::to_string(n));
    }
    std::set<std::string> distinct;
    for (const std::string& name : *names) {
      if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
        throw MalformedTableError("element names must be nonempty and free of whitespace");
      }
      if (!distinct.insert(name).second) {
        throw MalformedTableError("duplicate element name: " + name);
      }
    }
  }
  return FiniteSemigroup(static_cast<unsigned>(n), std::move(flat), std::move(names));
}

std::string FiniteSemigroup::display_name(element a) const {
  if (names_.has_value()) {
    return (*names_)[a];
  }
  return std::to_string(a);
}

std::vector<std::vector<element>> FiniteSemigroup::table_rows() const {
  std::vector<std::vector<element>> rows(order_);
  for (unsigned i = 0; i < order_; ++i) {
    rows[i].assign(table_.begin() + static_cast<std::size_t>(i) * order_,
                   table_.begin() + static_cast<std::size_t>(i + 1) * order_);
  }
  return rows;
}

std::optional<element> identity_element(const FiniteSemigroup& S) {
  const unsigned n = S.order();
  for (element e = 0; e < n; ++e) {
    bool ok = true;
    for (element x = 0; x < n && ok; ++x) {
      ok = S.product(e, x) == x && S.product(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& S) {
  if (identity_element(S).has_value()) {
    return S;
  }
  const unsigned n = S.order();
  std::vector<std::vector<element>> rows(n + 1, std::vector<element>(n + 1));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      rows[i][j] = S.product(i, j);
    }
    rows[i][n] = i;
    rows[n][i] = i;
  }
  rows[n][n] = n;
  std::optional<std::vector<std::string>> names;
  if (S.has_names()) {
    names = *S.names();
    std::string unit = "1";
    while (std::find(names->begin(), names->end(), unit) != names->end()) {
      unit += "'";
    }
    names->push_back(unit);
  }
  return FiniteSemigroup::from_table(rows, std::move(names));
}

FiniteSemigroup opposite(const FiniteSemigroup& S) {
  const unsigned n = S.order();
  std::vector<std::vector<element>> rows(n, std::vector<element>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      rows[i][j] = S.product(j, i);
    }
  }
  std::optional<std::vector<std::string>> names;
  if (S.has_names()) {
    names = *S.names();
  }
  return FiniteSemigroup::from_table(rows, std::move(names));
}

ElementSet idempotents(const FiniteSemigroup& S) {
  std::vector<element> out;
  for (element e = 0; e < S.order(); ++e) {
    if (S.product(e, e) == e) {
      out.push_back(e);
    }
  }
  return ElementSet(std::move(out), S.order());
}

ElementSet subsemigroup_closure(const FiniteSemigroup& S, const ElementSet& gens) {
  if (gens.empty()) {
    throw PreconditionError("subsemigroup_closure requires a nonempty generating set");
  }
  std::vector<bool> in_set(S.order(), false);
  std::vector<element> work(gens.begin(), gens.end());
  for (element g : work) {
    in_set[g] = true;
  }
  // Each popped element is multiplied against everything known at that time;
  // any pair is covered when its later-discovered member is processed.
  while (!work.empty()) {
    const element x = work.back();
    work.pop_back();
    for (element y = 0; y < S.order(); ++y) {
      if (!in_set[y]) {
        continue;
      }
      for (element p : {S.product(x, y), S.product(y, x)}) {
        if (!in_set[p]) {
          in_set[p] = true;
          work.push_back(p);
        }
      }
    }
  }
  return ElementSet::from_indicator(in_set);
}

bool is_subsemigroup(const FiniteSemigroup& S, const ElementSet& X) {
  for (element a : X) {
    for (element b : X) {
      if (!X.contains(S.product(a, b))) {
        return false;
      }
    }
  }
  return true;
}

FiniteSemigroup restrict_to(const FiniteSemigroup& S, const ElementSet& X) {
  if (X.empty()) {
    throw PreconditionError("cannot restrict to the empty set");
  }
  if (!is_subsemigroup(S, X)) {
    throw NotClosedError("restrict_to requires a product-closed subset");
  }
  const std::vector<element>& mem = X.members();
  std::vector<unsigned> index(S.order(), 0);
  for (unsigned i = 0; i < mem.size(); ++i) {
    index[mem[i]] = i;
  }
  const unsigned m = static_cast<unsigned>(mem.size());
  std::vector<std::vector<element>> rows(m, std::vector<element>(m));
  std::vector<std::string> names(m);
  for (unsigned i = 0; i < m; ++i) {
    names[i] = S.display_name(mem[i]);
    for (unsigned j = 0; j < m; ++j) {
      rows[i][j] = index[S.product(mem[i], mem[j])];
    }
  }
  return FiniteSemigroup::from_table(rows, std::move(names));
}

bool is_group(const FiniteSemigroup& S) {
  const std::optional<element> e = identity_element(S);
  if (!e.has_value()) {
    return false;
  }
  for (element a = 0; a < S.order(); ++a) {
    bool invertible = false;
    for (element b = 0; b < S.order() && !invertible; ++b) {
      invertible = S.product(a, b) == *e && S.product(b, a) == *e;
    }
    if (!invertible) {
      return false;
    }
  }
  return true;
}

}  // namespace finsemi
