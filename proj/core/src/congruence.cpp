#include "finsemi/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "finsemi/classes.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/inverses.hpp"

namespace finsemi {

namespace {

std::vector<unsigned> normalize_ids(const std::vector<unsigned>& raw) {
  std::vector<unsigned> out(raw.size());
  std::map<unsigned, unsigned> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = seen.emplace(raw[i], static_cast<unsigned>(seen.size()));
    out[i] = it->second;
  }
  return out;
}

// Union-find with path halving.
class UnionFind {
 public:
  explicit UnionFind(unsigned n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  unsigned find(unsigned x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool merge(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<unsigned> ids() {
    std::vector<unsigned> out(parent_.size());
    for (unsigned i = 0; i < parent_.size(); ++i) {
      out[i] = find(i);
    }
    return out;
  }

 private:
  std::vector<unsigned> parent_;
};

void close_under_translations(const FiniteSemigroup& S, UnionFind& uf,
                              std::vector<std::pair<element, element>> work) {
  const unsigned n = S.order();
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (uf.find(x) == uf.find(y)) {
      continue;
    }
    // Collect both classes before merging, then push translated pairs.
    std::vector<element> cx, cy;
    for (element u = 0; u < n; ++u) {
      if (uf.find(u) == uf.find(x)) {
        cx.push_back(u);
      } else if (uf.find(u) == uf.find(y)) {
        cy.push_back(u);
      }
    }
    uf.merge(x, y);
    for (element u : cx) {
      for (element v : cy) {
        for (element c = 0; c < n; ++c) {
          work.emplace_back(S.product(c, u), S.product(c, v));
          work.emplace_back(S.product(u, c), S.product(v, c));
        }
      }
    }
  }
}

}  // namespace

Relation Relation::from_class_ids(std::vector<unsigned> class_id) {
  Relation rel;
  rel.class_id_ = normalize_ids(class_id);
  return rel;
}

Relation Relation::from_pair_matrix(const std::vector<std::vector<bool>>& related) {
  const std::size_t n = related.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (related[a].size() != n || !related[a][a]) {
      throw PreconditionError("relation matrix must be square and reflexive");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (related[a][b] != related[b][a]) {
        throw PreconditionError("relation matrix must be symmetric");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (related[a][b] && related[b][c] && !related[a][c]) {
          throw PreconditionError("relation matrix must be transitive");
        }
      }
    }
  }
  std::vector<unsigned> ids(n, 0);
  std::vector<bool> assigned(n, false);
  unsigned next = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) {
      continue;
    }
    for (std::size_t b = a; b < n; ++b) {
      if (related[a][b]) {
        ids[b] = next;
        assigned[b] = true;
      }
    }
    ++next;
  }
  return from_class_ids(std::move(ids));
}

Relation Relation::identity(unsigned order) {
  std::vector<unsigned> ids(order);
  std::iota(ids.begin(), ids.end(), 0u);
  return from_class_ids(std::move(ids));
}

Relation Relation::universal(unsigned order) {
  return from_class_ids(std::vector<unsigned>(order, 0));
}

std::size_t Relation::block_count() const {
  return class_id_.empty()
             ? 0
             : 1 + *std::max_element(class_id_.begin(), class_id_.end());
}

std::vector<std::vector<element>> Relation::blocks() const {
  std::vector<std::vector<element>> out(block_count());
  for (element a = 0; a < class_id_.size(); ++a) {
    out[class_id_[a]].push_back(a);
  }
  return out;
}

bool Relation::refines(const Relation& coarser) const {
  for (element a = 0; a < order(); ++a) {
    for (element b = a + 1; b < order(); ++b) {
      if (related(a, b) && !coarser.related(a, b)) {
        return false;
      }
    }
  }
  return true;
}

Relation h_relation(const GreenData& G) {
  return Relation::from_class_ids(G.classH);
}

std::string to_text(const Relation& rel, const FiniteSemigroup& S) {
  std::ostringstream os;
  bool first_block = true;
  for (const std::vector<element>& block : rel.blocks()) {
    if (!first_block) {
      os << ' ';
    }
    first_block = false;
    os << '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        os << ',';
      }
      os << S.display_name(block[i]);
    }
    os << '}';
  }
  return os.str();
}

bool is_congruence(const FiniteSemigroup& S, const Relation& rel) {
  if (rel.order() != S.order()) {
    throw PreconditionError("relation order does not match the semigroup");
  }
  const unsigned n = S.order();
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (!rel.related(a, b)) {
        continue;
      }
      for (element c = 0; c < n; ++c) {
        if (!rel.related(S.product(c, a), S.product(c, b))
            || !rel.related(S.product(a, c), S.product(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_cryptic(const FiniteSemigroup& S, const GreenData& G) {
  return is_congruence(S, h_relation(G));
}

FiniteSemigroup quotient(const FiniteSemigroup& S, const Relation& rel) {
  if (!is_congruence(S, rel)) {
    throw NotACongruenceError("quotient requires a congruence");
  }
  const std::vector<std::vector<element>> blocks = rel.blocks();
  const unsigned m = static_cast<unsigned>(blocks.size());
  std::vector<unsigned> block_index(S.order());
  for (unsigned i = 0; i < m; ++i) {
    for (element a : blocks[i]) {
      block_index[a] = i;
    }
  }
  std::vector<std::vector<element>> rows(m, std::vector<element>(m));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      const unsigned target = block_index[S.product(blocks[i][0], blocks[j][0])];
      for (element x : blocks[i]) {
        for (element y : blocks[j]) {
          if (block_index[S.product(x, y)] != target) {
            throw InternalInconsistencyError(
                "quotient product is not well defined despite the congruence check");
          }
        }
      }
      rows[i][j] = target;
    }
  }
  std::vector<std::string> names(m);
  for (unsigned i = 0; i < m; ++i) {
    std::string name = "{";
    for (std::size_t k = 0; k < blocks[i].size(); ++k) {
      if (k > 0) {
        name += ',';
      }
      name += S.display_name(blocks[i][k]);
    }
    name += '}';
    names[i] = std::move(name);
  }
  // from_table re-checks associativity of the quotient.
  return FiniteSemigroup::from_table(rows, std::move(names));
}

std::vector<element> unique_inverses(const FiniteSemigroup& S) {
  std::vector<element> inv(S.order());
  for (element a = 0; a < S.order(); ++a) {
    std::optional<element> only;
    for (element x = 0; x < S.order(); ++x) {
      if (S.product(S.product(a, x), a) == a
          && S.product(S.product(x, a), x) == x) {
        if (only.has_value()) {
          throw NotInverseError("element " + S.display_name(a)
                                + " has more than one inverse");
        }
        only = x;
      }
    }
    if (!only.has_value()) {
      throw NotInverseError("element " + S.display_name(a) + " has no inverse");
    }
    inv[a] = *only;
  }
  return inv;
}

Relation mu_conjugation_form(const FiniteSemigroup& S, const GreenData& G) {
  const std::vector<element> inv = unique_inverses(S);
  const ElementSet E = idempotents(S);
  const unsigned n = S.order();
  // Signature of a: the tuple of H-classes of a^{-1} e a over e in E(S).
  std::vector<std::vector<unsigned>> sig(n);
  for (element a = 0; a < n; ++a) {
    sig[a].reserve(E.size());
    for (element e : E) {
      sig[a].push_back(G.classH[S.product(S.product(inv[a], e), a)]);
    }
  }
  std::vector<unsigned> ids(n, 0);
  std::map<std::vector<unsigned>, unsigned> seen;
  for (element a = 0; a < n; ++a) {
    auto [it, inserted] = seen.emplace(sig[a], static_cast<unsigned>(seen.size()));
    ids[a] = it->second;
  }
  return Relation::from_class_ids(std::move(ids));
}

Relation mu_kernel_form(const FiniteSemigroup& S, const GreenData& G) {
  const std::vector<element> inv = unique_inverses(S);
  const ElementSet Z = centralizer_of_idempotents(S);
  const unsigned n = S.order();
  std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      related[a][b] = S.product(inv[a], a) == S.product(inv[b], b)
                      && Z.contains(S.product(a, inv[b]));
    }
  }
  (void)G;
  return Relation::from_pair_matrix(related);
}

Relation mu(const FiniteSemigroup& S, const GreenData& G) {
  const Relation conj = mu_conjugation_form(S, G);
  if (conj != mu_kernel_form(S, G)) {
    throw InternalInconsistencyError("the two forms of mu disagree");
  }
  return conj;
}

Relation mu(const FiniteSemigroup& S) { return mu(S, compute_green(S)); }

Relation nu(const FiniteSemigroup& S, const GreenData& G) {
  const std::vector<element> inv = unique_inverses(S);
  const ElementSet hs = group_invertible_set(S, G);
  const unsigned n = S.order();
  std::vector<std::vector<unsigned>> sig(n);
  for (element a = 0; a < n; ++a) {
    sig[a].reserve(hs.size());
    for (element h : hs) {
      sig[a].push_back(G.classH[S.product(S.product(inv[a], h), a)]);
    }
  }
  std::vector<unsigned> ids(n, 0);
  std::map<std::vector<unsigned>, unsigned> seen;
  for (element a = 0; a < n; ++a) {
    auto [it, inserted] = seen.emplace(sig[a], static_cast<unsigned>(seen.size()));
    ids[a] = it->second;
  }
  return Relation::from_class_ids(std::move(ids));
}

bool kernel_check(const FiniteSemigroup& S, const KernelCandidate& K) {
  const std::vector<element> inv = unique_inverses(S);
  const ElementSet& members = K.members;
  if (!is_subsemigroup(S, members)) {
    return false;
  }
  for (element k : members) {
    if (!members.contains(inv[k])) {
      return false;
    }
  }
  for (element a = 0; a < S.order(); ++a) {
    for (element k : members) {
      if (!members.contains(S.product(S.product(inv[a], k), a))) {
        return false;
      }
    }
  }
  return idempotents(S).subset_of(members)
         && members.subset_of(centralizer_of_idempotents(S));
}

Relation rho_k(const FiniteSemigroup& S, const GreenData& G,
               const KernelCandidate& K) {
  if (!kernel_check(S, K)) {
    throw NotAKernelError("rho_k requires a valid Kernel");
  }
  const std::vector<element> inv = unique_inverses(S);
  const unsigned n = S.order();
  std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      related[a][b] = S.product(inv[a], a) == S.product(inv[b], b)
                      && K.members.contains(S.product(a, inv[b]));
    }
  }
  const Relation rel = Relation::from_pair_matrix(related);
  // Kernel congruences separate idempotents, equivalently sit inside H.
  if (!is_congruence(S, rel) || !rel.refines(h_relation(G))) {
    throw InternalInconsistencyError("rho_k is not an idempotent-separating congruence");
  }
  for (element e : idempotents(S)) {
    for (element f : idempotents(S)) {
      if (e != f && rel.related(e, f)) {
        throw InternalInconsistencyError("rho_k identifies distinct idempotents");
      }
    }
  }
  return rel;
}

Relation rho_k(const FiniteSemigroup& S, const KernelCandidate& K) {
  return rho_k(S, compute_green(S), K);
}

Relation principal_congruence(const FiniteSemigroup& S, element a, element b) {
  UnionFind uf(S.order());
  close_under_translations(S, uf, {{a, b}});
  return Relation::from_class_ids(uf.ids());
}

Relation max_congruence_in_h_oracle(const FiniteSemigroup& S,
                                    const GreenData& G, unsigned bound) {
  if (S.order() > bound) {
    throw BoundExceededError("max_congruence_in_h_oracle is limited to order "
                             + std::to_string(bound));
  }
  const Relation H = h_relation(G);
  UnionFind join(S.order());
  for (element a = 0; a < S.order(); ++a) {
    for (element b = a + 1; b < S.order(); ++b) {
      if (!H.related(a, b)) {
        continue;
      }
      const Relation pc = principal_congruence(S, a, b);
      if (pc.refines(H)) {
        for (element x = 0; x < S.order(); ++x) {
          for (element y = x + 1; y < S.order(); ++y) {
            if (pc.related(x, y)) {
              join.merge(x, y);
            }
          }
        }
      }
    }
  }
  return Relation::from_class_ids(join.ids());
}

}  // namespace finsemi
