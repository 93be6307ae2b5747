#include "finsemi/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "finsemi/errors.hpp"

namespace finsemi {

PartialInjection::PartialInjection(unsigned degree) : image_(degree, 0) {}

PartialInjection PartialInjection::from_image(std::vector<unsigned> image) {
  const unsigned k = static_cast<unsigned>(image.size());
  std::vector<bool> hit(k + 1, false);
  for (unsigned v : image) {
    if (v > k) {
      throw PreconditionError("partial injection image value out of range");
    }
    if (v != 0) {
      if (hit[v]) {
        throw PreconditionError("partial injection repeats an image value");
      }
      hit[v] = true;
    }
  }
  PartialInjection p(k);
  p.image_ = std::move(image);
  return p;
}

PartialInjection PartialInjection::identity(unsigned degree) {
  std::vector<unsigned> image(degree);
  for (unsigned x = 1; x <= degree; ++x) {
    image[x - 1] = x;
  }
  return from_image(std::move(image));
}

PartialInjection PartialInjection::then(const PartialInjection& g) const {
  std::vector<unsigned> image(degree(), 0);
  for (unsigned x = 1; x <= degree(); ++x) {
    const unsigned y = apply(x);
    if (y != 0) {
      image[x - 1] = g.apply(y);
    }
  }
  return from_image(std::move(image));
}

std::vector<unsigned> PartialInjection::domain() const {
  std::vector<unsigned> out;
  for (unsigned x = 1; x <= degree(); ++x) {
    if (apply(x) != 0) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<unsigned> PartialInjection::image_values() const {
  std::vector<unsigned> out;
  for (unsigned x = 1; x <= degree(); ++x) {
    if (apply(x) != 0) {
      out.push_back(apply(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PartialInjection::display() const {
  const std::vector<unsigned> dom = domain();
  if (dom.empty()) {
    return "0";
  }
  const bool is_partial_identity =
      std::all_of(dom.begin(), dom.end(), [&](unsigned x) { return apply(x) == x; });
  std::ostringstream os;
  if (is_partial_identity) {
    os << "id{";
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (i > 0) {
        os << ',';
      }
      os << dom[i];
    }
    os << '}';
  } else {
    os << '[';
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (i > 0) {
        os << ',';
      }
      os << dom[i] << '>' << apply(dom[i]);
    }
    os << ']';
  }
  return os.str();
}

std::vector<unsigned> PartialInjection::sort_key() const {
  std::vector<unsigned> key(image_);
  for (unsigned& v : key) {
    if (v == 0) {
      v = degree() + 1;
    }
  }
  return key;
}

element SymmetricInverseMonoid::index_of(const PartialInjection& p) const {
  const auto it = std::find(legend.begin(), legend.end(), p);
  if (it == legend.end()) {
    throw PreconditionError("partial injection not present in the legend");
  }
  return static_cast<element>(it - legend.begin());
}

SymmetricInverseMonoid symmetric_inverse_monoid(unsigned degree) {
  if (degree < 1 || degree > 4) {
    throw DegreeTooLargeError("symmetric_inverse_monoid supports degrees 1..4, got "
                              + std::to_string(degree));
  }
  std::vector<PartialInjection> legend;
  std::vector<unsigned> image(degree, 0);
  // Enumerate image tuples; injectivity filters them down to the monoid.
  const auto emit = [&](auto&& self, unsigned pos) -> void {
    if (pos == degree) {
      std::vector<bool> hit(degree + 1, false);
      bool injective = true;
      for (unsigned v : image) {
        if (v != 0) {
          if (hit[v]) {
            injective = false;
            break;
          }
          hit[v] = true;
        }
      }
      if (injective) {
        legend.push_back(PartialInjection::from_image(image));
      }
      return;
    }
    for (unsigned v = 0; v <= degree; ++v) {
      image[pos] = v;
      self(self, pos + 1);
    }
  };
  emit(emit, 0);
  std::sort(legend.begin(), legend.end(),
            [](const PartialInjection& a, const PartialInjection& b) {
              return a.sort_key() < b.sort_key();
            });

  std::map<std::vector<unsigned>, element> index;
  for (element i = 0; i < legend.size(); ++i) {
    index.emplace(legend[i].sort_key(), i);
  }
  const unsigned n = static_cast<unsigned>(legend.size());
  std::vector<std::vector<element>> rows(n, std::vector<element>(n));
  std::vector<std::string> names(n);
  for (element i = 0; i < n; ++i) {
    names[i] = legend[i].display();
    for (element j = 0; j < n; ++j) {
      rows[i][j] = index.at(legend[i].then(legend[j]).sort_key());
    }
  }
  return SymmetricInverseMonoid{
      FiniteSemigroup::from_table(rows, std::move(names)), std::move(legend)};
}

FiniteSemigroup completely_inverse_s7() {
  const auto pi = [](std::vector<unsigned> image) {
    return PartialInjection::from_image(std::move(image));
  };
  const std::vector<PartialInjection> els = {
      pi({0, 0, 0, 0}),  // 0
      pi({1, 0, 0, 0}),  // e
      pi({0, 2, 0, 0}),  // f
      pi({2, 0, 0, 0}),  // a
      pi({0, 1, 0, 0}),  // b
      pi({0, 0, 3, 4}),  // g
      pi({0, 0, 4, 3}),  // h
  };
  const std::vector<std::string> names = {"0", "e", "f", "a", "b", "g", "h"};
  std::vector<std::vector<element>> rows(7, std::vector<element>(7));
  for (element i = 0; i < 7; ++i) {
    for (element j = 0; j < 7; ++j) {
      const PartialInjection p = els[i].then(els[j]);
      const auto it = std::find(els.begin(), els.end(), p);
      if (it == els.end()) {
        throw InternalInconsistencyError("the seven-element set is not product-closed");
      }
      rows[i][j] = static_cast<element>(it - els.begin());
    }
  }
  return FiniteSemigroup::from_table(rows, names);
}

FiniteSemigroup group_adjoin(const FiniteSemigroup& G, element g) {
  if (g >= G.order()) {
    throw PreconditionError("group_adjoin: element out of range");
  }
  if (!is_group(G)) {
    throw NotAGroupError("group_adjoin requires a group");
  }
  const unsigned n = G.order() + 1;
  const element a = G.order();
  std::vector<std::vector<element>> rows(n, std::vector<element>(n));
  for (element i = 0; i < G.order(); ++i) {
    for (element j = 0; j < G.order(); ++j) {
      rows[i][j] = G.product(i, j);
    }
    rows[a][i] = G.product(g, i);
    rows[i][a] = G.product(i, g);
  }
  rows[a][a] = G.product(g, g);
  std::optional<std::vector<std::string>> names;
  if (G.has_names()) {
    names = *G.names();
    std::string extra = "a";
    while (std::find(names->begin(), names->end(), extra) != names->end()) {
      extra += "'";
    }
    names->push_back(extra);
  }
  return FiniteSemigroup::from_table(rows, std::move(names));
}

FiniteSemigroup cyclic_group(unsigned m) {
  if (m == 0) {
    throw PreconditionError("cyclic_group requires order >= 1");
  }
  std::vector<std::vector<element>> rows(m, std::vector<element>(m));
  for (element i = 0; i < m; ++i) {
    for (element j = 0; j < m; ++j) {
      rows[i][j] = (i + j) % m;
    }
  }
  return FiniteSemigroup::from_table(rows);
}

FiniteSemigroup left_zero(unsigned m) {
  if (m == 0) {
    throw PreconditionError("left_zero requires order >= 1");
  }
  std::vector<std::vector<element>> rows(m, std::vector<element>(m));
  for (element i = 0; i < m; ++i) {
    for (element j = 0; j < m; ++j) {
      rows[i][j] = i;
    }
  }
  return FiniteSemigroup::from_table(rows);
}

FiniteSemigroup right_zero(unsigned m) {
  if (m == 0) {
    throw PreconditionError("right_zero requires order >= 1");
  }
  std::vector<std::vector<element>> rows(m, std::vector<element>(m));
  for (element i = 0; i < m; ++i) {
    for (element j = 0; j < m; ++j) {
      rows[i][j] = j;
    }
  }
  return FiniteSemigroup::from_table(rows);
}

FiniteSemigroup null_semigroup(unsigned m) {
  if (m == 0) {
    throw PreconditionError("null_semigroup requires order >= 1");
  }
  std::vector<std::vector<element>> rows(m, std::vector<element>(m, 0));
  return FiniteSemigroup::from_table(rows);
}

FiniteSemigroup rectangular_band(unsigned p, unsigned q) {
  if (p == 0 || q == 0) {
    throw PreconditionError("rectangular_band requires positive dimensions");
  }
  const unsigned n = p * q;
  std::vector<std::vector<element>> rows(n, std::vector<element>(n));
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      rows[x][y] = (x / q) * q + y % q;
    }
  }
  return FiniteSemigroup::from_table(rows);
}

FiniteSemigroup semilattice_chain(unsigned m) {
  if (m == 0) {
    throw PreconditionError("semilattice_chain requires order >= 1");
  }
  std::vector<std::vector<element>> rows(m, std::vector<element>(m));
  for (element i = 0; i < m; ++i) {
    for (element j = 0; j < m; ++j) {
      rows[i][j] = std::min(i, j);
    }
  }
  return FiniteSemigroup::from_table(rows);
}

const std::vector<std::string>& stock_names() {
  static const std::vector<std::string> names = {
      "cyclic_group",      "left_zero",    "right_zero",
      "null",              "rectangular_band", "semilattice_chain",
      "symmetric_inverse", "s7",           "group_adjoin"};
  return names;
}

FiniteSemigroup stock(const std::string& name,
                      const std::vector<unsigned>& params) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  const auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError("construction '" + name + "' expects "
                              + std::to_string(count) + " parameter(s), got "
                              + std::to_string(params.size()));
    }
  };
  if (key == "cyclic_group") {
    want(1);
    return cyclic_group(params[0]);
  }
  if (key == "left_zero") {
    want(1);
    return left_zero(params[0]);
  }
  if (key == "right_zero") {
    want(1);
    return right_zero(params[0]);
  }
  if (key == "null") {
    want(1);
    return null_semigroup(params[0]);
  }
  if (key == "rectangular_band") {
    want(2);
    return rectangular_band(params[0], params[1]);
  }
  if (key == "semilattice_chain") {
    want(1);
    return semilattice_chain(params[0]);
  }
  if (key == "symmetric_inverse") {
    want(1);
    return symmetric_inverse_monoid(params[0]).semigroup;
  }
  if (key == "s7") {
    want(0);
    return completely_inverse_s7();
  }
  if (key == "group_adjoin") {
    want(2);
    return group_adjoin(cyclic_group(params[0]), params[1]);
  }
  throw UnknownConstructionError("unknown construction: " + name);
}

}  // namespace finsemi
