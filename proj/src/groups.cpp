#include "azbench/groups.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "azbench/error.hpp"

namespace azbench {

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable GroupTable::from_table(std::string                          name,
                                    std::vector<std::string>             names,
                                    std::vector<std::vector<int>> const& mul) {
    std::size_t const n = mul.size();
    if (n == 0) {
      throw StructuralError("empty multiplication table", {-1, -1, -1});
    }
    if (n > max_group_order) {
      throw CapacityError("group order " + std::to_string(n)
                          + " exceeds the desk-scale cap of "
                          + std::to_string(max_group_order));
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (mul[a].size() != n) {
        throw StructuralError("multiplication table is not square at row "
                                  + std::to_string(a),
                              {static_cast<int>(a), -1, -1});
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (mul[a][b] < 0 || static_cast<std::size_t>(mul[a][b]) >= n) {
          throw StructuralError("table entry out of range",
                                {static_cast<int>(a), static_cast<int>(b), -1});
        }
      }
    }
    if (names.empty()) {
      for (std::size_t a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
      }
    }
    if (names.size() != n) {
      throw StructuralError("element name count does not match the order",
                            {-1, -1, -1});
    }

    GroupTable g;
    g._name  = std::move(name);
    g._order = n;
    g._names = std::move(names);
    g._mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g._mul[a * n + b] = static_cast<Elem>(mul[a][b]);
      }
    }

    // identity
    std::optional<Elem> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = g._mul[e * n + a] == a && g._mul[a * n + e] == a;
      }
      if (ok) {
        id = static_cast<Elem>(e);
      }
    }
    if (!id) {
      throw StructuralError("no two-sided identity", {-1, -1, -1});
    }
    g._identity = *id;

    g._inv.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b) {
        if (g._mul[a * n + b] == *id && g._mul[b * n + a] == *id) {
          g._inv[a] = static_cast<Elem>(b);
          found     = true;
        }
      }
      if (!found) {
        throw StructuralError("element " + std::to_string(a)
                                  + " has no two-sided inverse",
                              {static_cast<int>(a), -1, -1});
      }
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Elem const ab = g._mul[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (g._mul[ab * n + c] != g._mul[a * n + g._mul[b * n + c]]) {
            throw StructuralError(
                "table is not associative at (" + std::to_string(a) + ", "
                    + std::to_string(b) + ", " + std::to_string(c) + ")",
                {static_cast<int>(a),
                 static_cast<int>(b),
                 static_cast<int>(c)});
          }
        }
      }
    }
    return g;
  }

  Elem GroupTable::pow(Elem a, unsigned k) const noexcept {
    Elem r = _identity;
    for (unsigned i = 0; i < k; ++i) {
      r = mul(r, a);
    }
    return r;
  }

  unsigned GroupTable::element_order(Elem a) const noexcept {
    unsigned k = 1;
    Elem     x = a;
    while (x != _identity) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::optional<Elem> GroupTable::find(std::string_view name) const {
    for (std::size_t a = 0; a < _order; ++a) {
      if (_names[a] == name) {
        return static_cast<Elem>(a);
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<int>> GroupTable::table() const {
    std::vector<std::vector<int>> t(_order, std::vector<int>(_order));
    for (std::size_t a = 0; a < _order; ++a) {
      for (std::size_t b = 0; b < _order; ++b) {
        t[a][b] = mul(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Analysis
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> generated_subgroup(GroupTable const&     g,
                                       std::span<Elem const> gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> out{g.identity()};
    seen[g.identity()] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Elem s : gens) {
        Elem const y = g.mul(out[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_subgroup(GroupTable const& g, std::span<Elem const> s) {
    if (s.empty()) {
      return false;
    }
    std::vector<char> in(g.order(), 0);
    for (Elem a : s) {
      in[a] = 1;
    }
    if (!in[g.identity()]) {
      return false;
    }
    for (Elem a : s) {
      if (!in[g.inv(a)]) {
        return false;
      }
      for (Elem b : s) {
        if (!in[g.mul(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  GroupAnalysis analyze(GroupTable const& g) {
    GroupAnalysis r;
    std::size_t const n = g.order();
    unsigned          e = 1;
    for (std::size_t a = 0; a < n; ++a) {
      unsigned const o = g.element_order(static_cast<Elem>(a));
      e                = std::lcm(e, o);
      if (o == 2) {
        r.involutions.push_back(static_cast<Elem>(a));
      }
    }
    r.exponent = e;

    std::vector<Elem> commutators;
    std::vector<char> seen(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool central = true;
      for (std::size_t b = 0; b < n; ++b) {
        Elem const c
            = g.commutator(static_cast<Elem>(a), static_cast<Elem>(b));
        if (c != g.identity()) {
          central = false;
        }
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
      if (central) {
        r.center.push_back(static_cast<Elem>(a));
      }
    }
    r.commutator_subgroup = generated_subgroup(g, commutators);
    return r;
  }

  AnalyzedGroup validate_and_analyze(std::string                          name,
                                     std::vector<std::string>             names,
                                     std::vector<std::vector<int>> const& mul) {
    GroupTable g = GroupTable::from_table(std::move(name), std::move(names), mul);
    GroupAnalysis a = analyze(g);
    return {std::move(g), std::move(a)};
  }

  bool is_class_csw(GroupTable const& g) {
    GroupAnalysis const a = analyze(g);
    if (4 % a.exponent != 0) {
      return false;
    }
    return std::all_of(
        a.involutions.begin(), a.involutions.end(), [&](Elem x) {
          return std::binary_search(a.center.begin(), a.center.end(), x);
        });
  }

  namespace {
    std::vector<Elem> checked_indices(GroupTable const&    g,
                                      std::span<int const> k) {
      std::vector<Elem> out;
      for (int x : k) {
        if (x < 0 || static_cast<std::size_t>(x) >= g.order()) {
          throw InputError("element index " + std::to_string(x)
                           + " out of range for group of order "
                           + std::to_string(g.order()));
        }
        out.push_back(static_cast<Elem>(x));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  bool validate_k(GroupTable const& g, std::span<int const> k) {
    std::vector<Elem> const ks = checked_indices(g, k);
    if (!is_subgroup(g, ks)) {
      return false;
    }
    GroupAnalysis const a = analyze(g);
    auto const          sub = [](std::vector<Elem> const& x,
                        std::vector<Elem> const& y) {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    return sub(a.commutator_subgroup, ks) && sub(ks, a.center);
  }

  namespace {
    // Iterative deepening over index-increasing irredundant sequences.
    bool generates_with(GroupTable const&  g,
                        std::vector<Elem>& gens,
                        std::size_t        depth,
                        std::size_t        next) {
      std::vector<Elem> const h = generated_subgroup(g, gens);
      if (h.size() == g.order()) {
        return true;
      }
      if (depth == 0) {
        return false;
      }
      for (std::size_t x = next; x < g.order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), static_cast<Elem>(x))) {
          continue;
        }
        gens.push_back(static_cast<Elem>(x));
        if (generates_with(g, gens, depth - 1, x + 1)) {
          return true;
        }
        gens.pop_back();
      }
      return false;
    }
  }  // namespace

  std::size_t rank(GroupTable const& g) {
    for (std::size_t r = 0;; ++r) {
      std::vector<Elem> gens;
      if (generates_with(g, gens, r, 0)) {
        return r;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // KGroupSpec
  ////////////////////////////////////////////////////////////////////////

  KGroupSpec make_kgroup(GroupTable                      g,
                         std::span<int const>            k,
                         std::optional<std::vector<int>> order_hint) {
    if (!validate_k(g, k)) {
      throw InputError("K must be a subgroup with G' <= K <= Z(G)");
    }
    std::size_t const n = g.order();
    KGroupSpec        kg(std::move(g));
    GroupTable const& G = kg._group;
    kg._k               = checked_indices(G, k);
    kg._k_index.assign(n, -1);
    for (std::size_t i = 0; i < kg._k.size(); ++i) {
      kg._k_index[kg._k[i]] = static_cast<int>(i);
    }
    kg._exponent = analyze(G).exponent;

    // Cosets discovered in index order; each representative is the smallest
    // index in its coset, except that K is represented by the identity.
    kg._coset.assign(n, SIZE_MAX);
    kg._kpart.assign(n, G.identity());
    auto add_coset = [&](Elem rep) {
      std::size_t const c = kg._transversal.size();
      kg._transversal.push_back(rep);
      for (Elem x : kg._k) {
        Elem const y = G.mul(rep, x);
        kg._coset[y] = c;
        kg._kpart[y] = x;
      }
    };
    add_coset(G.identity());
    for (std::size_t a = 0; a < n; ++a) {
      if (kg._coset[a] == SIZE_MAX) {
        add_coset(static_cast<Elem>(a));
      }
    }

    std::vector<int> hint;
    if (order_hint) {
      hint = *order_hint;
      std::vector<int> sorted = hint;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expect(n);
      std::iota(expect.begin(), expect.end(), 0);
      if (sorted != expect) {
        throw InputError("order hint is not a permutation of the elements");
      }
    } else {
      hint.resize(n);
      std::iota(hint.begin(), hint.end(), 0);
    }
    kg._order.push_back(G.identity());
    for (int x : hint) {
      if (static_cast<Elem>(x) != G.identity()) {
        kg._order.push_back(static_cast<Elem>(x));
      }
    }
    kg._pos.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      kg._pos[kg._order[i]] = i;
    }
    return kg;
  }

  bool is_coset_compatible(KGroupSpec const& kg) {
    GroupTable const& g = kg.group();
    std::size_t const n = g.order();
    // first element (in element order) of each coset
    std::vector<int> head(kg.transversal().size(), -1);
    std::vector<int> k_rank(n, -1);
    int              next = 0;
    for (Elem a : kg.element_order()) {
      if (kg.in_k(a)) {
        k_rank[a] = next++;
      }
    }
    std::size_t prev_coset = SIZE_MAX;
    std::vector<char> closed(kg.transversal().size(), 0);
    int               expect = 0;
    for (Elem a : kg.element_order()) {
      std::size_t const c = kg.coset_of(a);
      if (c != prev_coset) {
        if (prev_coset != SIZE_MAX) {
          closed[prev_coset] = 1;
        }
        if (closed[c]) {
          return false;  // coset not contiguous
        }
        head[c]    = a;
        prev_coset = c;
        expect     = 0;
      }
      Elem const offset = g.mul(g.inv(static_cast<Elem>(head[c])), a);
      if (k_rank[offset] != expect++) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms and isomorphism search
  ////////////////////////////////////////////////////////////////////////

  bool is_homomorphism(GroupTable const&     a,
                       GroupTable const&     b,
                       std::span<Elem const> map) {
    if (map.size() != a.order()) {
      return false;
    }
    for (Elem m : map) {
      if (m >= b.order()) {
        return false;
      }
    }
    for (std::size_t x = 0; x < a.order(); ++x) {
      for (std::size_t y = 0; y < a.order(); ++y) {
        if (map[a.mul(static_cast<Elem>(x), static_cast<Elem>(y))]
            != b.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_injective(std::span<Elem const> map) {
    std::vector<Elem> s(map.begin(), map.end());
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  namespace {
    // Extends gens[i] -> imgs[i] (i < |imgs|) over the subgroup they generate
    // by right multiplication; fails on a conflict or a collision.
    bool extend_partial(GroupTable const&        a,
                        GroupTable const&        b,
                        std::vector<Elem> const& gens,
                        std::vector<Elem> const& imgs,
                        std::vector<int>&        phi) {
      phi.assign(a.order(), -1);
      std::vector<char> used(b.order(), 0);
      phi[a.identity()]  = b.identity();
      used[b.identity()] = 1;
      std::vector<Elem> queue{a.identity()};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Elem const x = queue[q];
        for (std::size_t i = 0; i < imgs.size(); ++i) {
          Elem const y   = a.mul(x, gens[i]);
          Elem const img = b.mul(static_cast<Elem>(phi[x]), imgs[i]);
          if (phi[y] < 0) {
            if (used[img]) {
              return false;
            }
            phi[y]    = img;
            used[img] = 1;
            queue.push_back(y);
          } else if (phi[y] != img) {
            return false;
          }
        }
      }
      return true;
    }

    bool iso_search(GroupTable const&  a,
                    GroupTable const&  b,
                    std::vector<Elem> const& gens,
                    std::vector<Elem>& imgs,
                    std::vector<unsigned> const& order_b,
                    std::vector<int>&  phi) {
      std::size_t const i = imgs.size();
      if (i == gens.size()) {
        return extend_partial(a, b, gens, imgs, phi);
      }
      unsigned const want = a.element_order(gens[i]);
      std::vector<int> current;
      if (!extend_partial(a, b, gens, imgs, current)) {
        return false;
      }
      std::vector<char> in_image(b.order(), 0);
      for (int v : current) {
        if (v >= 0) {
          in_image[v] = 1;
        }
      }
      for (std::size_t y = 0; y < b.order(); ++y) {
        if (order_b[y] != want || in_image[y]) {
          continue;
        }
        imgs.push_back(static_cast<Elem>(y));
        std::vector<int> trial;
        if (extend_partial(a, b, gens, imgs, trial)
            && iso_search(a, b, gens, imgs, order_b, phi)) {
          return true;
        }
        imgs.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<Elem>> find_isomorphism(GroupTable const& a,
                                                    GroupTable const& b) {
    if (a.order() != b.order()) {
      return std::nullopt;
    }
    std::vector<unsigned> order_a(a.order()), order_b(b.order());
    for (std::size_t x = 0; x < a.order(); ++x) {
      order_a[x] = a.element_order(static_cast<Elem>(x));
      order_b[x] = b.element_order(static_cast<Elem>(x));
    }
    {
      auto sa = order_a, sb = order_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
    }
    // Greedy generating set, preferring elements of large order.
    std::vector<Elem> by_order(a.order());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [&](Elem x, Elem y) {
      return order_a[x] > order_a[y];
    });
    std::vector<Elem> gens;
    std::vector<Elem> h = generated_subgroup(a, gens);
    for (Elem x : by_order) {
      if (h.size() == a.order()) {
        break;
      }
      if (!std::binary_search(h.begin(), h.end(), x)) {
        gens.push_back(x);
        h = generated_subgroup(a, gens);
      }
    }
    std::vector<Elem> imgs;
    std::vector<int>  phi;
    if (!iso_search(a, b, gens, imgs, order_b, phi)) {
      return std::nullopt;
    }
    std::vector<Elem> out(phi.begin(), phi.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  GroupTable cyclic_group(std::size_t n) {
    std::vector<std::string>      names;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        mul[i][j] = static_cast<int>((i + j) % n);
      }
    }
    return GroupTable::from_table("C" + std::to_string(n), names, mul);
  }

  GroupTable dihedral_group(std::size_t n) {
    // (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)
    std::size_t const             N = 2 * n;
    std::vector<std::string>      names(N);
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    auto rname = [](std::size_t i) {
      return i == 0 ? std::string() : i == 1 ? std::string("r")
                                             : "r" + std::to_string(i);
    };
    for (std::size_t i = 0; i < n; ++i) {
      names[i]     = i == 0 ? "1" : rname(i);
      names[n + i] = "s" + rname(i);
    }
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        std::size_t const a = x / n, i = x % n, b = y / n, j = y % n;
        std::size_t const r = (b == 0 ? j + i : j + n - i) % n;
        mul[x][y]           = static_cast<int>(((a + b) % 2) * n + r);
      }
    }
    return GroupTable::from_table("D" + std::to_string(n), names, mul);
  }

  GroupTable quaternion_group() {
    // index = 2 * unit + sign, units 1, i, j, k
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // unit products: table[u][v] = (unit, sign)
    static constexpr int unit[4][4]
        = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4]
        = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        int const u = x / 2, v = y / 2;
        int const s = (x % 2) ^ (y % 2) ^ sign[u][v];
        mul[x][y]   = 2 * unit[u][v] + s;
      }
    }
    return GroupTable::from_table("Q8", names, mul);
  }

  GroupTable direct_product(GroupTable const& g, GroupTable const& h) {
    std::size_t const             n = g.order() * h.order();
    std::vector<std::string>      names(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x) {
      Elem const a = static_cast<Elem>(x / h.order());
      Elem const b = static_cast<Elem>(x % h.order());
      names[x]     = "(" + g.name_of(a) + "," + h.name_of(b) + ")";
      for (std::size_t y = 0; y < n; ++y) {
        Elem const c = static_cast<Elem>(y / h.order());
        Elem const d = static_cast<Elem>(y % h.order());
        mul[x][y]    = static_cast<int>(g.mul(a, c) * h.order() + h.mul(b, d));
      }
    }
    return GroupTable::from_table(g.name() + "x" + h.name(), names, mul);
  }

  namespace {
    CatalogEntry entry(GroupTable g, std::vector<int> k, std::string name) {
      // rebuild with the catalog name
      GroupTable named
          = GroupTable::from_table(std::move(name), g.names(), g.table());
      return {std::move(named), std::move(k)};
    }

    std::vector<CatalogEntry> build_catalog() {
      GroupTable const c2 = cyclic_group(2);
      GroupTable const c4 = cyclic_group(4);
      GroupTable const q8 = quaternion_group();
      std::vector<CatalogEntry> out;
      out.push_back(entry(c2, {0, 1}, "C2"));
      out.push_back(entry(c4, {0, 2}, "C4"));
      out.push_back(entry(direct_product(c2, c2), {0}, "C2xC2"));
      out.push_back(entry(q8, {0, 1}, "Q8"));
      out.push_back(entry(dihedral_group(4), {0, 2}, "D4"));
      out.push_back(entry(direct_product(c2, c4), {0}, "C2xC4"));
      out.push_back(
          entry(direct_product(direct_product(c2, c2), c2), {0}, "C2xC2xC2"));
      out.push_back(entry(direct_product(c4, c4), {0}, "C4xC4"));
      // K = {(1,1), (-1,1)}
      out.push_back(entry(direct_product(q8, c2), {0, 2}, "Q8xC2"));
      out.push_back(entry(direct_product(q8, c4), {0, 4}, "Q8xC4"));
      out.push_back(entry(direct_product(direct_product(c4, c2), c2),
                          {0},
                          "C4xC2xC2"));
      return out;
    }
  }  // namespace

  std::vector<CatalogEntry> const& bundled_groups() {
    static std::vector<CatalogEntry> const catalog = build_catalog();
    return catalog;
  }

  CatalogEntry const& bundled_group(std::string_view name) {
    for (auto const& e : bundled_groups()) {
      if (e.group.name() == name) {
        return e;
      }
    }
    throw InputError("unknown bundled group '" + std::string(name) + "'");
  }

}  // namespace azbench
