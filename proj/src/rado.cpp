#include "azbench/rado.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "azbench/error.hpp"

namespace azbench {

  ////////////////////////////////////////////////////////////////////////
  // Nat
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::uint64_t small_limit = std::uint64_t{1} << 63;
  }

  Nat::Nat(std::uint64_t v) {
    if (v < small_limit) {
      _small = v;
      return;
    }
    for (unsigned i = 64; i-- > 0;) {
      if ((v >> i) & 1) {
        _big.emplace_back(static_cast<std::uint64_t>(i));
      }
    }
  }

  Nat Nat::from_positions(std::vector<Nat> desc) {
    if (desc.empty() || (desc.front().is_small() && desc.front().small() < 63)) {
      std::uint64_t v = 0;
      for (Nat const& p : desc) {
        v |= std::uint64_t{1} << p.small();
      }
      return Nat(v);
    }
    Nat n;
    n._big = std::move(desc);
    return n;
  }

  Nat Nat::pow2(Nat const& e) {
    return from_positions({e});
  }

  std::vector<Nat> Nat::positions() const {
    if (!is_small()) {
      return _big;
    }
    std::vector<Nat> out;
    for (unsigned i = 64; i-- > 0;) {
      if ((_small >> i) & 1) {
        out.emplace_back(static_cast<std::uint64_t>(i));
      }
    }
    return out;
  }

  bool Nat::bit(Nat const& position) const {
    if (is_small()) {
      return position.is_small() && position.small() < 64
             && ((_small >> position.small()) & 1);
    }
    return std::binary_search(_big.begin(), _big.end(), position,
                              [](Nat const& a, Nat const& b) { return b < a; });
  }

  Nat Nat::successor() const {
    if (is_small() && _small + 1 < small_limit) {
      return Nat(_small + 1);
    }
    std::vector<Nat> p = positions();
    std::uint64_t    k = 0;
    while (!p.empty() && p.back() == Nat(k)) {
      p.pop_back();
      ++k;
    }
    p.emplace_back(k);
    return from_positions(std::move(p));
  }

  Nat Nat::disjoint_sum(Nat const& a, Nat const& b) {
    std::vector<Nat> pa = a.positions(), pb = b.positions(), out;
    std::size_t      i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
      if (j == pb.size() || (i < pa.size() && pb[j] < pa[i])) {
        out.push_back(pa[i++]);
      } else if (i == pa.size() || pa[i] < pb[j]) {
        out.push_back(pb[j++]);
      } else {
        throw Error("internal: disjoint_sum of overlapping numbers");
      }
    }
    return from_positions(std::move(out));
  }

  std::strong_ordering Nat::operator<=>(Nat const& o) const {
    if (is_small() && o.is_small()) {
      return _small <=> o._small;
    }
    if (is_small()) {
      return std::strong_ordering::less;
    }
    if (o.is_small()) {
      return std::strong_ordering::greater;
    }
    for (std::size_t i = 0; i < _big.size() && i < o._big.size(); ++i) {
      if (auto c = _big[i] <=> o._big[i]; c != 0) {
        return c;
      }
    }
    return _big.size() <=> o._big.size();
  }

  std::string Nat::to_string() const {
    if (is_small()) {
      return std::to_string(_small);
    }
    std::string   s;
    std::uint64_t low = 0;
    for (Nat const& p : _big) {
      if (p.is_small() && p.small() < 63) {
        low |= std::uint64_t{1} << p.small();
        continue;
      }
      if (!s.empty()) {
        s += " + ";
      }
      s += p.is_small() ? "2^" + p.to_string() : "2^(" + p.to_string() + ")";
    }
    if (low != 0) {
      s += " + " + std::to_string(low);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // BIT graph
  ////////////////////////////////////////////////////////////////////////

  bool adjacent(Nat const& u, Nat const& v) {
    if (u == v) {
      throw InputError("adjacency needs two distinct vertices");
    }
    return u < v ? v.bit(u) : u.bit(v);
  }

  bool adjacent(std::uint64_t u, std::uint64_t v) {
    if (u == v) {
      throw InputError("adjacency needs two distinct vertices");
    }
    if (u > v) {
      std::swap(u, v);
    }
    return u < 64 && ((v >> u) & 1);
  }

  bool is_induced_cycle(std::vector<std::uint64_t> const& cycle) {
    std::size_t const k = cycle.size();
    if (k < 3) {
      return false;
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (cycle[a] == cycle[b]) {
          return false;
        }
        bool const want = b - a == 1 || (a == 0 && b == k - 1);
        if (adjacent(cycle[a], cycle[b]) != want) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // Vertex sets (sorted) of induced n-cycles whose largest vertex is p.
    std::set<std::vector<std::uint64_t>> cycles_topped_by(std::size_t   n,
                                                          std::uint64_t p) {
      std::set<std::vector<std::uint64_t>> found;
      std::vector<std::uint64_t>           path{p};
      std::function<void()>                grow = [&] {
        std::uint64_t const last = path.back();
        bool const          closing = path.size() + 1 == n;
        for (std::uint64_t w = 0; w < p; ++w) {
          if (std::find(path.begin(), path.end(), w) != path.end()
              || !adjacent(last, w)) {
            continue;
          }
          bool fits = true;
          for (std::size_t q = 0; q + 1 < path.size() && fits; ++q) {
            bool const want = closing && q == 0;
            fits            = adjacent(path[q], w) == want;
          }
          if (!fits) {
            continue;
          }
          path.push_back(w);
          if (closing) {
            std::vector<std::uint64_t> s = path;
            std::sort(s.begin(), s.end());
            found.insert(std::move(s));
          } else {
            grow();
          }
          path.pop_back();
        }
      };
      if (n >= 3 && p + 1 >= n) {
        grow();
      }
      return found;
    }

    // The cyclic order of an induced cycle on `set`, started at its least
    // vertex toward the smaller neighbour.
    std::vector<std::uint64_t> orient(std::vector<std::uint64_t> const& set) {
      auto nbrs = [&](std::uint64_t u) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t v : set) {
          if (v != u && adjacent(u, v)) {
            out.push_back(v);
          }
        }
        return out;
      };
      std::uint64_t const        start = set.front();
      std::vector<std::uint64_t> cyc{start};
      std::uint64_t              prev = start;
      std::uint64_t              cur  = nbrs(start).front();  // sorted: smaller
      while (cur != start) {
        cyc.push_back(cur);
        std::vector<std::uint64_t> const n = nbrs(cur);
        std::uint64_t const next = n[0] == prev ? n[1] : n[0];
        prev                     = cur;
        cur                      = next;
      }
      return cyc;
    }
  }  // namespace

  std::vector<std::uint64_t> least_induced_cycle(std::size_t n, std::uint64_t p) {
    std::optional<std::vector<std::uint64_t>> best;
    for (std::uint64_t q = 0; q <= p; ++q) {
      for (auto const& s : cycles_topped_by(n, q)) {
        if (!best || s < *best) {
          best = s;
        }
      }
    }
    return best ? orient(*best) : std::vector<std::uint64_t>{};
  }

  std::pair<std::uint64_t, std::vector<std::uint64_t>> minimal_cycle_prefix(
      std::size_t n) {
    if (n < 3) {
      throw InputError("cycles need at least three vertices");
    }
    for (std::uint64_t p = n - 1;; ++p) {
      auto const found = cycles_topped_by(n, p);
      if (!found.empty()) {
        return {p, orient(*found.begin())};
      }
    }
  }

  std::vector<Triple> build_triples(std::size_t max_n) {
    if (max_n < 4) {
      throw InputError("build_triples needs max_n >= 4");
    }
    std::vector<Triple> out;
    Nat                 c_prev(0);  // c_3
    for (std::size_t n = 4; n <= max_n; ++n) {
      auto [p, cycle] = minimal_cycle_prefix(n);
      Triple t;
      t.n              = n;
      t.a              = Nat(0);
      t.minimal_prefix = p;
      t.cycle          = cycle;
      Nat const after  = c_prev.successor();
      t.b              = after < Nat(p) ? Nat(p) : after;
      Nat s(0);
      for (std::uint64_t x : cycle) {
        s = Nat::disjoint_sum(s, Nat::pow2(Nat(x)));
      }
      // Bits below b + 1 are forced to the cycle; the least value above b
      // with those bits is s itself or s + 2^(b+1).
      t.c    = t.b < s ? s : Nat::disjoint_sum(s, Nat::pow2(t.b.successor()));
      c_prev = t.c;
      out.push_back(std::move(t));
    }
    return out;
  }

  std::size_t count_induced_cycles(std::vector<std::uint64_t> const& vertices,
                                   std::size_t                       i) {
    std::size_t const k = vertices.size();
    if (i < 3 || i > k) {
      return 0;
    }
    std::size_t        count = 0;
    std::vector<char>  pick(k, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(i), 1);
    // combinations via prev_permutation on a 1..10..0 mask
    do {
      std::vector<std::uint64_t> sub;
      for (std::size_t q = 0; q < k; ++q) {
        if (pick[q]) {
          sub.push_back(vertices[q]);
        }
      }
      // an i-vertex graph is an induced i-cycle iff 2-regular and connected
      bool regular = true;
      for (std::size_t a = 0; a < i && regular; ++a) {
        std::size_t deg = 0;
        for (std::size_t b = 0; b < i; ++b) {
          deg += a != b && adjacent(sub[a], sub[b]);
        }
        regular = deg == 2;
      }
      if (regular) {
        std::vector<char>        seen(i, 0);
        std::vector<std::size_t> stack{0};
        seen[0]              = 1;
        std::size_t reached  = 1;
        while (!stack.empty()) {
          std::size_t const a = stack.back();
          stack.pop_back();
          for (std::size_t b = 0; b < i; ++b) {
            if (!seen[b] && a != b && adjacent(sub[a], sub[b])) {
              seen[b] = 1;
              ++reached;
              stack.push_back(b);
            }
          }
        }
        count += reached == i;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return count;
  }

  ObstructionReport check_obstruction(std::vector<Triple> const& triples) {
    ObstructionReport rep;
    auto violation = [&](std::string s) {
      rep.ok = false;
      rep.violations.push_back(std::move(s));
    };
    std::vector<std::vector<std::uint64_t>> nbhd;
    for (std::size_t q = 0; q < triples.size(); ++q) {
      Triple const& t = triples[q];
      TripleCheck   tc;
      tc.n             = t.n;
      tc.cycle_induced = t.cycle.size() == t.n && is_induced_cycle(t.cycle);
      if (!tc.cycle_induced) {
        violation("n=" + std::to_string(t.n) + ": cycle is not an induced "
                  + std::to_string(t.n) + "-cycle");
      }
      if (!(t.a == Nat(0))) {
        violation("n=" + std::to_string(t.n) + ": a is not 0");
      }
      if (!(t.b < t.c)) {
        violation("n=" + std::to_string(t.n) + ": c does not lie above b");
      }
      for (std::uint64_t x : t.cycle) {
        if (Nat(x) > t.b) {
          violation("n=" + std::to_string(t.n) + ": cycle vertex above b");
        }
      }
      // every v <= b lies below c, so v ~ c iff bit v of c is set
      for (Nat const& pos : t.c.positions()) {
        if (pos <= t.b) {
          if (!pos.is_small()) {
            violation("n=" + std::to_string(t.n)
                      + ": neighbourhood vertex beyond 64-bit range");
            continue;
          }
          tc.neighbourhood.push_back(pos.small());
        }
      }
      std::sort(tc.neighbourhood.begin(), tc.neighbourhood.end());
      std::vector<std::uint64_t> cyc = t.cycle;
      std::sort(cyc.begin(), cyc.end());
      tc.neighbourhood_exact = tc.neighbourhood == cyc;
      if (!tc.neighbourhood_exact) {
        violation("n=" + std::to_string(t.n)
                  + ": c is not adjacent to exactly the cycle below b");
      }
      for (std::size_t i = 3; i < t.n; ++i) {
        std::size_t const found = count_induced_cycles(tc.neighbourhood, i);
        tc.smaller_cycles[i]    = found;
        if (found != 0) {
          violation("n=" + std::to_string(t.n) + ": induced "
                    + std::to_string(i) + "-cycle adjacent to c");
        }
      }
      if (q + 1 < triples.size() && !(t.c < triples[q + 1].b)) {
        rep.monotone = false;
        violation("n=" + std::to_string(t.n) + ": c_n is not below b_(n+1)");
      }
      nbhd.push_back(tc.neighbourhood);
      rep.triples.push_back(std::move(tc));
    }
    for (std::size_t p = 0; p < triples.size(); ++p) {
      for (std::size_t q = p + 1; q < triples.size(); ++q) {
        PairObstruction po;
        po.from_n       = triples[p].n;
        po.to_n         = triples[q].n;
        po.images_found = count_induced_cycles(nbhd[q], triples[p].n);
        po.obstructed   = po.images_found == 0;
        if (!po.obstructed) {
          violation("pair " + std::to_string(po.from_n) + " -> "
                    + std::to_string(po.to_n) + " is not obstructed");
        }
        rep.pairs.push_back(po);
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite graphs
  ////////////////////////////////////////////////////////////////////////

  void FiniteGraph::add_edge(std::uint64_t u, std::uint64_t v) {
    if (u == v) {
      throw InputError("loops are not allowed");
    }
    vertices.insert(u);
    vertices.insert(v);
    edges.insert(u < v ? std::pair{u, v} : std::pair{v, u});
  }

  FiniteGraph FiniteGraph::induced_bit(std::set<std::uint64_t> const& vs) {
    FiniteGraph g;
    g.vertices = vs;
    for (auto u = vs.begin(); u != vs.end(); ++u) {
      for (auto v = std::next(u); v != vs.end(); ++v) {
        if (adjacent(*u, *v)) {
          g.edges.emplace(*u, *v);
        }
      }
    }
    return g;
  }

  FiniteGraph free_amalgam_graphs(FiniteGraph const&             base,
                                  FiniteGraph const&             ext,
                                  std::set<std::uint64_t> const& common) {
    for (std::uint64_t v : common) {
      if (!base.vertices.count(v) || !ext.vertices.count(v)) {
        throw InputError("common vertex " + std::to_string(v)
                         + " missing from a factor");
      }
    }
    for (std::uint64_t v : ext.vertices) {
      if (base.vertices.count(v) && !common.count(v)) {
        throw InputError("vertex " + std::to_string(v)
                         + " occurs in both factors outside the common part");
      }
    }
    for (auto u = common.begin(); u != common.end(); ++u) {
      for (auto v = std::next(u); v != common.end(); ++v) {
        if (base.has_edge(*u, *v) != ext.has_edge(*u, *v)) {
          throw InputError("common part induces different subgraphs");
        }
      }
    }
    FiniteGraph out = base;
    out.vertices.insert(ext.vertices.begin(), ext.vertices.end());
    out.edges.insert(ext.edges.begin(), ext.edges.end());
    return out;
  }

}  // namespace azbench
