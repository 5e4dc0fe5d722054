#ifndef AZBENCH_RADO_HPP_
#define AZBENCH_RADO_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace azbench {

  // Natural numbers as sets of bit positions, the positions themselves
  // being Nats. Values below 2^63 are stored directly. The adversary's
  // vertices grow like towers of exponents, so 64-bit integers run out
  // after a few rounds.
  class Nat {
   public:
    Nat() = default;
    Nat(std::uint64_t v);

    static Nat pow2(Nat const& e);

    bool is_small() const noexcept {
      return _big.empty();
    }
    std::uint64_t small() const noexcept {
      return _small;
    }

    // Bit positions in decreasing order.
    std::vector<Nat> positions() const;
    bool             bit(Nat const& position) const;

    Nat  successor() const;
    // Union of two numbers with no common bit positions.
    static Nat disjoint_sum(Nat const& a, Nat const& b);

    // Decimal below 2^63, otherwise a sum of powers of two.
    std::string to_string() const;

    std::strong_ordering operator<=>(Nat const& o) const;
    bool                 operator==(Nat const& o) const {
      return (*this <=> o) == 0;
    }

   private:
    static Nat from_positions(std::vector<Nat> desc);

    std::uint64_t    _small = 0;
    std::vector<Nat> _big;  // decreasing positions; non-empty iff >= 2^63
  };

  // u ~ v iff bit min(u,v) of max(u,v) is set. InputError for u == v.
  bool adjacent(Nat const& u, Nat const& v);
  bool adjacent(std::uint64_t u, std::uint64_t v);

  // (x_0, ..., x_{k-1}) with consecutive (cyclically) vertices adjacent and
  // all other pairs non-adjacent.
  bool is_induced_cycle(std::vector<std::uint64_t> const& cycle);

  struct Triple {
    std::size_t                n = 0;
    Nat                        a;
    Nat                        b;
    Nat                        c;
    std::vector<std::uint64_t> cycle;
    // Least p such that {0..p} holds an induced n-cycle.
    std::uint64_t minimal_prefix = 0;
  };

  // The induced n-cycle in {0..p} whose sorted vertex set is
  // lexicographically least, started at its least vertex and oriented
  // toward the smaller neighbour; empty if none.
  std::vector<std::uint64_t> least_induced_cycle(std::size_t n, std::uint64_t p);
  // Least prefix holding an induced n-cycle, with that cycle.
  std::pair<std::uint64_t, std::vector<std::uint64_t>> minimal_cycle_prefix(
      std::size_t n);

  // n = 4 .. max_n, starting from c_3 = 0. b_n is the first vertex after
  // c_{n-1} whose initial segment holds an induced n-cycle; c_n is the least
  // vertex above b_n adjacent to exactly the cycle among {0..b_n}.
  std::vector<Triple> build_triples(std::size_t max_n);

  struct TripleCheck {
    std::size_t                n = 0;
    bool                       cycle_induced = false;
    bool                       neighbourhood_exact = false;
    std::vector<std::uint64_t> neighbourhood;  // of c among {0..b}
    // For each 2 < i < n: induced i-cycles among the neighbourhood (must be 0).
    std::map<std::size_t, std::size_t> smaller_cycles;
  };

  struct PairObstruction {
    std::size_t from_n = 0;  // triple (a_i, b_i, c_i)
    std::size_t to_n   = 0;  // triple (a_j, b_j, c_j), to_n > from_n
    // The from_n-cycle would have to land in N(c_j) within {0..b_j} as an
    // induced from_n-cycle; the count of such cycles found there.
    std::size_t images_found = 0;
    bool        obstructed   = false;
  };

  struct ObstructionReport {
    bool                         ok        = true;
    bool                         monotone  = true;
    std::vector<TripleCheck>     triples;
    std::vector<PairObstruction> pairs;
    std::vector<std::string>     violations;
  };

  ObstructionReport check_obstruction(std::vector<Triple> const& triples);

  // Number of induced i-cycles (as vertex sets) inside `vertices`.
  std::size_t count_induced_cycles(std::vector<std::uint64_t> const& vertices,
                                   std::size_t                       i);

  struct FiniteGraph {
    std::set<std::uint64_t>                          vertices;
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // (u, v), u < v

    bool has_edge(std::uint64_t u, std::uint64_t v) const {
      return edges.count(u < v ? std::pair{u, v} : std::pair{v, u}) > 0;
    }
    void add_edge(std::uint64_t u, std::uint64_t v);
    // The BIT graph on the given vertices.
    static FiniteGraph induced_bit(std::set<std::uint64_t> const& vertices);
  };

  // Union over `common`; no new edges. InputError if `common` is not in both
  // graphs, induces different subgraphs, or the graphs share other vertices.
  FiniteGraph free_amalgam_graphs(FiniteGraph const&             base,
                                  FiniteGraph const&             ext,
                                  std::set<std::uint64_t> const& common);

}  // namespace azbench

#endif  // AZBENCH_RADO_HPP_
