#include <doctest.h>

#include <random>

#include "azbench/error.hpp"
#include "azbench/io.hpp"
#include "azbench/rado.hpp"
#include "oracles.hpp"

using namespace azbench;

namespace {
  std::vector<std::uint64_t> upto(std::uint64_t p) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t x = 0; x <= p; ++x) {
      v.push_back(x);
    }
    return v;
  }

  // The least c > b whose neighbourhood in {0..b} is exactly `cycle`.
  std::uint64_t naive_c(std::uint64_t b, std::vector<std::uint64_t> const& cycle) {
    for (std::uint64_t c = b + 1;; ++c) {
      bool ok = true;
      for (std::uint64_t v = 0; v <= b && ok; ++v) {
        bool const want = std::find(cycle.begin(), cycle.end(), v) != cycle.end();
        ok              = oracle::bit_edge(v, c) == want;
      }
      if (ok) {
        return c;
      }
    }
  }
}  // namespace

TEST_CASE("adjacency") {
  CHECK(adjacent(std::uint64_t{1}, std::uint64_t{3}));
  CHECK_FALSE(adjacent(std::uint64_t{0}, std::uint64_t{2}));
  CHECK(adjacent(std::uint64_t{3}, std::uint64_t{1}));
  CHECK_THROWS_AS(adjacent(std::uint64_t{4}, std::uint64_t{4}), InputError);
  CHECK(adjacent(Nat(5), Nat::pow2(Nat(5))));
  CHECK_FALSE(adjacent(Nat(4), Nat::pow2(Nat(5))));
  CHECK(adjacent(Nat(70), Nat::pow2(Nat(70))));
  CHECK_FALSE(adjacent(Nat(7), Nat::pow2(Nat(70))));
  for (std::uint64_t u = 0; u < 70; ++u) {
    for (std::uint64_t v = 0; v < 70; ++v) {
      if (u != v) {
        CHECK(adjacent(u, v) == oracle::bit_edge(u, v));
        CHECK(adjacent(Nat(u), Nat(v)) == oracle::bit_edge(u, v));
      }
    }
  }
}

TEST_CASE("nat arithmetic") {
  Nat const big = Nat::pow2(Nat(80));
  CHECK_FALSE(big.is_small());
  CHECK(big > Nat(~std::uint64_t{0} >> 1));
  CHECK(big.bit(Nat(80)));
  CHECK_FALSE(big.bit(Nat(79)));
  CHECK(big.positions() == std::vector<Nat>{Nat(80)});
  CHECK(Nat::pow2(Nat(10)) == Nat(1024));
  CHECK(Nat(1023).successor() == Nat(1024));
  Nat const top = Nat::pow2(Nat(63));
  CHECK(Nat((std::uint64_t{1} << 63) - 1).successor() == top);
  CHECK(top.successor().bit(Nat(0)));
  Nat const s = Nat::disjoint_sum(big, Nat(5));
  CHECK(s.bit(Nat(0)));
  CHECK(s.bit(Nat(2)));
  CHECK(s.bit(Nat(80)));
  CHECK(s > big);
  CHECK(s < Nat::pow2(Nat(81)));
  CHECK_THROWS_AS(Nat::disjoint_sum(Nat(3), Nat(1)), Error);
  CHECK(Nat(12345).to_string() == "12345");
  CHECK(s.to_string() == "2^80 + 5");
  Nat const tower = Nat::pow2(Nat::pow2(Nat(70)));
  CHECK(tower.bit(Nat::pow2(Nat(70))));
  CHECK(tower > s);
  CHECK(tower.to_string() == "2^(2^70)");
  for (Nat const& x : {Nat(0), Nat(77), s, tower, Nat::disjoint_sum(tower, big), top}) {
    CHECK(io::parse_nat(x.to_string()) == x);
  }
  CHECK_THROWS_AS(io::parse_nat("2^"), InputError);
  CHECK_THROWS_AS(io::parse_nat("x"), InputError);

  // ordering agrees with integers on random small values
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    std::uint64_t const a = rng() >> 2, b = rng() >> (rng() % 60);
    CHECK(((Nat(a) <=> Nat(b)) == (a <=> b)));
  }
}

TEST_CASE("induced cycles in BIT prefixes") {
  CHECK(is_induced_cycle({0, 1, 2, 5}));
  CHECK_FALSE(is_induced_cycle({0, 1, 2, 3}));
  CHECK(oracle::is_cycle_set({0, 1, 2, 5}));
  for (std::size_t n = 4; n <= 6; ++n) {
    auto const [p, cycle] = minimal_cycle_prefix(n);
    CAPTURE(n);
    CHECK(is_induced_cycle(cycle));
    CHECK(cycle.size() == n);
    CHECK(*std::max_element(cycle.begin(), cycle.end()) == p);
    CHECK_FALSE(oracle::induced_cycles(upto(p), n).empty());
    CHECK(oracle::induced_cycles(upto(p - 1), n).empty());
    // the least vertex set among the cycles of the prefix
    auto const all = oracle::induced_cycles(upto(p), n);
    std::vector<std::uint64_t> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == *std::min_element(all.begin(), all.end()));
    CHECK(least_induced_cycle(n, p) == cycle);
    CHECK(least_induced_cycle(n, p - 1).empty());
  }
  CHECK(minimal_cycle_prefix(4).first == 5);
  CHECK(minimal_cycle_prefix(5).first == 12);
  CHECK(minimal_cycle_prefix(6).first == 17);
  CHECK(minimal_cycle_prefix(4).second == std::vector<std::uint64_t>{0, 1, 2, 5});
  for (std::size_t i = 3; i <= 6; ++i) {
    auto const v = upto(18);
    CHECK(count_induced_cycles(v, i) == oracle::induced_cycles(v, i).size());
  }
}

TEST_CASE("triples") {
  std::vector<Triple> const ts = build_triples(6);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].n == 4);
  CHECK(ts[0].a == Nat(0));
  CHECK(ts[0].b == Nat(5));
  CHECK(ts[0].c == Nat(39));
  CHECK(ts[0].cycle == std::vector<std::uint64_t>{0, 1, 2, 5});
  CHECK(ts[0].minimal_prefix == 5);
  CHECK(ts[1].b == Nat(40));
  CHECK(ts[1].c == Nat(4141));
  CHECK(ts[1].minimal_prefix == 12);
  CHECK(ts[2].b == Nat(4142));
  CHECK(ts[2].c == Nat(135197));
  CHECK(ts[2].minimal_prefix == 17);
  // b_n is the first vertex after c_{n-1} whose prefix holds a cycle; c_n
  // by naive scanning
  Nat prev(0);
  for (Triple const& t : ts) {
    CAPTURE(t.n);
    REQUIRE(t.b.is_small());
    CHECK(t.b == std::max(prev.successor(), Nat(t.minimal_prefix)));
    CHECK(is_induced_cycle(t.cycle));
    CHECK(t.c.small() == naive_c(t.b.small(), t.cycle));
    prev = t.c;
  }
  // c_4's neighbourhood in {0..5}: 39 = 2^0 + 2^1 + 2^2 + 2^5
  CHECK(39 == 1 + 2 + 4 + 32);
}

TEST_CASE("obstruction") {
  std::vector<Triple> const ts = build_triples(8);
  REQUIRE(ts.size() == 5);
  CHECK(ts[3].minimal_prefix == 48);
  CHECK(ts[3].cycle == std::vector<std::uint64_t>{1, 3, 40, 5, 48, 4, 18});
  CHECK(ts[4].minimal_prefix == 80);
  CHECK(ts[4].c.to_string() == "2^80 + 2^72 + 281474976710777");
  ObstructionReport const rep = check_obstruction(ts);
  CHECK(rep.ok);
  CHECK(rep.monotone);
  CHECK(rep.violations.empty());
  REQUIRE(rep.triples.size() == 5);
  for (TripleCheck const& tc : rep.triples) {
    CAPTURE(tc.n);
    CHECK(tc.cycle_induced);
    CHECK(tc.neighbourhood_exact);
    CHECK(tc.neighbourhood.size() == tc.n);
    CHECK(tc.smaller_cycles.size() == tc.n - 3);
    for (auto const& [i, count] : tc.smaller_cycles) {
      CHECK(i > 2);
      CHECK(i < tc.n);
      CHECK(count == 0);
    }
  }
  CHECK(rep.pairs.size() == 10);
  for (PairObstruction const& p : rep.pairs) {
    CHECK(p.from_n < p.to_n);
    CHECK(p.obstructed);
    CHECK(p.images_found == 0);
  }

  // the n = 4 neighbourhood holds no triangle, by the oracle
  CHECK(oracle::induced_cycles(rep.triples[0].neighbourhood, 3).empty());
  CHECK(oracle::induced_cycles(rep.triples[1].neighbourhood, 4).empty());
  CHECK(oracle::induced_cycles(rep.triples[1].neighbourhood, 3).empty());

  ObstructionReport const one = check_obstruction(build_triples(4));
  CHECK(one.ok);
  CHECK(one.pairs.empty());

  // a tampered triple is caught
  std::vector<Triple> bad = build_triples(5);
  bad[1].c                = Nat(4141 + (1u << 20));
  // same neighbourhood below b, but not the least such vertex
  CHECK_FALSE(check_obstruction(bad).ok);
  bad[1].c = Nat(4140);
  ObstructionReport const wrong = check_obstruction(bad);
  CHECK_FALSE(wrong.ok);
  CHECK_FALSE(wrong.violations.empty());
}

TEST_CASE("json round trip of triples") {
  std::vector<Triple> const ts   = build_triples(8);
  auto const                back = io::triples_from_json(io::triples_to_json(ts, check_obstruction(ts)));
  REQUIRE(back.size() == ts.size());
  for (std::size_t q = 0; q < ts.size(); ++q) {
    CHECK(back[q].n == ts[q].n);
    CHECK(back[q].b == ts[q].b);
    CHECK(back[q].c == ts[q].c);
    CHECK(back[q].cycle == ts[q].cycle);
  }
}

TEST_CASE("free amalgams") {
  FiniteGraph const base = FiniteGraph::induced_bit({0, 1, 2, 5, 7});
  FiniteGraph       ext;
  ext.vertices = {0, 1, 2, 5, 100};
  for (auto const& e : FiniteGraph::induced_bit({0, 1, 2, 5}).edges) {
    ext.add_edge(e.first, e.second);
  }
  for (std::uint64_t x : {0, 1, 2, 5}) {
    ext.add_edge(x, 100);
  }
  FiniteGraph const am = free_amalgam_graphs(base, ext, {0, 1, 2, 5});
  CHECK(am.vertices.size() == 6);
  CHECK(am.has_edge(0, 100));
  CHECK_FALSE(am.has_edge(7, 100));
  CHECK(am.has_edge(0, 7) == oracle::bit_edge(0, 7));
  CHECK(am.edges.size() == base.edges.size() + 4);

  FiniteGraph wrong = ext;
  wrong.add_edge(0, 2);
  CHECK_THROWS_AS(free_amalgam_graphs(base, wrong, {0, 1, 2, 5}), InputError);
  CHECK_THROWS_AS(free_amalgam_graphs(base, ext, {0, 1, 2, 5, 9}), InputError);
  FiniteGraph other = ext;
  other.vertices.insert(7);
  CHECK_THROWS_AS(free_amalgam_graphs(base, other, {0, 1, 2, 5}), InputError);
}
