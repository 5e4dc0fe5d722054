#include <doctest.h>

#include <random>
#include <set>

#include "azbench/central_product.hpp"
#include "azbench/error.hpp"
#include "oracles.hpp"

using namespace azbench;

namespace {
  CPContext c4k() {
    std::vector<int> const k{0, 2};
    return CPContext(make_kgroup(cyclic_group(4), k));
  }

  CPContext q8k() {
    std::vector<int> const k{0, 1};
    return CPContext(make_kgroup(quaternion_group(), k));
  }

  std::vector<CPContext> contexts() {
    std::vector<CPContext> out{c4k(), q8k()};
    std::vector<int> const all{0, 1};
    out.emplace_back(make_kgroup(cyclic_group(2), all));
    std::vector<int> const one{0};
    out.emplace_back(make_kgroup(direct_product(cyclic_group(2), cyclic_group(2)), one));
    std::vector<int> const c4k2{0, 2};
    out.emplace_back(make_kgroup(cyclic_group(4), c4k2, std::vector<int>{0, 3, 2, 1}));
    // order 16 with |K| = 4
    auto const&            big = bundled_group("Q8xC2");
    std::vector<int> const z{0, 1, 2, 3};
    out.emplace_back(make_kgroup(big.group, z));
    return out;
  }

  // Pads a minimal representative to length n.
  oracle::Tuple padded(CPContext const& ctx, CPElement const& x, std::size_t n) {
    auto r = ctx.minimal_representative(x);
    r.resize(n, ctx.group().identity());
    return r;
  }
}  // namespace

TEST_CASE("element examples") {
  CPContext const ctx = c4k();
  CHECK(ctx.make({{0, 2}, {1, 2}}) == ctx.identity());
  CHECK(ctx.multiply(ctx.make({{0, 1}}), ctx.make({{0, 1}})) == ctx.make({{0, 2}}));
  CHECK(ctx.make({{0, 2}}) == ctx.embed_k(2));
  CHECK(ctx.inverse(ctx.identity()) == ctx.identity());
  CHECK(ctx.embed_k(2) == ctx.make({{1, 2}}));
  CHECK(ctx.embed(0, 5) == ctx.identity());
  CHECK_THROWS_AS(ctx.embed_k(1), InputError);
  CHECK_THROWS_AS(ctx.make({{0, 9}}), InputError);
  CHECK_THROWS_AS(ctx.make({{0, 1}, {0, 2}}), InputError);
}

TEST_CASE("distinct coordinates commute") {
  for (CPContext const& ctx : {c4k(), q8k()}) {
    std::size_t const n = ctx.group().order();
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        CPElement const a = ctx.embed(Elem(g), 0), b = ctx.embed(Elem(h), 1);
        CHECK(ctx.multiply(a, b) == ctx.multiply(b, a));
      }
    }
  }
}

TEST_CASE("minimal representative examples") {
  CPContext const ctx = c4k();
  CHECK(ctx.minimal_representative(ctx.make({{0, 3}, {1, 3}})) == std::vector<Elem>{1, 1});
  CHECK(ctx.minimal_representative(ctx.identity()).empty());
  // K-mass is absorbed at coordinate 0, the reverse-lex least place
  CHECK(ctx.minimal_representative(ctx.make({{3, 2}})) == std::vector<Elem>{2});
}

TEST_CASE("compare examples") {
  CPContext const ctx = c4k();
  CHECK(ctx.compare(ctx.identity(), ctx.make({{0, 1}})) < 0);
  CHECK(ctx.compare(ctx.make({{0, 1}}), ctx.make({{1, 1}})) < 0);
  CPElement const x = ctx.make({{0, 1}, {2, 3}});
  CHECK(ctx.compare(x, x) == 0);
  CHECK(ctx.highest_difference(x, x) == std::nullopt);
  CHECK(ctx.highest_difference(ctx.identity(), ctx.make({{1, 1}})) == Coord{1});
  CHECK_THROWS_AS(ctx.compare(x, q8k().identity()), InputError);
}

TEST_CASE("enumeration examples") {
  CPContext const ctx = c4k();
  auto const      v   = ctx.enumerate(8);
  std::vector<std::vector<Elem>> const want{{},     {1},    {2},    {3},
                                            {0, 1}, {1, 1}, {2, 1}, {3, 1}};
  for (std::size_t q = 0; q < 8; ++q) {
    CHECK(ctx.minimal_representative(v[q]) == want[q]);
  }
  std::vector<int> const all{0, 1};
  CPContext const        c2(make_kgroup(cyclic_group(2), all));
  CHECK(c2.order_of_gamma_n(7) == 2);
  CHECK_THROWS_AS(c2.element_at(2), CapacityError);
  CHECK(ctx.order_of_gamma_n(2) == 8);
  CHECK(ctx.order_of_gamma_n(1) == 4);
  CHECK(q8k().order_of_gamma_n(6) == 8192);
  CHECK_THROWS_AS(ctx.order_of_gamma_n(0), InputError);
  CHECK_THROWS_AS(ctx.order_of_gamma_n(80), CapacityError);
  CPEnumerator e(ctx);
  CHECK(e.next() == ctx.identity());
  CHECK(e.next() == v[1]);
  CHECK(e.position() == 2);
}

TEST_CASE("enumeration equals the brute-force sorted coset list") {
  for (CPContext const& ctx : contexts()) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::uint64_t const size = ctx.order_of_gamma_n(n);
      if (size > 512) {
        break;
      }
      CAPTURE(ctx.group().name());
      CAPTURE(n);
      auto const brute = oracle::sorted_cosets(ctx.kg(), n);
      REQUIRE(brute.size() == size);
      auto const v = ctx.enumerate(size);
      for (std::size_t q = 0; q < size; ++q) {
        REQUIRE(padded(ctx, v[q], n) == brute[q]);
        CHECK(ctx.index_of(v[q]) == q);
        CHECK(v[q].length() <= n);
      }
    }
  }
}

TEST_CASE("minimal representative equals the coset minimum") {
  for (CPContext const& ctx : contexts()) {
    std::size_t const n = ctx.group().order() <= 8 ? 3 : 2;
    for (auto const& t : oracle::all_tuples(ctx.group(), n)) {
      CPElement const x = ctx.from_tuple(t);
      REQUIRE(padded(ctx, x, n) == oracle::min_rep(ctx.kg(), t));
      // the representative lies in the coset
      CHECK(ctx.from_tuple(padded(ctx, x, n)) == x);
      CHECK(ctx.from_tuple(ctx.representative(x)) == x);
    }
  }
}

TEST_CASE("canonical products match tuple products") {
  for (CPContext const& ctx : contexts()) {
    std::size_t const n = 2;
    auto const        ts = oracle::all_tuples(ctx.group(), n);
    for (auto const& a : ts) {
      for (auto const& b : ts) {
        CPElement const x = ctx.from_tuple(a), y = ctx.from_tuple(b);
        REQUIRE(ctx.multiply(x, y) == ctx.from_tuple(oracle::times(ctx.group(), a, b)));
      }
      CPElement const x = ctx.from_tuple(a);
      CHECK(ctx.multiply(x, ctx.inverse(x)) == ctx.identity());
      // canonicalization is idempotent
      CHECK(ctx.from_tuple(ctx.representative(x)) == x);
    }
  }
}

TEST_CASE("equal iff same coset") {
  CPContext const ctx = q8k();
  auto const      ts  = oracle::all_tuples(ctx.group(), 2);
  auto const      ker = oracle::kernel(ctx.kg(), 2);
  for (std::size_t p = 0; p < ts.size(); p += 3) {
    for (std::size_t q = 0; q < ts.size(); ++q) {
      bool same = false;
      for (auto const& k : ker) {
        same |= oracle::times(ctx.group(), ts[p], k) == ts[q];
      }
      CHECK((ctx.from_tuple(ts[p]) == ctx.from_tuple(ts[q])) == same);
    }
  }
}

TEST_CASE("compare is a strict total order") {
  std::mt19937_64 rng(21);
  for (CPContext const& ctx : contexts()) {
    auto rnd = [&] {
      std::vector<Elem> t(6);
      for (auto& a : t) {
        a = Elem(rng() % ctx.group().order());
      }
      return ctx.from_tuple(t);
    };
    for (int s = 0; s < 2000; ++s) {
      CPElement const a = rnd(), b = rnd(), c = rnd();
      int const       ab = ctx.compare(a, b), ba = ctx.compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && ctx.compare(b, c) < 0) {
        CHECK(ctx.compare(a, c) < 0);
      }
      // the enumeration index is monotone
      CHECK((ctx.index_of(a) < ctx.index_of(b)) == (ab < 0));
      CHECK(ctx.element_at(ctx.index_of(a)) == a);
    }
  }
}

TEST_CASE("prefixes of the enumeration exhaust Gamma_n") {
  CPContext const ctx = q8k();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t const size = ctx.order_of_gamma_n(n);
    auto const          v    = ctx.enumerate(size);
    std::set<std::vector<Elem>> seen;
    for (auto const& x : v) {
      CHECK(x.length() <= n);
      seen.insert(ctx.minimal_representative(x));
    }
    CHECK(seen.size() == size);
    CHECK(ctx.element_at(size).length() == n + 1);
  }
}
