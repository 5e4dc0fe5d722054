// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "azbench/automorphisms.hpp"
#include "azbench/az_engine.hpp"
#include "azbench/error.hpp"
#include "azbench/quadratic.hpp"
#include "azbench/rado.hpp"
#include "azbench/wqo.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace azbench;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  // Counts checks and failures; the first failure is kept for the report.
  struct Tally {
    std::size_t checks   = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool cond, std::string const& what) {
      ++checks;
      if (!cond) {
        if (failures++ == 0) {
          first = what;
        }
      }
    }
    Outcome outcome(std::string summary) const {
      if (failures == 0) {
        return {true, summary + ", " + std::to_string(checks) + " checks"};
      }
      return {false, std::to_string(failures) + " of " + std::to_string(checks)
                         + " checks failed, first: " + first};
    }
  };

  CPContext c4k() {
    std::vector<int> const k{0, 2};
    return CPContext(make_kgroup(cyclic_group(4), k));
  }

  CPContext q8k() {
    std::vector<int> const k{0, 1};
    return CPContext(make_kgroup(quaternion_group(), k));
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome round_trip() {
    Tally       t;
    std::size_t groups = 0;
    for (CatalogEntry const& e : bundled_groups()) {
      GroupTable const& g = e.group;
      if (g.order() > 32 || !is_class_csw(g)) {
        continue;
      }
      ++groups;
      GroupTable const back = group_from_qs(qs_from_group(g).qs);
      auto const       iso  = find_isomorphism(back, g);
      t.expect(iso.has_value(), g.name() + ": no isomorphism found");
      if (iso) {
        t.expect(is_homomorphism(back, g, *iso) && is_injective(*iso),
                 g.name() + ": returned map is not an isomorphism");
      }
    }
    t.expect(groups >= 5, "fewer than five class groups in the catalog");
    return t.outcome(std::to_string(groups) + " groups");
  }

  Outcome amalgams() {
    Tally           t;
    std::mt19937_64 rng(2024);
    for (int run = 0; run < 100; ++run) {
      unsigned const d0 = rng() % 3, v0 = d0 + 1 + rng() % 2;
      QuadraticStructure const q0 = gen::random_qs(rng, d0, v0);
      unsigned const           d1 = d0 + rng() % (5 - d0), d2 = d0 + rng() % (5 - d0);
      QuadraticStructure const q1 = gen::random_qs(rng, d1, v0 + d1 - d0 + rng() % 2, &q0);
      QuadraticStructure const q2 = gen::random_qs(rng, d2, v0 + d2 - d0 + rng() % 2, &q0);
      QSMorphism               e;
      for (unsigned i = 0; i < d0; ++i) {
        e.f.columns.push_back(unit(i));
      }
      for (unsigned i = 0; i < v0; ++i) {
        e.g.columns.push_back(unit(i));
      }
      QSAmalgam const   a   = free_amalgam(q0, q1, e, q2, e);
      std::string const tag = "amalgam " + std::to_string(run);
      t.expect(a.qs.dim_u() == d1 + d2 - d0, tag + ": dim U");
      t.expect(a.qs.dim_v() == q1.dim_v() + q2.dim_v() - v0 + (d1 - d0) * (d2 - d0),
               tag + ": dim V formula");
      t.expect(is_nondegenerate(a.qs), tag + ": degenerate");
      for (auto const& [qi, into] : {std::pair{&q1, &a.into1}, std::pair{&q2, &a.into2}}) {
        t.expect(is_injective(*into), tag + ": embedding not injective");
        bool same = true;
        for (Bits u = 0; u < (Bits{1} << qi->dim_u()); ++u) {
          same &= into->g(qi->q(u)) == a.qs.q(into->f(u));
        }
        t.expect(same, tag + ": Q does not restrict to Q_i");
      }
      t.expect(compose(a.into1, e) == compose(a.into2, e), tag + ": square does not commute");
    }
    return t.outcome("100 amalgams");
  }

  Outcome beta_star() {
    Tally t;
    for (CPContext const& ctx : {c4k(), q8k()}) {
      BetaStar b;
      for (Coord c = 0; c < ctx.exponent() + 2; ++c) {
        b.coords.push_back(c);
      }
      std::size_t const   M    = b.coords.size();
      std::uint64_t const size = ctx.order_of_gamma_n(M);
      std::string const   name = ctx.group().name();
      for (CPElement const& x : ctx.enumerate(size)) {
        t.expect(apply_beta_star(ctx, b, apply_beta_star(ctx, b, x)) == x,
                 name + ": not self-inverse");
      }
      for (Elem k : ctx.kg().k()) {
        t.expect(apply_beta_star(ctx, b, ctx.embed_k(k)) == ctx.embed_k(k),
                 name + ": moves an element of K");
      }
      bool const      small = ctx.group().order() == 4;
      AutReport const rep   = verify_automorphism(ctx, AutWord{b}, M, small ? 16384 : 100000, 7);
      t.expect(rep.ok, name + ": " + rep.failure);
      if (small) {
        t.expect(size == 128 && rep.exhaustive_pairs && rep.pairs_checked == 16384,
                 "C4: pairs not exhaustive");
      } else {
        t.expect(size == 8192 && rep.pairs_checked == 100000, "Q8: sample size");
      }
      t.checks += rep.pairs_checked;
    }
    return t.outcome("C4 exhaustive, Q8 sampled");
  }

  Outcome enumeration() {
    Tally           t;
    CPContext const ctx = c4k();
    // |Gamma_2| = 8, |Gamma_3| = 16, |Gamma_4| = 32
    for (std::size_t n = 2; n <= 4; ++n) {
      auto const                   want = oracle::sorted_cosets(ctx.kg(), n);
      std::vector<CPElement> const got  = ctx.enumerate(want.size());
      t.expect(want.size() == ctx.order_of_gamma_n(n), "coset count");
      for (std::size_t q = 0; q < want.size(); ++q) {
        auto r = ctx.minimal_representative(got[q]);
        r.resize(n, ctx.group().identity());
        t.expect(r == want[q], "enumeration position " + std::to_string(q) + " of Gamma_"
                                   + std::to_string(n));
      }
    }
    for (oracle::Tuple const& tup : oracle::all_tuples(ctx.group(), 3)) {
      auto r = ctx.minimal_representative(ctx.from_tuple(tup));
      r.resize(3, ctx.group().identity());
      t.expect(r == oracle::min_rep(ctx.kg(), tup), "minimal representative");
    }
    return t.outcome("first 8, 16 and 32 elements; all 64 tuples of length 3");
  }

  ////////////////////////////////////////////////////////////////////////

  // Index of a word over 3 letters among all words of length <= 8.
  std::size_t word_code(Word const& w) {
    std::size_t offset = 0, p3 = 1;
    for (std::size_t n = 0; n < w.size(); ++n) {
      offset += p3;
      p3 *= 3;
    }
    std::size_t v = 0;
    for (Letter a : w) {
      v = v * 3 + a;
    }
    return offset + v;
  }

  Outcome wqo() {
    Tally t;
    // all words of length <= 8 over {0, 1, 2}
    std::vector<Word> words{Word{}};
    for (std::size_t q = 0; q < words.size(); ++q) {
      if (words[q].size() < 8) {
        for (Letter a = 0; a < 3; ++a) {
          Word w = words[q];
          w.push_back(a);
          words.push_back(w);
        }
      }
    }
    t.expect(words.size() == 9841, "word list");
    std::size_t pairs = 0, embedded = 0;
    std::vector<char> star(words.size());
    for (Word const& w2 : words) {
      // brute force: every position subset that covers w2, read off
      std::fill(star.begin(), star.end(), 0);
      std::size_t const m = w2.size();
      for (std::uint32_t s = 0; s < (1u << m); ++s) {
        Word                     w1;
        std::vector<std::size_t> f;
        for (std::size_t q = 0; q < m; ++q) {
          if (s >> q & 1) {
            w1.push_back(w2[q]);
            f.push_back(q);
          }
        }
        if (oracle::star_valid(w1, w2, f)) {
          star[word_code(w1)] = 1;
        }
      }
      for (std::size_t c = 0; c < words.size() && words[c].size() <= m; ++c) {
        Word const& w1 = words[c];
        ++pairs;
        auto const e = is_star_embedded(w1, w2);
        if (e.has_value() != static_cast<bool>(star[c])) {
          t.expect(false, "DP disagrees with brute force");
        }
        if (e) {
          ++embedded;
          if (!is_star_embedding(w1, w2, *e) || !oracle::star_valid(w1, w2, *e)) {
            t.expect(false, "DP witness invalid");
          }
        }
      }
    }
    t.checks += pairs;

    std::mt19937_64 rng(55);
    auto random_word = [&](std::size_t lo, std::size_t hi, Letter k) {
      Word w(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
      for (auto& a : w) {
        a = Letter(rng() % k);
      }
      return w;
    };
    for (int q = 0; q < 10000; ++q) {
      Letter const k  = Letter(2 + rng() % 3);
      Word const   w2 = random_word(9, 16, k);
      Word         w1;
      if (q % 2 == 0) {
        for (Letter a : w2) {
          if (rng() % 3 != 0 && w1.size() < 10) {
            w1.push_back(a);
          }
        }
      } else {
        w1 = random_word(1, 8, k);
      }
      auto const e = is_star_embedded(w1, w2);
      t.expect(e.has_value() == oracle::star_embeds(w1, w2), "random pair");
      if (e) {
        t.expect(oracle::star_valid(w1, w2, *e), "random pair witness");
      }
    }

    std::size_t worst = 0;
    for (int run = 0; run < 100; ++run) {
      Letter const k = Letter(2 + run % 4);
      for (PairMode mode : {PairMode::higman, PairMode::star}) {
        std::vector<Word> seen;
        WordStream        stream = [&]() -> std::optional<Word> {
          seen.push_back(random_word(1, 4 + seen.size() % 12, k));
          return seen.back();
        };
        auto const p = find_increasing_pair(stream, mode, 10000);
        t.expect(p.has_value(), "stream hit the cap");
        if (!p) {
          continue;
        }
        worst = std::max(worst, p->words_read);
        t.expect(p->i < p->j && p->j < seen.size(), "pair indices");
        t.expect(mode == PairMode::star ? oracle::star_valid(seen[p->i], seen[p->j], p->f)
                                        : is_subword_embedding(seen[p->i], seen[p->j], p->f),
                 "stream witness");
      }
    }
    t.expect(worst < 1000, "a stream needed " + std::to_string(worst) + " words");

    // decoded coding witnesses on explicit streams
    std::size_t decoded = 0;
    for (int run = 0; run < 300; ++run) {
      std::vector<Word> ws;
      for (int q = 0; q < 30; ++q) {
        ws.push_back(random_word(1, 9, 2 + run % 2));
      }
      auto const p = find_increasing_pair(ws, PairMode::star);
      if (p) {
        ++decoded;
        t.expect(oracle::star_valid(ws[p->i], ws[p->j], p->f), "decoded witness");
      }
    }
    t.expect(decoded > 100, "too few decoded witnesses");
    std::ostringstream s;
    s << pairs << " exhaustive pairs (" << embedded << " embedded), 10000 random, 100 streams"
      << " (longest " << worst << " words), " << decoded << " decoded witnesses";
    return t.outcome(s.str());
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome az_end_to_end() {
    Tally           t;
    CPContext const ctx = q8k();
    std::mt19937_64 rng(314);
    int             green = 0, attempts = 0, insufficient = 0;
    while (green < 50 && attempts < 1000) {
      ++attempts;
      gen::Family const fam = gen::random_family(ctx, rng, 4, 12, rng() % 4);
      AzOptions         opt;
      opt.depth                    = 500;
      opt.random_pairs_per_element = 10;
      opt.seed                     = std::uint64_t(attempts);
      AzCertificate cert;
      try {
        cert = run_az(ctx, fam.members, opt);
      } catch (InsufficientFamily const&) {
        ++insufficient;
        continue;
      }
      std::string const tag = "family " + std::to_string(attempts);
      t.expect(cert.ok, tag + ": " + cert.failure);
      t.expect(cert.maps_tuple, tag + ": a_i not mapped to a_j");
      t.expect(cert.order_checks >= 499 + 4000, tag + ": too few order checks");
      t.expect(cert.agreement_checks > 0, tag + ": no agreement checks");
      for (std::size_t c = 0; c < 4; ++c) {
        t.expect(apply_beta(ctx, cert.beta, fam.members[cert.beta.i][c])
                     == fam.members[cert.beta.j][c],
                 tag + ": mismatch at component " + std::to_string(c));
      }
      green += cert.ok;
    }
    t.expect(green == 50, "only " + std::to_string(green) + " green certificates");
    return t.outcome(std::to_string(green) + " green of " + std::to_string(attempts - insufficient)
                     + " runs, " + std::to_string(insufficient) + " short families skipped");
  }

  Outcome rado() {
    Tally                     t;
    std::vector<Triple> const ts = build_triples(8);
    t.expect(ts.size() == 5, "triple count");
    // oracle: least prefix with an induced 4-cycle and least exact neighbour
    std::uint64_t p = 3;
    std::vector<std::vector<std::uint64_t>> cycles;
    for (;; ++p) {
      std::vector<std::uint64_t> pre;
      for (std::uint64_t x = 0; x <= p; ++x) {
        pre.push_back(x);
      }
      cycles = oracle::induced_cycles(pre, 4);
      if (!cycles.empty()) {
        break;
      }
    }
    std::vector<std::uint64_t> const cyc = *std::min_element(cycles.begin(), cycles.end());
    std::uint64_t                    c   = p + 1;
    for (;; ++c) {
      bool exact = true;
      for (std::uint64_t v = 0; v <= p; ++v) {
        exact &= oracle::bit_edge(v, c) == std::count(cyc.begin(), cyc.end(), v);
      }
      if (exact) {
        break;
      }
    }
    t.expect(p == 5 && c == 39, "oracle disagrees with the expected (5, 39)");
    if (!ts.empty()) {
      std::vector<std::uint64_t> got = ts[0].cycle;
      std::sort(got.begin(), got.end());
      t.expect(ts[0].b == Nat(p) && ts[0].c == Nat(c) && got == cyc, "n = 4 triple");
    }
    ObstructionReport const rep = check_obstruction(ts);
    t.expect(rep.ok && rep.violations.empty(), "obstruction violated");
    t.expect(rep.pairs.size() == 10, "pair count");
    for (PairObstruction const& po : rep.pairs) {
      t.expect(po.obstructed, "pair not obstructed");
    }
    return t.outcome("(b4, c4) = (5, 39), c8 = " + (ts.empty() ? "?" : ts.back().c.to_string())
                     + ", " + std::to_string(rep.pairs.size()) + " pairs obstructed");
  }

}  // namespace

int main() {
  struct Criterion {
    int                      id;
    char const*              name;
    double                   limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "correspondence round trip", 60, round_trip},
      {2, "free amalgam", 60, amalgams},
      {3, "beta* properties", 120, beta_star},
      {4, "enumeration", 60, enumeration},
      {5, "wqo", 600, wqo},
      {6, "az end-to-end", 600, az_end_to_end},
      {7, "rado adversary", 60, rado},
  };
  int failed = 0;
  for (Criterion const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o = {false, o.detail + ", over the " + std::to_string(int(c.limit_s)) + " s limit"};
    }
    std::printf("%s %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
