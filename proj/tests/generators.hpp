// Random inputs shared by the tests and the acceptance binary.
#ifndef AZBENCH_TESTS_GENERATORS_HPP_
#define AZBENCH_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "azbench/az_engine.hpp"
#include "azbench/quadratic.hpp"

namespace gen {

  using namespace azbench;

  // Q and gamma on the basis; entries listed in `fixed_u` x `fixed_u` and
  // Q on the first `fixed_u` vectors are copied from `base`.
  inline QuadraticStructure random_qs(std::mt19937_64&          rng,
                                      unsigned                  du,
                                      unsigned                  dv,
                                      QuadraticStructure const* base = nullptr) {
    unsigned const fixed_u = base ? base->dim_u() : 0;
    for (;;) {
      std::uniform_int_distribution<Bits> any(0, low_mask(dv));
      std::vector<Bits>                   q(du);
      std::vector<std::vector<Bits>>      g(du, std::vector<Bits>(du, 0));
      for (unsigned i = 0; i < du; ++i) {
        q[i] = i < fixed_u ? base->q_basis(i) : any(rng);
        for (unsigned j = 0; j < i; ++j) {
          g[i][j] = g[j][i] = i < fixed_u ? base->gamma_basis(i, j) : any(rng);
        }
      }
      QuadraticStructure qs(du, dv, q, g);
      if (is_nondegenerate(qs)) {
        return qs;
      }
    }
  }

  // A Q8 family member: `word` gives letter ids per coordinate, `columns`
  // maps ids to 4-tuples of group elements.
  inline CPTuple tuple_of(CPContext const&                      ctx,
                          std::vector<Letter> const&            word,
                          std::vector<std::vector<Elem>> const& columns) {
    std::size_t const arity = columns.front().size();
    CPTuple           t;
    for (std::size_t c = 0; c < arity; ++c) {
      Support s;
      for (std::size_t p = 0; p < word.size(); ++p) {
        Elem const a = columns[word[p]][c];
        if (a != ctx.group().identity()) {
          s.emplace_back(p, a);
        }
      }
      t.push_back(ctx.make(s));
    }
    return t;
  }

  struct Family {
    std::vector<CPTuple>           members;
    std::vector<std::vector<Elem>> columns;
    std::vector<Word>              words;
  };

  // Random families of `arity`-tuples with supports <= max_len. A base word
  // is followed by variants that insert m copies of a letter before its
  // last occurrence, so they share last-appearance order and residues and
  // the base *-embeds into each. Unrelated noise members are mixed in.
  // Entries at coordinates >= 1 are coset minima, so the columns are the
  // minimal representatives; column 0 may use any element.
  inline Family random_family(CPContext const& ctx,
                              std::mt19937_64& rng,
                              std::size_t      arity,
                              std::size_t      max_len,
                              std::size_t      noise) {
    unsigned const    m    = ctx.exponent();
    auto const&       mins = ctx.coset_minima();
    auto const&       all  = ctx.kg().element_order();
    Elem const        one  = ctx.group().identity();
    std::size_t const base_len
        = std::uniform_int_distribution<std::size_t>(2, max_len - m)(rng);
    Family fam;
    auto   column = [&](bool first) {
      std::vector<Elem> col(arity);
      for (auto& a : col) {
        a = first ? all[rng() % all.size()] : mins[rng() % mins.size()];
      }
      return col;
    };
    auto intern = [&](std::vector<Elem> const& col) {
      auto it = std::find(fam.columns.begin(), fam.columns.end(), col);
      if (it != fam.columns.end()) {
        return static_cast<Letter>(it - fam.columns.begin());
      }
      fam.columns.push_back(col);
      return static_cast<Letter>(fam.columns.size() - 1);
    };
    auto random_word = [&](std::size_t len) {
      // letters at coordinates >= 1 come from a small pool so they repeat
      std::vector<std::vector<Elem>> pool;
      for (int q = 0; q < 3; ++q) {
        pool.push_back(column(false));
      }
      Word w{intern(column(true))};
      for (std::size_t p = 1; p < len; ++p) {
        w.push_back(intern(pool[rng() % pool.size()]));
      }
      // a trivial final column would shorten the member
      if (fam.columns[w.back()] == std::vector<Elem>(arity, one)) {
        std::vector<Elem> col(arity, one);
        col[0]   = mins.back();
        w.back() = intern(col);
      }
      return w;
    };
    auto add = [&](Word const& w) {
      fam.words.push_back(w);
      fam.members.push_back(tuple_of(ctx, w, fam.columns));
    };

    for (std::size_t q = 0; q < noise; ++q) {
      add(random_word(std::uniform_int_distribution<std::size_t>(1, max_len)(rng)));
    }
    Word const base = random_word(base_len);
    add(base);
    std::size_t const variants = 1 + rng() % 2;
    for (std::size_t v = 0; v < variants; ++v) {
      // a letter at coordinate >= 1, inserted as a block before its last
      // occurrence (never at coordinate 0, which would change the column
      // there)
      std::size_t const at = 1 + rng() % (base.size() - 1);
      Letter const      h  = base[at];
      std::size_t       last = at;
      for (std::size_t p = at; p < base.size(); ++p) {
        if (base[p] == h) {
          last = p;
        }
      }
      std::size_t const where = 1 + rng() % last;
      Word              w(base.begin(), base.begin() + static_cast<long>(where));
      w.insert(w.end(), m, h);
      w.insert(w.end(), base.begin() + static_cast<long>(where), base.end());
      if (w.size() <= max_len) {
        add(w);
      }
    }
    if (fam.members.size() == noise + 1) {
      add(base);  // a repeat is the degenerate *-embedding
    }
    return fam;
  }

}  // namespace gen

#endif  // AZBENCH_TESTS_GENERATORS_HPP_
