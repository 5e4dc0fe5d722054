#ifndef AZBENCH_AZ_ENGINE_HPP_
#define AZBENCH_AZ_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "azbench/automorphisms.hpp"
#include "azbench/central_product.hpp"
#include "azbench/wqo.hpp"

namespace azbench {

  using CPTuple = std::vector<CPElement>;

  // Column t of a member is the tuple of its components' entries at t,
  // read off the minimal representatives.
  using Column = std::vector<Elem>;

  struct NormalizedFamily {
    std::size_t arity = 0;
    // Letter id -> column. Ids are assigned in order of first appearance.
    std::vector<Column> letters;
    // Letters of the kept members, in last-appearance order (h_0 .. h_r).
    std::vector<Letter> alphabet;
    // Indices into the input family, increasing.
    std::vector<std::size_t> kept;
    // One word per kept member: columns 0 .. l(a_k).
    std::vector<Word> words;
    // counts[k][s]: occurrences of alphabet[s] in words[k].
    std::vector<std::vector<std::size_t>> counts;

    // l(a_k) + 1 for kept member k (0 if every component is trivial).
    std::size_t word_length(std::size_t k) const {
      return words[k].size();
    }
  };

  // Minimal representatives, then bucketing by (last-appearance order,
  // letter counts mod the exponent); the largest bucket with >= 2 members
  // wins (ties: earliest first member). InsufficientFamily otherwise.
  NormalizedFamily normalize_family(CPContext const&            ctx,
                                    std::vector<CPTuple> const& family);

  // The words of a family without bucketing (used for diagnostics).
  std::vector<Word> family_words(CPContext const&            ctx,
                                 std::vector<CPTuple> const& family,
                                 std::vector<Column>*        letters);

  struct BetaMap {
    std::size_t i = 0;  // indices into the input family
    std::size_t j = 0;
    Embedding   f;      // source columns 0 .. l_i into 0 .. l_j
    std::size_t len_i = 0;  // l(a_i) + 1
    std::size_t len_j = 0;
    unsigned    exponent = 1;
    // Per alphabet letter h_s: the target coordinate of its last occurrence
    // in a_j, and the target coordinates carrying h_s outside the image.
    std::vector<Letter>             alphabet;
    std::vector<Coord>              i_s;
    std::vector<std::vector<Coord>> I_s;
    // source_of(t) for t < len_j
    std::vector<Coord> head_source;

    // The source coordinate whose entry lands on target coordinate t.
    Coord source_of(Coord t) const {
      return t < len_j ? head_source[t] : t - len_j + len_i;
    }
  };

  // The first *-embedded pair of the normalized words (star mode). The
  // divisibility m | |I_s| is checked and violations throw Error.
  // InsufficientFamily if no pair exists among the kept members.
  BetaMap build_beta(NormalizedFamily const& nf, unsigned exponent);

  // Coordinatewise copy: target t receives the entry at source_of(t). This
  // is the multiplicative extension of the shift / fan-out / tail rules.
  CPElement apply_beta(CPContext const& ctx, BetaMap const& bm, CPElement const& x);

  struct WordBounds {
    Coord l_prime = 0;
    Coord l       = 0;
  };

  // l' = l_j + 1 and l = max(l' + 1, l' + l_j - l_i).
  WordBounds minimal_word_bounds(BetaMap const& bm);

  // sigma-hat followed by alpha_{I_s, i_s, l + 1} for every s with I_s
  // nonempty. sigma extends f, shifts [l_i + 1, l'] by l_j - l_i and sends
  // the remaining points of {0..l} in increasing order onto the unused ones.
  // InputError (naming the minimal values) if l, l' are too small.
  AutWord beta_as_word(CPContext const& ctx, BetaMap const& bm, Coord l, Coord l_prime);

  struct AzOptions {
    std::size_t   depth = 500;  // enumerated prefix for order preservation
    std::size_t   random_pairs_per_element = 10;
    std::uint64_t seed  = 1;
    std::optional<WordBounds> bounds;  // default: minimal_word_bounds
  };

  struct AzCertificate {
    bool        ok = true;
    std::string failure;

    NormalizedFamily nf;
    BetaMap          beta;
    WordBounds       bounds;
    AutWord          word;

    bool order_coset_compatible = false;
    bool maps_tuple             = true;
    bool order_preserved        = true;
    bool index_law              = true;
    bool word_agrees            = true;
    bool homomorphism           = true;
    bool injective              = true;

    std::size_t order_checks       = 0;
    std::size_t index_law_checks   = 0;
    std::size_t agreement_checks   = 0;
    std::size_t homomorphism_checks = 0;

    // For a failed check: the offending elements.
    std::vector<CPElement> witness;
  };

  // Normalize, build beta and its word, and run every check.
  // InsufficientFamily propagates.
  AzCertificate run_az(CPContext const&            ctx,
                       std::vector<CPTuple> const& family,
                       AzOptions const&            options = {});

  // Uniform element of Gamma_n (support < n) by random canonical digits.
  template <typename Rng>
  CPElement random_element(CPContext const& ctx, std::size_t n, Rng& rng) {
    Support     s;
    auto const& order = ctx.kg().element_order();
    auto const& mins  = ctx.coset_minima();
    std::uniform_int_distribution<std::size_t> any(0, order.size() - 1);
    std::uniform_int_distribution<std::size_t> coset(0, mins.size() - 1);
    Elem const one = ctx.group().identity();
    for (std::size_t c = 0; c < n; ++c) {
      Elem const a = c == 0 ? order[any(rng)] : mins[coset(rng)];
      if (a != one) {
        s.emplace_back(c, a);
      }
    }
    return ctx.make(s);
  }

}  // namespace azbench

#endif  // AZBENCH_AZ_ENGINE_HPP_
