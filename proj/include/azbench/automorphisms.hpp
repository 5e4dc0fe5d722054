#ifndef AZBENCH_AUTOMORPHISMS_HPP_
#define AZBENCH_AUTOMORPHISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "azbench/central_product.hpp"

namespace azbench {

  // A finitary permutation of coordinates, as a point map: the entry at
  // coordinate c moves to coordinate (*this)(c). With the tuple convention
  // (g_0, g_1, ...) -> (g_s(0), g_s(1), ...) this is s^-1.
  class Perm {
   public:
    Perm() = default;
    // Cycles (a b c) send a -> b -> c -> a. InputError if a point repeats.
    static Perm from_cycles(std::vector<std::vector<Coord>> const& cycles);
    static Perm transposition(Coord a, Coord b);
    // InputError unless the map is a bijection on its moved points.
    static Perm from_map(std::map<Coord, Coord> moved);

    Coord operator()(Coord c) const;
    Perm  inverse() const;
    std::vector<std::vector<Coord>> cycles() const;
    std::map<Coord, Coord> const&   moved() const noexcept {
      return _moved;
    }
    bool is_identity() const noexcept {
      return _moved.empty();
    }

    bool operator==(Perm const&) const = default;

   private:
    std::map<Coord, Coord> _moved;  // only points with c != image
  };

  // Entry j of the image (relative position within coords) is the ordered
  // product of the entries at all other positions.
  struct BetaStar {
    std::vector<Coord> coords;

    bool operator==(BetaStar const&) const = default;
  };

  using AutGenerator = std::variant<Perm, BetaStar>;
  // Applied left to right.
  using AutWord = std::vector<AutGenerator>;

  // InputError unless every BetaStar has exponent + 2 distinct coordinates.
  void validate_word(CPContext const& ctx, AutWord const& w);

  CPElement apply_perm(CPContext const& ctx, Perm const& p, CPElement const& x);
  // InputError for the wrong number of coordinates or repeated coordinates.
  CPElement apply_beta_star(CPContext const&  ctx,
                            BetaStar const&   b,
                            CPElement const&  x);
  CPElement apply_word(CPContext const& ctx, AutWord const& w, CPElement const& x);

  // Representative-level action on a dense tuple; no length check on
  // BetaStar, so maps with the wrong number of coordinates can be studied.
  std::vector<Elem> apply_word_rep(GroupTable const&  g,
                                   AutWord const&     w,
                                   std::vector<Elem>  tuple);

  // Reversed word with each generator inverted (BetaStar is an involution).
  AutWord inverse_word(AutWord const& w);

  // Per m-block B of I (in increasing order): BetaStar(i0, B..., j0) then the
  // transposition (i0 j0). InputError unless i0 != j0, both outside I, and
  // the exponent divides |I|.
  AutWord alpha_word(CPContext const&   ctx,
                     std::vector<Coord> I,
                     Coord              i0,
                     Coord              j0);

  struct AutReport {
    bool ok                         = true;
    bool representative_independent = true;
    bool injective                  = true;
    bool homomorphism               = true;
    // Informational: the image of Gamma_n stays inside Gamma_n.
    bool        level_preserved  = true;
    bool        exhaustive_elems = false;
    bool        exhaustive_pairs = false;
    std::size_t elements_checked = 0;
    std::size_t pairs_checked    = 0;
    std::string failure;
    // Violating elements (for homomorphism: x, y) and, for representative
    // dependence, the two representatives.
    std::vector<CPElement>         witness;
    std::vector<std::vector<Elem>> witness_reps;
  };

  // Checks the word on Gamma_n (support < n). Elements are covered
  // exhaustively when |Gamma_n| <= 2^13; pairs exhaustively when
  // |Gamma_n|^2 <= pair_budget, otherwise pair_budget random pairs.
  AutReport verify_automorphism(CPContext const& ctx,
                                AutWord const&   w,
                                std::size_t      n,
                                std::size_t      pair_budget,
                                std::uint64_t    seed);

  // An automorphism of Gamma_n as a permutation table over enumeration
  // indices 0 .. |Gamma_n| - 1. Capped at |Gamma_n| <= 2^16.
  class FiniteAutomorphism {
   public:
    // InputError if the map leaves Gamma_n or is not a bijection.
    static FiniteAutomorphism from_function(
        CPContext const&                                   ctx,
        std::size_t                                        n,
        std::function<CPElement(CPElement const&)> const& phi);
    static FiniteAutomorphism from_word(CPContext const& ctx,
                                        AutWord const&   w,
                                        std::size_t      n);

    CPContext const& context() const noexcept {
      return _ctx;
    }
    std::size_t level() const noexcept {
      return _n;
    }
    std::vector<std::uint64_t> const& table() const noexcept {
      return _table;
    }
    CPElement operator()(CPElement const& x) const;

    bool fixes_k() const;
    // Exhaustive homomorphism check over all pairs when |Gamma_n|^2 <=
    // pair_budget, sampled otherwise.
    AutReport verify(std::size_t pair_budget, std::uint64_t seed) const;

   private:
    FiniteAutomorphism(CPContext ctx, std::size_t n)
        : _ctx(std::move(ctx)), _n(n) {}

    CPContext                  _ctx;
    std::size_t                _n;
    std::vector<std::uint64_t> _table;
  };

  // phi on Gamma_n, the identity on coordinates >= n: y = lower * upper
  // maps to phi(lower) * upper. InputError if phi moves an element of K or
  // n' < n.
  FiniteAutomorphism extend_automorphism(FiniteAutomorphism const& phi,
                                         std::size_t               n_prime);

}  // namespace azbench

#endif  // AZBENCH_AUTOMORPHISMS_HPP_
