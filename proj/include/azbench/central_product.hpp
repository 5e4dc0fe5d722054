#ifndef AZBENCH_CENTRAL_PRODUCT_HPP_
#define AZBENCH_CENTRAL_PRODUCT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "azbench/groups.hpp"

namespace azbench {

  using Coord = std::size_t;

  // Sparse assignment coordinate -> element; omitted coordinates are 1.
  using Support = std::vector<std::pair<Coord, Elem>>;

  // An element of G(omega; K) in canonical form: the K-coset label of every
  // coordinate (label 0 omitted) and the product of all K-parts.
  class CPElement {
   public:
    // (coordinate, transversal index), sorted, labels nonzero.
    std::vector<std::pair<Coord, std::uint16_t>> const& labels() const noexcept {
      return _labels;
    }
    Elem kappa() const noexcept {
      return _kappa;
    }
    std::uint64_t context_id() const noexcept {
      return _context;
    }
    // 1 + the highest coordinate carrying a nontrivial label; 1 if only
    // kappa is nontrivial, 0 for the identity.
    Coord length() const noexcept;

    bool operator==(CPElement const&) const = default;

   private:
    friend class CPContext;

    std::vector<std::pair<Coord, std::uint16_t>> _labels;
    Elem                                         _kappa   = 0;
    Elem                                         _one     = 0;
    std::uint64_t                                _context = 0;
  };

  // G(omega; K) over a fixed KGroupSpec. Copies share the spec and the
  // context id, so elements of copies are interchangeable.
  class CPContext {
   public:
    explicit CPContext(KGroupSpec kg);

    KGroupSpec const& kg() const noexcept {
      return _data->kg;
    }
    GroupTable const& group() const noexcept {
      return _data->kg.group();
    }
    std::uint64_t id() const noexcept {
      return _data->id;
    }
    unsigned exponent() const noexcept {
      return _data->kg.exponent();
    }
    // |G| / |K|
    std::size_t coset_count() const noexcept {
      return _data->kg.transversal().size();
    }

    // InputError for element indices out of range or repeated coordinates.
    CPElement make(Support const& support) const;
    // Dense tuple, coordinate i = tuple[i].
    CPElement from_tuple(std::vector<Elem> const& tuple) const;
    CPElement identity() const;
    CPElement embed(Elem g, Coord i) const;
    // InputError if k is not in K.
    CPElement embed_k(Elem k) const;

    CPElement multiply(CPElement const& x, CPElement const& y) const;
    CPElement inverse(CPElement const& x) const;

    // Transversal elements on the labelled coordinates, kappa multiplied
    // into coordinate 0. Length x.length().
    std::vector<Elem> representative(CPElement const& x) const;

    // The reverse-lexicographically least member of the coset, trailing
    // identities removed. Coordinates >= 1 take the least element of their
    // K-coset; coordinate 0 absorbs the K-remainder.
    std::vector<Elem> minimal_representative(CPElement const& x) const;

    // -1, 0, +1 by the highest coordinate where minimal representatives
    // differ. InputError on context mismatch.
    int compare(CPElement const& x, CPElement const& y) const;
    // Highest coordinate where minimal representatives differ.
    std::optional<Coord> highest_difference(CPElement const& x,
                                            CPElement const& y) const;

    // Position in the enumeration v_0, v_1, ... : mixed radix with digit
    // pos(a_0) in base |G| and digits rank(a_i) in base |G|/|K| above it,
    // a_i the minimal representative. CapacityError beyond 2^64.
    std::uint64_t index_of(CPElement const& x) const;
    CPElement     element_at(std::uint64_t index) const;

    // The first `count` elements of the enumeration.
    std::vector<CPElement> enumerate(std::uint64_t count) const;

    // |G|^n / |K|^(n-1); CapacityError on overflow, InputError for n = 0.
    std::uint64_t order_of_gamma_n(std::size_t n) const;

    // The least element (in element order) of each K-coset.
    std::vector<Elem> const& coset_minima() const noexcept {
      return _data->coset_min;
    }

    void require_same(CPElement const& x) const;

   private:
    struct Data {
      KGroupSpec        kg;
      std::uint64_t     id;
      std::vector<Elem> coset_min;   // per transversal index
      std::vector<int>  coset_rank;  // rank of coset_min in element order
      std::vector<int>  rank_coset;  // inverse of coset_rank
      std::vector<Elem> min_kpart;   // K-part of coset_min
    };

    CPElement finish(std::vector<std::pair<Coord, std::uint16_t>> labels,
                     Elem kappa) const;

    std::shared_ptr<Data const> _data;
  };

  // Pull-based cursor over the enumeration.
  class CPEnumerator {
   public:
    explicit CPEnumerator(CPContext ctx) : _ctx(std::move(ctx)) {}

    CPElement next() {
      return _ctx.element_at(_next++);
    }
    std::uint64_t position() const noexcept {
      return _next;
    }

   private:
    CPContext     _ctx;
    std::uint64_t _next = 0;
  };

}  // namespace azbench

#endif  // AZBENCH_CENTRAL_PRODUCT_HPP_
