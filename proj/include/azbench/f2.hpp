#ifndef AZBENCH_F2_HPP_
#define AZBENCH_F2_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace azbench {

  // Vectors over GF(2) of dimension <= 64; bit i is the coefficient of the
  // i-th basis vector.
  using Bits = std::uint64_t;

  inline constexpr unsigned max_f2_dim = 64;

  inline constexpr Bits unit(unsigned i) noexcept {
    return Bits{1} << i;
  }

  inline constexpr Bits low_mask(unsigned dim) noexcept {
    return dim >= 64 ? ~Bits{0} : (Bits{1} << dim) - 1;
  }

  inline constexpr bool parity(Bits x) noexcept {
    return (std::popcount(x) & 1) != 0;
  }

  struct F2Vector {
    Bits     bits = 0;
    unsigned dim  = 0;

    bool operator==(F2Vector const&) const = default;
  };

  // Little-endian over the basis index: "10" is e_0.
  std::string to_bitstring(Bits x, unsigned dim);
  // Throws InputError on characters other than 0/1 or length > 64.
  Bits from_bitstring(std::string const& s);

  // A linear map GF(2)^n -> GF(2)^k stored by the images of basis vectors.
  struct LinearMap {
    std::vector<Bits> columns;

    Bits operator()(Bits x) const noexcept {
      Bits r = 0;
      for (std::size_t i = 0; x != 0 && i < columns.size(); ++i, x >>= 1) {
        if (x & 1) {
          r ^= columns[i];
        }
      }
      return r;
    }
    std::size_t source_dim() const noexcept {
      return columns.size();
    }

    bool operator==(LinearMap const&) const = default;
  };

  LinearMap identity_map(unsigned dim);
  LinearMap compose(LinearMap const& outer, LinearMap const& inner);

  std::size_t rank_of(std::span<Bits const> vectors);

  // An ordered basis of a subspace, with coordinates of members relative to
  // it. Insertion order is the basis order.
  class F2Basis {
   public:
    // Returns false (and leaves the basis unchanged) if v is in the span.
    bool insert(Bits v);

    std::optional<Bits> coords(Bits v) const;
    bool contains(Bits v) const {
      return coords(v).has_value();
    }
    std::size_t size() const noexcept {
      return _basis.size();
    }
    std::vector<Bits> const& vectors() const noexcept {
      return _basis;
    }
    Bits combine(Bits coords) const noexcept;

   private:
    std::vector<Bits> _basis;
    // Echelon rows with the combination of basis vectors that produced them.
    std::vector<Bits> _rows;
    std::vector<Bits> _combos;
    std::vector<int>  _pivots;
  };

  // Extends `sub` to a basis of GF(2)^dim by adding standard vectors e_k in
  // increasing k; returns only the added vectors.
  std::vector<Bits> greedy_complement(F2Basis sub, unsigned dim);

  // Inverse of an invertible square map; nullopt if singular.
  std::optional<LinearMap> invert(LinearMap const& m, unsigned dim);

}  // namespace azbench

#endif  // AZBENCH_F2_HPP_
