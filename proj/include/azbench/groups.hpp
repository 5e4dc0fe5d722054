#ifndef AZBENCH_GROUPS_HPP_
#define AZBENCH_GROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace azbench {

  // Index of an element in a GroupTable. Orders are capped at 256.
  using Elem = std::uint16_t;

  inline constexpr std::size_t max_group_order = 256;

  // A finite group given by its full multiplication table. Instances are
  // only created through `GroupTable::from_table`, which validates the group
  // axioms, so every GroupTable in circulation is a group.
  class GroupTable {
   public:
    // Throws StructuralError (non-square table, missing identity, missing
    // inverse, non-associativity) carrying the first violating triple, and
    // CapacityError if the order exceeds max_group_order.
    static GroupTable from_table(std::string                          name,
                                 std::vector<std::string>             names,
                                 std::vector<std::vector<int>> const& mul);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t order() const noexcept {
      return _order;
    }
    Elem identity() const noexcept {
      return _identity;
    }
    Elem mul(Elem a, Elem b) const noexcept {
      return _mul[a * _order + b];
    }
    Elem inv(Elem a) const noexcept {
      return _inv[a];
    }
    Elem pow(Elem a, unsigned k) const noexcept;
    // a^-1 b^-1 a b
    Elem commutator(Elem a, Elem b) const noexcept {
      return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    unsigned element_order(Elem a) const noexcept;

    std::string const& name_of(Elem a) const {
      return _names[a];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Elem> find(std::string_view name) const;

    std::vector<std::vector<int>> table() const;

   private:
    GroupTable() = default;

    std::string              _name;
    std::size_t              _order = 0;
    Elem                     _identity = 0;
    std::vector<std::string> _names;
    std::vector<Elem>        _mul;
    std::vector<Elem>        _inv;
  };

  struct GroupAnalysis {
    unsigned          exponent = 1;
    std::vector<Elem> center;
    std::vector<Elem> commutator_subgroup;
    // Elements of order exactly 2.
    std::vector<Elem> involutions;
  };

  GroupAnalysis analyze(GroupTable const& g);

  struct AnalyzedGroup {
    GroupTable    group;
    GroupAnalysis analysis;
  };

  AnalyzedGroup validate_and_analyze(std::string                          name,
                                     std::vector<std::string>             names,
                                     std::vector<std::vector<int>> const& mul);

  // Sorted element set of the subgroup generated by `gens`.
  std::vector<Elem> generated_subgroup(GroupTable const& g,
                                       std::span<Elem const> gens);

  bool is_subgroup(GroupTable const& g, std::span<Elem const> s);

  // Exponent divides 4 and every involution is central.
  bool is_class_csw(GroupTable const& g);

  // G' <= k <= Z(G) and k is a subgroup. Throws InputError for indices out of
  // range.
  bool validate_k(GroupTable const& g, std::span<int const> k);

  // Size of a smallest generating set (0 for the trivial group).
  std::size_t rank(GroupTable const& g);

  // A group together with a central subgroup K containing G', a K-transversal
  // and the element order used by the reverse-lexicographic enumeration.
  class KGroupSpec {
   public:
    GroupTable const& group() const noexcept {
      return _group;
    }
    std::vector<Elem> const& k() const noexcept {
      return _k;
    }
    bool in_k(Elem a) const noexcept {
      return _k_index[a] >= 0;
    }
    // Position of a in K's sorted index list, or -1.
    int k_index(Elem a) const noexcept {
      return _k_index[a];
    }
    // One element per K-coset; transversal()[0] is the identity.
    std::vector<Elem> const& transversal() const noexcept {
      return _transversal;
    }
    // Permutation of all elements, identity first.
    std::vector<Elem> const& element_order() const noexcept {
      return _order;
    }
    // Position of a in element_order().
    std::size_t pos(Elem a) const noexcept {
      return _pos[a];
    }
    // Index into transversal() of the coset containing a.
    std::size_t coset_of(Elem a) const noexcept {
      return _coset[a];
    }
    // The K-part: a = transversal()[coset_of(a)] * k_part(a).
    Elem k_part(Elem a) const noexcept {
      return _kpart[a];
    }
    unsigned exponent() const noexcept {
      return _exponent;
    }

    friend KGroupSpec make_kgroup(GroupTable                      g,
                                  std::span<int const>            k,
                                  std::optional<std::vector<int>> order_hint);

   private:
    KGroupSpec(GroupTable g) : _group(std::move(g)) {}

    GroupTable          _group;
    std::vector<Elem>   _k;
    std::vector<int>    _k_index;
    std::vector<Elem>   _transversal;
    std::vector<Elem>   _order;
    std::vector<size_t> _pos;
    std::vector<size_t> _coset;
    std::vector<Elem>   _kpart;
    unsigned            _exponent = 1;
  };

  // Transversal: smallest element index per coset (identity for K itself),
  // cosets listed by that smallest index. Element order: identity, then the
  // remaining elements in `order_hint` order (or index order). Throws
  // InputError if validate_k fails or the hint is not a permutation.
  KGroupSpec make_kgroup(GroupTable                      g,
                         std::span<int const>            k,
                         std::optional<std::vector<int>> order_hint
                         = std::nullopt);

  // True iff the element order is lexicographic in (coset, K-offset): every
  // K-coset is a contiguous block, and inside each block c*k is ranked by the
  // rank of k in K, where c is the block's first element. This is the
  // condition under which coordinate-copying maps preserve the enumeration
  // order when K-mass moves off coordinate 0.
  bool is_coset_compatible(KGroupSpec const& kg);

  // Whether `map` (indexed by elements of a) is a homomorphism a -> b.
  bool is_homomorphism(GroupTable const&     a,
                       GroupTable const&     b,
                       std::span<Elem const> map);

  bool is_injective(std::span<Elem const> map);

  // Backtracking isomorphism search; returns the element map a -> b.
  std::optional<std::vector<Elem>> find_isomorphism(GroupTable const& a,
                                                    GroupTable const& b);

  ////////////////////////////////////////////////////////////////////////
  // Constructors and bundled catalog
  ////////////////////////////////////////////////////////////////////////

  // Elements "1", "g", "g2", ..., "g{n-1}"; g^i has index i.
  GroupTable cyclic_group(std::size_t n);
  // Order 2n: r^i has index i, s r^i has index n + i.
  GroupTable dihedral_group(std::size_t n);
  // Elements 1, -1, i, -i, j, -j, k, -k in that index order.
  GroupTable quaternion_group();
  // Elements "(a,b)" with index a * |h| + b.
  GroupTable direct_product(GroupTable const& g, GroupTable const& h);

  struct CatalogEntry {
    GroupTable       group;
    std::vector<int> k;  // suggested K (indices), empty if none
  };

  // C2, C4, C2xC2, Q8, D4 and further class members up to order 32.
  std::vector<CatalogEntry> const& bundled_groups();
  // Throws InputError for unknown names.
  CatalogEntry const& bundled_group(std::string_view name);

}  // namespace azbench

#endif  // AZBENCH_GROUPS_HPP_
