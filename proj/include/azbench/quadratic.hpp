#ifndef AZBENCH_QUADRATIC_HPP_
#define AZBENCH_QUADRATIC_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "azbench/f2.hpp"
#include "azbench/groups.hpp"

namespace azbench {

  // (U, V; Q) over GF(2), stored by Q on the basis of U and the alternating
  // form gamma on basis pairs. Q on arbitrary vectors is recovered by
  // polarization:
  //   Q(sum l_i e_i) = sum l_i Q(e_i) + sum_{i<j} l_i l_j gamma(e_i, e_j).
  class QuadraticStructure {
   public:
    // Throws InputError unless gamma is dimU x dimU, symmetric with zero
    // diagonal, and all values fit in dimV bits; CapacityError for dims > 64.
    QuadraticStructure(unsigned                              dim_u,
                       unsigned                              dim_v,
                       std::vector<Bits>                     q_basis,
                       std::vector<std::vector<Bits>> const& gamma_basis);

    // The structure with dim_u = 0.
    static QuadraticStructure trivial(unsigned dim_v = 0);

    unsigned dim_u() const noexcept {
      return _dim_u;
    }
    unsigned dim_v() const noexcept {
      return _dim_v;
    }
    Bits q_basis(unsigned i) const noexcept {
      return _q[i];
    }
    Bits gamma_basis(unsigned i, unsigned j) const noexcept {
      return _gamma[i * _dim_u + j];
    }
    std::vector<std::vector<Bits>> gamma_table() const;
    std::vector<Bits> const&       q_table() const noexcept {
      return _q;
    }

    Bits q(Bits u) const noexcept;
    Bits gamma(Bits u1, Bits u2) const noexcept;

    bool operator==(QuadraticStructure const&) const = default;

   private:
    unsigned          _dim_u;
    unsigned          _dim_v;
    std::vector<Bits> _q;
    std::vector<Bits> _gamma;
  };

  // Checked evaluation; InputError on dimension mismatch.
  F2Vector eval_q(QuadraticStructure const& qs, F2Vector const& u);
  F2Vector eval_gamma(QuadraticStructure const& qs,
                      F2Vector const&           u1,
                      F2Vector const&           u2);

  // Exhaustive; CapacityError for dimU > 20.
  bool is_nondegenerate(QuadraticStructure const& qs);

  // (f, g): f : U1 -> U2, g : V1 -> V2 with g Q1 = Q2 f.
  struct QSMorphism {
    LinearMap f;
    LinearMap g;

    bool operator==(QSMorphism const&) const = default;
  };

  // g Q1 = Q2 f, checked on Q of basis vectors and gamma of basis pairs,
  // which determines both quadratic maps.
  bool is_morphism(QuadraticStructure const& from,
                   QuadraticStructure const& to,
                   QSMorphism const&         m);
  bool is_injective(QSMorphism const& m);

  QSMorphism identity_morphism(QuadraticStructure const& qs);
  QSMorphism compose(QSMorphism const& outer, QSMorphism const& inner);

  // Search over images of the U-basis with incremental consistency checks.
  std::optional<QSMorphism> find_qs_isomorphism(QuadraticStructure const& a,
                                                QuadraticStructure const& b);

  ////////////////////////////////////////////////////////////////////////
  // Group <-> quadratic structure
  ////////////////////////////////////////////////////////////////////////

  // QS(G) together with the coordinates used to build it. Every element is
  // lift(u) * v where lift(u) is the ordered product of the U-basis lifts
  // with u_i = 1 and v lies in V(G) = involutions + {1}.
  struct GroupQuadraticData {
    QuadraticStructure qs = QuadraticStructure::trivial();
    std::vector<Elem>  v_basis;  // elements forming a basis of V(G)
    std::vector<Elem>  u_lifts;  // one element per basis vector of G/V(G)
    std::vector<Bits>  u_coord;  // per element
    std::vector<Bits>  v_coord;  // per element
    std::vector<Elem>  v_elem;   // V-coordinates -> element, size 2^dimV
    std::vector<Elem>  lift;     // U-coordinates -> lift(u), size 2^dimU

    Elem element(Bits u, Bits v, GroupTable const& g) const {
      return g.mul(lift[u], v_elem[v]);
    }
  };

  // Throws InputError unless is_class_csw(g).
  GroupQuadraticData qs_from_group(GroupTable const& g);

  // The basis-ordered cocycle beta(e_i, e_j) = gamma(e_i, e_j) for i > j,
  // Q(e_i) for i = j, 0 for i < j, extended bilinearly.
  Bits cocycle(QuadraticStructure const& qs, Bits u1, Bits u2) noexcept;

  // Elements (u, v) with index u + (v << dimU) and product
  // (u1 + u2, v1 + v2 + beta(u1, u2)). InputError if degenerate,
  // CapacityError beyond order 256.
  GroupTable group_from_qs(QuadraticStructure const& qs);

  inline Elem qs_group_index(QuadraticStructure const& qs, Bits u, Bits v) {
    return static_cast<Elem>(u | (v << qs.dim_u()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free amalgams
  ////////////////////////////////////////////////////////////////////////

  struct QSAmalgam {
    QuadraticStructure qs = QuadraticStructure::trivial();
    QSMorphism         into1;
    QSMorphism         into2;
    // Basis layout of U: [U0 | U1' | U2'], of V: [V0 | V1' | V2' | U1'@U2'].
    unsigned dim_u1_extra = 0;
    unsigned dim_u2_extra = 0;
  };

  // e1 : qs0 -> qs1, e2 : qs0 -> qs2 injective morphisms. Splittings extend
  // the images of the qs0 bases by standard vectors of lowest index.
  QSAmalgam free_amalgam(QuadraticStructure const& qs0,
                         QuadraticStructure const& qs1,
                         QSMorphism const&         e1,
                         QuadraticStructure const& qs2,
                         QSMorphism const&         e2);

  // The QS morphism induced by a group homomorphism between class groups.
  QSMorphism induced_morphism(GroupTable const&         from,
                              GroupQuadraticData const& from_data,
                              GroupTable const&         to,
                              GroupQuadraticData const& to_data,
                              std::span<Elem const>     hom);

  struct GroupAmalgam {
    GroupTable        group;
    std::vector<Elem> into1;
    std::vector<Elem> into2;
  };

  // e1 : g0 -> g1 and e2 : g0 -> g2 injective homomorphisms (element maps).
  // The result is group_from_qs of the free amalgam of the quadratic
  // structures; the returned embeddings agree on g0.
  GroupAmalgam free_amalgam_groups(GroupTable const&     g0,
                                   GroupTable const&     g1,
                                   std::span<Elem const> e1,
                                   GroupTable const&     g2,
                                   std::span<Elem const> e2);

}  // namespace azbench

#endif  // AZBENCH_QUADRATIC_HPP_
