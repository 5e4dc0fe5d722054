#include "azbench/quadratic.hpp"

#include <algorithm>
#include <array>

#include "azbench/error.hpp"

namespace azbench {

  ////////////////////////////////////////////////////////////////////////
  // QuadraticStructure
  ////////////////////////////////////////////////////////////////////////

  QuadraticStructure::QuadraticStructure(
      unsigned                              dim_u,
      unsigned                              dim_v,
      std::vector<Bits>                     q_basis,
      std::vector<std::vector<Bits>> const& gamma_basis)
      : _dim_u(dim_u), _dim_v(dim_v), _q(std::move(q_basis)) {
    if (dim_u > max_f2_dim || dim_v > max_f2_dim) {
      throw CapacityError("quadratic structure dimensions exceed 64");
    }
    if (_q.size() != dim_u) {
      throw InputError("Q must have one value per basis vector of U");
    }
    if (gamma_basis.size() != dim_u) {
      throw InputError("gamma must be dimU x dimU");
    }
    Bits const vmask = low_mask(dim_v);
    for (Bits x : _q) {
      if (x & ~vmask) {
        throw InputError("Q value outside V");
      }
    }
    _gamma.resize(static_cast<std::size_t>(dim_u) * dim_u);
    for (unsigned i = 0; i < dim_u; ++i) {
      if (gamma_basis[i].size() != dim_u) {
        throw InputError("gamma must be dimU x dimU");
      }
      for (unsigned j = 0; j < dim_u; ++j) {
        Bits const x = gamma_basis[i][j];
        if (x & ~vmask) {
          throw InputError("gamma value outside V");
        }
        if (i == j && x != 0) {
          throw InputError("gamma must vanish on the diagonal");
        }
        if (gamma_basis[j][i] != x) {
          throw InputError("gamma must be symmetric");
        }
        _gamma[i * dim_u + j] = x;
      }
    }
  }

  QuadraticStructure QuadraticStructure::trivial(unsigned dim_v) {
    return QuadraticStructure(0, dim_v, {}, {});
  }

  std::vector<std::vector<Bits>> QuadraticStructure::gamma_table() const {
    std::vector<std::vector<Bits>> t(_dim_u, std::vector<Bits>(_dim_u));
    for (unsigned i = 0; i < _dim_u; ++i) {
      for (unsigned j = 0; j < _dim_u; ++j) {
        t[i][j] = gamma_basis(i, j);
      }
    }
    return t;
  }

  Bits QuadraticStructure::q(Bits u) const noexcept {
    Bits r = 0;
    for (unsigned i = 0; i < _dim_u; ++i) {
      if (!((u >> i) & 1)) {
        continue;
      }
      r ^= _q[i];
      for (unsigned j = i + 1; j < _dim_u; ++j) {
        if ((u >> j) & 1) {
          r ^= _gamma[i * _dim_u + j];
        }
      }
    }
    return r;
  }

  Bits QuadraticStructure::gamma(Bits u1, Bits u2) const noexcept {
    Bits r = 0;
    for (unsigned i = 0; i < _dim_u; ++i) {
      if (!((u1 >> i) & 1)) {
        continue;
      }
      for (unsigned j = 0; j < _dim_u; ++j) {
        if ((u2 >> j) & 1) {
          r ^= _gamma[i * _dim_u + j];
        }
      }
    }
    return r;
  }

  F2Vector eval_q(QuadraticStructure const& qs, F2Vector const& u) {
    if (u.dim != qs.dim_u() || (u.bits & ~low_mask(u.dim))) {
      throw InputError("vector is not in U");
    }
    return {qs.q(u.bits), qs.dim_v()};
  }

  F2Vector eval_gamma(QuadraticStructure const& qs,
                      F2Vector const&           u1,
                      F2Vector const&           u2) {
    for (F2Vector const* u : {&u1, &u2}) {
      if (u->dim != qs.dim_u() || (u->bits & ~low_mask(u->dim))) {
        throw InputError("vector is not in U");
      }
    }
    return {qs.gamma(u1.bits, u2.bits), qs.dim_v()};
  }

  bool is_nondegenerate(QuadraticStructure const& qs) {
    if (qs.dim_u() > 20) {
      throw CapacityError("nondegeneracy check is exhaustive; dimU <= 20");
    }
    Bits const n = Bits{1} << qs.dim_u();
    for (Bits u = 1; u < n; ++u) {
      if (qs.q(u) == 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool is_morphism(QuadraticStructure const& from,
                   QuadraticStructure const& to,
                   QSMorphism const&         m) {
    if (m.f.columns.size() != from.dim_u()
        || m.g.columns.size() != from.dim_v()) {
      return false;
    }
    for (Bits c : m.f.columns) {
      if (c & ~low_mask(to.dim_u())) {
        return false;
      }
    }
    for (Bits c : m.g.columns) {
      if (c & ~low_mask(to.dim_v())) {
        return false;
      }
    }
    for (unsigned i = 0; i < from.dim_u(); ++i) {
      if (m.g(from.q_basis(i)) != to.q(m.f.columns[i])) {
        return false;
      }
      for (unsigned j = i + 1; j < from.dim_u(); ++j) {
        if (m.g(from.gamma_basis(i, j))
            != to.gamma(m.f.columns[i], m.f.columns[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_injective(QSMorphism const& m) {
    return rank_of(m.f.columns) == m.f.columns.size()
           && rank_of(m.g.columns) == m.g.columns.size();
  }

  QSMorphism identity_morphism(QuadraticStructure const& qs) {
    return {identity_map(qs.dim_u()), identity_map(qs.dim_v())};
  }

  QSMorphism compose(QSMorphism const& outer, QSMorphism const& inner) {
    return {compose(outer.f, inner.f), compose(outer.g, inner.g)};
  }

  namespace {
    using Pair = std::array<Bits, 2>;

    std::size_t rank_pairs(std::vector<Pair> rows) {
      std::size_t r = 0;
      for (unsigned w = 0; w < 2; ++w) {
        for (unsigned bit = 0; bit < 64; ++bit) {
          std::size_t p = r;
          while (p < rows.size() && !((rows[p][w] >> bit) & 1)) {
            ++p;
          }
          if (p == rows.size()) {
            continue;
          }
          std::swap(rows[r], rows[p]);
          for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q != r && ((rows[q][w] >> bit) & 1)) {
              rows[q][0] ^= rows[r][0];
              rows[q][1] ^= rows[r][1];
            }
          }
          ++r;
        }
      }
      return r;
    }

    // The assignment a_k -> b_k extends to an injective linear map.
    bool consistent(std::vector<Pair> const& pairs) {
      std::vector<Bits> as, bs;
      for (auto const& p : pairs) {
        as.push_back(p[0]);
        bs.push_back(p[1]);
      }
      std::size_t const ra = rank_of(as);
      return ra == rank_of(bs) && ra == rank_pairs(pairs);
    }

    bool iso_search(QuadraticStructure const& a,
                    QuadraticStructure const& b,
                    std::vector<Bits>&        images,
                    F2Basis const&            image_span,
                    std::vector<Pair>&        pairs) {
      unsigned const i = static_cast<unsigned>(images.size());
      if (i == a.dim_u()) {
        return true;
      }
      Bits const n = Bits{1} << b.dim_u();
      for (Bits u = 1; u < n; ++u) {
        if (image_span.contains(u)) {
          continue;
        }
        std::size_t const before = pairs.size();
        pairs.push_back({a.q_basis(i), b.q(u)});
        for (unsigned k = 0; k < i; ++k) {
          pairs.push_back({a.gamma_basis(k, i), b.gamma(images[k], u)});
        }
        if (consistent(pairs)) {
          F2Basis next = image_span;
          next.insert(u);
          images.push_back(u);
          if (iso_search(a, b, images, next, pairs)) {
            return true;
          }
          images.pop_back();
        }
        pairs.resize(before);
      }
      return false;
    }
  }  // namespace

  std::optional<QSMorphism> find_qs_isomorphism(QuadraticStructure const& a,
                                                QuadraticStructure const& b) {
    if (a.dim_u() != b.dim_u() || a.dim_v() != b.dim_v()) {
      return std::nullopt;
    }
    std::vector<Bits> images;
    std::vector<Pair> pairs;
    if (!iso_search(a, b, images, F2Basis{}, pairs)) {
      return std::nullopt;
    }
    // g: defined on span of the constraint sources, extended greedily.
    F2Basis           src;
    std::vector<Bits> dst;
    for (auto const& p : pairs) {
      if (src.insert(p[0])) {
        dst.push_back(p[1]);
      }
    }
    F2Basis dst_span;
    for (Bits x : dst) {
      dst_span.insert(x);
    }
    for (Bits x : greedy_complement(src, a.dim_v())) {
      src.insert(x);
    }
    for (Bits x : greedy_complement(dst_span, b.dim_v())) {
      dst.push_back(x);
    }
    LinearMap g;
    for (unsigned t = 0; t < a.dim_v(); ++t) {
      Bits const c = *src.coords(unit(t));
      Bits       r = 0;
      for (std::size_t k = 0; k < dst.size(); ++k) {
        if ((c >> k) & 1) {
          r ^= dst[k];
        }
      }
      g.columns.push_back(r);
    }
    QSMorphism m{LinearMap{images}, g};
    if (!is_morphism(a, b, m) || !is_injective(m)) {
      throw Error("internal: quadratic isomorphism failed verification");
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group <-> quadratic structure
  ////////////////////////////////////////////////////////////////////////

  GroupQuadraticData qs_from_group(GroupTable const& g) {
    if (!is_class_csw(g)) {
      throw InputError("group " + g.name()
                       + " is not of exponent dividing 4 with central "
                         "involutions");
    }
    GroupAnalysis const an = analyze(g);
    std::size_t const   n  = g.order();
    GroupQuadraticData  d;

    // V(G) as an F2-space: greedy basis over involutions in index order.
    std::vector<Bits> vc(n, ~Bits{0});
    d.v_elem = {g.identity()};
    vc[g.identity()] = 0;
    for (Elem x : an.involutions) {
      if (vc[x] != ~Bits{0}) {
        continue;
      }
      unsigned const    k    = static_cast<unsigned>(d.v_basis.size());
      std::size_t const size = d.v_elem.size();
      d.v_basis.push_back(x);
      for (std::size_t c = 0; c < size; ++c) {
        Elem const y = g.mul(d.v_elem[c], x);
        d.v_elem.push_back(y);
        vc[y] = c | unit(k);
      }
    }
    unsigned const dim_v = static_cast<unsigned>(d.v_basis.size());

    // G/V(G): lifts are ordered products of basis lifts.
    d.lift = {g.identity()};
    std::vector<char> covered(n, 0);
    auto              cover = [&](Elem l) {
      for (Elem v : d.v_elem) {
        covered[g.mul(l, v)] = 1;
      }
    };
    cover(g.identity());
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x]) {
        continue;
      }
      unsigned const    k    = static_cast<unsigned>(d.u_lifts.size());
      std::size_t const size = d.lift.size();
      d.u_lifts.push_back(static_cast<Elem>(x));
      for (std::size_t c = 0; c < size; ++c) {
        Elem const l = g.mul(d.lift[c], static_cast<Elem>(x));
        d.lift.push_back(l);
        cover(l);
        (void) k;
      }
    }
    unsigned const dim_u = static_cast<unsigned>(d.u_lifts.size());

    d.u_coord.assign(n, 0);
    d.v_coord.assign(n, 0);
    for (std::size_t u = 0; u < d.lift.size(); ++u) {
      for (std::size_t v = 0; v < d.v_elem.size(); ++v) {
        Elem const x = g.mul(d.lift[u], d.v_elem[v]);
        d.u_coord[x] = u;
        d.v_coord[x] = v;
      }
    }

    std::vector<Bits>              q(dim_u);
    std::vector<std::vector<Bits>> gamma(dim_u, std::vector<Bits>(dim_u, 0));
    for (unsigned i = 0; i < dim_u; ++i) {
      Elem const sq = g.mul(d.u_lifts[i], d.u_lifts[i]);
      q[i]          = d.v_coord[sq];
      for (unsigned j = 0; j < dim_u; ++j) {
        if (i != j) {
          gamma[i][j] = d.v_coord[g.commutator(d.u_lifts[i], d.u_lifts[j])];
        }
      }
    }
    d.qs = QuadraticStructure(dim_u, dim_v, std::move(q), gamma);
    return d;
  }

  Bits cocycle(QuadraticStructure const& qs, Bits u1, Bits u2) noexcept {
    Bits           r = 0;
    unsigned const n = qs.dim_u();
    for (unsigned i = 0; i < n; ++i) {
      if (!((u1 >> i) & 1)) {
        continue;
      }
      if ((u2 >> i) & 1) {
        r ^= qs.q_basis(i);
      }
      for (unsigned j = 0; j < i; ++j) {
        if ((u2 >> j) & 1) {
          r ^= qs.gamma_basis(i, j);
        }
      }
    }
    return r;
  }

  GroupTable group_from_qs(QuadraticStructure const& qs) {
    if (qs.dim_u() + qs.dim_v() > 8) {
      throw CapacityError("group_from_qs: order 2^"
                          + std::to_string(qs.dim_u() + qs.dim_v())
                          + " exceeds 256");
    }
    if (!is_nondegenerate(qs)) {
      throw InputError("quadratic structure is degenerate");
    }
    unsigned const    du = qs.dim_u(), dv = qs.dim_v();
    std::size_t const n  = std::size_t{1} << (du + dv);
    Bits const        um = low_mask(du);
    std::vector<std::string>      names(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x) {
      Bits const u1 = x & um, v1 = x >> du;
      names[x]      = "u" + to_bitstring(u1, du) + ".v" + to_bitstring(v1, dv);
      for (std::size_t y = 0; y < n; ++y) {
        Bits const u2 = y & um, v2 = y >> du;
        Bits const u  = u1 ^ u2;
        Bits const v  = v1 ^ v2 ^ cocycle(qs, u1, u2);
        mul[x][y]     = static_cast<int>(u | (v << du));
      }
    }
    return GroupTable::from_table("QS(" + std::to_string(du) + ","
                                      + std::to_string(dv) + ")",
                                  names,
                                  mul);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free amalgams
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Coordinates relative to [image of the common part | complement],
    // re-laid out so that the complement lands at bit `shift` of the
    // amalgam (the common part keeps bits [0, common)).
    struct Layout {
      F2Basis  basis;
      unsigned common;
      unsigned shift;

      Bits operator()(Bits x) const {
        Bits const c    = *basis.coords(x);
        Bits const low  = c & low_mask(common);
        Bits const high = c >> common;
        return low | (common >= 64 ? 0 : high << shift);
      }
    };

    Layout make_layout(LinearMap const& common_image,
                       unsigned         ambient_dim,
                       unsigned         shift,
                       std::vector<Bits>* complement) {
      Layout l{F2Basis{}, static_cast<unsigned>(common_image.columns.size()),
               shift};
      for (Bits c : common_image.columns) {
        l.basis.insert(c);
      }
      *complement = greedy_complement(l.basis, ambient_dim);
      for (Bits c : *complement) {
        l.basis.insert(c);
      }
      return l;
    }

    LinearMap as_map(Layout const& l, unsigned dim) {
      LinearMap m;
      for (unsigned i = 0; i < dim; ++i) {
        m.columns.push_back(l(unit(i)));
      }
      return m;
    }
  }  // namespace

  QSAmalgam free_amalgam(QuadraticStructure const& qs0,
                         QuadraticStructure const& qs1,
                         QSMorphism const&         e1,
                         QuadraticStructure const& qs2,
                         QSMorphism const&         e2) {
    if (!is_morphism(qs0, qs1, e1) || !is_morphism(qs0, qs2, e2)) {
      throw InputError("free_amalgam: inputs are not morphisms");
    }
    if (!is_injective(e1) || !is_injective(e2)) {
      throw InputError("free_amalgam: morphisms must be injective");
    }
    unsigned const d0 = qs0.dim_u(), v0 = qs0.dim_v();
    unsigned const c1 = qs1.dim_u() - d0, c2 = qs2.dim_u() - d0;
    unsigned const w1 = qs1.dim_v() - v0, w2 = qs2.dim_v() - v0;
    unsigned const du = d0 + c1 + c2;
    unsigned long const dv
        = static_cast<unsigned long>(v0) + w1 + w2
          + static_cast<unsigned long>(c1) * c2;
    if (du > max_f2_dim || dv > max_f2_dim) {
      throw CapacityError("free amalgam dimensions exceed 64");
    }

    std::vector<Bits> u1_extra, u2_extra, v1_extra, v2_extra;
    Layout const lu1 = make_layout(e1.f, qs1.dim_u(), d0, &u1_extra);
    Layout const lu2 = make_layout(e2.f, qs2.dim_u(), d0 + c1, &u2_extra);
    Layout const lv1 = make_layout(e1.g, qs1.dim_v(), v0, &v1_extra);
    Layout const lv2 = make_layout(e2.g, qs2.dim_v(), v0 + w1, &v2_extra);
    unsigned const tensor = v0 + w1 + w2;

    // basis vector p of U as a vector of U1 (side 1) or U2 (side 2)
    auto side1 = [&](unsigned p) -> std::optional<Bits> {
      if (p < d0) {
        return e1.f.columns[p];
      }
      if (p < d0 + c1) {
        return u1_extra[p - d0];
      }
      return std::nullopt;
    };
    auto side2 = [&](unsigned p) -> std::optional<Bits> {
      if (p < d0) {
        return e2.f.columns[p];
      }
      if (p >= d0 + c1) {
        return u2_extra[p - d0 - c1];
      }
      return std::nullopt;
    };

    std::vector<Bits>              q(du);
    std::vector<std::vector<Bits>> gamma(du, std::vector<Bits>(du, 0));
    for (unsigned p = 0; p < du; ++p) {
      if (auto x = side1(p)) {
        q[p] = lv1(qs1.q(*x));
      } else {
        q[p] = lv2(qs2.q(*side2(p)));
      }
      for (unsigned r = 0; r < du; ++r) {
        if (r == p) {
          continue;
        }
        auto a1 = side1(p), b1 = side1(r);
        auto a2 = side2(p), b2 = side2(r);
        if (a1 && b1) {
          gamma[p][r] = lv1(qs1.gamma(*a1, *b1));
        } else if (a2 && b2) {
          gamma[p][r] = lv2(qs2.gamma(*a2, *b2));
        } else {
          // one index in U1', the other in U2'
          unsigned const i = (a1 ? p : r) - d0;
          unsigned const j = (a1 ? r : p) - d0 - c1;
          gamma[p][r]      = unit(tensor + i * c2 + j);
        }
      }
    }

    QSAmalgam out;
    out.qs = QuadraticStructure(du, static_cast<unsigned>(dv), q, gamma);
    out.into1 = {as_map(lu1, qs1.dim_u()), as_map(lv1, qs1.dim_v())};
    out.into2 = {as_map(lu2, qs2.dim_u()), as_map(lv2, qs2.dim_v())};
    out.dim_u1_extra = c1;
    out.dim_u2_extra = c2;
    return out;
  }

  QSMorphism induced_morphism(GroupTable const&         from,
                              GroupQuadraticData const& from_data,
                              GroupTable const&         to,
                              GroupQuadraticData const& to_data,
                              std::span<Elem const>     hom) {
    if (hom.size() != from.order() || !is_homomorphism(from, to, hom)) {
      throw InputError("map is not a group homomorphism");
    }
    QSMorphism m;
    for (Elem l : from_data.u_lifts) {
      m.f.columns.push_back(to_data.u_coord[hom[l]]);
    }
    for (Elem v : from_data.v_basis) {
      if (to_data.u_coord[hom[v]] != 0) {
        throw Error("internal: involution mapped outside V");
      }
      m.g.columns.push_back(to_data.v_coord[hom[v]]);
    }
    return m;
  }

  namespace {
    // The element map g_t -> G for a factor embedded by (f, g) on QS level.
    // G uses the basis-ordered cocycle of the amalgam; the factor's own
    // coordinates multiply by its own basis-ordered cocycle. The two differ
    // by an alternating form D, absorbed by h(u) = sum_{a<b} u_a u_b D(a,b).
    std::vector<Elem> factor_embedding(GroupTable const&         factor,
                                       GroupQuadraticData const& data,
                                       QuadraticStructure const& amalgam,
                                       QSMorphism const&         into) {
      unsigned const    du = data.qs.dim_u();
      std::vector<Bits> d_table(du * du, 0);
      for (unsigned a = 0; a < du; ++a) {
        for (unsigned b = 0; b < du; ++b) {
          d_table[a * du + b]
              = cocycle(amalgam, into.f.columns[a], into.f.columns[b])
                ^ into.g(cocycle(data.qs, unit(a), unit(b)));
        }
      }
      auto h = [&](Bits u) {
        Bits r = 0;
        for (unsigned a = 0; a < du; ++a) {
          for (unsigned b = a + 1; b < du; ++b) {
            if (((u >> a) & 1) && ((u >> b) & 1)) {
              r ^= d_table[a * du + b];
            }
          }
        }
        return r;
      };
      std::vector<Elem> map(factor.order());
      for (std::size_t x = 0; x < factor.order(); ++x) {
        Bits const u = data.u_coord[x], v = data.v_coord[x];
        map[x] = qs_group_index(amalgam, into.f(u), into.g(v) ^ h(u));
      }
      return map;
    }

    void require_embedding(GroupTable const&     a,
                           GroupTable const&     b,
                           std::span<Elem const> e) {
      if (e.size() != a.order() || !is_homomorphism(a, b, e)
          || !is_injective(e)) {
        throw InputError("free_amalgam_groups: embeddings must be injective "
                         "homomorphisms");
      }
    }
  }  // namespace

  GroupAmalgam free_amalgam_groups(GroupTable const&     g0,
                                   GroupTable const&     g1,
                                   std::span<Elem const> e1,
                                   GroupTable const&     g2,
                                   std::span<Elem const> e2) {
    require_embedding(g0, g1, e1);
    require_embedding(g0, g2, e2);
    GroupQuadraticData const d0 = qs_from_group(g0);
    GroupQuadraticData const d1 = qs_from_group(g1);
    GroupQuadraticData const d2 = qs_from_group(g2);
    QSMorphism const m1 = induced_morphism(g0, d0, g1, d1, e1);
    QSMorphism const m2 = induced_morphism(g0, d0, g2, d2, e2);
    QSAmalgam const  am = free_amalgam(d0.qs, d1.qs, m1, d2.qs, m2);

    GroupAmalgam out{group_from_qs(am.qs), {}, {}};
    GroupTable const& G = out.group;
    out.into1 = factor_embedding(g1, d1, am.qs, am.into1);
    out.into2 = factor_embedding(g2, d2, am.qs, am.into2);

    // Both embeddings agree on U-coordinates over g0; the V-discrepancy is a
    // homomorphism U0 -> V, pushed into the second embedding through a
    // linear correction on U2.
    unsigned const    d0u = d0.qs.dim_u();
    std::vector<Bits> delta(d0u);
    for (unsigned k = 0; k < d0u; ++k) {
      Elem const l  = d0.u_lifts[k];
      Elem const p1 = out.into1[e1[l]];
      Elem const p2 = out.into2[e2[l]];
      Elem const q  = G.mul(p1, G.inv(p2));
      if ((q & low_mask(am.qs.dim_u())) != 0) {
        throw Error("internal: amalgam embeddings disagree modulo V");
      }
      delta[k] = static_cast<Bits>(q) >> am.qs.dim_u();
    }
    F2Basis u2_basis;
    for (Bits c : m2.f.columns) {
      u2_basis.insert(c);
    }
    for (Bits c : greedy_complement(u2_basis, d2.qs.dim_u())) {
      u2_basis.insert(c);
    }
    for (std::size_t x = 0; x < g2.order(); ++x) {
      Bits const c = *u2_basis.coords(d2.u_coord[x]);
      Bits       lam = 0;
      for (unsigned k = 0; k < d0u; ++k) {
        if ((c >> k) & 1) {
          lam ^= delta[k];
        }
      }
      out.into2[x] = G.mul(out.into2[x], qs_group_index(am.qs, 0, lam));
    }

    if (!is_homomorphism(g1, G, out.into1) || !is_injective(out.into1)
        || !is_homomorphism(g2, G, out.into2) || !is_injective(out.into2)) {
      throw Error("internal: amalgam embeddings failed verification");
    }
    for (std::size_t x = 0; x < g0.order(); ++x) {
      if (out.into1[e1[x]] != out.into2[e2[x]]) {
        throw Error("internal: amalgam embeddings disagree on the base");
      }
    }
    return out;
  }

}  // namespace azbench
