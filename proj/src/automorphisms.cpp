#include "azbench/automorphisms.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "azbench/error.hpp"

namespace azbench {

  ////////////////////////////////////////////////////////////////////////
  // Perm
  ////////////////////////////////////////////////////////////////////////

  Perm Perm::from_map(std::map<Coord, Coord> moved) {
    std::set<Coord> images;
    for (auto it = moved.begin(); it != moved.end();) {
      if (!images.insert(it->second).second) {
        throw InputError("permutation maps two points to "
                         + std::to_string(it->second));
      }
      if (it->first == it->second) {
        it = moved.erase(it);
      } else {
        ++it;
      }
    }
    for (auto [from, to] : moved) {
      if (!moved.count(to)) {
        throw InputError("permutation is not a bijection on its moved points");
      }
      (void) from;
    }
    Perm p;
    p._moved = std::move(moved);
    return p;
  }

  Perm Perm::from_cycles(std::vector<std::vector<Coord>> const& cycles) {
    std::map<Coord, Coord> m;
    for (auto const& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!m.emplace(c[i], c[(i + 1) % c.size()]).second) {
          throw InputError("point " + std::to_string(c[i])
                           + " appears twice in the cycles");
        }
      }
    }
    return from_map(std::move(m));
  }

  Perm Perm::transposition(Coord a, Coord b) {
    return from_cycles({{a, b}});
  }

  Coord Perm::operator()(Coord c) const {
    auto it = _moved.find(c);
    return it == _moved.end() ? c : it->second;
  }

  Perm Perm::inverse() const {
    Perm p;
    for (auto [a, b] : _moved) {
      p._moved.emplace(b, a);
    }
    return p;
  }

  std::vector<std::vector<Coord>> Perm::cycles() const {
    std::vector<std::vector<Coord>> out;
    std::set<Coord>                 done;
    for (auto [start, next] : _moved) {
      if (done.count(start)) {
        continue;
      }
      std::vector<Coord> cyc{start};
      done.insert(start);
      for (Coord c = next; c != start; c = (*this)(c)) {
        cyc.push_back(c);
        done.insert(c);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Application
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_beta(CPContext const& ctx, BetaStar const& b) {
      std::size_t const M = ctx.exponent() + 2;
      if (b.coords.size() != M) {
        throw InputError("BetaStar needs exactly " + std::to_string(M)
                         + " coordinates (exponent + 2), got "
                         + std::to_string(b.coords.size()));
      }
      std::set<Coord> s(b.coords.begin(), b.coords.end());
      if (s.size() != b.coords.size()) {
        throw InputError("BetaStar coordinates must be distinct");
      }
    }

    void apply_beta_rep(GroupTable const&  g,
                        BetaStar const&    b,
                        std::vector<Elem>& t) {
      Coord const top = *std::max_element(b.coords.begin(), b.coords.end());
      if (t.size() <= top) {
        t.resize(top + 1, g.identity());
      }
      std::size_t const M = b.coords.size();
      std::vector<Elem> in(M), out(M);
      for (std::size_t p = 0; p < M; ++p) {
        in[p] = t[b.coords[p]];
      }
      for (std::size_t j = 0; j < M; ++j) {
        Elem r = g.identity();
        for (std::size_t p = 0; p < M; ++p) {
          if (p != j) {
            r = g.mul(r, in[p]);
          }
        }
        out[j] = r;
      }
      for (std::size_t p = 0; p < M; ++p) {
        t[b.coords[p]] = out[p];
      }
    }

    void apply_perm_rep(GroupTable const& g, Perm const& p, std::vector<Elem>& t) {
      Coord top = t.empty() ? 0 : t.size() - 1;
      for (auto [a, b] : p.moved()) {
        top = std::max({top, a, b});
      }
      std::vector<Elem> out(top + 1, g.identity());
      for (Coord c = 0; c < t.size(); ++c) {
        out[p(c)] = t[c];
      }
      t = std::move(out);
    }
  }  // namespace

  void validate_word(CPContext const& ctx, AutWord const& w) {
    for (auto const& gen : w) {
      if (auto const* b = std::get_if<BetaStar>(&gen)) {
        check_beta(ctx, *b);
      }
    }
  }

  CPElement apply_perm(CPContext const& ctx, Perm const& p, CPElement const& x) {
    ctx.require_same(x);
    // Moving coordinates keeps every label and the K-product.
    Support s;
    std::vector<Elem> const rep = ctx.representative(x);
    for (Coord c = 0; c < rep.size(); ++c) {
      if (rep[c] != ctx.group().identity()) {
        s.emplace_back(p(c), rep[c]);
      }
    }
    return ctx.make(s);
  }

  CPElement apply_beta_star(CPContext const& ctx,
                            BetaStar const&  b,
                            CPElement const& x) {
    check_beta(ctx, b);
    std::vector<Elem> t = ctx.representative(x);
    apply_beta_rep(ctx.group(), b, t);
    return ctx.from_tuple(t);
  }

  std::vector<Elem> apply_word_rep(GroupTable const& g,
                                   AutWord const&    w,
                                   std::vector<Elem> tuple) {
    for (auto const& gen : w) {
      if (auto const* p = std::get_if<Perm>(&gen)) {
        apply_perm_rep(g, *p, tuple);
      } else {
        apply_beta_rep(g, std::get<BetaStar>(gen), tuple);
      }
    }
    return tuple;
  }

  CPElement apply_word(CPContext const& ctx, AutWord const& w, CPElement const& x) {
    validate_word(ctx, w);
    ctx.require_same(x);
    return ctx.from_tuple(apply_word_rep(ctx.group(), w, ctx.representative(x)));
  }

  AutWord inverse_word(AutWord const& w) {
    AutWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (auto const* p = std::get_if<Perm>(&*it)) {
        out.emplace_back(p->inverse());
      } else {
        out.push_back(*it);
      }
    }
    return out;
  }

  AutWord alpha_word(CPContext const&   ctx,
                     std::vector<Coord> I,
                     Coord              i0,
                     Coord              j0) {
    unsigned const m = ctx.exponent();
    std::sort(I.begin(), I.end());
    if (std::adjacent_find(I.begin(), I.end()) != I.end()) {
      throw InputError("alpha: I has repeated coordinates");
    }
    if (i0 == j0) {
      throw InputError("alpha: i0 and j0 must differ");
    }
    if (std::binary_search(I.begin(), I.end(), i0)
        || std::binary_search(I.begin(), I.end(), j0)) {
      throw InputError("alpha: i0 and j0 must lie outside I");
    }
    if (I.size() % m != 0) {
      throw InputError("alpha: the exponent " + std::to_string(m)
                       + " must divide |I| = " + std::to_string(I.size()));
    }
    AutWord w;
    for (std::size_t s = 0; s < I.size(); s += m) {
      BetaStar b;
      b.coords.push_back(i0);
      b.coords.insert(b.coords.end(), I.begin() + s, I.begin() + s + m);
      b.coords.push_back(j0);
      w.emplace_back(std::move(b));
      w.emplace_back(Perm::transposition(i0, j0));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::uint64_t exhaustive_elements = std::uint64_t{1} << 13;

    // Same coset, K-mass moved from coordinate 0 to coordinate c.
    std::vector<Elem> shift_k(GroupTable const& g,
                              std::vector<Elem> rep,
                              Coord             c,
                              Elem              k) {
      if (rep.size() <= c) {
        rep.resize(c + 1, g.identity());
      }
      rep[c] = g.mul(rep[c], k);
      rep[0] = g.mul(rep[0], g.inv(k));
      return rep;
    }

    std::vector<CPElement> check_set(CPContext const& ctx,
                                     std::uint64_t    size,
                                     std::size_t      budget,
                                     std::mt19937_64& rng,
                                     bool*            exhaustive) {
      std::vector<CPElement> xs;
      if (size <= exhaustive_elements) {
        *exhaustive = true;
        xs          = ctx.enumerate(size);
      } else {
        *exhaustive = false;
        std::uniform_int_distribution<std::uint64_t> d(0, size - 1);
        std::size_t const count = std::max<std::size_t>(
            std::min<std::size_t>(budget, exhaustive_elements), 1);
        for (std::size_t i = 0; i < count; ++i) {
          xs.push_back(ctx.element_at(d(rng)));
        }
      }
      return xs;
    }
  }  // namespace

  AutReport verify_automorphism(CPContext const& ctx,
                                AutWord const&   w,
                                std::size_t      n,
                                std::size_t      pair_budget,
                                std::uint64_t    seed) {
    GroupTable const& g = ctx.group();
    std::mt19937_64   rng(seed);
    std::uint64_t const size = ctx.order_of_gamma_n(n);
    AutReport           rep;
    std::vector<CPElement> const xs
        = check_set(ctx, size, pair_budget, rng, &rep.exhaustive_elems);
    auto image = [&](std::vector<Elem> const& r) {
      return ctx.from_tuple(apply_word_rep(g, w, r));
    };
    auto fail = [&](std::string what) {
      if (rep.ok) {
        rep.failure = std::move(what);
      }
      rep.ok = false;
    };

    std::vector<Elem> nontrivial_k;
    for (Elem k : ctx.kg().k()) {
      if (k != g.identity()) {
        nontrivial_k.push_back(k);
      }
    }

    std::set<std::uint64_t> seen_images;
    std::vector<CPElement>  images;
    images.reserve(xs.size());
    for (CPElement const& x : xs) {
      std::vector<Elem> const r  = ctx.representative(x);
      CPElement const         fx = image(r);
      images.push_back(fx);
      ++rep.elements_checked;
      for (Coord c = 1; c < n && rep.representative_independent; ++c) {
        for (Elem k : nontrivial_k) {
          std::vector<Elem> const r2 = shift_k(g, r, c, k);
          if (!(image(r2) == fx)) {
            rep.representative_independent = false;
            fail("image depends on the chosen representative");
            rep.witness      = {x};
            rep.witness_reps = {r, r2};
            break;
          }
        }
      }
      if (fx.length() > n) {
        rep.level_preserved = false;
      }
    }
    if (rep.exhaustive_elems) {
      std::set<std::vector<Elem>> distinct;
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (!distinct.insert(ctx.minimal_representative(images[i])).second) {
          rep.injective = false;
          fail("two elements have the same image");
          auto it = std::find(images.begin(), images.end(), images[i]);
          rep.witness = {xs[static_cast<std::size_t>(it - images.begin())],
                         xs[i]};
          break;
        }
      }
    } else {
      for (std::size_t i = 0; i < images.size(); ++i) {
        // phi(x) = 1 only for x = 1
        if (images[i] == ctx.identity() && !(xs[i] == ctx.identity())) {
          rep.injective = false;
          fail("a nontrivial element maps to the identity");
          rep.witness = {xs[i]};
          break;
        }
      }
    }

    auto check_pair = [&](CPElement const& x, CPElement const& fx,
                          CPElement const& y, CPElement const& fy) {
      ++rep.pairs_checked;
      CPElement const xy = ctx.multiply(x, y);
      if (!(image(ctx.representative(xy)) == ctx.multiply(fx, fy))) {
        rep.homomorphism = false;
        fail("homomorphism law fails");
        rep.witness = {x, y};
        return false;
      }
      return true;
    };
    if (rep.exhaustive_elems && size * size <= pair_budget) {
      rep.exhaustive_pairs = true;
      for (std::size_t i = 0; i < xs.size() && rep.homomorphism; ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (!check_pair(xs[i], images[i], xs[j], images[j])) {
            break;
          }
        }
      }
    } else {
      std::uniform_int_distribution<std::uint64_t> d(0, size - 1);
      for (std::size_t s = 0; s < pair_budget; ++s) {
        CPElement const x = ctx.element_at(d(rng));
        CPElement const y = ctx.element_at(d(rng));
        if (!check_pair(x, image(ctx.representative(x)), y,
                        image(ctx.representative(y)))) {
          break;
        }
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAutomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::uint64_t max_table = std::uint64_t{1} << 16;
  }

  FiniteAutomorphism FiniteAutomorphism::from_function(
      CPContext const&                                   ctx,
      std::size_t                                        n,
      std::function<CPElement(CPElement const&)> const& phi) {
    std::uint64_t const size = ctx.order_of_gamma_n(n);
    if (size > max_table) {
      throw CapacityError("|Gamma_n| = " + std::to_string(size)
                          + " exceeds the 2^16 table cap");
    }
    FiniteAutomorphism a(ctx, n);
    std::vector<char> hit(size, 0);
    for (std::uint64_t i = 0; i < size; ++i) {
      CPElement const y = phi(ctx.element_at(i));
      ctx.require_same(y);
      if (y.length() > n) {
        throw InputError("map leaves Gamma_" + std::to_string(n));
      }
      std::uint64_t const j = ctx.index_of(y);
      if (hit[j]) {
        throw InputError("map is not injective on Gamma_" + std::to_string(n));
      }
      hit[j] = 1;
      a._table.push_back(j);
    }
    return a;
  }

  FiniteAutomorphism FiniteAutomorphism::from_word(CPContext const& ctx,
                                                   AutWord const&   w,
                                                   std::size_t      n) {
    validate_word(ctx, w);
    return from_function(
        ctx, n, [&](CPElement const& x) { return apply_word(ctx, w, x); });
  }

  CPElement FiniteAutomorphism::operator()(CPElement const& x) const {
    if (x.length() > _n) {
      throw InputError("element outside Gamma_" + std::to_string(_n));
    }
    return _ctx.element_at(_table[_ctx.index_of(x)]);
  }

  bool FiniteAutomorphism::fixes_k() const {
    for (Elem k : _ctx.kg().k()) {
      CPElement const e = _ctx.embed_k(k);
      if (!((*this)(e) == e)) {
        return false;
      }
    }
    return true;
  }

  AutReport FiniteAutomorphism::verify(std::size_t   pair_budget,
                                       std::uint64_t seed) const {
    AutReport           rep;
    std::uint64_t const size = _table.size();
    rep.exhaustive_elems     = true;
    rep.elements_checked     = size;
    std::vector<char> hit(size, 0);
    for (std::uint64_t j : _table) {
      if (hit[j]) {
        rep.ok = rep.injective = false;
        rep.failure            = "table is not a bijection";
        return rep;
      }
      hit[j] = 1;
    }
    std::vector<CPElement> xs = _ctx.enumerate(size);
    auto check = [&](std::uint64_t i, std::uint64_t j) {
      ++rep.pairs_checked;
      std::uint64_t const ij = _ctx.index_of(_ctx.multiply(xs[i], xs[j]));
      CPElement const     lhs = xs[_table[ij]];
      CPElement const     rhs = _ctx.multiply(xs[_table[i]], xs[_table[j]]);
      if (!(lhs == rhs)) {
        rep.ok = rep.homomorphism = false;
        rep.failure               = "homomorphism law fails";
        rep.witness               = {xs[i], xs[j]};
        return false;
      }
      return true;
    };
    if (size * size <= pair_budget) {
      rep.exhaustive_pairs = true;
      for (std::uint64_t i = 0; i < size && rep.ok; ++i) {
        for (std::uint64_t j = 0; j < size && check(i, j); ++j) {
        }
      }
    } else {
      std::mt19937_64                              rng(seed);
      std::uniform_int_distribution<std::uint64_t> d(0, size - 1);
      for (std::size_t s = 0; s < pair_budget && check(d(rng), d(rng)); ++s) {
      }
    }
    return rep;
  }

  FiniteAutomorphism extend_automorphism(FiniteAutomorphism const& phi,
                                         std::size_t               n_prime) {
    CPContext const&  ctx = phi.context();
    std::size_t const n   = phi.level();
    if (n_prime < n) {
      throw InputError("extension level must be at least the source level");
    }
    if (!phi.fixes_k()) {
      throw InputError("automorphism moves an element of K");
    }
    Elem const one = ctx.group().identity();
    return FiniteAutomorphism::from_function(
        ctx, n_prime, [&](CPElement const& y) {
          std::vector<Elem> rep = ctx.representative(y);
          std::vector<Elem> lower(rep.begin(),
                                  rep.begin() + std::min(n, rep.size()));
          for (Coord c = 0; c < std::min(n, rep.size()); ++c) {
            rep[c] = one;
          }
          return ctx.multiply(phi(ctx.from_tuple(lower)), ctx.from_tuple(rep));
        });
  }

}  // namespace azbench
