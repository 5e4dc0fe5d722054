#include "azbench/az_engine.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "azbench/error.hpp"

namespace azbench {

  std::vector<Word> family_words(CPContext const&            ctx,
                                 std::vector<CPTuple> const& family,
                                 std::vector<Column>*        letters) {
    Elem const                 one = ctx.group().identity();
    std::map<Column, Letter>   ids;
    std::vector<Word>          words;
    std::size_t const          arity = family.empty() ? 0 : family[0].size();
    for (CPTuple const& member : family) {
      if (member.size() != arity) {
        throw InputError("family members must have the same arity");
      }
      std::vector<std::vector<Elem>> rows;
      std::size_t                    len = 0;
      for (CPElement const& x : member) {
        rows.push_back(ctx.minimal_representative(x));
        len = std::max(len, rows.back().size());
      }
      Word w;
      for (std::size_t t = 0; t < len; ++t) {
        Column col;
        for (auto const& row : rows) {
          col.push_back(t < row.size() ? row[t] : one);
        }
        auto [it, fresh] = ids.emplace(col, static_cast<Letter>(letters->size()));
        if (fresh) {
          letters->push_back(col);
        }
        w.push_back(it->second);
      }
      words.push_back(std::move(w));
    }
    return words;
  }

  NormalizedFamily normalize_family(CPContext const&            ctx,
                                    std::vector<CPTuple> const& family) {
    if (family.size() < 2) {
      throw InsufficientFamily("a family needs at least two members");
    }
    NormalizedFamily nf;
    nf.arity = family[0].size();
    std::vector<Word> const words = family_words(ctx, family, &nf.letters);
    unsigned const          m     = ctx.exponent();

    struct Signature {
      std::vector<Letter>      order;
      std::vector<std::size_t> residues;
      auto operator<=>(Signature const&) const = default;
    };
    std::map<Signature, std::vector<std::size_t>> buckets;
    for (std::size_t k = 0; k < words.size(); ++k) {
      Signature sig{last_appearance_order(words[k]), {}};
      for (Letter a : sig.order) {
        sig.residues.push_back(
            static_cast<std::size_t>(std::count(words[k].begin(), words[k].end(), a))
            % m);
      }
      buckets[sig].push_back(k);
    }
    std::vector<std::size_t> const* best = nullptr;
    std::vector<Letter> const*      best_order = nullptr;
    for (auto const& [sig, members] : buckets) {
      if (members.size() < 2) {
        continue;
      }
      if (!best || members.size() > best->size()
          || (members.size() == best->size() && members[0] < (*best)[0])) {
        best       = &members;
        best_order = &sig.order;
      }
    }
    if (!best) {
      throw InsufficientFamily(
          "no two members share letters, last-appearance order and letter "
          "counts mod " + std::to_string(m));
    }
    nf.alphabet = *best_order;
    nf.kept     = *best;
    for (std::size_t k : nf.kept) {
      nf.words.push_back(words[k]);
      std::vector<std::size_t> c;
      for (Letter a : nf.alphabet) {
        c.push_back(static_cast<std::size_t>(
            std::count(words[k].begin(), words[k].end(), a)));
      }
      nf.counts.push_back(std::move(c));
    }
    return nf;
  }

  BetaMap build_beta(NormalizedFamily const& nf, unsigned exponent) {
    auto const pair = find_increasing_pair(nf.words, PairMode::star);
    if (!pair) {
      throw InsufficientFamily("no *-embedded pair among the "
                               + std::to_string(nf.kept.size())
                               + " normalized members");
    }
    Word const& wi = nf.words[pair->i];
    Word const& wj = nf.words[pair->j];
    BetaMap     bm;
    bm.i        = nf.kept[pair->i];
    bm.j        = nf.kept[pair->j];
    bm.f        = pair->f;
    bm.len_i    = wi.size();
    bm.len_j    = wj.size();
    bm.exponent = exponent;
    bm.alphabet = nf.alphabet;

    std::vector<long> preimage(bm.len_j, -1);
    for (std::size_t p = 0; p < bm.f.size(); ++p) {
      preimage[bm.f[p]] = static_cast<long>(p);
    }
    bm.head_source.assign(bm.len_j, 0);
    for (Letter h : bm.alphabet) {
      Coord const last = static_cast<Coord>(
          std::find(wj.rbegin(), wj.rend(), h).base() - wj.begin() - 1);
      if (preimage[last] < 0) {
        throw Error("internal: last occurrence outside the embedding image");
      }
      std::vector<Coord> I;
      for (Coord t = 0; t < bm.len_j; ++t) {
        if (wj[t] == h && preimage[t] < 0) {
          I.push_back(t);
          bm.head_source[t] = static_cast<Coord>(preimage[last]);
        }
      }
      if (I.size() % exponent != 0) {
        throw Error("internal: |I_s| = " + std::to_string(I.size())
                    + " is not divisible by the exponent");
      }
      bm.i_s.push_back(last);
      bm.I_s.push_back(std::move(I));
    }
    for (Coord t = 0; t < bm.len_j; ++t) {
      if (preimage[t] >= 0) {
        bm.head_source[t] = static_cast<Coord>(preimage[t]);
      }
    }
    return bm;
  }

  CPElement apply_beta(CPContext const& ctx, BetaMap const& bm, CPElement const& x) {
    std::vector<Elem> const rep = ctx.representative(x);
    Elem const              one = ctx.group().identity();
    std::size_t const       len
        = rep.size() > bm.len_i ? rep.size() - bm.len_i + bm.len_j : bm.len_j;
    Support s;
    for (Coord t = 0; t < len; ++t) {
      Coord const src = bm.source_of(t);
      if (src < rep.size() && rep[src] != one) {
        s.emplace_back(t, rep[src]);
      }
    }
    return ctx.make(s);
  }

  WordBounds minimal_word_bounds(BetaMap const& bm) {
    WordBounds b;
    b.l_prime = bm.len_j;  // l(a_j) + 1
    b.l       = std::max(b.l_prime + 1, b.l_prime + bm.len_j - bm.len_i);
    return b;
  }

  AutWord beta_as_word(CPContext const& ctx, BetaMap const& bm, Coord l, Coord l_prime) {
    WordBounds const least = minimal_word_bounds(bm);
    if (l_prime < least.l_prime || l < l_prime + 1
        || l < l_prime + bm.len_j - bm.len_i) {
      throw InputError("need l' >= " + std::to_string(least.l_prime)
                       + " and l >= max(l' + 1, l' + l(a_j) - l(a_i)); the "
                         "minimal choice is l' = "
                       + std::to_string(least.l_prime)
                       + ", l = " + std::to_string(least.l));
    }
    std::map<Coord, Coord> sigma;
    std::vector<char>      used(l + 1, 0);
    for (Coord p = 0; p < bm.len_i; ++p) {
      sigma[p]        = bm.f[p];
      used[bm.f[p]]   = 1;
    }
    for (Coord t = bm.len_i; t <= l_prime; ++t) {
      Coord const to = t + bm.len_j - bm.len_i;
      sigma[t]       = to;
      used[to]       = 1;
    }
    Coord free = 0;
    for (Coord t = l_prime + 1; t <= l; ++t) {
      while (used[free]) {
        ++free;
      }
      sigma[t]    = free;
      used[free]  = 1;
    }
    AutWord w;
    Perm    p = Perm::from_map(std::move(sigma));
    if (!p.is_identity()) {
      w.emplace_back(std::move(p));
    }
    for (std::size_t s = 0; s < bm.I_s.size(); ++s) {
      if (bm.I_s[s].empty()) {
        continue;
      }
      AutWord a = alpha_word(ctx, bm.I_s[s], bm.i_s[s], l + 1);
      w.insert(w.end(), a.begin(), a.end());
    }
    return w;
  }

  AzCertificate run_az(CPContext const&            ctx,
                       std::vector<CPTuple> const& family,
                       AzOptions const&            options) {
    AzCertificate cert;
    cert.nf     = normalize_family(ctx, family);
    cert.beta   = build_beta(cert.nf, ctx.exponent());
    cert.bounds = options.bounds ? *options.bounds : minimal_word_bounds(cert.beta);
    cert.word   = beta_as_word(ctx, cert.beta, cert.bounds.l, cert.bounds.l_prime);
    cert.order_coset_compatible = is_coset_compatible(ctx.kg());

    BetaMap const& bm   = cert.beta;
    auto           beta = [&](CPElement const& x) { return apply_beta(ctx, bm, x); };
    auto           fail = [&](bool& flag, std::string what,
                    std::vector<CPElement> witness) {
      flag = false;
      if (cert.ok) {
        cert.ok      = false;
        cert.failure = std::move(what);
        cert.witness = std::move(witness);
      }
    };

    // (a) the i-th tuple goes to the j-th
    for (std::size_t c = 0; c < family[bm.i].size(); ++c) {
      if (!(beta(family[bm.i][c]) == family[bm.j][c])) {
        fail(cert.maps_tuple, "beta does not map a_i to a_j",
             {family[bm.i][c], family[bm.j][c]});
      }
    }

    // (b) order preservation on the enumerated prefix
    std::vector<CPElement> const prefix = ctx.enumerate(options.depth);
    std::vector<CPElement>       images;
    for (CPElement const& x : prefix) {
      images.push_back(beta(x));
    }
    for (std::size_t k = 0; k + 1 < prefix.size(); ++k) {
      ++cert.order_checks;
      if (ctx.compare(images[k], images[k + 1]) >= 0) {
        fail(cert.order_preserved, "beta reverses the order of v_k < v_k+1",
             {prefix[k], prefix[k + 1]});
        break;
      }
    }

    // (b), (c) and the homomorphism law on random pairs of support <= l'
    std::mt19937_64   rng(options.seed);
    std::size_t const n     = cert.bounds.l_prime + 1;
    std::size_t const pairs = options.depth * options.random_pairs_per_element;
    CPElement const   one   = ctx.identity();
    for (std::size_t s = 0; s < pairs; ++s) {
      CPElement x = random_element(ctx, n, rng);
      CPElement y = random_element(ctx, n, rng);
      int const c = ctx.compare(x, y);
      if (c == 0) {
        continue;
      }
      if (c > 0) {
        std::swap(x, y);
      }
      CPElement const bx = beta(x), by = beta(y);
      ++cert.order_checks;
      if (cert.order_preserved && ctx.compare(bx, by) >= 0) {
        fail(cert.order_preserved, "beta reverses the order of a random pair",
             {x, y});
      }
      std::optional<Coord> const t0 = ctx.highest_difference(x, y);
      if (t0 && *t0 >= bm.len_i) {
        ++cert.index_law_checks;
        std::optional<Coord> const t1 = ctx.highest_difference(bx, by);
        if (cert.index_law && (!t1 || *t1 != *t0 + bm.len_j - bm.len_i)) {
          fail(cert.index_law, "maximal differing index is not shifted by "
                               "l(a_j) - l(a_i)",
               {x, y});
        }
      }
      ++cert.homomorphism_checks;
      if (cert.homomorphism && !(beta(ctx.multiply(x, y)) == ctx.multiply(bx, by))) {
        fail(cert.homomorphism, "beta is not multiplicative", {x, y});
      }
      if (cert.injective && ((bx == one) != (x == one) || (by == one) != (y == one))) {
        fail(cert.injective, "beta sends a nontrivial element to 1", {x, y});
      }
    }

    // (d) word agreement: on every single-coordinate generator with support
    // <= l' (both sides are homomorphisms, so this covers the subgroup they
    // generate), plus random elements as a direct check.
    Elem const e = ctx.group().identity();
    for (Coord c = 0; c <= cert.bounds.l_prime && cert.word_agrees; ++c) {
      for (std::size_t g = 0; g < ctx.group().order(); ++g) {
        if (g == e) {
          continue;
        }
        CPElement const x = ctx.embed(static_cast<Elem>(g), c);
        ++cert.agreement_checks;
        if (!(apply_word(ctx, cert.word, x) == beta(x))) {
          fail(cert.word_agrees, "word and beta disagree on a generator", {x});
          break;
        }
      }
    }
    for (std::size_t s = 0; s < options.depth && cert.word_agrees; ++s) {
      CPElement const x = random_element(ctx, n, rng);
      ++cert.agreement_checks;
      if (!(apply_word(ctx, cert.word, x) == beta(x))) {
        fail(cert.word_agrees, "word and beta disagree", {x});
      }
    }
    return cert;
  }

}  // namespace azbench
