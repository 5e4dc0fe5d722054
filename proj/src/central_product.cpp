#include "azbench/central_product.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "azbench/error.hpp"

namespace azbench {

  namespace {
    std::atomic<std::uint64_t> next_context_id{1};

    bool mul_overflows(std::uint64_t a, std::uint64_t b) {
      return b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b;
    }
  }  // namespace

  Coord CPElement::length() const noexcept {
    if (!_labels.empty()) {
      return _labels.back().first + 1;
    }
    return _kappa == _one ? 0 : 1;
  }

  CPContext::CPContext(KGroupSpec kg) {
    auto d = std::make_shared<Data>(Data{std::move(kg), next_context_id++,
                                         {}, {}, {}, {}});
    KGroupSpec const& k = d->kg;
    std::size_t const r = k.transversal().size();
    d->coset_min.assign(r, 0);
    std::vector<char> seen(r, 0);
    for (Elem a : k.element_order()) {
      std::size_t const c = k.coset_of(a);
      if (!seen[c]) {
        seen[c]         = 1;
        d->coset_min[c] = a;
        d->rank_coset.push_back(static_cast<int>(c));
      }
    }
    d->coset_rank.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      d->coset_rank[d->rank_coset[i]] = static_cast<int>(i);
    }
    for (Elem a : d->coset_min) {
      d->min_kpart.push_back(k.k_part(a));
    }
    _data = std::move(d);
  }

  void CPContext::require_same(CPElement const& x) const {
    if (x._context != _data->id) {
      throw InputError("element belongs to a different central product");
    }
  }

  CPElement CPContext::finish(std::vector<std::pair<Coord, std::uint16_t>> labels,
                              Elem kappa) const {
    CPElement e;
    e._labels  = std::move(labels);
    e._kappa   = kappa;
    e._one     = group().identity();
    e._context = _data->id;
    return e;
  }

  CPElement CPContext::make(Support const& support) const {
    GroupTable const& g  = group();
    KGroupSpec const& kg = _data->kg;
    Support           s  = support;
    std::sort(s.begin(), s.end());
    std::vector<std::pair<Coord, std::uint16_t>> labels;
    Elem                                         kappa = g.identity();
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto [c, a] = s[i];
      if (a >= g.order()) {
        throw InputError("element index " + std::to_string(a)
                         + " out of range");
      }
      if (i > 0 && s[i - 1].first == c) {
        throw InputError("coordinate " + std::to_string(c) + " given twice");
      }
      kappa = g.mul(kappa, kg.k_part(a));
      if (std::size_t const t = kg.coset_of(a); t != 0) {
        labels.emplace_back(c, static_cast<std::uint16_t>(t));
      }
    }
    return finish(std::move(labels), kappa);
  }

  CPElement CPContext::from_tuple(std::vector<Elem> const& tuple) const {
    Support s;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] != group().identity()) {
        s.emplace_back(i, tuple[i]);
      }
    }
    return make(s);
  }

  CPElement CPContext::identity() const {
    return finish({}, group().identity());
  }

  CPElement CPContext::embed(Elem g, Coord i) const {
    return make({{i, g}});
  }

  CPElement CPContext::embed_k(Elem k) const {
    if (k >= group().order() || !_data->kg.in_k(k)) {
      throw InputError("embed_k: element is not in K");
    }
    return finish({}, k);
  }

  CPElement CPContext::multiply(CPElement const& x, CPElement const& y) const {
    require_same(x);
    require_same(y);
    GroupTable const& g  = group();
    KGroupSpec const& kg = _data->kg;
    auto const&       t  = kg.transversal();
    std::vector<std::pair<Coord, std::uint16_t>> labels;
    Elem kappa = g.mul(x._kappa, y._kappa);
    auto add   = [&](Coord c, Elem a) {
      kappa = g.mul(kappa, kg.k_part(a));
      if (std::size_t const l = kg.coset_of(a); l != 0) {
        labels.emplace_back(c, static_cast<std::uint16_t>(l));
      }
    };
    auto xi = x._labels.begin(), yi = y._labels.begin();
    while (xi != x._labels.end() || yi != y._labels.end()) {
      if (yi == y._labels.end()
          || (xi != x._labels.end() && xi->first < yi->first)) {
        add(xi->first, t[xi->second]);
        ++xi;
      } else if (xi == x._labels.end() || yi->first < xi->first) {
        add(yi->first, t[yi->second]);
        ++yi;
      } else {
        add(xi->first, g.mul(t[xi->second], t[yi->second]));
        ++xi;
        ++yi;
      }
    }
    return finish(std::move(labels), kappa);
  }

  CPElement CPContext::inverse(CPElement const& x) const {
    require_same(x);
    GroupTable const& g  = group();
    KGroupSpec const& kg = _data->kg;
    std::vector<std::pair<Coord, std::uint16_t>> labels;
    Elem kappa = g.inv(x._kappa);
    for (auto [c, l] : x._labels) {
      Elem const a = g.inv(kg.transversal()[l]);
      kappa        = g.mul(kappa, kg.k_part(a));
      labels.emplace_back(c, static_cast<std::uint16_t>(kg.coset_of(a)));
    }
    return finish(std::move(labels), kappa);
  }

  std::vector<Elem> CPContext::representative(CPElement const& x) const {
    require_same(x);
    GroupTable const& g = group();
    std::vector<Elem> rep(x.length(), g.identity());
    for (auto [c, l] : x._labels) {
      rep[c] = _data->kg.transversal()[l];
    }
    if (!rep.empty()) {
      rep[0] = g.mul(rep[0], x._kappa);
    }
    return rep;
  }

  std::vector<Elem> CPContext::minimal_representative(CPElement const& x) const {
    require_same(x);
    GroupTable const& g  = group();
    KGroupSpec const& kg = _data->kg;
    std::vector<Elem> rep(x.length(), g.identity());
    if (rep.empty()) {
      return rep;
    }
    // K-part still owed by coordinate 0
    Elem owed = x._kappa;
    for (auto [c, l] : x._labels) {
      if (c == 0) {
        continue;
      }
      rep[c] = _data->coset_min[l];
      owed   = g.mul(owed, g.inv(_data->min_kpart[l]));
    }
    std::size_t const t0 = x._labels.empty() || x._labels.front().first != 0
                               ? 0
                               : x._labels.front().second;
    rep[0] = g.mul(kg.transversal()[t0], owed);
    while (!rep.empty() && rep.back() == g.identity()) {
      rep.pop_back();
    }
    return rep;
  }

  std::optional<Coord> CPContext::highest_difference(CPElement const& x,
                                                     CPElement const& y) const {
    std::vector<Elem> const a = minimal_representative(x);
    std::vector<Elem> const b = minimal_representative(y);
    Elem const              one = group().identity();
    for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
      Elem const ai = i < a.size() ? a[i] : one;
      Elem const bi = i < b.size() ? b[i] : one;
      if (ai != bi) {
        return i;
      }
    }
    return std::nullopt;
  }

  int CPContext::compare(CPElement const& x, CPElement const& y) const {
    std::vector<Elem> const a = minimal_representative(x);
    std::vector<Elem> const b = minimal_representative(y);
    Elem const              one = group().identity();
    for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
      Elem const  ai = i < a.size() ? a[i] : one;
      Elem const  bi = i < b.size() ? b[i] : one;
      std::size_t pa = _data->kg.pos(ai), pb = _data->kg.pos(bi);
      if (pa != pb) {
        return pa < pb ? -1 : 1;
      }
    }
    return 0;
  }

  std::uint64_t CPContext::index_of(CPElement const& x) const {
    std::vector<Elem> const rep = minimal_representative(x);
    if (rep.empty()) {
      return 0;
    }
    std::uint64_t const r     = coset_count();
    std::uint64_t       index = 0;
    for (std::size_t i = rep.size(); i-- > 1;) {
      std::uint64_t const d = _data->coset_rank[_data->kg.coset_of(rep[i])];
      if (mul_overflows(index, r) || index * r > UINT64_MAX - d) {
        throw CapacityError("enumeration index exceeds 2^64");
      }
      index = index * r + d;
    }
    std::uint64_t const n = group().order();
    std::uint64_t const p = _data->kg.pos(rep[0]);
    if (mul_overflows(index, n) || index * n > UINT64_MAX - p) {
      throw CapacityError("enumeration index exceeds 2^64");
    }
    return index * n + p;
  }

  CPElement CPContext::element_at(std::uint64_t index) const {
    KGroupSpec const& kg = _data->kg;
    std::uint64_t const n = group().order();
    std::uint64_t const r = coset_count();
    Support s;
    Elem const a0 = kg.element_order()[index % n];
    index /= n;
    if (index != 0 && r == 1) {
      throw CapacityError("element_at: index beyond Gamma, which is finite when K = G");
    }
    if (a0 != group().identity()) {
      s.emplace_back(0, a0);
    }
    for (Coord c = 1; index != 0; ++c) {
      std::uint64_t const d = index % r;
      index /= r;
      if (d != 0) {
        s.emplace_back(c, _data->coset_min[_data->rank_coset[d]]);
      }
    }
    return make(s);
  }

  std::vector<CPElement> CPContext::enumerate(std::uint64_t count) const {
    std::vector<CPElement> out;
    out.reserve(count);
    CPEnumerator cursor(*this);
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(cursor.next());
    }
    return out;
  }

  std::uint64_t CPContext::order_of_gamma_n(std::size_t n) const {
    if (n == 0) {
      throw InputError("order_of_gamma_n: n must be at least 1");
    }
    std::uint64_t result = group().order();
    for (std::size_t i = 1; i < n; ++i) {
      if (mul_overflows(result, coset_count())) {
        throw CapacityError("|Gamma_n| exceeds 2^64");
      }
      result *= coset_count();
    }
    return result;
  }

}  // namespace azbench
