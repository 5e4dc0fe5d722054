#include "azbench/f2.hpp"

#include "azbench/error.hpp"

namespace azbench {

  std::string to_bitstring(Bits x, unsigned dim) {
    std::string s(dim, '0');
    for (unsigned i = 0; i < dim; ++i) {
      if ((x >> i) & 1) {
        s[i] = '1';
      }
    }
    return s;
  }

  Bits from_bitstring(std::string const& s) {
    if (s.size() > max_f2_dim) {
      throw CapacityError("bitstring longer than 64");
    }
    Bits x = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        x |= unit(static_cast<unsigned>(i));
      } else if (s[i] != '0') {
        throw InputError("invalid bitstring '" + s + "'");
      }
    }
    return x;
  }

  LinearMap identity_map(unsigned dim) {
    LinearMap m;
    for (unsigned i = 0; i < dim; ++i) {
      m.columns.push_back(unit(i));
    }
    return m;
  }

  LinearMap compose(LinearMap const& outer, LinearMap const& inner) {
    LinearMap m;
    for (Bits c : inner.columns) {
      m.columns.push_back(outer(c));
    }
    return m;
  }

  std::size_t rank_of(std::span<Bits const> vectors) {
    F2Basis b;
    for (Bits v : vectors) {
      b.insert(v);
    }
    return b.size();
  }

  bool F2Basis::insert(Bits v) {
    Bits combo = unit(static_cast<unsigned>(_basis.size()));
    Bits r     = v;
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if ((r >> _pivots[i]) & 1) {
        r ^= _rows[i];
        combo ^= _combos[i];
      }
    }
    if (r == 0) {
      return false;
    }
    _basis.push_back(v);
    _rows.push_back(r);
    _combos.push_back(combo);
    _pivots.push_back(std::countr_zero(r));
    return true;
  }

  std::optional<Bits> F2Basis::coords(Bits v) const {
    Bits combo = 0;
    Bits r     = v;
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if ((r >> _pivots[i]) & 1) {
        r ^= _rows[i];
        combo ^= _combos[i];
      }
    }
    if (r != 0) {
      return std::nullopt;
    }
    return combo;
  }

  Bits F2Basis::combine(Bits coords) const noexcept {
    Bits r = 0;
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      if ((coords >> i) & 1) {
        r ^= _basis[i];
      }
    }
    return r;
  }

  std::vector<Bits> greedy_complement(F2Basis sub, unsigned dim) {
    std::vector<Bits> added;
    for (unsigned k = 0; k < dim && sub.size() < dim; ++k) {
      if (sub.insert(unit(k))) {
        added.push_back(unit(k));
      }
    }
    return added;
  }

  std::optional<LinearMap> invert(LinearMap const& m, unsigned dim) {
    if (m.columns.size() != dim) {
      return std::nullopt;
    }
    F2Basis b;
    for (Bits c : m.columns) {
      if (!b.insert(c)) {
        return std::nullopt;
      }
    }
    LinearMap inv;
    for (unsigned i = 0; i < dim; ++i) {
      auto c = b.coords(unit(i));
      if (!c) {
        return std::nullopt;
      }
      inv.columns.push_back(*c);
    }
    return inv;
  }

}  // namespace azbench
