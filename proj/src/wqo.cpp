#include "azbench/wqo.hpp"

#include <algorithm>
#include <map>

namespace azbench {

  std::optional<Embedding> is_subword(Word const& w1, Word const& w2) {
    Embedding   f;
    std::size_t q = 0;
    for (Letter a : w1) {
      while (q < w2.size() && w2[q] != a) {
        ++q;
      }
      if (q == w2.size()) {
        return std::nullopt;
      }
      f.push_back(q++);
    }
    return f;
  }

  bool is_subword_embedding(Word const& w1, Word const& w2, Embedding const& f) {
    if (f.size() != w1.size()) {
      return false;
    }
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (f[p] >= w2.size() || w2[f[p]] != w1[p]
          || (p > 0 && f[p] <= f[p - 1])) {
        return false;
      }
    }
    return true;
  }

  bool is_star_embedding(Word const& w1, Word const& w2, Embedding const& f) {
    if (!is_subword_embedding(w1, w2, f)) {
      return false;
    }
    for (std::size_t q = 0; q < w2.size(); ++q) {
      bool covered = false;
      for (std::size_t p = 0; p < f.size() && !covered; ++p) {
        covered = f[p] >= q && w2[f[p]] == w2[q];
      }
      if (!covered) {
        return false;
      }
    }
    return true;
  }

  std::vector<Letter> last_appearance_order(Word const& w) {
    std::vector<Letter> order;
    for (std::size_t q = w.size(); q-- > 0;) {
      if (std::find(order.begin(), order.end(), w[q]) == order.end()) {
        order.push_back(w[q]);
      }
    }
    std::reverse(order.begin(), order.end());
    return order;
  }

  std::optional<Embedding> is_star_embedded(Word const& w1, Word const& w2) {
    std::size_t const n = w1.size(), m = w2.size();
    if (n > m) {
      return std::nullopt;
    }
    if (n == 0) {
      return m == 0 ? std::optional<Embedding>(Embedding{}) : std::nullopt;
    }
    std::vector<char> mandatory(m, 0);
    {
      std::map<Letter, std::size_t> last;
      for (std::size_t q = 0; q < m; ++q) {
        last[w2[q]] = q;
      }
      for (auto const& entry : last) {
        mandatory[entry.second] = 1;
      }
    }
    // next_mandatory[q]: the first last-occurrence position > q, or m
    std::vector<std::size_t> next_mandatory(m + 1, m);
    for (std::size_t q = m; q-- > 0;) {
      next_mandatory[q] = q + 1 < m && mandatory[q + 1] ? q + 1
                                                        : next_mandatory[q + 1];
    }
    std::size_t const first_mandatory = mandatory[0] ? 0 : next_mandatory[0];

    // ok[p][q]: w1[p] at q, and w1[p+1..] fits above q hitting every
    // mandatory position above q.
    std::vector<std::vector<char>> ok(n, std::vector<char>(m, 0));
    for (std::size_t p = n; p-- > 0;) {
      for (std::size_t q = 0; q < m; ++q) {
        if (w2[q] != w1[p]) {
          continue;
        }
        if (p + 1 == n) {
          ok[p][q] = next_mandatory[q] == m;
          continue;
        }
        std::size_t const hi = std::min(next_mandatory[q], m - 1);
        for (std::size_t r = q + 1; r <= hi && !ok[p][q]; ++r) {
          ok[p][q] = ok[p + 1][r];
        }
      }
    }
    Embedding   f;
    std::size_t lo = 0, hi = std::min(first_mandatory, m - 1);
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t q = lo;
      while (q <= hi && !ok[p][q]) {
        ++q;
      }
      if (q > hi) {
        return std::nullopt;
      }
      f.push_back(q);
      lo = q + 1;
      hi = std::min(next_mandatory[q], m - 1);
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Column coding
  ////////////////////////////////////////////////////////////////////////

  ColumnCode column_code(Word const& w) {
    ColumnCode c;
    c.length            = w.size();
    c.order             = last_appearance_order(w);
    std::size_t const k = c.order.size();
    std::vector<std::size_t> last(k);
    for (std::size_t l = 0; l < k; ++l) {
      last[l] = static_cast<std::size_t>(
          std::find(w.rbegin(), w.rend(), c.order[l]).base() - w.begin() - 1);
    }
    std::size_t longest = 0;
    for (std::size_t l = 0; l < k; ++l) {
      c.starts.push_back(l == 0 ? 0 : last[l - 1]);
      longest = std::max(longest, last[l] - c.starts[l]);
    }
    c.columns.assign(longest, std::vector<Letter>(k, pad_symbol));
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t t = 0; c.starts[l] + t < last[l]; ++t) {
        c.columns[t][l] = w[c.starts[l] + t];
      }
    }
    return c;
  }

  bool column_fits(std::vector<Letter> const& from, std::vector<Letter> const& to) {
    if (from.size() != to.size()) {
      return false;
    }
    for (std::size_t l = 0; l < from.size(); ++l) {
      if (from[l] != pad_symbol && from[l] != to[l]) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::vector<std::size_t>> code_embedding(ColumnCode const& a,
                                                         ColumnCode const& b) {
    if (a.order != b.order) {
      return std::nullopt;
    }
    std::vector<std::size_t> g;
    std::size_t              u = 0;
    for (auto const& col : a.columns) {
      while (u < b.columns.size() && !column_fits(col, b.columns[u])) {
        ++u;
      }
      if (u == b.columns.size()) {
        return std::nullopt;
      }
      g.push_back(u++);
    }
    return g;
  }

  Embedding decode_embedding(Word const&                     w1,
                             ColumnCode const&               a,
                             ColumnCode const&               b,
                             std::vector<std::size_t> const& columns) {
    std::size_t const k = a.order.size();
    Embedding         f;
    for (std::size_t l = 0; l < k; ++l) {
      std::size_t const end = l + 1 < k ? a.starts[l + 1] : w1.size() - 1;
      for (std::size_t p = a.starts[l]; p < end; ++p) {
        f.push_back(b.starts[l] + columns[p - a.starts[l]]);
      }
    }
    if (k > 0) {
      f.push_back(b.length - 1);  // the final letter s_k
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pair finding
  ////////////////////////////////////////////////////////////////////////

  std::optional<IncreasingPair> find_increasing_pair(WordStream const& stream,
                                                     PairMode          mode,
                                                     std::size_t max_words) {
    std::vector<Word> seen;
    // star mode: last-appearance order -> (stream index, code)
    std::map<std::vector<Letter>,
             std::vector<std::pair<std::size_t, ColumnCode>>>
        buckets;
    while (seen.size() < max_words) {
      std::optional<Word> next = stream();
      if (!next) {
        return std::nullopt;
      }
      std::size_t const j = seen.size();
      seen.push_back(std::move(*next));
      Word const& wj = seen.back();
      if (mode == PairMode::higman) {
        for (std::size_t i = 0; i < j; ++i) {
          if (auto f = is_subword(seen[i], wj)) {
            return IncreasingPair{i, j, std::move(*f), j + 1};
          }
        }
        continue;
      }
      ColumnCode code   = column_code(wj);
      auto&      bucket = buckets[code.order];
      for (auto const& [i, ci] : bucket) {
        if (auto cols = code_embedding(ci, code)) {
          Embedding f = decode_embedding(seen[i], ci, code, *cols);
          if (is_star_embedding(seen[i], wj, f)) {
            return IncreasingPair{i, j, std::move(f), j + 1};
          }
        }
      }
      bucket.emplace_back(j, std::move(code));
    }
    return std::nullopt;
  }

  std::optional<IncreasingPair> find_increasing_pair(
      std::vector<Word> const& words,
      PairMode                 mode) {
    std::size_t next = 0;
    return find_increasing_pair(
        [&]() -> std::optional<Word> {
          if (next == words.size()) {
            return std::nullopt;
          }
          return words[next++];
        },
        mode);
  }

}  // namespace azbench
