#ifndef AZBENCH_WQO_HPP_
#define AZBENCH_WQO_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace azbench {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;
  // f(p) for each source position p; 0-based, strictly increasing.
  using Embedding = std::vector<std::size_t>;

  // Greedy leftmost match.
  std::optional<Embedding> is_subword(Word const& w1, Word const& w2);

  // f with w2[f(p)] = w1[p] such that every target position q is dominated
  // by an image position f(p) >= q carrying the same letter. Equivalently,
  // the image contains the last occurrence of every letter of w2. Returns
  // the lexicographically least such f.
  std::optional<Embedding> is_star_embedded(Word const& w1, Word const& w2);

  // Checks a witness against the definition directly.
  bool is_subword_embedding(Word const& w1, Word const& w2, Embedding const& f);
  bool is_star_embedding(Word const& w1, Word const& w2, Embedding const& f);

  // Distinct letters ordered by their last appearance in w.
  std::vector<Letter> last_appearance_order(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Column coding
  ////////////////////////////////////////////////////////////////////////

  // Padding sentinel; never a letter of an input word.
  inline constexpr Letter pad_symbol = ~Letter{0};

  // w = w_1 w_2 ... w_k s_k, cut at the last occurrences of the letters
  // s_1, ..., s_k (in last-appearance order): block 1 is [0, last s_1),
  // block l is [last s_{l-1}, last s_l). columns[t][l] is letter t of
  // block l, or pad_symbol.
  struct ColumnCode {
    std::vector<Letter>              order;   // s_1 .. s_k
    std::vector<std::size_t>         starts;  // start of each block in w
    std::vector<std::vector<Letter>> columns;
    std::size_t                      length = 0;
  };

  ColumnCode column_code(Word const& w);

  // Column t of `from` fits column u of `to` if every non-padding entry
  // agrees.
  bool column_fits(std::vector<Letter> const& from, std::vector<Letter> const& to);

  // Higman embedding of the column words under column_fits, greedy.
  std::optional<std::vector<std::size_t>> code_embedding(ColumnCode const& a,
                                                         ColumnCode const& b);

  // The letter-level map induced by a column embedding; both words must
  // share the last-appearance order.
  Embedding decode_embedding(Word const&                     w1,
                             ColumnCode const&               a,
                             ColumnCode const&               b,
                             std::vector<std::size_t> const& columns);

  ////////////////////////////////////////////////////////////////////////
  // Pair finding
  ////////////////////////////////////////////////////////////////////////

  enum class PairMode { higman, star };

  // Pull-based source; nullopt when exhausted.
  using WordStream = std::function<std::optional<Word>()>;

  struct IncreasingPair {
    std::size_t i = 0;  // 0-based stream positions, i < j
    std::size_t j = 0;
    Embedding   f;
    std::size_t words_read = 0;
  };

  // Higman mode compares each newcomer with all earlier words (which form an
  // antichain until a pair exists). Star mode buckets words by last-appearance
  // order (a *-embedding forces equal orders) and compares column codes
  // inside the bucket; each decoded witness is re-checked with
  // is_star_embedding. nullopt when the stream ends, or after max_words.
  std::optional<IncreasingPair> find_increasing_pair(WordStream const& stream,
                                                     PairMode          mode,
                                                     std::size_t max_words
                                                     = SIZE_MAX);
  std::optional<IncreasingPair> find_increasing_pair(
      std::vector<Word> const& words,
      PairMode                 mode);

}  // namespace azbench

#endif  // AZBENCH_WQO_HPP_
