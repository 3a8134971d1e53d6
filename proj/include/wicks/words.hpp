/* Involutive alphabets, linear and cyclic words, free reduction, factor
 * extraction and square-freeness. */
#pragma once

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wicks {

/// A letter over an involutive integer alphabet: |value| is the base id
/// (>= 1), the sign of value is the exponent. The inverse flips the sign.
struct Letter {
    int32_t value = 0;

    constexpr Letter() = default;
    constexpr explicit Letter(int32_t v) : value(v) {}

    constexpr int32_t base() const { return value < 0 ? -value : value; }
    constexpr bool positive() const { return value > 0; }
    constexpr Letter inverse() const { return Letter(-value); }

    constexpr bool operator==(const Letter& o) const { return value == o.value; }
    constexpr bool operator!=(const Letter& o) const { return value != o.value; }

    // Order: base ascending, then positive before negative.
    constexpr bool operator<(const Letter& o) const {
        if (base() != o.base()) return base() < o.base();
        return value > 0 && o.value < 0;
    }
};

using Word = std::vector<Letter>;

Word make_word(std::initializer_list<int32_t> values);
Word inverse(const Word& w);

/// Signed-decimal token format, e.g. "1 2 -1 -2". Empty string is the
/// empty word. Throws std::invalid_argument on bad tokens (including 0).
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

/// A word considered up to rotation. The stored representative is the
/// lexicographically least rotation under the Letter order.
class CyclicWord {
  public:
    CyclicWord() = default;
    explicit CyclicWord(Word w);

    const Word& representative() const { return rep_; }
    std::size_t size() const { return rep_.size(); }
    bool empty() const { return rep_.empty(); }

    /// The rotation starting at position r of the representative.
    Word rotation(std::size_t r) const;

    bool operator==(const CyclicWord& o) const { return rep_ == o.rep_; }
    bool operator!=(const CyclicWord& o) const { return rep_ != o.rep_; }
    bool operator<(const CyclicWord& o) const;

  private:
    Word rep_;
};

Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// The |w| cyclic factors of length k (k >= 1), one per start position,
/// wrapping as needed. Empty input gives an empty result.
std::vector<Word> cyclic_factors(const CyclicWord& w, std::size_t k);

/// Linear square-freeness (no factor uu, u nonempty); with cyclic=true,
/// every rotation must be linearly square-free.
bool square_free_status(const Word& w, bool cyclic);

/// Length-n prefix of the fixed point of 1->123, 2->13, 3->2 starting
/// from 1; square-free over bases {1,2,3}, all signs positive.
Word thue_word(std::size_t n);

} // namespace wicks
