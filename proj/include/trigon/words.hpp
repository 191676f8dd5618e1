#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigon/group_graph.hpp"

namespace trigon {

enum class Letter : std::uint8_t { a = 0, b = 1 };

inline Letter swap_letter(Letter l) { return l == Letter::a ? Letter::b : Letter::a; }
inline char to_char(Letter l) { return l == Letter::a ? 'a' : 'b'; }

struct Block {
    Letter letter = Letter::a;
    int exp = 1;

    bool operator==(const Block&) const = default;
};

using Blocks = std::vector<Block>;

/// Total number of letters.
std::size_t letter_length(const Blocks& blocks);

/// True when consecutive blocks carry different letters (cyclically if asked).
bool alternates(const Blocks& blocks, bool cyclic);

/// Appends letter^exp, merging with a trailing block of the same letter; exp = 0 is a no-op.
void append(Blocks& blocks, Letter letter, int exp);
void append(Blocks& blocks, const Blocks& tail);
Blocks repeat(const Blocks& blocks, int times);

/// Semi-infinite word preperiod . period^infinity in run-length form.
class EPWord {
public:
    EPWord() = default;
    EPWord(Blocks preperiod, Blocks period);

    const Blocks& preperiod() const { return preperiod_; }
    const Blocks& period() const { return period_; }

    std::size_t preperiod_letters() const { return pre_letters_; }
    std::size_t period_letters() const { return per_letters_; }

    /// i-th letter of the expansion.
    Letter letter_at(std::size_t i) const;
    /// The block the word starts with.
    const Block& first_block() const { return preperiod_.empty() ? period_.front() : preperiod_.front(); }
    /// Block i of the (infinite) block sequence.
    const Block& block_at(std::size_t i) const;
    std::size_t distinct_shifts() const { return preperiod_.size() + period_.size(); }

    /// Shortest preperiod, primitive period; two words have the same expansion
    /// iff their normal forms are equal.
    EPWord normalized() const;

    bool operator==(const EPWord&) const = default;

private:
    Blocks preperiod_;
    Blocks period_;
    std::size_t pre_letters_ = 0;
    std::size_t per_letters_ = 0;
    std::vector<std::size_t> pre_offsets_;
    std::vector<std::size_t> per_offsets_;
};

/// Periodic bi-infinite word up to rotation, stored in its canonical rotation:
/// the rotation whose periodic expansion is lexicographically least.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(Blocks blocks);

    const Blocks& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    std::size_t letters() const { return letter_length(blocks_); }

    /// Rotation starting at block i, as a periodic word.
    EPWord rotation(std::size_t i) const;
    /// Not a proper power of a shorter word.
    bool primitive() const;

    bool operator==(const CyclicWord&) const = default;

private:
    Blocks blocks_;
};

struct KneadingSet {
    EPWord u_L, u_R, v_L, v_R;

    bool operator==(const KneadingSet&) const = default;
};

/// Drops the leading block.
EPWord supershift(const EPWord& w);
EPWord prepend(const Block& block, const EPWord& w);

std::strong_ordering lex_compare(const EPWord& x, const EPWord& y);

KneadingSet closed_form_kneading(const TriangleParams& params);
/// Normalizes all four words of a set.
KneadingSet normalized(const KneadingSet& k);
/// The two codes of the exceptional orbit; throws NoException when r is infinite.
std::pair<CyclicWord, CyclicWord> closed_form_exceptional(const TriangleParams& params);

/// Semi-open kneading inequalities on every supershift.
bool admissible_word(const EPWord& w, const KneadingSet& k);
bool admissible_word(const CyclicWord& w, const KneadingSet& k);

/// Exponents within 1..p-1 for a and 1..q-1 for b; throws ExponentOutOfRange.
void check_exponents(const Blocks& blocks, const TriangleParams& params);

Blocks relabel(const Blocks& blocks, const TriangleParams& swaps);
EPWord relabel(const EPWord& w, const TriangleParams& swaps);
CyclicWord relabel(const CyclicWord& w, const TriangleParams& swaps);

// Text syntax: blocks "a^2 b a b^3"; "(...)" preperiod, "[...]" period, "<...>" cyclic.
std::string to_string(const Blocks& blocks);
std::string to_string(const EPWord& w);
std::string to_string(const CyclicWord& w);

Blocks parse_blocks(std::string_view text);
EPWord parse_epword(std::string_view text);
CyclicWord parse_cyclic(std::string_view text);

/// First n letters as a plain string, e.g. "aabab".
std::string expand(const EPWord& w, std::size_t n);
std::string expand(const Blocks& blocks);

}  // namespace trigon
