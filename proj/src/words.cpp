#include "trigon/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace trigon {

std::size_t letter_length(const Blocks& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += static_cast<std::size_t>(b.exp);
    return n;
}

bool alternates(const Blocks& blocks, bool cyclic) {
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i].letter == blocks[i - 1].letter) return false;
    if (cyclic && blocks.size() > 1 && blocks.front().letter == blocks.back().letter) return false;
    if (cyclic && blocks.size() == 1) return false;
    return true;
}

void append(Blocks& blocks, Letter letter, int exp) {
    if (exp == 0) return;
    if (!blocks.empty() && blocks.back().letter == letter)
        blocks.back().exp += exp;
    else
        blocks.push_back({letter, exp});
}

void append(Blocks& blocks, const Blocks& tail) {
    for (const auto& b : tail) append(blocks, b.letter, b.exp);
}

Blocks repeat(const Blocks& blocks, int times) {
    Blocks out;
    for (int i = 0; i < times; ++i) append(out, blocks);
    return out;
}

namespace {

void check_blocks(const Blocks& blocks) {
    for (const auto& b : blocks)
        if (b.exp < 1) throw Error(ErrorCode::InvalidArgument, "block exponents must be >= 1");
}

std::vector<std::size_t> offsets(const Blocks& blocks) {
    std::vector<std::size_t> out;
    out.reserve(blocks.size() + 1);
    std::size_t n = 0;
    out.push_back(0);
    for (const auto& b : blocks) out.push_back(n += static_cast<std::size_t>(b.exp));
    return out;
}

Letter letter_in(const Blocks& blocks, const std::vector<std::size_t>& offs, std::size_t i) {
    auto it = std::upper_bound(offs.begin(), offs.end(), i);
    return blocks[static_cast<std::size_t>(it - offs.begin()) - 1].letter;
}

}  // namespace

EPWord::EPWord(Blocks preperiod, Blocks period) : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw Error(ErrorCode::InvalidArgument, "period must be nonempty");
    check_blocks(preperiod_);
    check_blocks(period_);
    if (!alternates(preperiod_, false) || !alternates(period_, true) ||
        (!preperiod_.empty() && preperiod_.back().letter == period_.front().letter))
        throw Error(ErrorCode::InvalidArgument, "blocks must alternate letters");
    pre_offsets_ = offsets(preperiod_);
    per_offsets_ = offsets(period_);
    pre_letters_ = pre_offsets_.back();
    per_letters_ = per_offsets_.back();
}

Letter EPWord::letter_at(std::size_t i) const {
    if (i < pre_letters_) return letter_in(preperiod_, pre_offsets_, i);
    return letter_in(period_, per_offsets_, (i - pre_letters_) % per_letters_);
}

const Block& EPWord::block_at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

EPWord EPWord::normalized() const {
    Blocks per = period_;
    const std::size_t n = per.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i + d < n; ++i) ok = per[i] == per[i + d];
        if (ok) {
            per.resize(d);
            break;
        }
    }
    Blocks pre = preperiod_;
    while (!pre.empty() && pre.back() == per.back()) {
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
        pre.pop_back();
    }
    return EPWord(std::move(pre), std::move(per));
}

CyclicWord::CyclicWord(Blocks blocks) {
    if (blocks.empty() || blocks.size() % 2 != 0 || !alternates(blocks, true))
        throw Error(ErrorCode::InvalidArgument, "cyclic word needs an even number of alternating blocks");
    check_blocks(blocks);
    blocks_ = std::move(blocks);
    std::size_t best = 0;
    EPWord best_word = rotation(0);
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
        EPWord w = rotation(i);
        if (lex_compare(w, best_word) < 0) {
            best = i;
            best_word = std::move(w);
        }
    }
    std::rotate(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(best), blocks_.end());
}

EPWord CyclicWord::rotation(std::size_t i) const {
    Blocks rot(blocks_.begin() + static_cast<std::ptrdiff_t>(i % blocks_.size()), blocks_.end());
    rot.insert(rot.end(), blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(i % blocks_.size()));
    return EPWord({}, std::move(rot));
}

bool CyclicWord::primitive() const { return rotation(0).normalized().period().size() == blocks_.size(); }

EPWord supershift(const EPWord& w) {
    if (!w.preperiod().empty()) {
        Blocks pre(w.preperiod().begin() + 1, w.preperiod().end());
        return EPWord(std::move(pre), w.period());
    }
    Blocks per(w.period().begin() + 1, w.period().end());
    per.push_back(w.period().front());
    return EPWord({}, std::move(per));
}

EPWord prepend(const Block& block, const EPWord& w) {
    Blocks pre{block};
    pre.insert(pre.end(), w.preperiod().begin(), w.preperiod().end());
    if (pre.size() == 1 && block.letter == w.first_block().letter)
        throw Error(ErrorCode::InvalidArgument, "prepended block must change letter");
    return EPWord(std::move(pre), w.period());
}

std::strong_ordering lex_compare(const EPWord& x, const EPWord& y) {
    const std::size_t px = x.period_letters(), py = y.period_letters();
    const std::size_t bound = x.preperiod_letters() + y.preperiod_letters() + 2 * std::lcm(px, py);

    // Walk both block sequences; maximal runs make the first differing run decisive.
    std::size_t i = 0, j = 0, consumed = 0;
    int left_x = x.block_at(0).exp, left_y = y.block_at(0).exp;
    while (consumed < bound) {
        const Letter lx = x.block_at(i).letter, ly = y.block_at(j).letter;
        if (lx != ly) return lx < ly ? std::strong_ordering::less : std::strong_ordering::greater;
        const int step = std::min(left_x, left_y);
        consumed += static_cast<std::size_t>(step);
        left_x -= step;
        left_y -= step;
        if (left_x == 0) left_x = x.block_at(++i).exp;
        if (left_y == 0) left_y = y.block_at(++j).exp;
    }
    return std::strong_ordering::equal;
}

namespace {

Blocks letters(std::initializer_list<std::pair<Letter, int>> parts) {
    Blocks out;
    for (const auto& [l, e] : parts) append(out, l, e);
    return out;
}

Blocks cat(std::initializer_list<Blocks> parts) {
    Blocks out;
    for (const auto& p : parts) append(out, p);
    return out;
}

constexpr Letter A = Letter::a;
constexpr Letter B = Letter::b;

}  // namespace

KneadingSet closed_form_kneading(const TriangleParams& t) {
    const int p = t.p, q = t.q, r = t.r;
    EPWord u_L, v_R;
    if (t.r_infinite()) {
        u_L = EPWord({}, letters({{A, p - 1}, {B, 1}}));
        v_R = EPWord({}, letters({{B, q - 1}, {A, 1}}));
    } else if (p > 2) {
        const Blocks ab = letters({{A, p - 1}, {B, 1}});
        const Blocks ba = letters({{B, q - 1}, {A, 1}});
        if (r % 2 == 1) {
            u_L = EPWord({}, cat({repeat(ab, (r - 3) / 2), letters({{A, p - 1}, {B, 2}})}));
            v_R = EPWord({}, cat({repeat(ba, (r - 3) / 2), letters({{B, q - 1}, {A, 2}})}));
        } else {
            const Blocks ba_p = letters({{B, 1}, {A, p - 1}});
            const Blocks ab_q = letters({{A, 1}, {B, q - 1}});
            u_L = EPWord({}, cat({repeat(ab, (r - 2) / 2), letters({{A, p - 2}}), repeat(ba_p, (r - 2) / 2),
                                  letters({{B, 2}})}));
            v_R = EPWord({}, cat({repeat(ba, (r - 2) / 2), letters({{B, q - 2}}), repeat(ab_q, (r - 2) / 2),
                                  letters({{A, 2}})}));
        }
    } else {
        if (r < 5) throw Error(ErrorCode::UnsupportedParams, "p = 2 needs r >= 5");
        const int k_u = r % 2 == 1 ? (r - 3) / 2 : (r - 4) / 2;
        const int k_v = r % 2 == 1 ? (r - 5) / 2 : (r - 4) / 2;
        u_L = EPWord({}, cat({repeat(letters({{A, 1}, {B, 1}}), k_u), letters({{A, 1}, {B, 2}})}));
        v_R = EPWord(letters({{B, q - 1}}),
                     cat({repeat(letters({{A, 1}, {B, q - 1}}), k_v), letters({{A, 1}, {B, q - 2}})}));
    }
    KneadingSet k;
    k.u_L = u_L;
    k.v_R = v_R;
    k.v_L = prepend({B, 1}, u_L);
    k.u_R = prepend({A, 1}, v_R);
    return k;
}

KneadingSet normalized(const KneadingSet& k) {
    return {k.u_L.normalized(), k.u_R.normalized(), k.v_L.normalized(), k.v_R.normalized()};
}

std::pair<CyclicWord, CyclicWord> closed_form_exceptional(const TriangleParams& t) {
    if (t.r_infinite()) throw Error(ErrorCode::NoException, "no exceptional pair when r is infinite");
    const int p = t.p, q = t.q, r = t.r;
    Blocks w_L, w_R;
    if (p > 2) {
        const Blocks ab = letters({{A, p - 1}, {B, 1}});
        const Blocks ba = letters({{B, q - 1}, {A, 1}});
        const Blocks ab2 = letters({{A, p - 2}, {B, 1}});
        const Blocks ba2 = letters({{B, q - 2}, {A, 1}});
        if (r % 2 == 1) {
            w_L = cat({repeat(ab, (r - 3) / 2), ab2});
            w_R = cat({repeat(ba, (r - 3) / 2), ba2});
        } else {
            w_L = cat({repeat(ab, (r - 2) / 2), ab2, repeat(ab, (r - 4) / 2), ab2});
            w_R = cat({repeat(ba, (r - 2) / 2), ba2, repeat(ba, (r - 4) / 2), ba2});
        }
    } else {
        if (r < 5) throw Error(ErrorCode::UnsupportedParams, "p = 2 needs r >= 5");
        const int k_u = r % 2 == 1 ? (r - 3) / 2 : (r - 4) / 2;
        const int k_v = r % 2 == 1 ? (r - 5) / 2 : (r - 4) / 2;
        w_L = cat({repeat(letters({{A, 1}, {B, 1}}), k_u), letters({{A, 1}, {B, 2}})});
        w_R = cat({repeat(letters({{A, 1}, {B, q - 1}}), k_v), letters({{A, 1}, {B, q - 2}})});
    }
    return {CyclicWord(std::move(w_L)), CyclicWord(std::move(w_R))};
}

namespace {

bool shift_ok(const EPWord& s, const KneadingSet& k) {
    const bool is_a = s.first_block().letter == Letter::a;
    const EPWord& lo = is_a ? k.u_L : k.v_L;
    const EPWord& hi = is_a ? k.u_R : k.v_R;
    return lex_compare(lo, s) <= 0 && lex_compare(s, hi) < 0;
}

}  // namespace

bool admissible_word(const EPWord& w, const KneadingSet& k) {
    EPWord s = w;
    for (std::size_t i = 0; i < w.distinct_shifts(); ++i) {
        if (!shift_ok(s, k)) return false;
        s = supershift(s);
    }
    return true;
}

bool admissible_word(const CyclicWord& w, const KneadingSet& k) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!shift_ok(w.rotation(i), k)) return false;
    return true;
}

void check_exponents(const Blocks& blocks, const TriangleParams& t) {
    for (const auto& b : blocks) {
        const int limit = b.letter == Letter::a ? t.p - 1 : t.q - 1;
        if (b.exp < 1 || b.exp > limit)
            throw Error(ErrorCode::ExponentOutOfRange,
                        std::string("exponent ") + std::to_string(b.exp) + " out of range for letter " +
                            to_char(b.letter));
    }
}

Blocks relabel(const Blocks& blocks, const TriangleParams& swaps) {
    Blocks out = blocks;
    if (swaps.pq_swapped)
        for (auto& b : out) b.letter = swap_letter(b.letter);
    return out;
}

EPWord relabel(const EPWord& w, const TriangleParams& swaps) {
    return EPWord(relabel(w.preperiod(), swaps), relabel(w.period(), swaps));
}

CyclicWord relabel(const CyclicWord& w, const TriangleParams& swaps) {
    return CyclicWord(relabel(w.blocks(), swaps));
}

std::string to_string(const Blocks& blocks) {
    std::string out;
    for (const auto& b : blocks) {
        if (!out.empty()) out += ' ';
        out += to_char(b.letter);
        if (b.exp != 1) out += '^' + std::to_string(b.exp);
    }
    return out;
}

std::string to_string(const EPWord& w) {
    std::string out;
    if (!w.preperiod().empty()) out = "(" + to_string(w.preperiod()) + ") ";
    return out + "[" + to_string(w.period()) + "]";
}

std::string to_string(const CyclicWord& w) { return "<" + to_string(w.blocks()) + ">"; }

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= text_.size();
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Blocks blocks(char terminator) {
        Blocks out;
        while (!done() && peek() != terminator) {
            const char c = text_[pos_++];
            if (c != 'a' && c != 'b') fail("expected letter");
            Block b{c == 'a' ? Letter::a : Letter::b, 1};
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (start == pos_ || pos_ - start > 9) fail("bad exponent");
                b.exp = std::stoi(std::string(text_.substr(start, pos_ - start)));
                if (b.exp < 1) fail("exponent must be >= 1");
            }
            if (!out.empty() && out.back().letter == b.letter) fail("blocks must alternate");
            out.push_back(b);
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                               std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Blocks parse_blocks(std::string_view text) {
    Scanner s(text);
    Blocks out = s.blocks('\0');
    if (!s.done()) s.fail("trailing input");
    return out;
}

EPWord parse_epword(std::string_view text) {
    Scanner s(text);
    Blocks pre;
    if (s.peek() == '(') {
        s.expect('(');
        pre = s.blocks(')');
        s.expect(')');
    }
    s.expect('[');
    Blocks per = s.blocks(']');
    s.expect(']');
    if (!s.done()) s.fail("trailing input");
    try {
        return EPWord(std::move(pre), std::move(per));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

CyclicWord parse_cyclic(std::string_view text) {
    Scanner s(text);
    s.expect('<');
    Blocks blocks = s.blocks('>');
    s.expect('>');
    if (!s.done()) s.fail("trailing input");
    try {
        return CyclicWord(std::move(blocks));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string expand(const EPWord& w, std::size_t n) {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; out.size() < n; ++i) {
        const Block& b = w.block_at(i);
        for (int k = 0; k < b.exp && out.size() < n; ++k) out += to_char(b.letter);
    }
    return out;
}

std::string expand(const Blocks& blocks) {
    std::string out;
    for (const auto& b : blocks) out.append(static_cast<std::size_t>(b.exp), to_char(b.letter));
    return out;
}

}  // namespace trigon
