#include "wicks/words.hpp"

#include <algorithm>
#include <sstream>

namespace wicks {

Word make_word(std::initializer_list<int32_t> values) {
    Word w;
    w.reserve(values.size());
    for (int32_t v : values) {
        if (v == 0) throw std::invalid_argument("letter value must be nonzero");
        w.push_back(Letter(v));
    }
    return w;
}

Word inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
    return r;
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    std::size_t index = 0;
    while (in >> tok) {
        ++index;
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token #" + std::to_string(index) + ": '" + tok + "'");
        }
        if (pos != tok.size() || v == 0 || v > INT32_MAX || v < -static_cast<long>(INT32_MAX))
            throw std::invalid_argument("bad word token #" + std::to_string(index) + ": '" + tok + "'");
        w.push_back(Letter(static_cast<int32_t>(v)));
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i].value);
    }
    return out;
}

static bool rotation_less(const Word& w, std::size_t a, std::size_t b) {
    // compares rotations starting at a and b
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Letter& x = w[(a + i) % n];
        const Letter& y = w[(b + i) % n];
        if (x != y) return x < y;
    }
    return false;
}

CyclicWord::CyclicWord(Word w) {
    const std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r)
        if (rotation_less(w, r, best)) best = r;
    rep_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rep_.push_back(w[(best + i) % n]);
}

Word CyclicWord::rotation(std::size_t r) const {
    const std::size_t n = rep_.size();
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(rep_[(r + i) % n]);
    return out;
}

bool CyclicWord::operator<(const CyclicWord& o) const {
    return std::lexicographical_compare(rep_.begin(), rep_.end(),
                                        o.rep_.begin(), o.rep_.end());
}

Word free_reduce(const Word& w) {
    Word stack;
    stack.reserve(w.size());
    for (const Letter& x : w) {
        if (!stack.empty() && stack.back() == x.inverse())
            stack.pop_back();
        else
            stack.push_back(x);
    }
    return stack;
}

bool is_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == w[i].inverse()) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (w.empty()) return true;
    if (!is_reduced(w)) return false;
    return w.front() != w.back().inverse();
}

std::vector<Word> cyclic_factors(const CyclicWord& w, std::size_t k) {
    if (k == 0) throw std::invalid_argument("cyclic_factors: k must be >= 1");
    const Word& rep = w.representative();
    const std::size_t n = rep.size();
    std::vector<Word> out;
    if (n == 0) return out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Word f;
        f.reserve(k);
        for (std::size_t j = 0; j < k; ++j) f.push_back(rep[(i + j) % n]);
        out.push_back(std::move(f));
    }
    return out;
}

static bool linearly_square_free(const Word& w) {
    const std::size_t n = w.size();
    // For each period d, a square exists iff w[i] == w[i+d] holds for d
    // consecutive start positions.
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + d < n; ++i) {
            if (w[i] == w[i + d]) {
                if (++run >= d) return false;
            } else {
                run = 0;
            }
        }
    }
    return true;
}

bool square_free_status(const Word& w, bool cyclic) {
    if (!cyclic) return linearly_square_free(w);
    const std::size_t n = w.size();
    Word rot = w;
    for (std::size_t r = 0; r < n; ++r) {
        if (!linearly_square_free(rot)) return false;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return true;
}

Word thue_word(std::size_t n) {
    std::vector<int32_t> cur{1};
    while (cur.size() < n) {
        std::vector<int32_t> next;
        next.reserve(cur.size() * 3);
        for (int32_t c : cur) {
            switch (c) {
                case 1: next.insert(next.end(), {1, 2, 3}); break;
                case 2: next.insert(next.end(), {1, 3}); break;
                default: next.push_back(2); break;
            }
        }
        cur = std::move(next);
    }
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.push_back(Letter(cur[i]));
    return w;
}

} // namespace wicks
