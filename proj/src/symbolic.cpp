#include "dc1lab/symbolic.hpp"

#include "dc1lab/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dc1lab {

std::size_t SymbolSeq::known_length() const noexcept {
    return is_finite() ? prefix.size() : std::numeric_limits<std::size_t>::max();
}

Symbol SymbolSeq::at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    if (period.empty()) throw InputError("symbol index beyond a finite sequence");
    return period[(i - prefix.size()) % period.size()];
}

Word SymbolSeq::head(std::size_t n) const {
    if (n > known_length()) throw InputError("sequence shorter than the requested word");
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
    return w;
}

SymbolSeq SymbolSeq::shifted(std::size_t n) const {
    SymbolSeq out;
    if (n <= prefix.size()) {
        out.prefix.assign(prefix.begin() + static_cast<std::ptrdiff_t>(n), prefix.end());
        out.period = period;
    } else {
        if (is_finite()) throw InputError("shift beyond a finite sequence");
        const std::size_t off = (n - prefix.size()) % period.size();
        out.period.reserve(period.size());
        for (std::size_t i = 0; i < period.size(); ++i)
            out.period.push_back(period[(off + i) % period.size()]);
    }
    out.canonicalize();
    return out;
}

std::size_t minimal_period(const Word& w) {
    if (w.empty()) return 0;
    std::vector<std::size_t> border(w.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = border[k];
        if (w[i] == w[k]) ++k;
        border[i + 1] = k;
    }
    return w.size() - border[w.size()];
}

void SymbolSeq::canonicalize() {
    if (period.empty()) return;
    const std::size_t p = minimal_period(period);
    if (period.size() % p == 0) period.resize(p);
    while (!prefix.empty() && prefix.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        prefix.pop_back();
    }
}

bool operator==(const SymbolSeq& a, const SymbolSeq& b) {
    if (a.is_finite() != b.is_finite()) return false;
    if (a.is_finite()) return a.prefix == b.prefix;
    SymbolSeq ca = a;
    SymbolSeq cb = b;
    ca.canonicalize();
    cb.canonicalize();
    return ca.prefix == cb.prefix && ca.period == cb.period;
}

SymbolSeq make_periodic(Word prefix, Word period) {
    SymbolSeq s{std::move(prefix), std::move(period)};
    s.canonicalize();
    return s;
}

Word parse_word(std::string_view text) {
    Word w;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            w.push_back(static_cast<Symbol>(ch - '0'));
        } else if (ch >= 'a' && ch <= 'z') {
            w.push_back(static_cast<Symbol>(10 + ch - 'a'));
        } else {
            throw InputError("bad symbol '" + std::string(1, ch) + "' in '" + std::string(text) + "'");
        }
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol c : w) s.push_back(c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10));
    return s;
}

SymbolSeq parse_symbol_seq(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) return SymbolSeq{parse_word(text), {}};
    const auto close = text.find(')', open);
    if (close == std::string_view::npos || close + 1 != text.size() || close == open + 1)
        throw InputError("malformed periodic sequence: '" + std::string(text) + "'");
    return make_periodic(parse_word(text.substr(0, open)), parse_word(text.substr(open + 1, close - open - 1)));
}

std::string to_string(const SymbolSeq& s) {
    if (s.is_finite()) return word_to_string(s.prefix);
    return word_to_string(s.prefix) + "(" + word_to_string(s.period) + ")";
}

std::size_t deciding_length(const SymbolSeq& a, const SymbolSeq& b) {
    if (a.is_finite() || b.is_finite()) return std::min(a.known_length(), b.known_length());
    return std::max(a.prefix.size(), b.prefix.size()) + std::lcm(a.period.size(), b.period.size());
}

std::optional<std::size_t> first_difference(const SymbolSeq& a, const SymbolSeq& b,
                                            std::size_t limit) {
    const std::size_t n = std::min({limit, a.known_length(), b.known_length()});
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i) != b.at(i)) return i;
    }
    return std::nullopt;
}

}  // namespace dc1lab
