#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dc1lab {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// A one-sided symbol sequence, eventually periodic (prefix then period
/// repeated forever) or finite when `period` is empty.
struct SymbolSeq {
    Word prefix;
    Word period;

    bool is_finite() const noexcept { return period.empty(); }

    /// Number of known symbols; SIZE_MAX for eventually periodic sequences.
    std::size_t known_length() const noexcept;

    Symbol at(std::size_t i) const;

    /// The first `n` symbols.
    Word head(std::size_t n) const;

    /// sigma^n applied to the sequence, canonicalized.
    SymbolSeq shifted(std::size_t n) const;

    /// Minimal period and shortest prefix; equal sequences compare equal
    /// structurally afterwards.
    void canonicalize();

    friend bool operator==(const SymbolSeq& a, const SymbolSeq& b);
};

SymbolSeq make_periodic(Word prefix, Word period);

/// Text form: "01(1)" is 011111..., "(01)" is 0101..., "0110" is finite.
SymbolSeq parse_symbol_seq(std::string_view text);

std::string to_string(const SymbolSeq& s);
std::string word_to_string(const Word& w);
Word parse_word(std::string_view text);

/// Index of the first disagreement, searched up to `limit` symbols (and never
/// beyond the known part of a finite operand). nullopt when no disagreement
/// was found in the searched window.
std::optional<std::size_t> first_difference(const SymbolSeq& a, const SymbolSeq& b,
                                            std::size_t limit);

/// Window length that decides equality of two eventually periodic sequences.
std::size_t deciding_length(const SymbolSeq& a, const SymbolSeq& b);

/// Length of the shortest period of `w` (KMP border).
std::size_t minimal_period(const Word& w);

}  // namespace dc1lab
