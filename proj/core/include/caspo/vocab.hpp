#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace caspo {

using TokenId = int;
using TokenSeq = std::vector<TokenId>;

// Symbol table for the toy arithmetic language. Token ids are dense in
// [0, V). Id 0 is a reserved PAD token that is never sampled.
class Vocabulary {
public:
    explicit Vocabulary(std::vector<std::string> symbols, TokenId step_delim,
                        TokenId answer_mark, TokenId eos);

    // Digits 0-9, operators + - * =, "mod", step delimiter ";",
    // answer marker "#", end-of-sequence "</s>".
    static Vocabulary arithmetic();

    int size() const { return static_cast<int>(symbols_.size()); }

    TokenId id_of(std::string_view symbol) const;
    const std::string& symbol(TokenId id) const;
    bool valid_id(TokenId id) const { return id >= 0 && id < size(); }

    TokenId pad() const { return 0; }
    TokenId step_delim() const { return step_delim_; }
    TokenId answer_mark() const { return answer_mark_; }
    TokenId eos() const { return eos_; }

    bool is_digit(TokenId id) const;
    int digit_value(TokenId id) const;

    // Whitespace-separated symbols -> ids. Throws ValidationError on an
    // unknown symbol.
    TokenSeq tokenize(std::string_view text) const;
    std::string to_string(std::span<const TokenId> tokens) const;

    // Non-negative integer -> digit token run (no leading zeros except "0").
    TokenSeq encode_number(long long value) const;
    // Parses a digit run covering the whole span; nullopt otherwise.
    std::optional<long long> parse_number(std::span<const TokenId> tokens) const;

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, TokenId> index_;
    TokenId step_delim_;
    TokenId answer_mark_;
    TokenId eos_;
    TokenId digit0_;
};

}  // namespace caspo
