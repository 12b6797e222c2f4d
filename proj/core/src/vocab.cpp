#include "caspo/vocab.hpp"

#include <algorithm>

#include "caspo/errors.hpp"

namespace caspo {

Vocabulary::Vocabulary(std::vector<std::string> symbols, TokenId step_delim,
                       TokenId answer_mark, TokenId eos)
    : symbols_(std::move(symbols)), step_delim_(step_delim), answer_mark_(answer_mark),
      eos_(eos), digit0_(-1) {
    if (size() < 8) throw ValidationError("vocabulary must have at least 8 tokens");
    for (TokenId i = 0; i < size(); ++i) {
        if (!index_.emplace(symbols_[i], i).second)
            throw ValidationError("duplicate vocabulary symbol: " + symbols_[i]);
        if (symbols_[i] == "0") digit0_ = i;
    }
    const bool markers_ok = valid_id(step_delim_) && valid_id(answer_mark_) && valid_id(eos_) &&
                            step_delim_ != answer_mark_ && step_delim_ != eos_ &&
                            answer_mark_ != eos_;
    if (!markers_ok) throw ValidationError("STEP_DELIM, ANSWER_MARK, EOS must be distinct valid ids");
}

Vocabulary Vocabulary::arithmetic() {
    std::vector<std::string> symbols = {"<pad>"};
    for (int d = 0; d <= 9; ++d) symbols.push_back(std::string(1, static_cast<char>('0' + d)));
    symbols.insert(symbols.end(), {"+", "-", "*", "=", "mod", ";", "#", "</s>"});
    const TokenId delim = static_cast<TokenId>(symbols.size()) - 3;
    const TokenId mark = static_cast<TokenId>(symbols.size()) - 2;
    const TokenId eos = static_cast<TokenId>(symbols.size()) - 1;
    return Vocabulary(std::move(symbols), delim, mark, eos);
}

TokenId Vocabulary::id_of(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) throw ValidationError("unknown vocabulary symbol: " + std::string(symbol));
    return it->second;
}

const std::string& Vocabulary::symbol(TokenId id) const {
    if (!valid_id(id)) throw ValidationError("token id out of range: " + std::to_string(id));
    return symbols_[static_cast<std::size_t>(id)];
}

bool Vocabulary::is_digit(TokenId id) const {
    return digit0_ >= 0 && id >= digit0_ && id < digit0_ + 10;
}

int Vocabulary::digit_value(TokenId id) const {
    if (!is_digit(id)) throw ValidationError("token is not a digit");
    return id - digit0_;
}

TokenSeq Vocabulary::tokenize(std::string_view text) const {
    TokenSeq out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ') ++j;
        out.push_back(id_of(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

std::string Vocabulary::to_string(std::span<const TokenId> tokens) const {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += symbol(tokens[i]);
    }
    return out;
}

TokenSeq Vocabulary::encode_number(long long value) const {
    if (value < 0) throw ValidationError("cannot encode negative number");
    if (digit0_ < 0) throw ValidationError("vocabulary has no digit tokens");
    const std::string s = std::to_string(value);
    TokenSeq out;
    out.reserve(s.size());
    for (char c : s) out.push_back(digit0_ + (c - '0'));
    return out;
}

std::optional<long long> Vocabulary::parse_number(std::span<const TokenId> tokens) const {
    if (tokens.empty()) return std::nullopt;
    long long v = 0;
    for (TokenId t : tokens) {
        if (!is_digit(t)) return std::nullopt;
        if (v > (1LL << 50)) return std::nullopt;  // overflow guard
        v = v * 10 + digit_value(t);
    }
    return v;
}

}  // namespace caspo
