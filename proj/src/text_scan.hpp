#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "annigraph/errors.hpp"
#include "annigraph/ring.hpp"

namespace annigraph::detail {

// Minimal cursor over ring/ideal/module text. Whitespace is not accepted anywhere.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t pos() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ == text_.size(); }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    void expect_end() {
        if (!at_end()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    }

    Int integer() {
        std::size_t start = pos_;
        Int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > (Int{1} << 40)) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", start);
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace annigraph::detail
