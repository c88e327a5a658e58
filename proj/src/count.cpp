#include "kkbounds/count.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "kkbounds/combinatorics.hpp"

namespace kkb {

double to_double(const Count& c) { return c.convert_to<double>(); }

double log_count(const Count& c) {
    require(c > 0, "log_count requires a positive value");
    const auto bits = boost::multiprecision::msb(c);
    if (bits < 1000) return std::log(to_double(c));
    const unsigned shift = bits - 60;
    return std::log(to_double(c >> shift)) + shift * std::log(2.0);
}

std::int64_t to_int64(const Count& c) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value does not fit in 64 bits: " + c.str());
    return c.convert_to<std::int64_t>();
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Count parse() {
        Count total = term();
        for (skip_space(); pos_ < text_.size(); skip_space()) {
            const char op = text_[pos_++];
            if (op == '+')
                total += term();
            else if (op == '-')
                total -= term();
            else
                fail("unexpected character");
        }
        if (total < 0) throw PreconditionError("count expression is negative: " + std::string(text_));
        return total;
    }

private:
    [[noreturn]] void fail(const char* what) const {
        throw PreconditionError(std::string("cannot parse count '") + std::string(text_) + "': " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail("malformed C(n,k) term");
        ++pos_;
    }

    Count literal() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Count(std::string(text_.substr(start, pos_ - start)));
    }

    Count term() {
        skip_space();
        if (pos_ < text_.size() && (text_[pos_] == 'C' || text_[pos_] == 'c')) {
            ++pos_;
            expect('(');
            const Count n = literal();
            expect(',');
            const Count k = literal();
            expect(')');
            return binomial(to_int64(n), to_int64(k));
        }
        return literal();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Count parse_count(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace kkb
