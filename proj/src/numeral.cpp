#include "sexag/numeral.hpp"

#include <algorithm>
#include <utility>

namespace sexag {

namespace {

bool all_zero(const Digits& ds) {
    return std::all_of(ds.begin(), ds.end(), [](int d) { return d == 0; });
}

void require_digit_range(const Digits& ds, const char* field) {
    for (int d : ds) {
        if (d < 0 || d > 59) {
            throw std::invalid_argument(std::string(field) + " digit " + std::to_string(d) +
                                        " outside 0..59");
        }
    }
}

// Shrink to the shortest block whose repetition reproduces the sequence.
void reduce_to_minimal_period(Digits& r) {
    const std::size_t len = r.size();
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool periodic = true;
        for (std::size_t j = d; j < len; ++j) {
            if (r[j] != r[j % d]) {
                periodic = false;
                break;
            }
        }
        if (periodic) {
            r.resize(d);
            return;
        }
    }
}

// Adds one unit at the least significant held position (used when an all-59
// repetend collapses into a terminating value one step up).
void increment_magnitude(Digits& int_digits, Digits& frac_prefix) {
    auto propagate = [](Digits& ds) {
        for (std::size_t i = ds.size(); i-- > 0;) {
            if (++ds[i] < 60) return false;
            ds[i] = 0;
        }
        return true;  // carry out of the front
    };
    bool carry = frac_prefix.empty() ? true : propagate(frac_prefix);
    if (carry && propagate(int_digits)) int_digits.insert(int_digits.begin(), 1);
}

}  // namespace

SexNumber::SexNumber(Unchecked, int sign, Digits i, Digits p, Digits r)
    : sign_(sign), int_digits_(std::move(i)), frac_prefix_(std::move(p)), repetend_(std::move(r)) {}

SexNumber::SexNumber(int sign, Digits int_digits, Digits frac_prefix, Digits repetend) {
    SexNumber canon = normalized(sign, int_digits, frac_prefix, repetend);
    if (canon.sign_ != sign || canon.int_digits_ != int_digits ||
        canon.frac_prefix_ != frac_prefix || canon.repetend_ != repetend) {
        throw std::invalid_argument("non-canonical digit sequence (canonical form is " +
                                    format_sex(canon) + ")");
    }
    *this = std::move(canon);
}

SexNumber SexNumber::normalized(int sign, Digits int_digits, Digits frac_prefix,
                                Digits repetend) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    require_digit_range(int_digits, "integer");
    require_digit_range(frac_prefix, "fraction");
    require_digit_range(repetend, "repetend");

    if (!repetend.empty()) {
        reduce_to_minimal_period(repetend);
        if (all_zero(repetend)) repetend.clear();
    }
    if (!repetend.empty()) {
        // Pull the repetend as far left as it goes: while the last prefix
        // digit matches the last repetend digit, the cycle can start one
        // position earlier with the repetend rotated right.
        while (!frac_prefix.empty() && frac_prefix.back() == repetend.back()) {
            frac_prefix.pop_back();
            std::rotate(repetend.rbegin(), repetend.rbegin() + 1, repetend.rend());
        }
        // A pure run of 59s is the terminating value one unit up, the same
        // way 0.999... is 1.
        if (repetend.size() == 1 && repetend[0] == 59) {
            repetend.clear();
            increment_magnitude(int_digits, frac_prefix);
        }
    }
    if (repetend.empty()) {
        while (!frac_prefix.empty() && frac_prefix.back() == 0) frac_prefix.pop_back();
    }
    while (int_digits.size() > 1 && int_digits.front() == 0) int_digits.erase(int_digits.begin());
    if (int_digits.empty()) int_digits.push_back(0);
    if (int_digits.size() == 1 && int_digits[0] == 0 && frac_prefix.empty() && repetend.empty()) {
        sign = 1;
    }
    return SexNumber(Unchecked{}, sign, std::move(int_digits), std::move(frac_prefix),
                     std::move(repetend));
}

bool SexNumber::is_zero() const noexcept {
    return int_digits_.size() == 1 && int_digits_[0] == 0 && frac_prefix_.empty() &&
           repetend_.empty();
}

namespace {

// Recursive-descent scanner over the textual grammar. Positions in errors
// are byte offsets into the original input.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    SexNumber parse() {
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        Digits int_digits = parse_digit_list();
        Digits frac_prefix;
        Digits repetend;
        if (peek() == ';') {
            ++pos_;
            parse_fraction(frac_prefix, repetend);
        }
        if (pos_ != text_.size()) {
            if (peek() == '(') fail("repetend is only allowed after ';'");
            fail("unexpected character");
        }
        return SexNumber::normalized(sign, std::move(int_digits), std::move(frac_prefix),
                                     std::move(repetend));
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    // A comma plus at most one space; returns false when no comma follows.
    bool take_separator() {
        if (peek() != ',') return false;
        ++pos_;
        if (peek() == ' ') ++pos_;
        return true;
    }

    int parse_digit_token() {
        if (peek() < '0' || peek() > '9') fail("expected a digit token");
        const std::size_t start = pos_;
        long value = 0;
        while (peek() >= '0' && peek() <= '9') {
            value = std::min(value * 10 + (peek() - '0'), 100L);
            ++pos_;
        }
        if (value > 59) {
            throw ParseError("digit token " + std::string(text_.substr(start, pos_ - start)) +
                                 " exceeds 59",
                             start);
        }
        return static_cast<int>(value);
    }

    Digits parse_digit_list() {
        Digits out;
        out.push_back(parse_digit_token());
        while (take_separator()) out.push_back(parse_digit_token());
        return out;
    }

    void parse_fraction(Digits& frac_prefix, Digits& repetend) {
        while (true) {
            if (peek() == '(') {
                parse_repetend(repetend);
                return;
            }
            frac_prefix.push_back(parse_digit_token());
            if (!take_separator()) return;
        }
    }

    void parse_repetend(Digits& repetend) {
        const std::size_t open = pos_;
        ++pos_;  // '('
        repetend = parse_digit_list();
        if (peek() != ')') fail("unterminated repetend, expected ')'");
        ++pos_;
        if (all_zero(repetend)) throw ParseError("repetend of all zeros", open);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append_digits(std::string& out, const Digits& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(ds[i]);
    }
}

}  // namespace

SexNumber parse_sex(std::string_view text) { return Scanner(text).parse(); }

std::string format_sex(const SexNumber& x, const FormatOptions& opts) {
    std::string out;
    if (x.sign() < 0) out += '-';
    append_digits(out, x.int_digits());
    if (x.terminating() && x.frac_prefix().empty()) return out;

    out += ';';
    append_digits(out, x.frac_prefix());
    if (x.terminating()) return out;

    if (opts.style == FormatOptions::RepetendStyle::parentheses) {
        if (!x.frac_prefix().empty()) out += ',';
        out += '(';
        append_digits(out, x.repetend());
        out += ')';
    } else {
        const int copies = std::max(1, opts.repetitions);
        bool first = x.frac_prefix().empty();
        for (int rep = 0; rep < copies; ++rep) {
            for (int d : x.repetend()) {
                if (!first) out += ',';
                first = false;
                out += std::to_string(d);
            }
        }
        out += ",...";
    }
    return out;
}

FloatingDigits to_floating(const SexNumber& x) {
    if (!x.terminating()) {
        throw std::domain_error("non-terminating expansion has no radix-point-free form");
    }
    if (x.sign() < 0) {
        throw std::domain_error("negative value has no radix-point-free form");
    }
    Digits digits = x.int_digits();
    digits.insert(digits.end(), x.frac_prefix().begin(), x.frac_prefix().end());
    long long exponent = -static_cast<long long>(x.frac_prefix().size());
    while (!digits.empty() && digits.back() == 0) {
        digits.pop_back();
        ++exponent;
    }
    while (!digits.empty() && digits.front() == 0) digits.erase(digits.begin());
    if (digits.empty()) return FloatingDigits{};  // zero
    return FloatingDigits{std::move(digits), exponent};
}

SexNumber from_floating(const FloatingDigits& f) {
    Digits int_digits = f.digits;
    Digits frac_prefix;
    if (f.exponent >= 0) {
        int_digits.insert(int_digits.end(), static_cast<std::size_t>(f.exponent), 0);
    } else {
        const std::size_t frac_len = static_cast<std::size_t>(-f.exponent);
        if (frac_len >= int_digits.size()) {
            frac_prefix.assign(frac_len - int_digits.size(), 0);
            frac_prefix.insert(frac_prefix.end(), int_digits.begin(), int_digits.end());
            int_digits.clear();
        } else {
            frac_prefix.assign(int_digits.end() - frac_len, int_digits.end());
            int_digits.resize(int_digits.size() - frac_len);
        }
    }
    return SexNumber::normalized(1, std::move(int_digits), std::move(frac_prefix), {});
}

SexNumber from_integer(const Int& n) {
    int sign = 1;
    Int v = n;
    if (v < 0) {
        sign = -1;
        v = -v;
    }
    Digits digits;
    if (v == 0) digits.push_back(0);
    while (v != 0) {
        digits.push_back(static_cast<int>(v % 60));
        v /= 60;
    }
    std::reverse(digits.begin(), digits.end());
    return SexNumber::normalized(sign, std::move(digits), {}, {});
}

Int to_integer(const SexNumber& x) {
    if (!x.is_integer()) throw std::invalid_argument("value has fractional digits");
    Int v = digits_value(x.int_digits());
    return x.sign() < 0 ? Int(-v) : v;
}

Int digits_value(const Digits& digits) {
    Int v = 0;
    for (int d : digits) v = v * 60 + d;
    return v;
}

}  // namespace sexag
