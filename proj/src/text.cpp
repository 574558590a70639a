#include "dycklab/text.hpp"

#include <cctype>
#include <sstream>

namespace dycklab {

std::string seq_to_string(const IntSeq& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << ']';
    return os.str();
}

namespace {

[[noreturn]] void fail(const std::string& message, std::size_t pos) {
    throw ParseError(message + " at position " + std::to_string(pos), pos);
}

IntSeq parse_seq_at(const std::string& text, std::size_t& pos) {
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['", pos);
    ++pos;
    IntSeq out;
    skip_spaces();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return out;
    }
    while (true) {
        skip_spaces();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = 0;
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 2147483647LL) fail("entry out of range", start);
            ++digits;
            ++pos;
        }
        if (digits == 0) fail("expected integer", pos);
        out.push_back(text[start] == '-' ? -static_cast<int>(value) : static_cast<int>(value));
        skip_spaces();
        if (pos >= text.size()) fail("unterminated sequence literal", pos);
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ']') {
            ++pos;
            return out;
        }
        fail("expected ',' or ']'", pos);
    }
}

}  // namespace

IntSeq parse_seq(const std::string& text) {
    std::size_t pos = 0;
    IntSeq out = parse_seq_at(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) fail("trailing characters after sequence literal", pos);
    return out;
}

namespace {

std::vector<IntSeq> parse_joined(const std::string& text, char sep) {
    std::vector<IntSeq> out;
    std::size_t pos = 0;
    while (true) {
        out.push_back(parse_seq_at(text, pos));
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) return out;
        if (text[pos] != sep) fail(std::string("expected '") + sep + "'", pos);
        ++pos;
    }
}

std::string join(const std::vector<IntSeq>& items, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << sep;
        os << seq_to_string(items[i]);
    }
    return os.str();
}

}  // namespace

std::string rows_to_string(const std::vector<IntSeq>& rows) { return join(rows, '/'); }

std::vector<IntSeq> parse_rows(const std::string& text) { return parse_joined(text, '/'); }

std::string factors_to_string(const std::vector<IntSeq>& factors) { return join(factors, '|'); }

std::vector<IntSeq> parse_factors(const std::string& text) { return parse_joined(text, '|'); }

}  // namespace dycklab
