#pragma once

#include "dycklab/seq.hpp"

#include <string>
#include <vector>

namespace dycklab {

/// Canonical textual encoding: comma-separated in square brackets, no spaces,
/// e.g. [0,1,2,1,0].  The empty sequence renders as [].
std::string seq_to_string(const IntSeq& s);

/// Raised on malformed sequence literals; carries the byte position of the
/// first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Accepts the canonical encoding with optional spaces after commas.
IntSeq parse_seq(const std::string& text);

/// Rows joined by '/', each row in canonical sequence encoding.
std::string rows_to_string(const std::vector<IntSeq>& rows);
std::vector<IntSeq> parse_rows(const std::string& text);

/// Factors joined by '|'; empty factors render as [].
std::string factors_to_string(const std::vector<IntSeq>& factors);
std::vector<IntSeq> parse_factors(const std::string& text);

}  // namespace dycklab
