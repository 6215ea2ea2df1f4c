#pragma once

// Text and JSON input/output: Seifert matrix files, descriptor files,
// and report serialization.

#include <string>

#include "clab/infection.hpp"

namespace clab {

// Parse failure with 1-based position information.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) +
                             ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line, col;
};

// "p" or "p/q"
Rat parse_rational(const std::string& s);
std::string rat_str(const Rat& r);

// Laurent polynomial like "2t^2 - 5t + 2" or "t^-1"
Laurent parse_laurent(const std::string& s);

// Line-oriented format: header "seifert <n>", then n rows of n integers.
SeifertForm parse_seifert_text(const std::string& text);
std::string emit_seifert_text(const SeifertForm& s);

// JSON documents with kind tags "leaf", "steps", "sum", "infection".
KnotDescriptor parse_descriptor_json(const std::string& text);
std::string emit_descriptor_json(const KnotDescriptor& d);

// Loads a descriptor from a file path; dispatches on the leading
// characters ('{' means JSON, otherwise the seifert text format).
KnotDescriptor load_descriptor_file(const std::string& path);

std::string report_text(const ObstructionReport& r);
std::string report_json(const ObstructionReport& r);

std::string signature_str(const SignatureFunction& f);

}  // namespace clab
