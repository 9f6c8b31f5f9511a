#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternary/code.hpp"
#include "ternary/search.hpp"

namespace ternary {

/// Raised for unreadable or malformed codebook files; the message names the
/// line at fault.
class CodebookError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain-text codebook: a header "# n=<n> metric=d1" followed by one word per
/// line, symbols -1/0/1 separated by single spaces.  Words are written in
/// lexicographic order.
void write_codebook(std::ostream& out, const TernaryCode& code);
void write_codebook(const std::filesystem::path& path, const TernaryCode& code);

TernaryCode read_codebook(std::istream& in);
TernaryCode read_codebook(const std::filesystem::path& path);

/// Same layout for q-ary Hamming codes: "# n=<n> q=<q> metric=hamming",
/// digits 0..q-1.
void write_hamming_codebook(std::ostream& out, int q, int n, const std::vector<QaryWord>& words);

}  // namespace ternary
