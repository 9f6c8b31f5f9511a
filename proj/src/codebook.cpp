#include "ternary/codebook.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace ternary {

namespace {

[[noreturn]] void fail(long line, const std::string& what) {
  throw CodebookError("codebook line " + std::to_string(line) + ": " + what);
}

std::vector<int> parse_word(const std::string& text, int n, long line) {
  std::vector<int> symbols;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(' ', pos);
    const std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok == "-1") symbols.push_back(-1);
    else if (tok == "0") symbols.push_back(0);
    else if (tok == "1") symbols.push_back(1);
    else fail(line, "bad symbol '" + tok + "' (expected -1, 0 or 1 separated by single spaces)");
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (static_cast<int>(symbols.size()) != n) {
    fail(line, "word has " + std::to_string(symbols.size()) + " symbols, header says n=" + std::to_string(n));
  }
  return symbols;
}

}  // namespace

void write_codebook(std::ostream& out, const TernaryCode& code) {
  out << "# n=" << code.length() << " metric=d1\n";
  for (const auto& w : code) {
    for (int i = 0; i < w.length(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

void write_codebook(const std::filesystem::path& path, const TernaryCode& code) {
  std::ofstream out(path);
  if (!out) throw CodebookError("cannot open " + path.string() + " for writing");
  write_codebook(out, code);
  if (!out) throw CodebookError("write to " + path.string() + " failed");
}

TernaryCode read_codebook(std::istream& in) {
  static const std::regex header(R"(#\s*n=(\d+)\s+metric=(\S+)\s*)");
  std::string text;
  long line = 0;
  int n = -1;
  std::vector<TernaryWord> words;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (n < 0) {
      std::smatch m;
      if (!std::regex_match(text, m, header)) fail(line, "expected header '# n=<n> metric=d1'");
      if (m[2] != "d1") fail(line, "unsupported metric '" + m[2].str() + "'");
      n = std::stoi(m[1]);
      if (n < 1 || n > kMaxTernaryLength) fail(line, "length " + m[1].str() + " outside 1.." + std::to_string(kMaxTernaryLength));
      continue;
    }
    if (text.empty()) continue;
    if (text.front() == '#') continue;
    words.emplace_back(parse_word(text, n, line));
  }
  if (n < 0) throw CodebookError("codebook is empty: missing header");
  try {
    return TernaryCode(n, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw CodebookError(std::string("codebook is not a code: ") + e.what());
  }
}

TernaryCode read_codebook(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CodebookError("cannot open " + path.string());
  return read_codebook(in);
}

void write_hamming_codebook(std::ostream& out, int q, int n, const std::vector<QaryWord>& words) {
  out << "# n=" << n << " q=" << q << " metric=hamming\n";
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

}  // namespace ternary
