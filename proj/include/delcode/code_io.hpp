#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "delcode/codes.hpp"
#include "delcode/errors.hpp"

// Code file layout (LF line endings):
//
//   # delcode v1
//   # n=<N> s=<S> kind=<provenance>
//   <codeword>            one per line, N symbols, ascending
//
namespace delcode {

inline void write_code(std::ostream &os, const Code &code) {
  os << "# delcode v1\n";
  os << "# n=" << code.n << " s=" << code.s << " kind=" << to_string(code.provenance) << "\n";
  for (const auto &w : code.words)
    os << w.str() << "\n";
}

inline std::string code_to_text(const Code &code) {
  std::ostringstream os;
  write_code(os, code);
  return os.str();
}

namespace detail {

inline int parse_decimal(const std::string &text, const std::string &what) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad " + what + " value '" + text + "'");
  return std::stoi(text);
}

} // namespace detail

inline Code read_code(std::istream &is) {
  std::string line;
  auto next = [&](const char *what) {
    if (!std::getline(is, line))
      throw ParseError(std::string("code file truncated: missing ") + what);
    if (!line.empty() && line.back() == '\r')
      throw ParseError("code files use LF line endings");
  };

  next("magic line");
  if (line != "# delcode v1")
    throw ParseError("not a delcode v1 file: first line is '" + line + "'");

  next("parameter line");
  const std::string n_key = "# n=", s_key = " s=", kind_key = " kind=";
  const auto s_at = line.find(s_key), kind_at = line.find(kind_key);
  if (line.rfind(n_key, 0) != 0 || s_at == std::string::npos || kind_at == std::string::npos || kind_at < s_at)
    throw ParseError("malformed parameter line '" + line + "'");
  const int n = detail::parse_decimal(line.substr(n_key.size(), s_at - n_key.size()), "n");
  const int s = detail::parse_decimal(line.substr(s_at + s_key.size(), kind_at - s_at - s_key.size()), "s");
  const Provenance kind = parse_provenance(line.substr(kind_at + kind_key.size()));
  if (n > BitString::kMaxLength)
    throw ParseError("n=" + std::to_string(n) + " exceeds 63");

  std::vector<BitString> words;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r')
      throw ParseError("code files use LF line endings");
    if (static_cast<int>(line.size()) != n)
      throw ParseError("codeword '" + line + "' does not have length " + std::to_string(n));
    auto w = BitString::parse(line);
    if (!words.empty() && !(words.back() < w))
      throw ParseError("codewords must be strictly ascending; '" + line + "' is out of order");
    words.push_back(w);
  }
  return Code{n, s, std::move(words), kind};
}

inline Code code_from_text(const std::string &text) {
  std::istringstream is(text);
  return read_code(is);
}

inline void save_code(const std::string &path, const Code &code) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw Error("cannot open '" + path + "' for writing");
  write_code(os, code);
  if (!os)
    throw Error("failed writing '" + path + "'");
}

inline Code load_code(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is)
    throw Error("cannot open '" + path + "'");
  return read_code(is);
}

} // namespace delcode
