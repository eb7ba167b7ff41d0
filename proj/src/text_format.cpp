#include "uchain/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "uchain/error.hpp"

namespace uchain {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  int number;
  std::string_view raw;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i == raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int parse_int(const Line& line, const Token& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line.number, tok.column, "expected integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

// Everything after the first `skip` tokens, so that "U^2 + U^5" is accepted.
Polynomial parse_tail_polynomial(const Line& line, std::size_t skip) {
  if (line.tokens.size() <= skip) {
    throw ParseError(line.number, static_cast<int>(line.raw.size()) + 1, "missing polynomial");
  }
  const Token& first = line.tokens[skip];
  std::string_view rest = line.raw.substr(static_cast<std::size_t>(first.column - 1));
  try {
    return Polynomial::parse(rest);
  } catch (const ParseError& e) {
    // Re-anchor the column to the line.
    throw ParseError(line.number, first.column + e.column() - 1, e.detail());
  }
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    throw ParseError(line.number, at.column,
                     "'" + std::string(line.tokens[0].text) + "' expects " + std::to_string(n - 1) +
                         " argument(s)");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GradedComplex parse_complex(std::string_view text) {
  auto lines = split_lines(text);
  std::string name;
  bool seen_header = false;
  std::vector<Generator> gens;
  std::vector<Entry> entries;
  for (const auto& line : lines) {
    const Token& kw = line.tokens[0];
    if (kw.text == "complex") {
      if (seen_header) throw ParseError(line.number, kw.column, "duplicate 'complex' line");
      expect_arity(line, 2);
      name = std::string(line.tokens[1].text);
      seen_header = true;
    } else if (!seen_header) {
      throw ParseError(line.number, kw.column, "expected 'complex <name>' first");
    } else if (kw.text == "gen") {
      expect_arity(line, 3);
      gens.push_back({std::string(line.tokens[1].text), parse_int(line, line.tokens[2])});
    } else if (kw.text == "d") {
      if (line.tokens.size() < 4) {
        throw ParseError(line.number, kw.column, "'d' expects <source> <target> <polynomial>");
      }
      entries.push_back({std::string(line.tokens[1].text), std::string(line.tokens[2].text),
                         parse_tail_polynomial(line, 3)});
    } else {
      throw ParseError(line.number, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    }
  }
  if (!seen_header) throw ParseError(1, 1, "missing 'complex <name>' line");
  return GradedComplex::build(name, std::move(gens), entries);
}

std::string format_complex(const GradedComplex& c) {
  std::ostringstream out;
  out << "complex " << (c.name().empty() ? "C" : c.name()) << '\n';
  for (const auto& g : c.generators()) out << "gen " << g.id << ' ' << g.grading << '\n';
  for (std::size_t s = 0; s < c.rank(); ++s) {
    for (std::size_t t = 0; t < c.rank(); ++t) {
      if (!c.entry(t, s).is_zero()) {
        out << "d " << c.generator(s).id << ' ' << c.generator(t).id << ' '
            << c.entry(t, s).to_string() << '\n';
      }
    }
  }
  return out.str();
}

ChainMap parse_chain_map(std::string_view text, const GradedComplex& source,
                         const GradedComplex& target) {
  auto lines = split_lines(text);
  std::string name;
  bool seen_header = false;
  int degree = 0;
  std::vector<Entry> entries;
  for (const auto& line : lines) {
    const Token& kw = line.tokens[0];
    if (kw.text == "map") {
      if (seen_header) throw ParseError(line.number, kw.column, "duplicate 'map' line");
      expect_arity(line, 2);
      name = std::string(line.tokens[1].text);
      seen_header = true;
    } else if (!seen_header) {
      throw ParseError(line.number, kw.column, "expected 'map <name>' first");
    } else if (kw.text == "source" || kw.text == "target") {
      expect_arity(line, 2);
      const GradedComplex& c = kw.text == "source" ? source : target;
      if (line.tokens[1].text != c.name()) {
        throw Error(ErrorKind::ComplexMismatch, "map " + std::string(kw.text) + " '" +
                                                    std::string(line.tokens[1].text) +
                                                    "' does not match complex '" + c.name() + "'");
      }
    } else if (kw.text == "degree") {
      expect_arity(line, 2);
      degree = parse_int(line, line.tokens[1]);
    } else if (kw.text == "f") {
      if (line.tokens.size() < 4) {
        throw ParseError(line.number, kw.column, "'f' expects <source> <target> <polynomial>");
      }
      entries.push_back({std::string(line.tokens[1].text), std::string(line.tokens[2].text),
                         parse_tail_polynomial(line, 3)});
    } else {
      throw ParseError(line.number, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    }
  }
  if (!seen_header) throw ParseError(1, 1, "missing 'map <name>' line");
  return ChainMap::build(name, source, target, entries, degree);
}

std::string format_chain_map(const ChainMap& f) {
  std::ostringstream out;
  out << "map " << (f.name().empty() ? "F" : f.name()) << '\n';
  out << "source " << (f.source().name().empty() ? "C" : f.source().name()) << '\n';
  out << "target " << (f.target().name().empty() ? "C" : f.target().name()) << '\n';
  out << "degree " << f.degree() << '\n';
  for (std::size_t s = 0; s < f.source().rank(); ++s) {
    for (std::size_t t = 0; t < f.target().rank(); ++t) {
      if (!f.matrix()(t, s).is_zero()) {
        out << "f " << f.source().generator(s).id << ' ' << f.target().generator(t).id << ' '
            << f.matrix()(t, s).to_string() << '\n';
      }
    }
  }
  return out.str();
}

GradedComplex read_complex_file(const std::string& path) { return parse_complex(read_file(path)); }

ChainMap read_chain_map_file(const std::string& path, const GradedComplex& source,
                             const GradedComplex& target) {
  return parse_chain_map(read_file(path), source, target);
}

}  // namespace uchain
