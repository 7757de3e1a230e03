#include "ordgap/program_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ordgap/errors.hpp"

namespace ordgap {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
    } else {
      Token tok{{}, line, col};
      while (i < text.size() && text[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(text[i]))) {
        tok.text += text[i];
        ++i;
        ++col;
      }
      tokens.push_back(std::move(tok));
    }
  }
  return tokens;
}

bool is_keyword(std::string_view s) {
  return s == "ring" || s == "rows" || s == "cols" || s == "A" || s == "b" || s == "c" ||
         s == "d";
}

struct Section {
  Token keyword;
  std::vector<Token> values;
};

std::size_t parse_count(const Section& sec) {
  if (sec.values.size() != 1) {
    throw ParseError("'" + sec.keyword.text + "' takes exactly one value", sec.keyword.line,
                     sec.keyword.column);
  }
  const Token& t = sec.values.front();
  if (t.text.empty() || t.text.size() > 6 ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw ParseError("'" + sec.keyword.text + "' needs a nonnegative integer, got '" + t.text + "'",
                     t.line, t.column);
  }
  return static_cast<std::size_t>(std::stoul(t.text));
}

std::vector<Element> parse_literals(RingId ring, const Section& sec, std::size_t expected) {
  if (sec.values.size() != expected) {
    throw ParseError("dimension mismatch: '" + sec.keyword.text + "' expects " +
                         std::to_string(expected) + " literals, found " +
                         std::to_string(sec.values.size()),
                     sec.keyword.line, sec.keyword.column);
  }
  std::vector<Element> out;
  out.reserve(expected);
  for (const Token& t : sec.values) {
    try {
      out.push_back(parse_element(ring, t.text));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
  }
  return out;
}

}  // namespace

ProgramData parse_program(std::string_view text) {
  std::map<std::string, Section> sections;
  std::optional<std::string> current;
  for (Token& tok : tokenize(text)) {
    if (is_keyword(tok.text)) {
      if (sections.contains(tok.text)) {
        throw ParseError("duplicate section '" + tok.text + "'", tok.line, tok.column);
      }
      current = tok.text;
      sections.emplace(tok.text, Section{tok, {}});
    } else if (!current) {
      throw ParseError("expected a section keyword, got '" + tok.text + "'", tok.line, tok.column);
    } else {
      sections.at(*current).values.push_back(std::move(tok));
    }
  }
  for (const char* key : {"ring", "rows", "cols", "A", "b", "c", "d"}) {
    if (!sections.contains(key)) throw ParseError(std::string("missing section '") + key + "'");
  }

  const Section& ring_sec = sections.at("ring");
  if (ring_sec.values.size() != 1) {
    throw ParseError("'ring' takes exactly one value", ring_sec.keyword.line,
                     ring_sec.keyword.column);
  }
  RingId ring;
  try {
    ring = parse_ring_name(ring_sec.values.front().text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), ring_sec.values.front().line, ring_sec.values.front().column);
  }

  const std::size_t m = parse_count(sections.at("rows"));
  const std::size_t n = parse_count(sections.at("cols"));
  std::vector<Element> a = parse_literals(ring, sections.at("A"), m * n);
  std::vector<Element> b = parse_literals(ring, sections.at("b"), m);
  std::vector<Element> c = parse_literals(ring, sections.at("c"), n);
  std::vector<Element> d = parse_literals(ring, sections.at("d"), 1);
  return ProgramData(RMatrix(ring, m, n, std::move(a)), RVector(ring, std::move(b)),
                     RVector(ring, std::move(c)), std::move(d.front()));
}

std::string serialize_program(const ProgramData& p) {
  std::ostringstream os;
  auto row = [&](std::span<const Element> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) os << ' ' << to_string(entries[i]);
  };
  os << "ring " << ring_name(p.ring()) << '\n';
  os << "rows " << p.rows() << '\n';
  os << "cols " << p.cols() << '\n';
  os << "A\n";
  for (std::size_t j = 0; j < p.rows(); ++j) {
    row(p.a().entries().subspan(j * p.cols(), p.cols()));
    os << '\n';
  }
  os << "b";
  row(p.b().entries());
  os << "\nc";
  row(p.c().entries());
  os << "\nd " << to_string(p.d()) << '\n';
  return os.str();
}

ProgramData load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open program file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_program(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

RVector parse_vector(RingId ring, std::string_view text) {
  std::vector<Element> out;
  for (const Token& t : tokenize(text)) out.push_back(parse_element(ring, t.text));
  return RVector(ring, std::move(out));
}

}  // namespace ordgap
