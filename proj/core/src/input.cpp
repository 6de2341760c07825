#include "latk/input.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "latk/error.hpp"

namespace latk {

bool InputSystem::inhomogeneous() const {
  return inhom_inequalities.rows() > 0 || inhom_equations.rows() > 0 || inhom_congruences.rows() > 0 ||
         vertices.rows() > 0 || dehomogenization.has_value();
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{"", line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
      t.text += text[i];
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  InputSystem run() {
    InputSystem s;
    const Token& head = expect_token("'amb_space'");
    if (head.text != "amb_space") fail(head, "expected 'amb_space', got '" + head.text + "'");
    const Token& dim_tok = expect_token("dimension");
    Integer dim = integer(dim_tok);
    if (dim.sign() <= 0 || !dim.fits_int64() || dim.to_int64() > 10000)
      fail(dim_tok, "dimension must be a positive integer");
    const auto d = static_cast<std::size_t>(dim.to_int64());
    s.dim = d;
    s.cone = IntegerMatrix(0, d);
    s.inequalities = IntegerMatrix(0, d);
    s.equations = IntegerMatrix(0, d);
    s.congruences = IntegerMatrix(0, d + 1);
    s.inhom_inequalities = IntegerMatrix(0, d + 1);
    s.inhom_equations = IntegerMatrix(0, d + 1);
    s.inhom_congruences = IntegerMatrix(0, d + 2);
    s.vertices = IntegerMatrix(0, d + 1);

    while (pos_ < tokens_.size()) {
      const Token& kw = tokens_[pos_++];
      if (kw.text == "cone") matrix(s.cone, d, Check::None);
      else if (kw.text == "inequalities") matrix(s.inequalities, d, Check::None);
      else if (kw.text == "equations") matrix(s.equations, d, Check::None);
      else if (kw.text == "congruences") matrix(s.congruences, d + 1, Check::LastPositive);
      else if (kw.text == "inhom_inequalities") matrix(s.inhom_inequalities, d + 1, Check::None);
      else if (kw.text == "inhom_equations") matrix(s.inhom_equations, d + 1, Check::None);
      else if (kw.text == "inhom_congruences") matrix(s.inhom_congruences, d + 2, Check::LastPositive);
      else if (kw.text == "vertices") matrix(s.vertices, d + 1, Check::LastPositive);
      else if (kw.text == "grading") single_row(s.grading, kw, d);
      else if (kw.text == "dehomogenization") single_row(s.dehomogenization, kw, d);
      else if (kw.text == "amb_space") fail(kw, "'amb_space' given twice");
      else fail(kw, "unknown section '" + kw.text + "'");
    }
    return s;
  }

 private:
  enum class Check { None, LastPositive };

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.column, what);
  }

  const Token& expect_token(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
      std::size_t col = tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
      throw ParseError(line, col, "unexpected end of input, expected " + what);
    }
    return tokens_[pos_++];
  }

  Integer integer(const Token& t) {
    try {
      return Integer::parse(t.text);
    } catch (const Error&) {
      fail(t, "expected an integer, got '" + t.text + "'");
    }
  }

  void matrix(IntegerMatrix& m, std::size_t width, Check check) {
    const Token& count_tok = expect_token("row count");
    Integer count = integer(count_tok);
    if (count.sign() < 0 || !count.fits_int64() || count.to_int64() > 1000000)
      fail(count_tok, "row count must be a nonnegative integer");
    for (std::int64_t r = 0; r < count.to_int64(); ++r) {
      IntegerVector row;
      for (std::size_t c = 0; c < width; ++c) {
        const Token& t = expect_token("matrix entry");
        row.push_back(integer(t));
        if (c + 1 == width && check == Check::LastPositive && row.back().sign() <= 0)
          fail(t, "modulus or denominator must be positive");
      }
      m.append_row(row);
    }
  }

  void single_row(std::optional<IntegerVector>& target, const Token& kw, std::size_t width) {
    if (target) fail(kw, "'" + kw.text + "' given twice");
    IntegerVector row;
    for (std::size_t c = 0; c < width; ++c) row.push_back(integer(expect_token("entry of '" + kw.text + "'")));
    target = std::move(row);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void write_matrix(std::ostringstream& os, const char* name, const IntegerMatrix& m) {
  if (m.rows() == 0) return;
  os << name << ' ' << m.rows() << '\n';
  os << m;
}

void write_row(std::ostringstream& os, const char* name, const std::optional<IntegerVector>& v) {
  if (!v) return;
  os << name << '\n';
  for (std::size_t i = 0; i < v->size(); ++i) os << (i ? " " : "") << (*v)[i];
  os << '\n';
}

}  // namespace

InputSystem parse_input(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string format_input(const InputSystem& s) {
  std::ostringstream os;
  os << "amb_space " << s.dim << '\n';
  write_matrix(os, "cone", s.cone);
  write_matrix(os, "inequalities", s.inequalities);
  write_matrix(os, "equations", s.equations);
  write_matrix(os, "congruences", s.congruences);
  write_matrix(os, "inhom_inequalities", s.inhom_inequalities);
  write_matrix(os, "inhom_equations", s.inhom_equations);
  write_matrix(os, "inhom_congruences", s.inhom_congruences);
  write_matrix(os, "vertices", s.vertices);
  write_row(os, "grading", s.grading);
  write_row(os, "dehomogenization", s.dehomogenization);
  return os.str();
}

}  // namespace latk
