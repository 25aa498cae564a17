#include "divcon/cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace divcon::cli {

const std::vector<std::string>& default_variables() {
  static const std::vector<std::string> vars{"x", "y", "z", "t"};
  return vars;
}

ParseError::ParseError(ErrorCode code, int line, int column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int line = line_;
      const int column = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line, column});
        return out;
      }
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (std::isdigit(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        out.push_back({Tok::number, std::string(text_.substr(start, pos_ - start)), line, column});
        continue;
      }
      if (std::isalpha(c) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          advance();
        }
        out.push_back({Tok::ident, std::string(text_.substr(start, pos_ - start)), line, column});
        continue;
      }
      static const std::string ops = "+-*/^()";
      static const Tok kinds[] = {Tok::plus,  Tok::minus,  Tok::star,  Tok::slash,
                                  Tok::caret, Tok::lparen, Tok::rparen};
      const auto k = ops.find(static_cast<char>(c));
      if (k == std::string::npos) {
        std::size_t len = 1;
        if (c >= 0xC0) {
          while (pos_ + len < text_.size() &&
                 (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80) {
            ++len;
          }
        }
        throw ParseError(ErrorCode::syntax, line, column,
                         "unexpected character '" + std::string(text_.substr(pos_, len)) + "'");
      }
      out.push_back({kinds[k], std::string(1, static_cast<char>(c)), line, column});
      advance();
    }
  }

 private:
  void advance() {
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    ++pos_;
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    // Continuation bytes of a multibyte character never start a token.
    while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& vars)
      : tokens_(std::move(tokens)), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()));
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(ErrorCode::syntax, t.line, t.column, message);
  }

  bool starts_factor(Tok k) const {
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  Polynomial expr() {
    Polynomial acc(vars_);
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) negate = take().kind == Tok::minus;
    Polynomial first = term();
    acc = negate ? -first : first;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      Polynomial next = term();
      if (minus) {
        acc -= next;
      } else {
        acc += next;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek().kind == Tok::star) {
        take();
        acc *= factor();
      } else if (starts_factor(peek().kind)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    const Token& t = take();
    if (t.kind != Tok::number) fail(t, "expected a natural number exponent, found " + describe(t));
    if (t.text.size() > 3 || std::stoi(t.text) > 255) fail(t, "exponent " + t.text + " is too large");
    return static_cast<unsigned>(std::stoi(t.text));
  }

  Polynomial factor() {
    std::optional<Polynomial> prefix;
    Polynomial base = primary(prefix);
    while (peek().kind == Tok::caret) {
      take();
      base = base.pow(exponent());
    }
    return prefix ? *prefix * base : base;
  }

  Polynomial variable(const std::string& name) const {
    return Polynomial::variable(vars_, name);
  }

  // For a run of single letters, `prefix` receives all but the last letter so
  // that a following exponent binds to the last one.
  Polynomial primary(std::optional<Polynomial>& prefix) {
    const Token& t = take();
    switch (t.kind) {
      case Tok::number: {
        mpz_class num(t.text);
        if (peek().kind == Tok::slash) {
          take();
          const Token& d = take();
          if (d.kind != Tok::number) fail(d, "expected a denominator, found " + describe(d));
          mpz_class den(d.text);
          if (den == 0) fail(d, "zero denominator");
          Rational q(num, den);
          q.canonicalize();
          return Polynomial::constant(vars_, q);
        }
        return Polynomial::constant(vars_, Rational(num));
      }
      case Tok::ident: {
        if (std::find(vars_.begin(), vars_.end(), t.text) != vars_.end()) return variable(t.text);
        for (std::size_t i = 0; i < t.text.size(); ++i) {
          const std::string letter(1, t.text[i]);
          if (std::find(vars_.begin(), vars_.end(), letter) == vars_.end()) {
            throw ParseError(ErrorCode::unknown_variable, t.line, t.column + static_cast<int>(i),
                             "unknown variable '" + (t.text.size() == 1 ? letter : t.text) + "'");
          }
        }
        Polynomial head = Polynomial::constant(vars_, 1);
        for (std::size_t i = 0; i + 1 < t.text.size(); ++i) head *= variable(std::string(1, t.text[i]));
        if (t.text.size() > 1) prefix = head;
        return variable(std::string(1, t.text.back()));
      }
      case Tok::lparen: {
        Polynomial inner = expr();
        const Token& close = take();
        if (close.kind != Tok::rparen) fail(close, "expected ')', found " + describe(close));
        return inner;
      }
      default:
        fail(t, "unexpected " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
};

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  Lexer lexer(text);
  Parser parser(lexer.run(), variables);
  return parser.parse();
}

std::vector<int> parse_weights(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split_commas(text)) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        item.size() > 6) {
      throw Error(ErrorCode::invalid_weight, "weights must be comma-separated positive integers, got '" +
                                                 std::string(text) + "'");
    }
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& item : split_commas(text)) {
    Polynomial p = parse_polynomial(item, {});
    if (p.degree() > 0) throw Error(ErrorCode::syntax, "expected a rational number, got '" + item + "'");
    out.push_back(p.constant_term());
  }
  return out;
}

std::vector<std::string> parse_names(std::string_view text) {
  std::vector<std::string> out = split_commas(text);
  for (const auto& name : out) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
      throw Error(ErrorCode::syntax, "invalid variable name '" + name + "'");
    }
  }
  return out;
}

}  // namespace divcon::cli
