#pragma once
/// Scalar expression syntax: integers, a/b, symbols (generator names such
/// as z3, parameter names such as k1_2 or t), + - * / ^, parentheses and
/// implicit products such as 2k1_2.

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "cheralg/exactalg/rational.hpp"

namespace cheralg {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
class ScalarParser {
 public:
  using Resolver = std::function<std::optional<F>(const std::string&)>;
  using FromRational = std::function<F(const Rational&)>;

  ScalarParser(Resolver resolve, FromRational from_q) : resolve_(std::move(resolve)), from_q_(std::move(from_q)) {}

  F parse(const std::string& text) {
    s_ = text;
    pos_ = 0;
    F v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  F expr() {
    F v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  F term() {
    F v = power();
    for (;;) {
      if (eat('*')) {
        v = v * power();
      } else if (eat('/')) {
        F d = power();
        v = v / d;
      } else if (juxtaposed()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }
  // Implicit product such as 2k1_2 or 3(z3+1).
  bool juxtaposed() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '_' || std::isalpha(static_cast<unsigned char>(c));
  }
  F power() {
    F base = unary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      long e = integer();
      F r = from_q_(Rational(1));
      for (long i = 0; i < e; ++i) r = r * base;
      if (neg) r = from_q_(Rational(1)) / r;
      return r;
    }
    return base;
  }
  F unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  long integer() {
    skip();
    std::size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected integer");
    return std::stol(s_.substr(st, pos_ - st));
  }
  F primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      F v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return from_q_(Rational(s_.substr(st, pos_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(st, pos_ - st);
      auto v = resolve_(name);
      if (!v) fail("unknown symbol '" + name + "'");
      return *v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Resolver resolve_;
  FromRational from_q_;
  std::string s_;
  std::size_t pos_ = 0;
};

template <class F>
F parse_scalar(const std::string& text, typename ScalarParser<F>::Resolver resolve,
               typename ScalarParser<F>::FromRational from_q) {
  return ScalarParser<F>(std::move(resolve), std::move(from_q)).parse(text);
}

}  // namespace cheralg
