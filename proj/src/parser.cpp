#include "tlteach/parser.hpp"

#include <cctype>
#include <limits>

namespace tlteach {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula run() {
    Formula f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::uint64_t number() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (kMax - d) / 10) throw ParseError(start, "integer overflow");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return v;
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const auto c = static_cast<unsigned char>(s_[pos_]);
      if (!std::isalnum(c) && c != '_' && c != '-') break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a symbol name");
    return std::string(s_.substr(start, pos_ - start));
  }

  Formula temporal(bool eventually) {
    expect("[");
    expect("<=");
    const auto tau = number();
    expect("]");
    Formula body = expr();
    return eventually ? Formula::eventually(tau, std::move(body))
                      : Formula::always(tau, std::move(body));
  }

  Formula expr() {
    if (at_end()) fail("unexpected end of input");
    const char c = s_[pos_];
    switch (c) {
      case '!':
        ++pos_;
        return Formula::negation(expr());
      case '(': {
        ++pos_;
        Formula lhs = expr();
        if (accept(")")) return lhs;
        if (accept("&")) {
          Formula rhs = expr();
          expect(")");
          return Formula::conjunction(std::move(lhs), std::move(rhs));
        }
        if (accept("|")) {
          Formula rhs = expr();
          expect(")");
          return Formula::disjunction(std::move(lhs), std::move(rhs));
        }
        if (accept("->")) {
          Formula rhs = expr();
          expect(")");
          return Formula::implication(std::move(lhs), std::move(rhs));
        }
        fail("expected '&', '|', '->' or ')'");
      }
      case 'F':
      case 'G': {
        // F and G are only operators when followed by '['.
        std::size_t save = pos_;
        ++pos_;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '[') return temporal(c == 'F');
        pos_ = save;
        fail("expected '[' after temporal operator");
      }
      case 'T':
        ++pos_;
        return Formula::truth();
      default:
        break;
    }
    if (accept("x")) {
      expect("<=");
      return Formula::threshold(number());
    }
    if (accept("sym:")) return Formula::label(name());
    fail("unexpected character");
  }
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

}  // namespace tlteach
