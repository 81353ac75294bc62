#include "curvedef/exprparse.hpp"

#include <cctype>
#include <vector>

namespace curvedef {

namespace {

enum class Tok { Plus, Minus, Star, Caret, LParen, RParen, Number, Ident, End };

struct Token {
  Tok kind;
  int pos;  // 1-based offset of the first character
  std::string text;
  Rat value;  // for Number
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    int pos = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::Plus, pos, "+", 0}); ++i; continue;
      case '-': out.push_back({Tok::Minus, pos, "-", 0}); ++i; continue;
      case '*': out.push_back({Tok::Star, pos, "*", 0}); ++i; continue;
      case '^': out.push_back({Tok::Caret, pos, "^", 0}); ++i; continue;
      case '(': out.push_back({Tok::LParen, pos, "(", 0}); ++i; continue;
      case ')': out.push_back({Tok::RParen, pos, ")", 0}); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      std::string num = src.substr(i, j - i);
      std::string den;
      if (j < src.size() && src[j] == '/') {
        size_t k = j + 1;
        while (k < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[k])))
          ++k;
        if (k == j + 1)
          throw ParseError("malformed rational literal",
                           static_cast<int>(j) + 1);
        den = src.substr(j + 1, k - j - 1);
        j = k;
      }
      Rat v(BigInt(num), den.empty() ? BigInt(1) : BigInt(den));
      out.push_back({Tok::Number, pos, src.substr(i, j - i), v});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() &&
             std::isalnum(static_cast<unsigned char>(src[j])))
        ++j;
      out.push_back({Tok::Ident, pos, src.substr(i, j - i), 0});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back({Tok::End, static_cast<int>(src.size()) + 1, "", 0});
  return out;
}

// Value policies. Each provides the ring ops, the atom lookup, and the
// exponentiation rule (negative exponents only on the x variable).
struct GluingPolicy {
  using Value = GluingPoly;
  Value from_rat(const Rat& r) const {
    Value v;
    v.add_term({0, 0, 0}, r);
    return v;
  }
  Value atom(const std::string& name, int pos) const {
    Value v;
    if (name == "x")
      v.add_term({1, 0, 0}, 1);
    else if (name == "y1")
      v.add_term({0, 1, 0}, 1);
    else if (name == "y2")
      v.add_term({0, 0, 1}, 1);
    else
      throw ParseError("unknown variable '" + name + "'", pos);
    return v;
  }
  Value pow(const Value& base, long long e, int pos) const {
    if (e >= 0) return base.pow(static_cast<int>(e));
    // Negative exponents make sense only for pure x-monomials.
    if (base.terms().size() != 1)
      throw ParseError("negative exponent on a non-monomial", pos);
    const auto& [key, c] = *base.terms().begin();
    if (key.ey1 != 0 || key.ey2 != 0)
      throw ParseError("negative exponent on y1/y2", pos);
    Rat ce = 1;
    for (long long i = 0; i < -e; ++i) ce /= c;
    Value v;
    v.add_term({key.ex * static_cast<int>(e), 0, 0}, ce);
    return v;
  }
};

struct ParamPolicy {
  int arity;
  using Value = ParamPoly;
  Value from_rat(const Rat& r) const { return ParamPoly::constant(arity, r); }
  Value atom(const std::string& name, int pos) const {
    if (name.size() >= 2 && name[0] == 'a') {
      bool digits = true;
      for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        int idx = std::stoi(name.substr(1));
        if (idx >= arity)
          throw ParseError("parameter index out of range in '" + name + "'",
                           pos);
        return ParamPoly::variable(arity, idx);
      }
    }
    throw ParseError("unknown variable '" + name + "'", pos);
  }
  Value pow(const Value& base, long long e, int pos) const {
    if (e < 0) throw ParseError("negative exponent", pos);
    return base.pow(static_cast<int>(e));
  }
};

template <typename Policy>
class Parser {
 public:
  Parser(const std::string& src, Policy policy)
      : tokens_(tokenize(src)), policy_(policy) {}

  typename Policy::Value run() {
    auto v = expr();
    if (peek().kind != Tok::End)
      throw ParseError("expected operator or end of input", peek().pos);
    return v;
  }

 private:
  using Value = typename Policy::Value;

  const Token& peek() const { return tokens_[idx_]; }
  Token next() { return tokens_[idx_++]; }

  Value expr() {
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      negate = true;
      next();
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    Value v = term();
    if (negate) v = -v;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Value t = term();
      v = minus ? v - t : v + t;
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (peek().kind == Tok::Star) {
      next();
      v = v * factor();
    }
    return v;
  }

  Value factor() {
    Value v = atom();
    if (peek().kind == Tok::Caret) {
      int caret_pos = next().pos;
      bool neg = false;
      if (peek().kind == Tok::Minus) {
        neg = true;
        next();
      }
      if (peek().kind != Tok::Number)
        throw ParseError("expected integer exponent", peek().pos);
      Token t = next();
      if (denominator(t.value) != 1)
        throw ParseError("non-integer exponent", t.pos);
      long long e = numerator(t.value).template convert_to<long long>();
      v = policy_.pow(v, neg ? -e : e, caret_pos);
    }
    return v;
  }

  Value atom() {
    Token t = next();
    switch (t.kind) {
      case Tok::Number:
        return policy_.from_rat(t.value);
      case Tok::Ident:
        return policy_.atom(t.text, t.pos);
      case Tok::LParen: {
        Value v = expr();
        if (peek().kind != Tok::RParen)
          throw ParseError("expected ')'", peek().pos);
        next();
        return v;
      }
      default:
        throw ParseError("expected variable, number, or '('", t.pos);
    }
  }

  std::vector<Token> tokens_;
  size_t idx_ = 0;
  Policy policy_;
};

}  // namespace

GluingPoly parse_gluing(const std::string& src) {
  return Parser<GluingPolicy>(src, {}).run();
}

ParamPoly parse_param(const std::string& src, int arity) {
  return Parser<ParamPolicy>(src, {arity}).run();
}

}  // namespace curvedef
