#include "hoch/io.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace hoch {

namespace {

struct RawMonomial {
  enum class Kind { unit, zero, cuntz, free } kind;
  CuntzMonomial cuntz;
  FreeWord free;
};

struct RawTerm {
  Rational coef;
  std::vector<RawMonomial> factors;
  std::size_t position;
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedChain run() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end())
      fail("empty expression");
    terms.push_back(term(sign_prefix()));
    while (true) {
      skip_ws();
      if (at_end())
        break;
      const char c = peek();
      if (c != '+' && c != '-')
        fail("expected '+', '-' or end of input");
      ++pos_;
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return assemble(terms);
  }

private:
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int sign_prefix() {
    int sign = 1;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-')
        sign = -sign;
      ++pos_;
      skip_ws();
    }
    return sign;
  }

  /// "(x)" with optional inner whitespace; restores position on mismatch.
  bool tensor_separator() {
    skip_ws();
    const std::size_t save = pos_;
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (peek() == 'x') {
        ++pos_;
        skip_ws();
        if (peek() == ')') {
          ++pos_;
          return true;
        }
      }
    }
    pos_ = save;
    return false;
  }

  Rational integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    return Rational(std::string(text_.substr(start, pos_ - start)));
  }

  Index index() {
    const std::size_t start = pos_;
    skip_ws();
    const Rational v = integer();
    if (v < 1 || v > std::numeric_limits<Index>::max()) {
      pos_ = start;
      fail("generator index must be a positive integer");
    }
    return static_cast<Index>(boost::multiprecision::numerator(v));
  }

  Word index_list(bool allow_empty) {
    expect('[');
    std::vector<Index> out;
    skip_ws();
    if (peek() == ']') {
      if (!allow_empty)
        fail("expected a generator index");
      ++pos_;
      return Word(std::move(out));
    }
    out.push_back(index());
    while (true) {
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        out.push_back(index());
      } else if (peek() == ']') {
        ++pos_;
        return Word(std::move(out));
      } else {
        fail("expected ',' or ']'");
      }
    }
  }

  RawMonomial monomial() {
    skip_ws();
    const char c = peek();
    if (c == 'p') {
      ++pos_;
      CuntzMonomial m{index_list(false), {}};
      skip_ws();
      if (peek() == 'q') {
        ++pos_;
        m.beta = index_list(false);
      }
      return {RawMonomial::Kind::cuntz, std::move(m), {}};
    }
    if (c == 'q') {
      ++pos_;
      return {RawMonomial::Kind::cuntz, CuntzMonomial::q(index_list(false)), {}};
    }
    if (c == 'w') {
      ++pos_;
      return {RawMonomial::Kind::free, {}, FreeWord{index_list(true)}};
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a monomial");
      return {c == '1' ? RawMonomial::Kind::unit : RawMonomial::Kind::zero, {}, {}};
    }
    fail("expected a monomial");
  }

  std::vector<RawMonomial> tensor() {
    std::vector<RawMonomial> out;
    out.push_back(monomial());
    while (tensor_separator())
      out.push_back(monomial());
    return out;
  }

  RawTerm term(int sign) {
    sign *= sign_prefix();
    skip_ws();
    const std::size_t start = pos_;
    Rational coef(sign);

    // A leading number is a scalar when followed by '/' or '*', otherwise it
    // must be the monomial 0 or 1.
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Rational num = integer();
      skip_ws();
      if (peek() == '/' || peek() == '*') {
        Rational value = num;
        if (peek() == '/') {
          ++pos_;
          const std::size_t den_pos = pos_;
          const Rational den = integer();
          if (den == 0) {
            pos_ = den_pos;
            fail("zero denominator");
          }
          value /= den;
        }
        expect('*');
        coef *= value;
      } else {
        pos_ = start;
      }
    }

    skip_ws();
    std::vector<RawMonomial> factors;
    const std::size_t body = pos_;
    if (peek() == '(' && !tensor_separator()) {
      ++pos_;
      factors = tensor();
      expect(')');
    } else {
      pos_ = body;
      factors = tensor();
    }
    return {coef, std::move(factors), start};
  }

  ParsedChain assemble(const std::vector<RawTerm> &terms) {
    bool cuntz = false;
    bool free = false;
    const std::size_t degree = terms.front().factors.size();
    for (const auto &t : terms) {
      if (t.factors.size() != degree)
        throw ParseError(t.position, "degree mismatch between terms");
      for (const auto &f : t.factors) {
        cuntz |= f.kind == RawMonomial::Kind::cuntz;
        free |= f.kind == RawMonomial::Kind::free;
      }
    }
    if (cuntz && free)
      throw ParseError(0, "expression mixes Cuntz monomials and free words");

    auto build = [&]<typename M>(auto pick) {
      Chain<M> out;
      for (const auto &t : terms) {
        std::vector<M> factors;
        bool zero = false;
        for (const auto &f : t.factors) {
          if (f.kind == RawMonomial::Kind::zero)
            zero = true;
          else if (f.kind == RawMonomial::Kind::unit)
            factors.push_back(M::unit());
          else
            factors.push_back(pick(f));
        }
        if (!zero)
          out.add(ElementaryTensor<M>(std::move(factors)), t.coef);
      }
      return out;
    };
    const int deg = static_cast<int>(degree) - 1;
    if (free)
      return {build.template operator()<FreeWord>([](const RawMonomial &f) { return f.free; }), deg};
    return {build.template operator()<CuntzMonomial>([](const RawMonomial &f) { return f.cuntz; }),
            deg};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

ParsedChain parse_chain(std::string_view text) { return Parser(text).run(); }

Chain<CuntzMonomial> parse_cuntz_chain(std::string_view text) {
  auto parsed = parse_chain(text);
  if (parsed.basis() != Basis::cuntz)
    throw ParseError(0, "expected Cuntz monomials");
  return std::get<0>(std::move(parsed.chain));
}

Chain<FreeWord> parse_free_chain(std::string_view text) {
  auto parsed = parse_chain(text);
  if (parsed.basis() == Basis::free)
    return std::get<1>(std::move(parsed.chain));
  // Unit-only expressions parse as Cuntz; reinterpret them as free words.
  const auto &c = std::get<0>(parsed.chain);
  Chain<FreeWord> out;
  for (const auto &[t, coef] : c) {
    std::vector<FreeWord> f;
    for (const auto &m : t) {
      if (!m.is_unit())
        throw ParseError(0, "expected free words");
      f.push_back(FreeWord::unit());
    }
    out.add(ElementaryTensor<FreeWord>(std::move(f)), coef);
  }
  return out;
}

CuntzMonomial parse_cuntz_monomial(std::string_view text) {
  const auto c = parse_cuntz_chain(text);
  if (c.size() != 1 || c.begin()->first.degree() != 0 || c.begin()->second != 1)
    throw ParseError(0, "expected a single monomial");
  return c.begin()->first[0];
}

} // namespace hoch
