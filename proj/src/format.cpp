#include "hoch/io.hpp"

#include <string>

namespace hoch {

namespace {

std::string format_indices(char tag, const Word &w) {
  std::string out(1, tag);
  out += '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(w[i]);
  }
  out += ']';
  return out;
}

template <typename M>
std::string tensor_text(const ElementaryTensor<M> &x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i)
      out += " (x) ";
    out += format_monomial(x[i]);
  }
  return out;
}

template <typename M>
std::string chain_text(const Chain<M> &x) {
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[t, c] : x) {
    const std::string body = tensor_text(t);
    if (t.degree() == 0) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (mag != 1)
        out += to_string(mag) + " * ";
      out += body;
    } else {
      if (!first)
        out += " + ";
      if (c == 1)
        out += body;
      else
        out += to_string(c) + " * (" + body + ")";
    }
    first = false;
  }
  return out;
}

} // namespace

std::string format_monomial(const CuntzMonomial &a) {
  if (a.is_unit())
    return "1";
  std::string out;
  if (!a.alpha.empty())
    out += format_indices('p', a.alpha);
  if (!a.beta.empty())
    out += format_indices('q', a.beta);
  return out;
}

std::string format_monomial(const FreeWord &w) { return format_indices('w', w.letters); }

std::string format_tensor(const ElementaryTensor<CuntzMonomial> &x) { return tensor_text(x); }
std::string format_tensor(const ElementaryTensor<FreeWord> &x) { return tensor_text(x); }

std::string format_chain(const Chain<CuntzMonomial> &x) { return chain_text(x); }
std::string format_chain(const Chain<FreeWord> &x) { return chain_text(x); }

} // namespace hoch
