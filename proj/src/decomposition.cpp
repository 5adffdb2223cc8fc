#include "purebetti/decomposition.hpp"

#include <string>

#include "purebetti/error.hpp"

namespace purebetti {

std::vector<int> Decomposition::lengths() const {
  std::vector<int> out;
  for (const auto& term : terms) out.push_back(term.type.p());
  return out;
}

namespace {

std::string describe(const std::vector<int>& degrees) {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s + ")";
}

}  // namespace

Decomposition bs_decompose(const BettiTable& t) {
  Decomposition dec;
  dec.residual = t;
  while (!dec.residual.empty()) {
    std::vector<int> strand;
    for (int i = 0;; ++i) {
      auto column = dec.residual.column_degrees(i);
      if (column.empty()) break;
      strand.push_back(column.front());
    }
    if (strand.empty()) {
      dec.failure = "column 0 of the remaining table is empty";
      return dec;
    }
    for (std::size_t i = 0; i + 1 < strand.size(); ++i) {
      if (strand[i] >= strand[i + 1]) {
        dec.failure = "minimal strand " + describe(strand) + " is not strictly increasing";
        return dec;
      }
    }
    const DegreeSequence d(strand);
    const BettiTable diagram = pi(d).table;

    Rational c;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const int col = static_cast<int>(i);
      Rational ratio = dec.residual.at(col, d[i]) / diagram.at(col, d[i]);
      if (i == 0 || ratio < c) c = ratio;
    }

    BettiTable next = dec.residual;
    for (const auto& [key, value] : diagram.entries()) {
      Rational remaining = next.at(key.first, key.second) - c * value;
      if (remaining.sign() < 0) {
        dec.failure = "subtracting " + c.to_string() + " * pi" + describe(strand) +
                      " would leave a negative entry";
        return dec;
      }
      next.set(key.first, key.second, remaining);
    }
    dec.residual = std::move(next);
    dec.terms.push_back({c, d});
  }
  return dec;
}

std::vector<DecompositionTerm> to_pi_prime_coeffs(const Decomposition& dec) {
  std::vector<DecompositionTerm> out;
  for (const auto& term : dec.terms) {
    const Rational last = pi(term.type).table.at(term.type.p(), term.type.back());
    out.push_back({term.coefficient * last, term.type});
  }
  return out;
}

BettiTable resum(const std::vector<DecompositionTerm>& terms, bool prime) {
  BettiTable sum;
  for (const auto& term : terms) {
    const BettiTable diagram = prime ? pi_prime(term.type).table : pi(term.type).table;
    sum = sum + scale(diagram, term.coefficient);
  }
  return sum;
}

}  // namespace purebetti
