#include "purebetti/oracle.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <sstream>

#include "purebetti/error.hpp"
#include "purebetti/linalg.hpp"

namespace purebetti {

int Monomial::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t k = 0; k < out.exponents.size(); ++k) out.exponents[k] += b.exponents[k];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t k = 0; k < out.exponents.size(); ++k)
    out.exponents[k] = std::max(out.exponents[k], b.exponents[k]);
  return out;
}

namespace {

void fill_monomials(std::vector<int>& prefix, std::size_t var, int remaining, std::vector<Monomial>& out) {
  if (var + 1 == prefix.size()) {
    prefix[var] = remaining;
    out.push_back({prefix});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix[var] = e;
    fill_monomials(prefix, var + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (n == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<int> prefix(static_cast<std::size_t>(n), 0);
  fill_monomials(prefix, 0, degree, out);
  return out;
}

HomogeneousPolynomial::HomogeneousPolynomial(int n, const Terms& terms) : n_(n) {
  for (const auto& [m, c] : terms) {
    if (c.is_zero()) continue;
    if (static_cast<int>(m.variables()) != n)
      fail(Errc::VariableCountMismatch, "monomial has " + std::to_string(m.variables()) +
                                            " exponents, expected " + std::to_string(n));
    for (int e : m.exponents)
      if (e < 0) fail(Errc::NotHomogeneous, "negative exponent");
    if (!terms_.empty() && m.degree() != degree_)
      fail(Errc::NotHomogeneous, "terms of degree " + std::to_string(degree_) + " and " +
                                     std::to_string(m.degree()));
    degree_ = m.degree();
    terms_.emplace(m, c);
  }
  if (terms_.empty()) fail(Errc::ZeroPolynomial, "polynomial is zero");
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(std::vector<int> exponents,
                                                      const Rational& coefficient) {
  const int n = static_cast<int>(exponents.size());
  return HomogeneousPolynomial(n, {{Monomial{std::move(exponents)}, coefficient}});
}

std::string HomogeneousPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  // print largest monomial first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    const Rational magnitude = c.abs();
    bool wrote = false;
    if (magnitude != Rational(1) || m.degree() == 0) {
      os << magnitude;
      wrote = true;
    }
    for (std::size_t k = 0; k < m.exponents.size(); ++k) {
      if (m.exponents[k] == 0) continue;
      os << (wrote ? "*" : "") << "x" << (k + 1);
      if (m.exponents[k] > 1) os << "^" << m.exponents[k];
      wrote = true;
    }
  }
  return os.str();
}

HomogeneousIdeal::HomogeneousIdeal(int n, std::vector<HomogeneousPolynomial> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ < 0) fail(Errc::NegativeDimension, "negative variable count");
  for (const auto& g : generators_)
    if (g.variables() != n_)
      fail(Errc::VariableCountMismatch, "generator " + g.to_string() + " lives in " +
                                            std::to_string(g.variables()) + " variables, ideal in " +
                                            std::to_string(n_));
}

bool HomogeneousIdeal::is_monomial() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const auto& g) { return g.is_monomial(); });
}

int HomogeneousIdeal::max_generator_degree() const noexcept {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

int HomogeneousIdeal::generator_degree_sum() const noexcept {
  int d = 0;
  for (const auto& g : generators_) d += g.degree();
  return d;
}

namespace {

// Degree-q slice of S/I: row-reduced basis of I_q over the monomials of S_q,
// with the non-pivot monomials serving as coset representatives.
class QuotientPiece {
 public:
  QuotientPiece(const HomogeneousIdeal& ideal, int q)
      : monomials_(monomials_of_degree(ideal.variables(), q)) {
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);

    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (const auto& g : ideal.generators()) {
      if (g.degree() > q) continue;
      for (const auto& m : monomials_of_degree(ideal.variables(), q - g.degree())) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (const auto& [term, c] : g.terms()) row.emplace_back(index_.at(m * term), c);
        rows.push_back(std::move(row));
      }
    }
    reduced_ = Matrix(rows.size(), monomials_.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) reduced_(r, c) = v;
    pivots_ = rref(reduced_);

    pivot_row_.assign(monomials_.size(), kNone);
    for (std::size_t r = 0; r < pivots_.size(); ++r) pivot_row_[pivots_[r]] = r;
    standard_pos_.assign(monomials_.size(), kNone);
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
      if (pivot_row_[k] != kNone) continue;
      standard_pos_[k] = standard_.size();
      standard_.push_back(k);
    }
  }

  std::size_t ideal_dim() const { return pivots_.size(); }
  std::size_t quotient_dim() const { return standard_.size(); }
  const Monomial& standard_monomial(std::size_t s) const { return monomials_[standard_[s]]; }

  /// Coordinates of m + I_q in the standard-monomial basis.
  std::vector<std::pair<std::size_t, Rational>> normal_form(const Monomial& m) const {
    const std::size_t k = index_.at(m);
    if (pivot_row_[k] == kNone) return {{standard_pos_[k], Rational(1)}};
    std::vector<std::pair<std::size_t, Rational>> out;
    const std::size_t r = pivot_row_[k];
    for (std::size_t s = 0; s < standard_.size(); ++s) {
      const Rational& v = reduced_(r, standard_[s]);
      if (!v.is_zero()) out.emplace_back(s, -v);
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
  Matrix reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::size_t> standard_;
  std::vector<std::size_t> standard_pos_;
};

std::vector<QuotientPiece> quotient_pieces(const HomogeneousIdeal& ideal, int j_max) {
  std::vector<QuotientPiece> pieces;
  for (int q = 0; q <= j_max; ++q) pieces.emplace_back(ideal, q);
  return pieces;
}

// Subsets of {0..n-1} of each size, as ascending bitmasks.
std::vector<std::vector<unsigned>> subsets_by_size(int n) {
  std::vector<std::vector<unsigned>> out(static_cast<std::size_t>(n) + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    out[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  return out;
}

// Betti numbers beta_{i,j} for i = 0..n in one internal degree j.
std::vector<std::int64_t> betti_in_degree(const std::vector<QuotientPiece>& pieces,
                                          const std::vector<std::vector<unsigned>>& subsets, int n, int j) {
  auto chain_dim = [&](int i) -> std::size_t {
    if (i < 0 || i > n || j - i < 0) return 0;
    return subsets[static_cast<std::size_t>(i)].size() *
           pieces[static_cast<std::size_t>(j - i)].quotient_dim();
  };

  // rank of d_i : C_{i,j} -> C_{i-1,j}
  auto differential_rank = [&](int i) -> std::size_t {
    if (i < 1 || i > n || j - i < 0) return 0;
    const auto& source_piece = pieces[static_cast<std::size_t>(j - i)];
    const auto& target_piece = pieces[static_cast<std::size_t>(j - i + 1)];
    const auto& sources = subsets[static_cast<std::size_t>(i)];
    const auto& targets = subsets[static_cast<std::size_t>(i - 1)];
    if (chain_dim(i) == 0 || chain_dim(i - 1) == 0) return 0;

    std::map<unsigned, std::size_t> target_index;
    for (std::size_t t = 0; t < targets.size(); ++t) target_index.emplace(targets[t], t);

    Matrix m(chain_dim(i), chain_dim(i - 1));
    const std::size_t target_block = target_piece.quotient_dim();
    for (std::size_t s = 0; s < sources.size(); ++s) {
      const unsigned mask = sources[s];
      for (std::size_t b = 0; b < source_piece.quotient_dim(); ++b) {
        const std::size_t row = s * source_piece.quotient_dim() + b;
        const Monomial& base = source_piece.standard_monomial(b);
        int position = 0;
        for (int k = 0; k < n; ++k) {
          if (!(mask & (1u << k))) continue;
          const bool negative = position++ % 2 == 1;
          Monomial shifted = base;
          ++shifted.exponents[static_cast<std::size_t>(k)];
          const std::size_t block = target_index.at(mask & ~(1u << k)) * target_block;
          for (const auto& [col, v] : target_piece.normal_form(shifted))
            m(row, block + col) += negative ? -v : v;
        }
      }
    }
    return rank(std::move(m));
  };

  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) ranks[static_cast<std::size_t>(i)] = differential_rank(i);

  std::vector<std::int64_t> betti(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    const std::size_t dim = chain_dim(i);
    const std::size_t outgoing = ranks[static_cast<std::size_t>(i)];
    const std::size_t incoming = ranks[static_cast<std::size_t>(i) + 1];
    if (outgoing + incoming > dim)
      fail(Errc::InternalConsistency, "Koszul ranks exceed chain dimension at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
    betti[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(dim - outgoing - incoming);
  }
  return betti;
}

void require_monomial(const HomogeneousIdeal& ideal) {
  if (!ideal.is_monomial()) fail(Errc::NotMonomial, "ideal has a non-monomial generator");
}

Monomial generator_monomial(const HomogeneousPolynomial& g) { return g.terms().begin()->first; }

}  // namespace

std::int64_t ideal_degree_dim(const HomogeneousIdeal& ideal, int j) {
  if (j < 0) fail(Errc::NonPositiveParameter, "negative degree " + std::to_string(j));
  return static_cast<std::int64_t>(QuotientPiece(ideal, j).ideal_dim());
}

std::vector<std::int64_t> quotient_hilbert_values(const HomogeneousIdeal& ideal, int j_max) {
  if (j_max < 0) fail(Errc::NonPositiveParameter, "negative degree bound " + std::to_string(j_max));
  std::vector<std::int64_t> values;
  for (int j = 0; j <= j_max; ++j)
    values.push_back(static_cast<std::int64_t>(QuotientPiece(ideal, j).quotient_dim()));
  return values;
}

LaurentPolynomial monomial_hilbert_numerator(const HomogeneousIdeal& ideal) {
  require_monomial(ideal);
  const auto& gens = ideal.generators();
  if (gens.size() > kMaxInclusionExclusionGenerators)
    fail(Errc::TooManyGenerators, std::to_string(gens.size()) + " generators exceed the limit of " +
                                      std::to_string(kMaxInclusionExclusionGenerators));
  LaurentPolynomial numerator;
  const std::size_t n = static_cast<std::size_t>(ideal.variables());
  for (unsigned long subset = 0; subset < (1ul << gens.size()); ++subset) {
    Monomial l{std::vector<int>(n, 0)};
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (subset & (1ul << g)) l = lcm(l, generator_monomial(gens[g]));
    numerator.add_term(l.degree(), std::popcount(subset) % 2 ? Rational(-1) : Rational(1));
  }
  return numerator;
}

int certified_degree_bound(const HomogeneousIdeal& ideal) {
  require_monomial(ideal);
  Monomial l{std::vector<int>(static_cast<std::size_t>(ideal.variables()), 0)};
  for (const auto& g : ideal.generators()) l = lcm(l, generator_monomial(g));
  return l.degree();
}

BettiTable koszul_betti(const HomogeneousIdeal& ideal, int j_max, KoszulOptions options) {
  const int n = ideal.variables();
  if (j_max < ideal.max_generator_degree())
    fail(Errc::DegreeBoundTooSmall, "degree bound " + std::to_string(j_max) +
                                        " is below the generator degree " +
                                        std::to_string(ideal.max_generator_degree()));
  const auto pieces = quotient_pieces(ideal, j_max);
  const auto subsets = subsets_by_size(n);

  std::vector<std::vector<std::int64_t>> by_degree(static_cast<std::size_t>(j_max) + 1);
  if (options.parallel) {
    std::vector<std::future<std::vector<std::int64_t>>> jobs;
    for (int j = 0; j <= j_max; ++j)
      jobs.push_back(std::async(std::launch::async, [&, j] { return betti_in_degree(pieces, subsets, n, j); }));
    for (std::size_t j = 0; j < jobs.size(); ++j) by_degree[j] = jobs[j].get();
  } else {
    for (int j = 0; j <= j_max; ++j)
      by_degree[static_cast<std::size_t>(j)] = betti_in_degree(pieces, subsets, n, j);
  }

  BettiTable table;
  for (int j = 0; j <= j_max; ++j)
    for (int i = 0; i <= n; ++i)
      if (auto b = by_degree[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; b != 0)
        table.set(i, j, Rational(static_cast<long long>(b)));

  bool certified = ideal.is_monomial() && j_max >= certified_degree_bound(ideal);
  for (int q = 0; !certified && q <= j_max; ++q)
    certified = pieces[static_cast<std::size_t>(q)].quotient_dim() == 0 && q + n - 1 <= j_max;
  if (!certified) {
    for (int i = 0; i <= n; ++i)
      if (!table.at(i, j_max).is_zero())
        fail(Errc::DegreeBoundTooSmall, "beta_{" + std::to_string(i) + "," + std::to_string(j_max) +
                                            "} is nonzero at the degree bound; raise j_max");
  }
  return table;
}

}  // namespace purebetti
