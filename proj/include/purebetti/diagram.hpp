#ifndef PUREBETTI_DIAGRAM_HPP
#define PUREBETTI_DIAGRAM_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "purebetti/rational.hpp"

namespace purebetti {

/// Strictly increasing integer tuple (d_0 < d_1 < ... < d_p), p >= 0.
class DegreeSequence {
 public:
  /// Throws EmptyDegreeSequence or NotStrictlyIncreasing.
  explicit DegreeSequence(std::vector<int> degrees);
  DegreeSequence(std::initializer_list<int> degrees)
      : DegreeSequence(std::vector<int>(degrees)) {}

  /// Length in the homological sense: number of entries minus one.
  int p() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_.at(i); }
  int front() const noexcept { return degrees_.front(); }
  int back() const noexcept { return degrees_.back(); }
  std::span<const int> degrees() const noexcept { return degrees_; }

  /// Drops the last degree. Requires p() >= 1.
  DegreeSequence truncated() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

DegreeSequence make_degree_sequence(std::vector<int> values);

/*
 * Graded Betti table: a finite map (i, j) -> positive rational, where i is
 * the homological degree and j the absolute internal degree, i.e. the entry
 * beta_{i,j}. Zero entries are never stored, so two tables are equal exactly
 * when supports and values agree. The Macaulay-style display (row j - i) is
 * a presentation concern handled in format.hpp.
 */
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)
  using Map = std::map<Key, Rational>;

  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const Key, Rational>> entries);

  /// Value at (i, j); zero when absent.
  Rational at(int i, int j) const;

  /// Sets (i, j). A zero value erases the entry; negative values or i < 0
  /// throw NonPositiveEntry.
  void set(int i, int j, const Rational& value);

  /// Adds delta to (i, j). Throws NonPositiveEntry if the result is negative.
  void add(int i, int j, const Rational& delta);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const Map& entries() const noexcept { return entries_; }

  /// Largest i with a nonzero entry; -1 for the empty table.
  int pdim() const noexcept;
  /// Sorted internal degrees present in column i.
  std::vector<int> column_degrees(int i) const;
  /// Sum of column i.
  Rational column_total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Map entries_;
};

/// Pointwise sum of two tables.
BettiTable operator+(const BettiTable& a, const BettiTable& b);

/// A pure diagram: one entry per column i = 0..p, located at (i, d_i).
struct PureDiagram {
  DegreeSequence type;
  BettiTable table;
};

/// Normalised at beta_{0,d_0} = 1.
PureDiagram pi(const DegreeSequence& d);
/// Normalised at beta_{p,d_p} = 1.
PureDiagram pi_prime(const DegreeSequence& d);

/// Entrywise product; throws NonPositiveScalar unless c > 0.
BettiTable scale(const BettiTable& t, const Rational& c);

/// Type of t when every column 0..pdim holds exactly one entry at strictly
/// increasing degrees; nullopt otherwise (including the empty table).
std::optional<DegreeSequence> is_pure(const BettiTable& t);

}  // namespace purebetti

#endif
