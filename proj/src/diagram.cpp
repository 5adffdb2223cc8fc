#include "purebetti/diagram.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "purebetti/error.hpp"

namespace purebetti {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) fail(Errc::EmptyDegreeSequence, "degree sequence must be non-empty");
  for (std::size_t i = 0; i + 1 < degrees_.size(); ++i) {
    if (degrees_[i] >= degrees_[i + 1])
      fail(Errc::NotStrictlyIncreasing,
           "d_" + std::to_string(i) + " = " + std::to_string(degrees_[i]) + " >= d_" +
               std::to_string(i + 1) + " = " + std::to_string(degrees_[i + 1]));
  }
}

DegreeSequence DegreeSequence::truncated() const {
  std::vector<int> shorter(degrees_.begin(), degrees_.end() - 1);
  return DegreeSequence(std::move(shorter));
}

DegreeSequence make_degree_sequence(std::vector<int> values) {
  return DegreeSequence(std::move(values));
}

BettiTable::BettiTable(std::initializer_list<std::pair<const Key, Rational>> entries) {
  for (const auto& [key, value] : entries) set(key.first, key.second, value);
}

Rational BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational() : it->second;
}

void BettiTable::set(int i, int j, const Rational& value) {
  if (i < 0) fail(Errc::NonPositiveEntry, "negative homological degree " + std::to_string(i));
  if (value.sign() < 0)
    fail(Errc::NonPositiveEntry, "negative entry " + value.to_string() + " at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
  if (value.is_zero())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

void BettiTable::add(int i, int j, const Rational& delta) { set(i, j, at(i, j) + delta); }

int BettiTable::pdim() const noexcept {
  // keys are ordered by i first
  return entries_.empty() ? -1 : entries_.rbegin()->first.first;
}

std::vector<int> BettiTable::column_degrees(int i) const {
  std::vector<int> out;
  for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
       it != entries_.end() && it->first.first == i; ++it)
    out.push_back(it->first.second);
  return out;
}

Rational BettiTable::column_total(int i) const {
  Rational sum;
  for (int j : column_degrees(i)) sum += at(i, j);
  return sum;
}

BettiTable operator+(const BettiTable& a, const BettiTable& b) {
  BettiTable out = a;
  for (const auto& [key, value] : b.entries()) out.add(key.first, key.second, value);
  return out;
}

namespace {

// prod_{k != i, anchor} |d_k - d_anchor| / |d_k - d_i|
Rational anchored_product(const DegreeSequence& d, std::size_t i, std::size_t anchor) {
  Rational value(1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == i || k == anchor) continue;
    value *= Rational(std::abs(d[k] - d[anchor]));
    value /= Rational(std::abs(d[k] - d[i]));
  }
  return value;
}

PureDiagram anchored_diagram(const DegreeSequence& d, std::size_t anchor) {
  BettiTable table;
  for (std::size_t i = 0; i < d.size(); ++i)
    table.set(static_cast<int>(i), d[i], i == anchor ? Rational(1) : anchored_product(d, i, anchor));
  return {d, std::move(table)};
}

}  // namespace

PureDiagram pi(const DegreeSequence& d) { return anchored_diagram(d, 0); }

PureDiagram pi_prime(const DegreeSequence& d) { return anchored_diagram(d, d.size() - 1); }

BettiTable scale(const BettiTable& t, const Rational& c) {
  if (c.sign() <= 0) fail(Errc::NonPositiveScalar, "scale factor " + c.to_string() + " is not positive");
  BettiTable out;
  for (const auto& [key, value] : t.entries()) out.set(key.first, key.second, value * c);
  return out;
}

std::optional<DegreeSequence> is_pure(const BettiTable& t) {
  if (t.empty()) return std::nullopt;
  std::vector<int> degrees;
  for (int i = 0; i <= t.pdim(); ++i) {
    auto column = t.column_degrees(i);
    if (column.size() != 1) return std::nullopt;
    if (!degrees.empty() && column.front() <= degrees.back()) return std::nullopt;
    degrees.push_back(column.front());
  }
  return DegreeSequence(std::move(degrees));
}

}  // namespace purebetti
