#ifndef PUREBETTI_FORMAT_HPP
#define PUREBETTI_FORMAT_HPP

#include <string>

#include "purebetti/diagram.hpp"

namespace purebetti {

/*
 * Macaulay-style text diagram: columns are homological degrees i, rows are
 * j - i, zeros print as '-'. For pi(0,2,3):
 *
 *            0 1 2
 *     total: 1 3 2
 *         0: 1 - -
 *         1: - 3 2
 */
std::string render_betti_diagram(const BettiTable& t);

}  // namespace purebetti

#endif
