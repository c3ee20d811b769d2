#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fences/element_set.hpp"
#include "fences/poset.hpp"

namespace fences {

using Rational = boost::multiprecision::cpp_rational;

/// Rowmotion generator: the maximal elements of I generate a filter U and
/// the image is the complement of U in the ground set. Throws not_an_ideal.
ElementSet rho(const Poset& poset, ElementSet ideal);

struct Orbit {
  /// Starts at the canonical representative (smallest in indicator order)
  /// and follows rho.
  std::vector<ElementSet> ideals;
  long long statistic_total = 0;  // sum of #I over the orbit

  std::size_t length() const { return ideals.size(); }
};

/// All rowmotion orbits, ordered by representative.
std::vector<Orbit> orbits(const Poset& poset, std::size_t cap = 1u << 20);

/// Image of rho over all ideals equals the set of all ideals.
bool rho_is_bijection(const Poset& poset, std::size_t cap = 1u << 20);

using Statistic = std::function<long long(ElementSet)>;

struct OrbitAverage {
  std::size_t length;
  long long total;
  Rational average;
};

struct MesicReport {
  Rational c;
  std::vector<OrbitAverage> orbits;
  bool ok;
};

/// Average of `statistic` over every orbit compared exactly with c.
MesicReport check_mesic(const Poset& poset, const Statistic& statistic, const Rational& c);
/// Ideal size statistic with c = n/2.
MesicReport check_size_mesic(const Poset& poset);

std::string to_json(const MesicReport& report);

}  // namespace fences
