#include "fences/rowmotion.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "fences/chains.hpp"
#include "fences/error.hpp"

namespace fences {

ElementSet rho(const Poset& poset, ElementSet ideal) {
  if (!is_ideal(poset, ideal)) {
    throw FenceError(ErrorCode::not_an_ideal, ideal.to_string() + " is not an ideal");
  }
  const ElementSet filter = up_closure(poset, maximal_elements(poset, ideal));
  return poset.ground_set() - filter;
}

namespace {

std::vector<ElementSet> all_ideals(const Poset& poset, std::size_t cap) {
  const IdealLattice lattice(poset, cap);
  std::vector<ElementSet> ideals;
  ideals.reserve(lattice.size());
  for (std::size_t id = 0; id < lattice.size(); ++id) ideals.push_back(lattice.ideal(id));
  std::sort(ideals.begin(), ideals.end(), indicator_less);
  return ideals;
}

}  // namespace

std::vector<Orbit> orbits(const Poset& poset, std::size_t cap) {
  std::vector<Orbit> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  // In indicator order the first unseen ideal is the smallest of its orbit.
  for (const ElementSet start : all_ideals(poset, cap)) {
    if (seen.contains(start)) continue;
    Orbit orbit;
    ElementSet current = start;
    do {
      if (!seen.insert(current).second) {
        throw FenceError(ErrorCode::step_invariant,
                         "rowmotion revisits " + current.to_string() + " before closing the orbit of " +
                             start.to_string());
      }
      orbit.ideals.push_back(current);
      orbit.statistic_total += current.size();
      current = rho(poset, current);
    } while (current != start);
    out.push_back(std::move(orbit));
  }
  return out;
}

bool rho_is_bijection(const Poset& poset, std::size_t cap) {
  const std::vector<ElementSet> ideals = all_ideals(poset, cap);
  std::vector<ElementSet> images;
  images.reserve(ideals.size());
  for (const ElementSet ideal : ideals) images.push_back(rho(poset, ideal));
  std::sort(images.begin(), images.end(), indicator_less);
  return images == ideals;
}

MesicReport check_mesic(const Poset& poset, const Statistic& statistic, const Rational& c) {
  MesicReport report{c, {}, true};
  for (const Orbit& orbit : orbits(poset)) {
    long long total = 0;
    for (const ElementSet ideal : orbit.ideals) total += statistic(ideal);
    const Rational average(Rational(total) / static_cast<long long>(orbit.length()));
    report.ok = report.ok && average == c;
    report.orbits.push_back({orbit.length(), total, average});
  }
  return report;
}

MesicReport check_size_mesic(const Poset& poset) {
  return check_mesic(
      poset, [](ElementSet s) { return static_cast<long long>(s.size()); },
      Rational(poset.size()) / 2);
}

std::string to_json(const MesicReport& report) {
  nlohmann::ordered_json doc;
  doc["c"] = report.c.str();
  doc["ok"] = report.ok;
  auto list = nlohmann::ordered_json::array();
  for (const OrbitAverage& o : report.orbits) {
    list.push_back({{"length", o.length}, {"total", o.total}, {"average", o.average.str()}});
  }
  doc["orbits"] = std::move(list);
  return doc.dump();
}

}  // namespace fences
