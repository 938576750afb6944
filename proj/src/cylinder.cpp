#include "fadlab/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

namespace fadlab {

void CylinderModel::validate() const {
  if (families.empty()) throw std::invalid_argument("cylinder model needs >= 1 family");
  for (std::size_t f = 0; f < families.size(); ++f) {
    const CylinderFamily& family = families[f];
    if (family.coordinate_size < 1)
      throw std::invalid_argument("family " + std::to_string(f) + " has empty coordinate");
    if (family.members.empty())
      throw std::invalid_argument("family " + std::to_string(f) + " has no members");
    for (const auto& member : family.members) {
      if (member.empty())
        throw std::invalid_argument("family " + std::to_string(f) + " has an empty member");
      for (int v : member)
        if (v < 0 || v >= family.coordinate_size)
          throw std::invalid_argument("family " + std::to_string(f) +
                                      " member value out of range");
    }
  }
}

namespace {

bool members_intersect(const CylinderFamily& family, std::span<const int> chosen) {
  std::vector<int> common = family.members.at(static_cast<std::size_t>(chosen[0]));
  for (std::size_t k = 1; k < chosen.size() && !common.empty(); ++k) {
    const auto& next = family.members.at(static_cast<std::size_t>(chosen[k]));
    std::vector<int> narrowed;
    std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                          std::back_inserter(narrowed));
    common = std::move(narrowed);
  }
  return !common.empty();
}

}  // namespace

SimplicialComplex cylinder_nerve_of_family(const CylinderModel& model, int family) {
  model.validate();
  const CylinderFamily& fam = model.families.at(static_cast<std::size_t>(family));
  return nerve(static_cast<int>(fam.members.size()), family + 1,
               [&](std::span<const int> chosen) { return members_intersect(fam, chosen); });
}

SimplicialComplex cylinder_nerve_of_union(const CylinderModel& model) {
  model.validate();
  // flatten members to (family, member) pairs in tag order
  std::vector<std::pair<int, int>> flat;
  for (std::size_t f = 0; f < model.families.size(); ++f)
    for (std::size_t m = 0; m < model.families[f].members.size(); ++m)
      flat.emplace_back(static_cast<int>(f), static_cast<int>(m));

  auto intersects = [&](std::span<const int> chosen) {
    // cylinder sets intersect iff they intersect within every coordinate
    for (std::size_t f = 0; f < model.families.size(); ++f) {
      std::vector<int> in_family;
      for (int c : chosen)
        if (flat[static_cast<std::size_t>(c)].first == static_cast<int>(f))
          in_family.push_back(flat[static_cast<std::size_t>(c)].second);
      if (in_family.empty()) continue;
      if (!members_intersect(model.families[f], in_family)) return false;
    }
    return true;
  };

  // nerve() tags every vertex alike, so build here with per-family tags
  SimplicialComplex c;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < static_cast<int>(flat.size()); ++i) {
    frontier.push_back({i});
    c.insert_closure({make_vertex(flat[static_cast<std::size_t>(i)].first + 1,
                                  flat[static_cast<std::size_t>(i)].second)});
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& chosen : frontier)
      for (int j = chosen.back() + 1; j < static_cast<int>(flat.size()); ++j) {
        std::vector<int> extended = chosen;
        extended.push_back(j);
        if (!intersects(extended)) continue;
        Simplex s;
        for (int m : extended)
          s.push_back(make_vertex(flat[static_cast<std::size_t>(m)].first + 1,
                                  flat[static_cast<std::size_t>(m)].second));
        c.insert_closure(s);
        next.push_back(std::move(extended));
      }
    frontier = std::move(next);
  }
  return c;
}

bool verify_join_nerve(const CylinderModel& model) {
  model.validate();
  std::vector<SimplicialComplex> nerves;
  for (std::size_t f = 0; f < model.families.size(); ++f)
    nerves.push_back(cylinder_nerve_of_family(model, static_cast<int>(f)));
  return cylinder_nerve_of_union(model) == join(nerves);
}

CylinderModel random_cylinder_model(std::mt19937_64& rng, int family_count) {
  if (family_count < 1) throw std::invalid_argument("need >= 1 family");
  std::uniform_int_distribution<int> size_dist(2, 6);
  std::uniform_int_distribution<int> member_count_dist(2, 4);
  CylinderModel model;
  for (int f = 0; f < family_count; ++f) {
    CylinderFamily family;
    family.coordinate_size = size_dist(rng);
    int members = member_count_dist(rng);
    std::uniform_int_distribution<int> value_dist(0, family.coordinate_size - 1);
    for (int m = 0; m < members; ++m) {
      std::vector<bool> in(static_cast<std::size_t>(family.coordinate_size), false);
      int picks = std::uniform_int_distribution<int>(1, family.coordinate_size)(rng);
      for (int k = 0; k < picks; ++k) in[static_cast<std::size_t>(value_dist(rng))] = true;
      std::vector<int> member;
      for (int v = 0; v < family.coordinate_size; ++v)
        if (in[static_cast<std::size_t>(v)]) member.push_back(v);
      if (member.empty()) member.push_back(value_dist(rng));
      family.members.push_back(std::move(member));
    }
    model.families.push_back(std::move(family));
  }
  return model;
}

}  // namespace fadlab
