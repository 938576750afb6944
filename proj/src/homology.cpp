#include "fadlab/homology.hpp"

#include <map>
#include <stdexcept>

namespace fadlab {

using boost::multiprecision::abs;

SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m) {
  SmithResult out;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        BigInt q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);  // remainder became the smaller pivot
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        BigInt q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the remaining block for the divisibility chain
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols && clean; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            clean = false;
          }
    }
    out.diagonal.push_back(abs(m[t][t]));
    ++t;
  }
  out.rank = static_cast<int>(out.diagonal.size());
  return out;
}

bool HomologyProfile::is_zero() const {
  for (long r : free_rank)
    if (r != 0) return false;
  for (const auto& tor : torsion)
    if (!tor.empty()) return false;
  return true;
}

bool HomologyProfile::is_sphere(int d) const {
  if (d < 0 || d >= static_cast<int>(free_rank.size())) return false;
  for (std::size_t q = 0; q < free_rank.size(); ++q) {
    long expect = static_cast<int>(q) == d ? 1 : 0;
    if (free_rank[q] != expect) return false;
    if (!torsion[q].empty()) return false;
  }
  return true;
}

long HomologyProfile::reduced_euler() const {
  long sum = 0;
  for (std::size_t q = 0; q < free_rank.size(); ++q)
    sum += (q % 2 == 0 ? free_rank[q] : -free_rank[q]);
  return sum;
}

std::string HomologyProfile::str() const {
  std::string out;
  for (std::size_t q = 0; q < free_rank.size(); ++q) {
    out += "H~" + std::to_string(q) + ": rank " + std::to_string(free_rank[q]);
    if (!torsion[q].empty()) {
      out += ", torsion";
      for (const BigInt& t : torsion[q]) out += " " + t.str();
    }
    out += '\n';
  }
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
  int d = c.dim();
  HomologyProfile profile;
  if (d < 0) return profile;

  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(d) + 1);
  std::vector<std::map<Simplex, std::size_t>> index(static_cast<std::size_t>(d) + 1);
  for (int q = 0; q <= d; ++q) {
    by_dim[static_cast<std::size_t>(q)] = c.faces_of_dim(q);
    std::size_t k = 0;
    for (const Simplex& s : by_dim[static_cast<std::size_t>(q)])
      index[static_cast<std::size_t>(q)][s] = k++;
  }

  // boundary_rank[q] = rank of the boundary map out of degree q, where the
  // degree-0 boundary is the augmentation onto the empty simplex
  std::vector<int> boundary_rank(static_cast<std::size_t>(d) + 2, 0);
  std::vector<std::vector<std::vector<BigInt>>> matrices(static_cast<std::size_t>(d) + 1);

  {
    std::vector<std::vector<BigInt>> aug(
        1, std::vector<BigInt>(by_dim[0].size(), BigInt(1)));
    boundary_rank[0] = by_dim[0].empty() ? 0 : 1;
    matrices[0] = std::move(aug);
  }
  for (int q = 1; q <= d; ++q) {
    const auto& rows = by_dim[static_cast<std::size_t>(q) - 1];
    const auto& cols = by_dim[static_cast<std::size_t>(q)];
    std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Simplex& s = cols[j];
      int sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t v = 0; v < s.size(); ++v)
          if (v != drop) face.push_back(s[v]);
        m[index[static_cast<std::size_t>(q) - 1].at(face)][j] = sign;
        sign = -sign;
      }
    }
    matrices[static_cast<std::size_t>(q)] = std::move(m);
  }

  std::vector<SmithResult> snf(static_cast<std::size_t>(d) + 1);
  for (int q = 0; q <= d; ++q) {
    snf[static_cast<std::size_t>(q)] = smith_normal_form(matrices[static_cast<std::size_t>(q)]);
    boundary_rank[static_cast<std::size_t>(q)] = snf[static_cast<std::size_t>(q)].rank;
  }
  boundary_rank[static_cast<std::size_t>(d) + 1] = 0;

  profile.free_rank.assign(static_cast<std::size_t>(d) + 1, 0);
  profile.torsion.assign(static_cast<std::size_t>(d) + 1, {});
  for (int q = 0; q <= d; ++q) {
    long cycles = static_cast<long>(by_dim[static_cast<std::size_t>(q)].size()) -
                  boundary_rank[static_cast<std::size_t>(q)];
    profile.free_rank[static_cast<std::size_t>(q)] =
        cycles - boundary_rank[static_cast<std::size_t>(q) + 1];
    if (q < d)
      for (const BigInt& entry : snf[static_cast<std::size_t>(q) + 1].diagonal)
        if (entry > 1) profile.torsion[static_cast<std::size_t>(q)].push_back(entry);
  }
  return profile;
}

long euler_characteristic(const SimplicialComplex& c) {
  long sum = 0;
  for (int q = 0; q <= c.dim(); ++q)
    sum += (q % 2 == 0 ? 1 : -1) * static_cast<long>(c.count_of_dim(q));
  return sum;
}

}  // namespace fadlab
