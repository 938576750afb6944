#pragma once

/*
 * Membership witness chains: data that certifies one generating set lies
 * inside the group generated by another.
 *
 * A chain is an ordered list of lines `LABEL ; TARGET ; FACTORS`.  TARGET
 * is a product of atomic names.  FACTORS multiply out, left to right, to
 * the target; each factor is either an ambient-set element written in
 * braces, e.g. {t(2,3)*e(1)}, or a back reference @label to an earlier
 * line, optionally followed by ^-1.  Chains are shipped as fixture files
 * and can be regenerated for any valid rank.
 */

#include <string>
#include <variant>
#include <vector>

#include "fadlab/gensets.hpp"

namespace fadlab {

struct WitnessFactor {
  struct Ambient { GroupWord expr; };
  struct Ref { std::string label; };
  std::variant<Ambient, Ref> payload;
  int exponent = 1;  // +1 or -1

  static WitnessFactor ambient(const std::string& expr, int exp = 1);
  static WitnessFactor ref(const std::string& label, int exp = 1);
  std::string str() const;
};

struct WitnessLine {
  std::string label;
  GroupWord target;
  std::vector<WitnessFactor> factors;

  std::string str() const;
};

std::string serialize_witness_chain(const std::vector<WitnessLine>& lines);
std::vector<WitnessLine> parse_witness_chain(const std::string& text);
std::vector<WitnessLine> load_witness_file(const std::string& path);

// the chain certifying Y1 inside <Y2>, mirrored line by line from the
// conjugation argument; valid for rank >= 4
std::vector<WitnessLine> y1_in_y2_chain(int rank);

// the chain certifying Y3 inside <Y4> (through the e3-decorated swaps of
// Yprime); valid for rank >= 5
std::vector<WitnessLine> y3_in_y4_chain(int rank);

struct GenerationItem {
  std::string label;
  bool ok = false;
  std::string detail;
};

struct GenerationCoverage {
  std::string element_name;
  std::string certified_by;  // empty when uncovered
};

struct GenerationReport {
  std::vector<GenerationItem> items;
  std::vector<GenerationCoverage> coverage;
  bool ok = false;
};

// evaluates every witness over the ambient set and checks that each target
// element of `target` is reached by some certified line
GenerationReport certify_generation(const GenSet& target, const GenSet& ambient,
                                    const std::vector<WitnessLine>& lines);

}  // namespace fadlab
