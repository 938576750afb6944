#include "fadlab/witness.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fadlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string t(int i, int j) { return "t(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string e(int i) { return "e(" + std::to_string(i) + ")"; }
std::string rho(int i, int j) {
  return "rho(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string lam(int i, int j) {
  return "lam(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

WitnessFactor WitnessFactor::ambient(const std::string& expr, int exp) {
  return {Ambient{GroupWord::parse(expr)}, exp};
}

WitnessFactor WitnessFactor::ref(const std::string& label, int exp) {
  return {Ref{label}, exp};
}

std::string WitnessFactor::str() const {
  std::string out;
  if (const auto* amb = std::get_if<Ambient>(&payload))
    out = "{" + amb->expr.str() + "}";
  else
    out = "@" + std::get<Ref>(payload).label;
  if (exponent < 0) out += "^-1";
  return out;
}

std::string WitnessLine::str() const {
  std::string out = label + " ; " + target.str() + " ; ";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += " * ";
    out += factors[k].str();
  }
  return out;
}

std::string serialize_witness_chain(const std::vector<WitnessLine>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += line.str();
    out += '\n';
  }
  return out;
}

std::vector<WitnessLine> parse_witness_chain(const std::string& text) {
  std::vector<WitnessLine> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;

    auto first = s.find(';');
    auto second = s.find(';', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                  ": expected `label ; target ; factors`");
    WitnessLine line;
    line.label = trim(s.substr(0, first));
    line.target = GroupWord::parse(trim(s.substr(first + 1, second - first - 1)));
    std::string rest = trim(s.substr(second + 1));
    if (line.label.empty()) throw std::invalid_argument("empty witness label");

    std::size_t pos = 0;
    bool expect_factor = true;
    while (pos < rest.size()) {
      if (std::isspace(static_cast<unsigned char>(rest[pos]))) {
        ++pos;
        continue;
      }
      if (!expect_factor) {
        if (rest[pos] != '*')
          throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                      ": expected '*' between factors");
        ++pos;
        expect_factor = true;
        continue;
      }
      WitnessFactor factor;
      if (rest[pos] == '{') {
        auto close = rest.find('}', pos);
        if (close == std::string::npos)
          throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                      ": unterminated '{'");
        factor.payload =
            WitnessFactor::Ambient{GroupWord::parse(rest.substr(pos + 1, close - pos - 1))};
        pos = close + 1;
      } else if (rest[pos] == '@') {
        ++pos;
        std::size_t start = pos;
        while (pos < rest.size() &&
               (std::isalnum(static_cast<unsigned char>(rest[pos])) || rest[pos] == '-' ||
                rest[pos] == '_' || rest[pos] == '.'))
          ++pos;
        if (start == pos)
          throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                      ": empty reference");
        factor.payload = WitnessFactor::Ref{rest.substr(start, pos - start)};
      } else {
        throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                    ": factor must start with '{' or '@'");
      }
      if (rest.compare(pos, 3, "^-1") == 0) {
        factor.exponent = -1;
        pos += 3;
      }
      line.factors.push_back(std::move(factor));
      expect_factor = false;
    }
    if (line.factors.empty() || expect_factor)
      throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                  ": missing factors");
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<WitnessLine> load_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open witness file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_witness_chain(buffer.str());
}

std::vector<WitnessLine> y1_in_y2_chain(int rank) {
  if (rank < 4) throw std::invalid_argument("chain needs rank >= 4");
  int n = rank;
  std::vector<WitnessLine> lines;
  auto add = [&](const std::string& label, const std::string& target,
                 std::vector<WitnessFactor> factors) {
    lines.push_back({label, GroupWord::parse(target), std::move(factors)});
  };
  auto amb = [](const std::string& expr, int exp = 1) {
    return WitnessFactor::ambient(expr, exp);
  };
  auto ref = [](const std::string& label, int exp = 1) {
    return WitnessFactor::ref(label, exp);
  };

  {
    // (x3,xn) as a palindrome over the plain adjacent swaps of Y2
    std::vector<WitnessFactor> factors;
    for (int i = 3; i <= n - 1; ++i) factors.push_back(amb(t(i, i + 1)));
    for (int i = n - 2; i >= 3; --i) factors.push_back(amb(t(i, i + 1)));
    add("x3xn", t(3, n), std::move(factors));
  }
  add("x2xn", t(2, n), {amb(t(2, 3) + "*" + e(1)), ref("x3xn"), amb(t(2, 3) + "*" + e(1))});
  add("e2", e(2), {ref("x2xn"), amb(e(n)), ref("x2xn")});
  add("x2x3", t(2, 3), {ref("x2xn"), ref("x3xn"), ref("x2xn")});
  add("e1", e(1), {ref("x2x3"), amb(t(2, 3) + "*" + e(1))});
  add("x1x2", t(1, 2), {amb(t(1, 2) + "*" + e(1) + "*" + e(2)), ref("e2"), ref("e1")});
  add("rho1-2", rho(1, 2), {ref("e2"), amb(e(2) + "*" + rho(1, 2))});
  {
    std::vector<WitnessFactor> factors;
    for (int i = n - 1; i >= 3; --i) factors.push_back(amb(t(i, i + 1)));
    factors.push_back(ref("x2x3"));
    factors.push_back(ref("x1x2"));
    add("cycle", "cyc", std::move(factors));
  }
  return lines;
}

std::vector<WitnessLine> y3_in_y4_chain(int rank) {
  if (rank < 5) throw std::invalid_argument("chain needs rank >= 5");
  int n = rank;
  std::vector<WitnessLine> lines;
  auto add = [&](const std::string& label, const std::string& target,
                 std::vector<WitnessFactor> factors) {
    lines.push_back({label, GroupWord::parse(target), std::move(factors)});
  };
  auto amb = [](const std::string& expr, int exp = 1) {
    return WitnessFactor::ambient(expr, exp);
  };
  auto ref = [](const std::string& label, int exp = 1) {
    return WitnessFactor::ref(label, exp);
  };
  auto num = [](int i) { return std::to_string(i); };

  const std::string swap_a = t(1, 2) + "*" + e(1) + "*" + e(2) + "*" + e(3);
  const std::string swap_b = t(2, 3) + "*" + e(1);
  auto decorated = [&](int i) { return t(i, i + 1) + "*" + e(i); };

  // flips e_i e_3 and the e3-decorated swaps, climbing the decorated path
  add("e4e3", e(4) + "*" + e(3), {amb(e(3) + "*" + e(4))});
  for (int i = 4; i <= n - 2; ++i)
    add("e" + num(i + 1) + "e3", e(i + 1) + "*" + e(3),
        {amb(decorated(i)), ref("e" + num(i) + "e3"), amb(decorated(i), -1)});
  add("p3", t(3, 4) + "*" + e(3), {amb(t(3, 4) + "*" + e(3))});
  for (int i = 4; i <= n - 1; ++i)
    add("p" + num(i), t(i, i + 1) + "*" + e(3),
        {amb(decorated(i)), ref("e" + num(i) + "e3")});

  // paired flips
  add("e2e4", e(2) + "*" + e(4), {amb(swap_b), amb(e(3) + "*" + e(4)), amb(swap_b, -1)});
  add("e1e4", e(1) + "*" + e(4), {amb(swap_a), ref("e2e4"), amb(swap_a, -1)});
  add("e1e3", e(1) + "*" + e(3), {ref("p3"), ref("e1e4"), ref("p3", -1)});
  add("ee1-2", e(1) + "*" + e(2), {amb(swap_b), ref("e1e3"), amb(swap_b, -1)});
  add("rho1-2", rho(1, 2), {ref("e2e4"), amb(e(2) + "*" + e(4) + "*" + rho(1, 2))});
  add("e2e3", e(2) + "*" + e(3), {ref("e2e4"), amb(e(3) + "*" + e(4))});

  // products of consecutive plain swaps
  add("q1", t(2, 3) + "*" + t(1, 2), {amb(swap_b), ref("e2e3"), amb(swap_a, -1)});
  add("q2", t(3, 4) + "*" + t(2, 3), {ref("p3"), ref("e1e3"), amb(swap_b, -1)});
  for (int i = 3; i <= n - 2; ++i)
    add("q" + num(i), t(i + 1, i + 2) + "*" + t(i, i + 1),
        {ref("p" + num(i + 1)), ref("p" + num(i), -1)});

  add("swap12e3", t(1, 2) + "*" + e(3), {amb(swap_a), ref("ee1-2")});
  add("swap23e3", t(2, 3) + "*" + e(3), {amb(swap_b), ref("e1e3")});

  {
    // the long palindrome reaching (x1,xn); the e3 factors alternate sides
    // so that consecutive ones cancel, with parity depending on the rank
    bool odd = n % 2 == 1;
    auto chain_factor = [&](int i) -> WitnessFactor {
      bool flip_first = odd ? (i % 2 == 1) : (i % 2 == 0);
      if (i == 1) return ref("swap12e3");
      if (i == 2) return ref("swap23e3", flip_first ? -1 : 1);
      if (i == 3) return ref("p3", flip_first ? -1 : 1);
      return ref("p" + num(i));
    };
    std::vector<WitnessFactor> factors;
    for (int i = 1; i <= n - 2; ++i) factors.push_back(chain_factor(i));
    factors.push_back(ref("p" + num(n - 1)));
    for (int i = n - 2; i >= 1; --i) factors.push_back(chain_factor(i));
    add("x1xne3", odd ? e(3) + "*" + t(1, n) : t(1, n) + "*" + e(3), std::move(factors));
  }
  add("w", t(1, n) + "*" + t(n - 1, n), {ref("x1xne3"), ref("p" + num(n - 1))});

  // ladders up the basis, then the wrap-around pair; each step conjugates
  // by the swap product q_i (respectively w) in the g^-1 a g arrangement
  for (int i = 1; i <= n - 2; ++i)
    add("rho" + num(i + 1) + "-" + num(i + 2), rho(i + 1, i + 2),
        {ref("q" + num(i), -1), ref("rho" + num(i) + "-" + num(i + 1)), ref("q" + num(i))});
  for (int i = 1; i <= n - 2; ++i)
    add("ee" + num(i + 1) + "-" + num(i + 2), e(i + 1) + "*" + e(i + 2),
        {ref("q" + num(i), -1), ref("ee" + num(i) + "-" + num(i + 1)), ref("q" + num(i))});
  add("rho" + num(n) + "-1", rho(n, 1),
      {ref("w", -1), ref("rho" + num(n - 1) + "-" + num(n)), ref("w")});
  add("ee" + num(n) + "-1", e(n) + "*" + e(1),
      {ref("w", -1), ref("ee" + num(n - 1) + "-" + num(n)), ref("w")});

  for (int i = 1; i <= n - 1; ++i)
    add("lam" + num(i) + "-" + num(i + 1), lam(i, i + 1),
        {ref("ee" + num(i) + "-" + num(i + 1)), ref("rho" + num(i) + "-" + num(i + 1)),
         ref("ee" + num(i) + "-" + num(i + 1))});
  add("lam" + num(n) + "-1", lam(n, 1),
      {ref("ee" + num(n) + "-1"), ref("rho" + num(n) + "-1"), ref("ee" + num(n) + "-1")});
  return lines;
}

GenerationReport certify_generation(const GenSet& target, const GenSet& ambient,
                                    const std::vector<WitnessLine>& lines) {
  GenerationReport report;
  report.ok = true;
  int rank = ambient.rank;
  std::map<std::string, Automorphism> certified;

  for (const WitnessLine& line : lines) {
    GenerationItem item;
    item.label = line.label;
    try {
      if (certified.count(line.label))
        throw std::runtime_error("duplicate label " + line.label);
      Automorphism product = Automorphism::identity(rank);
      for (const WitnessFactor& factor : line.factors) {
        Automorphism value = Automorphism::identity(rank);
        if (const auto* amb = std::get_if<WitnessFactor::Ambient>(&factor.payload)) {
          Automorphism candidate = Automorphism::eval(amb->expr, rank);
          bool found = false;
          for (const auto& el : ambient.elements)
            if (el.aut == candidate) {
              found = true;
              break;
            }
          if (!found)
            throw std::runtime_error("factor {" + amb->expr.str() + "} is not an element of " +
                                     genset_name_str(ambient.name));
          value = candidate;
        } else {
          const auto& ref = std::get<WitnessFactor::Ref>(factor.payload);
          auto it = certified.find(ref.label);
          if (it == certified.end())
            throw std::runtime_error("reference @" + ref.label + " not certified yet");
          value = it->second;
        }
        if (factor.exponent < 0) value = inverse(value);
        product = compose(product, value);
      }
      Automorphism expected = Automorphism::eval(line.target, rank);
      if (!(product == expected))
        throw std::runtime_error("product does not evaluate to " + line.target.str());
      certified.emplace(line.label, expected);
      item.ok = true;
      item.detail = line.target.str() + " over " + std::to_string(line.factors.size()) +
                    " factors";
    } catch (const std::exception& ex) {
      item.ok = false;
      item.detail = ex.what();
      report.ok = false;
    }
    report.items.push_back(std::move(item));
  }

  for (const auto& el : target.elements) {
    GenerationCoverage cover{el.name, ""};
    for (const auto& [label, aut] : certified)
      if (aut == el.aut) {
        cover.certified_by = label;
        break;
      }
    if (cover.certified_by.empty()) report.ok = false;
    report.coverage.push_back(std::move(cover));
  }
  return report;
}

}  // namespace fadlab
