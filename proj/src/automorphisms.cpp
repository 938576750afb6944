#include "fadlab/automorphisms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fadlab {

namespace {

void check_index(int i, int rank, const char* what) {
  if (i < 1 || i > rank)
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(i) +
                                " outside rank " + std::to_string(rank));
}

Word letter_word(int rank, int letter) { return Word(rank, {letter}); }

// basis images of an atomic generator or of its inverse
std::vector<Word> atomic_images(const AtomicName& name, int rank, bool inverted) {
  name.validate(rank);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) images.push_back(letter_word(rank, k));

  using Kind = AtomicName::Kind;
  switch (name.kind) {
    case Kind::Rho:
      // x_i -> x_i x_j, inverse x_i -> x_i x_j^-1
      images[name.i - 1] = Word(rank, {name.i, inverted ? -name.j : name.j});
      break;
    case Kind::Lam:
      // x_i -> x_j x_i, inverse x_i -> x_j^-1 x_i
      images[name.i - 1] = Word(rank, {inverted ? -name.j : name.j, name.i});
      break;
    case Kind::Swap:
      if (name.i != name.j) {
        images[name.i - 1] = letter_word(rank, name.j);
        images[name.j - 1] = letter_word(rank, name.i);
      }
      break;
    case Kind::Flip:
      images[name.i - 1] = letter_word(rank, -name.i);
      break;
    case Kind::Cycle:
      for (int k = 1; k <= rank; ++k) {
        int to = inverted ? (k == 1 ? rank : k - 1) : (k == rank ? 1 : k + 1);
        images[k - 1] = letter_word(rank, to);
      }
      break;
    case Kind::Id:
      break;
  }
  return images;
}

std::string skip_ws(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

}  // namespace

void AtomicName::validate(int rank) const {
  switch (kind) {
    case Kind::Rho:
    case Kind::Lam:
      check_index(i, rank, "atomic");
      check_index(j, rank, "atomic");
      if (i == j) throw std::invalid_argument("Nielsen map needs distinct indices");
      break;
    case Kind::Swap:
      check_index(i, rank, "atomic");
      check_index(j, rank, "atomic");
      break;
    case Kind::Flip:
      check_index(i, rank, "atomic");
      break;
    case Kind::Cycle:
    case Kind::Id:
      break;
  }
}

std::string AtomicName::str() const {
  switch (kind) {
    case Kind::Rho: return "rho(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::Lam: return "lam(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::Swap: return "t(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::Flip: return "e(" + std::to_string(i) + ")";
    case Kind::Cycle: return "cyc";
    case Kind::Id: return "id";
  }
  return "id";
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.factors.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.factors.emplace_back(it->first, -it->second);
  return out;
}

std::string GroupWord::str() const {
  if (factors.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += '*';
    out += factors[k].first.str();
    if (factors[k].second < 0) out += "^-1";
  }
  return out;
}

GroupWord& GroupWord::operator*=(const GroupWord& other) {
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  return *this;
}

GroupWord operator*(GroupWord a, const GroupWord& b) {
  a *= b;
  return a;
}

GroupWord GroupWord::parse(const std::string& text) {
  std::string s = skip_ws(text);
  if (s.empty()) throw std::invalid_argument("empty product text");

  GroupWord out;
  std::size_t pos = 0;
  auto parse_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected index in '" + text + "'");
    return std::stoi(s.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in '" + text + "'");
    ++pos;
  };

  while (pos < s.size()) {
    AtomicName name;
    if (s.compare(pos, 4, "rho(") == 0) {
      pos += 4;
      int i = parse_int();
      expect(',');
      int j = parse_int();
      expect(')');
      name = AtomicName::rho(i, j);
    } else if (s.compare(pos, 4, "lam(") == 0) {
      pos += 4;
      int i = parse_int();
      expect(',');
      int j = parse_int();
      expect(')');
      name = AtomicName::lam(i, j);
    } else if (s.compare(pos, 2, "t(") == 0) {
      pos += 2;
      int i = parse_int();
      expect(',');
      int j = parse_int();
      expect(')');
      name = AtomicName::swap(i, j);
    } else if (s.compare(pos, 2, "e(") == 0) {
      pos += 2;
      int i = parse_int();
      expect(')');
      name = AtomicName::flip(i);
    } else if (s.compare(pos, 3, "cyc") == 0) {
      pos += 3;
      name = AtomicName::cycle();
    } else if (s.compare(pos, 2, "id") == 0) {
      pos += 2;
      name = AtomicName::id();
    } else {
      throw std::invalid_argument("unknown factor at '" + s.substr(pos) + "'");
    }
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (s.compare(pos, 2, "-1") == 0) {
        exp = -1;
        pos += 2;
      } else if (s.compare(pos, 1, "1") == 0) {
        pos += 1;
      } else {
        throw std::invalid_argument("unsupported exponent in '" + text + "'");
      }
    }
    out.factors.emplace_back(name, exp);
    if (pos < s.size()) {
      expect('*');
      if (pos == s.size()) throw std::invalid_argument("trailing '*' in '" + text + "'");
    }
  }
  return out;
}

Automorphism::Automorphism(int rank, std::vector<Word> images, std::optional<GroupWord> fact)
    : rank_(rank), images_(std::move(images)), fact_(std::move(fact)) {}

Automorphism Automorphism::identity(int rank) {
  return atomic(AtomicName::id(), rank);
}

Automorphism Automorphism::atomic(const AtomicName& name, int rank) {
  GroupWord fact;
  fact.factors.emplace_back(name, 1);
  return Automorphism(rank, atomic_images(name, rank, false), std::move(fact));
}

Automorphism Automorphism::eval(const GroupWord& word, int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) images.push_back(letter_word(rank, k));
  for (const auto& [name, exp] : word.factors) {
    std::vector<Word> step = atomic_images(name, rank, exp < 0);
    for (Word& im : images) im = substitute(im, step);
  }
  return Automorphism(rank, std::move(images), word);
}

Automorphism Automorphism::eval(const std::string& text, int rank) {
  return eval(GroupWord::parse(text), rank);
}

bool Automorphism::is_identity() const {
  for (int k = 1; k <= rank_; ++k) {
    const auto& l = images_[static_cast<std::size_t>(k) - 1].letters();
    if (l.size() != 1 || l[0] != k) return false;
  }
  return true;
}

std::string Automorphism::str() const {
  std::string out;
  for (int k = 1; k <= rank_; ++k) {
    if (k > 1) out += ", ";
    out += "x" + std::to_string(k) + "->" + images_[static_cast<std::size_t>(k) - 1].str();
  }
  return out;
}

std::string Automorphism::canonical_key() const {
  std::string key = std::to_string(rank_) + "|";
  for (const Word& im : images_) {
    key += fadlab::canonical_key(im);
    key += ';';
  }
  return key;
}

Automorphism Automorphism::without_factorization() const {
  return Automorphism(rank_, images_, std::nullopt);
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(a.images().size());
  for (const Word& im : a.images()) images.push_back(substitute(im, b.images()));
  std::optional<GroupWord> fact;
  if (a.factorization() && b.factorization())
    fact = *a.factorization() * *b.factorization();
  return Automorphism(a.rank(), std::move(images), std::move(fact));
}

Word apply(const Automorphism& a, const Word& w) {
  if (a.rank() != w.rank())
    throw std::invalid_argument("apply: rank mismatch");
  return substitute(w, a.images());
}

Automorphism inverse(const Automorphism& a) {
  if (!a.factorization())
    throw std::invalid_argument("inverse: automorphism carries no factorization");
  return Automorphism::eval(a.factorization()->inverse(), a.rank());
}

std::optional<int> order(const Automorphism& a, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("order: cutoff must be positive");
  Automorphism acc = a;
  for (int m = 1; m <= cutoff; ++m) {
    if (acc.is_identity()) return m;
    acc = compose(acc, a);
  }
  return std::nullopt;
}

Automorphism commutator(const Automorphism& a, const Automorphism& b) {
  return compose(compose(compose(a, b), inverse(a)), inverse(b));
}

Automorphism conjugate(const Automorphism& a, const Automorphism& g) {
  return compose(compose(inverse(g), a), g);
}

bool commutes(const Automorphism& a, const Automorphism& b) {
  return compose(a, b) == compose(b, a);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out;
  out.n = x.n;
  out.a.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(r, k) == 0) continue;
      for (int c = 0; c < x.n; ++c) out.at(r, c) += x.at(r, k) * y.at(k, c);
    }
  return out;
}

IntMatrix abelianization(const Automorphism& a) {
  IntMatrix m;
  m.n = a.rank();
  m.a.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int r = 1; r <= m.n; ++r)
    for (int c = 1; c <= m.n; ++c) m.at(r - 1, c - 1) = exponent_sum(a.image(r), c);
  return m;
}

BigInt determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination; exact over the integers
  int n = m.n;
  if (n == 0) return 1;
  std::vector<BigInt> a = m.a;
  auto at = [&](int r, int c) -> BigInt& { return a[static_cast<std::size_t>(r) * n + c]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

int determinant_sign(const Automorphism& a) {
  BigInt det = determinant(abelianization(a));
  if (det == 1) return 1;
  if (det == -1) return -1;
  throw std::runtime_error("abelianized determinant is not a unit: " + det.str());
}

std::optional<SignedPerm> as_signed_permutation(const Automorphism& a) {
  int n = a.rank();
  SignedPerm sp;
  sp.target.assign(static_cast<std::size_t>(n), 0);
  sp.sign.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int k = 1; k <= n; ++k) {
    const auto& l = a.image(k).letters();
    if (l.size() != 1) return std::nullopt;
    int idx = std::abs(l[0]);
    if (hit[static_cast<std::size_t>(idx) - 1]) return std::nullopt;
    hit[static_cast<std::size_t>(idx) - 1] = true;
    sp.target[static_cast<std::size_t>(k) - 1] = idx;
    sp.sign[static_cast<std::size_t>(k) - 1] = l[0] > 0 ? 1 : -1;
  }
  return sp;
}

Automorphism signed_perm_to_automorphism(const SignedPerm& sp, int rank) {
  if (static_cast<int>(sp.target.size()) != rank)
    throw std::invalid_argument("signed permutation size mismatch");
  GroupWord fact;
  // decompose: permutation as transpositions, then sign flips
  std::vector<int> perm = sp.target;
  for (int k = 1; k <= rank; ++k) {
    if (perm[static_cast<std::size_t>(k) - 1] == k) continue;
    int src = -1;
    for (int r = k; r <= rank; ++r)
      if (perm[static_cast<std::size_t>(r) - 1] == k) {
        src = r;
        break;
      }
    // t(k, src) applied after the factors already emitted moves k into place
    fact.factors.emplace_back(AtomicName::swap(k, src), 1);
    std::swap(perm[static_cast<std::size_t>(k) - 1], perm[static_cast<std::size_t>(src) - 1]);
  }
  for (int k = 1; k <= rank; ++k)
    if (sp.sign[static_cast<std::size_t>(k) - 1] < 0)
      fact.factors.emplace_back(AtomicName::flip(sp.target[static_cast<std::size_t>(k) - 1]), 1);
  Automorphism result = Automorphism::eval(fact, rank);
  // paranoia: the decomposition must reproduce the table
  for (int k = 1; k <= rank; ++k) {
    const auto& l = result.image(k).letters();
    if (l.size() != 1 || std::abs(l[0]) != sp.target[static_cast<std::size_t>(k) - 1] ||
        (l[0] > 0 ? 1 : -1) != sp.sign[static_cast<std::size_t>(k) - 1])
      throw std::runtime_error("signed permutation decomposition failed");
  }
  return result;
}

Automorphism psi_embed(const Automorphism& f) {
  int n = f.rank() + 1;
  int det = determinant_sign(f);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (const Word& im : f.images()) images.push_back(Word(n, im.letters()));
  images.push_back(Word(n, {det > 0 ? n : -n}));

  std::optional<GroupWord> fact;
  if (f.factorization()) {
    GroupWord g;
    for (const auto& [name, exp] : f.factorization()->factors) {
      if (name.kind == AtomicName::Kind::Cycle) {
        // the rank-(n-1) cycle is not atomic at rank n; expand it into
        // adjacent transpositions x_{m-1},x_m down to x_1,x_2
        GroupWord expansion;
        for (int k = f.rank() - 1; k >= 1; --k)
          expansion.factors.emplace_back(AtomicName::swap(k, k + 1), 1);
        g *= (exp > 0 ? expansion : expansion.inverse());
      } else {
        g.factors.emplace_back(name, exp);
      }
    }
    if (det < 0) g.factors.emplace_back(AtomicName::flip(n), 1);
    fact = std::move(g);
  }
  Automorphism result(n, std::move(images), std::move(fact));
  if (result.factorization() && !(Automorphism::eval(*result.factorization(), n) == result))
    throw std::runtime_error("embedding factorization mismatch");
  return result;
}

}  // namespace fadlab
