#include "fadlab/words.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace fadlab {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be at least 1");
}

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<int> raw_letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(raw_letters.size());
  for (int letter : raw_letters) {
    int idx = std::abs(letter);
    if (idx < 1 || idx > rank_)
      throw std::invalid_argument("letter index " + std::to_string(idx) +
                                  " outside rank " + std::to_string(rank_));
    push_reduced(letters_, letter);
  }
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += '*';
    out += 'x';
    out += std::to_string(std::abs(letters_[k]));
    if (letters_[k] < 0) out += "^-1";
  }
  return out;
}

Word Word::parse(int rank, const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty word text");
  if (s == "1") return Word(rank);

  std::vector<int> raw;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'x')
      throw std::invalid_argument("expected generator at '" + s.substr(pos) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("missing generator index in '" + text + "'");
    int idx = std::stoi(s.substr(start, pos - start));
    int sign = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (s.compare(pos, 2, "-1") == 0) {
        sign = -1;
        pos += 2;
      } else if (s.compare(pos, 2, "+1") == 0) {
        pos += 2;
      } else if (s.compare(pos, 1, "1") == 0) {
        pos += 1;
      } else {
        throw std::invalid_argument("unsupported exponent in '" + text + "'");
      }
    }
    raw.push_back(sign * idx);
    if (pos < s.size()) {
      if (s[pos] != '*') throw std::invalid_argument("expected '*' in '" + text + "'");
      ++pos;
      if (pos == s.size()) throw std::invalid_argument("trailing '*' in '" + text + "'");
    }
  }
  return Word(rank, std::move(raw));
}

Word concat(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("concat: rank mismatch " + std::to_string(a.rank()) +
                                " vs " + std::to_string(b.rank()));
  std::vector<int> out = a.letters();
  for (int letter : b.letters()) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return Word(a.rank(), std::move(out));
}

Word invert(const Word& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return Word(w.rank(), std::move(out));
}

Word substitute(const Word& w, std::span<const Word> images) {
  if (static_cast<int>(images.size()) != w.rank())
    throw std::invalid_argument("substitute: expected " + std::to_string(w.rank()) +
                                " images, got " + std::to_string(images.size()));
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  int target_rank = images[0].rank();
  for (const Word& im : images)
    if (im.rank() != target_rank)
      throw std::invalid_argument("substitute: images of mixed rank");

  std::vector<int> out;
  for (int letter : w.letters()) {
    const Word& image = images[static_cast<std::size_t>(std::abs(letter)) - 1];
    if (letter > 0) {
      for (int m : image.letters()) {
        if (!out.empty() && out.back() == -m)
          out.pop_back();
        else
          out.push_back(m);
      }
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
        if (!out.empty() && out.back() == *it)
          out.pop_back();
        else
          out.push_back(-*it);
      }
    }
  }
  return Word(target_rank, std::move(out));
}

long long exponent_sum(const Word& w, int index) {
  long long total = 0;
  for (int letter : w.letters()) {
    if (letter == index) ++total;
    if (letter == -index) --total;
  }
  return total;
}

std::string canonical_key(const Word& w) {
  std::string key;
  key.reserve(w.length() * 3);
  for (int letter : w.letters()) {
    key += std::to_string(letter);
    key += ',';
  }
  return key;
}

}  // namespace fadlab
