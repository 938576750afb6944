#pragma once

/*
 * Freely reduced words in a free group of finite rank.
 *
 * A letter is a nonzero integer: +i stands for the basis element x_i,
 * -i for its inverse.  Words are kept freely reduced at all times, so
 * equality of group elements is plain structural equality.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fadlab {

class Word {
public:
  // identity word
  explicit Word(int rank);

  // reduces the raw letter sequence; throws std::invalid_argument on
  // letters outside 1..rank
  Word(int rank, std::vector<int> raw_letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  bool operator==(const Word& other) const = default;

  // text form `x1*x2^-1*x3`; the identity prints as `1`
  std::string str() const;
  static Word parse(int rank, const std::string& text);

private:
  int rank_;
  std::vector<int> letters_;
};

// reduced product ab (ranks must agree)
Word concat(const Word& a, const Word& b);

Word invert(const Word& w);

// replaces letter +i by images[i-1] and -i by its inverse; the result
// lives in the common rank of the images, which may differ from w's rank
Word substitute(const Word& w, std::span<const Word> images);

// exponent sum of x_index in w
long long exponent_sum(const Word& w, int index);

std::string canonical_key(const Word& w);

}  // namespace fadlab
