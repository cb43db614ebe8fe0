#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwkit {

// Error taxonomy shared across the library. The CLI maps these onto its
// exit-code contract (parse -> 2, bound -> 3, everything else -> 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, documents). Carries a 1-based line
// number when one is known; line 0 means "no specific line".
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An operation was invoked outside its contract (non-median input,
// non-convex set, improper coloring, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource bound was exceeded (oracle size limits, doubling
// budgets, clique-enumeration budgets).
class BoundError : public Error {
 public:
  using Error::Error;
};

// An internal consistency assertion failed. Seeing this means a bug: a
// constructive procedure produced output violating a property it is
// supposed to guarantee.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// Fixed-size bitset over a runtime number of bits. Keeps the hot set
// operations (intersection tests, subset tests, popcounts) branch-light.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < bits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  static Bitset from_vector(int bits, const std::vector<int>& elems) {
    Bitset b(bits);
    for (int e : elems) b.set(e);
    return b;
  }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Deterministic pseudo-random source. Selection goes through modulo
// reduction on the raw engine output instead of std::uniform_int_distribution,
// whose algorithm is implementation-defined; this keeps seeded runs
// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(unsigned seed) : eng_(seed) {}

  // uniform-ish value in [0, n)
  int below(int n) { return static_cast<int>(eng_() % static_cast<unsigned>(n)); }

  std::uint32_t raw() { return eng_(); }

 private:
  std::mt19937 eng_;
};

inline bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline std::vector<int> sorted_union(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a,
                                            const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_difference(const std::vector<int>& a,
                                          const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool sorted_subset(const std::vector<int>& a,
                          const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string join_names(const std::vector<std::string>& names,
                              const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

}  // namespace detail
}  // namespace mwkit
