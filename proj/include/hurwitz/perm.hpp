#pragma once

// Permutations of {1..n} as explicit image tables, plus the cycle-notation
// parser/formatter and the handful of algebraic primitives everything else
// is built from.
//
// Conventions, used consistently across the whole library:
//   * points are 1-based;
//   * composition is left-to-right: compose(a, b) applies a first, then b;
//   * conjugate(p, by) = by^-1 * p * by under that convention, i.e. the
//     relabeling of p along by.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

class PermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Perm {
 public:
  static constexpr int kMaxDegree = 255;  // images are stored as uint8_t

  Perm() = default;  // degree 0 (useful only as a placeholder)

  // Identity on {1..degree}.
  explicit Perm(int degree) : img_(check_degree(degree)) {
    for (int i = 0; i < degree; ++i) img_[i] = static_cast<uint8_t>(i + 1);
  }

  // images[i] is the image of point i+1; must be a bijection of {1..n}.
  static Perm from_images(std::vector<uint8_t> images) {
    const int n = static_cast<int>(images.size());
    check_degree(n);
    std::vector<bool> seen(n, false);
    for (uint8_t v : images) {
      if (v < 1 || v > n || seen[v - 1])
        throw PermError("image table is not a bijection of {1..n}");
      seen[v - 1] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  int apply(int point) const { return img_[point - 1]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  const std::vector<uint8_t>& images() const { return img_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  // Lexicographic on image sequences; total order used for all the
  // deterministic "least element" choices in the library.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  static int check_degree(int degree) {
    if (degree < 0 || degree > kMaxDegree)
      throw PermError("degree out of range [0, 255]");
    return degree;
  }

  std::vector<uint8_t> img_;
};

namespace detail {
inline void require_same_degree(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw PermError("degree mismatch between permutations");
}
}  // namespace detail

// Apply a first, then b.
inline Perm compose(const Perm& a, const Perm& b) {
  detail::require_same_degree(a, b);
  std::vector<uint8_t> img(a.degree());
  for (int i = 1; i <= a.degree(); ++i)
    img[i - 1] = static_cast<uint8_t>(b.apply(a.apply(i)));
  return Perm::from_images(std::move(img));
}

inline Perm inverse(const Perm& p) {
  std::vector<uint8_t> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i)
    img[p.apply(i) - 1] = static_cast<uint8_t>(i);
  return Perm::from_images(std::move(img));
}

// Re-read a permutation in a larger symmetric group: added points are fixed.
inline Perm extend_degree(const Perm& p, int degree) {
  if (degree < p.degree())
    throw PermError("extend_degree cannot shrink a permutation");
  std::vector<uint8_t> img(degree);
  for (int i = 1; i <= p.degree(); ++i)
    img[i - 1] = static_cast<uint8_t>(p.apply(i));
  for (int i = p.degree() + 1; i <= degree; ++i)
    img[i - 1] = static_cast<uint8_t>(i);
  return Perm::from_images(std::move(img));
}

// by^-1 * p * by (left-to-right), i.e. p with points relabeled along by:
// the result maps by(x) to by(p(x)).
inline Perm conjugate(const Perm& p, const Perm& by) {
  detail::require_same_degree(p, by);
  std::vector<uint8_t> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x)
    img[by.apply(x) - 1] = static_cast<uint8_t>(by.apply(p.apply(x)));
  return Perm::from_images(std::move(img));
}

// Multiset of cycle lengths >= 2 (fixed points omitted), ascending.
// The ramification index is sum(len - 1) = degree - #cycles.
struct CycleStructure {
  std::vector<int> lengths;

  int index() const {
    int s = 0;
    for (int len : lengths) s += len - 1;
    return s;
  }

  bool is_identity() const { return lengths.empty(); }
  bool is_transposition() const { return lengths == std::vector<int>{2}; }
  bool is_double_transposition() const {
    return lengths == std::vector<int>{2, 2};
  }
  bool is_three_cycle() const { return lengths == std::vector<int>{3}; }

  // "2+2", "3", ... ; "1" for the identity.
  std::string to_string() const {
    if (lengths.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < lengths.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(lengths[i]);
    }
    return s;
  }

  friend bool operator==(const CycleStructure&, const CycleStructure&) =
      default;
  friend auto operator<=>(const CycleStructure&, const CycleStructure&) =
      default;
};

inline CycleStructure cycle_structure(const Perm& p) {
  CycleStructure cs;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = p.apply(j)) {
      seen[j - 1] = true;
      ++len;
    }
    if (len >= 2) cs.lengths.push_back(len);
  }
  std::sort(cs.lengths.begin(), cs.lengths.end());
  return cs;
}

// Parity as +1 (even) / -1 (odd).
inline int parity(const Perm& p) {
  return cycle_structure(p).index() % 2 == 0 ? 1 : -1;
}

// Canonical cycle notation: cycles sorted by least moved point, each cycle
// written starting from its least point, no whitespace; "id" for the
// identity. parse_perm/format_perm round-trip on this form.
inline std::string format_perm(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1] || p.apply(i) == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j - 1]; j = p.apply(j)) {
      seen[j - 1] = true;
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

// Grammar: "id" | cycle+ with cycle = "(p1,p2,...,pk)", k >= 2, points
// distinct across the whole expression and within [1, degree]. Whitespace
// between tokens is tolerated; the canonical form has none.
inline Perm parse_perm(const std::string& text, int degree) {
  Perm result(degree);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw PermError("trailing text after 'id': " + text);
    return result;
  }
  std::vector<uint8_t> img(result.images());
  std::vector<bool> used(degree, false);
  bool any_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw PermError("expected '(' in permutation: " + text);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw PermError("expected point number in: " + text);
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree)
        throw PermError("point " + std::to_string(pt) + " out of range 1.." +
                        std::to_string(degree));
      if (used[pt - 1])
        throw PermError("point " + std::to_string(pt) + " repeated in: " + text);
      used[pt - 1] = true;
      cyc.push_back(pt);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw PermError("expected ',' or ')' in: " + text);
    }
    if (cyc.size() < 2)
      throw PermError("cycles must have length >= 2 in: " + text);
    for (size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i] - 1] = static_cast<uint8_t>(cyc[(i + 1) % cyc.size()]);
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle) throw PermError("empty permutation text (use 'id')");
  return Perm::from_images(std::move(img));
}

}  // namespace hurwitz
