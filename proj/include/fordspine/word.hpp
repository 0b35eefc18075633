#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fordspine {

/// Exponents (p, q) of a lattice element alpha^p beta^q.
struct LatticeOffset {
  int p = 0;
  int q = 0;

  bool is_zero() const { return p == 0 && q == 0; }
  LatticeOffset operator+(LatticeOffset o) const { return {p + o.p, q + o.q}; }
  LatticeOffset operator-(LatticeOffset o) const { return {p - o.p, q - o.q}; }
  LatticeOffset operator-() const { return {-p, -q}; }
  auto operator<=>(const LatticeOffset&) const = default;
  friend std::ostream& operator<<(std::ostream& os, LatticeOffset o) { return os << "(" << o.p << ", " << o.q << ")"; }
};

/// One block of a normal-form word in (Z x Z) * Z.
struct Syllable {
  enum class Kind { Lattice, Tunnel };
  Kind kind = Kind::Tunnel;
  LatticeOffset lattice;  // Lattice blocks
  int power = 0;          // Tunnel blocks: gamma^power

  static Syllable lat(LatticeOffset o) { return {Kind::Lattice, o, 0}; }
  static Syllable tunnel(int k) { return {Kind::Tunnel, {}, k}; }

  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in the generators alpha, beta (commuting) and gamma.
///
/// Blocks alternate between lattice blocks alpha^p beta^q and tunnel blocks
/// gamma^k; the empty word is the identity. Because the normal form of a free
/// product is unique, two words denote the same abstract element iff their
/// syllable lists are equal.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord identity() { return {}; }
  static GroupWord gamma(int k = 1) {
    GroupWord w;
    w.push(Syllable::tunnel(k));
    return w;
  }
  static GroupWord lattice(LatticeOffset o) {
    GroupWord w;
    w.push(Syllable::lat(o));
    return w;
  }
  static GroupWord alpha(int p = 1) { return lattice({p, 0}); }
  static GroupWord beta(int q = 1) { return lattice({0, q}); }

  /// Parses strings over {a, A, b, B, g, G}; capitals are inverses. A letter
  /// may carry a repeat count, as in "a^12", the form `str` uses for long runs.
  static GroupWord parse(std::string_view s) {
    GroupWord w;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char ch = s[i];
      int n = 1;
      if (i + 1 < s.size() && s[i + 1] == '^') {
        std::size_t j = i + 2;
        n = 0;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') n = n * 10 + (s[j++] - '0');
        if (j == i + 2) throw std::invalid_argument("missing repeat count in word");
        i = j - 1;
      }
      switch (ch) {
        case 'a': w.push(Syllable::lat({n, 0})); break;
        case 'A': w.push(Syllable::lat({-n, 0})); break;
        case 'b': w.push(Syllable::lat({0, n})); break;
        case 'B': w.push(Syllable::lat({0, -n})); break;
        case 'g': w.push(Syllable::tunnel(n)); break;
        case 'G': w.push(Syllable::tunnel(-n)); break;
        default: throw std::invalid_argument(std::string("bad word letter '") + ch + "'");
      }
    }
    return w;
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  bool is_lattice() const { return syl_.size() == 1 && syl_[0].kind == Syllable::Kind::Lattice; }
  /// True for the identity and pure lattice words, i.e. elements of Gamma_infinity.
  bool in_cusp_group() const { return syl_.empty() || is_lattice(); }

  GroupWord inverse() const {
    GroupWord w;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
      Syllable s = *it;
      if (s.kind == Syllable::Kind::Lattice) {
        s.lattice = -s.lattice;
      } else {
        s.power = -s.power;
      }
      w.syl_.push_back(s);
    }
    return w;
  }

  friend GroupWord operator*(const GroupWord& x, const GroupWord& y) {
    GroupWord w = x;
    for (const auto& s : y.syl_) w.push(s);
    return w;
  }

  LatticeOffset leading_lattice() const {
    if (!syl_.empty() && syl_.front().kind == Syllable::Kind::Lattice) return syl_.front().lattice;
    return {};
  }
  LatticeOffset trailing_lattice() const {
    if (!syl_.empty() && syl_.back().kind == Syllable::Kind::Lattice) return syl_.back().lattice;
    return {};
  }

  /// Drops a leading lattice block: the representative of the coset Gamma_inf * w.
  GroupWord strip_leading() const {
    GroupWord w = *this;
    if (!w.syl_.empty() && w.syl_.front().kind == Syllable::Kind::Lattice) w.syl_.erase(w.syl_.begin());
    return w;
  }

  /// Drops lattice blocks at both ends: the representative of the double coset
  /// Gamma_inf * w * Gamma_inf. Isometric spheres of words with equal cores are
  /// Gamma_inf translates of each other.
  GroupWord core() const {
    GroupWord w = strip_leading();
    if (!w.syl_.empty() && w.syl_.back().kind == Syllable::Kind::Lattice) w.syl_.pop_back();
    return w;
  }

  /// Number of generator letters, lattice blocks counted as |p| + |q|.
  int weight() const {
    int n = 0;
    for (const auto& s : syl_) {
      n += s.kind == Syllable::Kind::Lattice ? std::abs(s.lattice.p) + std::abs(s.lattice.q) : std::abs(s.power);
    }
    return n;
  }

  /// Letters, with runs longer than kMaxRun written as "a^n".
  std::string str() const {
    std::string out;
    auto run = [&out](int n, char up, char down) {
      const char ch = n > 0 ? up : down;
      const int m = std::abs(n);
      if (m > kMaxRun) {
        out += ch;
        out += '^';
        out += std::to_string(m);
      } else {
        out.append(static_cast<std::size_t>(m), ch);
      }
    };
    for (const auto& s : syl_) {
      if (s.kind == Syllable::Kind::Lattice) {
        run(s.lattice.p, 'a', 'A');
        run(s.lattice.q, 'b', 'B');
      } else {
        run(s.power, 'g', 'G');
      }
    }
    return out;
  }

  bool operator==(const GroupWord&) const = default;
  friend std::ostream& operator<<(std::ostream& os, const GroupWord& w) { return os << (w.is_identity() ? "1" : w.str()); }

  /// Shortlex-style order: weight, then string. Used for deterministic output.
  friend bool operator<(const GroupWord& x, const GroupWord& y) {
    const int wx = x.weight();
    const int wy = y.weight();
    if (wx != wy) return wx < wy;
    return x.str() < y.str();
  }

 private:
  static constexpr int kMaxRun = 6;

  void push(Syllable s) {
    if (s.kind == Syllable::Kind::Lattice && s.lattice.is_zero()) return;
    if (s.kind == Syllable::Kind::Tunnel && s.power == 0) return;
    if (!syl_.empty() && syl_.back().kind == s.kind) {
      Syllable& b = syl_.back();
      if (s.kind == Syllable::Kind::Lattice) {
        b.lattice = b.lattice + s.lattice;
        if (b.lattice.is_zero()) syl_.pop_back();
      } else {
        b.power += s.power;
        if (b.power == 0) syl_.pop_back();
      }
      return;
    }
    syl_.push_back(s);
  }

  std::vector<Syllable> syl_;
};

}  // namespace fordspine
