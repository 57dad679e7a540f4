#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fliptop {

// Families of finite groups the walks live on:
//   B: signed permutations of {1..n} (hyperoctahedral group), order 2^n n!
//   D: signed permutations with an even number of sign flips, order 2^(n-1) n!
//   S: ordinary permutations, order n!
//
// Elements are held in window notation, window[i-1] = pi(i), entries in
// {+-1..+-n} with distinct absolute values. Family S windows are all positive.
enum class Family { B, D, S };

struct GroupId {
  Family family;
  int n;
  bool operator==(const GroupId&) const = default;
};

std::uint64_t group_order(GroupId g);

class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  // pi(i) for i in {-n..-1, 1..n}; pi(-i) = -pi(i).
  int image(int i) const;
  bool is_identity() const;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

class Permutation {
 public:
  explicit Permutation(std::vector<int> window);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int image(int i) const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> window_;
};

// (p . q)(i) = p(q(i)); q acts first.
SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
Permutation compose(const Permutation& p, const Permutation& q);
SignedPermutation inverse(const SignedPermutation& p);
Permutation inverse(const Permutation& p);

// Sign character: (-1)^(number of negative window entries). Kernel is D_n.
int xi(const SignedPermutation& p);
bool is_in_dn(const SignedPermutation& p);

// Forgets signs: f(pi)(i) = |pi(i)|. A surjective homomorphism B_n -> S_n.
Permutation project(const SignedPermutation& p);

enum class GeneratorKind {
  Transpose,       // (i,n): swaps i and n
  FlipTranspose,   // (-i,n): i -> -n, n -> -i
  Flip,            // (-i,i): i -> -i
  NegateLast,      // (-n,n): n -> -n
};

// (n,n) is the identity; (-n,n) coincides with NegateLast.
SignedPermutation generator(GeneratorKind kind, int i, int n);

// Bijections onto {0..|G|-1} with identity -> 0.
// B: (Lehmer code of |pi|) * 2^n + sign bits; D: same with the last sign bit
// implied by parity; S: plain Lehmer rank.
std::uint64_t rank_element(const std::vector<int>& window, GroupId g);
std::vector<int> unrank_element(std::uint64_t r, GroupId g);

std::uint64_t rank(const SignedPermutation& p, GroupId g);
SignedPermutation unrank_signed(std::uint64_t r, GroupId g);
std::uint64_t rank(const Permutation& p);
Permutation unrank_perm(std::uint64_t r, int n);

struct EnumerationCaps {
  int max_n_signed = 6;  // families B and D
  int max_n_sym = 8;
};

// All elements in rank order. Guarded by the caps above.
std::vector<SignedPermutation> enumerate_group_signed(GroupId g,
                                                      EnumerationCaps caps = {});
std::vector<Permutation> enumerate_group_perm(int n, EnumerationCaps caps = {});

// Window notation text, e.g. "[2,-3,1]". Parsers round-trip exactly.
std::string to_string(const SignedPermutation& p);
std::string to_string(const Permutation& p);
SignedPermutation parse_signed_permutation(const std::string& text);
Permutation parse_permutation(const std::string& text);

}  // namespace fliptop
