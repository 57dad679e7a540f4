#include "group.hpp"

#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace fliptop {

namespace {

void check_window(const std::vector<int>& w, bool allow_signs) {
  int n = static_cast<int>(w.size());
  if (n == 0) throw InvalidArgument("window must be non-empty");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : w) {
    int a = std::abs(v);
    if (a < 1 || a > n) throw InvalidArgument("window entry out of range");
    if (!allow_signs && v < 0) throw InvalidArgument("negative entry in unsigned window");
    if (seen[a]) throw InvalidArgument("repeated absolute value in window");
    seen[a] = 1;
  }
}

std::vector<int> identity_window(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

std::vector<int> win_compose(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size()) throw InvalidArgument("composing windows of different sizes");
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    int qi = q[i];
    r[i] = qi > 0 ? p[qi - 1] : -p[-qi - 1];
  }
  return r;
}

std::vector<int> win_inverse(const std::vector<int>& w) {
  std::vector<int> r(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    int v = w[i];
    if (v > 0)
      r[v - 1] = static_cast<int>(i) + 1;
    else
      r[-v - 1] = -(static_cast<int>(i) + 1);
  }
  return r;
}

int count_negatives(const std::vector<int>& w) {
  int c = 0;
  for (int v : w)
    if (v < 0) ++c;
  return c;
}

std::uint64_t lehmer_rank(const std::vector<int>& w) {
  // Mixed-radix rank of the absolute-value permutation; identity -> 0.
  int n = static_cast<int>(w.size());
  std::uint64_t r = 0, fact = 1;
  std::vector<std::uint64_t> facts(n);
  for (int i = 0; i < n; ++i) {
    facts[i] = fact;
    fact *= static_cast<std::uint64_t>(i + 1);
  }
  for (int i = 0; i < n; ++i) {
    int ai = std::abs(w[i]);
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j)
      if (std::abs(w[j]) < ai) ++smaller_later;
    r += static_cast<std::uint64_t>(smaller_later) * facts[n - 1 - i];
  }
  return r;
}

std::vector<int> lehmer_unrank(std::uint64_t r, int n) {
  std::vector<std::uint64_t> facts(n);
  std::uint64_t fact = 1;
  for (int i = 0; i < n; ++i) {
    facts[i] = fact;
    fact *= static_cast<std::uint64_t>(i + 1);
  }
  std::vector<int> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = i + 1;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = facts[n - 1 - i];
    int d = static_cast<int>(r / f);
    r %= f;
    w[i] = avail[d];
    avail.erase(avail.begin() + d);
  }
  return w;
}

}  // namespace

std::uint64_t group_order(GroupId g) {
  if (g.n < 1) throw InvalidArgument("group rank must be positive");
  if (g.n > 20) throw CapExceeded("group order would overflow 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= g.n; ++i) f *= static_cast<std::uint64_t>(i);
  switch (g.family) {
    case Family::S:
      return f;
    case Family::B:
      if (g.n > 14) throw CapExceeded("group order would overflow 64 bits");
      return f << g.n;
    case Family::D:
      if (g.n > 14) throw CapExceeded("group order would overflow 64 bits");
      return f << (g.n - 1);
  }
  throw InvalidArgument("unknown family");
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  check_window(window_, true);
}

SignedPermutation SignedPermutation::identity(int n) {
  return SignedPermutation(identity_window(n));
}

int SignedPermutation::image(int i) const {
  int a = std::abs(i);
  if (a < 1 || a > n()) throw InvalidArgument("point out of range");
  return i > 0 ? window_[a - 1] : -window_[a - 1];
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  check_window(window_, false);
}

Permutation Permutation::identity(int n) { return Permutation(identity_window(n)); }

int Permutation::image(int i) const {
  if (i < 1 || i > n()) throw InvalidArgument("point out of range");
  return window_[i - 1];
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  return SignedPermutation(win_compose(p.window(), q.window()));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  return Permutation(win_compose(p.window(), q.window()));
}

SignedPermutation inverse(const SignedPermutation& p) {
  return SignedPermutation(win_inverse(p.window()));
}

Permutation inverse(const Permutation& p) { return Permutation(win_inverse(p.window())); }

int xi(const SignedPermutation& p) { return count_negatives(p.window()) % 2 == 0 ? 1 : -1; }

bool is_in_dn(const SignedPermutation& p) { return xi(p) == 1; }

Permutation project(const SignedPermutation& p) {
  std::vector<int> w(p.window());
  for (int& v : w) v = std::abs(v);
  return Permutation(std::move(w));
}

SignedPermutation generator(GeneratorKind kind, int i, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (kind != GeneratorKind::NegateLast && (i < 1 || i > n))
    throw InvalidArgument("generator index out of range");
  std::vector<int> w = identity_window(n);
  switch (kind) {
    case GeneratorKind::Transpose:
      std::swap(w[i - 1], w[n - 1]);
      break;
    case GeneratorKind::FlipTranspose:
      w[i - 1] = -n;
      w[n - 1] = -i;  // i == n collapses to NegateLast
      break;
    case GeneratorKind::Flip:
      w[i - 1] = -i;
      break;
    case GeneratorKind::NegateLast:
      w[n - 1] = -n;
      break;
  }
  return SignedPermutation(std::move(w));
}

std::uint64_t rank_element(const std::vector<int>& window, GroupId g) {
  if (static_cast<int>(window.size()) != g.n)
    throw InvalidArgument("window size does not match group rank");
  std::uint64_t lehmer = lehmer_rank(window);
  switch (g.family) {
    case Family::S:
      for (int v : window)
        if (v < 0) throw InvalidArgument("signed element ranked in family S");
      return lehmer;
    case Family::B: {
      std::uint64_t bits = 0;
      for (int i = 0; i < g.n; ++i)
        if (window[i] < 0) bits |= (1ull << i);
      return (lehmer << g.n) | bits;
    }
    case Family::D: {
      if (count_negatives(window) % 2 != 0)
        throw InvalidArgument("element with odd sign count is not in D_n");
      std::uint64_t bits = 0;
      for (int i = 0; i + 1 < g.n; ++i)
        if (window[i] < 0) bits |= (1ull << i);
      return (lehmer << (g.n - 1)) | bits;
    }
  }
  throw InvalidArgument("unknown family");
}

std::vector<int> unrank_element(std::uint64_t r, GroupId g) {
  if (r >= group_order(g)) throw InvalidArgument("rank out of range");
  switch (g.family) {
    case Family::S:
      return lehmer_unrank(r, g.n);
    case Family::B: {
      std::uint64_t bits = r & ((1ull << g.n) - 1);
      std::vector<int> w = lehmer_unrank(r >> g.n, g.n);
      for (int i = 0; i < g.n; ++i)
        if (bits & (1ull << i)) w[i] = -w[i];
      return w;
    }
    case Family::D: {
      std::uint64_t bits = r & ((1ull << (g.n - 1)) - 1);
      std::vector<int> w = lehmer_unrank(r >> (g.n - 1), g.n);
      int parity = 0;
      for (int i = 0; i + 1 < g.n; ++i)
        if (bits & (1ull << i)) {
          w[i] = -w[i];
          parity ^= 1;
        }
      if (parity) w[g.n - 1] = -w[g.n - 1];
      return w;
    }
  }
  throw InvalidArgument("unknown family");
}

std::uint64_t rank(const SignedPermutation& p, GroupId g) {
  if (g.family == Family::S) throw InvalidArgument("family S holds unsigned permutations");
  return rank_element(p.window(), g);
}

SignedPermutation unrank_signed(std::uint64_t r, GroupId g) {
  if (g.family == Family::S) throw InvalidArgument("family S holds unsigned permutations");
  return SignedPermutation(unrank_element(r, g));
}

std::uint64_t rank(const Permutation& p) {
  return rank_element(p.window(), GroupId{Family::S, p.n()});
}

Permutation unrank_perm(std::uint64_t r, int n) {
  return Permutation(unrank_element(r, GroupId{Family::S, n}));
}

std::vector<SignedPermutation> enumerate_group_signed(GroupId g, EnumerationCaps caps) {
  if (g.family == Family::S) throw InvalidArgument("family S holds unsigned permutations");
  if (g.n > caps.max_n_signed) throw CapExceeded("signed group enumeration cap exceeded");
  std::uint64_t order = group_order(g);
  std::vector<SignedPermutation> out;
  out.reserve(order);
  for (std::uint64_t r = 0; r < order; ++r) out.push_back(unrank_signed(r, g));
  return out;
}

std::vector<Permutation> enumerate_group_perm(int n, EnumerationCaps caps) {
  if (n > caps.max_n_sym) throw CapExceeded("symmetric group enumeration cap exceeded");
  std::uint64_t order = group_order(GroupId{Family::S, n});
  std::vector<Permutation> out;
  out.reserve(order);
  for (std::uint64_t r = 0; r < order; ++r) out.push_back(unrank_perm(r, n));
  return out;
}

namespace {

std::string window_to_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

std::vector<int> parse_window(const std::string& text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw InvalidArgument("window text must look like [2,-3,1]");
  std::vector<int> w;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("bad window entry '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw InvalidArgument("bad window entry '" + tok + "'");
    w.push_back(v);
  }
  return w;
}

}  // namespace

std::string to_string(const SignedPermutation& p) { return window_to_string(p.window()); }
std::string to_string(const Permutation& p) { return window_to_string(p.window()); }

SignedPermutation parse_signed_permutation(const std::string& text) {
  return SignedPermutation(parse_window(text));
}

Permutation parse_permutation(const std::string& text) {
  return Permutation(parse_window(text));
}

}  // namespace fliptop
