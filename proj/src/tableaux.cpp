#include "tableaux.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace fliptop {

namespace {
constexpr const char* kEmptyText = "\xCF\x86";  // lowercase phi
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int r) const {
  if (r < 1) throw InvalidArgument("row index is 1-based");
  return r <= rows() ? parts_[r - 1] : 0;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<int> cols(p.part(1), 0);
  for (int r = 1; r <= p.rows(); ++r)
    for (int c = 0; c < p.part(r); ++c) ++cols[c];
  return Partition(std::move(cols));
}

bool partition_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                      b.parts().begin(), b.parts().end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int ell, TableauxCaps caps) {
  if (ell < 0) throw InvalidArgument("partition size must be non-negative");
  if (ell > caps.max_partition_size) throw CapExceeded("partition enumeration cap exceeded");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(ell, ell, cur, out);
  if (ell == 0) {
    out.clear();
    out.push_back(Partition());
  }
  return out;
}

Int syt_count(const Partition& p) {
  if (p.empty()) return 1;
  Partition q = conjugate(p);
  Int hooks = 1;
  for (int r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.part(r); ++c)
      hooks *= (p.part(r) - c) + (q.part(c) - r) + 1;
  Int d = factorial(static_cast<unsigned long>(p.size()));
  // hook products divide n! exactly
  mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), hooks.get_mpz_t());
  return d;
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw InvalidArgument("tableau row count does not match shape");
  for (int r = 1; r <= shape_.rows(); ++r)
    if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
      throw InvalidArgument("tableau row length does not match shape");
}

std::pair<int, int> StandardTableau::find(int v) const {
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == v) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  throw InvalidArgument("entry not present in tableau");
}

namespace {

void syt_rec(const Partition& shape, std::vector<int>& row_fill, int next,
             std::vector<std::vector<int>>& grid, std::vector<StandardTableau>& out) {
  int n = shape.size();
  if (next > n) {
    out.push_back(StandardTableau(shape, grid));
    return;
  }
  for (int r = 1; r <= shape.rows(); ++r) {
    int len = row_fill[r - 1];
    if (len >= shape.part(r)) continue;
    if (r > 1 && row_fill[r - 2] <= len) continue;  // column would decrease
    grid[r - 1][len] = next;
    ++row_fill[r - 1];
    syt_rec(shape, row_fill, next + 1, grid, out);
    --row_fill[r - 1];
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& p, TableauxCaps caps) {
  if (p.size() > caps.max_syt_size) throw CapExceeded("tableau enumeration cap exceeded");
  std::vector<std::vector<int>> grid(p.rows());
  for (int r = 1; r <= p.rows(); ++r) grid[r - 1].assign(p.part(r), 0);
  std::vector<int> row_fill(p.rows(), 0);
  std::vector<StandardTableau> out;
  if (p.empty()) {
    out.push_back(StandardTableau(p, {}));
    return out;
  }
  syt_rec(p, row_fill, 1, grid, out);
  return out;
}

std::vector<DoubleDiagram> enumerate_double_diagrams(int n, TableauxCaps caps) {
  if (n < 0) throw InvalidArgument("diagram size must be non-negative");
  if (n > caps.max_partition_size) throw CapExceeded("partition enumeration cap exceeded");
  std::vector<DoubleDiagram> out;
  for (int m = n; m >= 0; --m) {
    auto firsts = enumerate_partitions(m, caps);
    auto seconds = enumerate_partitions(n - m, caps);
    for (const auto& a : firsts)
      for (const auto& b : seconds) out.push_back(DoubleDiagram{a, b});
  }
  return out;
}

Int double_dim(const DoubleDiagram& mu) {
  return binomial(static_cast<unsigned long>(mu.total()),
                  static_cast<unsigned long>(mu.first.size())) *
         syt_count(mu.first) * syt_count(mu.second);
}

StandardDoubleTableau::StandardDoubleTableau(DoubleDiagram shape,
                                             std::vector<CellRef> placement)
    : shape_(std::move(shape)), placement_(std::move(placement)) {
  if (static_cast<int>(placement_.size()) != shape_.total())
    throw InvalidArgument("placement size does not match shape");
}

const CellRef& StandardDoubleTableau::cell_of(int v) const {
  if (v < 1 || v > n()) throw InvalidArgument("entry out of range");
  return placement_[v - 1];
}

namespace {

void double_tableaux_rec(const DoubleDiagram& shape, std::vector<int>& fill1,
                         std::vector<int>& fill2, int next,
                         std::vector<CellRef>& placement,
                         std::vector<StandardDoubleTableau>& out) {
  int n = shape.total();
  if (next > n) {
    out.push_back(StandardDoubleTableau(shape, placement));
    return;
  }
  auto try_component = [&](int comp, const Partition& target, std::vector<int>& fill) {
    for (int r = 1; r <= target.rows(); ++r) {
      int len = fill[r - 1];
      if (len >= target.part(r)) continue;
      if (r > 1 && fill[r - 2] <= len) continue;
      placement.push_back(CellRef{comp, r, len + 1});
      ++fill[r - 1];
      double_tableaux_rec(shape, fill1, fill2, next + 1, placement, out);
      --fill[r - 1];
      placement.pop_back();
    }
  };
  try_component(1, shape.first, fill1);
  try_component(2, shape.second, fill2);
}

}  // namespace

std::vector<StandardDoubleTableau> enumerate_double_tableaux(const DoubleDiagram& mu,
                                                             TableauxCaps caps) {
  if (mu.total() > caps.max_double_tableaux_size)
    throw CapExceeded("double tableau enumeration cap exceeded");
  std::vector<int> fill1(mu.first.rows(), 0), fill2(mu.second.rows(), 0);
  std::vector<CellRef> placement;
  std::vector<StandardDoubleTableau> out;
  if (mu.total() == 0) {
    out.push_back(StandardDoubleTableau(mu, {}));
    return out;
  }
  double_tableaux_rec(mu, fill1, fill2, 1, placement, out);
  return out;
}

int content_of_entry(const StandardDoubleTableau& t, int i) {
  const CellRef& cell = t.cell_of(i);
  return cell.col - cell.row;
}

std::vector<std::pair<int, int>> removable_corners(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= p.rows(); ++r)
    if (p.part(r) > p.part(r + 1)) out.push_back({r, p.part(r)});
  return out;
}

Partition remove_corner(const Partition& p, int row) {
  if (row < 1 || row > p.rows() || p.part(row) <= p.part(row + 1))
    throw InvalidArgument("no removable corner in that row");
  std::vector<int> parts = p.parts();
  if (--parts[row - 1] == 0) parts.erase(parts.begin() + (row - 1));
  return Partition(std::move(parts));
}

std::vector<CornerLine> last_box_content_spectrum(const DoubleDiagram& mu) {
  int n = mu.total();
  if (n < 1) throw InvalidArgument("diagram must have at least one box");
  unsigned long m = static_cast<unsigned long>(mu.first.size());
  std::vector<CornerLine> out;
  for (auto [r, c] : removable_corners(mu.first)) {
    Int cnt = binomial(static_cast<unsigned long>(n - 1), m - 1) *
              syt_count(remove_corner(mu.first, r)) * syt_count(mu.second);
    out.push_back(CornerLine{c - r, 1, cnt});
  }
  for (auto [r, c] : removable_corners(mu.second)) {
    Int cnt = binomial(static_cast<unsigned long>(n - 1), m) * syt_count(mu.first) *
              syt_count(remove_corner(mu.second, r));
    out.push_back(CornerLine{c - r, 2, cnt});
  }
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return kEmptyText;
  std::ostringstream os;
  os << '(';
  for (int r = 1; r <= p.rows(); ++r) {
    if (r > 1) os << ',';
    os << p.part(r);
  }
  os << ')';
  return os.str();
}

std::string to_string(const DoubleDiagram& mu) {
  return "(" + to_string(mu.first) + "|" + to_string(mu.second) + ")";
}

Partition parse_partition(const std::string& text) {
  if (text == kEmptyText) return Partition();
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw InvalidArgument("partition text must look like (3,1)");
  std::vector<int> parts;
  std::istringstream is(text.substr(1, text.size() - 2));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw InvalidArgument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

DoubleDiagram parse_double_diagram(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InvalidArgument("double diagram text must look like ((3,1)|(2))");
  std::string body = text.substr(1, text.size() - 2);
  // the separator is the unique '|' at parenthesis depth zero
  int depth = 0;
  size_t split = std::string::npos;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == '|' && depth == 0) {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw InvalidArgument("double diagram text must look like ((3,1)|(2))");
  return DoubleDiagram{parse_partition(body.substr(0, split)),
                       parse_partition(body.substr(split + 1))};
}

}  // namespace fliptop
