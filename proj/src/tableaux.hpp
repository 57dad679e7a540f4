#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fliptop {

// Integer partitions, standard Young tableaux, and their two-component
// analogues. A double diagram mu = (mu1 | mu2) is an ordered pair of
// partitions; the pairs with |mu1| + |mu2| = n index the irreducible
// representations of the signed permutation group B_n. Standard double
// tableaux are fillings of the pair by 1..n, each component increasing
// along rows and down columns. The content of a box in row r, column c
// (1-based) is c - r; the content of the box holding n drives every
// eigenvalue formula in this project.
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);

  int size() const;                  // number of boxes
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int r) const;             // 1-based row length, 0 beyond the last row
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;  // weakly decreasing, all positive
};

Partition conjugate(const Partition& p);

// Strict total order: first by size, then lexicographically on parts.
bool partition_less(const Partition& a, const Partition& b);

struct TableauxCaps {
  int max_partition_size = 30;
  int max_syt_size = 12;
  int max_double_tableaux_size = 10;
};

// Partitions of ell, largest first: (ell), (ell-1,1), ..., (1^ell).
std::vector<Partition> enumerate_partitions(int ell, TableauxCaps caps = {});

// Hook length formula, exact: |lambda|! / prod of hooks.
Int syt_count(const Partition& p);

class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);
  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // (row, col) of the entry v, 1-based.
  std::pair<int, int> find(int v) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

std::vector<StandardTableau> enumerate_syt(const Partition& p, TableauxCaps caps = {});

struct DoubleDiagram {
  Partition first, second;
  int total() const { return first.size() + second.size(); }
  bool operator==(const DoubleDiagram&) const = default;
};

// All ordered pairs with |first| + |second| = n; larger first component
// blocks come before smaller ones, each block in enumerate_partitions order.
std::vector<DoubleDiagram> enumerate_double_diagrams(int n, TableauxCaps caps = {});

// dim V^mu = C(n, |mu1|) * d_mu1 * d_mu2.
Int double_dim(const DoubleDiagram& mu);

struct CellRef {
  int component;  // 1 or 2
  int row, col;   // 1-based
  bool operator==(const CellRef&) const = default;
};

class StandardDoubleTableau {
 public:
  StandardDoubleTableau(DoubleDiagram shape, std::vector<CellRef> placement);
  const DoubleDiagram& shape() const { return shape_; }
  const CellRef& cell_of(int v) const;  // v in 1..n
  int n() const { return static_cast<int>(placement_.size()); }

 private:
  DoubleDiagram shape_;
  std::vector<CellRef> placement_;  // placement_[v-1]
};

std::vector<StandardDoubleTableau> enumerate_double_tableaux(const DoubleDiagram& mu,
                                                             TableauxCaps caps = {});

// Content c - r of the box holding entry i.
int content_of_entry(const StandardDoubleTableau& t, int i);

// Removable corners of p as (row, col), top to bottom.
std::vector<std::pair<int, int>> removable_corners(const Partition& p);
Partition remove_corner(const Partition& p, int row);

// Distribution of the content of the box holding n over all standard double
// tableaux of shape mu, broken down by (content, component). The count for a
// corner is the number of standard double tableaux with n in that corner,
// computed from hook lengths, no tableau enumeration involved.
struct CornerLine {
  int content;
  int component;
  Int count;
};

std::vector<CornerLine> last_box_content_spectrum(const DoubleDiagram& mu);

// "(3,1)", with the empty partition rendered as a UTF-8 phi; double
// diagrams as "((3,1)|(2))". Parsers round-trip exactly.
std::string to_string(const Partition& p);
std::string to_string(const DoubleDiagram& mu);
Partition parse_partition(const std::string& text);
DoubleDiagram parse_double_diagram(const std::string& text);

}  // namespace fliptop
