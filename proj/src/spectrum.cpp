#include "spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "walk.hpp"

namespace fliptop {

namespace {

void sort_lines(std::vector<SpectralLine>& lines) {
  std::sort(lines.begin(), lines.end(), [](const SpectralLine& a, const SpectralLine& b) {
    int c = cmp(a.eigenvalue, b.eigenvalue);
    if (c != 0) return c > 0;
    if (a.component != b.component) return a.component < b.component;
    return source_text(a) < source_text(b);
  });
}

// Shared loop for the two B_n walks: per double diagram, per corner, an
// eigenvalue from the content plus a line multiplicity dim(V^mu) * count.
template <typename EigenvalueOf>
std::vector<SpectralLine> bn_lines(int n, EigenvalueOf&& eig_of) {
  if (n < 2) throw InvalidArgument("spectrum requires n >= 2");
  std::vector<SpectralLine> lines;
  for (const DoubleDiagram& mu : enumerate_double_diagrams(n)) {
    Int dim = double_dim(mu);
    for (const CornerLine& corner : last_box_content_spectrum(mu)) {
      SpectralLine line;
      line.eigenvalue = eig_of(corner.content, corner.component);
      line.multiplicity = dim * corner.count;
      line.source = mu;
      line.component = corner.component;
      lines.push_back(std::move(line));
    }
  }
  sort_lines(lines);
  return lines;
}

}  // namespace

std::vector<SpectralLine> bn_spectrum(int n) {
  return bn_lines(n, [n](int c, int component) {
    Rat e = component == 1 ? Rat(c + 1, n) : Rat(c, n);
    e.canonicalize();
    return e;
  });
}

std::vector<SpectralLine> bn_alpha_spectrum(int n, const Rat& alpha) {
  if (alpha < 0 || alpha > 1) throw InvalidArgument("alpha must lie in [0,1]");
  Rat scale = 2 * alpha - 1;
  return bn_lines(n, [n, &scale](int c, int component) {
    Rat e = component == 1 ? Rat(c + 1, n) : scale * Rat(c, n);
    e.canonicalize();
    return e;
  });
}

std::vector<SpectralLine> dn_spectrum(int n) {
  if (n < 2) throw InvalidArgument("spectrum requires n >= 2");
  std::vector<SpectralLine> lines;
  for (const DoubleDiagram& mu : enumerate_double_diagrams(n)) {
    bool symmetric_pair = mu.first == mu.second;
    // one representative per unordered pair: first component strictly greater
    if (!symmetric_pair && partition_less(mu.first, mu.second)) continue;
    Int weight = double_dim(mu);
    if (symmetric_pair) {
      if (mpz_odd_p(weight.get_mpz_t()))
        throw std::logic_error("symmetric-pair dimension must be even");
      mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(), 2);
    }
    for (const CornerLine& corner : last_box_content_spectrum(mu)) {
      SpectralLine line;
      line.eigenvalue = Rat(2 * corner.content + 1, 2 * n - 1);
      line.eigenvalue.canonicalize();
      line.multiplicity = weight * corner.count;
      line.source = mu;
      line.component = corner.component;
      lines.push_back(std::move(line));
    }
  }
  sort_lines(lines);
  return lines;
}

std::vector<SpectralLine> sn_a_spectrum(int n, const Rat& a) {
  if (n < 2) throw InvalidArgument("spectrum requires n >= 2");
  if (a <= 0 || a >= 1) throw InvalidArgument("a must lie strictly inside (0,1)");
  std::vector<SpectralLine> lines;
  for (const Partition& lambda : enumerate_partitions(n)) {
    Int d = syt_count(lambda);
    for (auto [r, c] : removable_corners(lambda)) {
      int content = c - r;
      SpectralLine line;
      line.eigenvalue = a + (1 - a) * Rat(content, n - 1);
      line.eigenvalue.canonicalize();
      line.multiplicity = d * syt_count(remove_corner(lambda, r));
      line.source = lambda;
      line.component = 0;
      lines.push_back(std::move(line));
    }
  }
  sort_lines(lines);
  return lines;
}

std::vector<SpectralLine> exact_spectrum(const WalkSpec& spec) {
  validate_spec(spec);
  switch (spec.kind) {
    case WalkKind::FlipTransposeTopB: return bn_spectrum(spec.n);
    case WalkKind::BiasedFlipTransposeTopB: return bn_alpha_spectrum(spec.n, spec.param);
    case WalkKind::FlipTransposeTopD: return dn_spectrum(spec.n);
    case WalkKind::TransposeTopS: return sn_a_spectrum(spec.n, spec.param);
  }
  throw InvalidArgument("unknown walk kind");
}

std::string source_text(const SpectralLine& line) {
  if (std::holds_alternative<DoubleDiagram>(line.source))
    return to_string(std::get<DoubleDiagram>(line.source));
  return to_string(std::get<Partition>(line.source));
}

std::vector<std::pair<Rat, Int>> aggregate(const std::vector<SpectralLine>& lines) {
  std::map<Rat, Int, std::greater<Rat>> acc;
  for (const SpectralLine& line : lines) acc[line.eigenvalue] += line.multiplicity;
  std::vector<std::pair<Rat, Int>> out;
  out.reserve(acc.size());
  for (auto& [eig, mult] : acc) out.push_back({eig, mult});
  return out;
}

Rat spectral_power_sum(const std::vector<SpectralLine>& lines, unsigned long power) {
  Rat s = 0;
  for (const SpectralLine& line : lines)
    s += Rat(line.multiplicity) * rat_pow(line.eigenvalue, power);
  s.canonicalize();
  return s;
}

Int total_multiplicity(const std::vector<SpectralLine>& lines) {
  Int t = 0;
  for (const SpectralLine& line : lines) t += line.multiplicity;
  return t;
}

std::vector<double> expand_spectrum(const std::vector<SpectralLine>& lines) {
  std::vector<double> out;
  for (const auto& [eig, mult] : aggregate(lines)) {
    if (!mult.fits_ulong_p()) throw CapExceeded("spectrum too large to expand");
    double e = rat_d(eig);
    for (unsigned long i = 0; i < mult.get_ui(); ++i) out.push_back(e);
  }
  return out;  // aggregate() already sorts descending
}

std::vector<double> brute_force_spectrum(const WalkSpec& spec, std::uint64_t order_cap) {
  StepMeasure m = step_measure(spec);
  std::uint64_t order = group_order(m.group);
  if (order > order_cap) throw CapExceeded("group too large for the dense eigensolver");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<long>(order),
                                            static_cast<long>(order));
  for (std::uint64_t x = 0; x < order; ++x) {
    std::vector<int> wx = unrank_element(x, m.group);
    for (const auto& [r, p] : m.atoms) {
      std::vector<int> ws = unrank_element(r, m.group);
      std::vector<int> prod(ws.size());
      for (size_t i = 0; i < ws.size(); ++i) {
        int si = ws[i];
        prod[i] = si > 0 ? wx[si - 1] : -wx[-si - 1];
      }
      std::uint64_t y = rank_element(prod, m.group);  // y = x * s
      M(static_cast<long>(x), static_cast<long>(y)) += rat_d(p);
    }
  }
  for (std::uint64_t x = 0; x < order; ++x)
    for (std::uint64_t y = x + 1; y < order; ++y)
      if (M(static_cast<long>(x), static_cast<long>(y)) !=
          M(static_cast<long>(y), static_cast<long>(x)))
        throw std::logic_error("transition matrix lost symmetry");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  std::vector<double> eigs(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + order);
  std::reverse(eigs.begin(), eigs.end());
  return eigs;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string spectrum_json(const WalkSpec& spec, bool aggregate_lines) {
  std::vector<SpectralLine> lines = exact_spectrum(spec);
  std::ostringstream os;
  os << "[\n";
  bool first = true;
  auto emit = [&](const Rat& eig, const Int& mult, const SpectralLine* line) {
    if (!first) os << ",\n";
    first = false;
    os << "  {\"num\":" << eig.get_num().get_str() << ",\"den\":"
       << eig.get_den().get_str() << ",\"multiplicity\":" << mult.get_str();
    if (line) {
      std::string src = source_text(*line);
      os << ",\"diagram\":\"" << src << "\",\"component\":" << line->component;
    }
    os << "}";
  };
  if (aggregate_lines) {
    for (const auto& [eig, mult] : aggregate(lines)) emit(eig, mult, nullptr);
  } else {
    for (const SpectralLine& line : lines) emit(line.eigenvalue, line.multiplicity, &line);
  }
  os << "\n]\n";
  return os.str();
}

std::string spectrum_csv(const WalkSpec& spec, bool aggregate_lines) {
  std::vector<SpectralLine> lines = exact_spectrum(spec);
  std::ostringstream os;
  if (aggregate_lines) {
    os << "num,den,multiplicity\n";
    for (const auto& [eig, mult] : aggregate(lines))
      os << eig.get_num().get_str() << ',' << eig.get_den().get_str() << ','
         << mult.get_str() << '\n';
  } else {
    os << "num,den,multiplicity,diagram,component\n";
    for (const SpectralLine& line : lines)
      os << line.eigenvalue.get_num().get_str() << ','
         << line.eigenvalue.get_den().get_str() << ',' << line.multiplicity.get_str()
         << ',' << csv_quote(source_text(line)) << ',' << line.component << '\n';
  }
  return os.str();
}

}  // namespace fliptop
