#include "minchar/minnorm.hpp"

#include <algorithm>
#include <set>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

void require_valid(const DegreeProfile& profile) {
  ValidationReport report = validate_profile(profile);
  if (report.ok()) return;
  std::string msg = "invalid degree profile '" + profile.name + "':";
  for (const std::string& v : report.violations) msg += " " + v + ";";
  throw Error(msg);
}

}  // namespace

Int quadratic_form_value(const DegreeProfile& profile, const std::vector<Int>& a) {
  if (a.size() != profile.k()) throw Error("coefficient vector must match the profile length");
  Int s2 = 0, dot = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    s2 += a[i] * a[i];
    dot += a[i] * profile.degrees[i];
  }
  return profile.group_order * s2 - dot * dot;
}

GramMatrix quotient_gram(const DegreeProfile& profile) {
  const size_t k = profile.k();
  if (k < 2) throw TrivialGroupError("quotient form is empty for the one-class profile");
  GramMatrix gram;
  gram.entries.assign(k - 1, std::vector<Int>(k - 1, 0));
  for (size_t i = 0; i + 1 < k; ++i)
    for (size_t j = 0; j + 1 < k; ++j) {
      gram.entries[i][j] = -profile.degrees[i + 1] * profile.degrees[j + 1];
      if (i == j) gram.entries[i][j] += profile.group_order;
    }
  return gram;
}

std::vector<Int> canonicalize(const DegreeProfile& profile, const std::vector<Int>& a) {
  if (a.size() != profile.k()) throw Error("coefficient vector must match the profile length");
  const Int& n = profile.group_order;
  Int dot = 0;
  for (size_t i = 0; i < a.size(); ++i) dot += a[i] * profile.degrees[i];

  const Int shift = floor_div(dot, n);
  std::vector<Int> low(a);
  for (size_t i = 0; i < a.size(); ++i) low[i] -= shift * profile.degrees[i];
  const Int s0 = dot - shift * n;  // a.d reduced into [0, n)

  if (2 * s0 < n && s0 > 0) return low;
  if (2 * s0 > n) {
    // Mirror into [0, n/2): (shift+1)*d - a has dot n - s0.
    std::vector<Int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
      out[i] = (shift + 1) * profile.degrees[i] - a[i];
    return out;
  }

  // Boundary: s0 == 0 pairs with its own negation, s0 == n/2 with the
  // mirror at the same dot value; keep the lexicographically smaller one.
  std::vector<Int> other(a.size());
  if (s0 == 0) {
    for (size_t i = 0; i < a.size(); ++i) other[i] = -low[i];
  } else {
    for (size_t i = 0; i < a.size(); ++i)
      other[i] = (shift + 1) * profile.degrees[i] - a[i];
  }
  return std::min(low, other);
}

CandidateReport nearest_integer_candidate(const DegreeProfile& profile, const Int& t) {
  require_valid(profile);
  CandidateReport report;
  const Int& n = profile.group_order;
  for (size_t i = 0; i < profile.k(); ++i) {
    bool tie = false;
    const Int num = t * profile.degrees[i];
    const Int a = round_nearest_half_toward_zero(num, n, &tie);
    report.coeffs.push_back(a);
    report.residuals.push_back(Rat(a) - Rat(num) / Rat(n));
    if (tie) report.tie_indices.push_back(i);
  }
  report.tie_flagged = !report.tie_indices.empty();
  report.form_value = quadratic_form_value(profile, report.coeffs);
  return report;
}

MinimizationResult minimal_norm(const DegreeProfile& profile) {
  require_valid(profile);
  if (profile.k() < 2)
    throw TrivialGroupError("no class lies outside the degree line for '" + profile.name + "'");

  const GramMatrix gram = quotient_gram(profile);
  const Int radius = profile.group_order - profile.max_degree() * profile.max_degree();
  const ReductionResult reduced = lll_reduce(gram);
  const EnumerationResult found = enumerate_min(reduced.reduced, radius);

  const size_t dim = gram.dim();
  std::set<std::vector<Int>> canonical;
  for (const std::vector<Int>& y : found.vectors) {
    // Back to quotient coordinates, then lift with a zero first entry.
    std::vector<Int> lifted(profile.k(), 0);
    for (size_t i = 0; i < dim; ++i) {
      if (y[i] == 0) continue;
      for (size_t j = 0; j < dim; ++j) lifted[j + 1] += y[i] * reduced.transform[i][j];
    }
    canonical.insert(canonicalize(profile, lifted));
  }

  MinimizationResult result;
  result.minimum = found.minimum;
  result.minimizers.assign(canonical.begin(), canonical.end());
  result.stats.nodes = found.nodes;
  result.stats.initial_radius = radius;
  return result;
}

MinimizationResult brute_force_minimum(const DegreeProfile& profile, const Int& radius) {
  require_valid(profile);
  if (profile.k() < 2)
    throw TrivialGroupError("no class lies outside the degree line for '" + profile.name + "'");

  const size_t dim = profile.k() - 1;
  const std::vector<Int> d(profile.degrees.begin() + 1, profile.degrees.end());
  const Int& n = profile.group_order;

  // One representative per permutation orbit within each equal-degree block:
  // coordinates weakly decreasing inside a block. The form only sees the
  // multiset of coordinates per degree, so orbit representatives cover every
  // value; minimizing orbits are expanded afterwards.
  std::vector<Int> x(dim, 0);
  std::vector<std::vector<Int>> best_reps;
  Int best = -1;
  unsigned long long nodes = 0;

  auto scan = [&](auto&& self, size_t i, const Int& s2, const Int& dot) -> void {
    if (i == dim) {
      bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
      if (zero) return;
      const Int value = n * s2 - dot * dot;
      if (best < 0 || value < best) {
        best = value;
        best_reps.clear();
      }
      if (value == best) best_reps.push_back(x);
      return;
    }
    const Int room = radius - s2;
    if (room < 0) return;
    Int hi = floor_sqrt(room);
    if (i > 0 && d[i] == d[i - 1] && x[i - 1] < hi) hi = x[i - 1];
    for (Int v = hi; v * v <= room; --v) {
      ++nodes;
      x[i] = v;
      self(self, i + 1, s2 + v * v, dot + v * d[i]);
    }
    x[i] = 0;
  };
  scan(scan, 0, Int(0), Int(0));

  if (best < 0)
    throw RadiusTooSmallError("no nonzero vector with square sum at most " + radius.get_str());

  // Expand each minimizing orbit back to full coordinate vectors.
  std::vector<std::pair<size_t, size_t>> blocks;
  for (size_t start = 0; start < dim;) {
    size_t end = start;
    while (end < dim && d[end] == d[start]) ++end;
    blocks.emplace_back(start, end);
    start = end;
  }

  std::set<std::vector<Int>> canonical;
  for (const std::vector<Int>& rep : best_reps) {
    std::vector<std::vector<std::vector<Int>>> per_block;
    for (auto [start, end] : blocks) {
      std::vector<Int> part(rep.begin() + start, rep.begin() + end);
      std::sort(part.begin(), part.end());
      std::vector<std::vector<Int>> perms;
      do {
        perms.push_back(part);
      } while (std::next_permutation(part.begin(), part.end()));
      per_block.push_back(std::move(perms));
    }
    std::vector<Int> assembled(dim);
    auto emit = [&](auto&& self, size_t b) -> void {
      if (b == blocks.size()) {
        std::vector<Int> lifted(profile.k(), 0);
        for (size_t i = 0; i < dim; ++i) lifted[i + 1] = assembled[i];
        canonical.insert(canonicalize(profile, lifted));
        return;
      }
      for (const std::vector<Int>& choice : per_block[b]) {
        std::copy(choice.begin(), choice.end(), assembled.begin() + blocks[b].first);
        self(self, b + 1);
      }
    };
    emit(emit, 0);
  }

  MinimizationResult result;
  result.minimum = best;
  result.minimizers.assign(canonical.begin(), canonical.end());
  result.stats.nodes = nodes;
  result.stats.initial_radius = radius;
  return result;
}

}  // namespace minchar
