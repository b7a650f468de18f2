#include "minchar/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

std::string fmt(const char* head, long a) {
  std::ostringstream out;
  out << head << "(" << a << ")";
  return out.str();
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long long powmod(unsigned long long base, unsigned long long exp, unsigned long long mod) {
  unsigned long long out = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

long smallest_primitive_root(long p) {
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long f : factors)
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// Three-valued conjunction for inherited flags.
std::optional<bool> both(const std::optional<bool>& a, const std::optional<bool>& b) {
  if ((a && !*a) || (b && !*b)) return false;
  if (a && *a && b && *b) return true;
  return std::nullopt;
}

void sort_rows_by_degree(CharacterTable& table) {
  std::stable_sort(table.values.begin(), table.values.end(),
                   [](const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
                     return x[0].as_integer() < y[0].as_integer();
                   });
}

}  // namespace

DegreeProfile CatalogEntry::profile() const {
  if (has_table()) return table().degree_profile();
  return profile_only();
}

const Annotations& CatalogEntry::notes() const {
  return has_table() ? table().notes : profile_only().notes;
}

CharacterTable cyclic(long n) {
  if (n < 1) throw InvalidParametersError("cyclic group needs n >= 1");
  CharacterTable t;
  t.name = fmt("cyclic", n);
  t.group_order = n;
  t.cyclotomic_order = n;
  for (long m = 0; m < n; ++m) {
    std::string label = m ? "g^" + std::to_string(m) : "1";
    t.classes.push_back({label, Int(1)});
  }
  t.values.assign(n, std::vector<Cyclotomic>(n));
  for (long j = 0; j < n; ++j)
    for (long m = 0; m < n; ++m) t.values[j][m] = Cyclotomic::zeta(n, j * m);
  t.notes.abelian = true;
  t.notes.nilpotent = true;
  if (n >= 2) {
    t.notes.expected_m = Int(n - 1);
    t.notes.provenance = "nilpotent difference formula";
  }
  return t;
}

CharacterTable dihedral(long n) {
  if (n < 3) throw InvalidParametersError("dihedral table needs n >= 3");
  CharacterTable t;
  t.name = fmt("dihedral", n);
  t.group_order = 2 * n;
  t.cyclotomic_order = n;
  const long half = n / 2;

  t.classes.push_back({"1", Int(1)});
  if (n % 2) {
    for (long m = 1; m <= (n - 1) / 2; ++m)
      t.classes.push_back({"r^" + std::to_string(m), Int(2)});
    t.classes.push_back({"s", Int(n)});

    std::vector<Cyclotomic> trivial(t.classes.size(), 1);
    std::vector<Cyclotomic> sign(t.classes.size(), 1);
    sign.back() = -1;
    t.values.push_back(trivial);
    t.values.push_back(sign);
    for (long j = 1; j <= (n - 1) / 2; ++j) {
      std::vector<Cyclotomic> row;
      row.push_back(2);
      for (long m = 1; m <= (n - 1) / 2; ++m)
        row.push_back(Cyclotomic::zeta(n, j * m) + Cyclotomic::zeta(n, -j * m));
      row.push_back(0);
      t.values.push_back(row);
    }
  } else {
    for (long m = 1; m < half; ++m)
      t.classes.push_back({"r^" + std::to_string(m), Int(2)});
    t.classes.push_back({"r^" + std::to_string(half), Int(1)});
    t.classes.push_back({"s", Int(half)});
    t.classes.push_back({"rs", Int(half)});
    const size_t k = t.classes.size();

    // Four linear characters indexed by the signs of r and s.
    for (int sr = 0; sr < 2; ++sr)
      for (int ss = 0; ss < 2; ++ss) {
        std::vector<Cyclotomic> row(k);
        row[0] = 1;
        for (long m = 1; m < half; ++m) row[m] = (sr && m % 2) ? -1 : 1;
        row[half] = (sr && half % 2) ? -1 : 1;
        row[k - 2] = ss ? -1 : 1;             // class of s
        row[k - 1] = (sr ^ ss) ? -1 : 1;      // class of rs
        t.values.push_back(row);
      }
    for (long j = 1; j < half; ++j) {
      std::vector<Cyclotomic> row(k);
      row[0] = 2;
      for (long m = 1; m < half; ++m)
        row[m] = Cyclotomic::zeta(n, j * m) + Cyclotomic::zeta(n, -j * m);
      row[half] = (j % 2) ? -2 : 2;
      row[k - 2] = 0;
      row[k - 1] = 0;
      t.values.push_back(row);
    }
  }

  t.notes.abelian = false;
  const bool two_power = (n & (n - 1)) == 0;
  t.notes.nilpotent = two_power;
  if (n % 2) {
    t.notes.expected_m = Int(n - 1);
    t.notes.provenance = "frobenius kernel count";
    t.notes.frobenius_kernel_order = Int(n);
  } else if (two_power) {
    t.notes.expected_m = Int(2 * n - 4);
    t.notes.provenance = "nilpotent difference formula";
  }
  return t;
}

CharacterTable frobenius_metacyclic(long p, long q) {
  if (!is_prime(p) || p < 3) throw InvalidParametersError("kernel order must be an odd prime");
  if (q < 2 || (p - 1) % q != 0)
    throw InvalidParametersError("complement order must divide p-1 and exceed 1");
  const long r = (p - 1) / q;
  const long g0 = smallest_primitive_root(p);
  const long u = static_cast<long>(powmod(g0, r, p));

  CharacterTable t;
  t.name = "frobenius(" + std::to_string(p) + "," + std::to_string(q) + ")";
  t.group_order = p * q;
  t.cyclotomic_order = std::lcm(p, q);

  // Kernel class representatives: one per orbit of the order-q action, the
  // coset representatives g0^i of the orbit subgroup in (Z/p)^*.
  std::vector<long> reps;
  for (long i = 0; i < r; ++i) reps.push_back(static_cast<long>(powmod(g0, i, p)));

  t.classes.push_back({"1", Int(1)});
  for (long e : reps) t.classes.push_back({"x^" + std::to_string(e), Int(q)});
  for (long m = 1; m < q; ++m) t.classes.push_back({"h^" + std::to_string(m), Int(p)});

  const size_t k = t.classes.size();
  for (long j = 0; j < q; ++j) {
    std::vector<Cyclotomic> row(k);
    for (size_t c = 0; c <= static_cast<size_t>(r); ++c) row[c] = 1;
    for (long m = 1; m < q; ++m)
      row[static_cast<size_t>(r + m)] = Cyclotomic::zeta(q, j * m);
    t.values.push_back(row);
  }
  for (long i = 0; i < r; ++i) {
    std::vector<Cyclotomic> row(k);
    for (size_t c = 0; c <= static_cast<size_t>(r); ++c) {
      const long a = (c == 0) ? 0 : reps[c - 1];
      std::vector<std::pair<Int, long>> terms;
      long orbit = reps[i];
      for (long j = 0; j < q; ++j) {
        terms.emplace_back(Int(1), orbit * a % p);
        orbit = orbit * u % p;
      }
      row[c] = Cyclotomic::from_terms(p, terms);
    }
    for (long m = 1; m < q; ++m) row[static_cast<size_t>(r + m)] = 0;
    t.values.push_back(row);
  }

  t.notes.abelian = false;
  t.notes.nilpotent = false;
  t.notes.expected_m = Int(p - 1);
  t.notes.provenance = "frobenius kernel count";
  t.notes.frobenius_kernel_order = Int(p);
  return t;
}

CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b) {
  CharacterTable t;
  t.name = a.name + "x" + b.name;
  t.group_order = a.group_order * b.group_order;
  t.cyclotomic_order = std::lcm(a.cyclotomic_order, b.cyclotomic_order);
  for (const ClassInfo& ca : a.classes)
    for (const ClassInfo& cb : b.classes)
      t.classes.push_back({"(" + ca.label + "," + cb.label + ")", ca.size * cb.size});
  for (size_t i = 0; i < a.k(); ++i)
    for (size_t j = 0; j < b.k(); ++j) {
      std::vector<Cyclotomic> row;
      row.reserve(t.classes.size());
      for (size_t ca = 0; ca < a.k(); ++ca)
        for (size_t cb = 0; cb < b.k(); ++cb) row.push_back(a.values[i][ca] * b.values[j][cb]);
      t.values.push_back(std::move(row));
    }
  sort_rows_by_degree(t);

  t.notes.abelian = both(a.notes.abelian, b.notes.abelian);
  t.notes.nilpotent = both(a.notes.nilpotent, b.notes.nilpotent);
  if (t.notes.nilpotent && *t.notes.nilpotent) {
    const Int top = t.values.back()[0].as_integer();
    t.notes.expected_m = t.group_order - top * top;
    t.notes.provenance = "nilpotent difference formula";
  }
  return t;
}

DegreeProfile extraspecial_profile(long p) {
  if (!is_prime(p)) throw InvalidParametersError("extraspecial profile needs a prime");
  DegreeProfile profile;
  profile.name = fmt("extraspecial", p);
  profile.group_order = Int(p) * p * p;
  for (long i = 0; i < p * p; ++i) profile.degrees.push_back(1);
  for (long i = 1; i < p; ++i) profile.degrees.push_back(p);
  profile.notes.abelian = false;
  profile.notes.nilpotent = true;
  profile.notes.expected_m = profile.group_order - Int(p) * p;
  profile.notes.provenance = "nilpotent difference formula";
  return profile;
}

namespace {

CharacterTable literal_table(const std::string& name, long order, long cyclo,
                             std::vector<ClassInfo> classes,
                             std::vector<std::vector<Cyclotomic>> values) {
  CharacterTable t;
  t.name = name;
  t.group_order = order;
  t.cyclotomic_order = cyclo;
  t.classes = std::move(classes);
  t.values = std::move(values);
  return t;
}

}  // namespace

CharacterTable builtin(const std::string& name) {
  if (name == "s3") {
    CharacterTable t = literal_table(
        "s3", 6, 1,
        {{"1", 1}, {"(123)", 2}, {"(12)", 3}},
        {{1, 1, 1}, {1, 1, -1}, {2, -1, 0}});
    t.notes.abelian = false;
    t.notes.nilpotent = false;
    t.notes.expected_m = 2;
    t.notes.provenance = "frobenius kernel count";
    t.notes.frobenius_kernel_order = 3;
    return t;
  }
  if (name == "s4") {
    CharacterTable t = literal_table(
        "s4", 24, 1,
        {{"1", 1}, {"(12)", 6}, {"(12)(34)", 3}, {"(123)", 8}, {"(1234)", 6}},
        {{1, 1, 1, 1, 1},
         {1, -1, 1, 1, -1},
         {2, 0, 2, -1, 0},
         {3, 1, -1, 0, -1},
         {3, -1, -1, 0, 1}});
    t.notes.abelian = false;
    t.notes.nilpotent = false;
    t.notes.expected_m = 8;
    t.notes.provenance = "exhaustive search";
    return t;
  }
  if (name == "a4") {
    const Cyclotomic w = Cyclotomic::zeta(3, 1);
    const Cyclotomic w2 = Cyclotomic::zeta(3, 2);
    CharacterTable t = literal_table(
        "a4", 12, 3,
        {{"1", 1}, {"(12)(34)", 3}, {"(123)", 4}, {"(132)", 4}},
        {{1, 1, 1, 1}, {1, 1, w, w2}, {1, 1, w2, w}, {3, -1, 0, 0}});
    t.notes.abelian = false;
    t.notes.nilpotent = false;
    t.notes.expected_m = 3;
    t.notes.provenance = "frobenius kernel count";
    t.notes.frobenius_kernel_order = 4;
    return t;
  }
  if (name == "q8") {
    // Same value matrix as dihedral(4), different group.
    CharacterTable t = literal_table(
        "q8", 8, 1,
        {{"1", 1}, {"-1", 1}, {"i", 2}, {"j", 2}, {"k", 2}},
        {{1, 1, 1, 1, 1},
         {1, 1, 1, -1, -1},
         {1, 1, -1, 1, -1},
         {1, 1, -1, -1, 1},
         {2, -2, 0, 0, 0}});
    t.notes.abelian = false;
    t.notes.nilpotent = true;
    t.notes.expected_m = 4;
    t.notes.provenance = "nilpotent difference formula";
    return t;
  }
  throw UnknownNameError("no builtin table named '" + name + "'");
}

namespace {

bool parse_long(const std::string& s, long* out) {
  if (s.empty()) return false;
  long v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    v = v * 10 + (ch - '0');
    if (v > 1000000) return false;
  }
  *out = v;
  return true;
}

// Everything except x-joined products.
CatalogEntry resolve_atom(const std::string& name) {
  long v = 0, w = 0;
  if (name.rfind("cyclic(", 0) == 0 && name.back() == ')' &&
      parse_long(name.substr(7, name.size() - 8), &v))
    return {name, cyclic(v)};
  if (name.size() > 1 && name[0] == 'c' && parse_long(name.substr(1), &v))
    return {name, cyclic(v)};
  if (name.rfind("dihedral(", 0) == 0 && name.back() == ')' &&
      parse_long(name.substr(9, name.size() - 10), &v))
    return {name, dihedral(v)};
  if (name.size() > 1 && name[0] == 'd' && parse_long(name.substr(1), &v))
    return {name, dihedral(v)};
  if (name.rfind("frobenius(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(10, name.size() - 11);
    const size_t comma = inner.find(',');
    if (comma != std::string::npos && parse_long(inner.substr(0, comma), &v) &&
        parse_long(inner.substr(comma + 1), &w))
      return {name, frobenius_metacyclic(v, w)};
  }
  if (name.rfind("extraspecial(", 0) == 0 && name.back() == ')' &&
      parse_long(name.substr(13, name.size() - 14), &v))
    return {name, extraspecial_profile(v)};
  if (name.rfind("es", 0) == 0 && parse_long(name.substr(2), &v))
    return {name, extraspecial_profile(v)};
  if (name == "v4") {
    CharacterTable t = direct_product(cyclic(2), cyclic(2));
    t.name = "v4";
    return {name, t};
  }
  if (name == "s3" || name == "s4" || name == "a4" || name == "q8") return {name, builtin(name)};
  throw UnknownNameError("cannot resolve catalog name '" + name + "'");
}

}  // namespace

CatalogEntry resolve(const std::string& name) {
  try {
    return resolve_atom(name);
  } catch (const UnknownNameError&) {
    if (name.find('x') == std::string::npos) throw;
  }
  std::vector<std::string> parts;
  std::string current;
  for (char ch : name) {
    if (ch == 'x') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  if (parts.size() < 2) throw UnknownNameError("cannot resolve catalog name '" + name + "'");

  CharacterTable acc;
  bool first = true;
  for (const std::string& part : parts) {
    CatalogEntry entry = resolve_atom(part);
    if (!entry.has_table())
      throw InvalidParametersError("profile-only entry '" + part + "' cannot enter a product");
    acc = first ? entry.table() : direct_product(acc, entry.table());
    first = false;
  }
  acc.name = name;
  return {name, acc};
}

std::vector<CatalogEntry> standard_catalog(const SurveyGrid& grid) {
  std::vector<CatalogEntry> out;
  for (long n : grid.cyclic) out.push_back({fmt("cyclic", n), cyclic(n)});
  for (long n : grid.dihedral) out.push_back({fmt("dihedral", n), dihedral(n)});
  for (auto [p, q] : grid.frobenius) {
    CharacterTable t = frobenius_metacyclic(p, q);
    out.push_back({t.name, t});
  }
  for (long p : grid.extraspecial) out.push_back({fmt("extraspecial", p), extraspecial_profile(p)});
  for (const std::string& name : grid.products) out.push_back(resolve(name));
  for (const std::string& name : grid.builtins) out.push_back({name, builtin(name)});
  return out;
}

bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const std::string na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      // Compare as numbers: longer digit run wins, then lexicographic.
      const std::string ta = na.substr(na.find_first_not_of('0') == std::string::npos
                                           ? na.size() - 1
                                           : na.find_first_not_of('0'));
      const std::string tb = nb.substr(nb.find_first_not_of('0') == std::string::npos
                                           ? nb.size() - 1
                                           : nb.find_first_not_of('0'));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

}  // namespace minchar
