#include "lagverify/irreducibility.hpp"

#include "lagverify/newton_polygon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lagverify {

PolynomialZ::PolynomialZ(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolynomialZ PolynomialZ::from_g1(const LaguerrePair& pair, std::int64_t cap) {
  return PolynomialZ(g1_coefficients(pair, cap));
}

PolynomialZ PolynomialZ::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<BigInt> coeffs;
  std::string tok;
  while (in >> tok) {
    try {
      coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("PolynomialZ::parse: bad coefficient '" + tok + "'");
    }
  }
  return PolynomialZ(std::move(coeffs));
}

BigInt PolynomialZ::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string PolynomialZ::str() const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += c[i].get_str();
  }
  return out;
}

PolynomialZ multiply(const PolynomialZ& a, const PolynomialZ& b) {
  if (a.is_zero() || b.is_zero()) return PolynomialZ{};
  std::vector<BigInt> out(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  }
  return PolynomialZ(std::move(out));
}

std::optional<PolynomialZ> divide_exact(const PolynomialZ& f, const PolynomialZ& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (f.is_zero()) return PolynomialZ{};
  const std::int64_t df = f.degree();
  const std::int64_t dg = divisor.degree();
  if (df < dg) return std::nullopt;
  std::vector<BigInt> rem = f.c;
  std::vector<BigInt> quot(static_cast<std::size_t>(df - dg) + 1);
  for (std::int64_t k = df - dg; k >= 0; --k) {
    BigInt& lead = rem[static_cast<std::size_t>(k + dg)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), divisor.leading().get_mpz_t())) return std::nullopt;
    BigInt q = lead / divisor.leading();
    quot[static_cast<std::size_t>(k)] = q;
    for (std::int64_t i = 0; i <= dg; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * divisor.c[static_cast<std::size_t>(i)];
    }
  }
  for (const BigInt& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return PolynomialZ(std::move(quot));
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x]. Primes stay far below 2^31 so schoolbook products
// accumulate in 64 bits with a single reduction per output coefficient.

namespace {

struct PolyFp {
  std::vector<std::uint64_t> c;  // ascending, normalized
  std::uint64_t p = 2;

  std::int64_t degree() const { return static_cast<std::int64_t>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

PolyFp reduce_mod_p(const PolynomialZ& f, std::uint64_t p) {
  PolyFp out;
  out.p = p;
  out.c.resize(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    out.c[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), static_cast<unsigned long>(p));
  }
  out.trim();
  return out;
}

void make_monic(PolyFp& f) {
  if (f.is_zero() || f.c.back() == 1) return;
  std::uint64_t inv = inv_mod(f.c.back(), f.p);
  for (auto& x : f.c) x = x * inv % f.p;
}

PolyFp mul(const PolyFp& a, const PolyFp& b) {
  PolyFp out;
  out.p = a.p;
  if (a.is_zero() || b.is_zero()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t k = 0; k < out.c.size(); ++k) {
    std::uint64_t acc = 0;
    std::size_t lo = k >= b.c.size() - 1 ? k - (b.c.size() - 1) : 0;
    std::size_t hi = std::min(k, a.c.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) acc += a.c[i] * b.c[k - i] % a.p;
    out.c[k] = acc % a.p;
  }
  out.trim();
  return out;
}

PolyFp mod(const PolyFp& f, const PolyFp& g) {
  PolyFp r = f;
  r.trim();
  if (g.is_zero()) throw std::invalid_argument("PolyFp mod: zero modulus");
  std::uint64_t inv = inv_mod(g.c.back(), g.p);
  while (!r.is_zero() && r.degree() >= g.degree()) {
    std::uint64_t q = r.c.back() * inv % g.p;
    std::size_t shift = r.c.size() - g.c.size();
    if (q != 0) {
      for (std::size_t i = 0; i < g.c.size(); ++i) {
        std::uint64_t sub = q * g.c[i] % g.p;
        std::uint64_t& tgt = r.c[shift + i];
        tgt = (tgt + g.p - sub) % g.p;
      }
    }
    r.c.pop_back();
    r.trim();
  }
  return r;
}

PolyFp gcd(PolyFp a, PolyFp b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    PolyFp r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

PolyFp derivative(const PolyFp& f) {
  PolyFp out;
  out.p = f.p;
  if (f.c.size() <= 1) return out;
  out.c.resize(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) out.c[i - 1] = f.c[i] * (i % f.p) % f.p;
  out.trim();
  return out;
}

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& m) {
  PolyFp result;
  result.p = base.p;
  result.c = {1};
  PolyFp b = mod(base, m);
  while (e) {
    if (e & 1) result = mod(mul(result, b), m);
    b = mod(mul(b, b), m);
    e >>= 1;
  }
  return result;
}

PolyFp x_poly(std::uint64_t p) {
  PolyFp x;
  x.p = p;
  x.c = {0, 1};
  return x;
}

std::optional<PolyFp> divide_fp(const PolyFp& f, const PolyFp& g) {
  PolyFp r = f;
  PolyFp q;
  q.p = f.p;
  if (f.degree() < g.degree()) return std::nullopt;
  q.c.assign(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
  std::uint64_t inv = inv_mod(g.c.back(), g.p);
  while (!r.is_zero() && r.degree() >= g.degree()) {
    std::uint64_t coef = r.c.back() * inv % g.p;
    std::size_t shift = r.c.size() - g.c.size();
    q.c[shift] = coef;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      std::uint64_t sub = coef * g.c[i] % g.p;
      std::uint64_t& tgt = r.c[shift + i];
      tgt = (tgt + g.p - sub) % g.p;
    }
    r.c.pop_back();
    r.trim();
  }
  if (!r.is_zero()) return std::nullopt;
  q.trim();
  return q;
}

std::uint64_t eval_fp(const PolyFp& f, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = (acc * x + *it) % f.p;
  return acc;
}

std::vector<std::uint64_t> roots_mod_p(const PolyFp& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < f.p; ++r) {
    if (eval_fp(f, r) == 0) out.push_back(r);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::int64_t>& certifier_prime_ladder() {
  static const std::vector<std::int64_t> ladder = [] {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 10007; out.size() < 256; ++p) {
      if (is_prime_int(p)) out.push_back(p);
    }
    return out;
  }();
  return ladder;
}

std::optional<std::vector<int>> modp_degree_multiset(const PolynomialZ& f, std::int64_t p) {
  if (f.is_zero()) throw std::invalid_argument("modp_degree_multiset: zero polynomial");
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p))) {
    return std::nullopt;  // bad prime: degree would drop
  }
  PolyFp fp = reduce_mod_p(f, static_cast<std::uint64_t>(p));
  make_monic(fp);
  if (fp.degree() < 1) return std::vector<int>{};
  PolyFp d = derivative(fp);
  if (d.is_zero() || gcd(fp, d).degree() != 0) return std::nullopt;  // bad prime: not squarefree

  std::vector<int> degrees;
  PolyFp rem = fp;
  PolyFp h = x_poly(fp.p);
  for (std::int64_t d_deg = 1; 2 * d_deg <= rem.degree(); ++d_deg) {
    h = powmod(h, fp.p, rem);
    PolyFp diff = h;
    // diff = h - x
    if (diff.c.size() < 2) diff.c.resize(2, 0);
    diff.c[1] = (diff.c[1] + fp.p - 1) % fp.p;
    diff.trim();
    PolyFp g = gcd(rem, diff);
    if (g.degree() > 0) {
      for (std::int64_t i = 0; i < g.degree() / d_deg; ++i)
        degrees.push_back(static_cast<int>(d_deg));
      auto q = divide_fp(rem, g);
      rem = std::move(*q);
      h = mod(h, rem);
    }
  }
  if (rem.degree() > 0) degrees.push_back(static_cast<int>(rem.degree()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<char> subset_sums(const std::vector<int>& multiset, std::int64_t degree) {
  std::vector<char> dp(static_cast<std::size_t>(degree) + 1, 0);
  dp[0] = 1;
  for (int d : multiset) {
    for (std::int64_t i = degree; i >= d; --i) {
      if (dp[static_cast<std::size_t>(i - d)]) dp[static_cast<std::size_t>(i)] = 1;
    }
  }
  return dp;
}

// ---------------------------------------------------------------------------

namespace {

// Divisors of |v| when v factors completely over primes below the trial
// bound and the divisor count stays sane; empty optional otherwise.
std::optional<std::vector<BigInt>> bounded_divisors(const BigInt& value, std::size_t max_count) {
  BigInt v = abs(value);
  std::vector<std::pair<BigInt, int>> fact;
  for (std::int64_t p = 2; p < 1'000'000 && v > 1; p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    int e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    fact.emplace_back(BigInt(static_cast<long>(p)), e);
  }
  if (v > 1) {
    if (v < BigInt("1000000000000")) {
      // remaining cofactor below (10^6)^2 is prime
      fact.emplace_back(v, 1);
    } else {
      return std::nullopt;
    }
  }
  std::size_t count = 1;
  for (auto& [p, e] : fact) {
    count *= static_cast<std::size_t>(e) + 1;
    if (count > max_count) return std::nullopt;
  }
  std::vector<BigInt> divisors{1};
  for (auto& [p, e] : fact) {
    std::size_t base = divisors.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// CRT lift of per-prime root residues up to twice the Cauchy root bound,
// then exact verification by evaluation.
std::vector<BigInt> roots_by_crt(const PolynomialZ& f) {
  // Root bound for any rational root r of f: |r| <= 1 + max |c_j / c_deg|.
  BigInt maxc = 0;
  for (const BigInt& coef : f.c) {
    BigInt a = abs(coef);
    if (a > maxc) maxc = a;
  }
  BigInt bound = 1 + maxc / abs(f.leading()) + 1;

  struct Cand {
    BigInt residue;
    bool alive = true;
  };
  BigInt modulus = 0;
  std::vector<BigInt> residues;
  constexpr std::size_t kCandidateCap = 100'000;

  for (std::int64_t p : certifier_prime_ladder()) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    PolyFp fp = reduce_mod_p(f, static_cast<std::uint64_t>(p));
    std::vector<std::uint64_t> roots = roots_mod_p(fp);
    if (roots.empty()) return {};  // no roots mod a good prime: no integer roots
    if (modulus == 0) {
      for (auto r : roots) residues.emplace_back(static_cast<unsigned long>(r));
      modulus = static_cast<long>(p);
    } else {
      std::vector<BigInt> next;
      BigInt m_inv(static_cast<unsigned long>(
          inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p)),
                  static_cast<std::uint64_t>(p))));
      for (const BigInt& r : residues) {
        std::uint64_t r_mod_p = mpz_fdiv_ui(r.get_mpz_t(), static_cast<unsigned long>(p));
        for (auto a : roots) {
          // candidate = r + modulus * ((a - r) * modulus^-1 mod p)
          std::uint64_t delta = (a + p - r_mod_p) % static_cast<std::uint64_t>(p);
          BigInt t = BigInt(static_cast<unsigned long>(delta)) * m_inv;
          t = t % static_cast<long>(p);
          next.push_back(r + modulus * t);
        }
      }
      if (next.size() > kCandidateCap) {
        throw std::runtime_error("integer_roots: CRT candidate budget exhausted");
      }
      residues = std::move(next);
      modulus *= static_cast<long>(p);
    }
    if (modulus > 2 * bound) break;
  }
  if (modulus <= 2 * bound) {
    throw std::runtime_error("integer_roots: prime ladder exhausted before covering root bound");
  }

  std::vector<BigInt> out;
  for (BigInt r : residues) {
    if (r > modulus / 2) r -= modulus;  // symmetric representative
    if (f(r) == 0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<BigInt> integer_roots(const PolynomialZ& f) {
  if (f.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  std::vector<BigInt> out;

  // Strip powers of x.
  std::size_t trailing = 0;
  while (trailing < f.c.size() && f.c[trailing] == 0) ++trailing;
  PolynomialZ g = f;
  if (trailing > 0) {
    out.emplace_back(0);
    g = PolynomialZ(std::vector<BigInt>(f.c.begin() + static_cast<std::ptrdiff_t>(trailing),
                                        f.c.end()));
  }
  if (g.degree() < 1) return out;

  if (auto divisors = bounded_divisors(g.c[0], 4096)) {
    for (const BigInt& d : *divisors) {
      if (g(d) == 0) out.push_back(d);
      BigInt neg = -d;
      if (g(neg) == 0) out.push_back(neg);
    }
  } else {
    std::vector<BigInt> crt_roots = roots_by_crt(g);
    out.insert(out.end(), crt_roots.begin(), crt_roots.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible:
      return "irreducible";
    case Verdict::Reducible:
      return "reducible";
    case Verdict::Unresolved:
      return "unresolved";
  }
  return "?";
}

const char* to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::DegreeOne:
      return "degree-one";
    case EvidenceKind::NegativeDiscriminant:
      return "negative-discriminant";
    case EvidenceKind::DegreePattern:
      return "degree-pattern-intersection";
    case EvidenceKind::NewtonExclusion:
      return "newton-exclusion";
    case EvidenceKind::ExplicitFactor:
      return "explicit-factor";
    case EvidenceKind::None:
      return "none";
  }
  return "?";
}

namespace {

bool attach_verified_factor(IrredCertificate& cert, const PolynomialZ& f,
                            const PolynomialZ& candidate) {
  if (!divide_exact(f, candidate)) return false;
  cert.verdict = Verdict::Reducible;
  cert.evidence = EvidenceKind::ExplicitFactor;
  cert.factor = candidate;
  return true;
}

PolynomialZ linear_from_root(const BigInt& root) {
  return PolynomialZ({-root, BigInt(1)});
}

bool only_trivial(const std::vector<char>& achievable, std::int64_t n) {
  for (std::int64_t d = 1; d < n; ++d) {
    if (achievable[static_cast<std::size_t>(d)]) return false;
  }
  return true;
}

}  // namespace

IrredCertificate certify(const PolynomialZ& f, int budget) {
  if (f.is_zero() || f.degree() < 1) {
    throw std::invalid_argument("certify: need a polynomial of degree >= 1");
  }
  IrredCertificate cert;
  const std::int64_t n = f.degree();

  if (n == 1) {
    cert.verdict = Verdict::Irreducible;
    cert.evidence = EvidenceKind::DegreeOne;
    return cert;
  }

  if (n == 2) {
    BigInt disc = f.c[1] * f.c[1] - 4 * f.c[2] * f.c[0];
    if (disc < 0) {
      cert.verdict = Verdict::Irreducible;
      cert.evidence = EvidenceKind::NegativeDiscriminant;
      return cert;
    }
    if (auto m = is_perfect_square(disc)) {
      for (int sign : {+1, -1}) {
        BigInt num = -f.c[1] + sign * *m;
        BigInt den = 2 * f.c[2];
        BigInt g = gcd(num, den);
        if (g != 0) {
          num /= g;
          den /= g;
        }
        if (den < 0) {
          num = -num;
          den = -den;
        }
        PolynomialZ candidate({-num, den});  // den*x - num, root num/den
        if (attach_verified_factor(cert, f, candidate)) return cert;
      }
    }
  }

  std::vector<char> achievable(static_cast<std::size_t>(n) + 1, 1);

  std::vector<BigInt> roots = integer_roots(f);
  if (!roots.empty()) {
    if (attach_verified_factor(cert, f, linear_from_root(roots.front()))) return cert;
  }
  cert.no_integer_roots = true;
  if (f.is_monic() && n >= 2) {
    // A degree-1 or degree-(n-1) factor of a monic polynomial forces an
    // integer root.
    achievable[1] = 0;
    achievable[static_cast<std::size_t>(n - 1)] = 0;
  }

  int good = 0;
  for (std::int64_t p : certifier_prime_ladder()) {
    if (good >= budget) break;
    auto multiset = modp_degree_multiset(f, p);
    if (!multiset) continue;
    ++good;
    cert.primes_used.push_back(p);
    cert.degree_multisets.push_back(*multiset);
    std::vector<char> sums = subset_sums(*multiset, n);
    for (std::int64_t d = 0; d <= n; ++d) {
      if (!sums[static_cast<std::size_t>(d)]) achievable[static_cast<std::size_t>(d)] = 0;
    }
    if (only_trivial(achievable, n)) break;
  }
  if (only_trivial(achievable, n)) {
    cert.verdict = Verdict::Irreducible;
    cert.evidence = EvidenceKind::DegreePattern;
    return cert;
  }

  // Polygon windows as a tie-breaker for leftover middle degrees: primes
  // dividing both c_0 and c_1 but not the leading coefficient.
  if (f.c[0] != 0 && f.c.size() >= 2) {
    constexpr std::int64_t kSentinel = std::numeric_limits<std::int64_t>::max() / 4;
    BigInt g01 = gcd(f.c[0], f.c[1]);
    for (std::int64_t q = 2; q < 1000; q += (q == 2 ? 1 : 2)) {
      if (!is_prime_int(q)) continue;
      if (!mpz_divisible_ui_p(g01.get_mpz_t(), static_cast<unsigned long>(q))) continue;
      if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(q))) continue;
      ValuationProfile profile;
      profile.p = q;
      profile.n = n;
      profile.values.resize(static_cast<std::size_t>(n) + 1);
      for (std::int64_t j = 0; j <= n; ++j) {
        const BigInt& coef = f.c[static_cast<std::size_t>(j)];
        profile.values[static_cast<std::size_t>(j)] =
            coef == 0 ? kSentinel : nu_bigint(q, coef);
      }
      ExclusionWindow window = strongest_exclusion(profile);
      if (window.k_max > window.l_min) {
        cert.np_exclusions.push_back(NewtonExclusionNote{q, window.l_min, window.k_max});
        for (std::int64_t d = window.l_min + 1; d <= window.k_max; ++d) {
          achievable[static_cast<std::size_t>(d)] = 0;
          achievable[static_cast<std::size_t>(n - d)] = 0;
        }
        if (only_trivial(achievable, n)) break;
      }
    }
    if (only_trivial(achievable, n)) {
      cert.verdict = Verdict::Irreducible;
      cert.evidence = EvidenceKind::NewtonExclusion;
      return cert;
    }
  }

  cert.verdict = Verdict::Unresolved;
  cert.evidence = EvidenceKind::None;
  for (std::int64_t d = 1; d < n; ++d) {
    if (achievable[static_cast<std::size_t>(d)]) cert.unresolved_degrees.push_back(d);
  }
  return cert;
}

}  // namespace lagverify
