#include "intpoly.hpp"

#include <algorithm>
#include <unordered_map>

#include "invol/error.hpp"

namespace invol::detail {
namespace {

static_assert(GMP_NAIL_BITS == 0, "limb-level packing assumes no nail bits");
constexpr unsigned kLimbBits = GMP_NUMB_BITS;

constexpr std::size_t kKroneckerMinWork = 4096;  // |a| * |b| below this: schoolbook
constexpr std::size_t kMaxGridCells = 1u << 22;

// Dense accumulator over [0, ni) x [0, nj).
class Grid {
 public:
  Grid(std::uint32_t max_i, std::uint32_t max_j)
      : stride_(std::size_t(max_j) + 1), cells_((std::size_t(max_i) + 1) * stride_) {}

  mpz_class& at(std::uint32_t i, std::uint32_t j) { return cells_[i * stride_ + j]; }

  IntPoly drain() {
    IntPoly out;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (sgn(cells_[k]) == 0) continue;
      const auto i = static_cast<std::uint32_t>(k / stride_);
      const auto j = static_cast<std::uint32_t>(k % stride_);
      out.max_i = std::max(out.max_i, i);
      out.max_j = std::max(out.max_j, j);
      out.terms.push_back({i, j, std::move(cells_[k])});
    }
    return out;
  }

 private:
  std::size_t stride_;
  std::vector<mpz_class> cells_;
};

bool grid_fits(std::uint64_t max_i, std::uint64_t max_j) {
  return (max_i + 1) * (max_j + 1) <= kMaxGridCells;
}

IntPoly drain_map(std::unordered_map<std::uint64_t, mpz_class>& acc) {
  IntPoly out;
  for (auto& [key, c] : acc) {
    if (sgn(c) == 0) continue;
    const auto i = static_cast<std::uint32_t>(key >> 32);
    const auto j = static_cast<std::uint32_t>(key & 0xffffffffu);
    out.max_i = std::max(out.max_i, i);
    out.max_j = std::max(out.max_j, j);
    out.terms.push_back({i, j, std::move(c)});
  }
  return out;
}

std::uint64_t key(std::uint32_t i, std::uint32_t j) { return (std::uint64_t(i) << 32) | j; }

IntPoly schoolbook(const IntPoly& a, const IntPoly& b) {
  const std::uint64_t mi = std::uint64_t(a.max_i) + b.max_i, mj = std::uint64_t(a.max_j) + b.max_j;
  if (grid_fits(mi, mj) && (mi + 1) * (mj + 1) <= 8 * a.size() * b.size() + 4096) {
    Grid g(static_cast<std::uint32_t>(mi), static_cast<std::uint32_t>(mj));
    for (const auto& s : a.terms)
      for (const auto& t : b.terms)
        mpz_addmul(g.at(s.i + t.i, s.j + t.j).get_mpz_t(), s.c.get_mpz_t(), t.c.get_mpz_t());
    return g.drain();
  }
  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms)
      mpz_addmul(acc[key(s.i + t.i, s.j + t.j)].get_mpz_t(), s.c.get_mpz_t(), t.c.get_mpz_t());
  return drain_map(acc);
}

std::size_t max_bits(const IntPoly& p) {
  std::size_t b = 0;
  for (const auto& t : p.terms) b = std::max(b, mpz_sizeinbase(t.c.get_mpz_t(), 2));
  return b;
}

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n > 0) {
    ++b;
    n >>= 1;
  }
  return b;
}

// OR the magnitude of c into limbs at bit offset `off`. Fields never overlap.
void place(std::vector<mp_limb_t>& limbs, std::size_t off, const mpz_class& c) {
  const std::size_t word = off / kLimbBits, shift = off % kLimbBits;
  const std::size_t n = mpz_size(c.get_mpz_t());
  for (std::size_t t = 0; t < n; ++t) {
    const mp_limb_t v = mpz_getlimbn(c.get_mpz_t(), static_cast<mp_size_t>(t));
    limbs[word + t] |= v << shift;
    if (shift != 0) limbs[word + t + 1] |= v >> (kLimbBits - shift);
  }
}

mpz_class from_limbs(const std::vector<mp_limb_t>& limbs) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), limbs.size(), -1, sizeof(mp_limb_t), 0, 0, limbs.data());
  return z;
}

// sum_k c_k 2^(s k) with k = i * stride + j.
mpz_class pack(const IntPoly& p, std::size_t stride, std::size_t s, std::size_t slots) {
  const std::size_t nlimbs = (slots * s) / kLimbBits + 2;
  std::vector<mp_limb_t> pos(nlimbs, 0), neg(nlimbs, 0);
  bool any_neg = false;
  for (const auto& t : p.terms) {
    const std::size_t off = (std::size_t(t.i) * stride + t.j) * s;
    if (sgn(t.c) < 0) {
      place(neg, off, t.c);
      any_neg = true;
    } else {
      place(pos, off, t.c);
    }
  }
  mpz_class z = from_limbs(pos);
  if (any_neg) z -= from_limbs(neg);
  return z;
}

// Inverse of pack for a value whose digits lie in (-2^(s-1), 2^(s-1)).
IntPoly unpack(mpz_class z, std::size_t stride, std::size_t s, std::size_t slots) {
  const bool negative = sgn(z) < 0;
  if (negative) z = -z;
  const mp_limb_t* src = mpz_limbs_read(z.get_mpz_t());
  const std::size_t size = mpz_size(z.get_mpz_t());
  auto limb = [&](std::size_t k) -> mp_limb_t { return k < size ? src[k] : 0; };

  const std::size_t width = (s + kLimbBits - 1) / kLimbBits;
  const mp_limb_t top_mask =
      s % kLimbBits == 0 ? ~mp_limb_t(0) : (mp_limb_t(1) << (s % kLimbBits)) - 1;
  mpz_class half, full, digit;
  mpz_setbit(full.get_mpz_t(), s);
  mpz_setbit(half.get_mpz_t(), s - 1);
  bool carry = false;

  IntPoly out;
  std::vector<mp_limb_t> buf(width);
  for (std::size_t k = 0; k < slots; ++k) {
    const std::size_t off = k * s, word = off / kLimbBits, shift = off % kLimbBits;
    if (word >= size && !carry) break;
    for (std::size_t t = 0; t < width; ++t) {
      mp_limb_t v = limb(word + t) >> shift;
      if (shift != 0) v |= limb(word + t + 1) << (kLimbBits - shift);
      buf[t] = v;
    }
    buf[width - 1] &= top_mask;
    mpz_import(digit.get_mpz_t(), width, -1, sizeof(mp_limb_t), 0, 0, buf.data());
    if (carry) digit += 1;
    carry = digit >= half;
    if (carry) digit -= full;
    if (sgn(digit) == 0) continue;
    if (negative) digit = -digit;
    const auto i = static_cast<std::uint32_t>(k / stride);
    const auto j = static_cast<std::uint32_t>(k % stride);
    out.max_i = std::max(out.max_i, i);
    out.max_j = std::max(out.max_j, j);
    out.terms.push_back({i, j, digit});
  }
  ensure(!carry, "Kronecker unpacking overflowed");
  return out;
}

IntPoly kronecker(const IntPoly& a, const IntPoly& b) {
  const std::size_t stride = std::size_t(a.max_j) + b.max_j + 1;
  const std::size_t slots = (std::size_t(a.max_i) + b.max_i) * stride + a.max_j + b.max_j + 1;
  // |coefficient| < min(|a|, |b|) * 2^(bits a + bits b); one bit for the sign.
  const std::size_t s =
      max_bits(a) + max_bits(b) + bit_length(std::min(a.size(), b.size())) + 2;
  const mpz_class za = pack(a, stride, s, slots);
  const mpz_class zb = &a == &b ? za : pack(b, stride, s, slots);
  return unpack(za * zb, stride, s, slots);
}

}  // namespace

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly p;
  if (sgn(c) != 0) p.terms.push_back({0, 0, c});
  return p;
}

IntForm integer_form(const Poly& p) {
  IntForm f;
  for (const auto& t : p.terms())
    mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), t.c.get_den_mpz_t());
  f.num.terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c = t.c.get_num() * (f.den / t.c.get_den());
    f.num.terms.push_back({t.m.i, t.m.j, std::move(c)});
    f.num.max_i = std::max(f.num.max_i, t.m.i);
    f.num.max_j = std::max(f.num.max_j, t.m.j);
  }
  return f;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t work = std::uint64_t(a.size()) * b.size();
  if (work < kKroneckerMinWork || a.size() == 1 || b.size() == 1) return schoolbook(a, b);
  // Sparse inputs with far-apart exponents would pack mostly empty slots.
  const std::uint64_t slots =
      (std::uint64_t(a.max_i) + b.max_i + 1) * (std::uint64_t(a.max_j) + b.max_j + 1);
  if (slots > 4 * work) return schoolbook(a, b);
  return kronecker(a, b);
}

IntPoly linear_combination(const std::vector<std::pair<const IntPoly*, mpz_class>>& parts) {
  std::uint32_t mi = 0, mj = 0;
  std::size_t total = 0;
  for (const auto& [p, f] : parts) {
    mi = std::max(mi, p->max_i);
    mj = std::max(mj, p->max_j);
    total += p->size();
  }
  if (grid_fits(mi, mj) && (std::uint64_t(mi) + 1) * (mj + 1) <= 8 * total + 4096) {
    Grid g(mi, mj);
    for (const auto& [p, f] : parts)
      for (const auto& t : p->terms) mpz_addmul(g.at(t.i, t.j).get_mpz_t(), f.get_mpz_t(), t.c.get_mpz_t());
    return g.drain();
  }
  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(total);
  for (const auto& [p, f] : parts)
    for (const auto& t : p->terms) mpz_addmul(acc[key(t.i, t.j)].get_mpz_t(), f.get_mpz_t(), t.c.get_mpz_t());
  return drain_map(acc);
}

std::vector<Poly::Term> to_terms(const IntPoly& p, const mpz_class& den) {
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms) {
    Rat r(t.c, den);
    r.canonicalize();
    out.push_back({{t.i, t.j}, std::move(r)});
  }
  std::sort(out.begin(), out.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.m > b.m; });
  return out;
}

std::vector<Poly::Term> product(const Poly& p, const Poly& q) {
  const IntForm a = integer_form(p), b = integer_form(q);
  return to_terms(multiply(a.num, b.num), a.den * b.den);
}

// With px = X / dx, py = Y / dy and L = lcm(den c) dx^I dy^J:
//   L p(px, py) = sum_i X^i sum_j e_ij Y^j,
//   e_ij = c_ij lcm(den c) dx^(I-i) dy^(J-j).
std::vector<Poly::Term> substitute(const Poly& p, const Poly& px, const Poly& py) {
  std::uint32_t I = 0, J = 0;
  mpz_class lcm_den = 1;
  for (const auto& t : p.terms()) {
    I = std::max(I, t.m.i);
    J = std::max(J, t.m.j);
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.c.get_den_mpz_t());
  }
  const IntForm X = integer_form(px), Y = integer_form(py);
  std::vector<mpz_class> dx_pow{1}, dy_pow{1};
  for (std::uint32_t k = 0; k < I; ++k) dx_pow.push_back(dx_pow.back() * X.den);
  for (std::uint32_t k = 0; k < J; ++k) dy_pow.push_back(dy_pow.back() * Y.den);

  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> rows(I + 1);
  std::vector<bool> needed(J + 1, false);
  for (const auto& t : p.terms()) {
    mpz_class e = t.c.get_num() * (lcm_den / t.c.get_den()) * dx_pow[I - t.m.i] * dy_pow[J - t.m.j];
    rows[t.m.i].push_back({t.m.j, std::move(e)});
    needed[t.m.j] = true;
  }

  std::vector<IntPoly> y_pow(J + 1);
  y_pow[0] = IntPoly::constant(1);
  for (std::uint32_t k = 1; k <= J; ++k) y_pow[k] = multiply(y_pow[k - 1], Y.num);

  IntPoly acc;
  for (std::uint32_t i = I + 1; i-- > 0;) {
    if (i < I) acc = multiply(acc, X.num);
    if (rows[i].empty()) continue;
    std::vector<std::pair<const IntPoly*, mpz_class>> parts;
    parts.reserve(rows[i].size() + 1);
    parts.push_back({&acc, mpz_class(1)});
    for (const auto& [j, e] : rows[i]) parts.push_back({&y_pow[j], e});
    acc = linear_combination(parts);
  }
  return to_terms(acc, lcm_den * dx_pow[I] * dy_pow[J]);
}

}  // namespace invol::detail
