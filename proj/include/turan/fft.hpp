#pragma once

// Discrete Fourier transform of arbitrary length
//
//   X[k] = sum_{j<n} x[j] e(sign * j * k / n),   sign = +1 or -1,
//
// without normalization. Lengths are factored into radix-4/2 stages, generic
// butterflies for small odd primes, and Bluestein chirp-z sub-transforms for
// prime factors above kMaxDirectRadix. Stages run as a Stockham autosort
// (decimation in frequency), so no bit reversal is needed and the output is in
// natural order. The transform length is never padded.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "turan/errors.hpp"
#include "turan/numtheory.hpp"
#include "turan/unit.hpp"

namespace turan::fft {

inline constexpr std::size_t kMaxDirectRadix = 32;

namespace detail {
// Plain complex product; skips the NaN/inf recovery path of operator*.
inline cplx cmul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}
}  // namespace detail

/// e(sign * j / n) for j in [0, n) from two short tables (coarse * fine),
/// so only about 2*sqrt(n) sin/cos evaluations are needed.
class RootTable {
 public:
  RootTable(std::size_t n, int sign) : n_(n) {
    while ((std::size_t{1} << (2 * shift_)) < n) ++shift_;
    const std::size_t block = std::size_t{1} << shift_;
    mask_ = block - 1;
    fine_.resize(block);
    coarse_.resize(n / block + 1);
    for (std::size_t i = 0; i < block; ++i) fine_[i] = oriented(unit_root(i, n), sign);
    for (std::size_t i = 0; i < coarse_.size(); ++i) coarse_[i] = oriented(unit_root(i * block, n), sign);
  }

  /// Requires j < n.
  cplx operator()(std::size_t j) const { return detail::cmul(coarse_[j >> shift_], fine_[j & mask_]); }

  std::size_t size() const noexcept { return n_; }

 private:
  static cplx oriented(cplx z, int sign) { return sign > 0 ? z : std::conj(z); }

  std::size_t n_;
  std::size_t shift_ = 0;
  std::size_t mask_ = 0;
  std::vector<cplx> fine_;
  std::vector<cplx> coarse_;
};

class Plan;

/// Length-n DFT through a power-of-two cyclic convolution.
class Bluestein {
 public:
  Bluestein(std::size_t n, int sign);

  std::size_t size() const noexcept { return n_; }
  std::size_t work_size() const noexcept { return 2 * padded_; }

  /// In-place transform of `data` (length n); `work` needs work_size() slots.
  void transform(std::span<cplx> data, std::span<cplx> work) const;

 private:
  std::size_t n_;
  std::size_t padded_;
  std::vector<cplx> chirp_;
  std::vector<cplx> kernel_hat_;
  std::shared_ptr<const Plan> forward_;
  std::shared_ptr<const Plan> backward_;
};

class Plan {
 public:
  Plan(std::size_t n, int sign) : n_(n), sign_(sign > 0 ? 1 : -1) {
    if (n == 0) throw domain_error("fft::Plan: length must be positive");
    const RootTable roots(n, sign_);
    std::size_t rest = n;
    std::vector<std::size_t> large;
    std::vector<std::size_t> small;
    for (auto f : prime_factors(n)) {
      while (rest % f == 0) {
        rest /= f;
        (f > kMaxDirectRadix ? large : small).push_back(f);
      }
    }
    // Large primes first, then factors of two paired into radix-4 stages.
    std::vector<std::size_t> radices(large.begin(), large.end());
    const auto twos = static_cast<std::size_t>(std::count(small.begin(), small.end(), std::size_t{2}));
    for (std::size_t i = 0; i < twos / 2; ++i) radices.push_back(4);
    if (twos % 2) radices.push_back(2);
    for (auto f : small)
      if (f != 2) radices.push_back(f);

    std::size_t length = n;
    std::size_t stride = 1;
    for (auto r : radices) {
      Stage st;
      st.radix = r;
      st.length = length;
      st.stride = stride;
      const std::size_t m = length / r;
      // twiddle e(sign p u / length) is the full-length root at p u stride.
      st.twiddles.resize(m * (r - 1));
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t u = 1; u < r; ++u) st.twiddles[p * (r - 1) + u - 1] = roots(p * u * stride);
      if (r != 2 && r != 4) {
        st.unit.resize(r);
        for (std::size_t k = 0; k < r; ++k) st.unit[k] = sign_ > 0 ? unit_root(k, r) : std::conj(unit_root(k, r));
        work_size_ = std::max(work_size_, r);
      }
      if (r > kMaxDirectRadix) {
        st.bluestein = std::make_shared<const Bluestein>(r, sign_);
        work_size_ = std::max(work_size_, st.bluestein->work_size() + r);
      }
      stages_.push_back(std::move(st));
      length /= r;
      stride *= r;
    }
  }

  std::size_t size() const noexcept { return n_; }
  int sign() const noexcept { return sign_; }

  /// Scratch slots execute_inplace() needs besides the data.
  std::size_t scratch_size() const noexcept { return n_ + work_size_; }

  /// In-place transform; `scratch` needs scratch_size() slots.
  void execute_inplace(std::span<cplx> data, std::span<cplx> scratch) const {
    if (data.size() != n_ || scratch.size() < scratch_size())
      throw domain_error("fft::Plan::execute_inplace: size mismatch");
    cplx* x = data.data();
    cplx* y = scratch.data();
    const auto work = scratch.subspan(n_, work_size_);
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      run_stage(stages_[i], x, y, work, i == 0);
      std::swap(x, y);
    }
    if (x != data.data()) std::copy(x, x + n_, data.data());
  }

  /// out = DFT(in); spans must both have size() elements and may alias.
  void execute(std::span<const cplx> in, std::span<cplx> out) const {
    if (in.size() != n_ || out.size() != n_) throw domain_error("fft::Plan::execute: size mismatch");
    if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
    std::vector<cplx> scratch(scratch_size());
    execute_inplace(out, scratch);
  }

  std::vector<cplx> operator()(std::vector<cplx> data) const {
    std::vector<cplx> scratch(scratch_size());
    execute_inplace(data, scratch);
    return data;
  }

 private:
  struct Stage {
    std::size_t radix = 0;
    std::size_t length = 0;  // current sub-transform length n
    std::size_t stride = 0;  // s
    std::vector<cplx> twiddles;  // (n/r) x (r-1)
    std::vector<cplx> unit;      // e(sign k / r) for generic radices
    std::shared_ptr<const Bluestein> bluestein;
  };

  // One Stockham DIF pass: for p < n/r and q < s,
  //   y[q + s (r p + u)] = e(sign p u / n) * sum_t x[q + s (p + t n/r)] e(sign t u / r).
  void run_stage(const Stage& st, const cplx* x, cplx* y, std::span<cplx> work, bool first) const {
    const std::size_t r = st.radix;
    const std::size_t s = st.stride;
    const std::size_t m = st.length / r;
    const std::size_t step = s * m;

    if (r == 2) {
      for (std::size_t p = 0; p < m; ++p) {
        const cplx w1 = st.twiddles[p];
        const cplx* src = x + s * p;
        cplx* dst = y + s * 2 * p;
        for (std::size_t q = 0; q < s; ++q) {
          const cplx a0 = src[q];
          const cplx a1 = src[q + step];
          dst[q] = a0 + a1;
          dst[q + s] = mul(a0 - a1, w1);
        }
      }
      return;
    }
    if (r == 4) {
      for (std::size_t p = 0; p < m; ++p) {
        const cplx w1 = st.twiddles[3 * p];
        const cplx w2 = st.twiddles[3 * p + 1];
        const cplx w3 = st.twiddles[3 * p + 2];
        const cplx* src = x + s * p;
        cplx* dst = y + s * 4 * p;
        for (std::size_t q = 0; q < s; ++q) {
          const cplx a0 = src[q];
          const cplx a1 = src[q + step];
          const cplx a2 = src[q + 2 * step];
          const cplx a3 = src[q + 3 * step];
          const cplx e0 = a0 + a2;
          const cplx e1 = a0 - a2;
          const cplx o0 = a1 + a3;
          const cplx d = a1 - a3;
          // (a1 - a3) * e(sign/4) = (a1 - a3) * (sign * i)
          const cplx o1 = sign_ > 0 ? cplx{-d.imag(), d.real()} : cplx{d.imag(), -d.real()};
          dst[q] = e0 + o0;
          dst[q + s] = mul(e1 + o1, w1);
          dst[q + 2 * s] = mul(e0 - o0, w2);
          dst[q + 3 * s] = mul(e1 - o1, w3);
        }
      }
      return;
    }

    if (first && sparse_stage(st, x, y)) return;
    switch (r) {
      case 3: return odd_stage<3>(st, x, y);
      case 5: return odd_stage<5>(st, x, y);
      case 7: return odd_stage<7>(st, x, y);
      case 11: return odd_stage<11>(st, x, y);
      case 13: return odd_stage<13>(st, x, y);
      default: break;
    }

    auto a = work.first(r);
    auto inner = work.subspan(r);
    for (std::size_t p = 0; p < m; ++p) {
      const cplx* tw = st.twiddles.data() + p * (r - 1);
      for (std::size_t q = 0; q < s; ++q) {
        const cplx* src = x + q + s * p;
        cplx* dst = y + q + s * r * p;
        for (std::size_t t = 0; t < r; ++t) a[t] = src[t * step];
        if (st.bluestein) {
          st.bluestein->transform(a, inner);
          dst[0] = a[0];
          for (std::size_t u = 1; u < r; ++u) dst[u * s] = mul(a[u], tw[u - 1]);
          continue;
        }
        // Odd radix: pair t with r-t so the kernel is real cos/sin weights,
        //   X_u, X_{r-u} = a_0 + sum_t (a_t + a_{r-t}) cos  +-  i (a_t - a_{r-t}) sin.
        const std::size_t h = r / 2;
        cplx total = a[0];
        for (std::size_t t = 1; t <= h; ++t) {
          const cplx sum = a[t] + a[r - t];
          const cplx diff = a[t] - a[r - t];
          a[t] = sum;
          a[r - t] = diff;
          total += sum;
        }
        dst[0] = total;
        for (std::size_t u = 1; u <= h; ++u) {
          double re = a[0].real();
          double im = a[0].imag();
          double ire = 0.0;
          double iim = 0.0;
          std::size_t idx = 0;
          for (std::size_t t = 1; t <= h; ++t) {
            idx += u;
            if (idx >= r) idx -= r;
            const double c = st.unit[idx].real();
            const double sn = st.unit[idx].imag();
            re += a[t].real() * c;
            im += a[t].imag() * c;
            ire -= a[r - t].imag() * sn;
            iim += a[r - t].real() * sn;
          }
          dst[u * s] = mul(cplx{re + ire, im + iim}, tw[u - 1]);
          dst[(r - u) * s] = mul(cplx{re - ire, im - iim}, tw[r - u - 1]);
        }
      }
    }
  }

  // Odd radix R with the loops fixed at compile time; same pairing of t with
  // R-t as the runtime path below.
  template <std::size_t R>
  void odd_stage(const Stage& st, const cplx* x, cplx* y) const {
    constexpr std::size_t H = R / 2;
    const std::size_t s = st.stride;
    const std::size_t m = st.length / R;
    const std::size_t step = s * m;
    double c[R];
    double sn[R];
    for (std::size_t k = 0; k < R; ++k) {
      c[k] = st.unit[k].real();
      sn[k] = st.unit[k].imag();
    }
    for (std::size_t p = 0; p < m; ++p) {
      const cplx* tw = st.twiddles.data() + p * (R - 1);
      const cplx* src = x + s * p;
      cplx* dst = y + s * R * p;
      for (std::size_t q = 0; q < s; ++q) {
        const cplx a0 = src[q];
        cplx sum[H + 1];
        cplx diff[H + 1];
        cplx total = a0;
        for (std::size_t t = 1; t <= H; ++t) {
          const cplx lo = src[q + t * step];
          const cplx hi = src[q + (R - t) * step];
          sum[t] = lo + hi;
          diff[t] = lo - hi;
          total += sum[t];
        }
        dst[q] = total;
        for (std::size_t u = 1; u <= H; ++u) {
          double re = a0.real();
          double im = a0.imag();
          double ire = 0.0;
          double iim = 0.0;
          for (std::size_t t = 1; t <= H; ++t) {
            const std::size_t idx = (t * u) % R;
            re += sum[t].real() * c[idx];
            im += sum[t].imag() * c[idx];
            ire -= diff[t].imag() * sn[idx];
            iim += diff[t].real() * sn[idx];
          }
          dst[q + u * s] = mul(cplx{re + ire, im + iim}, tw[u - 1]);
          dst[q + (R - u) * s] = mul(cplx{re - ire, im - iim}, tw[R - u - 1]);
        }
      }
    }
  }

  // Inputs such as multiplicity vectors are mostly zero. When at most 1/8 of
  // the stage input is nonzero, the nonzeros are bucketed by butterfly in one
  // linear scan and each butterfly is summed directly over its bucket.
  bool sparse_stage(const Stage& st, const cplx* x, cplx* y) const {
    const std::size_t r = st.radix;
    const std::size_t s = st.stride;
    const std::size_t m = st.length / r;
    const std::size_t step = s * m;
    std::size_t nnz = 0;
    for (std::size_t j = 0; j < n_; ++j) nnz += x[j] != cplx{0.0, 0.0};
    if (nnz * 8 > n_) return false;

    // Counting sort of nonzero positions by butterfly g = p s + q.
    const std::size_t groups = step;
    std::vector<std::size_t> start(groups + 1, 0);
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != cplx{0.0, 0.0}) ++start[j % step + 1];
    for (std::size_t g = 0; g < groups; ++g) start[g + 1] += start[g];
    std::vector<std::size_t> slot(start.begin(), start.end() - 1);
    std::vector<std::size_t> position(nnz);
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != cplx{0.0, 0.0}) position[slot[j % step]++] = j;

    std::fill(y, y + n_, cplx{0.0, 0.0});
    for (std::size_t g = 0; g < groups; ++g) {
      if (start[g] == start[g + 1]) continue;
      const std::size_t p = g / s;
      const std::size_t q = g % s;
      cplx* dst = y + q + s * r * p;
      for (std::size_t i = start[g]; i < start[g + 1]; ++i) {
        const std::size_t j = position[i];
        const std::size_t t = j / step;
        const cplx v = x[j];
        std::size_t idx = 0;
        for (std::size_t u = 0; u < r; ++u) {
          dst[u * s] += mul(v, st.unit[idx]);
          idx += t;
          if (idx >= r) idx -= r;
        }
      }
      const cplx* tw = st.twiddles.data() + p * (r - 1);
      for (std::size_t u = 1; u < r; ++u) dst[u * s] = mul(dst[u * s], tw[u - 1]);
    }
    return true;
  }

  static cplx mul(cplx a, cplx b) { return detail::cmul(a, b); }

  std::size_t n_;
  int sign_;
  std::size_t work_size_ = 0;
  std::vector<Stage> stages_;
};

inline Bluestein::Bluestein(std::size_t n, int sign) : n_(n) {
  padded_ = 1;
  while (padded_ < 2 * n - 1) padded_ <<= 1;
  // chirp[k] = e(sign k^2 / (2n)), with k^2 reduced mod 2n exactly.
  chirp_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx c = unit_root(mul_mod(k, k, 2 * n), 2 * n);
    chirp_[k] = sign > 0 ? c : std::conj(c);
  }
  forward_ = std::make_shared<const Plan>(padded_, -1);
  backward_ = std::make_shared<const Plan>(padded_, +1);
  std::vector<cplx> kernel(padded_, cplx{0.0, 0.0});
  kernel[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) kernel[k] = kernel[padded_ - k] = std::conj(chirp_[k]);
  kernel_hat_ = (*forward_)(std::move(kernel));
  const double scale = 1.0 / static_cast<double>(padded_);
  for (auto& v : kernel_hat_) v *= scale;
}

inline void Bluestein::transform(std::span<cplx> data, std::span<cplx> work) const {
  auto buf = work.first(padded_);
  auto scratch = work.subspan(padded_);
  for (std::size_t k = 0; k < n_; ++k) buf[k] = detail::cmul(data[k], chirp_[k]);
  std::fill(buf.begin() + static_cast<std::ptrdiff_t>(n_), buf.end(), cplx{0.0, 0.0});
  forward_->execute_inplace(buf, scratch);
  for (std::size_t k = 0; k < padded_; ++k) buf[k] = detail::cmul(buf[k], kernel_hat_[k]);
  backward_->execute_inplace(buf, scratch);
  for (std::size_t k = 0; k < n_; ++k) data[k] = detail::cmul(buf[k], chirp_[k]);
}

/// One-shot transform.
inline std::vector<cplx> dft(std::vector<cplx> data, int sign) {
  if (data.empty()) return data;
  return Plan(data.size(), sign)(std::move(data));
}

}  // namespace turan::fft
