// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace gacomb::kernels {

namespace {

void product_row_scalar(std::uint64_t lhs_mask, double lhs_coeff, const std::uint64_t* rhs_masks,
                        const double* rhs_coeffs, std::size_t count, std::uint64_t* out_masks,
                        double* out_coeffs) {
  for (std::size_t i = 0; i < count; ++i) {
    out_masks[i] = lhs_mask ^ rhs_masks[i];
    double c = lhs_coeff * rhs_coeffs[i];
    out_coeffs[i] = product_sign_ref(lhs_mask, rhs_masks[i]) < 0 ? -c : c;
  }
}

void negate_where_bit_scalar(std::uint64_t bit, const std::uint64_t* masks, double* coeffs,
                             std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (masks[i] & bit) coeffs[i] = -coeffs[i];
  }
}

constexpr Ops kScalarOps{&product_row_scalar, &negate_where_bit_scalar};

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Backend> g_active_backend{Backend::scalar};

}  // namespace

#if defined(GACOMB_HAVE_AVX2)
const Ops* avx2_ops();  // kernels_avx2.cpp, compiled with AVX2 enabled
#endif
#if defined(GACOMB_HAVE_NEON)
const Ops* neon_ops();  // kernels_neon.cpp
#endif

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

const Ops& scalar_ops() { return kScalarOps; }

const Ops* ops_for(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return &kScalarOps;
    case Backend::avx2:
#if defined(GACOMB_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return avx2_ops();
#endif
      return nullptr;
    case Backend::neon:
#if defined(GACOMB_HAVE_NEON)
      return neon_ops();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (ops_for(Backend::avx2)) out.push_back(Backend::avx2);
  if (ops_for(Backend::neon)) out.push_back(Backend::neon);
  return out;
}

Backend preferred_backend() {
  if (const char* env = std::getenv("GACOMB_KERNEL")) {
    std::string_view want(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (want == backend_name(b) && ops_for(b)) return b;
    }
  }
  if (ops_for(Backend::avx2)) return Backend::avx2;
  if (ops_for(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

Backend active_backend() {
  if (!g_active.load(std::memory_order_acquire)) set_active_backend(preferred_backend());
  return g_active_backend.load(std::memory_order_acquire);
}

const Ops& active_ops() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (!ops) {
    set_active_backend(preferred_backend());
    ops = g_active.load(std::memory_order_acquire);
  }
  return *ops;
}

bool set_active_backend(Backend backend) {
  const Ops* ops = ops_for(backend);
  if (!ops) return false;
  g_active_backend.store(backend, std::memory_order_release);
  g_active.store(ops, std::memory_order_release);
  return true;
}

}  // namespace gacomb::kernels
