#include "contact/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace contact::kernels {

#if defined(CONTACT_WITH_AVX2)
const Table& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(CONTACT_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("CONTACT_KERNELS"); env && std::string(env) == "scalar")
    return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

const Table* table_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &scalar_table();
    case Backend::Avx2:
#if defined(CONTACT_WITH_AVX2)
      if (cpu_has_avx2()) return &avx2_table();
#endif
      return nullptr;
  }
  return nullptr;
}

const Table& active() {
  const Table* t = table_for(current().load(std::memory_order_relaxed));
  return t ? *t : scalar_table();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

bool set_backend(Backend backend) {
  if (!table_for(backend)) return false;
  current().store(backend, std::memory_order_relaxed);
  return true;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (table_for(Backend::Avx2)) out.push_back(Backend::Avx2);
  return out;
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace contact::kernels
