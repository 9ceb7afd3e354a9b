#include <cstdlib>
#include <string_view>

#include "gl11/kernels.hpp"

namespace gl11::kernels {
namespace {

const KernelSet& detect() {
  if (const char* forced = std::getenv("GL11_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return avx2_kernels();
#elif defined(__aarch64__)
  return neon_kernels();
#endif
  return scalar_kernels();
}

}  // namespace

const KernelSet& active() {
  static const KernelSet& chosen = detect();
  return chosen;
}

}  // namespace gl11::kernels
