#include <cstdlib>
#include <cstring>

#include "s2m/kernels.hpp"

namespace s2m::kernels {

#if defined(S2M_HAVE_AVX2)
namespace avx2 {
extern const Ops ops;
}
#endif

namespace {

bool avx2_supported() {
#if defined(S2M_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

struct Selection {
  const Ops* ops;
  const char* name;
};

Selection select() {
  const char* force = std::getenv("S2M_KERNELS");
  if (force != nullptr && std::strcmp(force, "scalar") == 0)
    return {&scalar_ops(), "scalar"};
#if defined(S2M_HAVE_AVX2)
  if (avx2_supported()) return {&avx2::ops, "avx2"};
#endif
  return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops& active() { return *selection().ops; }

const char* active_name() { return selection().name; }

const Ops* avx2_ops() {
#if defined(S2M_HAVE_AVX2)
  if (avx2_supported()) return &avx2::ops;
#endif
  return nullptr;
}

}  // namespace s2m::kernels
