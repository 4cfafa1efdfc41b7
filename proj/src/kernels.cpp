#include "soergel/kernels.hpp"

#include "soergel/errors.hpp"

namespace soergel::kernels {

namespace {

constexpr Table kScalar{Isa::scalar, &scalar::add_into, &scalar::sub_scaled_into};
#if defined(SOERGEL_HAVE_AVX2_TU)
constexpr Table kAvx2{Isa::avx2, &avx2::add_into, &avx2::sub_scaled_into};
#endif

bool cpu_has_avx2() {
#if defined(SOERGEL_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

const Table& get(Isa isa) {
  if (!available(isa)) throw InvalidArgument("kernel variant " + std::string(isa_name(isa)) + " is not available");
#if defined(SOERGEL_HAVE_AVX2_TU)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const Table& active() {
  static const Table& t = get(available(Isa::avx2) ? Isa::avx2 : Isa::scalar);
  return t;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace soergel::kernels
