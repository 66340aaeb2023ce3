#include "sno/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace sno::kernels {
namespace {

bool forced_scalar() {
    const char* env = std::getenv("SNO_KERNELS");
    return env != nullptr && std::string_view(env) == "scalar";
}

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

KernelTable select_table() {
    if (forced_scalar()) return detail::scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return detail::avx2_table();
#endif
#if defined(__aarch64__)
    return detail::neon_table();
#endif
    return detail::scalar_table();
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable& active() {
    static const KernelTable table = select_table();
    return table;
}

std::vector<KernelTable> available() {
    std::vector<KernelTable> tables{detail::scalar_table()};
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) tables.push_back(detail::avx2_table());
#endif
#if defined(__aarch64__)
    tables.push_back(detail::neon_table());
#endif
    return tables;
}

}  // namespace sno::kernels
