#include "sno/container.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sno/circle_oracle.hpp"
#include "sno/errors.hpp"
#include "sno/polygon_oracle.hpp"
#include "sno/serialize.hpp"
#include "sno/trapezoid_oracle.hpp"

namespace sno {
namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'N', 'O', '1'};
constexpr std::uint8_t kVersion = 1;

ClassTag polygon_impl_class(ClassTag cls) {
    switch (cls) {
        case ClassTag::interval:
        case ClassTag::circular_arc:
        case ClassTag::k_polygon:
        case ClassTag::circle_trapezoid: return cls;
        default: return ClassTag::generic_polygon;
    }
}

}  // namespace

std::unique_ptr<GraphOracle> build_oracle(const AnyDiagram& d, ClassTag cls, const BuildOptions& opts) {
    switch (opts.impl) {
        case ImplTag::unified: {
            PolygonOracleOptions po;
            po.explicit_degrees = opts.explicit_degrees;
            po.impl_class = polygon_impl_class(cls);
            return std::make_unique<PolygonOracle>(PolygonOracle::build(to_polygon_diagram(d, cls), po));
        }
        case ImplTag::wavelet_circle:
            if (cls != ClassTag::circle || !std::holds_alternative<ChordDiagram>(d)) {
                throw std::invalid_argument("wavelet oracle needs class circle or trapezoid");
            }
            return std::make_unique<CircleOracle>(CircleOracle::build(std::get<ChordDiagram>(d)));
        case ImplTag::wavelet_trapezoid:
            if (cls != ClassTag::trapezoid || !std::holds_alternative<TrapezoidDiagram>(d)) {
                throw std::invalid_argument("wavelet oracle needs class circle or trapezoid");
            }
            return std::make_unique<TrapezoidOracle>(TrapezoidOracle::build(std::get<TrapezoidDiagram>(d)));
    }
    throw std::invalid_argument("unknown implementation");
}

std::vector<std::uint8_t> save_oracle(const GraphOracle& oracle, ClassTag cls) {
    ByteWriter out;
    out.put_raw(kMagic);
    out.put_u8(kVersion);
    out.put_u8(static_cast<std::uint8_t>(cls));
    out.put_u8(static_cast<std::uint8_t>(oracle.impl()));
    out.put_u64(oracle.vertex_count());
    if (const auto* p = dynamic_cast<const PolygonOracle*>(&oracle)) {
        out.put_u64(p->corners());
        p->serialize(out);
    } else if (const auto* c = dynamic_cast<const CircleOracle*>(&oracle)) {
        out.put_u64(2 * static_cast<std::uint64_t>(c->vertex_count()));
        c->serialize(out);
    } else if (const auto* t = dynamic_cast<const TrapezoidOracle*>(&oracle)) {
        out.put_u64(4 * static_cast<std::uint64_t>(t->vertex_count()));
        t->serialize(out);
    } else {
        throw std::invalid_argument("oracle type cannot be serialized");
    }
    return out.take();
}

LoadedOracle load_oracle(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    const auto magic = in.get_raw(4);
    if (!std::equal(magic.begin(), magic.end(), kMagic)) throw FormatError("not an SNO1 file (bad magic)");
    const std::uint8_t version = in.get_u8();
    if (version != kVersion) throw FormatError("unsupported version " + std::to_string(version));
    const auto cls = class_from_byte(in.get_u8());
    if (!cls) throw FormatError("unknown class tag");
    const std::uint8_t impl = in.get_u8();
    const std::uint64_t n = in.get_u64();
    const std::uint64_t corners = in.get_u64();
    if (n == 0 || n > UINT32_MAX || corners > UINT32_MAX) throw FormatError("bad vertex or corner count");
    const auto vertices = static_cast<std::uint32_t>(n);

    LoadedOracle out{*cls, nullptr};
    switch (impl) {
        case static_cast<std::uint8_t>(ImplTag::unified):
            out.oracle = std::make_unique<PolygonOracle>(
                PolygonOracle::deserialize(in, vertices, corners, polygon_impl_class(*cls)));
            break;
        case static_cast<std::uint8_t>(ImplTag::wavelet_circle):
            if (*cls != ClassTag::circle || corners != 2 * n) throw FormatError("circle oracle header mismatch");
            out.oracle = std::make_unique<CircleOracle>(CircleOracle::deserialize(in, vertices));
            break;
        case static_cast<std::uint8_t>(ImplTag::wavelet_trapezoid):
            if (*cls != ClassTag::trapezoid || corners != 4 * n) {
                throw FormatError("trapezoid oracle header mismatch");
            }
            out.oracle = std::make_unique<TrapezoidOracle>(TrapezoidOracle::deserialize(in, vertices));
            break;
        default: throw FormatError("unknown implementation tag");
    }
    return out;
}

}  // namespace sno
