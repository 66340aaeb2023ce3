#include <charconv>
#include <string>

#include "sno/diagrams.hpp"
#include "sno/errors.hpp"

namespace sno {
namespace {

struct Token {
    std::string_view text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
                   text[i] != '\n') {
                ++i;
            }
            tokens.push_back({text.substr(start, i - start), line});
        }
    }
    return tokens;
}

class TokenStream {
public:
    explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

    const Token& next(const char* what) {
        if (pos_ >= tokens_.size()) {
            const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
            throw ValidationError("truncated", std::string("expected ") + what, line);
        }
        return tokens_[pos_++];
    }

    std::uint32_t next_uint(const char* what) {
        const Token& t = next(what);
        return to_uint(t, what);
    }

    static std::uint32_t to_uint(const Token& t, const char* what) {
        std::uint32_t v = 0;
        const auto* end = t.text.data() + t.text.size();
        const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            throw ValidationError("malformed-token",
                                  std::string("expected ") + what + ", got '" + std::string(t.text) + "'",
                                  t.line);
        }
        return v;
    }

    void expect_end() const {
        if (pos_ < tokens_.size()) {
            throw ValidationError("trailing-data", "unexpected token '" + std::string(tokens_[pos_].text) + "'",
                                  tokens_[pos_].line);
        }
    }

    std::size_t last_line() const { return pos_ == 0 ? 1 : tokens_[pos_ - 1].line; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string_view header_keyword(ClassTag cls) {
    switch (cls) {
        case ClassTag::k_polygon:
        case ClassTag::circle_trapezoid:
        case ClassTag::generic_polygon: return "polygon";
        default: return class_name(cls);
    }
}

// Attaches `line` to validation failures that were raised without one.
template <class Fn>
void with_line(std::size_t line, Fn&& fn) {
    try {
        fn();
    } catch (const ValidationError& e) {
        if (e.line() != 0) throw;
        std::string what = e.what();
        const std::string prefix = e.rule() + ": ";
        const std::string detail = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : "";
        throw ValidationError(e.rule(), detail, line);
    }
}

}  // namespace

ParsedDiagram parse_diagram(std::string_view text, ClassTag cls) {
    TokenStream in(text);
    const Token& head = in.next("header");
    if (head.text != header_keyword(cls)) {
        throw ValidationError("class-mismatch",
                              "header '" + std::string(head.text) + "' does not match class " +
                                  std::string(class_name(cls)),
                              head.line);
    }
    const std::size_t header_line = head.line;
    const std::uint32_t n = in.next_uint("vertex count");
    if (n == 0) throw ValidationError("empty", "vertex count must be positive", header_line);

    AnyDiagram diagram;

    if (header_keyword(cls) == "polygon") {
        const std::uint32_t corners = in.next_uint("corner count");
        PolygonDiagram d;
        d.n = n;
        for (std::uint32_t i = 0; i < corners; ++i) {
            const Token& t = in.next("corner token");
            const auto slash = t.text.find('/');
            if (slash == std::string_view::npos || slash + 2 != t.text.size() ||
                (t.text[slash + 1] != 'a' && t.text[slash + 1] != 'c')) {
                throw ValidationError("malformed-token",
                                      "corner '" + std::string(t.text) + "' is not label/a or label/c", t.line);
            }
            const std::uint32_t label = TokenStream::to_uint({t.text.substr(0, slash), t.line}, "label");
            if (label < 1 || label > n) {
                throw ValidationError("label-range", "label " + std::to_string(label) + " outside [1," +
                                                         std::to_string(n) + "]", t.line);
            }
            d.labels.push_back(label);
            d.kinds.push_back(t.text[slash + 1] == 'a' ? SideKind::arc : SideKind::chord);
        }
        diagram = std::move(d);
    } else if (cls == ClassTag::circle) {
        ChordDiagram d;
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint32_t s = in.next_uint("endpoint s");
            const std::size_t line = in.last_line();
            const std::uint32_t e = in.next_uint("endpoint e");
            if (s >= e) throw ValidationError("endpoint-order", "chord needs s < e", line);
            d.chords.push_back({s, e});
        }
        diagram = std::move(d);
    } else if (cls == ClassTag::permutation) {
        PermutationDiagram d;
        for (std::uint32_t i = 0; i < n; ++i) d.pi.push_back(in.next_uint("permutation value"));
        diagram = std::move(d);
    } else if (cls == ClassTag::interval || cls == ClassTag::circular_arc) {
        ArcDiagram d;
        d.circular = cls == ClassTag::circular_arc;
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint32_t s = in.next_uint("endpoint s");
            const std::size_t line = in.last_line();
            const std::uint32_t e = in.next_uint("endpoint e");
            if (!d.circular && s >= e) throw ValidationError("endpoint-order", "interval needs s < e", line);
            if (s == e) throw ValidationError("duplicate-endpoint", "arc endpoints coincide", line);
            d.arcs.push_back({s, e});
        }
        diagram = std::move(d);
    } else {
        TrapezoidDiagram d;
        for (std::uint32_t i = 0; i < n; ++i) {
            Trapezoid t{};
            t.a = in.next_uint("a");
            const std::size_t line = in.last_line();
            t.b = in.next_uint("b");
            t.c = in.next_uint("c");
            t.d = in.next_uint("d");
            if (t.a >= t.b || t.c >= t.d) {
                throw ValidationError("endpoint-order", "trapezoid needs a < b and c < d", line);
            }
            d.traps.push_back(t);
        }
        diagram = std::move(d);
    }
    in.expect_end();

    with_line(header_line, [&] { validate(diagram, cls); });
    ParsedDiagram parsed{cls, std::move(diagram), {}};
    parsed.relabel = canonicalize(parsed.diagram);
    return parsed;
}

std::string render_diagram(const AnyDiagram& d) {
    std::string out;
    auto num = [&](std::uint64_t v) { out += std::to_string(v); };
    if (const auto* p = std::get_if<PolygonDiagram>(&d)) {
        out += "polygon ";
        num(p->n);
        out += ' ';
        num(p->corners());
        out += '\n';
        for (std::uint64_t i = 0; i < p->corners(); ++i) {
            if (i != 0) out += ' ';
            num(p->labels[i]);
            out += p->kinds[i] == SideKind::arc ? "/a" : "/c";
        }
        out += '\n';
    } else if (const auto* c = std::get_if<ChordDiagram>(&d)) {
        out += "circle ";
        num(c->n());
        out += '\n';
        for (const auto& ch : c->chords) {
            num(ch.s);
            out += ' ';
            num(ch.e);
            out += '\n';
        }
    } else if (const auto* pm = std::get_if<PermutationDiagram>(&d)) {
        out += "permutation ";
        num(pm->n());
        out += '\n';
        for (std::size_t i = 0; i < pm->pi.size(); ++i) {
            if (i != 0) out += ' ';
            num(pm->pi[i]);
        }
        out += '\n';
    } else if (const auto* a = std::get_if<ArcDiagram>(&d)) {
        out += a->circular ? "circulararc " : "interval ";
        num(a->n());
        out += '\n';
        for (const auto& arc : a->arcs) {
            num(arc.s);
            out += ' ';
            num(arc.e);
            out += '\n';
        }
    } else {
        const auto& t = std::get<TrapezoidDiagram>(d);
        out += "trapezoid ";
        num(t.n());
        out += '\n';
        for (const auto& tr : t.traps) {
            num(tr.a);
            out += ' ';
            num(tr.b);
            out += ' ';
            num(tr.c);
            out += ' ';
            num(tr.d);
            out += '\n';
        }
    }
    return out;
}

}  // namespace sno
