#include "strebel/specfile.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "strebel/errors.hpp"

namespace strebel {

std::optional<Rat> parse_rational(const std::string& token) {
    std::string s = token;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) return std::nullopt;

    auto digits_only = [](const std::string& v) {
        if (v.empty()) return false;
        for (char ch : v)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto to_int = [](const std::string& v) -> std::optional<std::int64_t> {
        if (v.size() > 18) return std::nullopt;  // keep headroom for products
        std::int64_t out = 0;
        std::from_chars(v.data(), v.data() + v.size(), out);
        return out;
    };

    std::optional<Rat> result;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!digits_only(p) || !digits_only(q)) return std::nullopt;
        auto pi = to_int(p), qi = to_int(q);
        if (!pi || !qi || *qi == 0) return std::nullopt;
        result = Rat(*pi, *qi);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((!whole.empty() && !digits_only(whole)) || !digits_only(frac)) return std::nullopt;
        if (whole.size() + frac.size() > 17) return std::nullopt;
        auto wi = to_int(whole.empty() ? "0" : whole);
        auto fi = to_int(frac);
        if (!wi || !fi) return std::nullopt;
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        result = Rat(*wi) + Rat(*fi, den);
    } else {
        if (!digits_only(s)) return std::nullopt;
        auto pi = to_int(s);
        if (!pi) return std::nullopt;
        result = Rat(*pi);
    }
    if (negative && result) result = -*result;
    return result;
}

namespace {

struct Number {
    double value = 0.0;
    std::optional<Rat> exact;
};

Number parse_number(const std::string& token, int line) {
    Number n;
    n.exact = parse_rational(token);
    if (n.exact) {
        n.value = to_double(*n.exact);
        return n;
    }
    try {
        std::size_t pos = 0;
        n.value = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
        throw SpecSyntaxError(line, "cannot parse number '" + token + "'");
    }
    return n;
}

std::string expect_kv(const std::string& token, const std::string& key, int line) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw SpecSyntaxError(line, "expected " + prefix + "..., got '" + token + "'");
    return token.substr(prefix.size());
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ParsedSpec parse_surface_spec(const std::string& text) {
    std::vector<Cylinder> cylinders;
    std::vector<std::string> cyl_labels;
    std::map<std::string, std::size_t> cyl_index;
    GluingTable gluing;
    std::vector<std::string> seg_labels;
    std::map<std::string, std::size_t> seg_index;
    std::map<std::size_t, std::size_t> partner;  // filled by glue lines
    std::map<std::size_t, bool> flip;
    ExactSurfaceData exact;
    bool all_exact = true;

    struct CurveLine {
        std::string name;
        std::vector<double> weights;
        int line;
    };
    std::vector<CurveLine> curve_lines;
    struct PairingLine {
        std::string a, b;
        double value;
        int line;
    };
    std::vector<PairingLine> pairing_lines;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "cylinder") {
            if (tok.size() != 4) throw SpecSyntaxError(line_no, "cylinder <label> a=<real> b=<real>");
            if (cyl_index.count(tok[1])) throw SpecSemanticError(line_no, "duplicate cylinder label '" + tok[1] + "'");
            const Number a = parse_number(expect_kv(tok[2], "a", line_no), line_no);
            const Number b = parse_number(expect_kv(tok[3], "b", line_no), line_no);
            cyl_index[tok[1]] = cylinders.size();
            cyl_labels.push_back(tok[1]);
            cylinders.push_back({a.value, b.value});
            all_exact = all_exact && a.exact && b.exact;
            exact.circumference.push_back(a.exact.value_or(Rat(0)));
            exact.height.push_back(b.exact.value_or(Rat(0)));
        } else if (tok[0] == "segment") {
            if (tok.size() != 6)
                throw SpecSyntaxError(line_no, "segment <id> cyl=<label> side=top|bottom off=<real> len=<real>");
            if (seg_index.count(tok[1])) throw SpecSemanticError(line_no, "duplicate segment id '" + tok[1] + "'");
            const std::string cyl = expect_kv(tok[2], "cyl", line_no);
            auto it = cyl_index.find(cyl);
            if (it == cyl_index.end()) throw SpecSemanticError(line_no, "unknown cylinder '" + cyl + "'");
            const std::string side = expect_kv(tok[3], "side", line_no);
            if (side != "top" && side != "bottom")
                throw SpecSyntaxError(line_no, "side must be top or bottom");
            const Number off = parse_number(expect_kv(tok[4], "off", line_no), line_no);
            const Number len = parse_number(expect_kv(tok[5], "len", line_no), line_no);
            seg_index[tok[1]] = gluing.segments.size();
            seg_labels.push_back(tok[1]);
            gluing.segments.push_back(
                {it->second, side == "top" ? Side::Top : Side::Bottom, off.value, len.value});
            all_exact = all_exact && off.exact && len.exact;
            exact.seg_offset.push_back(off.exact.value_or(Rat(0)));
            exact.seg_length.push_back(len.exact.value_or(Rat(0)));
        } else if (tok[0] == "glue") {
            if (tok.size() != 4) throw SpecSyntaxError(line_no, "glue <id> <id> sign=+|-");
            auto ia = seg_index.find(tok[1]);
            auto ib = seg_index.find(tok[2]);
            if (ia == seg_index.end() || ib == seg_index.end())
                throw SpecSemanticError(line_no, "glue refers to an unknown segment");
            const std::string sign = expect_kv(tok[3], "sign", line_no);
            if (sign != "+" && sign != "-") throw SpecSyntaxError(line_no, "sign must be + or -");
            if (partner.count(ia->second) || partner.count(ib->second))
                throw SpecSemanticError(line_no, "segment glued twice");
            partner[ia->second] = ib->second;
            partner[ib->second] = ia->second;
            flip[ia->second] = flip[ib->second] = sign == "-";
        } else if (tok[0] == "curve") {
            if (tok.size() != 3) throw SpecSyntaxError(line_no, "curve <name> weights=<w1,...,wk>");
            CurveLine c{tok[1], {}, line_no};
            for (const std::string& w : split(expect_kv(tok[2], "weights", line_no), ','))
                c.weights.push_back(parse_number(w, line_no).value);
            curve_lines.push_back(std::move(c));
        } else if (tok[0] == "pairing") {
            if (tok.size() != 4) throw SpecSyntaxError(line_no, "pairing <j> <j'> <value>");
            pairing_lines.push_back({tok[1], tok[2], parse_number(tok[3], line_no).value, line_no});
        } else {
            throw SpecSyntaxError(line_no, "unknown directive '" + tok[0] + "'");
        }
    }

    if (cylinders.empty()) throw SpecSemanticError(0, "no cylinders");
    gluing.pairing.resize(gluing.segments.size());
    gluing.flipped.assign(gluing.segments.size(), false);
    for (std::size_t i = 0; i < gluing.segments.size(); ++i) {
        auto it = partner.find(i);
        if (it == partner.end())
            throw SpecSemanticError(0, "PairingError: segment '" + seg_labels[i] + "' is never glued");
        gluing.pairing[i] = it->second;
        gluing.flipped[i] = flip[i];
    }

    ParsedSpec spec;
    try {
        spec.surface = build_surface(std::move(cylinders), std::move(gluing),
                                     all_exact ? std::optional<ExactSurfaceData>(std::move(exact))
                                               : std::nullopt);
    } catch (const PartitionError& e) {
        throw SpecSemanticError(0, std::string("PartitionError: ") + e.what());
    } catch (const PairingError& e) {
        throw SpecSemanticError(0, std::string("PairingError: ") + e.what());
    } catch (const NonPositiveDatum& e) {
        throw SpecSemanticError(0, std::string("NonPositiveDatum: ") + e.what());
    }

    // One core curve per cylinder; `pairing` directives fill symmetric
    // off-diagonal intersection numbers, defaulting to zero.
    if (!curve_lines.empty() || !pairing_lines.empty()) {
        const std::size_t k = spec.surface.cylinders.size();
        std::vector<std::string> names;
        for (const std::string& label : cyl_labels) names.push_back("gamma_" + label);
        std::vector<std::vector<double>> pairing(k, std::vector<double>(k, 0.0));
        for (const auto& p : pairing_lines) {
            auto ia = cyl_index.find(p.a);
            auto ib = cyl_index.find(p.b);
            if (ia == cyl_index.end() || ib == cyl_index.end())
                throw SpecSemanticError(p.line, "pairing refers to an unknown cylinder label");
            if (ia->second == ib->second && p.value != 0.0)
                throw SpecSemanticError(p.line, "pairing diagonal must be zero");
            pairing[ia->second][ib->second] = p.value;
            pairing[ib->second][ia->second] = p.value;
        }
        try {
            spec.family = make_family(std::move(names), std::move(pairing));
            for (const auto& c : curve_lines) {
                if (spec.curves.count(c.name))
                    throw SpecSemanticError(c.line, "duplicate curve name '" + c.name + "'");
                if (c.weights.size() != k)
                    throw SpecSemanticError(c.line, "curve weights must have one entry per cylinder");
                spec.curves.emplace(c.name, make_multicurve(spec.family, c.weights));
            }
        } catch (const SpecError&) {
            throw;
        } catch (const ValidationError& e) {
            throw SpecSemanticError(0, e.what());
        }
    }
    return spec;
}

std::string serialize_surface_spec(const ParsedSpec& spec) {
    std::string out;
    const auto& s = spec.surface;
    for (std::size_t j = 0; j < s.cylinders.size(); ++j)
        out += "cylinder c" + std::to_string(j) + " a=" + fmt17(s.cylinders[j].circumference) +
               " b=" + fmt17(s.cylinders[j].height) + "\n";
    for (std::size_t i = 0; i < s.gluing.segments.size(); ++i) {
        const auto& seg = s.gluing.segments[i];
        out += "segment s" + std::to_string(i) + " cyl=c" + std::to_string(seg.cylinder) +
               " side=" + (seg.side == Side::Top ? "top" : "bottom") +
               " off=" + fmt17(seg.offset) + " len=" + fmt17(seg.length) + "\n";
    }
    for (std::size_t i = 0; i < s.gluing.segments.size(); ++i) {
        const std::size_t p = s.gluing.pairing[i];
        if (i < p)
            out += "glue s" + std::to_string(i) + " s" + std::to_string(p) + " sign=" +
                   (s.gluing.flipped[i] ? "-" : "+") + "\n";
    }
    if (spec.family) {
        for (std::size_t a = 0; a < spec.family->size(); ++a)
            for (std::size_t b = a + 1; b < spec.family->size(); ++b)
                if (spec.family->pairing[a][b] != 0.0)
                    out += "pairing c" + std::to_string(a) + " c" + std::to_string(b) + " " +
                           fmt17(spec.family->pairing[a][b]) + "\n";
        for (const auto& [name, curve] : spec.curves) {
            out += "curve " + name + " weights=";
            for (std::size_t j = 0; j < curve.weights.size(); ++j)
                out += (j ? "," : "") + fmt17(curve.weights[j]);
            out += "\n";
        }
    }
    return out;
}

}  // namespace strebel
