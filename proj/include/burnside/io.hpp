#pragma once

#include <cctype>
#include <istream>
#include <set>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "localization.hpp"
#include "presets.hpp"
#include "ring.hpp"

namespace burnside {

// ---- element vector syntax: "[c0, c1, ...]" in canonical class order ----

inline std::string format_coeffs(const IntVec& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += coeffs[i].get_str();
    }
    out += "]";
    return out;
}

inline std::string format_element(const BurnsideElement& x) {
    return format_coeffs(x.coeffs());
}

inline IntVec parse_coeffs(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError("element must start with '['");
    ++i;
    IntVec out;
    skip_ws();
    if (i < text.size() && text[i] == ']') { ++i; }
    else {
        while (true) {
            skip_ws();
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == start) throw ParseError("expected integer in element vector");
            out.emplace_back(text.substr(start, i - start));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw ParseError("expected ',' or ']' in element vector");
        }
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters after element vector");
    return out;
}

inline BurnsideElement parse_element(const std::shared_ptr<const BurnsideRing>& ring,
                                     const std::string& text) {
    IntVec c = parse_coeffs(text);
    if (c.size() != ring->rank())
        throw ParseError("element has " + std::to_string(c.size()) +
                         " coefficients, ring has rank " + std::to_string(ring->rank()));
    return ring->element(std::move(c));
}

// a + b*rho display for rank-2 rings (rho = the free orbit [G/e]).
inline std::optional<std::string> pretty_rank2(const BurnsideElement& x) {
    if (x.coeffs().size() != 2) return std::nullopt;
    const Int& b = x.coeffs()[0]; // coefficient of rho
    const Int& a = x.coeffs()[1]; // coefficient of 1
    if (a == 0 && b == 0) return std::string("0");
    std::string out;
    if (a != 0) out += a.get_str();
    if (b != 0) {
        if (!out.empty()) out += (b > 0) ? "+" : "-";
        else if (b < 0) out += "-";
        Int ab = abs(b);
        if (ab != 1) out += ab.get_str();
        out += "rho";
    }
    return out;
}

// ---- group specs: preset name or "perm:<degree>:(cycles),(cycles)" ----

inline std::vector<std::vector<unsigned>> parse_cycles(const std::string& text) {
    std::vector<std::vector<unsigned>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) { ++i; continue; }
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<unsigned> cyc;
        while (i < text.size() && text[i] != ')') {
            if (std::isspace((unsigned char)text[i]) || text[i] == ',') { ++i; continue; }
            std::size_t start = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == start) throw ParseError("expected point number in cycle");
            cyc.push_back(static_cast<unsigned>(std::stoul(text.substr(start, i - start))));
        }
        if (i >= text.size()) throw ParseError("unterminated cycle");
        ++i; // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

inline std::shared_ptr<const FiniteGroup>
parse_group_spec(const std::string& spec, std::size_t order_bound = kDefaultOrderBound) {
    if (spec.rfind("perm:", 0) == 0) {
        std::size_t second = spec.find(':', 5);
        if (second == std::string::npos)
            throw ParseError("inline group spec is perm:<degree>:<generators>");
        unsigned degree;
        try {
            degree = static_cast<unsigned>(std::stoul(spec.substr(5, second - 5)));
        } catch (const std::exception&) {
            throw ParseError("bad degree in inline group spec");
        }
        std::vector<Perm> gens;
        // generators separated by ';'
        std::string rest = spec.substr(second + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t sep = rest.find(';', pos);
            std::string part = rest.substr(pos, sep == std::string::npos ? sep : sep - pos);
            if (part.find_first_not_of(" \t") != std::string::npos)
                gens.push_back(perm_from_cycles(degree, parse_cycles(part)));
            if (sep == std::string::npos) break;
            pos = sep + 1;
        }
        return FiniteGroup::from_generators(degree, gens, order_bound);
    }
    return preset_group(spec, order_bound);
}

// ---- certificate format (line-delimited, diffable) ----
//
//   burnside-certificate v1
//   group <spec>
//   rank <r>
//   generator <i> <coeffs>
//   witness class <c> generator <s> norm <coeffs> exponents <vec> cofactor <coeffs>
//   obstruction class <c> generator <s> coordinate <k>    (Unsafe only)
//   exhausted class <c> generator <s>                     (Unknown only)
//   verdict Safe|Unsafe|Unknown

inline std::string verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Safe: return "Safe";
        case Verdict::Kind::Unsafe: return "Unsafe";
        default: return "Unknown";
    }
}

inline void write_certificate(std::ostream& os, const std::string& group_spec,
                              const LocalizationProblem& problem,
                              const Verdict& verdict) {
    os << "burnside-certificate v1\n";
    os << "group " << group_spec << "\n";
    os << "rank " << problem.ring->rank() << "\n";
    for (std::size_t i = 0; i < problem.generators.size(); ++i)
        os << "generator " << i << " " << format_element(problem.generators[i]) << "\n";
    for (const auto& w : verdict.witnesses) {
        os << "witness class " << w.subgroup_class << " generator "
           << w.generator_index << " norm " << format_element(w.normed)
           << " exponents [";
        for (std::size_t i = 0; i < w.exponents.size(); ++i) {
            if (i) os << ", ";
            os << w.exponents[i];
        }
        os << "] cofactor " << format_element(w.cofactor) << "\n";
    }
    if (verdict.obstruction)
        os << "obstruction class " << verdict.obstruction->subgroup_class
           << " generator " << verdict.obstruction->generator_index << " coordinate "
           << verdict.obstruction->coordinate << "\n";
    if (verdict.exhausted)
        os << "exhausted class " << verdict.exhausted->first << " generator "
           << verdict.exhausted->second << "\n";
    os << "verdict " << verdict_name(verdict.kind) << "\n";
}

struct ParsedCertificate {
    std::string group_spec;
    std::size_t rank = 0;
    std::vector<IntVec> generators;
    struct WitnessLine {
        std::size_t subgroup_class = 0;
        std::size_t generator_index = 0;
        IntVec normed;
        std::vector<unsigned> exponents;
        IntVec cofactor;
    };
    std::vector<WitnessLine> witnesses;
    std::string verdict;
};

inline ParsedCertificate parse_certificate(std::istream& is) {
    ParsedCertificate cert;
    std::string line;
    if (!std::getline(is, line) || line != "burnside-certificate v1")
        throw ParseError("missing certificate header");
    auto bracketed = [](std::istringstream& ss) {
        std::string tok, acc;
        ss >> tok;
        acc = tok;
        while (acc.find(']') == std::string::npos && (ss >> tok)) acc += " " + tok;
        return acc;
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "group") {
            std::string rest;
            std::getline(ss, rest);
            cert.group_spec = rest.substr(rest.find_first_not_of(' '));
        } else if (key == "rank") {
            ss >> cert.rank;
        } else if (key == "generator") {
            std::size_t idx;
            ss >> idx;
            if (idx != cert.generators.size())
                throw ParseError("generator indices out of order");
            cert.generators.push_back(parse_coeffs(bracketed(ss)));
        } else if (key == "witness") {
            ParsedCertificate::WitnessLine w;
            std::string word;
            ss >> word >> w.subgroup_class >> word >> w.generator_index >> word;
            w.normed = parse_coeffs(bracketed(ss));
            ss >> word;
            for (const Int& e : parse_coeffs(bracketed(ss)))
                w.exponents.push_back(static_cast<unsigned>(e.get_ui()));
            ss >> word;
            w.cofactor = parse_coeffs(bracketed(ss));
            if (!ss) throw ParseError("malformed witness line");
            cert.witnesses.push_back(std::move(w));
        } else if (key == "obstruction" || key == "exhausted") {
            // carried for display; verify only checks Safe certificates
        } else if (key == "verdict") {
            ss >> cert.verdict;
        } else {
            throw ParseError("unknown certificate line: " + key);
        }
    }
    if (cert.verdict.empty()) throw ParseError("certificate has no verdict line");
    return cert;
}

// Re-validates a Safe certificate with ring arithmetic alone: for every
// witness, normed * cofactor must equal the stated product of generators.
inline bool verify_certificate(const ParsedCertificate& cert,
                               std::size_t order_bound = kDefaultOrderBound,
                               std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cert.verdict != "Safe") return fail("verdict is not Safe");
    auto ring = BurnsideRing::create(parse_group_spec(cert.group_spec, order_bound));
    if (ring->rank() != cert.rank) return fail("rank does not match the group");
    std::vector<BurnsideElement> gens;
    for (const auto& g : cert.generators) {
        if (g.size() != ring->rank()) return fail("generator has wrong length");
        gens.push_back(ring->element(g));
    }
    if (gens.empty()) return fail("certificate lists no generators");
    // Every (class, generator) pair needs a witness.
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (const auto& w : cert.witnesses) {
        if (w.subgroup_class >= ring->rank() || w.generator_index >= gens.size())
            return fail("witness indices out of range");
        if (w.exponents.size() != gens.size()) return fail("exponent vector length");
        unsigned total = 0;
        for (unsigned e : w.exponents) total += e;
        if (total == 0) return fail("witness has an empty product");
        BurnsideElement prod = ring->one();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (unsigned e = 0; e < w.exponents[i]; ++e) prod = prod * gens[i];
        BurnsideElement normed = ring->element(w.normed);
        BurnsideElement cofactor = ring->element(w.cofactor);
        if (!(normed * cofactor == prod)) return fail("witness product mismatch");
        covered.insert({w.subgroup_class, w.generator_index});
    }
    if (covered.size() != ring->rank() * gens.size())
        return fail("certificate does not cover every (class, generator) pair");
    return true;
}

} // namespace burnside
